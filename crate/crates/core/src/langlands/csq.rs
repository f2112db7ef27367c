//! Three dominance lemmas comparing an orbit built from a decreasing list
//! `a_1 > ... > a_v` with the orbit `{a, a} ∪ {a_j}`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::combinatorics::{dominates, Partition};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CsqKind {
    /// Entries in `(a-b+1, a+b-1)`, lowest part `a-b+1`.
    Positive,
    /// Entries in `(a-b+1, a+b-1)`, lowest parts `(a-b+1+a_v)/2` twice.
    PositiveShifted,
    /// `b > a`, entries in `[b-a-1, a+b-1)`.
    Negative,
}

impl CsqKind {
    pub fn all() -> [CsqKind; 3] {
        [CsqKind::Positive, CsqKind::PositiveShifted, CsqKind::Negative]
    }

    pub fn number(self) -> u8 {
        match self {
            CsqKind::Positive => 1,
            CsqKind::PositiveShifted => 2,
            CsqKind::Negative => 3,
        }
    }
}

impl fmt::Display for CsqKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

impl FromStr for CsqKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1" => Ok(CsqKind::Positive),
            "2" => Ok(CsqKind::PositiveShifted),
            "3" => Ok(CsqKind::Negative),
            _ => Err(Error::InvalidValue(format!("lemma kind `{s}` (expected 1, 2 or 3)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CsqOutcome {
    pub constructed: Partition,
    pub target: Partition,
    pub holds: bool,
}

fn bad(msg: String) -> Error {
    Error::InvalidValue(msg)
}

/// The allowed entry range `[low, high]` for a kind, or `None` when no
/// list (not even the empty one) is admissible.
fn entry_range(kind: CsqKind, a: u32, b: u32) -> Option<(u32, u32)> {
    let (a, b) = (i64::from(a), i64::from(b));
    let (low, high) = match kind {
        CsqKind::Positive | CsqKind::PositiveShifted if a >= b => (a - b + 2, a + b - 2),
        CsqKind::Negative if b > a => ((b - a - 1).max(1), a + b - 2),
        _ => return None,
    };
    Some((low.max(1) as u32, high.max(0) as u32))
}

fn validate(kind: CsqKind, a: u32, b: u32, list: &[u32]) -> Result<()> {
    if a == 0 || b == 0 {
        return Err(bad("a and b must be positive".into()));
    }
    let (low, high) = entry_range(kind, a, b).ok_or_else(|| {
        bad(match kind {
            CsqKind::Negative => format!("kind 3 needs b > a, got a={a} b={b}"),
            _ => format!("kind {kind} needs a >= b, got a={a} b={b}"),
        })
    })?;
    if kind != CsqKind::Positive && list.is_empty() {
        return Err(bad(format!("kind {kind} needs a non-empty list")));
    }
    if list.windows(2).any(|w| w[0] <= w[1]) {
        return Err(bad("the list must be strictly decreasing".into()));
    }
    for &x in list {
        if x < low || x > high {
            return Err(bad(format!("entry {x} outside [{low}, {high}]")));
        }
        if !(x + a + b - 1).is_multiple_of(2) {
            return Err(bad(format!("entry {x} does not have the parity of a+b-1")));
        }
    }
    Ok(())
}

/// Builds both orbits of the lemma of the given kind and compares them.
pub fn csq_orbit_lemma(kind: CsqKind, a: u32, b: u32, list: &[u32]) -> Result<CsqOutcome> {
    validate(kind, a, b, list)?;
    let v = list.len();
    let top = a + b - 1;
    // entry j (1-based) of the list
    let at = |j: usize| list[j - 1];
    let mut parts: Vec<u32> = Vec::new();
    let twice = |p: u32, parts: &mut Vec<u32>| parts.extend([p, p]);
    // doubled midpoints (a_j + a_{j+1}) / 2 for j in [1, v-1] of a given parity
    let midpoints = |parity: usize, parts: &mut Vec<u32>| {
        for j in (1..v).filter(|j| j % 2 == parity % 2) {
            let m = (at(j) + at(j + 1)) / 2;
            parts.extend([m, m]);
        }
    };
    match kind {
        CsqKind::Positive => {
            parts.push(a + 1 - b);
            midpoints(v + 1, &mut parts);
            if v.is_multiple_of(2) {
                parts.push(top);
            } else {
                twice((top + at(1)) / 2, &mut parts);
            }
        }
        CsqKind::PositiveShifted | CsqKind::Negative => {
            // (a-b+1+a_v)/2, which for kind 3 reads (a_v - (b-a-1))/2
            twice((a + 1 + at(v) - b) / 2, &mut parts);
            midpoints(v, &mut parts);
            if v.is_multiple_of(2) {
                twice((top + at(1)) / 2, &mut parts);
            } else {
                parts.push(top);
            }
        }
    }
    let constructed = Partition::new(parts);
    let target = Partition::new(list.iter().copied().chain([a, a]));
    let holds = dominates(&constructed, &target);
    Ok(CsqOutcome {
        constructed,
        target,
        holds,
    })
}

/// Every admissible list for `(kind, a, b)`, in a fixed order.
pub fn admissible_lists(kind: CsqKind, a: u32, b: u32) -> Vec<Vec<u32>> {
    let Some((low, high)) = entry_range(kind, a, b) else {
        return Vec::new();
    };
    let values: Vec<u32> = (low..=high)
        .rev()
        .filter(|x| (x + a + b - 1).is_multiple_of(2))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << values.len()) {
        let list: Vec<u32> = values
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &x)| x)
            .collect();
        if kind == CsqKind::Positive || !list.is_empty() {
            out.push(list);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_cases() {
        let out = csq_orbit_lemma(CsqKind::Positive, 4, 3, &[4]).unwrap();
        assert_eq!(out.constructed.to_string(), "[5,5,2]");
        assert_eq!(out.target.to_string(), "[4,4,4]");
        assert!(out.holds);
        let out = csq_orbit_lemma(CsqKind::Positive, 5, 2, &[]).unwrap();
        assert_eq!(out.constructed.to_string(), "[6,4]");
        assert_eq!(out.target.to_string(), "[5,5]");
        assert!(out.holds);
        let out = csq_orbit_lemma(CsqKind::Negative, 1, 4, &[2]).unwrap();
        assert_eq!(out.constructed.to_string(), "[4]");
        assert_eq!(out.target.to_string(), "[2,1,1]");
        assert!(out.holds);
    }

    #[test]
    fn sizes_agree_and_lemmas_hold_up_to_20() {
        for kind in CsqKind::all() {
            for a in 1..20u32 {
                for b in 1..=20 - a {
                    for list in admissible_lists(kind, a, b) {
                        let out = csq_orbit_lemma(kind, a, b, &list).unwrap();
                        assert_eq!(out.constructed.size(), out.target.size(), "{kind} {a} {b} {list:?}");
                        assert!(out.holds, "{kind} {a} {b} {list:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_inadmissible_lists() {
        assert!(csq_orbit_lemma(CsqKind::Positive, 3, 4, &[]).is_err());
        assert!(csq_orbit_lemma(CsqKind::Positive, 4, 3, &[5]).is_err());
        assert!(csq_orbit_lemma(CsqKind::Positive, 4, 3, &[3]).is_err());
        assert!(csq_orbit_lemma(CsqKind::Positive, 6, 5, &[6, 8]).is_err());
        assert!(csq_orbit_lemma(CsqKind::PositiveShifted, 4, 3, &[]).is_err());
        assert!(csq_orbit_lemma(CsqKind::Negative, 3, 3, &[3]).is_err());
        assert!(csq_orbit_lemma(CsqKind::Negative, 1, 4, &[4]).is_err());
        assert!("4".parse::<CsqKind>().is_err());
    }
}
