use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;

/// A partition: weakly decreasing positive parts. Zero parts are never stored.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(parts: impl IntoIterator<Item = u32>) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Part `part` repeated `mult` times, for each pair.
    pub fn from_multiplicities(pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        Partition::new(
            pairs
                .into_iter()
                .flat_map(|(part, mult)| std::iter::repeat_n(part, mult as usize)),
        )
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Sum of the `t` largest parts, zero-padded.
    pub fn top_sum(&self, t: usize) -> u64 {
        self.parts.iter().take(t).map(|&p| u64::from(p)).sum()
    }

    /// Union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        Partition::new(self.parts.iter().chain(&other.parts).copied())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidValue(format!("`{s}` is not a partition"));
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?;
        if inner.trim().is_empty() {
            return Ok(Partition::default());
        }
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Partition::new(parts))
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Closure order on unipotent orbits of one `GL(n)`: equal sizes and every
/// partial sum of `p` at least the matching partial sum of `q`.
pub fn dominates(p: &Partition, q: &Partition) -> bool {
    if p.size() != q.size() {
        return false;
    }
    let n = p.len().max(q.len());
    let (mut sp, mut sq) = (0u64, 0u64);
    for t in 0..n {
        sp += u64::from(p.parts.get(t).copied().unwrap_or(0));
        sq += u64::from(q.parts.get(t).copied().unwrap_or(0));
        if sp < sq {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.iter().copied())
    }

    /// All partitions of `n`, by recursion on the largest part.
    fn partitions_of(n: u32) -> Vec<Partition> {
        fn go(rest: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition::new(acc.iter().copied()));
                return;
            }
            for part in (1..=max.min(rest)).rev() {
                acc.push(part);
                go(rest - part, part, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    fn brute_dominates(p: &Partition, q: &Partition) -> bool {
        if p.size() != q.size() {
            return false;
        }
        (1..=p.len().max(q.len())).all(|t| p.top_sum(t) >= q.top_sum(t))
    }

    #[test]
    fn worked_examples() {
        assert!(dominates(&p(&[5, 5, 2]), &p(&[4, 4, 4])));
        assert!(dominates(&p(&[3, 1]), &p(&[3, 1])));
        assert!(!dominates(&p(&[2, 2, 2]), &p(&[3, 2, 1])));
    }

    #[test]
    fn sizes_must_agree() {
        assert!(!dominates(&p(&[3]), &p(&[2])));
        assert!(dominates(&p(&[]), &p(&[])));
    }

    #[test]
    fn partial_order_exhaustive_up_to_12() {
        for n in 0..=12 {
            let all = partitions_of(n);
            for x in &all {
                assert!(dominates(x, x));
                for y in &all {
                    let xy = dominates(x, y);
                    assert_eq!(xy, brute_dominates(x, y));
                    if xy && dominates(y, x) {
                        assert_eq!(x, y);
                    }
                }
            }
        }
    }

    #[test]
    fn transitive_up_to_9() {
        for n in 0..=9 {
            let all = partitions_of(n);
            for x in &all {
                for y in all.iter().filter(|y| dominates(x, y)) {
                    for z in all.iter().filter(|z| dominates(y, z)) {
                        assert!(dominates(x, z), "{x} {y} {z}");
                    }
                }
            }
        }
    }

    #[test]
    fn text_form() {
        let q: Partition = "[5,5,2]".parse().unwrap();
        assert_eq!(q, p(&[2, 5, 5]));
        assert_eq!(q.to_string(), "[5,5,2]");
        assert_eq!("[]".parse::<Partition>().unwrap().to_string(), "[]");
        assert!("5,5".parse::<Partition>().is_err());
    }

    #[test]
    fn multiplicities() {
        assert_eq!(Partition::from_multiplicities([(3, 2), (1, 1)]), p(&[3, 3, 1]));
    }
}
