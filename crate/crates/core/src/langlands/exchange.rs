//! Moving an induced datum into Langlands order by exchanging adjacent
//! factors.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use super::InducedDatum;
use crate::combinatorics::{HalfInt, Segment};
use crate::packets::TwistedSteinberg;

/// Linked in the sense of Zelevinsky: on the same lattice, the union is a
/// segment and neither contains the other.
pub fn linked(s1: &Segment, s2: &Segment) -> bool {
    let (Some(d1), Some(f1), Some(d2), Some(f2)) = (s1.start(), s1.end(), s2.start(), s2.end())
    else {
        return false;
    };
    (d1 - d2).is_integer()
        && f1.max(f2) <= d1.min(d2) + HalfInt::ONE
        && !s1.contains_segment(s2)
        && !s2.contains_segment(s1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ExchangeOutcome {
    /// Already in order.
    NoMove,
    /// The factors commute.
    Swap,
    /// Replace the pair by `St(alpha)|.|^-x'` and, unless it is empty,
    /// `St(beta)|.|^-x''`.
    Link {
        first: TwistedSteinberg,
        second: Option<TwistedSteinberg>,
    },
}

fn minus_middle(start: HalfInt, end: HalfInt) -> HalfInt {
    -(start + end).checked_half().expect("endpoints on one lattice")
}

fn length(start: HalfInt, end: HalfInt) -> u32 {
    ((start - end).twice() / 2 + 1) as u32
}

/// One elementary move on adjacent factors `f1, f2` with `f1.x < f2.x`.
pub fn exchange_step(f1: &TwistedSteinberg, f2: &TwistedSteinberg) -> ExchangeOutcome {
    if f1.x >= f2.x {
        return ExchangeOutcome::NoMove;
    }
    let (s1, s2) = (f1.segment(), f2.segment());
    if f1.rho != f2.rho || !linked(&s1, &s2) {
        return ExchangeOutcome::Swap;
    }
    let (d1, e1) = (s1.start().unwrap(), s1.end().unwrap());
    let (d2, e2) = (s2.start().unwrap(), s2.end().unwrap());
    let first = TwistedSteinberg {
        rho: f1.rho.clone(),
        a: length(d1, e2),
        x: minus_middle(d1, e2),
    };
    let second = (d2 >= e1).then(|| TwistedSteinberg {
        rho: f1.rho.clone(),
        a: length(d2, e1),
        x: minus_middle(d2, e1),
    });
    ExchangeOutcome::Link { first, second }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StepKind {
    Swap,
    Link,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExchangeStep {
    pub position: usize,
    pub kind: StepKind,
    pub before: (TwistedSteinberg, TwistedSteinberg),
    pub after: Vec<TwistedSteinberg>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExchangeTrace {
    pub steps: Vec<ExchangeStep>,
    #[serde(rename = "final")]
    pub final_datum: InducedDatum,
}

fn leftmost_violation(d: &InducedDatum) -> Option<usize> {
    d.factors.windows(2).position(|w| w[0].x < w[1].x)
}

fn apply(d: &InducedDatum, i: usize, kind: StepKind, outcome: &ExchangeOutcome) -> (ExchangeStep, InducedDatum) {
    let before = (d.factors[i].clone(), d.factors[i + 1].clone());
    let mut after = match (kind, outcome) {
        (StepKind::Link, ExchangeOutcome::Link { first, second }) => {
            std::iter::once(first.clone()).chain(second.clone()).collect()
        }
        _ => vec![before.1.clone(), before.0.clone()],
    };
    if kind == StepKind::Link {
        // the new pair commutes; keep it in Langlands order
        after.sort_by_key(|f| std::cmp::Reverse(f.x));
    }
    let mut next = d.clone();
    next.factors.splice(i..i + 2, after.iter().cloned());
    let step = ExchangeStep {
        position: i,
        kind,
        before,
        after,
    };
    (step, next)
}

/// The moves available at the leftmost violation: the forced swap, or
/// both the link and the swap when the segments are linked.
pub fn successors(d: &InducedDatum) -> Vec<(ExchangeStep, InducedDatum)> {
    let Some(i) = leftmost_violation(d) else {
        return Vec::new();
    };
    let outcome = exchange_step(&d.factors[i], &d.factors[i + 1]);
    match outcome {
        ExchangeOutcome::NoMove => Vec::new(),
        ExchangeOutcome::Swap => vec![apply(d, i, StepKind::Swap, &outcome)],
        ExchangeOutcome::Link { .. } => vec![
            apply(d, i, StepKind::Link, &outcome),
            apply(d, i, StepKind::Swap, &outcome),
        ],
    }
}

/// Repeatedly fixes the leftmost violation, linking whenever possible.
pub fn normalize_canonical(d: &InducedDatum) -> ExchangeTrace {
    let mut cur = d.clone();
    let mut steps = Vec::new();
    while let Some((step, next)) = successors(&cur).into_iter().next() {
        steps.push(step);
        cur = next;
    }
    ExchangeTrace {
        steps,
        final_datum: cur,
    }
}

/// Every terminal reachable through [`successors`], sorted.
pub fn normalize_all(d: &InducedDatum) -> Vec<InducedDatum> {
    let mut seen: HashSet<InducedDatum> = HashSet::new();
    let mut terminals = BTreeSet::new();
    let mut stack = vec![d.clone()];
    while let Some(cur) = stack.pop() {
        if !seen.insert(cur.clone()) {
            continue;
        }
        let next = successors(&cur);
        if next.is_empty() {
            terminals.insert(cur);
        } else {
            stack.extend(next.into_iter().map(|(_, n)| n));
        }
    }
    terminals.into_iter().collect()
}

/// Pairs `i < j` with the same label, `x_i < x_j` and linked segments.
pub fn inv_count(d: &InducedDatum) -> usize {
    let f = &d.factors;
    (0..f.len())
        .flat_map(|i| (i + 1..f.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| f[i].rho == f[j].rho && f[i].x < f[j].x && linked(&f[i].segment(), &f[j].segment()))
        .count()
}

/// Pairs `i < j` with `x_i < x_j`.
pub fn x_inversions(d: &InducedDatum) -> usize {
    let f = &d.factors;
    (0..f.len())
        .flat_map(|i| (i + 1..f.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| f[i].x < f[j].x)
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{dominates, partial_sums_leq};
    use crate::langlands::{exponents_from_langlands, orbit_from_langlands};
    use proptest::prelude::*;

    fn h(t: i64) -> HalfInt {
        HalfInt::from_twice(t)
    }

    fn st(rho: &str, a: u32, x2: i64) -> TwistedSteinberg {
        TwistedSteinberg {
            rho: rho.into(),
            a,
            x: h(x2),
        }
    }

    fn seg(s: i64, e: i64) -> Segment {
        Segment::new(h(s), h(e)).unwrap()
    }

    fn datum(fs: &[TwistedSteinberg]) -> InducedDatum {
        InducedDatum {
            factors: fs.to_vec(),
            tempered: vec![],
        }
    }

    #[test]
    fn linked_examples() {
        assert!(linked(&seg(0, -2), &seg(-2, -4)));
        assert!(!linked(&seg(4, 0), &seg(2, 0)));
        assert!(!linked(&seg(6, 6), &seg(2, 2)));
        // adjacent counts as linked
        assert!(linked(&seg(2, 2), &seg(0, 0)));
        assert!(!linked(&seg(1, 1), &seg(0, 0)));
        assert!(!linked(&Segment::empty(), &seg(0, 0)));
    }

    #[test]
    fn exchange_examples() {
        let out = exchange_step(&st("r", 2, 1), &st("r", 2, 3));
        assert_eq!(
            out,
            ExchangeOutcome::Link {
                first: st("r", 3, 2),
                second: Some(st("r", 1, 2)),
            }
        );
        assert_eq!(exchange_step(&st("r", 1, 0), &st("r", 1, 4)), ExchangeOutcome::Swap);
        assert_eq!(exchange_step(&st("r", 2, 1), &st("s", 2, 3)), ExchangeOutcome::Swap);
        assert_eq!(exchange_step(&st("r", 2, 3), &st("r", 2, 1)), ExchangeOutcome::NoMove);
        // adjacent segments [0,0] and [-1,-1] merge with nothing left over
        assert_eq!(
            exchange_step(&st("r", 1, 0), &st("r", 1, 2)),
            ExchangeOutcome::Link {
                first: st("r", 2, 1),
                second: None,
            }
        );
    }

    #[test]
    fn normalize_examples() {
        let trace = normalize_canonical(&datum(&[st("r", 2, 1), st("r", 2, 3)]));
        assert_eq!(trace.final_datum.factors, vec![st("r", 3, 2), st("r", 1, 2)]);
        assert_eq!(trace.steps.len(), 1);
        let sorted = datum(&[st("r", 3, 4), st("r", 1, 0)]);
        let trace = normalize_canonical(&sorted);
        assert!(trace.steps.is_empty());
        assert_eq!(trace.final_datum, sorted);
        let gap = datum(&[st("r", 1, 0), st("r", 1, 4)]);
        let trace = normalize_canonical(&gap);
        assert_eq!(trace.final_datum.factors, vec![st("r", 1, 4), st("r", 1, 0)]);
        assert_eq!(trace.steps[0].kind, StepKind::Swap);
    }

    #[test]
    fn all_mode_branches_on_linked_pairs() {
        let d = datum(&[st("r", 2, 1), st("r", 2, 3)]);
        let all = normalize_all(&d);
        assert_eq!(all.len(), 2);
        assert!(all.contains(&datum(&[st("r", 2, 3), st("r", 2, 1)])));
        assert!(all.contains(&datum(&[st("r", 3, 2), st("r", 1, 2)])));
    }

    fn arb_datum() -> impl Strategy<Value = InducedDatum> {
        prop::collection::vec((0usize..2, 1u32..=6, 0i64..=12), 0..=6).prop_map(|fs| {
            datum(
                &fs.into_iter()
                    .map(|(r, a, x2)| st(["r", "s"][r], a, x2))
                    .collect::<Vec<_>>(),
            )
        })
    }

    fn measure(d: &InducedDatum) -> (usize, usize) {
        (d.factors.len(), inv_count(d))
    }

    proptest! {
        #[test]
        fn steps_conserve_and_decrease(d in arb_datum()) {
            let mut stack = vec![d.clone()];
            let mut seen = HashSet::new();
            while let Some(cur) = stack.pop() {
                if !seen.insert(cur.clone()) {
                    continue;
                }
                for (step, next) in successors(&cur) {
                    let (f1, f2) = &step.before;
                    match step.kind {
                        StepKind::Link => {
                            let alpha = step.after.iter().map(|f| f.a).max().unwrap();
                            let total: u32 = step.after.iter().map(|f| f.a).sum();
                            prop_assert_eq!(total, f1.a + f2.a);
                            prop_assert!(alpha >= f1.a.max(f2.a));
                            let xs: HalfInt = step.after.iter().map(|f| f.x).sum();
                            let xs = if step.after.len() == 1 {
                                // the dropped empty factor carried the rest of the sum
                                xs + minus_middle(f2.segment().start().unwrap(), f1.segment().end().unwrap())
                            } else {
                                xs
                            };
                            prop_assert_eq!(xs, f1.x + f2.x);
                            prop_assert!(step.after.iter().all(|f| f.x <= f1.x.max(f2.x)));
                            prop_assert!(measure(&next) < measure(&cur));
                        }
                        StepKind::Swap => {
                            prop_assert!(measure(&next) <= measure(&cur));
                            prop_assert!(x_inversions(&next) < x_inversions(&cur));
                        }
                    }
                    stack.push(next);
                }
            }
            let canon = normalize_canonical(&d).final_datum;
            prop_assert!(canon.is_langlands_ordered());
            for t in normalize_all(&d) {
                prop_assert!(t.is_langlands_ordered());
                for rho in ["r", "s"] {
                    prop_assert!(dominates(&orbit_from_langlands(&t, rho), &orbit_from_langlands(&d, rho)));
                }
                prop_assert!(partial_sums_leq(
                    &exponents_from_langlands(&t, None),
                    &exponents_from_langlands(&d, None)
                ).unwrap());
            }
        }
    }
}
