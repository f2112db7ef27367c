//! Speh modules as segment matrices, E-sets and the prefix recipe for
//! non-vanishing of Jacquet derivatives on the GL side.

use std::collections::HashSet;

use serde::Serialize;

use crate::combinatorics::{merge_descending, segment_elements, DescMultiset, HalfInt, Segment};
use crate::error::{Error, Result};
use crate::parameters::{ArthurParameter, JordanBlock};

/// `Speh(St(rho, a), b)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SpehDatum {
    pub rho: String,
    pub a: u32,
    pub b: u32,
}

impl From<&JordanBlock> for SpehDatum {
    fn from(block: &JordanBlock) -> Self {
        SpehDatum {
            rho: block.rho.clone(),
            a: block.a,
            b: block.b,
        }
    }
}

/// Row `i` (for `i = 0..b`) is `[(a-b)/2 + i, -(a+b)/2 + 1 + i]`.
pub fn speh_matrix(d: &SpehDatum) -> Vec<Segment> {
    let first = e_segment(d.a, d.b);
    (0..d.b)
        .map(|i| {
            let shift = HalfInt::from_int(i64::from(i));
            let (s, e) = (first.start().unwrap() + shift, first.end().unwrap() + shift);
            Segment::new(s, e).expect("rows keep length a")
        })
        .collect()
}

/// `[(a-b)/2, -(a+b)/2 + 1]`: `a` elements, middle `-(b-1)/2`.
pub fn e_segment(a: u32, b: u32) -> Segment {
    Segment::from_start(HalfInt::from_twice(i64::from(a) - i64::from(b)), a)
}

pub fn block_e_segment(block: &JordanBlock) -> Segment {
    e_segment(block.a, block.b)
}

/// Union of the E-segments of `blocks`, non-increasing.
pub fn e_set<'a>(blocks: impl IntoIterator<Item = &'a JordanBlock>) -> DescMultiset {
    let parts: Vec<DescMultiset> = blocks
        .into_iter()
        .map(|b| segment_elements(&block_e_segment(b)))
        .collect();
    merge_descending(&parts)
}

/// True iff `y` is an initial run of the E-segment of `d`.
pub fn jac_speh_nonzero(d: &SpehDatum, y: &DescMultiset) -> bool {
    let seg = e_segment(d.a, d.b);
    y.len() <= seg.len() as usize && y.iter().zip(seg.iter()).all(|(u, v)| u == v)
}

/// Prefix lengths, aligned with the block list the solver was given.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PrefixAssignment {
    pub prefix: Vec<u32>,
}

impl PrefixAssignment {
    pub fn total(&self) -> u64 {
        self.prefix.iter().map(|&m| u64::from(m)).sum()
    }

    /// The consumed prefix of each block.
    pub fn pieces(&self, blocks: &[&JordanBlock]) -> Vec<DescMultiset> {
        blocks
            .iter()
            .zip(&self.prefix)
            .map(|(b, &m)| segment_elements(&block_e_segment(b)).iter().take(m as usize).collect())
            .collect()
    }
}

/// Depth-first search over the blocks sorted by segment start, largest
/// first, on a dense count array of doubled values.
struct Solver {
    /// `(original index, start, length)` sorted by start descending.
    order: Vec<(usize, i64, u32)>,
    /// Total length of `order[k..]`.
    capacity: Vec<u64>,
    /// Doubled value stored at index 0 of `counts`.
    low: i64,
    counts: Vec<u32>,
    left: u64,
    /// States `(k, counts)` known to have no completion.
    dead: HashSet<(usize, Vec<u32>)>,
}

impl Solver {
    /// `None` when some element of `e` lies outside every segment's range.
    fn new(e: &DescMultiset, blocks: &[&JordanBlock]) -> Option<Self> {
        let mut order: Vec<(usize, i64, u32)> = blocks
            .iter()
            .enumerate()
            .map(|(i, b)| (i, i64::from(b.a) - i64::from(b.b), b.a))
            .collect();
        order.sort_by(|x, y| y.1.cmp(&x.1).then(x.0.cmp(&y.0)));
        let mut capacity = vec![0u64; order.len() + 1];
        for k in (0..order.len()).rev() {
            capacity[k] = capacity[k + 1] + u64::from(order[k].2);
        }
        let high = order.iter().map(|o| o.1).max().unwrap_or(0);
        let low = order
            .iter()
            .map(|o| o.1 - 2 * (i64::from(o.2) - 1))
            .min()
            .unwrap_or(0);
        let mut counts = vec![0u32; (high - low + 1).max(0) as usize];
        for x in e.iter().map(HalfInt::twice) {
            if x < low || x > high || blocks.is_empty() {
                return None;
            }
            counts[(x - low) as usize] += 1;
        }
        Some(Solver {
            order,
            capacity,
            low,
            counts,
            left: e.len() as u64,
            dead: HashSet::new(),
        })
    }

    fn top(&self) -> Option<i64> {
        self.counts
            .iter()
            .rposition(|&c| c > 0)
            .map(|i| i as i64 + self.low)
    }

    /// `Some(done)` when the state at step `k` is decided without search.
    fn settled(&self, k: usize) -> Option<bool> {
        if self.left == 0 {
            return Some(true);
        }
        if k == self.order.len() || self.left > self.capacity[k] {
            return Some(false);
        }
        // later blocks start no higher, so the top element must fit here
        match self.top() {
            Some(top) if top > self.order[k].1 => Some(false),
            _ => None,
        }
    }

    fn slot(&self, v: i64) -> Option<usize> {
        let i = v - self.low;
        (i >= 0 && (i as usize) < self.counts.len()).then_some(i as usize)
    }

    /// Calls `visit` with every completion from step `k`; `chosen` holds the
    /// lengths picked so far. Stops early when `visit` returns true.
    fn search(&mut self, k: usize, chosen: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32]) -> bool) -> bool {
        match self.settled(k) {
            Some(true) => {
                let before = chosen.len();
                chosen.resize(self.order.len(), 0);
                let stop = visit(chosen);
                chosen.truncate(before);
                return stop;
            }
            Some(false) => return false,
            None => {}
        }
        let (_, start, len) = self.order[k];
        let mut taken = 0u32;
        let mut stop;
        loop {
            chosen.push(taken);
            stop = self.search(k + 1, chosen, visit);
            chosen.pop();
            if stop || taken == len {
                break;
            }
            match self.slot(start - 2 * i64::from(taken)) {
                Some(i) if self.counts[i] > 0 => {
                    self.counts[i] -= 1;
                    self.left -= 1;
                    taken += 1;
                }
                _ => break,
            }
        }
        for m in 0..taken {
            let i = self.slot(start - 2 * i64::from(m)).expect("taken earlier");
            self.counts[i] += 1;
            self.left += 1;
        }
        stop
    }

    /// Whether some completion exists from step `k`, remembering dead states.
    fn exists(&mut self, k: usize) -> bool {
        if let Some(done) = self.settled(k) {
            return done;
        }
        if self.dead.contains(&(k, self.counts.clone())) {
            return false;
        }
        let (_, start, len) = self.order[k];
        let mut taken = 0u32;
        let mut found = false;
        // longest prefix first: it clears the top soonest
        while taken < len {
            match self.slot(start - 2 * i64::from(taken)) {
                Some(i) if self.counts[i] > 0 => {
                    self.counts[i] -= 1;
                    self.left -= 1;
                    taken += 1;
                }
                _ => break,
            }
        }
        let mut m = taken;
        loop {
            if self.exists(k + 1) {
                found = true;
                break;
            }
            if m == 0 {
                break;
            }
            m -= 1;
            let i = self.slot(start - 2 * i64::from(m)).expect("taken earlier");
            self.counts[i] += 1;
            self.left += 1;
        }
        for j in 0..m {
            let i = self.slot(start - 2 * i64::from(j)).expect("taken earlier");
            self.counts[i] += 1;
            self.left += 1;
        }
        if !found {
            self.dead.insert((k, self.counts.clone()));
        }
        found
    }

    fn realign(&self, sorted: &[u32], n: usize) -> PrefixAssignment {
        let mut prefix = vec![0; n];
        for (&(orig, _, _), &m) in self.order.iter().zip(sorted) {
            prefix[orig] = m;
        }
        PrefixAssignment { prefix }
    }
}

/// Every way to write `e` as a union of initial runs of the blocks'
/// E-segments, sorted. Labels are not consulted.
pub fn prefix_decompositions(e: &DescMultiset, blocks: &[&JordanBlock]) -> Vec<PrefixAssignment> {
    if e.is_empty() {
        return vec![PrefixAssignment {
            prefix: vec![0; blocks.len()],
        }];
    }
    let Some(mut solver) = Solver::new(e, blocks) else {
        return Vec::new();
    };
    let mut found = Vec::new();
    solver.search(0, &mut Vec::new(), &mut |s: &[u32]| {
        found.push(s.to_vec());
        false
    });
    let mut out: Vec<PrefixAssignment> = found.iter().map(|s| solver.realign(s, blocks.len())).collect();
    out.sort();
    out
}

/// Whether at least one prefix decomposition exists.
pub fn has_prefix_decomposition(e: &DescMultiset, blocks: &[&JordanBlock]) -> bool {
    e.is_empty() || Solver::new(e, blocks).is_some_and(|mut s| s.exists(0))
}

/// One decomposition, if any; the first in sorted order.
pub fn first_prefix_decomposition(e: &DescMultiset, blocks: &[&JordanBlock]) -> Option<PrefixAssignment> {
    prefix_decompositions(e, blocks).into_iter().next()
}

/// Non-vanishing of the Jacquet derivative along `e` (all of label `rho`)
/// of the product of `St(rho', a)|.|^{-(b-1)/2}` over the blocks of `psi`.
pub fn jac_theta_nonvanishing(psi: &ArthurParameter, rho: &str, e: &DescMultiset) -> bool {
    let blocks: Vec<&JordanBlock> = psi.blocks_of(rho).collect();
    has_prefix_decomposition(e, &blocks)
}

/// The `rho`-blocks with `b > 1`, by `b` descending then instance id.
pub fn chain_blocks<'a>(psi: &'a ArthurParameter, rho: &'a str) -> Vec<&'a JordanBlock> {
    let mut out: Vec<&JordanBlock> = psi.blocks_of(rho).filter(|b| b.b > 1).collect();
    out.sort_by(|x, y| y.b.cmp(&x.b).then(x.id.cmp(&y.id)));
    out
}

/// E-set of the first `j` chain blocks of `psi`.
pub fn e_leq_j(psi: &ArthurParameter, rho: &str, j: usize) -> Result<DescMultiset> {
    let chain = chain_blocks(psi, rho);
    if j == 0 || j > chain.len() {
        return Err(Error::OutOfRange {
            index: j,
            len: chain.len(),
        });
    }
    Ok(e_set(chain[..j].iter().copied()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parameters::SelfDualType;

    fn h(t: i64) -> HalfInt {
        HalfInt::from_twice(t)
    }

    fn ms(tw: &[i64]) -> DescMultiset {
        DescMultiset::new(tw.iter().map(|&t| h(t)))
    }

    fn psi(blocks: &[(u32, u32)]) -> ArthurParameter {
        ArthurParameter::single("r", SelfDualType::Orthogonal, blocks).unwrap()
    }

    fn seg(s: i64, e: i64) -> Segment {
        Segment::new(h(s), h(e)).unwrap()
    }

    fn datum(a: u32, b: u32) -> SpehDatum {
        SpehDatum { rho: "r".into(), a, b }
    }

    #[test]
    fn matrix_examples() {
        assert_eq!(speh_matrix(&datum(3, 2)), vec![seg(1, -3), seg(3, -1)]);
        assert_eq!(speh_matrix(&datum(1, 1)), vec![seg(0, 0)]);
        assert_eq!(speh_matrix(&datum(2, 3)), vec![seg(-1, -3), seg(1, -1), seg(3, 1)]);
    }

    #[test]
    fn e_segment_examples() {
        let s = e_segment(3, 2);
        assert_eq!(s, seg(1, -3));
        assert_eq!(s.len(), 3);
        assert_eq!(s.twice_middle(), Some(h(-2)));
        assert_eq!(e_segment(1, 4), seg(-3, -3));
        assert_eq!(e_segment(1, 1), seg(0, 0));
        for a in 1..=12 {
            for b in 1..=12 {
                let s = e_segment(a, b);
                assert_eq!(s.len(), a);
                // twice the middle is -(b-1)
                assert_eq!(s.twice_middle(), Some(h(-2 * (i64::from(b) - 1))));
            }
        }
    }

    #[test]
    fn e_set_examples() {
        let p = psi(&[(3, 2), (1, 4)]);
        assert_eq!(e_set(&p.blocks()[..1]), ms(&[1, -1, -3]));
        assert_eq!(e_set(p.blocks()), ms(&[1, -1, -3, -3]));
        assert!(e_set(&[]).is_empty());
    }

    #[test]
    fn speh_prefix_examples() {
        assert!(jac_speh_nonzero(&datum(3, 2), &ms(&[1])));
        assert!(!jac_speh_nonzero(&datum(3, 2), &ms(&[-1])));
        assert!(jac_speh_nonzero(&datum(4, 4), &ms(&[])));
        assert!(!jac_speh_nonzero(&datum(1, 1), &ms(&[0, -2])));
    }

    #[test]
    fn decomposition_examples() {
        let p = psi(&[(3, 2), (1, 2)]);
        let blocks: Vec<&JordanBlock> = p.blocks().iter().collect();
        let found = prefix_decompositions(&ms(&[1, -1]), &blocks);
        let lens: Vec<Vec<u32>> = found.into_iter().map(|a| a.prefix).collect();
        assert_eq!(lens, vec![vec![1, 1], vec![2, 0]]);
        let none = prefix_decompositions(&ms(&[]), &blocks);
        assert_eq!(none, vec![PrefixAssignment { prefix: vec![0, 0] }]);
        let single = psi(&[(3, 2)]);
        let b: Vec<&JordanBlock> = single.blocks().iter().collect();
        assert!(prefix_decompositions(&ms(&[-1]), &b).is_empty());
        assert!(!has_prefix_decomposition(&ms(&[-1]), &b));
    }

    #[test]
    fn theta_examples() {
        let p = psi(&[(3, 2)]);
        assert!(jac_theta_nonvanishing(&p, "r", &ms(&[1, -1, -3])));
        assert!(!jac_theta_nonvanishing(&p, "r", &ms(&[3])));
        assert!(jac_theta_nonvanishing(&p, "r", &ms(&[])));
        assert!(!jac_theta_nonvanishing(&p, "s", &ms(&[1])));
    }

    #[test]
    fn e_leq_j_examples() {
        let p = psi(&[(3, 2)]);
        assert_eq!(e_leq_j(&p, "r", 1).unwrap(), ms(&[1, -1, -3]));
        let q = psi(&[(1, 4), (3, 2)]);
        assert_eq!(e_leq_j(&q, "r", 1).unwrap(), ms(&[-3]));
        assert_eq!(e_leq_j(&q, "r", 2).unwrap(), ms(&[1, -1, -3, -3]));
        assert!(e_leq_j(&q, "r", 3).is_err());
        assert!(e_leq_j(&q, "r", 0).is_err());
    }

    /// Every sub-multiset of a segment, as an oracle input set.
    fn sub_multisets(seg: &[HalfInt]) -> Vec<DescMultiset> {
        (0u32..1 << seg.len())
            .map(|mask| {
                seg.iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect()
    }

    #[test]
    fn speh_recipe_matches_solver_exhaustively() {
        for a in 1..=6 {
            for b in 1..=6 {
                let p = psi(&[(a, b)]);
                let blocks: Vec<&JordanBlock> = p.blocks().iter().collect();
                let d = datum(a, b);
                let elems: Vec<HalfInt> = e_segment(a, b).iter().collect();
                for y in sub_multisets(&elems) {
                    assert_eq!(
                        jac_speh_nonzero(&d, &y),
                        !prefix_decompositions(&y, &blocks).is_empty(),
                        "a={a} b={b} y={y}"
                    );
                }
            }
        }
    }
}
