use std::fmt;

use serde::Serialize;

use super::HalfInt;
use crate::error::{Error, Result};

/// A multiset of half-integers, iterated in non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DescMultiset {
    values: Vec<HalfInt>,
}

impl DescMultiset {
    pub fn new(values: impl IntoIterator<Item = HalfInt>) -> Self {
        let mut values: Vec<HalfInt> = values.into_iter().collect();
        values.sort_unstable_by(|a, b| b.cmp(a));
        DescMultiset { values }
    }

    pub(crate) fn from_sorted_unchecked(values: Vec<HalfInt>) -> Self {
        debug_assert!(values.windows(2).all(|w| w[0] >= w[1]));
        DescMultiset { values }
    }

    pub fn values(&self) -> &[HalfInt] {
        &self.values
    }

    pub fn into_values(self) -> Vec<HalfInt> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = HalfInt> + '_ {
        self.values.iter().copied()
    }

    pub fn sum(&self) -> HalfInt {
        self.values.iter().sum()
    }

    /// Sum of the `t` largest values, zero-padded.
    pub fn top_sum(&self, t: usize) -> HalfInt {
        self.values.iter().take(t).sum()
    }

    pub fn union(&self, other: &DescMultiset) -> DescMultiset {
        merge_descending([self, other])
    }
}

impl FromIterator<HalfInt> for DescMultiset {
    fn from_iter<I: IntoIterator<Item = HalfInt>>(iter: I) -> Self {
        DescMultiset::new(iter)
    }
}

impl fmt::Display for DescMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for DescMultiset {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.values.serialize(serializer)
    }
}

/// Multiset union, iterated non-increasing.
pub fn merge_descending<'a>(sets: impl IntoIterator<Item = &'a DescMultiset>) -> DescMultiset {
    DescMultiset::new(sets.into_iter().flat_map(|s| s.values.iter().copied()))
}

/// Majorization of non-negative multisets: every padded partial sum of `a`
/// is at most the matching partial sum of `b`. Sizes may differ.
pub fn partial_sums_leq(a: &DescMultiset, b: &DescMultiset) -> Result<bool> {
    if let Some(v) = a.iter().chain(b.iter()).find(|v| v.is_negative()) {
        return Err(Error::Negative(v.to_string()));
    }
    let n = a.len().max(b.len());
    let (mut sa, mut sb) = (HalfInt::ZERO, HalfInt::ZERO);
    for t in 0..n {
        sa += a.values.get(t).copied().unwrap_or_default();
        sb += b.values.get(t).copied().unwrap_or_default();
        if sa > sb {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(tw: &[i64]) -> DescMultiset {
        DescMultiset::new(tw.iter().map(|&t| HalfInt::from_twice(t)))
    }

    #[test]
    fn merge_examples() {
        assert_eq!(merge_descending([&ms(&[1, -3]), &ms(&[-1])]), ms(&[1, -1, -3]));
        assert!(merge_descending([&ms(&[]), &ms(&[])]).is_empty());
        assert_eq!(merge_descending([&ms(&[2, 2]), &ms(&[2])]).len(), 3);
    }

    #[test]
    fn partial_sums_examples() {
        assert!(partial_sums_leq(&ms(&[]), &ms(&[1])).unwrap());
        assert!(partial_sums_leq(&ms(&[1]), &ms(&[1])).unwrap());
        assert!(!partial_sums_leq(&ms(&[3, 1]), &ms(&[2, 2])).unwrap());
        assert!(partial_sums_leq(&ms(&[-1]), &ms(&[])).is_err());
    }

    /// Every multiset of size <= `max_len` drawn from `{0, 1/2, ..., top/2}`.
    fn grid(max_len: usize, top: i64) -> Vec<DescMultiset> {
        fn go(len: usize, max: i64, acc: &mut Vec<i64>, out: &mut Vec<DescMultiset>) {
            out.push(ms(acc));
            if len == 0 {
                return;
            }
            for v in 0..=max {
                acc.push(v);
                go(len - 1, v, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(max_len, top, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn reflexive_and_transitive_on_small_grid() {
        let all = grid(4, 3);
        for x in &all {
            assert!(partial_sums_leq(x, x).unwrap());
        }
        for x in &all {
            for y in all.iter().filter(|y| partial_sums_leq(x, y).unwrap()) {
                for z in all.iter().filter(|z| partial_sums_leq(y, z).unwrap()) {
                    assert!(partial_sums_leq(x, z).unwrap());
                }
            }
        }
    }

    #[test]
    fn reflexive_up_to_size_8() {
        for x in grid(8, 2) {
            assert!(partial_sums_leq(&x, &x).unwrap());
        }
    }

    #[test]
    fn display() {
        assert_eq!(ms(&[3, 1]).to_string(), "{3/2,1/2}");
        assert_eq!(ms(&[]).to_string(), "{}");
    }
}
