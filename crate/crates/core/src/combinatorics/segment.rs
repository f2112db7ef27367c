use std::fmt;

use serde::Serialize;

use super::{DescMultiset, HalfInt};
use crate::error::{Error, Result};

/// A decreasing segment `[start, start - 1, ..., end]` of half-integers, or
/// the empty segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Segment {
    bounds: Option<(HalfInt, HalfInt)>,
}

impl Segment {
    /// Requires `start >= end` with an integral difference.
    pub fn new(start: HalfInt, end: HalfInt) -> Result<Self> {
        let diff = start - end;
        if diff.is_negative() || !diff.is_integer() {
            return Err(Error::InvalidValue(format!(
                "[{start}, {end}] is not a decreasing segment"
            )));
        }
        Ok(Segment {
            bounds: Some((start, end)),
        })
    }

    pub const fn empty() -> Self {
        Segment { bounds: None }
    }

    /// The segment of `len` elements starting at `start`; empty when `len == 0`.
    pub fn from_start(start: HalfInt, len: u32) -> Self {
        if len == 0 {
            Segment::empty()
        } else {
            Segment {
                bounds: Some((start, start - HalfInt::from_int(i64::from(len) - 1))),
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        self.bounds.is_none()
    }

    pub fn start(&self) -> Option<HalfInt> {
        self.bounds.map(|(s, _)| s)
    }

    pub fn end(&self) -> Option<HalfInt> {
        self.bounds.map(|(_, e)| e)
    }

    pub fn len(&self) -> u32 {
        self.bounds
            .map_or(0, |(s, e)| ((s - e).twice() / 2 + 1) as u32)
    }

    /// `start + end`, i.e. twice the middle point.
    pub fn twice_middle(&self) -> Option<HalfInt> {
        self.bounds.map(|(s, e)| s + e)
    }

    pub fn contains(&self, x: HalfInt) -> bool {
        match self.bounds {
            Some((s, e)) => x <= s && x >= e && (s - x).is_integer(),
            None => false,
        }
    }

    /// True when `other` is a sub-segment of `self`.
    pub fn contains_segment(&self, other: &Segment) -> bool {
        match (self.bounds, other.bounds) {
            (_, None) => true,
            (None, Some(_)) => false,
            (Some((s, e)), Some((s2, e2))) => {
                (s - s2).is_integer() && s2 <= s && e2 >= e
            }
        }
    }

    /// Elements from `start` down to `end`.
    pub fn iter(&self) -> impl Iterator<Item = HalfInt> + '_ {
        let (start, len) = match self.bounds {
            Some((s, _)) => (s, self.len()),
            None => (HalfInt::ZERO, 0),
        };
        (0..len).map(move |k| start - HalfInt::from_int(i64::from(k)))
    }

    /// Sum of the elements, exactly.
    pub fn sum(&self) -> HalfInt {
        self.iter().sum()
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.bounds {
            Some((s, e)) => write!(f, "[{s},{e}]"),
            None => write!(f, "[]"),
        }
    }
}

impl Serialize for Segment {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Descending enumeration of a segment; the empty segment yields `{}`.
pub fn segment_elements(s: &Segment) -> DescMultiset {
    DescMultiset::from_sorted_unchecked(s.iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(t: i64) -> HalfInt {
        HalfInt::from_twice(t)
    }

    #[test]
    fn enumerates_half_integer_segment() {
        let s = Segment::new(h(1), h(-3)).unwrap();
        assert_eq!(segment_elements(&s).values(), &[h(1), h(-1), h(-3)]);
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn singleton_and_empty() {
        let s = Segment::new(h(4), h(4)).unwrap();
        assert_eq!(segment_elements(&s).values(), &[h(4)]);
        assert!(segment_elements(&Segment::empty()).is_empty());
        assert_eq!(Segment::empty().len(), 0);
    }

    #[test]
    fn rejects_increasing_or_mixed_lattice() {
        assert!(Segment::new(h(0), h(2)).is_err());
        assert!(Segment::new(h(1), h(0)).is_err());
    }

    #[test]
    fn length_matches_endpoints() {
        for top in -20..=20i64 {
            for len in 1..=41i64 {
                let s = Segment::new(h(top), h(top - 2 * (len - 1))).unwrap();
                assert_eq!(i64::from(s.len()), len);
                assert_eq!(segment_elements(&s).len() as i64, len);
            }
        }
    }

    #[test]
    fn middle_and_containment() {
        let s = Segment::new(h(1), h(-3)).unwrap();
        assert_eq!(s.twice_middle(), Some(h(-2)));
        assert!(s.contains(h(-1)));
        assert!(!s.contains(h(0)));
        let t = Segment::new(h(-1), h(-3)).unwrap();
        assert!(s.contains_segment(&t));
        assert!(!t.contains_segment(&s));
    }
}
