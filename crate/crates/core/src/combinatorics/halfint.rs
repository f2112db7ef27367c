//! Exact half-integers.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A number of the form `n/2`, stored as `n`.
///
/// Ordering and equality are those of the rational value. Integer values
/// render without a denominator (`2`), proper half-integers as `n/2` (`-3/2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };
    pub const ONE: HalfInt = HalfInt { twice: 2 };

    /// The value `twice / 2`.
    pub const fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub const fn from_int(n: i64) -> Self {
        HalfInt { twice: 2 * n }
    }

    /// Twice the value; always an integer.
    pub const fn twice(self) -> i64 {
        self.twice
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// The integer value, if there is one.
    pub fn to_int(self) -> Option<i64> {
        self.is_integer().then_some(self.twice / 2)
    }

    pub fn abs(self) -> Self {
        HalfInt::from_twice(self.twice.abs())
    }

    pub fn is_negative(self) -> bool {
        self.twice < 0
    }

    pub fn is_positive(self) -> bool {
        self.twice > 0
    }

    /// Product of two half-integers, when it is again a half-integer.
    pub fn checked_mul(self, other: HalfInt) -> Option<HalfInt> {
        let num = self.twice.checked_mul(other.twice)?;
        (num % 2 == 0).then_some(HalfInt::from_twice(num / 2))
    }

    /// Half of the value, when it is again a half-integer.
    pub fn checked_half(self) -> Option<HalfInt> {
        self.is_integer().then_some(HalfInt::from_twice(self.twice / 2))
    }

    /// `(n - 1) / 2` for a positive integer `n`; the top of the centred
    /// segment of length `n`.
    pub const fn centred_top(n: u32) -> Self {
        HalfInt::from_twice(n as i64 - 1)
    }
}

impl From<i64> for HalfInt {
    fn from(n: i64) -> Self {
        HalfInt::from_int(n)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice + rhs.twice)
    }
}

impl AddAssign for HalfInt {
    fn add_assign(&mut self, rhs: HalfInt) {
        self.twice += rhs.twice;
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice - rhs.twice)
    }
}

impl SubAssign for HalfInt {
    fn sub_assign(&mut self, rhs: HalfInt) {
        self.twice -= rhs.twice;
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_twice(-self.twice)
    }
}

impl Mul<i64> for HalfInt {
    type Output = HalfInt;
    fn mul(self, rhs: i64) -> HalfInt {
        HalfInt::from_twice(self.twice * rhs)
    }
}

impl std::iter::Sum for HalfInt {
    fn sum<I: Iterator<Item = HalfInt>>(iter: I) -> HalfInt {
        iter.fold(HalfInt::ZERO, |acc, x| acc + x)
    }
}

impl<'a> std::iter::Sum<&'a HalfInt> for HalfInt {
    fn sum<I: Iterator<Item = &'a HalfInt>>(iter: I) -> HalfInt {
        iter.copied().sum()
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    /// Accepts `3`, `-1`, `+2`, `3/2`, `-1/2`, and `4/2`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidValue(format!("`{s}` is not a half-integer"));
        let t = s.trim();
        let (num, halved) = match t.strip_suffix("/2") {
            Some(n) => (n, true),
            None => (t, false),
        };
        let digits = num.strip_prefix(['+', '-']).unwrap_or(num);
        if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let n: i64 = num.parse().map_err(|_| bad())?;
        if halved {
            Ok(HalfInt::from_twice(n))
        } else {
            n.checked_mul(2).map(HalfInt::from_twice).ok_or_else(bad)
        }
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for HalfInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a comma-separated list of half-integers, optionally wrapped in
/// `{}` or `[]`. The empty list is accepted.
pub fn parse_halfint_list(s: &str) -> Result<Vec<HalfInt>, Error> {
    let t = s.trim();
    let inner = t
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .or_else(|| t.strip_prefix('[').and_then(|r| r.strip_suffix(']')))
        .unwrap_or(t);
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(str::parse).collect()
}
