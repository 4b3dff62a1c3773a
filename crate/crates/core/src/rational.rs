//! Exact rationals and the quadratic surds `√n` that appear as Kleiman bounds.
//!
//! Rationals render in lowest terms with a positive denominator, as `"p/q"`,
//! or as a bare integer when the denominator is 1.

use alloc::format;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_rational::Ratio;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(Ratio<i64>);

impl Rational {
    pub const ZERO: Rational = Rational(Ratio::new_raw(0, 1));

    /// `None` when `denom == 0`.
    pub fn new(numer: i64, denom: i64) -> Option<Self> {
        if denom == 0 || (denom == i64::MIN) || (numer == i64::MIN) {
            return None;
        }
        Some(Rational(Ratio::new(numer, denom)))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(Ratio::from_integer(n))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_positive(&self) -> bool {
        self.numer() > 0
    }

    pub fn is_integer(&self) -> bool {
        self.denom() == 1
    }

    /// Exact test of `self² < n`, i.e. `self < √n` for positive `self`.
    pub fn square_lt(&self, n: i64) -> bool {
        let p = i128::from(self.numer());
        let q = i128::from(self.denom());
        match i128::from(n).checked_mul(q * q) {
            Some(rhs) => p * p < rhs,
            // n·q² exceeds i128 while p² < 2^126
            None => n > 0,
        }
    }

    /// Compares `self` against the fraction `numer/denom` (denom > 0) by
    /// cross-multiplication.
    pub fn cmp_fraction(&self, numer: i64, denom: i64) -> Ordering {
        debug_assert!(denom > 0);
        let lhs = i128::from(self.numer()) * i128::from(denom);
        let rhs = i128::from(numer) * i128::from(self.denom());
        lhs.cmp(&rhs)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_int = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("invalid rational {s:?}")))
        };
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (parse_int(n)?, parse_int(d)?),
            None => (parse_int(s)?, 1),
        };
        Rational::new(n, d).ok_or_else(|| Error::Parse(format!("invalid rational {s:?}")))
    }
}

/// A nonnegative exact real of the form `p/q` or `√n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExactReal {
    Rational(Rational),
    /// `√n` for a positive non-square `n`.
    Sqrt(i64),
}

impl ExactReal {
    /// `√n`, collapsed to an integer when `n` is a perfect square.
    pub fn sqrt(n: i64) -> Self {
        assert!(n >= 0, "square root of a negative integer");
        let r = n.isqrt();
        if r * r == n {
            ExactReal::Rational(Rational::from_integer(r))
        } else {
            ExactReal::Sqrt(n)
        }
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            ExactReal::Rational(r) => Some(*r),
            ExactReal::Sqrt(_) => None,
        }
    }
}

impl From<Rational> for ExactReal {
    fn from(r: Rational) -> Self {
        ExactReal::Rational(r)
    }
}

fn cmp_rational_sqrt(r: &Rational, n: i64) -> Ordering {
    if r.numer() < 0 {
        return Ordering::Less;
    }
    // r ≠ √n because n is not a square
    if r.square_lt(n) {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

impl Ord for ExactReal {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExactReal::Rational(a), ExactReal::Rational(b)) => a.cmp(b),
            (ExactReal::Sqrt(a), ExactReal::Sqrt(b)) => a.cmp(b),
            (ExactReal::Rational(a), ExactReal::Sqrt(n)) => cmp_rational_sqrt(a, *n),
            (ExactReal::Sqrt(n), ExactReal::Rational(b)) => cmp_rational_sqrt(b, *n).reverse(),
        }
    }
}

impl PartialOrd for ExactReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExactReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactReal::Rational(r) => write!(f, "{r}"),
            ExactReal::Sqrt(n) => write!(f, "sqrt({n})"),
        }
    }
}

impl FromStr for ExactReal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(inner) = t.strip_prefix("sqrt(").and_then(|r| r.strip_suffix(')')) {
            let n: i64 = inner
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("invalid surd {s:?}")))?;
            if n < 0 {
                return Err(Error::Parse(format!("invalid surd {s:?}")));
            }
            return Ok(ExactReal::sqrt(n));
        }
        t.parse::<Rational>().map(ExactReal::Rational)
    }
}

#[cfg(feature = "serde")]
mod serde_impls {
    use super::*;
    use alloc::string::{String, ToString};
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    impl Serialize for Rational {
        fn serialize<S: Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
            s.serialize_str(&self.to_string())
        }
    }

    impl<'de> Deserialize<'de> for Rational {
        fn deserialize<D: Deserializer<'de>>(d: D) -> core::result::Result<Self, D::Error> {
            let s = String::deserialize(d)?;
            s.parse().map_err(D::Error::custom)
        }
    }

    impl Serialize for ExactReal {
        fn serialize<S: Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
            s.serialize_str(&self.to_string())
        }
    }

    impl<'de> Deserialize<'de> for ExactReal {
        fn deserialize<D: Deserializer<'de>>(d: D) -> core::result::Result<Self, D::Error> {
            let s = String::deserialize(d)?;
            s.parse().map_err(D::Error::custom)
        }
    }
}
