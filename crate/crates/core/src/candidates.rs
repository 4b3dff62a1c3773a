//! Enumeration of numerically possible irreducible Seshadri curves.
//!
//! An irreducible curve `C` with a point of multiplicity `m` on a K3 surface
//! satisfies `C² ≥ m(m−1) − 2` by adjunction, and `L²·C² ≤ (L.C)²` by the Hodge
//! index theorem. Together with a strict cap `L.C / m < eps_sup` these leave
//! finitely many triples `(m, L.C, C²)`.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// `(m, d, c) = (mult_x C, L.C, C²)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CandidateTriple {
    pub m: i64,
    pub d: i64,
    pub c: i64,
}

impl CandidateTriple {
    pub const fn new(m: i64, d: i64, c: i64) -> Self {
        CandidateTriple { m, d, c }
    }

    /// The local Seshadri ratio `d / m`.
    pub fn ratio(&self) -> Rational {
        Rational::new(self.d, self.m).expect("multiplicity is positive")
    }
}

impl fmt::Display for CandidateTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.m, self.d, self.c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationParams {
    pub l2: i64,
    /// Strict upper bound on `d / m`.
    pub eps_sup: Rational,
    pub include_m1: bool,
}

impl EnumerationParams {
    pub fn new(l2: i64, eps_sup: Rational, include_m1: bool) -> Self {
        EnumerationParams {
            l2,
            eps_sup,
            include_m1,
        }
    }

    fn check(&self) -> Result<()> {
        if self.l2 < 2 || self.l2 % 2 != 0 || self.l2 > crate::lattice::MAX_ENTRY {
            return Err(Error::InvalidArgument(alloc::format!(
                "L² must be an even integer in [2, 2^40], got {}",
                self.l2
            )));
        }
        if !self.eps_sup.is_positive() {
            return Err(Error::InvalidArgument(alloc::format!(
                "eps_sup must be positive, got {}",
                self.eps_sup
            )));
        }
        if !self.eps_sup.square_lt(self.l2) {
            return Err(Error::UnboundedCap {
                l2: self.l2,
                eps_sup: self.eps_sup.to_string(),
            });
        }
        Ok(())
    }
}

/// `m(m−1) − 2`, the least self-intersection of an irreducible curve with an
/// `m`-fold point.
pub fn adjunction_floor(m: i64) -> i64 {
    m * (m - 1) - 2
}

/// Largest `m` with `l2·(m(m−1) − 2) < eps_sup²·m²`.
pub fn multiplicity_cap(p: &EnumerationParams) -> Result<i64> {
    p.check()?;
    let l2 = i128::from(p.l2);
    let num = i128::from(p.eps_sup.numer());
    let den = i128::from(p.eps_sup.denom());
    let holds = |m: i128| -> Result<bool> {
        let lhs = l2
            .checked_mul(m * (m - 1) - 2)
            .and_then(|x| x.checked_mul(den * den))
            .ok_or(Error::Overflow("multiplicity cap"))?;
        let rhs = (num * m)
            .checked_mul(num * m)
            .ok_or(Error::Overflow("multiplicity cap"))?;
        Ok(lhs < rhs)
    };
    // the admissible set is an interval starting at m = 1
    let mut m: i128 = 1;
    while holds(m + 1)? {
        m += 1;
    }
    i64::try_from(m).map_err(|_| Error::Overflow("multiplicity cap"))
}

/// Every triple with `d/m < eps_sup`, `c` even, `c ≥ max(−2, m(m−1)−2)` and
/// `l2·c ≤ d²`, sorted by `(m, d, c)`.
pub fn enumerate(p: &EnumerationParams) -> Result<Vec<CandidateTriple>> {
    let cap = multiplicity_cap(p)?;
    let l2 = i128::from(p.l2);
    let first = if p.include_m1 { 1 } else { 2 };
    let mut out = Vec::new();
    for m in first..=cap {
        let floor = adjunction_floor(m).max(-2);
        let mut d = 1i64;
        while p.eps_sup.cmp_fraction(d, m).is_gt() {
            let d2 = i128::from(d) * i128::from(d);
            // c ≤ floor(d² / l2), rounded down to the parity of `floor`
            let mut c_max = i64::try_from(d2.div_euclid(l2))
                .map_err(|_| Error::Overflow("candidate enumeration"))?;
            if c_max % 2 != 0 {
                c_max -= 1;
            }
            let mut c = floor;
            while c <= c_max {
                out.push(CandidateTriple::new(m, d, c));
                c += 2;
            }
            d += 1;
        }
    }
    Ok(out)
}
