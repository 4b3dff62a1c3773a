//! Rank-2 intersection theory on the sublattice spanned by `L` and a second
//! class `C`.
//!
//! All products are formed in `i128` and narrowed back to `i64` with a check;
//! entries are limited to `|x| ≤ 2^40`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// Largest accepted magnitude for a Gram matrix entry.
pub const MAX_ENTRY: i64 = 1 << 40;

/// Default half-width of the coefficient box searched by [`scan`].
pub const DEFAULT_SCAN_RADIUS: i64 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    NonPositiveDegree(i64),
    OddDegree(i64),
    OddSelfIntersection(i64),
    /// `l2·c − d² > 0`: a positive definite rank-2 form cannot sit in the
    /// Picard lattice of a surface.
    PositiveDefinite {
        det: i128,
    },
    EntryOutOfRange(i64),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NonPositiveDegree(l2) => write!(f, "L² = {l2} must be positive"),
            Violation::OddDegree(l2) => write!(f, "L² = {l2} must be even"),
            Violation::OddSelfIntersection(c) => write!(f, "C² = {c} must be even"),
            Violation::PositiveDefinite { det } => {
                write!(f, "determinant {det} > 0 violates the Hodge index theorem")
            }
            Violation::EntryOutOfRange(x) => write!(f, "entry {x} exceeds 2^40 in magnitude"),
        }
    }
}

/// The symmetric form `[[l2, d], [d, c]]` in the basis `{L, C}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GramMatrix2 {
    l2: i64,
    d: i64,
    c: i64,
}

/// A class `aL + bC`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DivisorClass {
    pub a: i64,
    pub b: i64,
}

impl DivisorClass {
    pub const L: DivisorClass = DivisorClass { a: 1, b: 0 };
    pub const C: DivisorClass = DivisorClass { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        DivisorClass { a, b }
    }

    pub fn checked_add(self, other: Self) -> Option<Self> {
        Some(DivisorClass {
            a: self.a.checked_add(other.a)?,
            b: self.b.checked_add(other.b)?,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanEntry {
    pub class: DivisorClass,
    pub degree: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeScanResult {
    /// Classes with `D² = 0` and `0 < L.D ≤ max_degree`.
    pub isotropic: Vec<ScanEntry>,
    /// Classes with `D² = −2` and `0 < L.D ≤ max_degree`.
    pub minus_two: Vec<ScanEntry>,
    pub box_radius: i64,
}

/// Lists every violated condition; an empty list means the matrix is valid.
pub fn validate(l2: i64, d: i64, c: i64) -> Vec<Violation> {
    let mut out = Vec::new();
    for x in [l2, d, c] {
        if x.unsigned_abs() > MAX_ENTRY as u64 {
            out.push(Violation::EntryOutOfRange(x));
        }
    }
    if l2 <= 0 {
        out.push(Violation::NonPositiveDegree(l2));
    }
    if l2 % 2 != 0 {
        out.push(Violation::OddDegree(l2));
    }
    if c % 2 != 0 {
        out.push(Violation::OddSelfIntersection(c));
    }
    let det = i128::from(l2) * i128::from(c) - i128::from(d) * i128::from(d);
    if det > 0 {
        out.push(Violation::PositiveDefinite { det });
    }
    out
}

impl GramMatrix2 {
    pub fn new(l2: i64, d: i64, c: i64) -> Result<Self> {
        let violations = validate(l2, d, c);
        if violations.is_empty() {
            Ok(GramMatrix2 { l2, d, c })
        } else {
            Err(Error::InvalidGram(violations))
        }
    }

    pub fn l2(&self) -> i64 {
        self.l2
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    /// `l2·c − d²`; never positive for a valid matrix.
    pub fn determinant(&self) -> i128 {
        i128::from(self.l2) * i128::from(self.c) - i128::from(self.d) * i128::from(self.d)
    }

    pub fn pairing(&self, u: DivisorClass, v: DivisorClass) -> Result<i64> {
        pair_raw(self.l2, self.d, self.c, u, v)
    }

    pub fn square(&self, u: DivisorClass) -> Result<i64> {
        self.pairing(u, u)
    }

    /// `L.u`.
    pub fn degree(&self, u: DivisorClass) -> Result<i64> {
        self.pairing(DivisorClass::L, u)
    }
}

pub fn pairing(g: &GramMatrix2, u: DivisorClass, v: DivisorClass) -> Result<i64> {
    g.pairing(u, v)
}

/// Bilinear form with arbitrary entries; callers that hold a validated
/// [`GramMatrix2`] go through [`GramMatrix2::pairing`].
pub(crate) fn pair_raw(l2: i64, d: i64, c: i64, u: DivisorClass, v: DivisorClass) -> Result<i64> {
    let ovf = || Error::Overflow("intersection pairing");
    let m = |x: i64, y: i64, z: i64| -> Option<i128> {
        i128::from(x)
            .checked_mul(i128::from(y))?
            .checked_mul(i128::from(z))
    };
    let t1 = m(u.a, v.a, l2).ok_or_else(ovf)?;
    let t2 = m(u.a, v.b, d).ok_or_else(ovf)?;
    let t3 = m(u.b, v.a, d).ok_or_else(ovf)?;
    let t4 = m(u.b, v.b, c).ok_or_else(ovf)?;
    let sum = t1
        .checked_add(t2)
        .and_then(|s| s.checked_add(t3))
        .and_then(|s| s.checked_add(t4))
        .ok_or_else(ovf)?;
    i64::try_from(sum).map_err(|_| ovf())
}

/// Exhaustive search of the box `|a|, |b| ≤ box_radius` for isotropic and
/// `(−2)`-classes of positive degree at most `max_degree`.
pub fn scan(g: &GramMatrix2, box_radius: i64, max_degree: i64) -> Result<LatticeScanResult> {
    if box_radius < 1 {
        return Err(Error::InvalidArgument(format!(
            "box radius must be at least 1, got {box_radius}"
        )));
    }
    check_box(g, box_radius)?;
    let mut isotropic = Vec::new();
    let mut minus_two = Vec::new();
    for a in -box_radius..=box_radius {
        for b in -box_radius..=box_radius {
            let class = DivisorClass::new(a, b);
            let degree = g.degree(class)?;
            if degree <= 0 || degree > max_degree {
                continue;
            }
            match g.square(class)? {
                0 => isotropic.push(ScanEntry { class, degree }),
                -2 => minus_two.push(ScanEntry { class, degree }),
                _ => {}
            }
        }
    }
    let key = |e: &ScanEntry| (e.degree, e.class.a, e.class.b);
    isotropic.sort_by_key(key);
    minus_two.sort_by_key(key);
    Ok(LatticeScanResult {
        isotropic,
        minus_two,
        box_radius,
    })
}

/// Fails with [`Error::Overflow`] when some pairing of two classes with
/// coefficients in `[−box_radius, box_radius]` could leave the `i64` range.
pub fn check_box(g: &GramMatrix2, box_radius: i64) -> Result<()> {
    let r = i128::from(box_radius.unsigned_abs().min(1 << 62) as i64);
    let entries = i128::from(g.l2).abs() + 2 * i128::from(g.d).abs() + i128::from(g.c).abs();
    match (r * r).checked_mul(entries) {
        Some(bound) if bound <= i128::from(i64::MAX) => Ok(()),
        _ => Err(Error::Overflow("intersection pairing")),
    }
}

/// Decides exactly whether some class `D` has `D² = square` and `L.D = degree`,
/// returning a witness class when one exists.
///
/// Uses `L²·D² = (L.D)² − b²·(d² − L²·c)` for `D = aL + bC`, so at most two
/// values of `b` need checking when the form is nondegenerate.
pub fn represents(g: &GramMatrix2, square: i64, degree: i64) -> Result<Option<DivisorClass>> {
    let ovf = || Error::Overflow("class representation");
    let l2 = i128::from(g.l2);
    let d = i128::from(g.d);
    let disc = -g.determinant();
    // b²·disc = (L.D)² − L²·D²
    let rhs = l2
        .checked_mul(i128::from(square))
        .and_then(|x| (i128::from(degree) * i128::from(degree)).checked_sub(x))
        .ok_or_else(ovf)?;
    let solve_a = |b: i128| -> Option<DivisorClass> {
        let num = i128::from(degree) - b * d;
        if num % l2 != 0 {
            return None;
        }
        Some(DivisorClass::new(
            i64::try_from(num / l2).ok()?,
            i64::try_from(b).ok()?,
        ))
    };
    if disc == 0 {
        if rhs != 0 {
            return Ok(None);
        }
        // every solution of a·l2 + b·d = degree works
        let Some((b0, period)) = solve_congruence(d, i128::from(degree), l2) else {
            return Ok(None);
        };
        return Ok([b0, b0 - period]
            .into_iter()
            .filter_map(solve_a)
            .min_by_key(|c| (c.b.unsigned_abs(), *c)));
    }
    if rhs < 0 || rhs % disc != 0 {
        return Ok(None);
    }
    let b2 = rhs / disc;
    let b = isqrt_i128(b2);
    if b * b != b2 {
        return Ok(None);
    }
    let best = [-b, b].into_iter().filter_map(solve_a).min();
    Ok(best)
}

/// Least nonnegative `x` with `x·k ≡ r (mod n)`, together with the period of
/// the solution set.
fn solve_congruence(k: i128, r: i128, n: i128) -> Option<(i128, i128)> {
    let (h, inv, _) = ext_gcd(k.rem_euclid(n), n);
    if r % h != 0 {
        return None;
    }
    let period = n / h;
    let x = ((r / h).rem_euclid(period) * inv.rem_euclid(period)).rem_euclid(period);
    Some((x, period))
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

fn isqrt_i128(n: i128) -> i128 {
    debug_assert!(n >= 0);
    (n as u128).isqrt() as i128
}

impl fmt::Display for GramMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}; {} {}", self.l2, self.d, self.d, self.c)
    }
}

impl FromStr for GramMatrix2 {
    type Err = Error;

    /// Parses `"l2 d; d c"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected \"l2 d; d c\", got {s:?}"));
        let (row0, row1) = s.split_once(';').ok_or_else(bad)?;
        let nums = |row: &str| -> Result<Vec<i64>> {
            row.split_whitespace()
                .map(|t| t.parse::<i64>().map_err(|_| bad()))
                .collect()
        };
        let r0 = nums(row0)?;
        let r1 = nums(row1)?;
        if r0.len() != 2 || r1.len() != 2 {
            return Err(bad());
        }
        if r0[1] != r1[0] {
            return Err(Error::Parse(format!(
                "Gram matrix is not symmetric: off-diagonal entries {} and {}",
                r0[1], r1[0]
            )));
        }
        GramMatrix2::new(r0[0], r0[1], r1[1])
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.a, self.b)
    }
}

impl FromStr for DivisorClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected \"a,b\", got {s:?}"));
        let (a, b) = s.split_once(',').ok_or_else(bad)?;
        Ok(DivisorClass::new(
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        ))
    }
}
