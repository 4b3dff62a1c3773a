//! Points of maximal expected multiplicity in `|nL|`.
//!
//! A linear system of dimension `r` is expected to contain curves with a point
//! of multiplicity `m` whenever `r − m(m+1)/2 + 2 ≥ 0`. The classification
//! below lists the `(L², n, m)` for which such a curve would give a Seshadri
//! ratio `nL²/m` strictly below `√L²`.

use alloc::vec::Vec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ExpectedTuple {
    pub l2: i64,
    pub n: i64,
    pub m: i64,
}

/// `dim |nL| = n²L²/2 + 1`.
pub fn dim_nl(n: i64, l2: i64) -> i64 {
    n * n * l2 / 2 + 1
}

/// Largest `m ≥ 1` with `m(m+1)/2 ≤ dim + 2`.
pub fn max_expected_mult(dim: i64) -> i64 {
    debug_assert!(dim >= 0);
    let budget = i128::from(dim) + 2;
    // m(m+1) ≤ 2·budget  ⇔  m ≤ (√(8·budget + 1) − 1) / 2
    let mut m = (((8 * budget + 1) as u128).isqrt() as i128 - 1) / 2;
    while (m + 1) * (m + 2) <= 2 * budget {
        m += 1;
    }
    while m * (m + 1) > 2 * budget {
        m -= 1;
    }
    m.max(1) as i64
}

/// All `(L², n, m)` with `L²` even in `[4, l2_max]`, `1 ≤ n ≤ n_max`, `m` the
/// maximal expected multiplicity of `|nL|`, and `n²L² < m²`.
pub fn classify_subsqrt(l2_max: i64, n_max: i64) -> Vec<ExpectedTuple> {
    let mut out = Vec::new();
    for l2 in (4..=l2_max).step_by(2) {
        for n in 1..=n_max {
            let m = max_expected_mult(dim_nl(n, l2));
            if i128::from(n) * i128::from(n) * i128::from(l2) < i128::from(m) * i128::from(m) {
                out.push(ExpectedTuple { l2, n, m });
            }
        }
    }
    out
}
