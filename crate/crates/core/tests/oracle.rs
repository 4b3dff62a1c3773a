use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use seshadri_core::candidates::{enumerate, EnumerationParams};
use seshadri_core::exclusion::filter;
use seshadri_core::oracle::{
    brute_candidates, naive_survivors, replay_case_tables, sweep_dichotomy, NaiveContext,
};
use seshadri_core::{Context, Rational, Tristate};

const SEED: u64 = 20_240_611;

#[test]
fn literal_tables_replay() {
    let r = replay_case_tables();
    assert!(r.matched, "{:#?}", r.mismatches);
}

#[test]
fn sweep_to_2000() {
    let r = sweep_dichotomy(8, 2000);
    assert!(r.matched, "{:#?}", r.mismatches);
}

/// Boxes large enough for any triple: `m²(L² − eps²) < L²(m + 2)` forces
/// `m < 2L²/(L² − eps²) + 2`, then `d < eps·m` and `c ≤ d²/L²`.
fn brute_box(l2: i64, eps: Rational) -> (i64, i64, i64) {
    let (p, q) = (eps.numer(), eps.denom());
    let gap_num = l2 * q * q - p * p;
    let m_hi = 2 * l2 * q * q / gap_num + 3;
    let d_hi = m_hi * p / q + 1;
    (m_hi, d_hi, d_hi * d_hi / l2 + 2)
}

#[test]
fn seeded_random_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut checked = 0;
    while checked < 50 {
        let l2 = 2 * rng.gen_range(2..=30);
        let den = rng.gen_range(1..=6);
        let num = rng.gen_range(den + 1..=8 * den);
        let eps = Rational::new(num, den).unwrap();
        // keep L² − eps² ≥ L²/4 so the literal loop stays small
        if 4 * eps.numer() * eps.numer() > 3 * l2 * eps.denom() * eps.denom() {
            continue;
        }
        let m1 = rng.gen_bool(0.5);
        let (m_hi, d_hi, c_hi) = brute_box(l2, eps);
        let fast = enumerate(&EnumerationParams::new(l2, eps, m1)).unwrap();
        assert_eq!(
            brute_candidates(l2, eps, m_hi, d_hi, c_hi, m1),
            fast,
            "L²={l2} eps={eps}"
        );
        checked += 1;
    }
}

#[test]
fn tight_caps() {
    for (l2, n, d) in [(6, 2, 1), (8, 8, 3), (10, 3, 1), (12, 10, 3), (4, 7, 4)] {
        let eps = Rational::new(n, d).unwrap();
        let (m_hi, d_hi, c_hi) = brute_box(l2, eps);
        for m1 in [false, true] {
            let fast = enumerate(&EnumerationParams::new(l2, eps, m1)).unwrap();
            assert_eq!(
                brute_candidates(l2, eps, m_hi, d_hi, c_hi, m1),
                fast,
                "L²={l2} eps={eps}"
            );
        }
    }
}

#[test]
fn naive_exclusion_matches_engine() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    for _ in 0..200 {
        let l2 = 2 * rng.gen_range(3..=40);
        let eps = Rational::from_integer(2);
        let (gg, va, qo, nl) = (
            rng.gen_bool(0.5),
            rng.gen_bool(0.5),
            rng.gen_bool(0.5),
            rng.gen_bool(0.5),
        );
        let qo = qo && va;
        let ctx = Context::new(
            gg,
            va,
            if qo {
                Tristate::True
            } else {
                Tristate::Unknown
            },
            false,
        )
        .unwrap();
        let ctx = if nl { ctx.with_no_lines() } else { ctx };
        let naive_ctx = NaiveContext {
            gg: gg || va,
            va,
            quadrics_only: qo,
            no_lines: nl,
        };
        let (m_hi, d_hi, c_hi) = brute_box(l2, eps);
        let raw = brute_candidates(l2, eps, m_hi, d_hi, c_hi, true);
        let engine = filter(l2, &raw, &ctx, 3).unwrap().survivors;
        assert_eq!(
            naive_survivors(l2, &raw, naive_ctx, 3),
            engine,
            "L²={l2} {ctx:?}"
        );
    }
}
