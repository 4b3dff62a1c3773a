use proptest::prelude::*;
use proptest::test_runner::RngSeed;

use seshadri_core::candidates::{enumerate, EnumerationParams};
use seshadri_core::exclusion::{aux_intersections, certificate_for, filter};
use seshadri_core::expected::classify_subsqrt;
use seshadri_core::lattice::{pairing, represents, scan};
use seshadri_core::seshadri::{analyze, SeshadriValue};
use seshadri_core::{
    CandidateTriple, Context, DivisorClass, ExactReal, GeometricFlags, GramMatrix2, Rational,
    Realizability, SurfaceSpec, Tristate,
};

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        rng_seed: RngSeed::Fixed(0x1a77_1ce5),
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

fn gram() -> impl Strategy<Value = GramMatrix2> {
    (1i64..=40, -40i64..=40, -20i64..=20).prop_filter_map("not a K3 Gram matrix", |(h, d, c)| {
        GramMatrix2::new(2 * h, d, 2 * c).ok()
    })
}

fn class(r: i64) -> impl Strategy<Value = DivisorClass> {
    (-r..=r, -r..=r).prop_map(|(a, b)| DivisorClass::new(a, b))
}

/// An even `l2` with a rational `eps`, `1 < eps` and `eps² ≤ l2 − 1`.
fn degree_and_eps() -> impl Strategy<Value = (i64, Rational)> {
    (3i64..=30, 1i64..=7).prop_flat_map(|(h, den)| {
        let l2 = 2 * h;
        let hi = ((l2 - 1) * den * den).isqrt();
        (Just(l2), (den + 1)..=hi).prop_map(move |(l2, num)| (l2, Rational::new(num, den).unwrap()))
    })
}

fn context() -> impl Strategy<Value = Context> {
    (0u8..3, 0u8..3, any::<bool>()).prop_map(|(level, qo, nl)| {
        let ctx = match level {
            0 => Context::default(),
            1 => Context::globally_generated(),
            _ => Context::very_ample().with_quadrics_only(match qo {
                0 => Tristate::True,
                1 => Tristate::False,
                _ => Tristate::Unknown,
            }),
        };
        if nl {
            ctx.with_no_lines()
        } else {
            ctx
        }
    })
}

proptest! {
    #![proptest_config(config(1000))]

    #[test]
    fn pairing_is_symmetric_and_bilinear(g in gram(), u in class(10_000), v in class(10_000), w in class(10_000)) {
        prop_assert_eq!(pairing(&g, u, v).unwrap(), pairing(&g, v, u).unwrap());
        let uv = u.checked_add(v).unwrap();
        prop_assert_eq!(
            pairing(&g, uv, w).unwrap(),
            pairing(&g, u, w).unwrap() + pairing(&g, v, w).unwrap()
        );
    }

    #[test]
    fn scan_is_stable_and_self_checking(g in gram(), r in 1i64..5, max_degree in 1i64..40) {
        let small = scan(&g, r, max_degree).unwrap();
        let large = scan(&g, r + 1, max_degree).unwrap();
        for e in small.isotropic.iter().chain(&small.minus_two) {
            prop_assert!(large.isotropic.contains(e) || large.minus_two.contains(e));
        }
        for e in &large.isotropic {
            prop_assert_eq!(g.square(e.class).unwrap(), 0);
            prop_assert_eq!(g.degree(e.class).unwrap(), e.degree);
        }
        for e in &large.minus_two {
            prop_assert_eq!(g.square(e.class).unwrap(), -2);
            prop_assert_eq!(g.degree(e.class).unwrap(), e.degree);
        }
    }

    #[test]
    fn negative_determinant_means_indefinite(g in gram()) {
        prop_assume!(g.determinant() < 0);
        // (dL − L²C)² = L²·det, and both classes lie in the box of radius max(|d|, L²)
        let r = g.d().abs().max(g.l2());
        let pos = DivisorClass::L;
        let neg = DivisorClass::new(g.d(), -g.l2());
        prop_assert!(pos.a.abs() <= r && neg.a.abs() <= r && neg.b.abs() <= r);
        prop_assert!(g.square(pos).unwrap() > 0);
        prop_assert!(g.square(neg).unwrap() < 0);
    }

    #[test]
    fn represents_agrees_with_search(g in gram(), s in prop_oneof![Just(0i64), Just(-2i64), Just(2i64)], k in 1i64..12) {
        let found = represents(&g, s, k).unwrap();
        if let Some(c) = found {
            prop_assert_eq!((g.square(c).unwrap(), g.degree(c).unwrap()), (s, k));
        } else {
            for a in -30i64..=30 {
                for b in -30i64..=30 {
                    let c = DivisorClass::new(a, b);
                    prop_assert!((g.square(c).unwrap(), g.degree(c).unwrap()) != (s, k));
                }
            }
        }
    }

    #[test]
    fn enumeration_constraints_and_bounds((l2, eps) in degree_and_eps(), m1 in any::<bool>()) {
        let ts = enumerate(&EnumerationParams::new(l2, eps, m1)).unwrap();
        for t in &ts {
            prop_assert!(m1 || t.m >= 2);
            prop_assert!(t.d >= 1 && t.c % 2 == 0);
            prop_assert!(t.c >= -2 && t.c >= t.m * (t.m - 1) - 2);
            prop_assert!(i128::from(l2) * i128::from(t.c) <= i128::from(t.d) * i128::from(t.d));
            prop_assert!(t.ratio() < eps);
        }
    }

    #[test]
    fn raising_the_cap_keeps_triples((l2, eps) in degree_and_eps(), step in 1i64..20) {
        let raised = Rational::new(eps.numer() * 20 + step, eps.denom() * 20).unwrap();
        let high_ok = raised.square_lt(l2);
        let low = enumerate(&EnumerationParams::new(l2, eps, true)).unwrap();
        if high_ok {
            let high = enumerate(&EnumerationParams::new(l2, raised, true)).unwrap();
            prop_assert!(low.iter().all(|t| high.contains(t)));
        }
    }

    #[test]
    fn certificates_are_sound((l2, eps) in degree_and_eps(), ctx in context()) {
        let ts = enumerate(&EnumerationParams::new(l2, eps, true)).unwrap();
        let f = filter(l2, &ts, &ctx, 3).unwrap();
        prop_assert_eq!(f.survivors.len() + f.certificates.len(), ts.len());
        for tc in &f.certificates {
            let c = &tc.certificate;
            prop_assert!(c.kind.eliminates());
            prop_assert!(c.verify(l2, &tc.triple, &ctx));
            // recompute D² and L.D without the engine
            let CandidateTriple { d, c: cc, .. } = tc.triple;
            let (a, b) = (c.divisor.a, c.divisor.b);
            prop_assert_eq!(c.d_square, a * a * l2 + 2 * a * b * d + b * b * cc);
            prop_assert_eq!(c.d_degree, a * l2 + b * d);
            prop_assert_eq!(aux_intersections(l2, &tc.triple, a, b).unwrap(), (c.d_square, c.d_degree));
        }
    }

    #[test]
    fn larger_boxes_only_add_certificates((l2, eps) in degree_and_eps(), ctx in context(), r in 1i64..4) {
        let ts = enumerate(&EnumerationParams::new(l2, eps, true)).unwrap();
        for t in &ts {
            if certificate_for(l2, t, &ctx, r).unwrap().is_some() {
                prop_assert!(certificate_for(l2, t, &ctx, r + 1).unwrap().is_some());
            }
        }
    }

    #[test]
    fn stronger_context_never_adds_survivors((l2, eps) in degree_and_eps(), a in context(), drop in 0u8..16) {
        let va = a.is_very_ample() && drop & 1 == 0;
        let gg = a.is_globally_generated() && drop & 2 == 0;
        let qo = if va && drop & 4 == 0 { a.quadrics_only() } else { Tristate::Unknown };
        let b = Context::new(gg, va, qo, a.no_lines() && drop & 8 == 0).unwrap();
        prop_assert!(a.implies(&b));
        let ts = enumerate(&EnumerationParams::new(l2, eps, true)).unwrap();
        let strong = filter(l2, &ts, &a, 3).unwrap().survivors;
        let weak = filter(l2, &ts, &b, 3).unwrap().survivors;
        prop_assert!(strong.iter().all(|t| weak.contains(t)));
    }
}

proptest! {
    #![proptest_config(config(300))]

    #[test]
    fn kleiman_bound(h in 1i64..=300, ctx in context(), pencils in proptest::collection::btree_set(1i64..=8, 0..3), conic in any::<bool>()) {
        let l2 = 2 * h;
        let spec = SurfaceSpec::new(l2, ctx).with_flags(GeometricFlags {
            pencil_degrees: pencils,
            has_conic: conic,
            ..GeometricFlags::default()
        });
        if let Ok(o) = analyze(&spec) {
            let root = ExactReal::sqrt(l2);
            prop_assert!(o.upper() <= root);
            // witnessed survivors lie strictly below √L²
            for s in &o.survivors {
                prop_assert!(ExactReal::from(s.ratio) < root);
            }
        }
    }

    #[test]
    fn theorem_values_in_degree_6_and_8(d in -30i64..=30, c in -10i64..=10, eight in any::<bool>()) {
        let l2 = if eight { 8 } else { 6 };
        let g = GramMatrix2::new(l2, d, 2 * c);
        prop_assume!(g.is_ok());
        let ctx = Context::very_ample()
            .with_no_lines()
            .with_quadrics_only(if eight { Tristate::True } else { Tristate::Unknown });
        if let Ok(o) = analyze(&SurfaceSpec::new(l2, ctx).with_gram(g.unwrap())) {
            let allowed: Vec<ExactReal> = if eight {
                vec![q(8, 3).into(), q(5, 2).into(), q(2, 1).into()]
            } else {
                vec![q(2, 1).into(), q(3, 2).into()]
            };
            let SeshadriValue::Exact(v) = o.value else {
                return Err(TestCaseError::fail(format!("not exact: {:?}", o.value)));
            };
            prop_assert!(allowed.contains(&v), "{:?}", v);
        }
    }

    #[test]
    fn value_is_minimum_of_realizable_ratios(d in -30i64..=30, c in -10i64..=10, eight in any::<bool>()) {
        let l2 = if eight { 8 } else { 6 };
        let Ok(g) = GramMatrix2::new(l2, d, 2 * c) else { return Ok(()) };
        let ctx = Context::very_ample().with_no_lines();
        let Ok(o) = analyze(&SurfaceSpec::new(l2, ctx).with_gram(g)) else { return Ok(()) };
        prop_assert!(o.survivors.iter().all(|s| s.realizable != Realizability::Unknown));
        let best = o
            .survivors
            .iter()
            .filter(|s| s.realizable == Realizability::Yes)
            .map(|s| s.ratio)
            .chain(std::iter::once(Rational::new(l2, 3).unwrap()))
            .min()
            .unwrap();
        prop_assert_eq!(o.value, SeshadriValue::Exact(best.into()));
    }
}

#[test]
fn expected_tuples_are_small_and_stable() {
    let base = classify_subsqrt(24, 2);
    for (l2_max, n_max) in [(24, 2), (30, 3), (100, 10), (500, 20), (2000, 50)] {
        let got = classify_subsqrt(l2_max, n_max);
        assert_eq!(got, base, "({l2_max}, {n_max})");
        for e in &got {
            assert!(e.m <= 5);
            assert!(e.n * e.n * e.l2 < e.m * e.m);
        }
    }
}
