use proptest::prelude::*;
use qal_core::combinatorics::{
    enumerate_gt_patterns, enumerate_ssyt, enumerate_trapezium, is_admissible, pattern_to_ssyt, ssyt_to_pattern, weyl_dim,
    SkewDiagram,
};
use qal_core::gtrep::{build_rep, verify_relations};
use qal_core::olshanski::{block_lemma_holds, e_matrix, e_minors_nonzero};
use qal_core::rmatrix;
use qal_core::scalar::{LaurentPolyQ, QParam, RatFuncQ, Rational, Ring, Scalar, UPoly};
use qal_core::skewrep::{drinfeld_from_contents, drinfeld_from_exponents, nu_exponents};

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Rationals away from 0 and ±1, usable as q.
fn q0() -> impl Strategy<Value = Rational> {
    (2i64..12, 1i64..6, any::<bool>())
        .prop_filter("q0 not ±1", |(n, d, _)| n != d)
        .prop_map(|(n, d, neg)| if neg { -r(n, d) } else { r(n, d) })
}

fn dominant(n: usize, max: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(0..=max, n).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

fn laurent_q() -> impl Strategy<Value = LaurentPolyQ> {
    (-2i64..=2, prop::collection::vec(-4i64..=4, 1..4))
        .prop_map(|(lo, cs)| LaurentPolyQ::from_coeffs(lo, cs.into_iter().map(|c| r(c, 1)).collect()))
}

fn ratfunc_q() -> impl Strategy<Value = RatFuncQ> {
    (laurent_q(), laurent_q())
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| RatFuncQ::new(n, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn gt_count_is_weyl_dimension(lambda in (1usize..=4).prop_flat_map(|n| dominant(n, 3))) {
        prop_assert_eq!(enumerate_gt_patterns(&lambda).unwrap().len() as i64, weyl_dim(&lambda));
    }

    #[test]
    fn trapezium_ssyt_bijection(
        lambda in (2usize..=4).prop_flat_map(|n| dominant(n, 3)),
        mlen in 0usize..=2,
        mu_raw in dominant(2, 3),
    ) {
        let m = mlen.min(lambda.len() - 1);
        let mu = &mu_raw[..m];
        let n = lambda.len() - m;
        prop_assume!(SkewDiagram::new(&lambda, mu).is_ok());
        let traps = enumerate_trapezium(&lambda, mu, n).unwrap();
        let tabs = enumerate_ssyt(&SkewDiagram::new(&lambda, mu).unwrap(), n);
        prop_assert_eq!(traps.len(), tabs.len());
        prop_assert_eq!(traps.is_empty(), !is_admissible(&lambda, mu, n));
        for p in &traps {
            let t = pattern_to_ssyt(p).unwrap();
            prop_assert!(t.is_semistandard());
            prop_assert_eq!(&ssyt_to_pattern(&t, n).unwrap(), p);
        }
    }

    #[test]
    fn ratfunc_q_field_laws(a in ratfunc_q(), b in ratfunc_q(), c in ratfunc_q()) {
        prop_assert_eq!((a.clone() + &b) * &c, a.clone() * &c + b.clone() * &c);
        prop_assert_eq!(a.clone() * &b, b.clone() * &a);
        if !b.is_zero() {
            prop_assert_eq!(a.try_div(&b).unwrap() * &b, a.clone());
        }
    }

    #[test]
    fn ratfunc_q_display_round_trip(a in ratfunc_q()) {
        let back: RatFuncQ = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn ratfunc_q_specialization_is_a_homomorphism(a in ratfunc_q(), b in ratfunc_q(), q in q0()) {
        if let (Ok(x), Ok(y)) = (a.eval(&q), b.eval(&q)) {
            prop_assert_eq!((a.clone() * &b).eval(&q).unwrap(), x.clone() * &y);
            prop_assert_eq!((a + &b).eval(&q).unwrap(), x + y);
        }
    }

    #[test]
    fn upoly_division(a in prop::collection::vec(-5i64..=5, 0..6), d in prop::collection::vec(-5i64..=5, 1..4)) {
        let a = UPoly::new(a.into_iter().map(|c| r(c, 1)).collect());
        let d = UPoly::new(d.into_iter().map(|c| r(c, 1)).collect());
        prop_assume!(!d.is_zero());
        let (quo, rem) = a.div_rem(&d).unwrap();
        prop_assert_eq!(quo.mul(&d).add(&rem), a);
        prop_assert!(rem.degree() < d.degree() || rem.is_zero());
    }

    #[test]
    fn q_integers_invariant_under_inversion(m in -6i64..=6, q in q0()) {
        let qp = QParam::rational(&q).unwrap();
        prop_assert_eq!(qp.qint(m), qp.inverted().qint(m));
        prop_assert_eq!(qp.qint(-m), -qp.qint(m));
    }

    #[test]
    fn trigonometric_ybe_at_random_points(q in q0(), u in q0(), v in q0(), w in q0()) {
        let qp = QParam::rational(&q).unwrap();
        prop_assert!(rmatrix::ybe_trig_holds::<Rational, Rational>(2, &u, &v, &w, &qp));
    }

    #[test]
    fn evaluation_module_relations(lambda in dominant(2, 4), q in q0()) {
        let qp = QParam::rational(&q).unwrap();
        let rep = build_rep(&lambda, &qp).unwrap();
        for c in verify_relations(&rep) {
            prop_assert!(c.passed(), "{:?}", c);
        }
    }

    #[test]
    fn drinfeld_exponents_match_contents(
        lambda in (2usize..=4).prop_flat_map(|n| dominant(n, 3)),
        mlen in 0usize..=2,
        mu_raw in dominant(2, 3),
        q in q0(),
    ) {
        let m = mlen.min(lambda.len() - 1);
        let mu = &mu_raw[..m];
        let n = lambda.len() - m;
        prop_assume!(is_admissible(&lambda, mu, n) && SkewDiagram::new(&lambda, mu).is_ok());
        let qp = QParam::rational(&q).unwrap();
        let ex = nu_exponents(&lambda, mu).unwrap();
        prop_assert_eq!(drinfeld_from_exponents(&ex, &qp), drinfeld_from_contents(&lambda, mu, n, &qp).unwrap());
    }

    #[test]
    fn elementary_symmetric_minors_and_block_vandermonde(
        alphas in prop::collection::btree_set(-20i64..=20, 2..5),
        betas in prop::collection::btree_set(1i64..=30, 2..4),
        p in 1usize..5,
    ) {
        let alphas: Vec<Rational> = alphas.into_iter().map(|a| r(a, 1)).collect();
        let p = p.min(alphas.len());
        prop_assert!(e_minors_nonzero(p, &alphas).unwrap());
        let e = e_matrix(p, &alphas).select_cols(&(0..p).collect::<Vec<_>>());
        let betas: Vec<Rational> = betas.into_iter().map(|b| r(b, 3)).collect();
        let blocks: Vec<_> = (0..betas.len()).map(|_| e.clone()).collect();
        prop_assert!(block_lemma_holds(&blocks, &betas).unwrap());
    }
}

#[test]
fn ring_identity_elements() {
    assert!(RatFuncQ::one().is_one());
    assert!(Ring::is_zero(&RatFuncQ::zero()));
}
