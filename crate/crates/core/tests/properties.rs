use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use stirsys_core::csys::{
    cpoly, det_bareiss, det_closed_form, residual_for_counts, Multiplicity, PointSet,
};
use stirsys_core::polyring::TruncSeries;
use stirsys_core::quotient::{
    distinct_normal_forms, r0, reduce_set, reduce_uni, reduced_b_r, solve_quotient,
};
use stirsys_core::stirling::{stirling1, stirling2};
use stirsys_core::{QuotientRel, UniPoly, ZPoly};

fn poly() -> impl Strategy<Value = ZPoly> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), -9i64..=9), 0..6).prop_map(|terms| {
        ZPoly::from_terms(
            terms
                .into_iter()
                .map(|((i, j, k), c)| ([i, j, k], BigInt::from(c))),
        )
    })
}

fn rel() -> impl Strategy<Value = QuotientRel> {
    prop_oneof![
        (1u32..5, 1u32..5).prop_map(|(a, b)| QuotientRel::pos(a, b).unwrap()),
        (1u32..5, 1u32..5).prop_map(|(a, b)| QuotientRel::neg(a, b).unwrap()),
        Just(QuotientRel::XZero),
        Just(QuotientRel::YZero),
    ]
}

fn generator(rel: QuotientRel) -> ZPoly {
    match rel {
        QuotientRel::Pos { a, b } => ZPoly::linear(a.into(), b.into(), 0, 0),
        QuotientRel::Neg { a, b } => ZPoly::linear(a.into(), -i64::from(b), 0, 0),
        QuotientRel::XZero => ZPoly::x(),
        QuotientRel::YZero => ZPoly::y(),
    }
}

/// Staircase from a weakly decreasing column-height list.
fn staircase() -> impl Strategy<Value = PointSet> {
    prop::collection::vec(1u32..4, 1..4).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        PointSet::from_partition(&parts)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &ZPoly::one(), p.clone());
    }

    #[test]
    fn exact_division(p in poly(), q in poly()) {
        prop_assume!(!q.is_zero());
        prop_assert_eq!((&p * &q).div_exact(&q), Some(p));
    }

    #[test]
    fn reduction_is_a_ring_map(p in poly(), q in poly(), rel in rel()) {
        let red = |f: &ZPoly| rel.reduce(f);
        prop_assert_eq!(red(&(&p + &q)), &red(&p) + &red(&q));
        prop_assert_eq!(red(&(&p * &q)), &red(&p) * &red(&q));
        if matches!(rel, QuotientRel::XZero | QuotientRel::YZero) {
            prop_assert_eq!(red(&red(&p)), red(&p));
        }
        prop_assert!(red(&(&generator(rel) * &p)).is_zero());
        prop_assert!(rel.congruent(&(&p + &generator(rel)), &p));
    }

    #[test]
    fn exponential_series_add(p in poly(), q in poly()) {
        let lhs = TruncSeries::exp(&p, 5).mul(&TruncSeries::exp(&q, 5)).unwrap();
        prop_assert_eq!(lhs, TruncSeries::exp(&(&p + &q), 5));
    }

    #[test]
    fn roots_vanish(roots in prop::collection::vec(poly(), 1..4)) {
        let b = UniPoly::from_roots(&roots, &vec![1; roots.len()]).unwrap();
        prop_assert!(b.is_monic());
        for r in &roots {
            prop_assert!(b.eval(r).is_zero());
        }
    }

    #[test]
    fn staircase_solutions(set in staircase(), extra in prop::collection::vec(0u32..3, 9)) {
        let counts: Vec<u32> = (0..set.len()).map(|k| 1 + extra[k]).collect();
        prop_assert!(residual_for_counts(&set, &counts).unwrap().iter().all(ZPoly::is_zero));
    }

    #[test]
    fn closed_form_determinant(set in staircase()) {
        prop_assert_eq!(det_closed_form(&set).unwrap(), det_bareiss(&set));
    }

    #[test]
    fn reduced_set_carries_distinct_roots(set in staircase(), rel in rel()) {
        let res = reduce_set(&set, rel, &Default::default()).unwrap();
        prop_assert_eq!(res.reduced_set.len(), r0(&set, rel));
        prop_assert_eq!(distinct_normal_forms(&res.reduced_set, rel).len(), r0(&set, rel));
        let m = Multiplicity::uniform(&res.reduced_set, 1);
        let b = solve_quotient(&set, rel, &m, &Default::default()).unwrap();
        prop_assert_eq!(reduce_uni(&b, rel), reduced_b_r(&set, rel));
    }

    #[test]
    fn stirling_recurrences(n in 0u32..30, k in 1u32..30) {
        prop_assert_eq!(stirling2(n + 1, k), stirling2(n, k - 1) + BigInt::from(k) * stirling2(n, k));
        prop_assert_eq!(stirling1(n + 1, k), stirling1(n, k - 1) - BigInt::from(n) * stirling1(n, k));
    }

    #[test]
    fn cpoly_vanishes_below_degree(k1 in 0u32..5, k2 in 0u32..5, l in 0u32..9) {
        prop_assume!(k1 + k2 > l);
        prop_assert!(cpoly(k1, k2, l).is_zero());
    }

    #[test]
    fn evaluation_is_multiplicative(p in poly(), q in poly(), v in prop::array::uniform3(-5i64..=5)) {
        let pt = v.map(|c| BigRational::from_integer(c.into()));
        prop_assert_eq!((&p * &q).eval(&pt), p.eval(&pt) * q.eval(&pt));
    }
}
