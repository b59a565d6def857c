//! Algebraic invariants of the Chow ring, polynomials and probability bounds.

mod common;

use csmcalc::chow::aluffi_involution;
use csmcalc::probability::{
    probability_bound, projective_degree_success_bound, segre_success_bound,
};
use csmcalc::{ChowClass, FieldSpec, Monomial, Polynomial};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

const N: usize = 5;

fn class() -> impl Strategy<Value = ChowClass> {
    prop::collection::vec(-50i64..50, N + 1).prop_map(|c| ChowClass::from_coeffs(N, c))
}

fn unit_class() -> impl Strategy<Value = ChowClass> {
    (
        prop::sample::select(vec![1i64, -1]),
        prop::collection::vec(-50i64..50, N),
    )
        .prop_map(|(a0, rest)| ChowClass::from_coeffs(N, std::iter::once(a0).chain(rest)))
}

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::array::uniform3(0u32..4), -9i64..9), 0..6).prop_map(|terms| {
        let r = common::ring(2);
        Polynomial::from_terms(
            &r,
            terms
                .into_iter()
                .map(|(e, c)| (Monomial::from_exponents(&e), c)),
        )
    })
}

fn big(v: u64) -> BigInt {
    BigInt::from(v)
}

proptest! {
    #[test]
    fn chow_ring_laws(a in class(), b in class(), c in class()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &ChowClass::one(N), a);
    }

    #[test]
    fn units_invert(u in unit_class()) {
        let inv = u.invert_unit().unwrap();
        prop_assert_eq!(&u * &inv, ChowClass::one(N));
    }

    #[test]
    fn non_units_do_not_invert(mut c in prop::collection::vec(-50i64..50, N + 1)) {
        c[0] = 0;
        prop_assert!(ChowClass::from_coeffs(N, c).invert_unit().is_err());
    }

    #[test]
    fn dual_is_a_ring_involution(a in class(), b in class()) {
        prop_assert_eq!(a.dual().dual(), a.clone());
        prop_assert_eq!((&a * &b).dual(), &a.dual() * &b.dual());
    }

    #[test]
    fn line_bundle_twists_compose(a in class(), d in -6i64..6, e in -6i64..6) {
        prop_assert_eq!(a.tensor_line_bundle(0), a.clone());
        prop_assert_eq!(a.tensor_line_bundle(d).tensor_line_bundle(e), a.tensor_line_bundle(d + e));
    }

    #[test]
    fn aluffi_involution_is_an_involution(p in prop::collection::vec(-100i64..100, 1..7)) {
        let p: Vec<BigInt> = p.into_iter().map(BigInt::from).collect();
        let q = aluffi_involution(&p).unwrap();
        prop_assert_eq!(aluffi_involution(&q).unwrap(), p);
    }

    #[test]
    fn euler_profile_starts_with_euler(a in class(), dim in 0usize..=N) {
        let prof = a.euler_profile(dim).unwrap();
        prop_assert_eq!(prof.values.len(), dim + 1);
        prop_assert_eq!(&prof.values[0], a.degree_zero_part());
    }

    #[test]
    fn polynomial_arithmetic(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a - &a).is_zero());
        for j in 0..3 {
            let lhs = (&a * &b).partial_derivative(j).unwrap();
            let rhs = &(&a.partial_derivative(j).unwrap() * &b) + &(&a * &b.partial_derivative(j).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), pt in prop::array::uniform3(0u32..32749)) {
        let f = FieldSpec::default();
        prop_assert_eq!((&a * &b).evaluate(&pt), f.mul(a.evaluate(&pt), b.evaluate(&pt)));
        prop_assert_eq!((&a + &b).evaluate(&pt), f.add(a.evaluate(&pt), b.evaluate(&pt)));
    }

    #[test]
    fn segre_bound_is_monotone(n in 1u32..6, m in 0u32..6, d in 1u32..8, codim in 1u32..6, s in 1u64..1_000_000, extra in 1u64..1_000_000) {
        let lo = segre_success_bound(n, m, d, codim, &big(s));
        let hi = segre_success_bound(n, m, d, codim, &big(s + extra));
        prop_assert!(lo <= hi);
        prop_assert!(lo >= BigRational::zero() && hi <= BigRational::one());
    }

    #[test]
    fn degree_bounds_are_monotone(i in 0u32..6, n in 1u32..6, m in 0u32..6, d in 1u32..8, s in 1u64..1_000_000, extra in 1u64..1_000_000) {
        let lo = projective_degree_success_bound(i, d, n, m, &big(s));
        let hi = projective_degree_success_bound(i, d, n, m, &big(s + extra));
        prop_assert!(lo <= hi);
        prop_assert!(lo >= BigRational::zero() && hi <= BigRational::one());
    }
}

#[test]
fn bounds_tend_to_one() {
    let eps = BigRational::new(big(1), big(1_000_000));
    let huge = BigInt::from(10).pow(40);
    let b = probability_bound(4, 2, 6, 2, &huge);
    assert!(BigRational::one() - &b.segre < eps);
    assert!(b.per_degree.iter().all(|x| BigRational::one() - x < eps));
    let mut last = BigRational::zero();
    for k in 3..40u32 {
        let cur = segre_success_bound(4, 2, 6, 2, &BigInt::from(10).pow(k));
        assert!(cur >= last);
        last = cur;
    }
}
