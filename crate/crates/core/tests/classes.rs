//! Segre and CSM classes against closed forms and known examples.

mod common;

use std::sync::Arc;

use csmcalc::charclass::{
    cfj_complete_intersection, compute_csm, csm_ci_direct, is_smooth, milnor_class,
    monomials_of_degree, segre_class, segre_complete_intersection, singularity_subscheme,
    tangent_class, CsmAlgorithm, Settings,
};
use csmcalc::{ChowClass, Ideal, Polynomial, Ring, SeededRng};
use num_bigint::BigInt;

fn class(n: usize, c: &[i64]) -> ChowClass {
    ChowClass::from_coeffs(n, c.iter().copied())
}

fn random_form(r: &Arc<Ring>, deg: u32, rng: &mut SeededRng) -> Polynomial {
    let p = r.field().modulus();
    Polynomial::from_terms(
        r,
        monomials_of_degree(r.ngens(), deg)
            .into_iter()
            .map(|m| (m, rng.scalar(p) as i64)),
    )
}

fn linear_space(n: usize, codim: usize) -> Ideal {
    let r = common::ring(n);
    Ideal::new(&r, (0..codim).map(|j| Polynomial::var(&r, j)).collect()).unwrap()
}

#[test]
fn twisted_cubic() {
    let tc = common::twisted_cubic();
    let rng = SeededRng::new(1);
    assert_eq!(
        segre_class(&tc, &common::verified(), &rng).unwrap(),
        class(3, &[0, 0, 3, -10])
    );
    // A smooth rational curve of degree 3: c_SM = 3h^2 + chi(P^1) h^3.
    for alg in [
        CsmAlgorithm::Auto,
        CsmAlgorithm::Smooth,
        CsmAlgorithm::InclusionExclusion,
    ] {
        let rep = compute_csm(&tc, alg, &Settings::default(), &rng).unwrap();
        assert_eq!(rep.csm, class(3, &[0, 0, 3, 2]), "{alg:?}");
        assert_eq!(rep.dim, 1);
    }
}

#[test]
fn linear_subspaces() {
    for n in 1..=5 {
        for c in 1..=n {
            let id = linear_space(n, c);
            let want =
                &ChowClass::linear(n, 1).pow((n - c + 1) as u32) * &ChowClass::monomial(n, c, 1);
            let rep = compute_csm(
                &id,
                CsmAlgorithm::Auto,
                &Settings::default(),
                &SeededRng::new(2),
            )
            .unwrap();
            assert_eq!(rep.csm, want, "P^{} in P^{n}", n - c);
            assert_eq!(rep.euler, BigInt::from(n - c + 1));
        }
    }
}

#[test]
fn quadric_surface() {
    let q = common::quadric_surface();
    for alg in [
        CsmAlgorithm::Auto,
        CsmAlgorithm::Direct,
        CsmAlgorithm::InclusionExclusion,
        CsmAlgorithm::Smooth,
    ] {
        let rep = compute_csm(&q, alg, &Settings::default(), &SeededRng::new(3)).unwrap();
        assert_eq!(rep.csm, class(3, &[0, 2, 4, 4]), "{alg:?}");
        assert_eq!(rep.euler, BigInt::from(4));
        assert_eq!(
            rep.profile.values,
            vec![BigInt::from(4), BigInt::from(2), BigInt::from(2)]
        );
    }
}

#[test]
fn smooth_complete_intersections() {
    let mut rng = SeededRng::new(77);
    for (n, degrees) in [
        (3, vec![2]),
        (3, vec![3]),
        (4, vec![2, 2]),
        (4, vec![2, 3]),
        (5, vec![2, 2, 2]),
        (3, vec![1, 2]),
    ] {
        let r = common::ring(n);
        let id = Ideal::new(
            &r,
            degrees
                .iter()
                .map(|&d| random_form(&r, d, &mut rng))
                .collect(),
        )
        .unwrap();
        assert!(is_smooth(&id).unwrap());
        let s = segre_class(&id, &Settings::default(), &SeededRng::new(5)).unwrap();
        assert_eq!(
            s,
            segre_complete_intersection(&degrees, n),
            "{degrees:?} in P^{n}"
        );
        let direct = csm_ci_direct(&id, &Settings::default(), &SeededRng::new(6)).unwrap();
        assert_eq!(direct.csm, cfj_complete_intersection(&degrees, n));
        assert!(direct.milnor.is_zero());
    }
}

#[test]
fn closed_forms() {
    assert_eq!(
        segre_complete_intersection(&[2, 2], 4),
        class(4, &[0, 0, 4, -16, 48])
    );
    assert_eq!(
        segre_complete_intersection(&[6, 6], 4),
        class(4, &[0, 0, 36, -432, 3888])
    );
    assert_eq!(tangent_class(2), class(2, &[1, 3, 3]));
    // Smooth plane cubic: chi = 0.
    assert_eq!(cfj_complete_intersection(&[3], 2), class(2, &[0, 3, 0]));
}

#[test]
fn singular_curves_by_the_direct_formula() {
    for (f, mu) in [(common::curves::cusp(), 2), (common::curves::node(), 1)] {
        let id = Ideal::new(f.ring(), vec![f.clone()]).unwrap();
        let r = csm_ci_direct(&id, &Settings::default(), &SeededRng::new(4)).unwrap();
        assert_eq!(r.milnor, class(2, &[0, 0, mu]));
        assert_eq!(r.cfj, class(2, &[0, 3, 0]));
        assert_eq!(r.csm, class(2, &[0, 3, mu]));
        assert_eq!(
            milnor_class(&id, &Settings::default(), &SeededRng::new(4)).unwrap(),
            r.milnor
        );
    }
}

#[test]
fn milnor_identity_on_reports() {
    let r = common::ring(3);
    let cone = common::ideal(
        &r,
        vec![common::poly(
            &r,
            &[(1, &[2, 0, 0, 0]), (1, &[0, 2, 0, 0]), (1, &[0, 0, 2, 0])],
        )],
    );
    for id in [common::quadric_surface(), cone] {
        for alg in [
            CsmAlgorithm::Auto,
            CsmAlgorithm::Direct,
            CsmAlgorithm::InclusionExclusion,
        ] {
            let rep = compute_csm(&id, alg, &Settings::default(), &SeededRng::new(9)).unwrap();
            assert!(rep.cfj.is_some() && rep.milnor.is_some(), "{alg:?}");
            assert!(rep.milnor_identity_holds(), "{alg:?}");
        }
    }
}

#[test]
fn quadric_cone() {
    // A cone over a conic: chi = 1 + chi(conic) = 3.
    let r = common::ring(3);
    let cone = common::ideal(
        &r,
        vec![common::poly(
            &r,
            &[(1, &[2, 0, 0, 0]), (1, &[0, 2, 0, 0]), (1, &[0, 0, 2, 0])],
        )],
    );
    let rep = compute_csm(
        &cone,
        CsmAlgorithm::Auto,
        &Settings::default(),
        &SeededRng::new(1),
    )
    .unwrap();
    assert_eq!(rep.csm, class(3, &[0, 2, 4, 3]));
}

#[test]
fn minimal_generators_drop_redundancy() {
    let r = common::ring(2);
    let x = |i| Polynomial::var(&r, i);
    let id = common::ideal(
        &r,
        vec![x(0), &x(0) + &x(1), x(1), &x(0) * &x(2), &x(1) * &x(1)],
    );
    let min = id.minimal_generators().unwrap();
    assert_eq!(min.len(), 2);
    assert!(min.generators().iter().all(|g| id.contains(g)));
    assert!(id.generators().iter().all(|g| min.contains(g)));

    let tc = common::twisted_cubic();
    let sat = tc.groebner().to_ideal();
    assert_eq!(sat.minimal_generators().unwrap().len(), 3);
}

#[test]
fn minimal_generators_keep_the_segre_class() {
    // The reduced basis of the singular scheme of a cone has higher degree
    // than its minimal generators; both give the same class.
    let r = common::ring(3);
    let x = |i| Polynomial::var(&r, i);
    let id = common::ideal(
        &r,
        vec![x(0), x(1), &x(0) * &x(3), &(&x(1) * &x(2)) * &x(2)],
    );
    let direct = segre_class(
        &common::ideal(&r, vec![x(0), x(1)]),
        &common::verified(),
        &SeededRng::new(3),
    )
    .unwrap();
    assert_eq!(
        segre_class(&id, &common::verified(), &SeededRng::new(3)).unwrap(),
        direct
    );
    assert_eq!(direct, segre_complete_intersection(&[1, 1], 3));
}

#[test]
fn singular_subscheme_of_a_cone_is_the_vertex() {
    let r = common::ring(3);
    let cone = common::ideal(
        &r,
        vec![common::poly(
            &r,
            &[(1, &[2, 0, 0, 0]), (1, &[0, 2, 0, 0]), (1, &[0, 0, 2, 0])],
        )],
    );
    let y = singularity_subscheme(&cone, &Settings::default(), &SeededRng::new(1)).unwrap();
    assert_eq!(y.krull_dimension(), 0);
    let s = segre_class(&y, &Settings::default(), &SeededRng::new(1)).unwrap();
    assert_eq!(s, class(3, &[0, 0, 0, 1]));
}

#[test]
fn zero_and_unit_ideals() {
    let r = common::ring(3);
    let zero = Ideal::new(&r, vec![]).unwrap();
    let unit = Ideal::unit(&r);
    let s = Settings::default();
    let rng = SeededRng::new(1);
    assert_eq!(segre_class(&zero, &s, &rng).unwrap(), ChowClass::one(3));
    assert!(segre_class(&unit, &s, &rng).unwrap().is_zero());
    for alg in [CsmAlgorithm::Auto, CsmAlgorithm::InclusionExclusion] {
        let amb = compute_csm(&zero, alg, &s, &rng).unwrap();
        assert_eq!(amb.csm, tangent_class(3));
        assert_eq!(amb.euler, BigInt::from(4));
        let empty = compute_csm(&unit, alg, &s, &rng).unwrap();
        assert!(empty.csm.is_zero());
        assert_eq!(empty.dim, -1);
    }
}

#[test]
fn non_complete_intersections_reject_direct() {
    let err = compute_csm(
        &common::twisted_cubic(),
        CsmAlgorithm::Direct,
        &Settings::default(),
        &SeededRng::new(1),
    );
    assert!(err.is_err());
}

#[test]
fn same_seed_same_report() {
    let tc = common::twisted_cubic();
    let a = compute_csm(
        &tc,
        CsmAlgorithm::InclusionExclusion,
        &Settings::default(),
        &SeededRng::new(42),
    )
    .unwrap();
    let b = compute_csm(
        &tc,
        CsmAlgorithm::InclusionExclusion,
        &Settings::default(),
        &SeededRng::new(42),
    )
    .unwrap();
    let c = compute_csm(
        &tc,
        CsmAlgorithm::InclusionExclusion,
        &common::serial(),
        &SeededRng::new(42),
    )
    .unwrap();
    assert_eq!(a, b);
    assert_eq!(a, c);
    assert_eq!(a.seed, 42);
}
