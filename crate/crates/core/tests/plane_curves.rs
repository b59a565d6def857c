//! Polar degrees and Euler characteristics of plane curves against classical formulas.

mod common;

use common::curves;
use csmcalc::charclass::{
    compute_csm, csm_hypersurface_polar, csm_hypersurface_singular, monomials_of_degree,
    projective_degrees, CsmAlgorithm, HypersurfaceMethod, Settings,
};
use csmcalc::{ChowClass, Ideal, Polynomial, SeededRng};
use num_bigint::BigInt;

fn gradient(f: &Polynomial) -> Ideal {
    let grad = (0..3)
        .map(|j| f.partial_derivative(j).unwrap())
        .filter(|g| !g.is_zero())
        .collect();
    Ideal::new(f.ring(), grad).unwrap()
}

/// Sum of Tjurina numbers, read off the stable Hilbert function of the gradient
/// ideal. Equals the total Milnor number for quasi-homogeneous singularities.
fn total_milnor(f: &Polynomial) -> u64 {
    let leads = gradient(f).groebner().leading_monomials();
    let h = |k: u32| {
        monomials_of_degree(3, k)
            .iter()
            .filter(|m| !leads.iter().any(|l| l.divides(m)))
            .count() as u64
    };
    let (a, b) = (h(24), h(25));
    assert_eq!(a, b, "Hilbert function not yet stable");
    a
}

fn degree(f: &Polynomial) -> u64 {
    f.total_degree().unwrap() as u64
}

struct Case {
    name: &'static str,
    f: Polynomial,
    mu: u64,
}

fn cases() -> Vec<Case> {
    vec![
        Case {
            name: "conic",
            f: curves::conic(),
            mu: 0,
        },
        Case {
            name: "cusp",
            f: curves::cusp(),
            mu: 2,
        },
        Case {
            name: "node",
            f: curves::node(),
            mu: 1,
        },
        Case {
            name: "smooth cubic",
            f: curves::smooth_cubic(),
            mu: 0,
        },
        Case {
            name: "triangle",
            f: curves::triangle(),
            mu: 3,
        },
        Case {
            name: "two conics",
            f: curves::two_conics(),
            mu: 4,
        },
        Case {
            name: "star and line",
            f: curves::star_and_line(),
            mu: 7,
        },
    ]
}

#[test]
fn milnor_oracle_matches_hand_counts() {
    for c in cases() {
        assert_eq!(total_milnor(&c.f), c.mu, "{}", c.name);
    }
}

#[test]
fn gradient_degrees_follow_the_polar_formula() {
    for c in cases() {
        let d = degree(&c.f);
        let pd =
            projective_degrees(&gradient(&c.f), &common::verified(), &SeededRng::new(11)).unwrap();
        let top = (d - 1).pow(2) - c.mu;
        assert_eq!(pd.g, vec![1, d - 1, top], "{}", c.name);
    }
}

#[test]
fn named_gradient_degrees() {
    let g = |f: Polynomial| {
        projective_degrees(&gradient(&f), &common::verified(), &SeededRng::new(3))
            .unwrap()
            .g
    };
    assert_eq!(g(curves::conic()), vec![1, 1, 1]);
    assert_eq!(g(curves::cusp()), vec![1, 2, 2]);
    assert_eq!(g(curves::node()), vec![1, 2, 3]);
}

#[test]
fn euler_characteristic_of_reduced_curves() {
    for c in cases() {
        let d = degree(&c.f) as i64;
        let want = 3 * d - d * d + c.mu as i64;
        let csm = csm_hypersurface_polar(&c.f, &Settings::default(), &SeededRng::new(5)).unwrap();
        assert_eq!(*csm.degree_zero_part(), BigInt::from(want), "{}", c.name);
        assert_eq!(*csm.coeff(1), BigInt::from(d), "{}: degree", c.name);
    }
}

#[test]
fn hypersurface_routes_agree() {
    for c in cases() {
        let rng = SeededRng::new(21);
        let polar = csm_hypersurface_polar(&c.f, &Settings::default(), &rng).unwrap();
        let singular = csm_hypersurface_singular(&c.f, &Settings::default(), &rng).unwrap();
        assert_eq!(polar, singular, "{}", c.name);
    }
}

#[test]
fn inclusion_exclusion_with_either_route() {
    // A general line meets the cuspidal cubic in three points.
    let f = curves::cusp();
    let r = f.ring().clone();
    let line = common::poly(&r, &[(1, &[1, 0, 0]), (2, &[0, 1, 0]), (-3, &[0, 0, 1])]);
    let id = Ideal::new(&r, vec![f, line]).unwrap();
    for method in [
        HypersurfaceMethod::Polar,
        HypersurfaceMethod::SingularScheme,
    ] {
        let settings = Settings {
            hypersurface: method,
            ..Settings::default()
        };
        let rep = compute_csm(
            &id,
            CsmAlgorithm::InclusionExclusion,
            &settings,
            &SeededRng::new(8),
        )
        .unwrap();
        assert_eq!(rep.csm, ChowClass::from_coeffs(2, [0, 0, 3]), "{method:?}");
    }
}

#[test]
fn constant_and_zero_polynomials_are_rejected() {
    let r = common::ring(2);
    let s = Settings::default();
    let rng = SeededRng::new(1);
    assert!(csm_hypersurface_polar(&Polynomial::zero(&r), &s, &rng).is_err());
    assert!(csm_hypersurface_singular(&Polynomial::constant(&r, 4), &s, &rng).is_err());
}
