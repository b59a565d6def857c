#![allow(dead_code)]

use std::sync::Arc;

use csmcalc::charclass::Settings;
use csmcalc::{FieldSpec, Ideal, Monomial, Polynomial, Ring};

pub fn ring(n: usize) -> Arc<Ring> {
    Ring::projective(FieldSpec::default(), n).unwrap()
}

/// `sum c * x^e` from `(c, exponents)` pairs.
pub fn poly(r: &Arc<Ring>, terms: &[(i64, &[u32])]) -> Polynomial {
    Polynomial::from_terms(
        r,
        terms.iter().map(|(c, e)| (Monomial::from_exponents(e), *c)),
    )
}

pub fn ideal(r: &Arc<Ring>, gens: Vec<Polynomial>) -> Ideal {
    Ideal::new(r, gens).unwrap()
}

pub fn verified() -> Settings {
    Settings {
        verify: true,
        ..Settings::default()
    }
}

pub fn serial() -> Settings {
    Settings {
        parallel: false,
        ..Settings::default()
    }
}

/// `x0 x3 - x1 x2`.
pub fn quadric_surface() -> Ideal {
    let r = ring(3);
    ideal(
        &r,
        vec![poly(&r, &[(1, &[1, 0, 0, 1]), (-1, &[0, 1, 1, 0])])],
    )
}

/// The twisted cubic, cut out by the 2x2 minors of `[[x0,x1,x2],[x1,x2,x3]]`.
pub fn twisted_cubic() -> Ideal {
    let r = ring(3);
    ideal(
        &r,
        vec![
            poly(&r, &[(1, &[1, 0, 1, 0]), (-1, &[0, 2, 0, 0])]),
            poly(&r, &[(1, &[1, 0, 0, 1]), (-1, &[0, 1, 1, 0])]),
            poly(&r, &[(1, &[0, 1, 0, 1]), (-1, &[0, 0, 2, 0])]),
        ],
    )
}

/// `sum_i x_i^d`.
pub fn fermat(r: &Arc<Ring>, d: u32) -> Polynomial {
    let terms: Vec<(i64, Vec<u32>)> = (0..r.ngens())
        .map(|i| {
            let mut e = vec![0; r.ngens()];
            e[i] = d;
            (1, e)
        })
        .collect();
    Polynomial::from_terms(
        r,
        terms.iter().map(|(c, e)| (Monomial::from_exponents(e), *c)),
    )
}

/// `sum_i w_i x_i^d`.
pub fn weighted_fermat(r: &Arc<Ring>, d: u32, w: &[i64]) -> Polynomial {
    Polynomial::from_terms(
        r,
        w.iter().enumerate().map(|(i, &c)| {
            let mut e = vec![0; r.ngens()];
            e[i] = d;
            (Monomial::from_exponents(&e), c)
        }),
    )
}

pub mod curves {
    use super::*;

    pub fn conic() -> Polynomial {
        let r = ring(2);
        poly(&r, &[(1, &[2, 0, 0]), (1, &[0, 2, 0]), (1, &[0, 0, 2])])
    }

    /// `y^2 z - x^3`.
    pub fn cusp() -> Polynomial {
        let r = ring(2);
        poly(&r, &[(1, &[0, 2, 1]), (-1, &[3, 0, 0])])
    }

    /// `y^2 z - x^3 - x^2 z`.
    pub fn node() -> Polynomial {
        let r = ring(2);
        poly(&r, &[(1, &[0, 2, 1]), (-1, &[3, 0, 0]), (-1, &[2, 0, 1])])
    }

    /// `x^3 + y^3 + z^3`.
    pub fn smooth_cubic() -> Polynomial {
        fermat(&ring(2), 3)
    }

    /// `x y z`: three lines, three nodes.
    pub fn triangle() -> Polynomial {
        let r = ring(2);
        poly(&r, &[(1, &[1, 1, 1])])
    }

    /// `(x^2 + y^2 + z^2)(x^2 - 2 y^2 + 3 z^2)`: two conics meeting in four nodes.
    pub fn two_conics() -> Polynomial {
        let r = ring(2);
        let a = poly(&r, &[(1, &[2, 0, 0]), (1, &[0, 2, 0]), (1, &[0, 0, 2])]);
        let b = poly(&r, &[(1, &[2, 0, 0]), (-2, &[0, 2, 0]), (3, &[0, 0, 2])]);
        &a * &b
    }

    /// `x^3 - y^3` times `z`: three concurrent lines and a fourth line, one
    /// ordinary triple point (mu 4) and three nodes.
    pub fn star_and_line() -> Polynomial {
        let r = ring(2);
        poly(&r, &[(1, &[3, 0, 1]), (-1, &[0, 3, 1])])
    }
}
