use num_bigint::BigInt;

use super::projdeg::{projective_degrees, ProjectiveDegrees};
use super::Settings;
use crate::chow::ChowClass;
use crate::error::Result;
use crate::groebner::Ideal;
use crate::ring::SeededRng;

/// `1 - sum_i g_i h^i / (1 + d h)^(i+1)`.
pub fn segre_from_degrees(pd: &ProjectiveDegrees) -> ChowClass {
    let n = pd.n();
    let inv = ChowClass::linear(n, pd.d as i64)
        .invert_unit()
        .expect("1 + dh is a unit");
    let mut power = inv.clone();
    let mut sum = ChowClass::zero(n);
    for (i, &g) in pd.g.iter().enumerate() {
        if g != 0 {
            sum = &sum + &(&ChowClass::monomial(n, i, 1) * &power).scale(&BigInt::from(g));
        }
        power = &power * &inv;
    }
    &ChowClass::one(n) - &sum
}

/// Segre class of `V(I)` in `P^n`, pushed forward to `A*(P^n)`.
pub fn segre_class(ideal: &Ideal, settings: &Settings, rng: &SeededRng) -> Result<ChowClass> {
    let n = ideal.ring().n();
    if ideal.is_zero() {
        return Ok(ChowClass::one(n));
    }
    if ideal.generators().iter().any(|g| g.is_constant()) {
        return Ok(ChowClass::zero(n));
    }
    // the class only depends on the scheme, and fewer low-degree generators
    // make every slice system smaller
    let minimal = ideal.minimal_generators()?;
    if minimal.generators().iter().any(|g| g.is_constant()) {
        return Ok(ChowClass::zero(n));
    }
    Ok(segre_from_degrees(&projective_degrees(
        &minimal, settings, rng,
    )?))
}

/// `prod_i d_i h / (1 + d_i h)`: the Segre class of a complete intersection
/// with these generator degrees.
pub fn segre_complete_intersection(degrees: &[u32], n: usize) -> ChowClass {
    degrees.iter().fold(ChowClass::one(n), |acc, &d| {
        let d = d as i64;
        let f = &ChowClass::monomial(n, 1, d) * &ChowClass::linear(n, d).invert_unit().unwrap();
        &acc * &f
    })
}
