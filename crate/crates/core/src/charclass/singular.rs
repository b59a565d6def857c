use super::projdeg::codimension;
use super::Settings;
use crate::error::{Error, Result};
use crate::groebner::{jacobian_minors, Ideal};
use crate::ring::SeededRng;

/// `I + (c x c minors of the Jacobian)` with `c = codim V(I)`. For a complete
/// intersection `c` is the number of generators.
pub fn jacobian_ideal(ideal: &Ideal) -> Result<Ideal> {
    if ideal.is_zero() {
        return Err(Error::Precondition(
            "the zero ideal has no singular locus".into(),
        ));
    }
    let n = ideal.ring().n();
    let c = codimension(ideal);
    if c > n {
        return Ok(ideal.clone());
    }
    let minors = jacobian_minors(ideal.generators(), c)?;
    ideal.sum(&minors)
}

/// Ideal of the singularity subscheme: the Jacobian ideal saturated by the
/// irrelevant ideal. The unit ideal when `V(I)` is smooth.
pub fn singularity_subscheme(ideal: &Ideal, settings: &Settings, rng: &SeededRng) -> Result<Ideal> {
    let k = jacobian_ideal(ideal)?;
    if k.krull_dimension() < 0 {
        return Ok(Ideal::unit(ideal.ring()));
    }
    k.saturate_irrelevant(settings.saturation, &mut rng.derive(0))
}

/// Whether `V(I)` is smooth, assuming it is equidimensional.
pub fn is_smooth(ideal: &Ideal) -> Result<bool> {
    Ok(jacobian_ideal(ideal)?.krull_dimension() < 0)
}
