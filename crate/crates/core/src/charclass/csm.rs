use num_bigint::BigInt;
use rayon::prelude::*;

use super::projdeg::{codimension, projective_degrees};
use super::segre::{segre_class, segre_complete_intersection};
use super::singular::{is_smooth, singularity_subscheme};
use super::{HypersurfaceMethod, Settings};
use crate::chow::ChowClass;
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::ring::{Polynomial, SeededRng};

/// `c(T P^n) = (1 + h)^(n+1)`.
pub fn tangent_class(n: usize) -> ChowClass {
    ChowClass::linear(n, 1).pow(n as u32 + 1)
}

/// `(1+h)^(n+1) - sum_j g_j (-h)^j (1+h)^(n-j)` for the degrees of a gradient map.
pub fn csm_from_gradient_degrees(g: &[u64], n: usize) -> ChowClass {
    let one_h = ChowClass::linear(n, 1);
    let mut out = tangent_class(n);
    for (j, &gj) in g.iter().enumerate().take(n + 1) {
        if gj == 0 {
            continue;
        }
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let term = &ChowClass::monomial(n, j, sign) * &one_h.pow((n - j) as u32);
        out = &out - &term.scale(&BigInt::from(gj));
    }
    out
}

/// CSM class of the hypersurface `V(f)`, by the route chosen in `settings.hypersurface`.
pub fn csm_hypersurface(f: &Polynomial, settings: &Settings, rng: &SeededRng) -> Result<ChowClass> {
    match settings.hypersurface {
        HypersurfaceMethod::Polar => csm_hypersurface_polar(f, settings, rng),
        HypersurfaceMethod::SingularScheme => csm_hypersurface_singular(f, settings, rng),
    }
}

/// CSM class of `V(f)` as `c_FJ + M`, with the Milnor class taken from the
/// Segre class of the singularity subscheme. The subscheme usually has far
/// fewer minimal generators than the gradient map has components.
pub fn csm_hypersurface_singular(
    f: &Polynomial,
    settings: &Settings,
    rng: &SeededRng,
) -> Result<ChowClass> {
    gradient(f)?;
    Ok(direct_with_last(&Ideal::new(f.ring(), vec![f.clone()])?, 0, settings, rng)?.csm)
}

fn gradient(f: &Polynomial) -> Result<Vec<Polynomial>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if !f.is_homogeneous() {
        return Err(Error::Inhomogeneous);
    }
    let ring = f.ring();
    let grad: Vec<Polynomial> = (0..ring.ngens())
        .map(|j| f.partial_derivative(j))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|g| !g.is_zero())
        .collect();
    if grad.is_empty() {
        return Err(Error::Precondition(format!(
            "all partial derivatives of {f} vanish in characteristic {}",
            ring.field().modulus()
        )));
    }
    Ok(grad)
}

/// CSM class of the hypersurface `V(f)` from the projective degrees of its gradient map.
pub fn csm_hypersurface_polar(
    f: &Polynomial,
    settings: &Settings,
    rng: &SeededRng,
) -> Result<ChowClass> {
    let grad = gradient(f)?;
    let pd = projective_degrees(&Ideal::new(f.ring(), grad)?, settings, rng)?;
    Ok(csm_from_gradient_degrees(&pd.g, f.ring().n()))
}

/// `(1 + h)^(n+1) s(V, P^n)`, valid for smooth `V`.
pub fn csm_smooth(ideal: &Ideal, settings: &Settings, rng: &SeededRng) -> Result<ChowClass> {
    let s = segre_class(ideal, settings, rng)?;
    Ok(&tangent_class(s.n()) * &s)
}

/// `(1+h)^(n+1) prod_i d_i h / (1 + d_i h)`.
pub fn cfj_complete_intersection(degrees: &[u32], n: usize) -> ChowClass {
    &tangent_class(n) * &segre_complete_intersection(degrees, n)
}

/// `c(E^dual ⊗ L)` for `E = ⊕ O(d_i)` and `L = O(d_last)`, i.e.
/// `prod_i (1 + (d_last - d_i) h)`.
pub fn twisted_bundle_class(degrees: &[u32], last: usize, n: usize) -> ChowClass {
    let dl = degrees[last] as i64;
    degrees.iter().fold(ChowClass::one(n), |acc, &d| {
        &acc * &ChowClass::linear(n, dl - d as i64)
    })
}

/// Milnor class of a complete intersection whose generators other than
/// `last` cut out a smooth scheme, from the Segre class of its singularity subscheme.
pub fn milnor_from_singular_segre(
    degrees: &[u32],
    last: usize,
    singular_segre: &ChowClass,
) -> ChowClass {
    let n = singular_segre.n();
    let ce = degrees.iter().fold(ChowClass::one(n), |acc, &d| {
        &acc * &ChowClass::linear(n, d as i64)
    });
    let front = &tangent_class(n) * &ce.invert_unit().expect("unit");
    let twisted = singular_segre
        .dual()
        .tensor_line_bundle(degrees[last] as i64);
    &(&front * &twisted_bundle_class(degrees, last, n)) * &twisted
}

/// Output of the direct complete-intersection algorithm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectResult {
    pub csm: ChowClass,
    pub cfj: ChowClass,
    pub milnor: ChowClass,
    /// Segre class of the singularity subscheme.
    pub singular_segre: ChowClass,
    /// Index of the generator playing the role of the possibly singular last hypersurface.
    pub last: usize,
}

/// CSM class of a complete intersection `V(f_0, ..., f_m)` such that all
/// generators but one cut out a smooth scheme. The generator left out is
/// searched for, trying generators with singular hypersurfaces first.
pub fn csm_ci_direct(ideal: &Ideal, settings: &Settings, rng: &SeededRng) -> Result<DirectResult> {
    let count = ideal.len();
    if count == 0 {
        return Err(Error::EmptyInput);
    }
    let codim = codimension(ideal);
    if codim != count {
        return Err(Error::NotCompleteIntersection {
            codim,
            generators: count,
        });
    }
    let gens = ideal.generators();
    let ring = ideal.ring();
    let last = if count == 1 {
        0
    } else {
        let mut singular = Vec::new();
        let mut smooth = Vec::new();
        for (k, f) in gens.iter().enumerate() {
            if is_smooth(&Ideal::new(ring, vec![f.clone()])?)? {
                smooth.push(k);
            } else {
                singular.push(k);
            }
        }
        let mut found = None;
        for k in singular.into_iter().chain(smooth) {
            let rest = gens
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, g)| g.clone())
                .collect();
            if is_smooth(&Ideal::new(ring, rest)?)? {
                found = Some(k);
                break;
            }
        }
        found.ok_or(Error::NoSmoothOrdering)?
    };
    direct_with_last(ideal, last, settings, rng)
}

/// The direct formula with generator `last` in the distinguished position. The
/// caller guarantees the other generators cut out a smooth scheme.
pub fn direct_with_last(
    ideal: &Ideal,
    last: usize,
    settings: &Settings,
    rng: &SeededRng,
) -> Result<DirectResult> {
    let n = ideal.ring().n();
    let degrees = ideal.degrees()?;
    let m = degrees.len() - 1;
    let y = singularity_subscheme(ideal, settings, &rng.derive(0))?;
    let singular_segre = segre_class(&y, settings, &rng.derive(1))?;
    let milnor = milnor_from_singular_segre(&degrees, last, &singular_segre);
    let cfj = cfj_complete_intersection(&degrees, n);
    let csm = if m % 2 == 0 {
        &cfj + &milnor
    } else {
        &cfj - &milnor
    };
    Ok(DirectResult {
        csm,
        cfj,
        milnor,
        singular_segre,
        last,
    })
}

/// Nonempty subsets of `0..count` as bit masks, in increasing order.
fn nonempty_subsets(count: usize) -> impl Iterator<Item = u32> {
    1u32..(1u32 << count)
}

fn product_of(gens: &[Polynomial], mask: u32) -> Polynomial {
    gens.iter()
        .enumerate()
        .filter(|(k, _)| mask & (1 << k) != 0)
        .fold(Polynomial::constant(gens[0].ring(), 1), |acc, (_, g)| {
            &acc * g
        })
}

fn signed_sum(n: usize, terms: Vec<(u32, ChowClass)>) -> ChowClass {
    terms
        .into_iter()
        .fold(ChowClass::zero(n), |acc, (mask, c)| {
            if mask.count_ones() % 2 == 1 {
                &acc + &c
            } else {
                &acc - &c
            }
        })
}

/// Above this many generators inclusion-exclusion is likely impractical.
pub const INCLUSION_EXCLUSION_WARN_GENERATORS: usize = 12;

/// `sum_S (-1)^(|S|+1) c_SM(V(prod_{i in S} f_i))` over nonempty generator subsets.
pub fn csm_inclusion_exclusion(
    ideal: &Ideal,
    settings: &Settings,
    rng: &SeededRng,
) -> Result<ChowClass> {
    let n = ideal.ring().n();
    if ideal.is_zero() {
        return Ok(tangent_class(n));
    }
    let gens = ideal.generators();
    if gens.len() >= 32 {
        return Err(Error::Precondition(format!(
            "{} generators are too many for inclusion-exclusion",
            gens.len()
        )));
    }
    let term = |mask: u32| -> Result<(u32, ChowClass)> {
        let f = product_of(gens, mask);
        if f.is_constant() {
            return Ok((mask, ChowClass::zero(n)));
        }
        Ok((
            mask,
            csm_hypersurface(&f, settings, &rng.derive(mask as u64))?,
        ))
    };
    let masks: Vec<u32> = nonempty_subsets(gens.len()).collect();
    let terms = if settings.parallel {
        masks
            .into_par_iter()
            .map(term)
            .collect::<Result<Vec<_>>>()?
    } else {
        masks.into_iter().map(term).collect::<Result<Vec<_>>>()?
    };
    Ok(signed_sum(n, terms))
}

/// `sum_S (-1)^(|S|+1) c_SM(Z ∩ V(prod_{i in S} f_i))` over nonempty subsets of
/// the `dropped` generators, where `Z` is cut out by the others and is smooth.
/// Each term comes from the direct formula.
pub fn csm_partial_inclusion_exclusion(
    ideal: &Ideal,
    dropped: &[usize],
    settings: &Settings,
    rng: &SeededRng,
) -> Result<ChowClass> {
    let n = ideal.ring().n();
    let gens = ideal.generators();
    let ring = ideal.ring();
    let kept: Vec<Polynomial> = gens
        .iter()
        .enumerate()
        .filter(|(k, _)| !dropped.contains(k))
        .map(|(_, g)| g.clone())
        .collect();
    let singular: Vec<Polynomial> = dropped.iter().map(|&k| gens[k].clone()).collect();
    let term = |mask: u32| -> Result<(u32, ChowClass)> {
        let mut sub = kept.clone();
        sub.push(product_of(&singular, mask));
        let last = sub.len() - 1;
        let r = direct_with_last(
            &Ideal::new(ring, sub)?,
            last,
            settings,
            &rng.derive(mask as u64),
        )?;
        Ok((mask, r.csm))
    };
    let masks: Vec<u32> = nonempty_subsets(dropped.len()).collect();
    let terms = if settings.parallel {
        masks
            .into_par_iter()
            .map(term)
            .collect::<Result<Vec<_>>>()?
    } else {
        masks.into_iter().map(term).collect::<Result<Vec<_>>>()?
    };
    Ok(signed_sum(n, terms))
}

/// Subsets of `0..count` of size `j`, in lexicographic order.
pub(crate) fn combinations(count: usize, j: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, count: usize, j: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == j {
            out.push(cur.clone());
            return;
        }
        for k in start..count {
            cur.push(k);
            go(k + 1, count, j, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, count, j, &mut Vec::new(), &mut out);
    out
}
