//! Projective degrees, Segre classes and characteristic classes of subschemes of `P^n`.

mod csm;
mod projdeg;
mod segre;
mod singular;

use std::fmt;

use num_bigint::BigInt;

use crate::chow::{ChowClass, EulerProfile};
use crate::error::{Error, Result};
use crate::groebner::{Ideal, SaturationMode};
use crate::ring::SeededRng;

pub use csm::{
    cfj_complete_intersection, csm_ci_direct, csm_from_gradient_degrees, csm_hypersurface,
    csm_hypersurface_polar, csm_hypersurface_singular, csm_inclusion_exclusion,
    csm_partial_inclusion_exclusion, csm_smooth, direct_with_last, milnor_from_singular_segre,
    tangent_class, twisted_bundle_class, DirectResult, INCLUSION_EXCLUSION_WARN_GENERATORS,
};
pub use projdeg::{
    codimension, equalize_degrees, monomials_of_degree, projective_degrees, ProjectiveDegrees,
};
pub use segre::{segre_class, segre_complete_intersection, segre_from_degrees};
pub use singular::{is_smooth, jacobian_ideal, singularity_subscheme};

/// Knobs shared by every randomized computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Settings {
    /// Degenerate draws tolerated per projective degree before giving up.
    pub retries: usize,
    /// Successful slice draws per projective degree. The largest count is kept:
    /// a special draw can only lose solutions, never create them.
    pub draws: usize,
    /// Compute every projective degree instead of filling in the known ones.
    pub verify: bool,
    pub saturation: SaturationMode,
    /// Run independent sub-computations on the rayon pool.
    pub parallel: bool,
    pub hypersurface: HypersurfaceMethod,
}

/// How the CSM class of a single hypersurface is obtained.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum HypersurfaceMethod {
    /// Projective degrees of the gradient map.
    Polar,
    /// Segre class of the singularity subscheme.
    #[default]
    SingularScheme,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            retries: 3,
            draws: 2,
            verify: false,
            saturation: SaturationMode::default(),
            parallel: true,
            hypersurface: HypersurfaceMethod::default(),
        }
    }
}

/// Which CSM algorithm to run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum CsmAlgorithm {
    #[default]
    Auto,
    Direct,
    Hybrid,
    InclusionExclusion,
    Smooth,
}

/// The branch that actually produced a class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Method {
    /// `V` is all of `P^n`.
    Ambient,
    /// `V` is empty.
    Empty,
    SmoothCompleteIntersection,
    Smooth,
    Direct,
    /// Partial inclusion-exclusion over the listed generators.
    PartialInclusionExclusion(Vec<usize>),
    InclusionExclusion,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Ambient => write!(f, "ambient"),
            Method::Empty => write!(f, "empty"),
            Method::SmoothCompleteIntersection => write!(f, "smooth-ci"),
            Method::Smooth => write!(f, "smooth"),
            Method::Direct => write!(f, "direct"),
            Method::PartialInclusionExclusion(d) => {
                let list: Vec<String> = d.iter().map(|k| k.to_string()).collect();
                write!(f, "partial-incl-excl[{}]", list.join(","))
            }
            Method::InclusionExclusion => write!(f, "incl-excl"),
        }
    }
}

/// Everything computed for one scheme.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub n: usize,
    /// Projective dimension of `V`, `-1` when empty.
    pub dim: i64,
    pub csm: ChowClass,
    pub euler: BigInt,
    pub profile: EulerProfile,
    /// Segre class of the singularity subscheme for the direct branches, of `V` for the smooth branches.
    pub segre: Option<ChowClass>,
    pub cfj: Option<ChowClass>,
    pub milnor: Option<ChowClass>,
    pub method: Method,
    pub seed: u64,
    /// Number of direct-formula evaluations.
    pub direct_calls: usize,
    /// Number of hypersurface CSM evaluations.
    pub hypersurface_calls: usize,
}

impl ClassReport {
    fn new(dim: i64, csm: ChowClass, method: Method, seed: u64) -> Result<ClassReport> {
        let n = csm.n();
        let profile = if dim >= 0 {
            csm.euler_profile(dim as usize)?
        } else {
            EulerProfile { values: Vec::new() }
        };
        Ok(ClassReport {
            n,
            dim,
            euler: csm.degree_zero_part().clone(),
            profile,
            csm,
            segre: None,
            cfj: None,
            milnor: None,
            method,
            seed,
            direct_calls: 0,
            hypersurface_calls: 0,
        })
    }

    pub fn codim(&self) -> usize {
        (self.n as i64 - self.dim) as usize
    }

    /// Attaches `c_FJ` for the given generator degrees and the resulting Milnor class.
    fn with_fulton_johnson(mut self, degrees: &[u32]) -> ClassReport {
        let cfj = cfj_complete_intersection(degrees, self.n);
        self.milnor = Some(milnor_from_classes(&cfj, &self.csm, self.codim()));
        self.cfj = Some(cfj);
        self
    }

    /// `milnor = (-1)^codim (cfj - csm)` whenever both are present.
    pub fn milnor_identity_holds(&self) -> bool {
        match (&self.cfj, &self.milnor) {
            (Some(cfj), Some(m)) => milnor_from_classes(cfj, &self.csm, self.codim()) == *m,
            _ => true,
        }
    }
}

/// `(-1)^codim (c_FJ - c_SM)`.
pub fn milnor_from_classes(cfj: &ChowClass, csm: &ChowClass, codim: usize) -> ChowClass {
    let diff = cfj - csm;
    if codim.is_multiple_of(2) {
        diff
    } else {
        -&diff
    }
}

/// Runs the chosen algorithm on `V(I)`.
pub fn compute_csm(
    ideal: &Ideal,
    algorithm: CsmAlgorithm,
    settings: &Settings,
    rng: &SeededRng,
) -> Result<ClassReport> {
    if !ideal.is_homogeneous() {
        return Err(Error::Inhomogeneous);
    }
    let n = ideal.ring().n();
    let seed = rng.root();
    if ideal.is_zero() {
        return ClassReport::new(n as i64, tangent_class(n), Method::Ambient, seed);
    }
    if ideal.generators().iter().any(|g| g.is_constant()) {
        return ClassReport::new(-1, ChowClass::zero(n), Method::Empty, seed);
    }
    let codim = codimension(ideal);
    let dim = n as i64 - codim as i64;
    let degrees = ideal.degrees()?;
    let ci = codim == ideal.len();
    match algorithm {
        CsmAlgorithm::Auto | CsmAlgorithm::Hybrid => csm_hybrid(ideal, settings, rng),
        CsmAlgorithm::Direct => {
            let r = csm_ci_direct(ideal, settings, rng)?;
            let mut report = ClassReport::new(dim, r.csm, Method::Direct, seed)?;
            report.segre = Some(r.singular_segre);
            report.cfj = Some(r.cfj);
            report.milnor = Some(r.milnor);
            report.direct_calls = 1;
            Ok(report)
        }
        CsmAlgorithm::InclusionExclusion => {
            let csm = csm_inclusion_exclusion(ideal, settings, rng)?;
            let mut report = ClassReport::new(dim, csm, Method::InclusionExclusion, seed)?;
            report.hypersurface_calls = (1usize << ideal.len()) - 1;
            Ok(if ci {
                report.with_fulton_johnson(&degrees)
            } else {
                report
            })
        }
        CsmAlgorithm::Smooth => {
            if !is_smooth(ideal)? {
                return Err(Error::NotSmooth);
            }
            let s = segre_class(ideal, settings, rng)?;
            let csm = &tangent_class(n) * &s;
            let mut report = ClassReport::new(dim, csm, Method::Smooth, seed)?;
            report.segre = Some(s);
            Ok(if ci {
                report.with_fulton_johnson(&degrees)
            } else {
                report
            })
        }
    }
}

/// Smooth schemes use a closed form or their Segre class; singular complete
/// intersections use the direct formula over the largest smooth sub-intersection
/// found; everything else falls back to inclusion-exclusion.
pub fn csm_hybrid(ideal: &Ideal, settings: &Settings, rng: &SeededRng) -> Result<ClassReport> {
    let n = ideal.ring().n();
    let seed = rng.root();
    if ideal.is_zero() {
        return ClassReport::new(n as i64, tangent_class(n), Method::Ambient, seed);
    }
    let codim = codimension(ideal);
    let dim = n as i64 - codim as i64;
    let degrees = ideal.degrees()?;
    let count = ideal.len();
    let ci = codim == count;

    if is_smooth(ideal)? {
        if ci {
            let s = segre_complete_intersection(&degrees, n);
            let csm = &tangent_class(n) * &s;
            let mut report = ClassReport::new(dim, csm, Method::SmoothCompleteIntersection, seed)?;
            report.segre = Some(s);
            return Ok(report.with_fulton_johnson(&degrees));
        }
        let s = segre_class(ideal, settings, rng)?;
        let csm = &tangent_class(n) * &s;
        let mut report = ClassReport::new(dim, csm, Method::Smooth, seed)?;
        report.segre = Some(s);
        return Ok(report);
    }

    if ci {
        let ring = ideal.ring();
        let gens = ideal.generators();
        for j in 1..count {
            for dropped in csm::combinations(count, j) {
                let z: Vec<_> = gens
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| !dropped.contains(k))
                    .map(|(_, g)| g.clone())
                    .collect();
                if !is_smooth(&Ideal::new(ring, z)?)? {
                    continue;
                }
                if j == 1 {
                    let r = direct_with_last(ideal, dropped[0], settings, rng)?;
                    let mut report = ClassReport::new(dim, r.csm, Method::Direct, seed)?;
                    report.segre = Some(r.singular_segre);
                    report.direct_calls = 1;
                    return Ok(report.with_fulton_johnson(&degrees));
                }
                let csm = csm_partial_inclusion_exclusion(ideal, &dropped, settings, rng)?;
                let mut report =
                    ClassReport::new(dim, csm, Method::PartialInclusionExclusion(dropped), seed)?;
                report.direct_calls = (1 << j) - 1;
                return Ok(report.with_fulton_johnson(&degrees));
            }
        }
    }

    let csm = csm_inclusion_exclusion(ideal, settings, rng)?;
    let mut report = ClassReport::new(dim, csm, Method::InclusionExclusion, seed)?;
    report.hypersurface_calls = (1 << count) - 1;
    Ok(if ci {
        report.with_fulton_johnson(&degrees)
    } else {
        report
    })
}

/// `(-1)^codim (c_FJ - c_SM)` for a complete intersection.
pub fn milnor_class(ideal: &Ideal, settings: &Settings, rng: &SeededRng) -> Result<ChowClass> {
    let codim = codimension(ideal);
    if codim != ideal.len() {
        return Err(Error::NotCompleteIntersection {
            codim,
            generators: ideal.len(),
        });
    }
    let report = csm_hybrid(ideal, settings, rng)?;
    Ok(milnor_from_classes(
        &cfj_complete_intersection(&ideal.degrees()?, report.n),
        &report.csm,
        codim,
    ))
}

/// `chi(V)`, the degree of the zero-dimensional part of the CSM class.
pub fn euler_characteristic(
    ideal: &Ideal,
    algorithm: CsmAlgorithm,
    settings: &Settings,
    rng: &SeededRng,
) -> Result<BigInt> {
    Ok(compute_csm(ideal, algorithm, settings, rng)?.euler)
}
