//! Lower bounds on the chance that random scalars drawn from a set of size
//! `|S|` give correct projective degrees and Segre classes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `D = (m + n + 1) 2^n (d + 1)^(m + 1)`.
pub fn degree_bound(n: u32, m: u32, d: u32) -> BigInt {
    BigInt::from(m + n + 1) * BigInt::from(2).pow(n) * BigInt::from(d + 1).pow(m + 1)
}

/// `1 - a / s`, or `None` if negative.
fn factor(a: &BigInt, s: &BigInt) -> Option<BigRational> {
    let f = BigRational::one() - BigRational::new(a.clone(), s.clone());
    (!f.is_negative()).then_some(f)
}

/// `(1 - d^(2i)/|S|)(1 - D/|S|)`, clamped at zero.
pub fn projective_degree_success_bound(
    i: u32,
    d: u32,
    n: u32,
    m: u32,
    set_size: &BigInt,
) -> BigRational {
    assert!(set_size.is_positive(), "the sample set must be nonempty");
    let big_d = degree_bound(n, m, d);
    match (
        factor(&BigInt::from(d).pow(2 * i), set_size),
        factor(&big_d, set_size),
    ) {
        (Some(a), Some(b)) => a * b,
        _ => BigRational::zero(),
    }
}

/// `(1 - D/|S|)^(min(m,n) - codim) prod_{i=codim}^{min(m,n)} (1 - d^(2i)/|S|)`,
/// clamped at zero. The exponent is taken as zero when `codim` exceeds `min(m, n)`.
pub fn segre_success_bound(n: u32, m: u32, d: u32, codim: u32, set_size: &BigInt) -> BigRational {
    assert!(set_size.is_positive(), "the sample set must be nonempty");
    let top = m.min(n);
    let Some(base) = factor(&degree_bound(n, m, d), set_size) else {
        return if codim > top {
            BigRational::one()
        } else {
            BigRational::zero()
        };
    };
    let mut out = num_traits::pow(base, top.saturating_sub(codim) as usize);
    for i in codim..=top {
        match factor(&BigInt::from(d).pow(2 * i), set_size) {
            Some(f) => out *= f,
            None => return BigRational::zero(),
        }
    }
    out
}

/// All bounds for one problem size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbabilityBound {
    pub n: u32,
    pub m: u32,
    pub d: u32,
    pub codim: u32,
    pub set_size: BigInt,
    pub degree_bound: BigInt,
    /// Bound for `g_i`, `i = 0..=n`.
    pub per_degree: Vec<BigRational>,
    pub segre: BigRational,
}

pub fn probability_bound(
    n: u32,
    m: u32,
    d: u32,
    codim: u32,
    set_size: &BigInt,
) -> ProbabilityBound {
    ProbabilityBound {
        n,
        m,
        d,
        codim,
        set_size: set_size.clone(),
        degree_bound: degree_bound(n, m, d),
        per_degree: (0..=n)
            .map(|i| projective_degree_success_bound(i, d, n, m, set_size))
            .collect(),
        segre: segre_success_bound(n, m, d, codim, set_size),
    }
}

/// Decimal expansion of a non-negative rational, truncated to `places` digits.
pub fn to_decimal(r: &BigRational, places: u32) -> String {
    let scale = BigInt::from(10).pow(places);
    let scaled = (r * BigRational::from_integer(scale.clone()))
        .floor()
        .to_integer();
    let int = &scaled / &scale;
    let frac = (&scaled % &scale).to_string();
    if places == 0 {
        return int.to_string();
    }
    format!("{int}.{}{frac}", "0".repeat(places as usize - frac.len()))
}
