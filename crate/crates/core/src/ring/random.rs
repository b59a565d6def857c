use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Monomial, Polynomial, Ring};
use crate::error::{Error, Result};

/// Reproducible random stream. Child streams are derived from the root seed
/// by index so independent tasks can run in any order.
#[derive(Clone, Debug)]
pub struct SeededRng {
    root: u64,
    inner: ChaCha8Rng,
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng {
            root: seed,
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn root(&self) -> u64 {
        self.root
    }

    /// Independent child stream number `index`.
    pub fn derive(&self, index: u64) -> SeededRng {
        SeededRng::new(splitmix64(self.root ^ splitmix64(index.wrapping_add(1))))
    }

    /// Uniform element of GF(p).
    pub fn scalar(&mut self, p: u32) -> u32 {
        self.inner.random_range(0..p)
    }

    /// Uniform nonzero element of GF(p).
    pub fn nonzero_scalar(&mut self, p: u32) -> u32 {
        self.inner.random_range(1..p)
    }
}

/// `sum_j lambda_j * polys[j]` with uniform `lambda_j`. Returns the combination
/// together with the scalars drawn.
pub fn random_linear_combination(
    polys: &[Polynomial],
    rng: &mut SeededRng,
) -> Result<(Polynomial, Vec<u32>)> {
    let first = polys.first().ok_or(Error::EmptyInput)?;
    let ring = first.ring().clone();
    let degree = first.total_degree().unwrap_or(0);
    for f in polys {
        if f.ring() != &ring {
            return Err(Error::RingMismatch);
        }
        if let Some(d) = f.total_degree() {
            if d != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: d,
                });
            }
        }
    }
    let p = ring.field().modulus();
    let scalars: Vec<u32> = polys.iter().map(|_| rng.scalar(p)).collect();
    Ok((combine(&ring, polys, &scalars), scalars))
}

/// `sum_j scalars[j] * polys[j]` accumulated in a single pass.
pub(crate) fn combine(ring: &Arc<Ring>, polys: &[Polynomial], scalars: &[u32]) -> Polynomial {
    let field = ring.field();
    let mut acc: std::collections::HashMap<Monomial, u32> = std::collections::HashMap::new();
    for (f, &c) in polys.iter().zip(scalars) {
        if c == 0 {
            continue;
        }
        for t in f.terms() {
            let slot = acc.entry(t.mono).or_insert(0);
            *slot = field.add(*slot, field.mul(c, t.coeff));
        }
    }
    Polynomial::from_terms(ring, acc.into_iter().map(|(m, c)| (m, c as i64)))
}

/// A random linear form in the non-auxiliary variables: `sum mu_j x_j`, or
/// `1 - sum nu_j x_j` when `affine` is set.
pub fn random_linear_form(ring: &Arc<Ring>, affine: bool, rng: &mut SeededRng) -> Polynomial {
    let p = ring.field().modulus();
    let mut terms: Vec<(Monomial, i64)> = (0..ring.ngens())
        .map(|j| {
            let c = rng.scalar(p) as i64;
            (Monomial::var(j), if affine { -c } else { c })
        })
        .collect();
    if affine {
        terms.push((Monomial::one(), 1));
    }
    Polynomial::from_terms(ring, terms)
}
