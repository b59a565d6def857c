//! Ideals, Gröbner bases and the ideal-theoretic operations built on them.

mod buchberger;
mod dimension;
mod f4;
mod geobucket;
mod ops;

use std::fmt;
use std::sync::Arc;

pub use dimension::{count_standard_monomials, QuotientDimension};
pub use ops::{intersect, jacobian_minors, saturate, saturate_by_variable, SaturationMode};

use crate::error::{Error, Result};
use crate::ring::{Monomial, MonomialOrder, Polynomial, Ring};

/// An ideal given by generators in a common ring. Zero generators are dropped.
#[derive(Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: Arc<Ring>,
    gens: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: &Arc<Ring>, gens: Vec<Polynomial>) -> Result<Ideal> {
        if gens.iter().any(|g| g.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal {
            ring: ring.clone(),
            gens,
        })
    }

    pub fn unit(ring: &Arc<Ring>) -> Ideal {
        Ideal {
            ring: ring.clone(),
            gens: vec![Polynomial::constant(ring, 1)],
        }
    }

    /// `(x_0, ..., x_n)`.
    pub fn irrelevant(ring: &Arc<Ring>) -> Ideal {
        let gens = (0..ring.ngens())
            .map(|i| Polynomial::var(ring, i))
            .collect();
        Ideal {
            ring: ring.clone(),
            gens,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Emptiness is `is_zero`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Polynomial::is_homogeneous)
    }

    /// Degrees of the generators; errors if one is inhomogeneous.
    pub fn degrees(&self) -> Result<Vec<u32>> {
        self.gens
            .iter()
            .map(|g| g.homogeneous_degree()?.ok_or(Error::Inhomogeneous))
            .collect()
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let gens = self
            .gens
            .iter()
            .flat_map(|f| other.gens.iter().map(move |g| f * g))
            .collect();
        Ideal::new(&self.ring, gens)
    }

    /// Reduced Gröbner basis under the ring's own order.
    pub fn groebner(&self) -> GroebnerBasis {
        let elements = f4::groebner(&self.ring, &self.gens);
        GroebnerBasis {
            ring: self.ring.clone(),
            elements,
        }
    }

    /// Reduced Gröbner basis under `order` (the ideal is moved to a copy of its ring).
    pub fn groebner_with(&self, order: MonomialOrder) -> Result<GroebnerBasis> {
        if order == self.ring.order() {
            return Ok(self.groebner());
        }
        let ring = self.ring.with_order(order)?;
        let gens: Vec<Polynomial> = self.gens.iter().map(|g| g.to_ring(&ring)).collect();
        Ok(Ideal { ring, gens }.groebner())
    }

    /// A minimal homogeneous generating set, drawn from the given generators and
    /// the reduced basis in order of degree. Errors on inhomogeneous ideals.
    pub fn minimal_generators(&self) -> Result<Ideal> {
        if !self.is_homogeneous() {
            return Err(Error::Inhomogeneous);
        }
        let gb = self.groebner();
        if gb.is_unit() {
            return Ok(Ideal::unit(&self.ring));
        }
        let mut candidates: Vec<&Polynomial> = self.gens.iter().chain(gb.elements()).collect();
        candidates.sort_by_key(|g| g.total_degree());
        let mut kept: Vec<Polynomial> = Vec::new();
        let mut kept_gb = GroebnerBasis {
            ring: self.ring.clone(),
            elements: Vec::new(),
        };
        for g in candidates {
            if !kept_gb.normal_form(g).is_zero() {
                kept.push(g.clone());
                kept_gb = kept_gb.extend(std::slice::from_ref(g));
            }
        }
        Ideal::new(&self.ring, kept)
    }

    /// Ideal membership via a Gröbner basis.
    pub fn contains(&self, f: &Polynomial) -> bool {
        self.groebner().normal_form(f).is_zero()
    }

    /// Same ideal presented in `ring` (which must have the same variables).
    pub fn to_ring(&self, ring: &Arc<Ring>) -> Ideal {
        Ideal {
            ring: ring.clone(),
            gens: self.gens.iter().map(|g| g.to_ring(ring)).collect(),
        }
    }

    /// Projective dimension of `V(I)` for homogeneous `I`. The irrelevant and unit
    /// ideals both give `-1`; use [`GroebnerBasis::is_unit`] to tell them apart.
    pub fn krull_dimension(&self) -> i64 {
        dimension::projective_dimension(&self.groebner_with(MonomialOrder::GrevLex).unwrap())
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.gens.iter().map(|g| g.to_string()))
            .finish()
    }
}

/// A reduced Gröbner basis: monic, minimal, tail-reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .filter_map(Polynomial::leading_monomial)
            .collect()
    }

    pub fn is_unit(&self) -> bool {
        self.elements
            .iter()
            .any(|g| g.leading_monomial().is_some_and(|m| m.is_one()))
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        assert_eq!(f.ring(), &self.ring, "normal form across rings");
        let red = buchberger::Reducer::from_basis(&self.ring, &self.elements);
        Polynomial::from_sorted_unchecked(&self.ring, red.normal_form(f.terms()))
    }

    /// Reduced basis of the ideal generated by this basis and `extra`.
    pub fn extend(&self, extra: &[Polynomial]) -> GroebnerBasis {
        let elements = f4::groebner_from(&self.ring, &self.elements, extra);
        GroebnerBasis {
            ring: self.ring.clone(),
            elements,
        }
    }

    /// The same basis read in `ring`, which must extend this ring's order on
    /// the shared variables.
    pub fn to_ring(&self, ring: &Arc<Ring>) -> GroebnerBasis {
        GroebnerBasis {
            ring: ring.clone(),
            elements: self.elements.iter().map(|g| g.to_ring(ring)).collect(),
        }
    }

    /// Dimension of `R / I` as a vector space, or `Infinite`.
    pub fn quotient_dimension(&self) -> QuotientDimension {
        count_standard_monomials(&self.leading_monomials(), self.ring.nvars())
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal {
            ring: self.ring.clone(),
            gens: self.elements.clone(),
        }
    }

    /// Re-checks the Gröbner property: every S-polynomial reduces to zero.
    pub fn verify(&self) -> bool {
        let field = self.ring.field();
        let g = &self.elements;
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                let (li, lj) = (g[i].leading_term().unwrap(), g[j].leading_term().unwrap());
                let lcm = li.mono.lcm(&lj.mono);
                let a = g[i].mul_term(&li.mono.quotient_of(&lcm), field.inv(li.coeff));
                let b = g[j].mul_term(&lj.mono.quotient_of(&lcm), field.inv(lj.coeff));
                if !self.normal_form(&(&a - &b)).is_zero() {
                    return false;
                }
            }
        }
        let leads = self.leading_monomials();
        let minimal = leads.iter().enumerate().all(|(i, a)| {
            leads
                .iter()
                .enumerate()
                .all(|(j, b)| i == j || !a.divides(b))
        });
        let reduced = g.iter().all(|p| {
            p.leading_term().unwrap().coeff == 1
                && p.terms()[1..]
                    .iter()
                    .all(|t| !leads.iter().any(|l| l.divides(&t.mono)))
        });
        minimal && reduced
    }
}
