use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::{Monomial, Ring};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub mono: Monomial,
    pub coeff: u32,
}

/// Sparse polynomial over GF(p). Terms are kept in strictly descending
/// order under the ring's term order and never carry a zero coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: i64) -> Self {
        let c = ring.field().from_i64(c);
        Self::monomial(ring, Monomial::one(), c)
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        assert!(i < ring.nvars(), "variable index out of range");
        Self::monomial(ring, Monomial::var(i), 1)
    }

    pub fn monomial(ring: &Arc<Ring>, mono: Monomial, coeff: u32) -> Self {
        let coeff = coeff % ring.field().modulus();
        let terms = if coeff == 0 {
            Vec::new()
        } else {
            vec![Term { mono, coeff }]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unreduced) terms.
    pub fn from_terms<I>(ring: &Arc<Ring>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, i64)>,
    {
        let field = ring.field();
        let mut acc: HashMap<Monomial, u32> = HashMap::new();
        for (m, c) in terms {
            let c = field.from_i64(c);
            let e = acc.entry(m).or_insert(0);
            *e = field.add(*e, c);
        }
        Self::from_map(ring, acc)
    }

    fn from_map(ring: &Arc<Ring>, acc: HashMap<Monomial, u32>) -> Self {
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|(mono, coeff)| Term { mono, coeff })
            .collect();
        terms.sort_unstable_by(|a, b| ring.cmp(&b.mono, &a.mono));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Wraps terms that are already sorted, reduced and nonzero.
    pub(crate) fn from_sorted_unchecked(ring: &Arc<Ring>, terms: Vec<Term>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.cmp(&w[0].mono, &w[1].mono) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| t.coeff != 0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Emptiness is `is_zero`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.mono)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    /// Common degree of all terms, `None` if the terms have different degrees.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>> {
        let first = self
            .terms
            .first()
            .ok_or(Error::ZeroPolynomial)?
            .mono
            .degree();
        Ok(self
            .terms
            .iter()
            .all(|t| t.mono.degree() == first)
            .then_some(first))
    }

    pub fn is_homogeneous(&self) -> bool {
        matches!(self.homogeneous_degree(), Ok(Some(_)))
    }

    fn same_ring(&self, other: &Polynomial) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// `self + c * other` by a sorted merge.
    fn axpy(&self, c: u32, other: &Polynomial) -> Polynomial {
        let field = self.ring.field();
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match self.ring.cmp(&a[i].mono, &b[j].mono) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term {
                        mono: b[j].mono,
                        coeff: field.mul(c, b[j].coeff),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let s = field.add(a[i].coeff, field.mul(c, b[j].coeff));
                    if s != 0 {
                        out.push(Term {
                            mono: a[i].mono,
                            coeff: s,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|t| Term {
            mono: t.mono,
            coeff: field.mul(c, t.coeff),
        }));
        out.retain(|t| t.coeff != 0);
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        Ok(self.axpy(1, other))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        Ok(self.axpy(self.ring.field().modulus() - 1, other))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let field = self.ring.field();
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.len() == 1 {
            let t = small.terms[0];
            return Ok(large.mul_term(&t.mono, t.coeff));
        }
        let mut acc: HashMap<Monomial, u32> = HashMap::with_capacity(self.len() * other.len());
        for s in &small.terms {
            for l in &large.terms {
                let e = acc.entry(s.mono.mul(&l.mono)).or_insert(0);
                *e = field.add(*e, field.mul(s.coeff, l.coeff));
            }
        }
        Ok(Self::from_map(&self.ring, acc))
    }

    /// Multiplication by `c * mono`; term order is preserved by monomial multiplication.
    pub fn mul_term(&self, mono: &Monomial, c: u32) -> Polynomial {
        let field = self.ring.field();
        let c = c % field.modulus();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                mono: t.mono.mul(mono),
                coeff: field.mul(c, t.coeff),
            })
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        self.mul_term(&Monomial::one(), c)
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some(t) if t.coeff == 1 => self.clone(),
            Some(t) => self.scale(self.ring.field().inv(t.coeff)),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::constant(&self.ring, 1);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn partial_derivative(&self, var: usize) -> Result<Polynomial> {
        let nvars = self.ring.nvars();
        if var >= nvars {
            return Err(Error::VariableOutOfRange { index: var, nvars });
        }
        let field = self.ring.field();
        let terms = self.terms.iter().filter_map(|t| {
            let e = t.mono.exp(var);
            if e == 0 {
                return None;
            }
            let c = field.mul(t.coeff, e % field.modulus() );
            (c != 0).then(|| (t.mono.with_exp(var, e - 1), c as i64))
        });
        Ok(Polynomial::from_terms(&self.ring, terms))
    }

    pub fn evaluate(&self, point: &[u32]) -> u32 {
        let field = self.ring.field();
        self.terms.iter().fold(0, |acc, t| {
            let v = (0..self.ring.nvars()).fold(t.coeff, |v, i| {
                let e = t.mono.exp(i);
                if e == 0 {
                    v
                } else {
                    field.mul(v, field.pow(point[i], e as u64))
                }
            });
            field.add(acc, v)
        })
    }

    /// Moves the polynomial into `target`, sending variable `i` to `var_map[i]`.
    pub fn map_vars(&self, target: &Arc<Ring>, var_map: &[usize]) -> Polynomial {
        assert_eq!(var_map.len(), self.ring.nvars());
        assert_eq!(target.field(), self.ring.field());
        let mut terms: Vec<Term> = self
            .terms
            .iter()
            .map(|t| {
                let mut exps = [0u32; super::MAX_VARS];
                for (i, &j) in var_map.iter().enumerate() {
                    exps[j] += t.mono.exp(i);
                }
                Term {
                    mono: Monomial::from_exponents(&exps[..target.nvars()]),
                    coeff: t.coeff,
                }
            })
            .collect();
        terms.sort_unstable_by(|a, b| target.cmp(&b.mono, &a.mono));
        let distinct = terms.windows(2).all(|w| w[0].mono != w[1].mono);
        if distinct {
            Polynomial {
                ring: target.clone(),
                terms,
            }
        } else {
            Polynomial::from_terms(target, terms.into_iter().map(|t| (t.mono, t.coeff as i64)))
        }
    }

    /// Same variables, possibly different term order or an extra trailing variable.
    pub fn to_ring(&self, target: &Arc<Ring>) -> Polynomial {
        let map: Vec<usize> = (0..self.ring.nvars()).collect();
        self.map_vars(target, &map)
    }

    /// Substitutes `images[i]` for variable `i`. All images live in one target ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.ring.nvars());
        let target = images[0].ring().clone();
        let field = target.field();
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::constant(&target, 1), p.clone()])
            .collect();
        let mut acc: HashMap<Monomial, u32> = HashMap::new();
        for t in &self.terms {
            let mut prod = Polynomial::constant(&target, t.coeff as i64);
            for i in 0..self.ring.nvars() {
                let e = t.mono.exp(i) as usize;
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                prod = &prod * &powers[i][e];
            }
            for s in prod.terms {
                let slot = acc.entry(s.mono).or_insert(0);
                *slot = field.add(*slot, s.coeff);
            }
        }
        Self::from_map(&target, acc)
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ring mismatch")
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ring mismatch")
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ring mismatch")
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(self.ring.field().modulus() - 1)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        for (k, t) in self.terms.iter().enumerate() {
            let c = field.to_signed(t.coeff);
            let sign = if c < 0 { "-" } else { "+" };
            if k == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let abs = c.unsigned_abs();
            let factors: Vec<String> = (0..self.ring.nvars())
                .filter(|&i| t.mono.exp(i) > 0)
                .map(|i| match t.mono.exp(i) {
                    1 => self.ring.names()[i].clone(),
                    e => format!("{}^{e}", self.ring.names()[i]),
                })
                .collect();
            match (abs, factors.is_empty()) {
                (_, true) => write!(f, "{abs}")?,
                (1, false) => write!(f, "{}", factors.join("*"))?,
                (_, false) => write!(f, "{abs}*{}", factors.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
