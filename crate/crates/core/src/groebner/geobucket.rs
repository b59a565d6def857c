//! Geobucket accumulator for long reductions.

use std::cmp::Ordering;

use crate::field::FieldSpec;
use crate::ring::{Monomial, Ring, Term};

/// Buckets hold terms in ascending order so the leading term sits at the end.
pub(crate) struct GeoBucket<'a> {
    ring: &'a Ring,
    field: FieldSpec,
    buckets: Vec<Vec<Term>>,
}

fn capacity(k: usize) -> usize {
    4usize << (2 * k)
}

impl<'a> GeoBucket<'a> {
    pub(crate) fn new(ring: &'a Ring) -> Self {
        GeoBucket {
            ring,
            field: ring.field(),
            buckets: Vec::new(),
        }
    }

    /// Adds `c * m * terms`, where `terms` is in descending order.
    pub(crate) fn add_scaled(&mut self, terms: &[Term], c: u32, m: &Monomial) {
        if terms.is_empty() || c == 0 {
            return;
        }
        let field = self.field;
        let incoming: Vec<Term> = terms
            .iter()
            .rev()
            .map(|t| Term {
                mono: t.mono.mul(m),
                coeff: field.mul(c, t.coeff),
            })
            .collect();
        self.insert(incoming);
    }

    pub(crate) fn add_owned_desc(&mut self, mut terms: Vec<Term>) {
        terms.reverse();
        self.insert(terms);
    }

    fn insert(&mut self, mut incoming: Vec<Term>) {
        let mut k = 0;
        while capacity(k) < incoming.len() {
            k += 1;
        }
        loop {
            if self.buckets.len() <= k {
                self.buckets.resize_with(k + 1, Vec::new);
            }
            let existing = std::mem::take(&mut self.buckets[k]);
            let merged = merge_ascending(self.ring, self.field, existing, incoming);
            if merged.len() <= capacity(k) {
                self.buckets[k] = merged;
                return;
            }
            incoming = merged;
            k += 1;
        }
    }

    /// Removes and returns the leading term of the accumulated sum.
    pub(crate) fn pop_leading(&mut self) -> Option<Term> {
        loop {
            let mut best: Option<Monomial> = None;
            for b in &self.buckets {
                if let Some(t) = b.last() {
                    best = match best {
                        Some(m) if self.ring.cmp(&t.mono, &m) != Ordering::Greater => Some(m),
                        _ => Some(t.mono),
                    };
                }
            }
            let mono = best?;
            let mut coeff = 0;
            for b in &mut self.buckets {
                if b.last().is_some_and(|t| t.mono == mono) {
                    coeff = self.field.add(coeff, b.pop().unwrap().coeff);
                }
            }
            if coeff != 0 {
                return Some(Term { mono, coeff });
            }
        }
    }
}

pub(crate) fn merge_ascending(
    ring: &Ring,
    field: FieldSpec,
    a: Vec<Term>,
    b: Vec<Term>,
) -> Vec<Term> {
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match ring.cmp(&a[i].mono, &b[j].mono) {
            Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            Ordering::Equal => {
                let c = field.add(a[i].coeff, b[j].coeff);
                if c != 0 {
                    out.push(Term {
                        mono: a[i].mono,
                        coeff: c,
                    });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}
