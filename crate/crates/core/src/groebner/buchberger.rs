//! Polynomial reduction by a fixed basis, plus a plain Buchberger completion
//! with the Gebauer–Möller criteria and sugar selection. The completion is only
//! compiled for tests, where it checks the F4 engine.

#[cfg(test)]
use std::cmp::Ordering;
#[cfg(test)]
use std::sync::Arc;

use super::geobucket::GeoBucket;
use crate::ring::{Monomial, Polynomial, Ring, Term};

struct Element {
    terms: Vec<Term>,
    lead: Monomial,
    mask: u64,
    #[cfg_attr(not(test), allow(dead_code))]
    sugar: u32,
    active: bool,
}

#[cfg(test)]
#[derive(Clone, Copy)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

pub(crate) struct Reducer<'a> {
    ring: &'a Ring,
    elems: Vec<Element>,
}

fn make_monic(ring: &Ring, terms: &mut [Term]) {
    let field = ring.field();
    if let Some(lc) = terms.first().map(|t| t.coeff) {
        if lc != 1 {
            let inv = field.inv(lc);
            for t in terms.iter_mut() {
                t.coeff = field.mul(t.coeff, inv);
            }
        }
    }
}

impl<'a> Reducer<'a> {
    pub(crate) fn new(ring: &'a Ring) -> Self {
        Reducer {
            ring,
            elems: Vec::new(),
        }
    }

    /// A reducer over a fixed, already monic set of polynomials.
    pub(crate) fn from_basis(ring: &'a Ring, basis: &[Polynomial]) -> Self {
        let mut r = Reducer::new(ring);
        for g in basis {
            let mut terms = g.terms().to_vec();
            make_monic(ring, &mut terms);
            r.push(terms, 0);
        }
        r
    }

    fn push(&mut self, terms: Vec<Term>, sugar: u32) -> usize {
        let lead = terms[0].mono;
        self.elems.push(Element {
            mask: lead.divmask(),
            lead,
            terms,
            sugar,
            active: true,
        });
        self.elems.len() - 1
    }

    fn find_divisor(&self, m: &Monomial) -> Option<usize> {
        let mask = m.divmask();
        let mut best: Option<usize> = None;
        for (k, e) in self.elems.iter().enumerate() {
            if !e.active || e.mask & !mask != 0 || !e.lead.divides(m) {
                continue;
            }
            if best.is_none_or(|b| e.terms.len() < self.elems[b].terms.len()) {
                best = Some(k);
            }
        }
        best
    }

    /// Full normal form of `c1*m1*p1 - ...` seeded into the bucket.
    fn reduce_bucket(&self, mut bucket: GeoBucket<'_>) -> Vec<Term> {
        let field = self.ring.field();
        let mut out = Vec::new();
        while let Some(t) = bucket.pop_leading() {
            match self.find_divisor(&t.mono) {
                Some(k) => {
                    let g = &self.elems[k];
                    let q = g.lead.quotient_of(&t.mono);
                    bucket.add_scaled(&g.terms[1..], field.neg(t.coeff), &q);
                }
                None => out.push(t),
            }
        }
        out
    }

    pub(crate) fn normal_form(&self, terms: &[Term]) -> Vec<Term> {
        let mut bucket = GeoBucket::new(self.ring);
        bucket.add_owned_desc(terms.to_vec());
        self.reduce_bucket(bucket)
    }

    #[cfg(test)]
    fn s_polynomial_nf(&self, pair: &Pair) -> Vec<Term> {
        let field = self.ring.field();
        let (gi, gj) = (&self.elems[pair.i], &self.elems[pair.j]);
        let mi = gi.lead.quotient_of(&pair.lcm);
        let mj = gj.lead.quotient_of(&pair.lcm);
        let mut bucket = GeoBucket::new(self.ring);
        bucket.add_scaled(&gi.terms[1..], 1, &mi);
        bucket.add_scaled(&gj.terms[1..], field.neg(1), &mj);
        self.reduce_bucket(bucket)
    }
}

/// Gebauer–Möller update after inserting element `h`.
#[cfg(test)]
fn update(red: &mut Reducer<'_>, pairs: &mut Vec<Pair>, h: usize) {
    let lead_h = red.elems[h].lead;
    let sugar_h = red.elems[h].sugar;
    let mk = |g: usize, red: &Reducer<'_>| {
        let e = &red.elems[g];
        let lcm = lead_h.lcm(&e.lead);
        let sugar = (sugar_h + lcm.degree() - lead_h.degree())
            .max(e.sugar + lcm.degree() - e.lead.degree());
        Pair {
            i: g,
            j: h,
            lcm,
            sugar,
        }
    };
    let mut c: Vec<Pair> = (0..h)
        .filter(|&g| red.elems[g].active)
        .map(|g| mk(g, red))
        .collect();
    let mut d: Vec<Pair> = Vec::with_capacity(c.len());
    while let Some(p) = c.pop() {
        let coprime = lead_h.is_coprime(&red.elems[p.i].lead);
        let dominated = c.iter().chain(d.iter()).any(|q| q.lcm.divides(&p.lcm));
        if coprime || !dominated {
            d.push(p);
        }
    }
    let e: Vec<Pair> = d
        .into_iter()
        .filter(|p| !lead_h.is_coprime(&red.elems[p.i].lead))
        .collect();
    pairs.retain(|p| {
        !lead_h.divides(&p.lcm)
            || lead_h.lcm(&red.elems[p.i].lead) == p.lcm
            || lead_h.lcm(&red.elems[p.j].lead) == p.lcm
    });
    pairs.extend(e);
    for g in 0..h {
        if red.elems[g].active && lead_h.divides(&red.elems[g].lead) {
            red.elems[g].active = false;
        }
    }
}

#[cfg(test)]
fn select(ring: &Ring, pairs: &[Pair]) -> usize {
    let mut best = 0;
    for (k, p) in pairs.iter().enumerate().skip(1) {
        let b = &pairs[best];
        let ord = p.sugar.cmp(&b.sugar).then_with(|| ring.cmp(&p.lcm, &b.lcm));
        if ord == Ordering::Less {
            best = k;
        }
    }
    best
}

/// Reduced Gröbner basis of the given generators (monic, sorted by leading term).
#[cfg(test)]
pub(crate) fn groebner(ring: &Arc<Ring>, gens: &[Polynomial]) -> Vec<Polynomial> {
    let mut red = Reducer::new(ring);
    let mut pairs: Vec<Pair> = Vec::new();
    let one = |ring: &Arc<Ring>| vec![Polynomial::constant(ring, 1)];

    let mut inputs: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    inputs.sort_by(|a, b| {
        ring.cmp(
            &a.leading_monomial().unwrap(),
            &b.leading_monomial().unwrap(),
        )
    });
    for g in inputs {
        let mut terms = red.normal_form(g.terms());
        if terms.is_empty() {
            continue;
        }
        make_monic(ring, &mut terms);
        if terms[0].mono.is_one() {
            return one(ring);
        }
        let sugar = g.total_degree().unwrap();
        let h = red.push(terms, sugar);
        update(&mut red, &mut pairs, h);
    }

    while !pairs.is_empty() {
        let k = select(ring, &pairs);
        let pair = pairs.swap_remove(k);
        let mut terms = red.s_polynomial_nf(&pair);
        if terms.is_empty() {
            continue;
        }
        make_monic(ring, &mut terms);
        if terms[0].mono.is_one() {
            return one(ring);
        }
        let sugar = pair.sugar.max(terms[0].mono.degree());
        let h = red.push(terms, sugar);
        update(&mut red, &mut pairs, h);
    }

    interreduce(ring, red)
}

#[cfg(test)]
fn interreduce(ring: &Arc<Ring>, red: Reducer<'_>) -> Vec<Polynomial> {
    let mut minimal: Vec<Vec<Term>> = red
        .elems
        .into_iter()
        .filter(|e| e.active)
        .map(|e| e.terms)
        .collect();
    minimal.sort_by(|a, b| ring.cmp(&a[0].mono, &b[0].mono));
    let mut kept: Vec<Vec<Term>> = Vec::with_capacity(minimal.len());
    for t in minimal {
        if !kept.iter().any(|k| k[0].mono.divides(&t[0].mono)) {
            kept.push(t);
        }
    }
    // A term smaller than a leading monomial is never divisible by it, so one
    // reducer over the whole minimal basis serves every tail.
    let mut all = Reducer::new(ring);
    for t in &kept {
        all.push(t.clone(), 0);
    }
    kept.iter()
        .map(|t| {
            let mut terms = vec![t[0]];
            terms.extend(all.normal_form(&t[1..]));
            Polynomial::from_sorted_unchecked(ring, terms)
        })
        .collect()
}
