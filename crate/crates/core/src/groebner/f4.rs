//! F4: all critical pairs of the lowest sugar degree are reduced at once as
//! the rows of one sparse matrix over GF(p).

use std::sync::Arc;

use rayon::prelude::*;
use rustc_hash::{FxHashMap, FxHashSet};

use crate::ring::{Monomial, Polynomial, Ring, Term};

struct Element {
    terms: Vec<Term>,
    lead: Monomial,
    mask: u64,
    sugar: u32,
    active: bool,
}

#[derive(Clone, Copy)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// Where a matrix row takes its coefficients from.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Source {
    Element(usize),
    Input(usize),
}

struct SparseRow {
    cols: Vec<u32>,
    coeffs: Vec<u32>,
}

/// Sparse rows over interned monomials; columns are assigned once the
/// monomial set is closed.
struct Builder<'a> {
    ring: &'a Ring,
    ids: FxHashMap<Monomial, u32>,
    monos: Vec<Monomial>,
    pivot: Vec<Option<usize>>,
    queue: Vec<u32>,
    rows: Vec<(Vec<u32>, Source)>,
}

impl<'a> Builder<'a> {
    fn new(ring: &'a Ring) -> Self {
        Builder {
            ring,
            ids: FxHashMap::default(),
            monos: Vec::new(),
            pivot: Vec::new(),
            queue: Vec::new(),
            rows: Vec::new(),
        }
    }

    fn intern(&mut self, m: Monomial) -> u32 {
        if let Some(&id) = self.ids.get(&m) {
            return id;
        }
        let id = self.monos.len() as u32;
        self.ids.insert(m, id);
        self.monos.push(m);
        self.pivot.push(None);
        self.queue.push(id);
        id
    }

    /// Adds `mult * terms`; returns the row index and its leading monomial id.
    fn add_row(&mut self, mult: &Monomial, terms: &[Term], source: Source) -> (usize, u32) {
        let ids: Vec<u32> = terms
            .iter()
            .map(|t| self.intern(t.mono.mul(mult)))
            .collect();
        let lead = ids[0];
        self.rows.push((ids, source));
        (self.rows.len() - 1, lead)
    }

    /// Adds a reducer for every monomial divisible by some leading term.
    fn preprocess(&mut self, elems: &[Element]) {
        while let Some(id) = self.queue.pop() {
            if self.pivot[id as usize].is_some() {
                continue;
            }
            let m = self.monos[id as usize];
            if let Some(k) = find_reducer(elems, &m) {
                let e = &elems[k];
                let q = e.lead.quotient_of(&m);
                let (row, _) = self.add_row(&q, &e.terms, Source::Element(k));
                self.pivot[id as usize] = Some(row);
            }
        }
    }

    /// Column of each monomial id, with column 0 the largest monomial.
    fn columns(&self) -> Vec<u32> {
        let mut order: Vec<u32> = (0..self.monos.len() as u32).collect();
        order.sort_unstable_by(|&a, &b| {
            self.ring
                .cmp(&self.monos[b as usize], &self.monos[a as usize])
        });
        let mut col = vec![0u32; order.len()];
        for (c, &id) in order.iter().enumerate() {
            col[id as usize] = c as u32;
        }
        col
    }
}

fn find_reducer(elems: &[Element], m: &Monomial) -> Option<usize> {
    let mask = m.divmask();
    let mut best: Option<usize> = None;
    for (k, e) in elems.iter().enumerate() {
        if e.mask & !mask != 0 || !e.lead.divides(m) {
            continue;
        }
        let better = match best {
            None => true,
            Some(b) => {
                let cur = &elems[b];
                (e.active, std::cmp::Reverse(e.terms.len()))
                    > (cur.active, std::cmp::Reverse(cur.terms.len()))
            }
        };
        if better {
            best = Some(k);
        }
    }
    best
}

/// Dense accumulator for one row; values are kept below `2^62` and reduced lazily.
struct Dense {
    acc: Vec<u64>,
    p: u64,
}

impl Dense {
    fn new(ncols: usize, p: u32) -> Self {
        Dense {
            acc: vec![0; ncols],
            p: p as u64,
        }
    }

    fn load(&mut self, row: &SparseRow) {
        for (&c, &v) in row.cols.iter().zip(&row.coeffs) {
            self.acc[c as usize] = v as u64;
        }
    }

    #[inline]
    fn axpy(&mut self, mult: u64, row: &SparseRow) {
        for (&c, &v) in row.cols.iter().zip(&row.coeffs).skip(1) {
            let s = self.acc[c as usize] + mult * v as u64;
            self.acc[c as usize] = if s >= 1 << 62 { s % self.p } else { s };
        }
    }

    /// Reduces by `pivots` from column `start` on and drains what is left.
    fn reduce<'r>(
        &mut self,
        start: usize,
        pivot: impl Fn(usize) -> Option<&'r SparseRow>,
    ) -> SparseRow {
        let mut out = SparseRow {
            cols: Vec::new(),
            coeffs: Vec::new(),
        };
        for c in start..self.acc.len() {
            if self.acc[c] == 0 {
                continue;
            }
            let v = self.acc[c] % self.p;
            self.acc[c] = 0;
            if v == 0 {
                continue;
            }
            match pivot(c) {
                Some(row) => self.axpy(self.p - v, row),
                None => {
                    out.cols.push(c as u32);
                    out.coeffs.push(v as u32);
                }
            }
        }
        out
    }
}

fn make_monic(ring: &Ring, row: &mut SparseRow) {
    let field = ring.field();
    let lc = row.coeffs[0];
    if lc != 1 {
        let inv = field.inv(lc);
        for v in row.coeffs.iter_mut() {
            *v = field.mul(*v, inv);
        }
    }
}

fn source_coeffs<'b>(src: Source, elems: &'b [Element], inputs: &'b [Vec<Term>]) -> &'b [Term] {
    match src {
        Source::Element(k) => &elems[k].terms,
        Source::Input(k) => &inputs[k],
    }
}

fn sparse_rows(
    b: &Builder<'_>,
    col: &[u32],
    elems: &[Element],
    inputs: &[Vec<Term>],
) -> Vec<SparseRow> {
    b.rows
        .iter()
        .map(|(ids, src)| SparseRow {
            cols: ids.iter().map(|&id| col[id as usize]).collect(),
            coeffs: source_coeffs(*src, elems, inputs)
                .iter()
                .map(|t| t.coeff)
                .collect(),
        })
        .collect()
}

/// One reduction step: returns the new basis elements as monic term vectors.
fn reduce_step(
    ring: &Ring,
    elems: &[Element],
    inputs: &[Vec<Term>],
    pairs: &[Pair],
    gens: &[usize],
) -> Vec<Vec<Term>> {
    let mut b = Builder::new(ring);
    let mut seen: FxHashSet<(Source, Monomial)> = FxHashSet::default();
    let mut todo: Vec<usize> = Vec::new();
    for pair in pairs {
        for k in [pair.i, pair.j] {
            let e = &elems[k];
            let q = e.lead.quotient_of(&pair.lcm);
            if !seen.insert((Source::Element(k), q)) {
                continue;
            }
            let (row, lead) = b.add_row(&q, &e.terms, Source::Element(k));
            if b.pivot[lead as usize].is_none() {
                b.pivot[lead as usize] = Some(row);
            } else {
                todo.push(row);
            }
        }
    }
    for &g in gens {
        let (row, _) = b.add_row(&Monomial::one(), &inputs[g], Source::Input(g));
        todo.push(row);
    }
    b.preprocess(elems);

    let col = b.columns();
    let ncols = b.monos.len();
    let rows = sparse_rows(&b, &col, elems, inputs);
    let mut pivots: Vec<Option<&SparseRow>> = vec![None; ncols];
    for (id, piv) in b.pivot.iter().enumerate() {
        if let Some(r) = piv {
            pivots[col[id] as usize] = Some(&rows[*r]);
        }
    }
    let p = ring.field().modulus();
    let residual: Vec<SparseRow> = todo
        .par_iter()
        .map_init(
            || Dense::new(ncols, p),
            |dense, &r| {
                dense.load(&rows[r]);
                dense.reduce(rows[r].cols[0] as usize, |c| pivots[c])
            },
        )
        .filter(|r| !r.cols.is_empty())
        .collect();

    let mut fresh: Vec<Option<SparseRow>> = (0..ncols).map(|_| None).collect();
    let mut found: Vec<usize> = Vec::new();
    let mut dense = Dense::new(ncols, p);
    for row in residual {
        dense.load(&row);
        let mut out = dense.reduce(row.cols[0] as usize, |c| fresh[c].as_ref());
        if out.cols.is_empty() {
            continue;
        }
        make_monic(ring, &mut out);
        let c = out.cols[0] as usize;
        found.push(c);
        fresh[c] = Some(out);
    }

    let mut mono_of_col = vec![Monomial::one(); ncols];
    for (id, &c) in col.iter().enumerate() {
        mono_of_col[c as usize] = b.monos[id];
    }
    found
        .into_iter()
        .map(|c| {
            let r = fresh[c].take().unwrap();
            r.cols
                .iter()
                .zip(&r.coeffs)
                .map(|(&c, &v)| Term {
                    mono: mono_of_col[c as usize],
                    coeff: v,
                })
                .collect()
        })
        .collect()
}

/// Gebauer–Möller update after inserting element `h`.
fn update(elems: &mut [Element], pairs: &mut Vec<Pair>, h: usize) {
    let lead_h = elems[h].lead;
    let sugar_h = elems[h].sugar;
    let mk = |g: usize| {
        let e = &elems[g];
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
    let mut c: Vec<Pair> = (0..h).filter(|&g| elems[g].active).map(mk).collect();
    let mut d: Vec<Pair> = Vec::with_capacity(c.len());
    while let Some(p) = c.pop() {
        let coprime = lead_h.is_coprime(&elems[p.i].lead);
        let dominated = c.iter().chain(d.iter()).any(|q| q.lcm.divides(&p.lcm));
        if coprime || !dominated {
            d.push(p);
        }
    }
    pairs.retain(|p| {
        !lead_h.divides(&p.lcm)
            || lead_h.lcm(&elems[p.i].lead) == p.lcm
            || lead_h.lcm(&elems[p.j].lead) == p.lcm
    });
    pairs.extend(
        d.into_iter()
            .filter(|p| !lead_h.is_coprime(&elems[p.i].lead)),
    );
    for g in 0..h {
        if elems[g].active && lead_h.divides(&elems[g].lead) {
            elems[g].active = false;
        }
    }
}

fn monic_terms(ring: &Ring, terms: &[Term]) -> Vec<Term> {
    let field = ring.field();
    let inv = field.inv(terms[0].coeff);
    terms
        .iter()
        .map(|t| Term {
            mono: t.mono,
            coeff: field.mul(t.coeff, inv),
        })
        .collect()
}

/// Reduced Gröbner basis of the given generators (monic, sorted by leading term).
pub(crate) fn groebner(ring: &Arc<Ring>, gens: &[Polynomial]) -> Vec<Polynomial> {
    groebner_from(ring, &[], gens)
}

/// Reduced Gröbner basis of `basis + gens`, where `basis` is already a reduced
/// Gröbner basis; its own pairs are never formed.
pub(crate) fn groebner_from(
    ring: &Arc<Ring>,
    basis: &[Polynomial],
    gens: &[Polynomial],
) -> Vec<Polynomial> {
    let one = || vec![Polynomial::constant(ring, 1)];
    let inputs: Vec<Vec<Term>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| monic_terms(ring, g.terms()))
        .collect();
    let mut pending: Vec<(u32, usize)> = inputs
        .iter()
        .enumerate()
        .map(|(k, t)| (t.iter().map(|t| t.mono.degree()).max().unwrap(), k))
        .collect();
    let mut elems: Vec<Element> = basis
        .iter()
        .map(|g| {
            let terms = monic_terms(ring, g.terms());
            let lead = terms[0].mono;
            Element {
                mask: lead.divmask(),
                lead,
                sugar: g.total_degree().unwrap(),
                terms,
                active: true,
            }
        })
        .collect();
    if elems.iter().any(|e| e.lead.is_one()) {
        return one();
    }
    let mut pairs: Vec<Pair> = Vec::new();

    loop {
        let next_pair = pairs.iter().map(|p| p.sugar).min();
        let next_gen = pending.iter().map(|g| g.0).min();
        let deg = match (next_pair, next_gen) {
            (None, None) => break,
            (a, b) => a.into_iter().chain(b).min().unwrap(),
        };
        let (chosen, rest): (Vec<Pair>, Vec<Pair>) =
            pairs.into_iter().partition(|p| p.sugar == deg);
        pairs = rest;
        let (now, later): (Vec<(u32, usize)>, Vec<(u32, usize)>) =
            pending.into_iter().partition(|g| g.0 == deg);
        pending = later;
        let gens_now: Vec<usize> = now.into_iter().map(|g| g.1).collect();

        let mut fresh = reduce_step(ring, &elems, &inputs, &chosen, &gens_now);
        fresh.sort_by(|a, b| ring.cmp(&a[0].mono, &b[0].mono));
        for terms in fresh {
            if terms[0].mono.is_one() {
                return one();
            }
            let lead = terms[0].mono;
            let sugar = deg.max(lead.degree());
            elems.push(Element {
                mask: lead.divmask(),
                lead,
                terms,
                sugar,
                active: true,
            });
            let h = elems.len() - 1;
            update(&mut elems, &mut pairs, h);
        }
    }
    interreduce(ring, &elems)
}

/// Tail-reduces the minimal basis by back substitution over one matrix.
fn interreduce(ring: &Arc<Ring>, elems: &[Element]) -> Vec<Polynomial> {
    let mut active: Vec<usize> = (0..elems.len()).filter(|&k| elems[k].active).collect();
    active.sort_by(|&a, &b| ring.cmp(&elems[a].lead, &elems[b].lead));
    // Rows found in one step can have nested leading monomials.
    let mut minimal: Vec<usize> = Vec::with_capacity(active.len());
    for k in active {
        if !minimal
            .iter()
            .any(|&g| elems[g].lead.divides(&elems[k].lead))
        {
            minimal.push(k);
        }
    }
    let mut b = Builder::new(ring);
    let mut heads = Vec::with_capacity(minimal.len());
    for &k in &minimal {
        let (row, lead) = b.add_row(&Monomial::one(), &elems[k].terms, Source::Element(k));
        b.pivot[lead as usize] = Some(row);
        heads.push(row);
    }
    b.preprocess(elems);
    let col = b.columns();
    let ncols = b.monos.len();
    let rows = sparse_rows(&b, &col, elems, &[]);
    let mut by_col: Vec<Option<usize>> = vec![None; ncols];
    for (id, piv) in b.pivot.iter().enumerate() {
        if let Some(r) = piv {
            by_col[col[id] as usize] = Some(*r);
        }
    }
    let mut reduced: Vec<Option<SparseRow>> = (0..ncols).map(|_| None).collect();
    let mut dense = Dense::new(ncols, ring.field().modulus());
    for c in (0..ncols).rev() {
        let Some(r) = by_col[c] else { continue };
        let row = &rows[r];
        dense.load(row);
        dense.acc[c] = 0;
        let mut tail = dense.reduce(c + 1, |k| reduced[k].as_ref());
        tail.cols.insert(0, c as u32);
        tail.coeffs.insert(0, row.coeffs[0]);
        reduced[c] = Some(tail);
    }
    let mut mono_of_col = vec![Monomial::one(); ncols];
    for (id, &c) in col.iter().enumerate() {
        mono_of_col[c as usize] = b.monos[id];
    }
    heads
        .into_iter()
        .map(|r| {
            let c = rows[r].cols[0] as usize;
            let row = reduced[c].as_ref().unwrap();
            let terms = row
                .cols
                .iter()
                .zip(&row.coeffs)
                .map(|(&c, &v)| Term {
                    mono: mono_of_col[c as usize],
                    coeff: v,
                })
                .collect();
            Polynomial::from_sorted_unchecked(ring, terms)
        })
        .collect()
}
