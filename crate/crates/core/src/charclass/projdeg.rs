use std::sync::Arc;

use rayon::prelude::*;

use super::Settings;
use crate::error::{Error, Result};
use crate::groebner::{GroebnerBasis, Ideal};
use crate::ring::{Monomial, MonomialOrder, Polynomial, Ring, SeededRng};

/// Projective degrees `(g_0, ..., g_n)` of the rational map given by an
/// equal-degree generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveDegrees {
    pub g: Vec<u64>,
    /// Common degree of the generators used.
    pub d: u32,
    /// Number of generators minus one, i.e. the map goes to `P^m`.
    pub m: usize,
}

impl ProjectiveDegrees {
    pub fn n(&self) -> usize {
        self.g.len() - 1
    }

    /// Every place where the degrees contradict `g_0 = 1`, `g_i = d^i` below
    /// `codim`, or `g_i = 0` above `min(m, n)`.
    pub fn invariant_violations(&self, codim: usize) -> Vec<String> {
        let mut out = Vec::new();
        if self.g[0] != 1 {
            out.push(format!("g_0 = {} instead of 1", self.g[0]));
        }
        let top = self.m.min(self.n());
        for (i, &g) in self.g.iter().enumerate() {
            if i < codim {
                if let Some(want) = (self.d as u64).checked_pow(i as u32) {
                    if g != want {
                        out.push(format!("g_{i} = {g} instead of {want}"));
                    }
                }
            } else if i > top && g != 0 {
                out.push(format!("g_{i} = {g} instead of 0"));
            }
        }
        out
    }
}

/// Codimension of `V(I)` in `P^n`; the empty scheme has codimension `n + 1`.
pub fn codimension(ideal: &Ideal) -> usize {
    let n = ideal.ring().n() as i64;
    (n - ideal.krull_dimension()) as usize
}

/// All monomials of total degree `deg` in the first `nvars` variables,
/// descending in grevlex.
pub fn monomials_of_degree(nvars: usize, deg: u32) -> Vec<Monomial> {
    fn go(var: usize, nvars: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if var + 1 == nvars {
            exps[var] = left;
            out.push(Monomial::from_exponents(exps));
            return;
        }
        for e in (0..=left).rev() {
            exps[var] = e;
            go(var + 1, nvars, left - e, exps, out);
        }
        exps[var] = 0;
    }
    let mut out = Vec::new();
    go(0, nvars, deg, &mut vec![0; nvars], &mut out);
    out
}

/// Replaces every generator of degree below the maximum `d` by its products
/// with all monomials of the missing degree. Same projective scheme.
pub fn equalize_degrees(ideal: &Ideal) -> Result<Ideal> {
    let ring = ideal.ring();
    let degrees = ideal.degrees()?;
    let Some(&d) = degrees.iter().max() else {
        return Ok(ideal.clone());
    };
    if degrees.iter().all(|&e| e == d) {
        return Ok(ideal.clone());
    }
    let mut seen = std::collections::HashSet::new();
    let mut gens = Vec::new();
    for (f, &e) in ideal.generators().iter().zip(&degrees) {
        let shifts = if e == d {
            vec![Monomial::one()]
        } else {
            monomials_of_degree(ring.ngens(), d - e)
        };
        for m in shifts {
            let g = f.mul_term(&m, 1);
            if seen.insert(g.monic()) {
                gens.push(g);
            }
        }
    }
    Ideal::new(ring, gens)
}

/// Projective degrees by counting solutions of random slice systems in an
/// affine chart. Degrees below the codimension and above `min(m, n)` are
/// filled in directly unless `settings.verify` is set.
pub fn projective_degrees(
    ideal: &Ideal,
    settings: &Settings,
    rng: &SeededRng,
) -> Result<ProjectiveDegrees> {
    if ideal.is_zero() {
        return Err(Error::EmptyInput);
    }
    let eq = equalize_degrees(ideal)?;
    let d = eq.degrees()?[0];
    let n = eq.ring().n();
    let m = eq.len() - 1;
    let top = m.min(n);
    let codim = (!settings.verify).then(|| codimension(&eq));
    let compute = |i: usize| -> Result<u64> {
        if i == 0 {
            return Ok(1);
        }
        if let Some(c) = codim {
            if i < c {
                return (d as u64)
                    .checked_pow(i as u32)
                    .ok_or_else(|| Error::Precondition(format!("{d}^{i} overflows")));
            }
            if i > top {
                return Ok(0);
            }
        }
        let stream = rng.derive(i as u64);
        let (mut best, mut got, mut failed) = (0, 0, 0);
        for attempt in 0.. {
            match slice_degree(eq.generators(), d, i, &mut stream.derive(attempt))? {
                Some(g) => {
                    best = best.max(g);
                    got += 1;
                    if got >= settings.draws.max(1) {
                        break;
                    }
                }
                None if failed == settings.retries => {
                    return Err(Error::RetriesExhausted(settings.retries + 1))
                }
                None => failed += 1,
            }
        }
        Ok(best)
    };
    let g = if settings.parallel {
        (0..=n)
            .into_par_iter()
            .map(compute)
            .collect::<Result<Vec<_>>>()?
    } else {
        (0..=n).map(compute).collect::<Result<Vec<_>>>()?
    };
    Ok(ProjectiveDegrees { g, d, m })
}

/// One draw of the `i`-th slice system. The `n - i` linear forms and the affine
/// chart equation are solved for `n - i + 1` coordinates first, so the Gröbner
/// basis runs in `i` affine coordinates plus `T`. `None` means a degenerate draw.
pub(crate) fn slice_degree(
    gens: &[Polynomial],
    d: u32,
    i: usize,
    rng: &mut SeededRng,
) -> Result<Option<u64>> {
    let ring = gens[0].ring();
    let field = ring.field();
    let p = field.modulus();
    let nx = ring.ngens();
    let rows = nx - i;
    // rows 0..rows-1 are homogeneous linear forms, the last one is sum nu_j x_j = 1
    let mut a: Vec<Vec<u32>> = (0..rows)
        .map(|_| (0..nx).map(|_| rng.scalar(p)).collect())
        .collect();
    let mut b: Vec<u32> = vec![0; rows];
    b[rows - 1] = 1;

    let mut pivots = Vec::with_capacity(rows);
    let mut r = 0;
    for c in 0..nx {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&k| a[k][c] != 0) else {
            continue;
        };
        a.swap(r, pr);
        b.swap(r, pr);
        let inv = field.inv(a[r][c]);
        for v in a[r].iter_mut() {
            *v = field.mul(*v, inv);
        }
        b[r] = field.mul(b[r], inv);
        for k in 0..rows {
            if k != r && a[k][c] != 0 {
                let f = a[k][c];
                for j in 0..nx {
                    let t = field.mul(f, a[r][j]);
                    a[k][j] = field.sub(a[k][j], t);
                }
                b[k] = field.sub(b[k], field.mul(f, b[r]));
            }
        }
        pivots.push(c);
        r += 1;
    }
    if r < rows {
        return Ok(None);
    }
    let free: Vec<usize> = (0..nx).filter(|c| !pivots.contains(c)).collect();
    let names: Vec<String> = (0..i).map(|k| format!("y{k}")).collect();
    let target: Arc<Ring> = Ring::new(field, names.clone(), false, MonomialOrder::GrevLex)?;

    let mut images = vec![Polynomial::zero(&target); nx];
    for (k, &c) in free.iter().enumerate() {
        images[c] = Polynomial::var(&target, k);
    }
    for (row, &c) in pivots.iter().enumerate() {
        let mut terms = vec![(Monomial::one(), b[row] as i64)];
        for (k, &f) in free.iter().enumerate() {
            terms.push((Monomial::var(k), field.neg(a[row][f]) as i64));
        }
        images[c] = Polynomial::from_terms(&target, terms);
    }
    let restricted: Vec<Polynomial> = gens.iter().map(|f| f.substitute(&images)).collect();

    let mut system = Vec::with_capacity(i + 1);
    for _ in 0..i {
        let lambda: Vec<u32> = (0..restricted.len()).map(|_| rng.scalar(p)).collect();
        system.push(crate::ring::combine(&target, &restricted, &lambda));
    }
    let theta: Vec<u32> = (0..restricted.len()).map(|_| rng.scalar(p)).collect();
    let gb = Ideal::new(&target, system)?.groebner();
    if let Some(total) = gb.quotient_dimension().finite() {
        // i general forms of degree d in P^i meet in exactly d^i points; fewer in
        // the chart means some lie on the hyperplane at infinity
        if (d as u64)
            .checked_pow(i as u32)
            .is_some_and(|bezout| total != bezout)
        {
            return Ok(None);
        }
        return Ok(Some(total - length_on_base_locus(&gb, &restricted, total)));
    }
    // positive-dimensional base locus in the slice: invert `g` with `T`
    let g = crate::ring::combine(&target, &restricted, &theta);
    let with_t = Ring::new(
        field,
        names.into_iter().chain(["T".to_string()]).collect(),
        true,
        MonomialOrder::GrevLex,
    )?;
    let t = Polynomial::var(&with_t, i);
    let s = &Polynomial::constant(&with_t, 1) - &(&t * &g.to_ring(&with_t));
    Ok(gb
        .to_ring(&with_t)
        .extend(&[s])
        .quotient_dimension()
        .finite())
}

/// Length of the part of the finite algebra `R/I` supported on the common zeros
/// of `gens`, that is `dim R/(I + (f^k : f in gens))` once it stops growing.
/// `total` is `dim R/I`. Two equal consecutive values mean the ideal is stable:
/// locally at a common zero the step is multiplication by the maximal ideal, so
/// Nakayama forces the powers to vanish there.
fn length_on_base_locus(gb: &GroebnerBasis, gens: &[Polynomial], total: u64) -> u64 {
    let mut powers: Vec<Polynomial> = gens.iter().map(|f| gb.normal_form(f)).collect();
    let mut last: Option<u64> = None;
    loop {
        let nonzero: Vec<Polynomial> = powers.iter().filter(|p| !p.is_zero()).cloned().collect();
        let dim = if nonzero.is_empty() {
            total
        } else {
            gb.extend(&nonzero)
                .quotient_dimension()
                .finite()
                .unwrap_or(total)
        };
        if dim == 0 || dim == total || last == Some(dim) {
            return dim;
        }
        last = Some(dim);
        powers = powers
            .iter()
            .zip(gens)
            .map(|(p, f)| gb.normal_form(&(p * f)))
            .collect();
    }
}
