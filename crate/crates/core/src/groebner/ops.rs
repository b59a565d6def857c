use std::collections::HashMap;
use std::sync::Arc;

use super::Ideal;
use crate::error::{Error, Result};
use crate::ring::{MonomialOrder, Polynomial, Ring, SeededRng};

/// How `I : (x_0, ..., x_n)^inf` is computed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SaturationMode {
    /// Intersection of `I : x_i^inf` over all variables.
    #[default]
    Deterministic,
    /// `I : l^inf` for one random linear form `l`; equal to the irrelevant
    /// saturation unless `l` vanishes on an associated point.
    GenericLinear,
}

/// `I : f^inf` by eliminating `T` from `I + (1 - T f)`.
pub fn saturate(ideal: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let base = ideal.ring();
    let ext = base.with_aux_eliminating("_T")?;
    let t = ext.nvars() - 1;
    let mut gens: Vec<Polynomial> = ideal.generators().iter().map(|g| g.to_ring(&ext)).collect();
    let tf = &Polynomial::var(&ext, t) * &f.to_ring(&ext);
    gens.push(&Polynomial::constant(&ext, 1) - &tf);
    eliminate_last(base, &ext, gens)
}

/// Groebner basis in `ext` (elimination order on its last variable), keeping
/// the elements free of that variable and moving them back to `base`.
fn eliminate_last(base: &Arc<Ring>, ext: &Arc<Ring>, gens: Vec<Polynomial>) -> Result<Ideal> {
    let t = ext.nvars() - 1;
    let gb = Ideal::new(ext, gens)?.groebner();
    let back: Vec<usize> = (0..ext.nvars()).map(|i| i.min(base.nvars() - 1)).collect();
    let kept = gb
        .elements()
        .iter()
        .filter(|g| g.terms().iter().all(|term| term.mono.exp(t) == 0))
        .map(|g| g.map_vars(base, &back))
        .collect();
    Ideal::new(base, kept)
}

/// `I : x_var^inf` for homogeneous `I`, via a grevlex basis with `x_var` last:
/// dividing each basis element by its largest power of `x_var` generates the saturation.
pub fn saturate_by_variable(ideal: &Ideal, var: usize) -> Result<Ideal> {
    let base = ideal.ring();
    let nvars = base.nvars();
    if var >= nvars {
        return Err(Error::VariableOutOfRange { index: var, nvars });
    }
    if !ideal.is_homogeneous() {
        return Err(Error::Inhomogeneous);
    }
    // swap `var` with the last variable
    let last = nvars - 1;
    let perm: Vec<usize> = (0..nvars)
        .map(|i| {
            if i == var {
                last
            } else if i == last {
                var
            } else {
                i
            }
        })
        .collect();
    let mut names = base.names().to_vec();
    names.swap(var, last);
    let swapped = Ring::new(base.field(), names, false, MonomialOrder::GrevLex)?;
    let moved = Ideal::new(
        &swapped,
        ideal
            .generators()
            .iter()
            .map(|g| g.map_vars(&swapped, &perm))
            .collect(),
    )?;
    let gb = moved.groebner();
    let gens = gb
        .elements()
        .iter()
        .map(|g| {
            let k = g
                .terms()
                .iter()
                .map(|t| t.mono.exp(last))
                .min()
                .unwrap_or(0);
            let stripped = Polynomial::from_terms(
                &swapped,
                g.terms()
                    .iter()
                    .map(|t| (t.mono.with_exp(last, t.mono.exp(last) - k), t.coeff as i64)),
            );
            stripped.map_vars(base, &perm)
        })
        .collect();
    Ideal::new(base, gens)
}

/// `I ∩ J` by eliminating `T` from `T*I + (1 - T)*J`.
pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch);
    }
    let base = a.ring();
    let ext = base.with_aux_eliminating("_T")?;
    let t = Polynomial::var(&ext, ext.nvars() - 1);
    let one_minus_t = &Polynomial::constant(&ext, 1) - &t;
    let mut gens: Vec<Polynomial> = a
        .generators()
        .iter()
        .map(|g| &t * &g.to_ring(&ext))
        .collect();
    gens.extend(
        b.generators()
            .iter()
            .map(|g| &one_minus_t * &g.to_ring(&ext)),
    );
    eliminate_last(base, &ext, gens)
}

impl Ideal {
    /// `I : (x_0, ..., x_n)^inf`. Only the generic-linear mode consumes randomness.
    pub fn saturate_irrelevant(&self, mode: SaturationMode, rng: &mut SeededRng) -> Result<Ideal> {
        if !self.is_homogeneous() {
            return Err(Error::Inhomogeneous);
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        match mode {
            SaturationMode::Deterministic => {
                let mut acc: Option<Ideal> = None;
                for i in 0..self.ring().ngens() {
                    let sat = saturate_by_variable(self, i)?;
                    let gb = sat.groebner();
                    if gb.is_unit() {
                        continue;
                    }
                    acc = Some(match acc {
                        None => gb.to_ideal(),
                        Some(prev) => intersect(&prev, &gb.to_ideal())?,
                    });
                }
                Ok(acc.unwrap_or_else(|| Ideal::unit(self.ring())))
            }
            SaturationMode::GenericLinear => self.saturate_generic_linear(rng),
        }
    }

    fn saturate_generic_linear(&self, rng: &mut SeededRng) -> Result<Ideal> {
        let ring = self.ring();
        let field = ring.field();
        let last = ring.ngens() - 1;
        let p = field.modulus();
        let coeffs: Vec<u32> = (0..=last)
            .map(|j| {
                if j == last {
                    rng.nonzero_scalar(p)
                } else {
                    rng.scalar(p)
                }
            })
            .collect();
        // new coordinates: y_j = x_j for j < last, y_last = l(x)
        let inv = field.inv(coeffs[last]);
        let y: Vec<Polynomial> = (0..=last).map(|j| Polynomial::var(ring, j)).collect();
        let mut x_last = y[last].scale(inv);
        for j in 0..last {
            x_last = &x_last - &y[j].scale(field.mul(coeffs[j], inv));
        }
        let mut forward = y.clone();
        forward[last] = x_last;
        let moved = Ideal::new(
            ring,
            self.generators()
                .iter()
                .map(|g| g.substitute(&forward))
                .collect(),
        )?;
        let sat = saturate_by_variable(&moved, last)?;
        let mut back = y;
        back[last] = Polynomial::from_terms(
            ring,
            coeffs
                .iter()
                .enumerate()
                .map(|(j, &c)| (crate::ring::Monomial::var(j), c as i64)),
        );
        Ideal::new(
            ring,
            sat.generators()
                .iter()
                .map(|g| g.substitute(&back))
                .collect(),
        )
    }
}

/// The ideal of all `k x k` minors of the Jacobian `(d f_i / d x_j)`, taken over
/// the non-auxiliary variables. Minors are expanded along their first row with
/// sub-minors memoized by (row set, column set).
pub fn jacobian_minors(polys: &[Polynomial], k: usize) -> Result<Ideal> {
    let ring = polys.first().ok_or(Error::EmptyInput)?.ring().clone();
    let rows = polys.len();
    let cols = ring.ngens();
    if k == 0 || k > rows || k > cols {
        return Err(Error::MinorTooLarge { k, rows, cols });
    }
    let jac: Vec<Vec<Polynomial>> = polys
        .iter()
        .map(|f| {
            (0..cols)
                .map(|j| f.partial_derivative(j))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let mut memo: HashMap<(u32, u32), Polynomial> = HashMap::new();
    let mut gens = Vec::new();
    for row_set in subsets(rows, k) {
        for col_set in subsets(cols, k) {
            gens.push(minor(&jac, &ring, row_set, col_set, &mut memo));
        }
    }
    let mut seen = std::collections::HashSet::new();
    gens.retain(|g: &Polynomial| !g.is_zero() && seen.insert(g.monic()));
    Ideal::new(&ring, gens)
}

fn subsets(n: usize, k: usize) -> Vec<u32> {
    (0u32..(1 << n))
        .filter(|s| s.count_ones() as usize == k)
        .collect()
}

fn minor(
    jac: &[Vec<Polynomial>],
    ring: &Arc<Ring>,
    rows: u32,
    cols: u32,
    memo: &mut HashMap<(u32, u32), Polynomial>,
) -> Polynomial {
    if let Some(m) = memo.get(&(rows, cols)) {
        return m.clone();
    }
    let r0 = rows.trailing_zeros() as usize;
    let result = if rows.count_ones() == 1 {
        jac[r0][cols.trailing_zeros() as usize].clone()
    } else {
        let rest = rows & !(1 << r0);
        let mut acc = Polynomial::zero(ring);
        let mut sign = false;
        let mut c = cols;
        while c != 0 {
            let j = c.trailing_zeros() as usize;
            c &= c - 1;
            let entry = &jac[r0][j];
            if !entry.is_zero() {
                let sub = minor(jac, ring, rest, cols & !(1 << j), memo);
                let term = entry * &sub;
                acc = if sign { &acc - &term } else { &acc + &term };
            }
            sign = !sign;
        }
        acc
    };
    memo.insert((rows, cols), result.clone());
    result
}
