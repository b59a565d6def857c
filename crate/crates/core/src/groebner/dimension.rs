use super::GroebnerBasis;
use crate::ring::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientDimension {
    Finite(u64),
    Infinite,
}

impl QuotientDimension {
    pub fn finite(self) -> Option<u64> {
        match self {
            QuotientDimension::Finite(d) => Some(d),
            QuotientDimension::Infinite => None,
        }
    }
}

/// Number of monomials in `nvars` variables divisible by none of `leads`.
///
/// Splits on the last variable: the standard monomials are `v^e * m` where `m`
/// is standard for the colon ideal `(leads : v^e)` in the remaining variables.
/// Requires a pure power of every variable, otherwise the count is infinite.
pub fn count_standard_monomials(leads: &[Monomial], nvars: usize) -> QuotientDimension {
    let vars: Vec<usize> = (0..nvars).collect();
    match count(leads, &vars) {
        Some(c) => QuotientDimension::Finite(c),
        None => QuotientDimension::Infinite,
    }
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|o| o.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn count(leads: &[Monomial], vars: &[usize]) -> Option<u64> {
    if leads.iter().any(Monomial::is_one) {
        return Some(0);
    }
    let Some((&v, rest)) = vars.split_last() else {
        return Some(1);
    };
    let bound = leads
        .iter()
        .filter(|m| m.degree() == m.exp(v))
        .map(|m| m.exp(v))
        .min()?;
    if rest.is_empty() {
        return Some(bound as u64);
    }
    let mut total = 0u64;
    for e in 0..bound {
        let colon: Vec<Monomial> = leads
            .iter()
            .filter(|m| m.exp(v) <= e)
            .map(|m| m.with_exp(v, 0))
            .collect();
        total += count(&minimalize(colon), rest)?;
    }
    Some(total)
}

/// Projective dimension from the leading-term ideal: the largest set of
/// variables containing the support of no leading monomial, minus one.
pub(crate) fn projective_dimension(gb: &GroebnerBasis) -> i64 {
    let nvars = gb.ring().ngens();
    let supports: Vec<u32> = gb
        .leading_monomials()
        .iter()
        .map(|m| m.support(nvars).fold(0u32, |acc, i| acc | (1 << i)))
        .collect();
    if supports.contains(&0) {
        return -1;
    }
    let mut best = 0u32;
    for set in 0u32..(1 << nvars) {
        let size = set.count_ones();
        if size > best && supports.iter().all(|&s| s & !set != 0) {
            best = size;
        }
    }
    best as i64 - 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn staircase_counts() {
        // (x^2, y^3) in two variables: 6 standard monomials
        assert_eq!(
            count_standard_monomials(&[m(&[2, 0]), m(&[0, 3])], 2),
            QuotientDimension::Finite(6)
        );
        // (x^2, xy, y^2): 1, x, y
        assert_eq!(
            count_standard_monomials(&[m(&[2, 0]), m(&[1, 1]), m(&[0, 2])], 2),
            QuotientDimension::Finite(3)
        );
        assert_eq!(
            count_standard_monomials(&[m(&[2, 0])], 2),
            QuotientDimension::Infinite
        );
        assert_eq!(
            count_standard_monomials(&[m(&[0, 0])], 2),
            QuotientDimension::Finite(0)
        );
        let all_vars: Vec<_> = (0..4).map(Monomial::var).collect();
        assert_eq!(
            count_standard_monomials(&all_vars, 4),
            QuotientDimension::Finite(1)
        );
    }
}
