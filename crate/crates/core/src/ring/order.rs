use std::cmp::Ordering;

use super::monomial::Monomial;

/// Term orders used by the Gröbner engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[derive(Default)]
pub enum MonomialOrder {
    #[default]
    GrevLex,
    Lex,
    /// Block order: variables `split..` form the leading (eliminated) block,
    /// variables `..split` the trailing block; grevlex inside each block.
    Elimination {
        split: usize,
    },
}


fn grevlex_block(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    let da = a.block_degree(lo, hi);
    let db = b.block_degree(lo, hi);
    if da != db {
        return da.cmp(&db);
    }
    for i in (lo..hi).rev() {
        let (ea, eb) = (a.exp(i), b.exp(i));
        if ea != eb {
            return eb.cmp(&ea);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial, nvars: usize) -> Ordering {
        match *self {
            MonomialOrder::GrevLex => {
                if a.degree() != b.degree() {
                    return a.degree().cmp(&b.degree());
                }
                let (ea, eb) = (a.exponents(), b.exponents());
                for i in (0..nvars).rev() {
                    if ea[i] != eb[i] {
                        return eb[i].cmp(&ea[i]);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Lex => {
                let (ea, eb) = (a.exponents(), b.exponents());
                for i in 0..nvars {
                    if ea[i] != eb[i] {
                        return ea[i].cmp(&eb[i]);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Elimination { split } => {
                grevlex_block(a, b, split, nvars).then_with(|| grevlex_block(a, b, 0, split))
            }
        }
    }

    /// True when the order refines total degree.
    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::GrevLex)
    }
}
