//! Prime-field polynomial rings in `x_0..x_n` with an optional auxiliary variable `T`.

mod monomial;
mod order;
mod poly;
mod random;

use std::sync::Arc;

pub use monomial::{Monomial, MAX_VARS};
pub use order::MonomialOrder;
pub use poly::{Polynomial, Term};
pub(crate) use random::combine;
pub use random::{random_linear_combination, random_linear_form, SeededRng};

use crate::error::{Error, Result};
use crate::field::FieldSpec;

/// Variable names, coefficient field and term order of a polynomial ring.
///
/// When `aux` is set the last variable is the auxiliary `T` used by the
/// inversion and elimination tricks; it never appears in user-facing ideals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    field: FieldSpec,
    names: Vec<String>,
    aux: bool,
    order: MonomialOrder,
}

impl Ring {
    /// `k[x_0, ..., x_n]` with grevlex order.
    pub fn projective(field: FieldSpec, n: usize) -> Result<Arc<Ring>> {
        if n < 1 {
            return Err(Error::InvalidRing(
                "projective dimension must be at least 1".into(),
            ));
        }
        let names = (0..=n).map(|i| format!("x{i}")).collect();
        Ring::new(field, names, false, MonomialOrder::GrevLex)
    }

    pub fn new(
        field: FieldSpec,
        names: Vec<String>,
        aux: bool,
        order: MonomialOrder,
    ) -> Result<Arc<Ring>> {
        if names.is_empty() {
            return Err(Error::InvalidRing("no variables".into()));
        }
        if names.len() > MAX_VARS {
            return Err(Error::InvalidRing(format!(
                "{} variables exceed the supported maximum of {MAX_VARS}",
                names.len()
            )));
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(Error::InvalidRing(format!("duplicate variable name {a}")));
            }
        }
        if let MonomialOrder::Elimination { split } = order {
            if split == 0 || split >= names.len() {
                return Err(Error::InvalidRing(format!(
                    "elimination split {split} outside 1..{}",
                    names.len()
                )));
            }
        }
        Ok(Arc::new(Ring {
            field,
            names,
            aux,
            order,
        }))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    /// Number of non-auxiliary variables.
    pub fn ngens(&self) -> usize {
        self.names.len() - self.aux as usize
    }

    /// Projective dimension of the ambient space spanned by the non-auxiliary variables.
    pub fn n(&self) -> usize {
        self.ngens() - 1
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn aux_index(&self) -> Option<usize> {
        self.aux.then(|| self.names.len() - 1)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<Ring>> {
        Ring::new(self.field, self.names.clone(), self.aux, order)
    }

    /// Appends an auxiliary variable placed in the leading block of an elimination order.
    pub fn with_aux_eliminating(&self, name: &str) -> Result<Arc<Ring>> {
        let mut names = self.names.clone();
        names.push(name.to_string());
        let split = names.len() - 1;
        Ring::new(
            self.field,
            names,
            true,
            MonomialOrder::Elimination { split },
        )
    }

    /// Same variables with the auxiliary one removed (grevlex).
    pub fn without_aux(&self) -> Result<Arc<Ring>> {
        let names = self.names[..self.ngens()].to_vec();
        Ring::new(self.field, names, false, MonomialOrder::GrevLex)
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
        self.order.compare(a, b, self.names.len())
    }
}
