pub mod charclass;
pub mod chow;
pub mod error;
pub mod field;
pub mod groebner;
pub mod probability;
pub mod ring;

pub use charclass::{
    ClassReport, CsmAlgorithm, HypersurfaceMethod, Method, ProjectiveDegrees, Settings,
};
pub use chow::{ChowClass, EulerProfile};
pub use error::{Error, Result};
pub use field::FieldSpec;
pub use groebner::{GroebnerBasis, Ideal, QuotientDimension, SaturationMode};
pub use ring::{Monomial, MonomialOrder, Polynomial, Ring, SeededRng};
