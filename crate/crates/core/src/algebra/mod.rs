//! Exact arithmetic for the constant field tower and the function field
//! `k(x)`, plus the reduction algorithms the other modules share.

pub mod base;
pub mod fraction;
pub mod intpoly;
mod modular;
pub mod poly;
pub mod reduce;
pub(crate) mod render;
pub mod scalar;
pub mod tower;

pub use base::BaseFrac;
pub use fraction::Fraction;
pub use intpoly::IntPoly;
pub use poly::Poly;
pub use reduce::{
    coprime_base, hermite_reduce, partial_fractions, polar_part, squarefree_decompose, trace_mod,
    HermiteReduction, PartialFractionTerm, PartialFractions, PolarTerm, SquarefreeDecomposition,
};
pub use scalar::Scalar;
pub use tower::TowerSpec;
