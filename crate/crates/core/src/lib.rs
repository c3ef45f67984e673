//! Exact symbolic workbench for absolute Kähler differentials on the
//! projective line over a finitely generated constant field.

pub mod algebra;
pub mod cousin;
pub mod differentials;
pub mod error;
pub mod k2;
pub mod random;

pub use error::{Error, Result};
