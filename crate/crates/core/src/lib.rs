//! Exact computations with finite-dimensional quiver algebras and bounded
//! complexes of projective modules.
//!
//! The crate is organised bottom-up: [`field`] and [`linalg`] provide exact
//! arithmetic, [`algebra`] builds normal-form bases of `kQ/I`, [`modules`]
//! handles representations, [`complexes`] works in the homotopy category of
//! perfect complexes, [`criteria`] decides the socle and trace conditions,
//! and [`search`] enumerates exceptional objects and tilting complexes.

pub mod algebra;
pub mod complexes;
pub mod criteria;
pub mod error;
pub mod field;
pub mod linalg;
pub mod modules;
pub mod search;

pub use error::{Error, Result};
