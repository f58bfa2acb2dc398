//! Exact computer algebra for regularity experiments: polynomial arithmetic,
//! Gröbner bases, monomial ideals and their regularity, Newton polyhedra and
//! graded families of ideals.

pub mod algebra;
pub mod error;
pub mod experiments;
pub mod families;
pub mod groebner;
pub mod monomial;
pub mod polyhedra;

pub use error::{Error, Result};
