//! Exact computations with finite-dimensional Hopf algebras: Drinfeld
//! doubles, integrals and Radford data, and the classification of ribbon
//! elements of doubles.

pub mod catalog;
pub mod double;
pub mod error;
pub mod hopf;
pub mod json;
pub mod linalg;
pub mod radford;
pub mod ribbon;

pub use error::{Error, Result};
