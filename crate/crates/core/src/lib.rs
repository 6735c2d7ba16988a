//! Rotational surfaces in Lorentz-Minkowski 3-space built from free elasticae,
//! with numerical checks that they solve the O(2,1) sigma model.

pub mod elastica;
pub mod elliptic;
pub mod error;
pub mod expr;
pub mod gaussbonnet;
pub mod gluing;
pub mod mink;
pub mod shape;
pub mod surface;

pub use error::{Error, Result};
