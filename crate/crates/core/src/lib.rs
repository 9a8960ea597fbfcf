//! Exact rational machinery for Lagrangian Grassmannians, Plücker coordinates,
//! hyperdeterminantal relations, free-fermion Fock space and CKP tau-functions.

pub mod cli;
pub mod combinat;
pub mod error;
pub mod extalg;
pub mod fock;
pub mod grassmann;
pub mod hyperdet;
pub mod kernel;
pub mod residual;
pub mod sample;
pub mod symfunc;
pub mod tau;

pub use error::{Error, Result};
pub use kernel::{Rat, RatMatrix, SymPoly};
