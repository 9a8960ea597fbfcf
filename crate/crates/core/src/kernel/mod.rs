//! Exact scalars, matrices and polynomials.

pub mod matrix;
pub mod poly;
pub mod rat;
pub mod ring;

pub use matrix::RatMatrix;
pub use poly::SymPoly;
pub use rat::Rat;
pub use ring::{Ring, UPoly};
