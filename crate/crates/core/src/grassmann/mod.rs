//! Finite Grassmannian elements, Plücker data and Lagrangian conditions.

pub mod lagrange;
pub mod plucker;
pub mod reduce;
pub mod subspace;

pub use lagrange::{
    lagrange_map, lagrangian_linear_residuals, linear_relation_residuals, subsets_by_size, two_term_residuals,
    LagrangeCoefficients,
};
pub use plucker::{plucker, plucker_residuals, PluckerVector, RelationMode};
pub use reduce::{check_reductions, reduce36, ReductionReport, ReductionStatus};
pub use subspace::Subspace;
