use serde::{Deserialize, Serialize};

use crate::kernel::Rat;

/// One named relation instance and its exact residual.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Residual {
    pub relation: String,
    pub residual: Rat,
}

impl Residual {
    pub fn new(relation: impl Into<String>, residual: Rat) -> Self {
        Residual { relation: relation.into(), residual }
    }

    pub fn is_zero(&self) -> bool {
        self.residual.is_zero()
    }
}

pub fn all_zero(rs: &[Residual]) -> bool {
    rs.iter().all(Residual::is_zero)
}

pub fn nonzero(rs: &[Residual]) -> Vec<&Residual> {
    rs.iter().filter(|r| !r.is_zero()).collect()
}
