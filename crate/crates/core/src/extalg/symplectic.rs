use super::vector::ExtVector;
use crate::error::{Error, Result};
use crate::kernel::Rat;

/// `X_i = (-1)^i e_i ∧ e_{-i-1}`; note `X_i = X_{-i-1}`.
pub fn x_elem(n: usize, i: i32) -> Result<ExtVector> {
    if !ExtVector::in_range(n, i) {
        return Err(Error::Index(format!("X_{i} outside H_{n}")));
    }
    ExtVector::wedge_of(n, &[i, -i - 1], Rat::sign(i as i64))
}

/// `ω_N = Σ_{i=1..N} (-1)^i e_{-i} ∧ e_{i-1}`.
pub fn omega(n: usize) -> ExtVector {
    let mut w = ExtVector::zero(n);
    for i in 1..=n as i32 {
        w = &w + &x_elem(n, -i).expect("in range");
    }
    w
}

pub fn omega_wedge(phi: &ExtVector) -> ExtVector {
    omega(phi.n()).wedge(phi).expect("same N")
}

pub fn omega_contract(phi: &ExtVector) -> ExtVector {
    phi.contract(&omega(phi.n())).expect("same N")
}

/// `ω̂_N = -Σ_{i=0}^{N-1} (-1)^i ψ_{-i-1} ψ_i`.
pub fn omega_wedge_fermionic(phi: &ExtVector) -> ExtVector {
    let mut out = ExtVector::zero(phi.n());
    for i in 0..phi.n() as i32 {
        let t = phi.psi(i).psi(-i - 1);
        out = &out + &t.scale(&-Rat::sign(i as i64));
    }
    out
}

/// `ω̂†_N = Σ_{i=0}^{N-1} (-1)^i ψ†_{-i-1} ψ†_i`.
pub fn omega_contract_fermionic(phi: &ExtVector) -> ExtVector {
    let mut out = ExtVector::zero(phi.n());
    for i in 0..phi.n() as i32 {
        let t = phi.psi_dag(i).psi_dag(-i - 1);
        out = &out + &t.scale(&Rat::sign(i as i64));
    }
    out
}
