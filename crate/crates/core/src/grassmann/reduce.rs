//! Contraction followed by projection, reducing an element of `Λ^N(H_N)` to
//! `Λ^3(C^6)` for each marked multi-index.

use serde::Serialize;

use super::plucker::{plucker_residuals, PluckerVector, RelationMode};
use crate::combinat::{marked_indices, MarkedMultiIndex};
use crate::error::{Error, Result};
use crate::extalg::{omega_contract, ExtVector};
use crate::kernel::Rat;
use crate::residual::{all_zero, Residual};

/// e-index and sign of `f_i = e_{-i}` (`starred = false`) or `f*_i = (-1)^{i-1} e_{i-1}`.
pub fn f_index(i: usize, starred: bool) -> (i32, Rat) {
    if starred {
        (i as i32 - 1, Rat::sign(i as i64 - 1))
    } else {
        (-(i as i32), Rat::one())
    }
}

fn check(phi: &ExtVector, m: &MarkedMultiIndex) -> Result<()> {
    if phi.n() != m.n || m.n < 3 {
        return Err(Error::InvalidArgument(format!("marking for N={} applied to an element of H_{}", m.n, phi.n())));
    }
    MarkedMultiIndex::new(m.n, m.i.clone(), m.starred.clone()).map(|_| ())
}

/// `i_{f_{(A,I)}} φ`, contracting with `f_{A(I_1)} ∧ f_{A(I_2)} ∧ ...`.
pub fn contract_marked(phi: &ExtVector, m: &MarkedMultiIndex) -> Result<ExtVector> {
    check(phi, m)?;
    let mut idx = Vec::new();
    let mut c = Rat::one();
    for (&i, &s) in m.i.iter().zip(&m.starred) {
        let (e, sg) = f_index(i, s);
        idx.push(e);
        c *= sg;
    }
    phi.contract(&ExtVector::wedge_of(phi.n(), &idx, c)?)
}

/// Drops every term containing one of the complementary factors `f_{B(I_j)}`.
pub fn project_marked(phi: &ExtVector, m: &MarkedMultiIndex) -> Result<ExtVector> {
    check(phi, m)?;
    let banned: Vec<i32> = m.i.iter().zip(&m.starred).map(|(&i, &s)| f_index(i, !s).0).collect();
    let mut out = ExtVector::zero(phi.n());
    for (k, c) in phi.terms() {
        if !k.iter().any(|x| banned.contains(x)) {
            out.add_term(k.clone(), c.clone());
        }
    }
    Ok(out)
}

/// Projection then contraction, relabelled onto `H_3` so the surviving pairs
/// `(f_s, f*_s)` become `(f_1, f*_1), (f_2, f*_2), (f_3, f*_3)` in increasing `s`.
pub fn reduce36(phi: &ExtVector, m: &MarkedMultiIndex) -> Result<ExtVector> {
    let reduced = contract_marked(&project_marked(phi, m)?, m)?;
    let surv = m.survivors();
    let mut out = ExtVector::zero(3);
    for (key, c) in reduced.terms() {
        let mut new_key = Vec::with_capacity(key.len());
        let mut c = c.clone();
        for &e in key {
            let (s, pos) = if e < 0 { ((-e) as usize, false) } else { (e as usize + 1, true) };
            let k = surv.iter().position(|&x| x == s).expect("only surviving pairs remain") + 1;
            if pos {
                // e_{s-1} = (-1)^{s-1} f*_s  ->  (-1)^{s-1} f*_k = (-1)^{s-1}(-1)^{k-1} e_{k-1}
                c *= Rat::sign((s + k) as i64);
                new_key.push(k as i32 - 1);
            } else {
                new_key.push(-(k as i32));
            }
        }
        // the relabelling preserves the order of indices
        out.add_term(new_key, c);
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReductionStatus {
    Pass,
    Fail,
    /// The contraction vanished, so the reduction says nothing.
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionReport {
    pub marking: MarkedMultiIndex,
    pub status: ReductionStatus,
    pub residuals: Vec<Residual>,
}

/// Plücker and isotropy residuals of a `Λ^3(C^6)` element.
pub fn gr36_residuals(v: &ExtVector) -> Result<Vec<Residual>> {
    let pi = PluckerVector::from_ext_vector(v)?;
    let mut out = plucker_residuals(&pi, RelationMode::Full);
    for (k, c) in omega_contract(v).terms() {
        let parts: Vec<String> = k.iter().map(i32::to_string).collect();
        out.push(Residual::new(format!("isotropy [{}]", parts.join(",")), c.clone()));
    }
    Ok(out)
}

/// Runs every reduction of a degree-`N` element and checks each output.
pub fn check_reductions(phi: &ExtVector) -> Result<Vec<ReductionReport>> {
    let mut out = Vec::new();
    for m in marked_indices(phi.n())? {
        let v = reduce36(phi, &m)?;
        let (status, residuals) = if v.is_zero() {
            (ReductionStatus::Inconclusive, Vec::new())
        } else {
            let rs = gr36_residuals(&v)?;
            (if all_zero(&rs) { ReductionStatus::Pass } else { ReductionStatus::Fail }, rs)
        };
        out.push(ReductionReport { marking: m, status, residuals });
    }
    Ok(out)
}
