//! The tableau basis `Φ_{j,T,K}` of `Λ(H_N)` adapted to the Sp-decomposition.

use serde::{Deserialize, Serialize};

use super::symplectic::x_elem;
use super::vector::ExtVector;
use crate::combinat::{admissible_tableaux, StandardTableau};
use crate::error::{Error, Result};
use crate::kernel::Rat;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BasisElement {
    pub n: usize,
    pub j: usize,
    pub tableau: StandardTableau,
    /// Isotropic index set, increasing.
    pub k: Vec<i32>,
}

/// Pairs `(-i, i-1)` untouched by `K`, labelled by `-i` and listed as `-1, -2, ...`.
pub fn k_bar(n: usize, k: &[i32]) -> Vec<i32> {
    (1..=n as i32).map(|i| -i).filter(|&a| !k.contains(&a) && !k.contains(&(-a - 1))).collect()
}

pub fn is_isotropic_set(n: usize, k: &[i32]) -> bool {
    k.windows(2).all(|w| w[0] < w[1])
        && k.iter().all(|&i| ExtVector::in_range(n, i))
        && k.iter().all(|&i| !k.contains(&(-i - 1)))
}

impl BasisElement {
    pub fn new(n: usize, j: usize, tableau: StandardTableau, k: Vec<i32>) -> Result<Self> {
        let b = BasisElement { n, j, tableau, k };
        b.validate()?;
        Ok(b)
    }

    /// Number of two-box rows of the tableau.
    pub fn l(&self) -> usize {
        self.tableau.pairs().len()
    }

    pub fn validate(&self) -> Result<()> {
        if !is_isotropic_set(self.n, &self.k) {
            return Err(Error::InvalidArgument(format!("K = {:?} is not an isotropic index set", self.k)));
        }
        let m = k_bar(self.n, &self.k).len();
        let l = self.l();
        let shape_ok = self.tableau.is_standard()
            && self.tableau.shape.weight() == m
            && self.tableau.shape.part(0) <= 2
            && self.tableau.shape.parts().iter().filter(|&&p| p == 2).count() == l;
        if !shape_ok {
            return Err(Error::InvalidArgument(format!("tableau is not a standard admissible filling of size {m}")));
        }
        if 2 * l + self.j > m {
            return Err(Error::InvalidArgument(format!("j = {} exceeds |K̄| - 2l = {}", self.j, m - 2 * l)));
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        2 * self.j + 2 * self.l() + self.k.len()
    }
}

/// `Φ_{j,T,K} = (1/j!) ω_{K̄}^j V_T(X_{K̄}) ∧ e_K`, with `e_K` in decreasing order.
pub fn phi_basis_element(b: &BasisElement) -> Result<ExtVector> {
    b.validate()?;
    let n = b.n;
    let kb = k_bar(n, &b.k);
    let mut omega_kb = ExtVector::zero(n);
    for &a in &kb {
        omega_kb = &omega_kb + &x_elem(n, a)?;
    }
    let mut v = ExtVector::one(n);
    for (p, q) in b.tableau.pairs() {
        let factor = &x_elem(n, kb[p - 1])? - &x_elem(n, kb[q - 1])?;
        v = v.wedge(&factor)?;
    }
    let mut fact = Rat::one();
    for i in 1..=b.j {
        v = omega_kb.wedge(&v)?;
        fact *= Rat::from_int(i as i64);
    }
    let mut ek: Vec<i32> = b.k.clone();
    ek.reverse();
    let e_k = ExtVector::wedge_of(n, &ek, Rat::one())?;
    Ok(v.wedge(&e_k)?.scale(&fact.recip()?))
}

fn isotropic_sets(n: usize, size: usize) -> Vec<Vec<i32>> {
    // choose `size` distinct pairs, then one member of each
    let mut out = Vec::new();
    let pairs: Vec<i32> = (1..=n as i32).collect();
    fn rec(pairs: &[i32], start: usize, size: usize, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if cur.len() == size {
            let mut k = cur.clone();
            k.sort_unstable();
            out.push(k);
            return;
        }
        for idx in start..pairs.len() {
            let i = pairs[idx];
            for member in [-i, i - 1] {
                cur.push(member);
                rec(pairs, idx + 1, size, cur, out);
                cur.pop();
            }
        }
    }
    rec(&pairs, 0, size, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Every `(j, T, K)` with `2j + 2l + |K| = k`, in a fixed order (by `|K|`, then `K`, then `T`).
pub fn basis_elements(n: usize, k: usize, j: usize) -> Result<Vec<BasisElement>> {
    if 2 * j > k || k > n + j {
        return Err(Error::InvalidArgument(format!("need 2j <= k <= N + j, got N={n}, k={k}, j={j}")));
    }
    let mut out = Vec::new();
    let rest = k - 2 * j;
    for ksize in (0..=rest.min(n)).filter(|s| (rest - s) % 2 == 0) {
        let l = (rest - ksize) / 2;
        let m = n - ksize;
        if 2 * l + j > m {
            continue;
        }
        for kset in isotropic_sets(n, ksize) {
            for t in admissible_tableaux(m, l)? {
                out.push(BasisElement { n, j, tableau: t, k: kset.clone() });
            }
        }
    }
    Ok(out)
}

/// Basis of `P^k_{k-2j}`.
pub fn basis_p(n: usize, k: usize, j: usize) -> Result<Vec<ExtVector>> {
    basis_elements(n, k, j)?.iter().map(phi_basis_element).collect()
}

/// `C(2N, k-2j) - C(2N, k-2j-2)`.
pub fn dim_p(n: usize, k: usize, j: usize) -> u64 {
    let d = k as i64 - 2 * j as i64;
    crate::combinat::binomial(2 * n as i64, d).saturating_sub(crate::combinat::binomial(2 * n as i64, d - 2))
}

/// Differences `ω ∧ φ_j - (j+1) φ_{j+1}` and `i_ω φ_j - (|K̄| - 2l - j + 1) φ_{j-1}`,
/// with the out-of-range neighbour read as zero. Both vanish on every basis element.
pub fn ladder_residuals(b: &BasisElement) -> Result<(ExtVector, ExtVector)> {
    b.validate()?;
    let phi = phi_basis_element(b)?;
    let top = k_bar(b.n, &b.k).len() - 2 * b.l();
    let mut up = super::symplectic::omega_wedge(&phi);
    if b.j < top {
        let next = phi_basis_element(&BasisElement { j: b.j + 1, ..b.clone() })?;
        up = up.try_sub(&next.scale(&Rat::from_int(b.j as i64 + 1)))?;
    }
    let mut down = super::symplectic::omega_contract(&phi);
    if b.j > 0 {
        let prev = phi_basis_element(&BasisElement { j: b.j - 1, ..b.clone() })?;
        down = down.try_sub(&prev.scale(&Rat::from_int((top - b.j + 1) as i64)))?;
    }
    Ok((up, down))
}
