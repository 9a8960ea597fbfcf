use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extalg::ExtVector;
use crate::kernel::{Rat, RatMatrix};

/// An `N`-plane in `H_N`, given by a `2N x N` matrix whose row `r` is the
/// coefficient of `e_{r-N}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Subspace {
    pub n: usize,
    pub w: RatMatrix,
}

/// Row of `e_k` in a `2N x N` frame.
pub fn row_of(n: usize, k: i32) -> usize {
    (k + n as i32) as usize
}

/// `ω_N(e_i, e_j) = (-1)^i δ_{i,-j-1}`.
pub fn omega_form(i: i32, j: i32) -> Rat {
    if i == -j - 1 {
        Rat::sign(i as i64)
    } else {
        Rat::zero()
    }
}

impl Subspace {
    pub fn from_matrix(n: usize, w: RatMatrix) -> Result<Self> {
        if w.rows() != 2 * n || w.cols() != n {
            return Err(Error::Dimension(format!("frame must be {}x{n}, got {}x{}", 2 * n, w.rows(), w.cols())));
        }
        let rank = w.rank();
        if rank != n {
            return Err(Error::RankDeficient { rank, expected: n });
        }
        Ok(Subspace { n, w })
    }

    /// Big-cell element with affine coordinates `A`; requires `A = Aᵀ`.
    pub fn from_affine(a: &RatMatrix) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::Dimension(format!("affine matrix is {}x{}", a.rows(), a.cols())));
        }
        if !a.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Self::from_affine_unchecked(a)
    }

    /// Same construction without the symmetry check; the result is Lagrangian iff `A = Aᵀ`.
    /// Column `c` is `e_{-i} + Σ_j A_{ij} (-1)^{j-1} e_{j-1}` with `i = N - c`, so the
    /// `e_{-N}..e_{-1}` block is the identity.
    pub fn from_affine_unchecked(a: &RatMatrix) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::Dimension(format!("affine matrix is {}x{}", a.rows(), a.cols())));
        }
        let n = a.rows();
        let mut w = RatMatrix::zeros(2 * n, n);
        for c in 0..n {
            let i = n - c;
            w[(row_of(n, -(i as i32)), c)] = Rat::one();
            for j in 1..=n {
                w[(row_of(n, j as i32 - 1), c)] = &a[(i - 1, j - 1)] * Rat::sign(j as i64 - 1);
            }
        }
        Ok(Subspace { n, w })
    }

    /// The vacuum plane `V = span(e_{-N}, ..., e_{-1})`.
    pub fn vacuum(n: usize) -> Self {
        Self::from_affine_unchecked(&RatMatrix::zeros(n, n)).expect("square")
    }

    pub fn omega_pairing(&self, a: usize, b: usize) -> Rat {
        let n = self.n as i32;
        let mut acc = Rat::zero();
        for i in -n..n {
            let wi = &self.w[(row_of(self.n, i), a)];
            if wi.is_zero() {
                continue;
            }
            let j = -i - 1;
            acc += wi * &self.w[(row_of(self.n, j), b)] * omega_form(i, j);
        }
        acc
    }

    /// The columns wedged last to first. For an affine frame this is `w_1 ∧ ... ∧ w_N`
    /// with `w_i = e_{-i} + ...`, so the vacuum term has coefficient 1 in the `f` basis.
    pub fn wedge(&self) -> ExtVector {
        let mut out = ExtVector::scalar(self.n, Rat::one());
        for c in (0..self.n).rev() {
            let mut col = ExtVector::zero(self.n);
            for k in -(self.n as i32)..self.n as i32 {
                let x = &self.w[(row_of(self.n, k), c)];
                if !x.is_zero() {
                    col.add_term(vec![k], x.clone());
                }
            }
            out = out.wedge(&col).expect("same n");
        }
        out
    }

    pub fn is_lagrangian(&self) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| self.omega_pairing(a, b).is_zero()))
    }

    /// Scales each symplectic plane `(e_{-i}, e_{i-1})` by `ε_i = ±1`.
    pub fn z2_orbit(&self, eps: &[i8]) -> Result<Self> {
        if eps.len() != self.n || eps.iter().any(|&e| e != 1 && e != -1) {
            return Err(Error::InvalidArgument(format!("need {} signs ±1, got {eps:?}", self.n)));
        }
        let mut w = self.w.clone();
        for (k, &e) in eps.iter().enumerate() {
            if e == 1 {
                continue;
            }
            let i = k as i32 + 1;
            for r in [row_of(self.n, -i), row_of(self.n, i - 1)] {
                for c in 0..self.n {
                    w[(r, c)] = -&w[(r, c)];
                }
            }
        }
        Ok(Subspace { n: self.n, w })
    }
}
