//! Polynomial KP τ-functions `τ(t) = Σ π_λ s_λ(t)` built from finite Grassmannian
//! data, with the CKP, Sato, Hirota, Fay and hyperdeterminantal checks.

pub mod family;

use serde::{Deserialize, Serialize};

use crate::combinat::Partition;
use crate::error::{Error, Result};
use crate::grassmann::{plucker, PluckerVector, Subspace};
use crate::kernel::ring::det_laplace;
use crate::kernel::{Rat, RatMatrix, Ring, SymPoly, UPoly};
use crate::symfunc::{miwa_coeff, SchurTable};

pub use family::{a_matrix, fay_residual, family_residual, FamilyEvaluator, ShiftSpec};

#[derive(Clone, Debug)]
pub struct TauPoly {
    pub n: usize,
    pub poly: SymPoly,
    pub source: PluckerVector,
    /// A frame spanning the source plane, when one is known; enables the
    /// `det(G W)` evaluation path.
    pub frame: Option<Subspace>,
}

/// `h_0..=h_kmax` at the point `t`, from `k h_k = Σ i t_i h_{k-i}`.
pub fn h_values(t: &[Rat], kmax: usize) -> Vec<Rat> {
    let mut h = vec![Rat::one()];
    for k in 1..=kmax {
        let mut acc = Rat::zero();
        for i in 1..=k.min(t.len()) {
            if !t[i - 1].is_zero() {
                acc += &t[i - 1] * &h[k - i] * Rat::from_int(i as i64);
            }
        }
        h.push(acc * Rat::new(1, k as i64));
    }
    h
}

/// `t + Σ c·[x]`, truncated or zero-padded to `len` entries.
pub fn shift_times(t: &[Rat], len: usize, shifts: &[(Rat, i64)]) -> Vec<Rat> {
    (1..=len)
        .map(|j| {
            let mut v = t.get(j - 1).cloned().unwrap_or_else(Rat::zero);
            for (x, c) in shifts {
                v += miwa_coeff(x, j) * Rat::from_int(*c);
            }
            v
        })
        .collect()
}

impl TauPoly {
    /// `Σ π_λ s_λ` in `m` variables; `m` must cover every nonzero coordinate's weight.
    pub fn from_plucker(pi: &PluckerVector, m: usize) -> Result<Self> {
        let need = pi.iter().filter(|(_, c)| !c.is_zero()).map(|(l, _)| l.weight()).max().unwrap_or(0);
        if need > m {
            return Err(Error::TruncationTooSmall { need, have: m });
        }
        let table = SchurTable::shared(m);
        let mut poly = SymPoly::zero(m);
        for (lam, c) in pi.iter() {
            if !c.is_zero() {
                poly = poly + &table.schur(lam)?.scale(c);
            }
        }
        Ok(TauPoly { n: pi.n, poly, source: pi.clone(), frame: None })
    }

    /// τ of the plane spanned by `w`, in `N²` variables.
    pub fn from_subspace(w: &Subspace) -> Result<Self> {
        let pi = plucker(w)?;
        let mut tau = Self::from_plucker(&pi, w.n * w.n)?;
        tau.frame = Some(w.clone());
        Ok(tau)
    }

    pub fn m(&self) -> usize {
        self.poly.m()
    }

    /// Largest `k` with `h_k` entering any evaluation.
    fn h_len(&self) -> usize {
        (2 * self.n).max(1)
    }

    /// `τ` from the values `h_0, h_1, ...` of the complete polynomials at some point,
    /// over any ring. `h` must hold at least `2N` entries.
    pub fn eval_from_h<R: Ring>(&self, h: &[R]) -> R {
        let unit = h[0].one_like();
        let hk = |k: i64| -> R {
            if k < 0 {
                unit.zero_like()
            } else {
                h.get(k as usize).cloned().unwrap_or_else(|| unit.zero_like())
            }
        };
        if let Some(w) = &self.frame {
            return frame_det(w, &hk, &unit);
        }
        let mut acc = unit.zero_like();
        for (lam, c) in self.source.iter() {
            if c.is_zero() {
                continue;
            }
            acc = acc + &jacobi_trudi(lam, &hk, &unit).scale(c);
        }
        acc
    }

    /// `τ(t)` at a rational point; entries of `t` beyond those that matter are ignored.
    pub fn eval(&self, t: &[Rat]) -> Rat {
        self.eval_from_h(&h_values(t, self.h_len()))
    }

    /// `τ(t + Σ c [x])`.
    pub fn eval_shifted(&self, t: &[Rat], shifts: &[(Rat, i64)]) -> Rat {
        self.eval(&shift_times(t, self.h_len(), shifts))
    }

    /// `τ(t - [u])` as a polynomial in `u`.
    pub fn minus_series(&self, t: &[Rat], cap: usize) -> UPoly {
        let h = h_values(t, self.h_len());
        let hs: Vec<UPoly> = (0..h.len())
            .map(|k| {
                let prev = if k == 0 { Rat::zero() } else { -&h[k - 1] };
                UPoly::from_coeffs(vec![h[k].clone(), prev], cap)
            })
            .collect();
        self.eval_from_h(&hs)
    }

    /// `τ(t + [u])` as a polynomial in `u`, truncated below degree `cap`.
    pub fn plus_series(&self, t: &[Rat], cap: usize) -> UPoly {
        let h = h_values(t, self.h_len());
        let hs: Vec<UPoly> = (0..h.len()).map(|k| UPoly::from_coeffs(h[..=k].iter().rev().cloned().collect(), cap)).collect();
        self.eval_from_h(&hs)
    }

    /// Whether `τ(t) = τ(t̃)` holds identically.
    pub fn is_ckp(&self) -> bool {
        ckp_residual(self).symmetry.is_zero()
    }
}

/// Cauchy–Binet: `Σ_λ π_λ s_λ = ± det(G W)` with `G_{j,k} = h_{k+j}`. Homogeneous of
/// degree `N` in the `h` values and linear in each column of `w`.
fn frame_det<R: Ring>(w: &Subspace, hk: &impl Fn(i64) -> R, unit: &R) -> R {
    let n = w.n;
    let mut gw = vec![vec![unit.zero_like(); n]; n];
    for (j, row) in gw.iter_mut().enumerate() {
        for r in 0..2 * n {
            let g = hk(r as i64 - n as i64 + j as i64 + 1);
            if g.is_zero() {
                continue;
            }
            for (c, slot) in row.iter_mut().enumerate() {
                let wv = &w.w[(r, c)];
                if !wv.is_zero() {
                    *slot = slot.clone() + &g.scale(wv);
                }
            }
        }
    }
    det_laplace(&gw, unit).scale(&Rat::sign((n * (n.saturating_sub(1)) / 2) as i64))
}

fn jacobi_trudi<R: Ring>(lam: &Partition, hk: &impl Fn(i64) -> R, unit: &R) -> R {
    let l = lam.len();
    let mat: Vec<Vec<R>> =
        (0..l).map(|i| (0..l).map(|j| hk(lam.part(i) as i64 - i as i64 + j as i64)).collect()).collect();
    det_laplace(&mat, unit)
}

pub fn tau_from_plucker(pi: &PluckerVector, m: usize) -> Result<TauPoly> {
    TauPoly::from_plucker(pi, m)
}

/// τ of the big-cell plane of a symmetric `A`.
pub fn tau_from_symmetric(a: &RatMatrix) -> Result<TauPoly> {
    TauPoly::from_subspace(&Subspace::from_affine(a)?)
}

/// τ of the big-cell plane of any square `A`; not CKP unless `A` is symmetric.
pub fn tau_from_affine(a: &RatMatrix) -> Result<TauPoly> {
    TauPoly::from_subspace(&Subspace::from_affine_unchecked(a)?)
}

#[derive(Clone, Debug, Serialize)]
pub struct CkpReport {
    /// `τ(t) - τ(t̃)` with `t̃ = (t_1, -t_2, t_3, -t_4, ...)`.
    pub symmetry: SymPoly,
    /// `∂τ/∂t_{2j}` with every even time set to zero, for `2j <= m`.
    pub even_derivatives: Vec<(usize, SymPoly)>,
}

impl CkpReport {
    pub fn is_zero(&self) -> bool {
        self.symmetry.is_zero() && self.even_derivatives.iter().all(|(_, p)| p.is_zero())
    }
}

pub fn ckp_residual(tau: &TauPoly) -> CkpReport {
    let m = tau.m();
    let f: Vec<Rat> = (1..=m).map(|k| Rat::sign(k as i64 + 1)).collect();
    let tilde = tau.poly.scale_vars(&f).expect("length m");
    let even_derivatives = (2..=m)
        .step_by(2)
        .map(|k| (k, crate::symfunc::restrict_odd(&tau.poly.derivative(k).expect("k <= m"))))
        .collect();
    CkpReport { symmetry: &tau.poly - &tilde, even_derivatives }
}

/// Coefficients `a_0..=a_order` of `τ(t - [z^{-1}]) / τ(t) = Σ a_i z^{-i}`, each as a
/// power series in `t` truncated above weight `weight`.
pub fn baker_series(tau: &TauPoly, order: usize, weight: u64) -> Result<Vec<SymPoly>> {
    if order == 0 {
        return Err(Error::InvalidArgument("baker series order must be at least 1".into()));
    }
    let m = tau.m();
    let inv = tau.poly.series_inverse(weight)?;
    // u = z^{-1} rides along as an extra variable t_{m+1}
    let table = SchurTable::shared(m);
    let u = SymPoly::var(m + 1, m + 1)?;
    let h: Vec<SymPoly> = (0..=m).map(|k| table.h(k as i64).widen(m + 1)).collect();
    let shifted: Vec<SymPoly> =
        (0..=m).map(|k| if k == 0 { h[0].clone() } else { &h[k] - &(&u * &h[k - 1]) }).collect();
    let hk = |k: i64| -> SymPoly {
        usize::try_from(k).ok().and_then(|k| shifted.get(k).cloned()).unwrap_or_else(|| SymPoly::zero(m + 1))
    };
    let unit = SymPoly::one(m + 1);
    let mut num = SymPoly::zero(m + 1);
    for (lam, c) in tau.source.iter() {
        if !c.is_zero() {
            num = num + &jacobi_trudi(lam, &hk, &unit).scale(c);
        }
    }
    let mut coeffs = vec![SymPoly::zero(m); order + 1];
    for (e, c) in num.terms() {
        let i = e[m] as usize;
        if i <= order {
            coeffs[i].add_term(e[..m].to_vec(), c.clone());
        }
    }
    Ok(coeffs.iter().map(|n| n.mul_truncated(&inv, weight)).collect())
}

/// Coefficient of `z^{-1}` in `e^{-ξ(δt, z)} τ(t - [z^{-1}]) τ(t + δt + [z^{-1}])`,
/// the bilinear identity with `t' = t + δt`. Zero for every genuine KP τ.
pub fn hirota_residual(tau: &TauPoly, t: &[Rat], dt: &[Rat], truncation: usize) -> Result<Rat> {
    // τ(t - [u]) has u-degree <= N and τ(t' + [u]) has u-degree <= the top weight
    let top = tau.source.iter().filter(|(_, c)| !c.is_zero()).map(|(l, _)| l.weight()).max().unwrap_or(0);
    let need = top + tau.n;
    if truncation < need || dt.len() > truncation {
        return Err(Error::TruncationTooSmall { need: need.max(dt.len()), have: truncation });
    }
    let cap = need + 2;
    let t2: Vec<Rat> = (0..t.len().max(dt.len()))
        .map(|i| t.get(i).cloned().unwrap_or_else(Rat::zero) + dt.get(i).cloned().unwrap_or_else(Rat::zero))
        .collect();
    let f = tau.minus_series(t, cap) * tau.plus_series(&t2, cap);
    let neg: Vec<Rat> = dt.iter().map(|x| -x).collect();
    let e = h_values(&neg, need);
    let mut acc = Rat::zero();
    for (k, ek) in e.iter().enumerate() {
        acc += ek * &f.coeff(k + 1);
    }
    Ok(acc)
}

#[derive(Serialize, Deserialize)]
struct CoordJson {
    lambda: Partition,
    c: Rat,
}

#[derive(Serialize, Deserialize)]
struct TauJson {
    n: usize,
    m: usize,
    plucker: Vec<CoordJson>,
}

impl Serialize for TauPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let plucker = self
            .source
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(l, c)| CoordJson { lambda: l.clone(), c: c.clone() })
            .collect();
        TauJson { n: self.n, m: self.m(), plucker }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TauPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = TauJson::deserialize(d)?;
        let pi = PluckerVector::new(j.n, j.plucker.into_iter().map(|c| (c.lambda, c.c))).map_err(serde::de::Error::custom)?;
        TauPoly::from_plucker(&pi, j.m).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests;
