//! Evaluations of τ at Miwa-shifted points: the `A`-matrix, the Fay addition
//! formula and the parametric hyperdeterminantal families.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::{frame_det, h_values, TauPoly};
use crate::grassmann::Subspace;
use crate::error::{Error, Result};
use crate::hyperdet::{cayley222, MinorCube};
use crate::kernel::{Rat, RatMatrix};

fn check_even_zero(t: &[Rat]) -> Result<()> {
    match t.iter().enumerate().find(|(i, v)| i % 2 == 1 && !v.is_zero()) {
        Some((i, _)) => Err(Error::Precondition(format!("t'_{} must be zero (even times vanish)", i + 1))),
        None => Ok(()),
    }
}

fn check_sums(x: &[Rat]) -> Result<()> {
    for (i, a) in x.iter().enumerate() {
        for b in &x[i..] {
            if (a + b).is_zero() {
                return Err(Error::Precondition(format!("x_i + x_j = 0 for x_i = {a}, x_j = {b}")));
            }
        }
    }
    Ok(())
}

/// `A_ij = τ(t' + [x_i] - [-x_j]) / ((x_i + x_j) τ(t'))`.
pub fn a_matrix(tau: &TauPoly, t: &[Rat], x: &[Rat]) -> Result<RatMatrix> {
    check_even_zero(t)?;
    check_sums(x)?;
    let base = tau.eval(t);
    if base.is_zero() {
        return Err(Error::Evaluation("τ(t') = 0".into()));
    }
    let k = x.len();
    let mut a = RatMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            let v = tau.eval_shifted(t, &[(x[i].clone(), 1), (-&x[j], -1)]);
            a[(i, j)] = v / (&(&x[i] + &x[j]) * &base);
        }
    }
    Ok(a)
}

/// LHS minus RHS of the `k x k` addition formula
/// `τ(t + Σ[x_i] - Σ[y_i]) / τ(t) · Π_{i<j}(x_i - x_j)(y_j - y_i) / Π_{i,j}(x_i - y_j)
///  = det( τ(t + [x_i] - [y_j]) / ((x_i - y_j) τ(t)) )`.
pub fn fay_residual(tau: &TauPoly, t: &[Rat], x: &[Rat], y: &[Rat]) -> Result<Rat> {
    let k = x.len();
    if k == 0 || k > 3 || y.len() != k {
        return Err(Error::InvalidArgument(format!("need 1 <= k <= 3 and |x| = |y|, got {} and {}", k, y.len())));
    }
    for a in x {
        for b in y {
            if a == b {
                return Err(Error::Precondition(format!("x_i = y_j = {a}")));
            }
        }
    }
    let base = tau.eval(t);
    if base.is_zero() {
        return Err(Error::Evaluation("τ(t) = 0".into()));
    }
    let mut shifts: Vec<(Rat, i64)> = x.iter().map(|v| (v.clone(), 1)).collect();
    shifts.extend(y.iter().map(|v| (v.clone(), -1)));
    let mut lhs = tau.eval_shifted(t, &shifts) / &base;
    for i in 0..k {
        for j in i + 1..k {
            lhs *= (&x[i] - &x[j]) * (&y[j] - &y[i]);
        }
        for b in y {
            lhs /= &x[i] - b;
        }
    }
    let mut m = RatMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            let v = tau.eval_shifted(t, &[(x[i].clone(), 1), (y[j].clone(), -1)]);
            m[(i, j)] = v / (&(&x[i] - &y[j]) * &base);
        }
    }
    Ok(lhs - m.det()?)
}

/// Miwa parameters `x` and lattice multiplicities `n` for `t' + Σ n_a([x_a] - [-x_a])`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftSpec {
    pub x: Vec<Rat>,
    pub n: Vec<i64>,
}

impl ShiftSpec {
    pub fn new(x: Vec<Rat>, n: Vec<i64>) -> Result<Self> {
        if x.len() != n.len() {
            return Err(Error::Dimension(format!("{} parameters and {} multiplicities", x.len(), n.len())));
        }
        check_sums(&x)?;
        Ok(ShiftSpec { x, n })
    }
}

/// Evaluates σ-cubes for one `(τ, t', x)`, memoizing τ at each lattice point.
///
/// Internally τ is carried as `T(n) = D·τ(n)` for one constant `D` chosen so that, when τ
/// has a frame, every `T(n)` is an integer: the `h`-series of `t'` and of the factors
/// `((1 + x z)/(1 - x z))^m` are scaled to integer coefficients and the frame columns
/// are cleared of denominators. The hyperdeterminant is homogeneous, so residuals are
/// computed on integers and divided once.
pub struct FamilyEvaluator<'a> {
    tau: &'a TauPoly,
    x: Vec<Rat>,
    frame: Option<Subspace>,
    h0: Vec<Rat>,
    /// Scale of each entry of `h0` times the product of the factor scales.
    h_scale: Rat,
    x_scale: Vec<Rat>,
    factors: HashMap<(usize, i64), Vec<Rat>>,
    scale: Rat,
    cache: HashMap<Vec<i64>, Rat>,
    prefactors: HashMap<[usize; 3], ([Rat; 8], Rat)>,
}

fn lcm_of_denominators<'b>(xs: impl Iterator<Item = &'b Rat>) -> Rat {
    let l = xs.fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    Rat::from(l)
}

fn series_mul(a: &[Rat], b: &[Rat], len: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

impl<'a> FamilyEvaluator<'a> {
    /// Checks the CKP symmetry of τ once; `t'` must have vanishing even entries.
    pub fn new(tau: &'a TauPoly, t: &[Rat], x: &[Rat]) -> Result<Self> {
        if !tau.is_ckp() {
            return Err(Error::Precondition("τ is not CKP-symmetric".into()));
        }
        Self::new_unchecked(tau, t, x)
    }

    /// As [`FamilyEvaluator::new`] without the CKP check, for callers that already did it.
    pub fn new_unchecked(tau: &'a TauPoly, t: &[Rat], x: &[Rat]) -> Result<Self> {
        check_even_zero(t)?;
        check_sums(x)?;
        let len = tau.h_len() + 1;
        let h = h_values(t, len - 1);
        let d0 = lcm_of_denominators(h.iter());
        let h0: Vec<Rat> = h.iter().map(|v| v * &d0).collect();
        let x_scale: Vec<Rat> =
            x.iter().map(|v| Rat::from(v.denom().clone()).pow(len as i32 - 1).expect("nonzero")).collect();
        let h_scale = x_scale.iter().fold(d0, |acc, s| acc * s);
        let (frame, scale) = match &tau.frame {
            Some(w) => {
                let mut w = w.clone();
                let mut col_scale = Rat::one();
                for c in 0..w.n {
                    let l = lcm_of_denominators((0..2 * w.n).map(|r| &w.w[(r, c)]));
                    w.w.scale_col(c, &l);
                    col_scale *= l;
                }
                (Some(w), h_scale.pow(tau.n as i32).expect("nonzero") * col_scale)
            }
            None => (None, Rat::one()),
        };
        Ok(FamilyEvaluator {
            tau,
            x: x.to_vec(),
            frame,
            h0,
            h_scale,
            x_scale,
            factors: HashMap::new(),
            scale,
            cache: HashMap::new(),
            prefactors: HashMap::new(),
        })
    }

    /// `((1 + x_a z)/(1 - x_a z))^m` truncated, times `x_scale[a]` (integer coefficients).
    fn factor(&mut self, a: usize, m: i64) -> &[Rat] {
        let len = self.h0.len();
        let x = &self.x[a];
        let sc = &self.x_scale[a];
        self.factors.entry((a, m)).or_insert_with(|| {
            let sign = if m >= 0 { Rat::one() } else { -Rat::one() };
            let base: Vec<Rat> =
                (0..len).map(|k| if k == 0 { Rat::one() } else { Rat::from_int(2) * (x * &sign).pow(k as i32).expect("x != 0") }).collect();
            let mut p = vec![Rat::one()];
            for _ in 0..m.unsigned_abs() {
                p = series_mul(&p, &base, len);
            }
            p.resize(len, Rat::zero());
            p.iter().map(|c| c * sc).collect()
        })
    }

    /// `D·τ(t' + Σ n_a([x_a] - [-x_a]))`.
    fn scaled_at(&mut self, n: &[i64]) -> Rat {
        if let Some(v) = self.cache.get(n) {
            return v.clone();
        }
        let len = self.h0.len();
        let mut h = self.h0.clone();
        for (a, &m) in n.iter().enumerate() {
            if m == 0 {
                let sc = self.x_scale[a].clone();
                h.iter_mut().for_each(|v| *v *= &sc);
            } else {
                let f = self.factor(a, m).to_vec();
                h = series_mul(&h, &f, len);
            }
        }
        let v = match &self.frame {
            Some(w) => {
                let hk = |k: i64| if k < 0 { Rat::zero() } else { h.get(k as usize).cloned().unwrap_or_else(Rat::zero) };
                frame_det(w, &hk, &Rat::one())
            }
            None => {
                let h: Vec<Rat> = h.iter().map(|v| v / &self.h_scale).collect();
                self.tau.eval_from_h(&h)
            }
        };
        self.cache.insert(n.to_vec(), v.clone());
        v
    }

    /// `τ(t' + Σ n_a([x_a] - [-x_a]))`.
    pub fn tau_at(&mut self, n: &[i64]) -> Rat {
        self.scaled_at(n) / &self.scale
    }

    fn check(&mut self, n: &[i64], triple: [usize; 3]) -> Result<()> {
        if n.len() != self.x.len() {
            return Err(Error::Dimension(format!("{} multiplicities for {} parameters", n.len(), self.x.len())));
        }
        if triple.iter().any(|&i| i == 0 || i > self.x.len())
            || triple[0] == triple[1]
            || triple[0] == triple[2]
            || triple[1] == triple[2]
        {
            return Err(Error::InvalidArgument(format!("triple {triple:?} must be distinct indices in 1..={}", self.x.len())));
        }
        if self.scaled_at(n).is_zero() {
            return Err(Error::Precondition(format!("τ vanishes at lattice point {n:?}")));
        }
        Ok(())
    }

    fn shifted(n: &[i64], triple: [usize; 3], mask: usize) -> Vec<i64> {
        let mut m = n.to_vec();
        for (b, &a) in triple.iter().enumerate() {
            if mask & (1 << b) != 0 {
                m[a - 1] += 1;
            }
        }
        m
    }

    /// Prefactors of the eight σ-values and their common denominator.
    fn prefactors(&mut self, triple: [usize; 3]) -> ([Rat; 8], Rat) {
        let x = &self.x;
        self.prefactors
            .entry(triple)
            .or_insert_with(|| {
                let mut p: [Rat; 8] = Default::default();
                for (mask, slot) in p.iter_mut().enumerate() {
                    let members: Vec<usize> = (0..3).filter(|b| mask & (1 << b) != 0).map(|b| triple[b] - 1).collect();
                    *slot = prefactor(x, &members);
                }
                let l = lcm_of_denominators(p.iter());
                (p, l)
            })
            .clone()
    }

    /// The eight σ-values at lattice point `n` for a triple of 1-based indices into `x`.
    pub fn sigma_cube(&mut self, n: &[i64], triple: [usize; 3]) -> Result<MinorCube> {
        self.check(n, triple)?;
        let (pref, _) = self.prefactors(triple);
        let mut values: [Rat; 8] = Default::default();
        for (mask, slot) in values.iter_mut().enumerate() {
            *slot = self.tau_at(&Self::shifted(n, triple, mask)) * &pref[mask];
        }
        Ok(MinorCube { values })
    }

    pub fn residual(&mut self, n: &[i64], triple: [usize; 3]) -> Result<Rat> {
        self.check(n, triple)?;
        let (pref, l) = self.prefactors(triple);
        // σ_S = v_S / (D·l) with v_S integral when τ has a frame
        let mut values: [Rat; 8] = Default::default();
        for (mask, slot) in values.iter_mut().enumerate() {
            *slot = self.scaled_at(&Self::shifted(n, triple, mask)) * (&pref[mask] * &l);
        }
        let r = cayley222(&MinorCube { values });
        if r.is_zero() {
            return Ok(r);
        }
        Ok(r / (&self.scale * &l).pow(4).expect("nonzero scale"))
    }
}

/// `Π_{a<b}(x_a - x_b)² / Π_{a,b}(x_a + x_b)` over the members, the factor that
/// turns a shifted τ into `τ` times a principal minor of the `A`-matrix.
fn prefactor(x: &[Rat], members: &[usize]) -> Rat {
    let mut num = Rat::one();
    let mut den = Rat::one();
    for (i, &a) in members.iter().enumerate() {
        for &b in members {
            den *= &x[a] + &x[b];
        }
        for &b in &members[i + 1..] {
            let d = &x[a] - &x[b];
            num *= &d * &d;
        }
    }
    num / den
}

/// The hyperdeterminantal residual of the σ-cube at one lattice translate.
pub fn family_residual(tau: &TauPoly, t: &[Rat], spec: &ShiftSpec, triple: [usize; 3]) -> Result<Rat> {
    FamilyEvaluator::new(tau, t, &spec.x)?.residual(&spec.n, triple)
}
