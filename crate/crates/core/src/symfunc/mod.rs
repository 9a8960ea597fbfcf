//! Schur polynomials in the times `t_k = p_k / k`, Murnaghan–Nakayama operators
//! and Miwa shifts.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::combinat::{border_strip_add, border_strip_remove, Partition};
use crate::error::{Error, Result};
use crate::kernel::ring::det_laplace;
use crate::kernel::{Rat, SymPoly};

/// Complete and elementary polynomials `h_0..h_K`, `e_0..e_K` in `t_1..t_m`.
#[derive(Clone, Debug)]
pub struct SchurTable {
    m: usize,
    h: Vec<SymPoly>,
    e: Vec<SymPoly>,
}

impl SchurTable {
    /// Tables for every partition of weight at most `m`.
    pub fn new(m: usize) -> Self {
        let mut h = vec![SymPoly::one(m)];
        let mut e = vec![SymPoly::one(m)];
        // k h_k = Σ i t_i h_{k-i}, k e_k = Σ (-1)^{i-1} i t_i e_{k-i}
        for k in 1..=m {
            let (mut hk, mut ek) = (SymPoly::zero(m), SymPoly::zero(m));
            for i in 1..=k {
                let ti = SymPoly::var(m, i).expect("i <= m").scale(&Rat::from_int(i as i64));
                hk = hk + &(&ti * &h[k - i]);
                let te = &ti * &e[k - i];
                ek = if i % 2 == 1 { ek + &te } else { ek - &te };
            }
            let inv = Rat::new(1, k as i64);
            h.push(hk.scale(&inv));
            e.push(ek.scale(&inv));
        }
        SchurTable { m, h, e }
    }

    /// A process-wide table for `m`, built once and shared read-only afterwards.
    pub fn shared(m: usize) -> Arc<SchurTable> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<SchurTable>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.lock().expect("schur cache poisoned").get(&m) {
            return Arc::clone(t);
        }
        let built = Arc::new(SchurTable::new(m));
        Arc::clone(cache.lock().expect("schur cache poisoned").entry(m).or_insert(built))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn h(&self, k: i64) -> SymPoly {
        usize::try_from(k).ok().and_then(|k| self.h.get(k).cloned()).unwrap_or_else(|| SymPoly::zero(self.m))
    }

    pub fn e(&self, k: i64) -> SymPoly {
        usize::try_from(k).ok().and_then(|k| self.e.get(k).cloned()).unwrap_or_else(|| SymPoly::zero(self.m))
    }

    /// Jacobi–Trudi in whichever of `h` (rows of `λ`) or `e` (columns) gives the smaller matrix.
    pub fn schur(&self, lambda: &Partition) -> Result<SymPoly> {
        if lambda.weight() > self.m {
            return Err(Error::TruncationTooSmall { need: lambda.weight(), have: self.m });
        }
        let conj = lambda.transpose();
        let (rows, use_e) = if lambda.len() <= conj.len() { (lambda, false) } else { (&conj, true) };
        let l = rows.len();
        let mat: Vec<Vec<SymPoly>> = (0..l)
            .map(|i| {
                (0..l)
                    .map(|j| {
                        let k = rows.part(i) as i64 - i as i64 + j as i64;
                        if use_e {
                            self.e(k)
                        } else {
                            self.h(k)
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(det_laplace(&mat, &SymPoly::one(self.m)))
    }
}

/// `s_λ(t)` in `m` variables; requires `m >= |λ|`.
pub fn schur(lambda: &Partition, m: usize) -> Result<SymPoly> {
    if lambda.weight() > m {
        return Err(Error::TruncationTooSmall { need: lambda.weight(), have: m });
    }
    SchurTable::shared(m).schur(lambda)
}

/// A finite combination `Σ c_λ s_λ` with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SchurCombo {
    terms: BTreeMap<Partition, Rat>,
}

impl SchurCombo {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(lambda: Partition) -> Self {
        let mut c = Self::zero();
        c.add_term(lambda, Rat::one());
        c
    }

    pub fn add_term(&mut self, lambda: Partition, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn get(&self, lambda: &Partition) -> Rat {
        self.terms.get(lambda).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_weight(&self) -> usize {
        self.terms.keys().map(Partition::weight).max().unwrap_or(0)
    }

    pub fn to_poly(&self, table: &SchurTable) -> Result<SymPoly> {
        let mut out = SymPoly::zero(table.m());
        for (lam, c) in &self.terms {
            out = out + &table.schur(lam)?.scale(c);
        }
        Ok(out)
    }
}

impl FromIterator<(Partition, Rat)> for SchurCombo {
    fn from_iter<I: IntoIterator<Item = (Partition, Rat)>>(it: I) -> Self {
        let mut c = Self::zero();
        for (l, v) in it {
            c.add_term(l, v);
        }
        c
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    lambda: Partition,
    c: Rat,
}

impl Serialize for SchurCombo {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<TermJson> = self.terms.iter().map(|(l, c)| TermJson { lambda: l.clone(), c: c.clone() }).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SchurCombo {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(Vec::<TermJson>::deserialize(d)?.into_iter().map(|t| (t.lambda, t.c)).collect())
    }
}

fn strip_sign(height: usize) -> Rat {
    Rat::sign(height as i64 + 1)
}

/// `M_r`: multiplication by `p_r = r t_r`, adding `r`-border strips with sign `(-1)^{h+1}`.
pub fn mn_apply(r: usize, c: &SchurCombo) -> SchurCombo {
    let mut out = SchurCombo::zero();
    for (lam, v) in c.iter() {
        for (mu, h) in border_strip_add(lam, r) {
            out.add_term(mu, v * &strip_sign(h));
        }
    }
    out
}

/// `M*_r = ∂/∂t_r`, removing `r`-border strips.
pub fn mn_dual(r: usize, c: &SchurCombo) -> SchurCombo {
    let mut out = SchurCombo::zero();
    for (lam, v) in c.iter() {
        for (mu, h) in border_strip_remove(lam, r) {
            out.add_term(mu, v * &strip_sign(h));
        }
    }
    out
}

/// Sets `t_2 = t_4 = ... = 0`.
pub fn restrict_odd(p: &SymPoly) -> SymPoly {
    p.restrict(|k| k % 2 == 1)
}

/// `p(t ± [x])` with `[x] = (x, x²/2, x³/3, ...)`.
pub fn miwa_shift(p: &SymPoly, x: &Rat, sign: i8) -> Result<SymPoly> {
    if sign != 1 && sign != -1 {
        return Err(Error::InvalidArgument(format!("sign must be ±1, got {sign}")));
    }
    let s = Rat::from_int(sign as i64);
    let shift: Vec<Rat> = (1..=p.m()).map(|j| miwa_coeff(x, j) * &s).collect();
    p.translate(&shift)
}

/// `p(t + [x] - [-x])`: odd `t_j` move by `2x^j/j`, even ones stay.
pub fn miwa_pm_shift(p: &SymPoly, x: &Rat) -> Result<SymPoly> {
    let shift: Vec<Rat> =
        (1..=p.m()).map(|j| if j % 2 == 1 { miwa_coeff(x, j) * Rat::from_int(2) } else { Rat::zero() }).collect();
    p.translate(&shift)
}

/// `x^j / j`.
pub fn miwa_coeff(x: &Rat, j: usize) -> Rat {
    x.pow(j as i32).unwrap_or_else(|_| Rat::zero()) * Rat::new(1, j as i64)
}

#[cfg(test)]
mod tests;
