use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rat::Rat;
use super::ring::Ring;
use crate::error::{Error, Result};

/// Sparse polynomial in `t_1..t_m` with rational coefficients.
/// Exponent vectors are dense of length `m`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymPoly {
    m: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl SymPoly {
    pub fn zero(m: usize) -> Self {
        SymPoly { m, terms: BTreeMap::new() }
    }

    pub fn constant(m: usize, c: Rat) -> Self {
        let mut p = Self::zero(m);
        p.add_term(vec![0; m], c);
        p
    }

    pub fn one(m: usize) -> Self {
        Self::constant(m, Rat::one())
    }

    /// The variable `t_k`, `1 <= k <= m`.
    pub fn var(m: usize, k: usize) -> Result<Self> {
        if k == 0 || k > m {
            return Err(Error::Index(format!("t_{k} with {m} variables")));
        }
        let mut e = vec![0; m];
        e[k - 1] = 1;
        let mut p = Self::zero(m);
        p.add_term(e, Rat::one());
        Ok(p)
    }

    pub fn from_terms(m: usize, terms: impl IntoIterator<Item = (Vec<u32>, Rat)>) -> Result<Self> {
        let mut p = Self::zero(m);
        for (e, c) in terms {
            if e.len() != m {
                return Err(Error::Dimension(format!("exponent of length {} with m = {m}", e.len())));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &[u32]) -> Rat {
        self.terms.get(exp).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&vec![0; self.m])
    }

    pub fn add_term(&mut self, exp: Vec<u32>, c: Rat) {
        debug_assert_eq!(exp.len(), self.m);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Same polynomial viewed in `m >= self.m` variables.
    pub fn widen(&self, m: usize) -> Self {
        if m <= self.m {
            return self.clone();
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.resize(m, 0);
                (e, c.clone())
            })
            .collect();
        SymPoly { m, terms }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.m);
        }
        SymPoly { m: self.m, terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    /// Weighted degree of an exponent vector (`t_k` has weight `k`).
    pub fn weight_of(exp: &[u32]) -> u64 {
        exp.iter().enumerate().map(|(i, &e)| (i as u64 + 1) * e as u64).sum()
    }

    pub fn max_weight(&self) -> Option<u64> {
        self.terms.keys().map(|e| Self::weight_of(e)).max()
    }

    pub fn is_homogeneous(&self, w: u64) -> bool {
        self.terms.keys().all(|e| Self::weight_of(e) == w)
    }

    pub fn truncate_weight(&self, w: u64) -> Self {
        SymPoly {
            m: self.m,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| Self::weight_of(e) <= w)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.m {
            return Err(Error::Dimension(format!("point of length {} for {} variables", point.len(), self.m)));
        }
        let mut powers: Vec<Vec<Rat>> = point.iter().map(|x| vec![Rat::one(), x.clone()]).collect();
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (k, &ek) in e.iter().enumerate() {
                if ek == 0 {
                    continue;
                }
                let pw = &mut powers[k];
                while pw.len() <= ek as usize {
                    let next = pw.last().unwrap() * &point[k];
                    pw.push(next);
                }
                term *= &pw[ek as usize];
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Partial derivative with respect to `t_k`.
    pub fn derivative(&self, k: usize) -> Result<Self> {
        if k == 0 || k > self.m {
            return Err(Error::Index(format!("d/dt_{k} with {} variables", self.m)));
        }
        let mut out = Self::zero(self.m);
        for (e, c) in &self.terms {
            let ek = e[k - 1];
            if ek == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[k - 1] -= 1;
            out.add_term(e2, c * Rat::from_int(ek as i64));
        }
        Ok(out)
    }

    /// `p(t_1 + s_1, ..., t_m + s_m)`; `shift` may be shorter than `m`.
    pub fn translate(&self, shift: &[Rat]) -> Result<Self> {
        if shift.len() > self.m {
            return Err(Error::Dimension(format!("shift of length {} for {} variables", shift.len(), self.m)));
        }
        let mut cur = self.clone();
        for (k, s) in shift.iter().enumerate() {
            if s.is_zero() {
                continue;
            }
            let mut next = Self::zero(self.m);
            for (e, c) in &cur.terms {
                let ek = e[k];
                // (t + s)^ek = Σ_i C(ek,i) t^i s^(ek-i)
                let mut binom = Rat::one();
                let mut spow = Rat::one();
                let mut parts = Vec::with_capacity(ek as usize + 1);
                for i in (0..=ek).rev() {
                    parts.push((i, binom.clone() * &spow));
                    if i > 0 {
                        binom = binom * Rat::from_int(i as i64) / Rat::from_int((ek - i + 1) as i64);
                        spow *= s;
                    }
                }
                for (i, f) in parts {
                    let mut e2 = e.clone();
                    e2[k] = i;
                    next.add_term(e2, c * &f);
                }
            }
            cur = next;
        }
        Ok(cur)
    }

    /// `p(f_1 t_1, ..., f_m t_m)`.
    pub fn scale_vars(&self, f: &[Rat]) -> Result<Self> {
        if f.len() != self.m {
            return Err(Error::Dimension(format!("{} factors for {} variables", f.len(), self.m)));
        }
        let mut out = Self::zero(self.m);
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for (k, &ek) in e.iter().enumerate() {
                if ek > 0 {
                    v *= f[k].pow(ek as i32)?;
                }
            }
            out.add_term(e.clone(), v);
        }
        Ok(out)
    }

    /// Drops every monomial that involves a variable with `keep(k) == false` (1-based).
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> Self {
        SymPoly {
            m: self.m,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().enumerate().all(|(i, &x)| x == 0 || keep(i + 1)))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Product with every monomial of weight above `w` discarded.
    pub fn mul_truncated(&self, other: &SymPoly, w: u64) -> Self {
        let m = self.m.max(other.m);
        let (a, b) = (self.widen(m), other.widen(m));
        let mut out = Self::zero(m);
        for (e1, c1) in &a.terms {
            let w1 = Self::weight_of(e1);
            if w1 > w {
                continue;
            }
            for (e2, c2) in &b.terms {
                if w1 + Self::weight_of(e2) > w {
                    continue;
                }
                let e: Vec<u32> = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// Multiplicative inverse modulo monomials of weight above `w`.
    pub fn series_inverse(&self, w: u64) -> Result<Self> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return Err(Error::SeriesUndefined);
        }
        let inv0 = c0.recip()?;
        // p = c0 (1 + q), 1/p = inv0 Σ (-q)^k; q has no constant term so k <= w suffices.
        let mut negq = self.scale(&-&inv0);
        negq.terms.remove(&vec![0; self.m]);
        let mut acc = Self::one(self.m);
        let mut pw = Self::one(self.m);
        for _ in 0..w {
            pw = pw.mul_truncated(&negq, w);
            if pw.is_zero() {
                break;
            }
            acc = &acc + &pw;
        }
        Ok(acc.scale(&inv0))
    }

    fn zip_with(&self, other: &SymPoly, neg: bool) -> Self {
        let m = self.m.max(other.m);
        let mut out = self.widen(m);
        for (e, c) in &other.widen(m).terms {
            out.add_term(e.clone(), if neg { -c } else { c.clone() });
        }
        out
    }
}

impl Add<&SymPoly> for &SymPoly {
    type Output = SymPoly;
    fn add(self, rhs: &SymPoly) -> SymPoly {
        self.zip_with(rhs, false)
    }
}

impl Sub<&SymPoly> for &SymPoly {
    type Output = SymPoly;
    fn sub(self, rhs: &SymPoly) -> SymPoly {
        self.zip_with(rhs, true)
    }
}

impl Mul<&SymPoly> for &SymPoly {
    type Output = SymPoly;
    fn mul(self, rhs: &SymPoly) -> SymPoly {
        self.mul_truncated(rhs, u64::MAX)
    }
}

impl Neg for &SymPoly {
    type Output = SymPoly;
    fn neg(self) -> SymPoly {
        self.scale(&Rat::from_int(-1))
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr for SymPoly {
            type Output = SymPoly;
            fn $m(self, rhs: SymPoly) -> SymPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&SymPoly> for SymPoly {
            type Output = SymPoly;
            fn $m(self, rhs: &SymPoly) -> SymPoly {
                (&self).$m(rhs)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for SymPoly {
    type Output = SymPoly;
    fn neg(self) -> SymPoly {
        -&self
    }
}

impl Ring for SymPoly {
    fn zero_like(&self) -> Self {
        SymPoly::zero(self.m)
    }
    fn one_like(&self) -> Self {
        SymPoly::one(self.m)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn scale(&self, c: &Rat) -> Self {
        SymPoly::scale(self, c)
    }
}

impl fmt::Debug for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (k, &ek) in e.iter().enumerate() {
                match ek {
                    0 => {}
                    1 => write!(f, "*t{}", k + 1)?,
                    _ => write!(f, "*t{}^{}", k + 1, ek)?,
                }
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<u32>,
    c: Rat,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    m: usize,
    terms: Vec<TermJson>,
}

impl Serialize for SymPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            m: self.m,
            terms: self.terms.iter().map(|(e, c)| TermJson { exp: e.clone(), c: c.clone() }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PolyJson::deserialize(d)?;
        SymPoly::from_terms(j.m, j.terms.into_iter().map(|t| (t.exp, t.c))).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(m: usize, k: usize) -> SymPoly {
        SymPoly::var(m, k).unwrap()
    }

    #[test]
    fn eval_fixtures() {
        let p = t(2, 1);
        assert_eq!(p.eval(&[Rat::new(3, 2), Rat::zero()]).unwrap(), Rat::new(3, 2));
        let q = &(&t(2, 1) * &t(2, 1)).scale(&Rat::new(1, 2)) + &t(2, 2);
        assert_eq!(q.eval(&[Rat::from_int(2), Rat::one()]).unwrap(), Rat::from_int(3));
        assert!(SymPoly::zero(2).eval(&[Rat::from_int(5), Rat::from_int(7)]).unwrap().is_zero());
        assert!(p.eval(&[Rat::one()]).is_err());
    }

    #[test]
    fn translate_matches_eval() {
        let p = &(&t(3, 1) * &t(3, 3)) + &(&t(3, 2) * &t(3, 2));
        let s = [Rat::new(1, 2), Rat::from_int(-3), Rat::new(2, 7)];
        let q = p.translate(&s).unwrap();
        let x = [Rat::new(5, 3), Rat::one(), Rat::new(-1, 4)];
        let shifted: Vec<Rat> = x.iter().zip(&s).map(|(a, b)| a + b).collect();
        assert_eq!(q.eval(&x).unwrap(), p.eval(&shifted).unwrap());
    }

    #[test]
    fn derivative_and_weight() {
        let p = &(&t(3, 1) * &t(3, 1)) + &t(3, 2);
        assert!(p.is_homogeneous(2));
        assert_eq!(p.derivative(1).unwrap(), t(3, 1).scale(&Rat::from_int(2)));
        assert_eq!(p.derivative(3).unwrap(), SymPoly::zero(3));
    }

    #[test]
    fn inverse_series() {
        let p = &SymPoly::one(2) + &t(2, 1);
        let inv = p.series_inverse(4).unwrap();
        let prod = p.mul_truncated(&inv, 4);
        assert_eq!(prod, SymPoly::one(2));
        assert!(t(2, 1).series_inverse(3).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let p = &t(3, 1).scale(&Rat::new(1, 3)) + &SymPoly::constant(3, Rat::from_int(2));
        let s = serde_json::to_string(&p).unwrap();
        let back: SymPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }
}
