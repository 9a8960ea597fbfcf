use std::collections::BTreeMap;
use std::ops::{Add, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::kernel::Rat;

/// Sparse element of `Λ(H_N)`, `H_N = span(e_{-N}, ..., e_{N-1})`.
/// Keys are strictly increasing index lists; the key `[a, b, c]` stands for `e_a ∧ e_b ∧ e_c`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtVector {
    n: usize,
    terms: BTreeMap<Vec<i32>, Rat>,
}

/// Sorts `idx` in place and returns the permutation sign, or `None` on a repeat.
pub(crate) fn sort_sign(idx: &mut [i32]) -> Option<bool> {
    let mut neg = false;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            neg = !neg;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(neg)
    }
}

impl ExtVector {
    pub fn zero(n: usize) -> Self {
        ExtVector { n, terms: BTreeMap::new() }
    }

    pub fn scalar(n: usize, c: Rat) -> Self {
        let mut v = Self::zero(n);
        v.add_term(Vec::new(), c);
        v
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, Rat::one())
    }

    pub fn in_range(n: usize, i: i32) -> bool {
        i >= -(n as i32) && i < n as i32
    }

    /// `c · e_{idx[0]} ∧ e_{idx[1]} ∧ ...` with the factors in the order given.
    pub fn wedge_of(n: usize, idx: &[i32], c: Rat) -> Result<Self> {
        if let Some(i) = idx.iter().find(|&&i| !Self::in_range(n, i)) {
            return Err(Error::Index(format!("e_{i} outside H_{n}")));
        }
        let mut key = idx.to_vec();
        let mut v = Self::zero(n);
        if let Some(neg) = sort_sign(&mut key) {
            v.add_term(key, if neg { -c } else { c });
        }
        Ok(v)
    }

    pub fn e(n: usize, i: i32) -> Result<Self> {
        Self::wedge_of(n, &[i], Rat::one())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &Rat)> {
        self.terms.iter()
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &[i32]) -> Rat {
        self.terms.get(key).cloned().unwrap_or_else(Rat::zero)
    }

    /// Adds `c` to the coefficient of an already sorted key.
    pub fn add_term(&mut self, key: Vec<i32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
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

    pub fn is_homogeneous(&self, k: usize) -> bool {
        self.terms.keys().all(|key| key.len() == k)
    }

    pub fn part_of_degree(&self, k: usize) -> Self {
        ExtVector {
            n: self.n,
            terms: self.terms.iter().filter(|(key, _)| key.len() == k).map(|(a, b)| (a.clone(), b.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        ExtVector { n: self.n, terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    fn check_n(&self, other: &ExtVector) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::Dimension(format!("H_{} vs H_{}", self.n, other.n)))
        }
    }

    pub fn try_add(&self, other: &ExtVector) -> Result<Self> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &ExtVector) -> Result<Self> {
        self.try_add(&other.scale(&Rat::from_int(-1)))
    }

    pub fn wedge(&self, other: &ExtVector) -> Result<Self> {
        self.check_n(other)?;
        let mut out = Self::zero(self.n);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let mut key: Vec<i32> = k1.iter().chain(k2).copied().collect();
                if let Some(neg) = sort_sign(&mut key) {
                    let c = c1 * c2;
                    out.add_term(key, if neg { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// `ψ_i`: left exterior multiplication by `e_i`.
    pub fn psi(&self, i: i32) -> Self {
        let mut out = Self::zero(self.n);
        if !Self::in_range(self.n, i) {
            return out;
        }
        for (k, c) in &self.terms {
            if let Err(pos) = k.binary_search(&i) {
                let mut key = k.clone();
                key.insert(pos, i);
                out.add_term(key, if pos % 2 == 1 { -c } else { c.clone() });
            }
        }
        out
    }

    /// `ψ†_i`: interior product with the dual covector `e*_i`, `e*_i(e_j) = δ_ij`.
    pub fn psi_dag(&self, i: i32) -> Self {
        let mut out = Self::zero(self.n);
        for (k, c) in &self.terms {
            if let Ok(pos) = k.binary_search(&i) {
                let mut key = k.clone();
                key.remove(pos);
                out.add_term(key, if pos % 2 == 1 { -c } else { c.clone() });
            }
        }
        out
    }

    /// Interior product `i_dual φ`, where the covector of `e_a` is `e*_a`
    /// (so the f-basis is orthonormal as well) and
    /// `i_{a∧b} = i_b ∘ i_a`, giving `i_{f1∧f2}(f1∧f2∧f3) = f3`.
    pub fn contract(&self, dual: &ExtVector) -> Result<Self> {
        self.check_n(dual)?;
        let mut out = Self::zero(self.n);
        for (dk, dc) in &dual.terms {
            let mut cur = self.clone();
            for &a in dk {
                cur = cur.psi_dag(a);
                if cur.is_zero() {
                    break;
                }
            }
            for (k, c) in cur.terms {
                out.add_term(k, c * dc);
            }
        }
        Ok(out)
    }

    /// Coefficient matrix rank of a family of vectors.
    pub fn rank_of(vectors: &[ExtVector]) -> usize {
        let keys: std::collections::BTreeSet<&Vec<i32>> = vectors.iter().flat_map(|v| v.terms.keys()).collect();
        let keys: Vec<&Vec<i32>> = keys.into_iter().collect();
        let mut m: Vec<Vec<Rat>> = vectors.iter().map(|v| keys.iter().map(|k| v.coeff(k)).collect()).collect();
        crate::kernel::matrix::rank_in_place(&mut m)
    }
}

impl Add<&ExtVector> for &ExtVector {
    type Output = ExtVector;
    fn add(self, rhs: &ExtVector) -> ExtVector {
        self.try_add(rhs).expect("matching N")
    }
}

impl Sub<&ExtVector> for &ExtVector {
    type Output = ExtVector;
    fn sub(self, rhs: &ExtVector) -> ExtVector {
        self.try_sub(rhs).expect("matching N")
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    idx: Vec<i32>,
    c: Rat,
}

#[derive(Serialize, Deserialize)]
struct ExtJson {
    n: usize,
    terms: Vec<TermJson>,
}

impl Serialize for ExtVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ExtJson { n: self.n, terms: self.terms.iter().map(|(k, c)| TermJson { idx: k.clone(), c: c.clone() }).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExtVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = ExtJson::deserialize(d)?;
        let mut v = ExtVector::zero(j.n);
        for t in j.terms {
            let w = ExtVector::wedge_of(j.n, &t.idx, t.c).map_err(serde::de::Error::custom)?;
            v = v.try_add(&w).map_err(serde::de::Error::custom)?;
        }
        Ok(v)
    }
}
