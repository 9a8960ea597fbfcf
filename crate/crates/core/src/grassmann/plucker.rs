use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::subspace::{row_of, Subspace};
use crate::combinat::{partitions_in_box, Partition};
use crate::error::{Error, Result};
use crate::extalg::vector::sort_sign;
use crate::extalg::{subsets_of_degree, ExtVector};
use crate::kernel::Rat;
use crate::residual::Residual;

/// Plücker coordinates `π_λ` over the `N x N` box, stored unnormalized.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PluckerVector {
    pub n: usize,
    coords: BTreeMap<Partition, Rat>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RelationMode {
    Full,
    Short,
}

impl PluckerVector {
    /// Coordinates absent from `coords` are zero; partitions outside the box are rejected.
    pub fn new(n: usize, coords: impl IntoIterator<Item = (Partition, Rat)>) -> Result<Self> {
        let mut map: BTreeMap<Partition, Rat> = partitions_in_box(n).into_iter().map(|p| (p, Rat::zero())).collect();
        for (p, c) in coords {
            match map.get_mut(&p) {
                Some(slot) => *slot = c,
                None => return Err(Error::OutOfBox(p.to_string(), n)),
            }
        }
        Ok(PluckerVector { n, coords: map })
    }

    pub fn get(&self, lambda: &Partition) -> Rat {
        self.coords.get(lambda).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn set(&mut self, lambda: &Partition, c: Rat) -> Result<()> {
        match self.coords.get_mut(lambda) {
            Some(slot) => {
                *slot = c;
                Ok(())
            }
            None => Err(Error::OutOfBox(lambda.to_string(), self.n)),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Rat)> {
        self.coords.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.values().all(Rat::is_zero)
    }

    /// Equality up to a nonzero global factor.
    pub fn projective_eq(&self, other: &PluckerVector) -> bool {
        if self.n != other.n {
            return false;
        }
        let Some((k, a)) = self.coords.iter().find(|(_, c)| !c.is_zero()) else {
            return other.is_zero();
        };
        let b = other.get(k);
        if b.is_zero() {
            return false;
        }
        self.coords.iter().all(|(p, x)| x * &b == other.get(p) * a)
    }

    /// Coordinate of the wedge `e_{idx[0]} ∧ ... ∧ e_{idx[N-1]}` in the order given.
    pub fn coord_of_indices(&self, idx: &[i32]) -> Rat {
        let mut key = idx.to_vec();
        match sort_sign(&mut key) {
            None => Rat::zero(),
            Some(neg) => {
                let pos: Vec<i64> = key.iter().rev().map(|&x| x as i64).collect();
                let p = Partition::from_particle_positions(&pos).expect("distinct indices");
                let c = self.get(&p);
                if neg {
                    -c
                } else {
                    c
                }
            }
        }
    }

    /// `Σ π_λ e_{l_N} ∧ ... ∧ e_{l_1}` (factors increasing).
    pub fn to_ext_vector(&self) -> ExtVector {
        let mut v = ExtVector::zero(self.n);
        for (p, c) in &self.coords {
            let mut key = p.particle_positions(self.n).expect("in box");
            key.reverse();
            v.add_term(key.into_iter().map(|x| x as i32).collect(), c.clone());
        }
        v
    }

    pub fn from_ext_vector(v: &ExtVector) -> Result<Self> {
        let n = v.n();
        if !v.is_homogeneous(n) {
            return Err(Error::InvalidArgument(format!("element is not homogeneous of degree {n}")));
        }
        let mut out = Self::new(n, [])?;
        for (k, c) in v.terms() {
            let mut pos: Vec<i64> = k.iter().map(|&x| x as i64).collect();
            pos.reverse();
            out.set(&Partition::from_particle_positions(&pos)?, c.clone())?;
        }
        Ok(out)
    }
}

pub fn plucker(w: &Subspace) -> Result<PluckerVector> {
    let rank = w.w.rank();
    if rank != w.n {
        return Err(Error::RankDeficient { rank, expected: w.n });
    }
    let cols: Vec<usize> = (0..w.n).collect();
    let mut coords = Vec::new();
    for p in partitions_in_box(w.n) {
        let mut rows: Vec<usize> = p.particle_positions(w.n)?.iter().map(|&l| row_of(w.n, l as i32)).collect();
        rows.reverse();
        coords.push((p, w.w.minor(&rows, &cols)?));
    }
    PluckerVector::new(w.n, coords)
}

fn fmt_set(s: &[i32]) -> String {
    let parts: Vec<String> = s.iter().map(i32::to_string).collect();
    format!("[{}]", parts.join(","))
}

/// Residuals of `Σ_s (-1)^s π(I, j_s) π(J \ j_s)` over index sets `|I| = N-1`, `|J| = N+1`.
/// Instances with `|J \ I| < 3` cancel identically and are skipped; `Short` keeps the
/// three-term instances only.
pub fn plucker_residuals(pi: &PluckerVector, mode: RelationMode) -> Vec<Residual> {
    let n = pi.n;
    if n == 0 {
        return Vec::new();
    }
    let is = subsets_of_degree(n, n - 1);
    let js = subsets_of_degree(n, n + 1);
    let mut out = Vec::new();
    for i in &is {
        for j in &js {
            let outside: Vec<i32> = j.iter().copied().filter(|x| !i.contains(x)).collect();
            let keep = match mode {
                RelationMode::Full => outside.len() >= 3,
                RelationMode::Short => outside.len() == 3,
            };
            if !keep {
                continue;
            }
            let mut acc = Rat::zero();
            for (s, &js_) in j.iter().enumerate() {
                if i.contains(&js_) {
                    continue;
                }
                let mut left = i.clone();
                left.push(js_);
                let a = pi.coord_of_indices(&left);
                if a.is_zero() {
                    continue;
                }
                let right: Vec<i32> = j.iter().copied().filter(|&x| x != js_).collect();
                let term = a * pi.coord_of_indices(&right);
                if s % 2 == 0 {
                    acc -= term;
                } else {
                    acc += term;
                }
            }
            out.push(Residual::new(format!("plucker I={} J={}", fmt_set(i), fmt_set(j)), acc));
        }
    }
    out
}

#[derive(Serialize, Deserialize)]
struct CoordJson {
    lambda: Partition,
    c: Rat,
}

#[derive(Serialize, Deserialize)]
struct PluckerJson {
    n: usize,
    plucker: Vec<CoordJson>,
}

impl Serialize for PluckerVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PluckerJson {
            n: self.n,
            plucker: self
                .coords
                .iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(p, c)| CoordJson { lambda: p.clone(), c: c.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PluckerVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PluckerJson::deserialize(d)?;
        PluckerVector::new(j.n, j.plucker.into_iter().map(|c| (c.lambda, c.c))).map_err(serde::de::Error::custom)
    }
}
