use std::fmt;

use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};

/// Integer partition, stored without trailing zeros.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Validates weak decrease; zero parts are dropped.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts.into_iter().filter(|&p| p > 0).collect()))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn transpose(&self) -> Self {
        let first = self.part(0);
        Partition((1..=first).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect())
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn fits_in_box(&self, n: usize) -> bool {
        self.len() <= n && self.part(0) <= n
    }

    fn check_box(&self, n: usize) -> Result<()> {
        if self.fits_in_box(n) {
            Ok(())
        } else {
            Err(Error::OutOfBox(self.to_string(), n))
        }
    }

    /// Number of diagonal boxes.
    pub fn rank(&self) -> usize {
        self.0.iter().enumerate().take_while(|(i, &p)| p > *i).count()
    }

    pub fn frobenius(&self) -> Frobenius {
        let t = self.transpose();
        let r = self.rank();
        Frobenius { a: (0..r).map(|i| self.0[i] - i - 1).collect(), b: (0..r).map(|i| t.0[i] - i - 1).collect() }
    }

    /// `l_j = λ_j - j` for `j = 1..n`.
    pub fn particle_positions(&self, n: usize) -> Result<Vec<i64>> {
        self.check_box(n)?;
        Ok((0..n).map(|j| self.part(j) as i64 - j as i64 - 1).collect())
    }

    /// Inverse of [`Partition::particle_positions`].
    pub fn from_particle_positions(l: &[i64]) -> Result<Self> {
        if l.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidArgument(format!("positions {l:?} are not strictly decreasing")));
        }
        let parts: Vec<i64> = l.iter().enumerate().map(|(j, &x)| x + j as i64 + 1).collect();
        if parts.iter().any(|&p| p < 0) {
            return Err(Error::InvalidArgument(format!("positions {l:?} give a negative part")));
        }
        Partition::new(parts.into_iter().map(|p| p as usize).collect())
    }

    pub fn ij_label(&self, n: usize) -> Result<IJLabel> {
        self.check_box(n)?;
        let f = self.frobenius();
        Ok(IJLabel {
            i: f.a.iter().rev().map(|a| a + 1).collect(),
            j: f.b.iter().rev().map(|b| b + 1).collect(),
            n,
        })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Partition::new(Vec::<usize>::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// Frobenius coordinates `(a | b)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Frobenius {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl Frobenius {
    pub fn new(a: Vec<usize>, b: Vec<usize>) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::InvalidArgument(format!("arm/leg lengths differ: {a:?} vs {b:?}")));
        }
        for v in [&a, &b] {
            if v.windows(2).any(|w| w[0] <= w[1]) {
                return Err(Error::InvalidArgument(format!("{v:?} is not strictly decreasing")));
            }
        }
        Ok(Frobenius { a, b })
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    pub fn to_partition(&self) -> Partition {
        let r = self.rank();
        let depth = self.b.first().map_or(0, |b| b + 1);
        let parts = (1..=depth)
            .map(|i| {
                if i <= r {
                    self.a[i - 1] + i
                } else {
                    // rows below the diagonal only meet the first r columns
                    (1..=r).filter(|&j| self.b[j - 1] + j >= i).count()
                }
            })
            .collect();
        Partition(parts)
    }
}

/// The `(I, J)` labelling of partitions in the `n x n` box.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct IJLabel {
    pub i: Vec<usize>,
    pub j: Vec<usize>,
    pub n: usize,
}

impl IJLabel {
    pub fn new(i: Vec<usize>, j: Vec<usize>, n: usize) -> Result<Self> {
        if i.len() != j.len() {
            return Err(Error::InvalidArgument("|I| != |J|".into()));
        }
        for v in [&i, &j] {
            if v.windows(2).any(|w| w[0] >= w[1]) || v.iter().any(|&x| x == 0 || x > n) {
                return Err(Error::InvalidArgument(format!("{v:?} is not an increasing subset of 1..{n}")));
            }
        }
        Ok(IJLabel { i, j, n })
    }

    pub fn to_partition(&self) -> Partition {
        Frobenius {
            a: self.i.iter().rev().map(|x| x - 1).collect(),
            b: self.j.iter().rev().map(|x| x - 1).collect(),
        }
        .to_partition()
    }
}

/// All partitions with at most `rows` parts, each at most `max_part`, in lexicographic order.
fn in_rect(rows: usize, max_part: usize) -> Vec<Partition> {
    fn rec(rows: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition(prefix.clone()));
        if prefix.len() == rows {
            return;
        }
        for p in 1..=max_part {
            prefix.push(p);
            rec(rows, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(rows, max_part, &mut Vec::new(), &mut out);
    out.sort();
    out
}

pub fn partitions_in_box(n: usize) -> Vec<Partition> {
    in_rect(n, n)
}

pub fn symmetric_partitions_in_box(n: usize) -> Vec<Partition> {
    let mut out: Vec<Partition> = (0u32..1 << n)
        .map(|mask| {
            let a: Vec<usize> = (0..n).rev().filter(|&k| mask & (1 << k) != 0).collect();
            Frobenius { a: a.clone(), b: a }.to_partition()
        })
        .collect();
    out.sort();
    out
}

/// All partitions of weight exactly `w`.
pub fn partitions_of(w: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            prefix.push(p);
            rec(rem - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(w, w, &mut Vec::new(), &mut out);
    out
}

/// All partitions of weight at most `w`, by increasing weight.
pub fn partitions_up_to(w: usize) -> Vec<Partition> {
    (0..=w).flat_map(partitions_of).collect()
}
