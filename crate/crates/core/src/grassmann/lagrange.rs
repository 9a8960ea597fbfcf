use serde::{Serialize, Serializer};

use super::plucker::{plucker, PluckerVector};
use super::subspace::Subspace;
use crate::combinat::{partitions_in_box, IJLabel, Partition};
use crate::error::{Error, Result};
use crate::extalg::subsets_of_degree;
use crate::kernel::Rat;
use crate::residual::Residual;

/// Values `L_J` for all `J ⊆ {1..N}`, ordered by size then lexicographically.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LagrangeCoefficients {
    pub n: usize,
    values: Vec<(Vec<usize>, Rat)>,
}

/// All subsets of `{1..n}`, by size then lexicographically.
pub fn subsets_by_size(n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0u32..1 << n)
        .map(|mask| (1..=n).filter(|&i| mask & (1 << (i - 1)) != 0).collect())
        .collect();
    out.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// The symmetric partition `λ(J, J)`.
pub fn symmetric_partition(j: &[usize], n: usize) -> Result<Partition> {
    Ok(IJLabel::new(j.to_vec(), j.to_vec(), n)?.to_partition())
}

impl LagrangeCoefficients {
    pub fn from_values(n: usize, values: Vec<(Vec<usize>, Rat)>) -> Result<Self> {
        let expect = subsets_by_size(n);
        if values.len() != expect.len() || values.iter().zip(&expect).any(|((k, _), e)| k != e) {
            return Err(Error::InvalidArgument(format!("need all {} subsets of 1..{n} in order", expect.len())));
        }
        Ok(LagrangeCoefficients { n, values })
    }

    /// `L_J = π_{λ(J,J)}`, read off without any isotropy check.
    pub fn from_plucker(pi: &PluckerVector) -> Self {
        let values = subsets_by_size(pi.n)
            .into_iter()
            .map(|j| {
                let p = symmetric_partition(&j, pi.n).expect("valid subset");
                (j, pi.get(&p))
            })
            .collect();
        LagrangeCoefficients { n: pi.n, values }
    }

    pub fn get(&self, j: &[usize]) -> Rat {
        self.values.iter().find(|(k, _)| k == j).map(|(_, v)| v.clone()).unwrap_or_else(Rat::zero)
    }

    pub fn values(&self) -> &[(Vec<usize>, Rat)] {
        &self.values
    }

    /// Divides by `L_∅` when it is nonzero.
    pub fn normalized(&self) -> Self {
        let l0 = self.get(&[]);
        if l0.is_zero() || l0.is_one() {
            return self.clone();
        }
        let inv = l0.recip().expect("nonzero");
        LagrangeCoefficients { n: self.n, values: self.values.iter().map(|(k, v)| (k.clone(), v * &inv)).collect() }
    }

    pub fn projective_eq(&self, other: &Self) -> bool {
        if self.n != other.n {
            return false;
        }
        let Some((k, a)) = self.values.iter().find(|(_, v)| !v.is_zero()) else {
            return other.values.iter().all(|(_, v)| v.is_zero());
        };
        let b = other.get(k);
        !b.is_zero() && self.values.iter().all(|(j, x)| x * &b == other.get(j) * a)
    }
}

pub fn subset_label(j: &[usize]) -> String {
    j.iter().map(usize::to_string).collect()
}

impl Serialize for LagrangeCoefficients {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(self.values.len()))?;
        for (k, v) in &self.values {
            m.serialize_entry(&subset_label(k), v)?;
        }
        m.end()
    }
}

/// Lagrange coefficients of a Lagrangian subspace, normalized so `L_∅ = 1` on the big cell.
pub fn lagrange_map(w: &Subspace) -> Result<LagrangeCoefficients> {
    if !w.is_lagrangian() {
        return Err(Error::NotLagrangian);
    }
    Ok(LagrangeCoefficients::from_plucker(&plucker(w)?).normalized())
}

fn fmt_set(s: &[i32]) -> String {
    let parts: Vec<String> = s.iter().map(i32::to_string).collect();
    format!("[{}]", parts.join(","))
}

/// The isotropy relations: for each `α` with `|α| = N-2`,
/// `Σ_i (-1)^{i + #(α ∩ (-i, i-1))} π(α ∪ {-i, i-1})` over the pairs disjoint from `α`.
/// This is the coefficient of `e_α` in `ω̂†_N Σ π_λ e_λ`.
pub fn linear_relation_residuals(pi: &PluckerVector) -> Vec<Residual> {
    let n = pi.n;
    if n < 2 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for alpha in subsets_of_degree(n, n - 2) {
        let mut acc = Rat::zero();
        let mut terms = 0;
        for i in 1..=n as i32 {
            let (lo, hi) = (-i, i - 1);
            if alpha.contains(&lo) || alpha.contains(&hi) {
                continue;
            }
            terms += 1;
            let between = alpha.iter().filter(|&&a| a > lo && a < hi).count() as i64;
            let mut key = alpha.clone();
            key.push(lo);
            key.push(hi);
            key.sort_unstable();
            acc += pi.coord_of_indices(&key) * Rat::sign(i as i64 + between);
        }
        if terms > 0 {
            out.push(Residual::new(format!("linear alpha={}", fmt_set(&alpha)), acc));
        }
    }
    out
}

/// `π_λ - π_{λᵀ}` for each non-symmetric `λ` in the box, one per transpose pair.
pub fn two_term_residuals(pi: &PluckerVector) -> Vec<Residual> {
    partitions_in_box(pi.n)
        .into_iter()
        .filter_map(|p| {
            let t = p.transpose();
            (p > t).then(|| Residual::new(format!("transpose {p}"), pi.get(&p) - pi.get(&t)))
        })
        .collect()
}

/// Both families of linear conditions cutting out `P^N_N`.
pub fn lagrangian_linear_residuals(pi: &PluckerVector) -> Vec<Residual> {
    let mut out = linear_relation_residuals(pi);
    out.extend(two_term_residuals(pi));
    out
}
