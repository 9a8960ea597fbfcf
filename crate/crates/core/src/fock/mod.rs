//! Charged free fermions on `|λ; n⟩`, with particle positions `l_i = λ_i - i + n`
//! and `|λ; n⟩ = e_{l_1} ∧ e_{l_2} ∧ ...` (decreasing).
//!
//! Every infinite operator sum here is evaluated on a finite window: below
//! `n - len(λ)` all sites are occupied, above `l_1` all are empty, so only
//! finitely many summands can act nontrivially on a given state.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::combinat::Partition;
use crate::error::{Error, Result};
use crate::grassmann::PluckerVector;
use crate::kernel::{Rat, SymPoly};
use crate::symfunc::SchurTable;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct FockState {
    pub lambda: Partition,
    pub n: i64,
}

impl FockState {
    pub fn new(lambda: Partition, n: i64) -> Self {
        FockState { lambda, n }
    }

    pub fn vacuum(n: i64) -> Self {
        FockState { lambda: Partition::empty(), n }
    }

    /// `l_1, ..., l_k` for the first `k` particles.
    pub fn positions(&self, k: usize) -> Vec<i64> {
        (0..k).map(|i| self.lambda.part(i) as i64 - i as i64 - 1 + self.n).collect()
    }
}

/// Occupied sites `>= floor`; every site below `floor` is occupied.
struct Sea {
    occ: BTreeSet<i64>,
    floor: i64,
}

impl Sea {
    fn of(s: &FockState) -> Self {
        let floor = s.n - s.lambda.len() as i64;
        let occ = s.positions(s.lambda.len()).into_iter().collect();
        Sea { occ, floor }
    }

    fn lower(&mut self, k: i64) {
        while self.floor > k {
            self.floor -= 1;
            self.occ.insert(self.floor);
        }
    }

    fn occupied(&self, k: i64) -> bool {
        k < self.floor || self.occ.contains(&k)
    }

    fn above(&self, k: i64) -> usize {
        self.occ.range(k + 1..).count()
    }

    fn max(&self) -> i64 {
        self.occ.iter().next_back().copied().unwrap_or(self.floor - 1)
    }

    fn into_state(self) -> FockState {
        let k = self.occ.len() as i64;
        let n = self.floor + k;
        let parts: Vec<usize> =
            self.occ.iter().rev().enumerate().map(|(i, &l)| (l + i as i64 + 1 - n) as usize).collect();
        FockState { lambda: Partition::new(parts).expect("decreasing positions"), n }
    }
}

/// A single Clifford generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Psi(i64),
    Dag(i64),
}

/// Applies `word[0] word[1] ... word[last]` (rightmost first). Returns the sign and image.
pub fn apply_word(s: &FockState, word: &[Op]) -> Option<(bool, FockState)> {
    let mut sea = Sea::of(s);
    let mut neg = false;
    for op in word.iter().rev() {
        match *op {
            Op::Psi(k) => {
                if sea.occupied(k) {
                    return None;
                }
                neg ^= sea.above(k) % 2 == 1;
                sea.occ.insert(k);
            }
            Op::Dag(k) => {
                if !sea.occupied(k) {
                    return None;
                }
                sea.lower(k);
                neg ^= sea.above(k) % 2 == 1;
                sea.occ.remove(&k);
            }
        }
    }
    Some((neg, sea.into_state()))
}

/// A finite combination of Fock states, without zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FockVector {
    terms: BTreeMap<FockState, Rat>,
}

impl FockVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(s: FockState) -> Self {
        let mut v = Self::zero();
        v.add_term(s, Rat::one());
        v
    }

    pub fn state(lambda: Partition, n: i64) -> Self {
        Self::basis(FockState::new(lambda, n))
    }

    pub fn add_term(&mut self, s: FockState, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(s) {
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

    pub fn coeff(&self, s: &FockState) -> Rat {
        self.terms.get(s).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&FockState, &Rat)> {
        self.terms.iter()
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        self.terms.iter().map(|(s, v)| (s.clone(), v * c)).collect()
    }

    pub fn max_weight(&self) -> usize {
        self.terms.keys().map(|s| s.lambda.weight()).max().unwrap_or(0)
    }

    /// The common charge, if all terms share one.
    pub fn charge(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(|s| s.n);
        let first = it.next()?;
        it.all(|n| n == first).then_some(first)
    }

    /// `Σ π_λ |λ; 0⟩`. This matches `w_1 ∧ ... ∧ w_N ∧ e_{-N-1} ∧ ...` up to the orientation sign
    /// of the frame, which no linear condition sees.
    pub fn from_plucker(pi: &PluckerVector) -> Self {
        pi.iter().map(|(l, c)| (FockState::new(l.clone(), 0), c.clone())).collect()
    }

    /// Applies `Σ c · word` where `terms(state)` lists the contributing words.
    pub fn apply(&self, terms: impl Fn(&FockState) -> Vec<(Rat, Vec<Op>)>) -> Self {
        let mut out = Self::zero();
        for (s, c) in &self.terms {
            for (k, word) in terms(s) {
                if let Some((neg, t)) = apply_word(s, &word) {
                    let v = c * &k;
                    out.add_term(t, if neg { -v } else { v });
                }
            }
        }
        out
    }
}

impl FromIterator<(FockState, Rat)> for FockVector {
    fn from_iter<I: IntoIterator<Item = (FockState, Rat)>>(it: I) -> Self {
        let mut v = Self::zero();
        for (s, c) in it {
            v.add_term(s, c);
        }
        v
    }
}

impl std::ops::Add<&FockVector> for &FockVector {
    type Output = FockVector;
    fn add(self, rhs: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (s, c) in &rhs.terms {
            out.add_term(s.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub<&FockVector> for &FockVector {
    type Output = FockVector;
    fn sub(self, rhs: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (s, c) in &rhs.terms {
            out.add_term(s.clone(), -c);
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    lambda: Partition,
    n: i64,
    c: Rat,
}

impl Serialize for FockVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<TermJson> =
            self.terms.iter().map(|(k, c)| TermJson { lambda: k.lambda.clone(), n: k.n, c: c.clone() }).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FockVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(Vec::<TermJson>::deserialize(d)?.into_iter().map(|t| (FockState::new(t.lambda, t.n), t.c)).collect())
    }
}

pub fn psi(i: i64, v: &FockVector) -> FockVector {
    v.apply(|_| vec![(Rat::one(), vec![Op::Psi(i)])])
}

pub fn psi_dag(i: i64, v: &FockVector) -> FockVector {
    v.apply(|_| vec![(Rat::one(), vec![Op::Dag(i)])])
}

/// `J_r = Σ_j ψ_j ψ†_{j+r}`, `r != 0`. A summand needs `j + r` occupied and `j`
/// empty, so `j + r` runs over occupied sites no lower than `n - len(λ) - |r|`.
pub fn current(r: i64, v: &FockVector) -> Result<FockVector> {
    if r == 0 {
        return Err(Error::InvalidArgument("J_0 is the charge operator; r must be nonzero".into()));
    }
    Ok(v.apply(|s| {
        let mut sea = Sea::of(s);
        sea.lower(sea.floor - r.abs());
        sea.occ
            .iter()
            .filter(|&&p| !sea.occupied(p - r))
            .map(|&p| (Rat::one(), vec![Op::Psi(p - r), Op::Dag(p)]))
            .collect()
    }))
}

/// `ω̂ = -Σ_{i≥0} (-1)^i ψ_{-i-1} ψ_i`; needs `i` and `-i-1` both empty, and
/// `-i-1` empty forces `i < len(λ) - n`.
pub fn omega_hat(v: &FockVector) -> FockVector {
    v.apply(|s| {
        let top = (s.lambda.len() as i64 - s.n).max(0);
        (0..top).map(|i| (-Rat::sign(i), vec![Op::Psi(-i - 1), Op::Psi(i)])).collect()
    })
}

/// `ω̂† = Σ_{i≥0} (-1)^i ψ†_{-i-1} ψ†_i`; needs `i` occupied, so `i <= l_1`.
pub fn omega_hat_dag(v: &FockVector) -> FockVector {
    v.apply(|s| {
        let top = Sea::of(s).max().max(-1);
        (0..=top).map(|i| (Rat::sign(i), vec![Op::Dag(-i - 1), Op::Dag(i)])).collect()
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Chevalley {
    E,
    F,
    H,
}

/// The fermionic Chevalley generators `Ê_j`, `F̂_j`, `Ĥ_j`.
pub fn chevalley_terms(kind: Chevalley, j: i64) -> Vec<(Rat, Vec<Op>)> {
    use Op::{Dag, Psi};
    let one = Rat::one;
    let m1 = || Rat::from_int(-1);
    if j == 0 {
        return match kind {
            Chevalley::E => vec![(one(), vec![Psi(-1), Dag(0)])],
            Chevalley::F => vec![(one(), vec![Psi(0), Dag(-1)])],
            Chevalley::H => vec![(one(), vec![Psi(-1), Dag(-1)]), (m1(), vec![Psi(0), Dag(0)])],
        };
    }
    match kind {
        Chevalley::E => vec![(one(), vec![Psi(j - 1), Dag(j)]), (one(), vec![Psi(-j - 1), Dag(-j)])],
        Chevalley::F => vec![(one(), vec![Psi(j), Dag(j - 1)]), (one(), vec![Psi(-j), Dag(-j - 1)])],
        Chevalley::H => vec![
            (one(), vec![Psi(j - 1), Dag(j - 1)]),
            (m1(), vec![Psi(j), Dag(j)]),
            (one(), vec![Psi(-j - 1), Dag(-j - 1)]),
            (m1(), vec![Psi(-j), Dag(-j)]),
        ],
    }
}

pub fn chevalley(kind: Chevalley, j: i64, v: &FockVector) -> Result<FockVector> {
    if j < 0 {
        return Err(Error::InvalidArgument(format!("Chevalley index must be nonnegative, got {j}")));
    }
    let terms = chevalley_terms(kind, j);
    Ok(v.apply(|_| terms.clone()))
}

/// `|v(j)⟩ = ω̂^j |∅; -2j⟩`.
pub fn hw_vector(j: usize) -> FockVector {
    let mut v = FockVector::basis(FockState::vacuum(-2 * j as i64));
    for _ in 0..j {
        v = omega_hat(&v);
    }
    v
}

/// `|λ⟩ ↦ (|λ⟩ + |λᵀ⟩) / 2`.
pub fn pi_s(v: &FockVector) -> FockVector {
    let half = Rat::new(1, 2);
    let mut out = FockVector::zero();
    for (s, c) in v.iter() {
        let t = FockState::new(s.lambda.transpose(), s.n);
        out.add_term(s.clone(), c * &half);
        out.add_term(t, c * &half);
    }
    out
}

fn require_charge_zero(v: &FockVector) -> Result<()> {
    match v.charge() {
        None if v.is_zero() => Ok(()),
        Some(0) => Ok(()),
        Some(n) => Err(Error::Charge(n)),
        None => Err(Error::InvalidArgument("vector mixes charge sectors".into())),
    }
}

/// The CKP null conditions at charge 0: `ω̂ v`, `ω̂† v`, and `Π_S J_{2j} v` for
/// `2j <= max_weight`. Each must vanish for the image of a Lagrangian plane.
pub fn ckp_null_residuals(v: &FockVector, max_weight: usize) -> Result<Vec<(String, FockVector)>> {
    require_charge_zero(v)?;
    let mut out = vec![("omega_hat".to_string(), omega_hat(v)), ("omega_hat_dag".to_string(), omega_hat_dag(v))];
    for r in (2..=max_weight as i64).step_by(2) {
        out.push((format!("sym J_{r}"), pi_s(&current(r, v)?)));
    }
    Ok(out)
}

/// `Σ c_λ s_λ(t)` in `m` variables.
pub fn bosonize(v: &FockVector, m: usize) -> Result<SymPoly> {
    require_charge_zero(v)?;
    let w = v.max_weight();
    if w > m {
        return Err(Error::TruncationTooSmall { need: w, have: m });
    }
    let table = SchurTable::shared(m);
    let mut out = SymPoly::zero(m);
    for (s, c) in v.iter() {
        out = out + &table.schur(&s.lambda)?.scale(c);
    }
    Ok(out)
}
