//! Minimal commutative-ring abstraction so the same determinant and Schur
//! evaluation code runs over rationals and over truncated power series.

use std::ops::{Add, Mul, Neg, Sub};

use super::rat::Rat;

pub trait Ring:
    Clone
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn scale(&self, c: &Rat) -> Self;
}

impl Ring for Rat {
    fn zero_like(&self) -> Self {
        Rat::zero()
    }
    fn one_like(&self) -> Self {
        Rat::one()
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn scale(&self, c: &Rat) -> Self {
        self * c
    }
}

/// Univariate polynomial in `u`, dense coefficients, optionally truncated at a fixed order.
#[derive(Clone, PartialEq, Debug)]
pub struct UPoly {
    pub coeffs: Vec<Rat>,
    /// Terms of degree `>= cap` are discarded; `usize::MAX` keeps everything.
    pub cap: usize,
}

impl UPoly {
    pub fn constant(c: Rat, cap: usize) -> Self {
        let mut p = UPoly { coeffs: vec![c], cap };
        p.normalize();
        p
    }

    pub fn from_coeffs(coeffs: Vec<Rat>, cap: usize) -> Self {
        let mut p = UPoly { coeffs, cap };
        p.normalize();
        p
    }

    /// The polynomial `c·u^k`.
    pub fn monomial(c: Rat, k: usize, cap: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs, cap)
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn eval(&self, u: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * u + c;
        }
        acc
    }

    fn normalize(&mut self) {
        if self.coeffs.len() > self.cap {
            self.coeffs.truncate(self.cap);
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    fn cap_with(&self, other: &UPoly) -> usize {
        self.cap.min(other.cap)
    }
}

impl Add<&UPoly> for UPoly {
    type Output = UPoly;
    fn add(mut self, rhs: &UPoly) -> UPoly {
        if rhs.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rat::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.cap = self.cap_with(rhs);
        self.normalize();
        self
    }
}

impl Add for UPoly {
    type Output = UPoly;
    fn add(self, rhs: UPoly) -> UPoly {
        self + &rhs
    }
}

impl Sub<&UPoly> for UPoly {
    type Output = UPoly;
    fn sub(mut self, rhs: &UPoly) -> UPoly {
        if rhs.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rat::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        self.cap = self.cap_with(rhs);
        self.normalize();
        self
    }
}

impl Sub for UPoly {
    type Output = UPoly;
    fn sub(self, rhs: UPoly) -> UPoly {
        self - &rhs
    }
}

impl Mul<&UPoly> for UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        let cap = self.cap_with(rhs);
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return UPoly { coeffs: vec![], cap };
        }
        let len = (self.coeffs.len() + rhs.coeffs.len() - 1).min(cap);
        let mut out = vec![Rat::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                out[i + j] += a * b;
            }
        }
        UPoly::from_coeffs(out, cap)
    }
}

impl Mul for UPoly {
    type Output = UPoly;
    fn mul(self, rhs: UPoly) -> UPoly {
        self * &rhs
    }
}

impl Neg for UPoly {
    type Output = UPoly;
    fn neg(mut self) -> UPoly {
        for c in &mut self.coeffs {
            *c = -&*c;
        }
        self
    }
}

impl Ring for UPoly {
    fn zero_like(&self) -> Self {
        UPoly { coeffs: vec![], cap: self.cap }
    }
    fn one_like(&self) -> Self {
        UPoly::constant(Rat::one(), self.cap)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn scale(&self, c: &Rat) -> Self {
        UPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect(), self.cap)
    }
}

/// Division-free determinant by Laplace expansion along the first row.
/// Only used for small matrices over rings without exact division.
pub fn det_laplace<R: Ring>(m: &[Vec<R>], unit: &R) -> R {
    let n = m.len();
    assert!(n < 31, "det_laplace: matrix too large");
    // minors[mask]: determinant of the bottom popcount(mask) rows on columns `mask`
    let mut minors: Vec<Option<R>> = vec![None; 1 << n];
    minors[0] = Some(unit.one_like());
    for mask in 1usize..1 << n {
        let k = mask.count_ones() as usize;
        let row = n - k;
        let mut acc = unit.zero_like();
        let mut seen = 0;
        for c in 0..n {
            if mask & (1 << c) == 0 {
                continue;
            }
            let entry = &m[row][c];
            if !entry.is_zero() {
                if let Some(sub) = &minors[mask & !(1 << c)] {
                    let t = sub.clone() * entry;
                    acc = if seen % 2 == 0 { acc + t } else { acc - t };
                }
            }
            seen += 1;
        }
        minors[mask] = Some(acc);
    }
    minors[(1 << n) - 1].take().expect("filled")
}
