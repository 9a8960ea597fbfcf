use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rat::Rat;
use crate::error::{Error, Result};

/// Dense rectangular matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(RatMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rat::from_int(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn scale_col(&mut self, c: usize, s: &Rat) {
        for r in 0..self.rows {
            self[(r, c)] *= s;
        }
    }

    /// Submatrix on the given rows and columns, kept in the order supplied.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        if let Some(&r) = rows.iter().find(|&&r| r >= self.rows) {
            return Err(Error::Index(format!("row {r} out of range for {} rows", self.rows)));
        }
        if let Some(&c) = cols.iter().find(|&&c| c >= self.cols) {
            return Err(Error::Index(format!("column {c} out of range for {} columns", self.cols)));
        }
        let mut out = Self::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                out[(i, j)] = self[(r, c)].clone();
            }
        }
        Ok(out)
    }

    /// Exact determinant. Rows are first cleared of denominators, then
    /// fraction-free Bareiss elimination runs over the integers.
    pub fn det(&self) -> Result<Rat> {
        if !self.is_square() {
            return Err(Error::Dimension(format!("determinant of a {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rat::one());
        }
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for r in 0..n {
            let row = self.row(r);
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            a.push(row.iter().map(|x| x.numer() * (&l / x.denom())).collect());
            scale *= l;
        }
        let d = bareiss(&mut a);
        Rat::from_bigints(d, scale)
    }

    /// Minor on strictly increasing `rows` and `cols`; the empty minor is 1.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<Rat> {
        if rows.len() != cols.len() {
            return Err(Error::Dimension(format!("{} rows vs {} columns", rows.len(), cols.len())));
        }
        for list in [rows, cols] {
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Index(format!("indices {list:?} are not strictly increasing")));
            }
        }
        self.submatrix(rows, cols)?.det()
    }

    pub fn rank(&self) -> usize {
        let mut m = self.to_rows();
        rank_in_place(&mut m)
    }
}

/// Bareiss elimination on an integer matrix; returns its determinant.
fn bareiss(a: &mut [Vec<BigInt>]) -> BigInt {
    let n = a.len();
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Row-reduces in place and returns the rank.
pub(crate) fn rank_in_place(m: &mut [Vec<Rat>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        let inv = m[rank][c].recip().expect("nonzero pivot");
        for r in rank + 1..rows {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] * &inv;
            for j in c..cols {
                let v = &f * &m[rank][j];
                m[r][j] -= v;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rat;
    fn index(&self, (r, c): (usize, usize)) -> &Rat {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rat {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        &mut self.data[r * self.cols + c]
    }
}

impl Serialize for RatMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<Rat>>::deserialize(d)?;
        RatMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri() -> RatMatrix {
        RatMatrix::from_i64(&[vec![2, 1, 0], vec![1, 2, 1], vec![0, 1, 2]]).unwrap()
    }

    #[test]
    fn det_fixtures() {
        assert_eq!(RatMatrix::identity(3).det().unwrap(), Rat::one());
        assert_eq!(tri().det().unwrap(), Rat::from_int(4));
        let sing = RatMatrix::from_i64(&[vec![1, 2], vec![2, 4]]).unwrap();
        assert!(sing.det().unwrap().is_zero());
        assert_eq!(RatMatrix::zeros(0, 0).det().unwrap(), Rat::one());
        assert!(RatMatrix::zeros(2, 3).det().is_err());
    }

    #[test]
    fn det_needs_pivoting_and_fractions() {
        let m = RatMatrix::from_rows(vec![
            vec![Rat::zero(), Rat::new(1, 2)],
            vec![Rat::new(2, 3), Rat::from_int(5)],
        ])
        .unwrap();
        assert_eq!(m.det().unwrap(), Rat::new(-1, 3));
    }

    #[test]
    fn minor_fixtures() {
        let m = tri();
        assert_eq!(m.minor(&[], &[]).unwrap(), Rat::one());
        assert_eq!(m.minor(&[0, 2], &[0, 2]).unwrap(), Rat::from_int(4));
        assert_eq!(m.minor(&[0, 1, 2], &[0, 1, 2]).unwrap(), Rat::from_int(4));
        assert!(m.minor(&[0], &[0, 1]).is_err());
        assert!(m.minor(&[0, 3], &[0, 1]).is_err());
        assert!(m.minor(&[1, 0], &[0, 1]).is_err());
    }

    #[test]
    fn rank_cases() {
        assert_eq!(tri().rank(), 3);
        assert_eq!(RatMatrix::from_i64(&[vec![1, 2], vec![2, 4]]).unwrap().rank(), 1);
        assert_eq!(RatMatrix::zeros(3, 2).rank(), 0);
    }

    #[test]
    fn json_roundtrip() {
        let m = tri();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"[["2","1","0"],["1","2","1"],["0","1","2"]]"#);
        let back: RatMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
        assert!(serde_json::from_str::<RatMatrix>(r#"[["1"],["1","2"]]"#).is_err());
    }
}
