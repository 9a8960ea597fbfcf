use serde::{Deserialize, Serialize};

use super::partition::Partition;
use crate::error::{Error, Result};

/// Standard Young tableau; `rows[i]` lists the entries of row `i` left to right.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct StandardTableau {
    pub shape: Partition,
    pub rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn is_standard(&self) -> bool {
        let m = self.shape.weight();
        if self.rows.len() != self.shape.len()
            || self.rows.iter().enumerate().any(|(i, r)| r.len() != self.shape.part(i))
        {
            return false;
        }
        let mut seen = vec![false; m + 1];
        for r in &self.rows {
            for &x in r {
                if x == 0 || x > m || seen[x] {
                    return false;
                }
                seen[x] = true;
            }
        }
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(lo, hi)| hi < lo));
        rows_ok && cols_ok
    }

    /// Rows with two boxes, as `(left, right)` pairs.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.rows.iter().filter(|r| r.len() == 2).map(|r| (r[0], r[1])).collect()
    }
}

/// The shape `(2^l, 1^(m-2l))`.
pub fn admissible_shape(m: usize, l: usize) -> Result<Partition> {
    if 2 * l > m {
        return Err(Error::InvalidArgument(format!("2l = {} exceeds m = {m}", 2 * l)));
    }
    let mut parts = vec![2; l];
    parts.extend(std::iter::repeat_n(1, m - 2 * l));
    Partition::new(parts)
}

/// Every standard filling of the admissible shape `(2^l, 1^(m-2l))`.
pub fn admissible_tableaux(m: usize, l: usize) -> Result<Vec<StandardTableau>> {
    let shape = admissible_shape(m, l)?;
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
    let mut out = Vec::new();
    fill(&shape, &mut rows, 1, m, &mut out);
    debug_assert!(out.iter().all(StandardTableau::is_standard));
    Ok(out)
}

fn fill(shape: &Partition, rows: &mut Vec<Vec<usize>>, next: usize, m: usize, out: &mut Vec<StandardTableau>) {
    if next > m {
        out.push(StandardTableau { shape: shape.clone(), rows: rows.clone() });
        return;
    }
    for i in 0..rows.len() {
        let len = rows[i].len();
        let addable = len < shape.part(i) && (i == 0 || rows[i - 1].len() > len);
        if addable {
            rows[i].push(next);
            fill(shape, rows, next + 1, m, out);
            rows[i].pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(admissible_tableaux(2, 1).unwrap().len(), 1);
        assert_eq!(admissible_tableaux(3, 1).unwrap().len(), 2);
        assert_eq!(admissible_tableaux(4, 2).unwrap().len(), 2);
        assert_eq!(admissible_tableaux(0, 0).unwrap().len(), 1);
        assert!(admissible_tableaux(3, 2).is_err());
    }

    #[test]
    fn validation() {
        let t = &admissible_tableaux(3, 1).unwrap()[0];
        assert!(t.is_standard());
        let bad = StandardTableau { shape: t.shape.clone(), rows: vec![vec![2, 1], vec![3]] };
        assert!(!bad.is_standard());
    }
}
