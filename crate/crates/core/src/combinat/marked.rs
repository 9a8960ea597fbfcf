use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A subset `I ⊂ {1..n}` of size `n - 3` with each element marked starred or not.
/// The complementary marking `B` is the elementwise flip.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct MarkedMultiIndex {
    pub n: usize,
    pub i: Vec<usize>,
    pub starred: Vec<bool>,
}

impl MarkedMultiIndex {
    pub fn new(n: usize, i: Vec<usize>, starred: Vec<bool>) -> Result<Self> {
        if n < 3 || i.len() + 3 != n {
            return Err(Error::InvalidArgument(format!("need |I| = n - 3, got |I| = {} with n = {n}", i.len())));
        }
        if starred.len() != i.len() {
            return Err(Error::InvalidArgument("one mark per element of I".into()));
        }
        if i.windows(2).any(|w| w[0] >= w[1]) || i.iter().any(|&x| x == 0 || x > n) {
            return Err(Error::InvalidArgument(format!("{i:?} is not an increasing subset of 1..{n}")));
        }
        Ok(MarkedMultiIndex { n, i, starred })
    }

    /// The three indices not in `I`, increasing.
    pub fn survivors(&self) -> Vec<usize> {
        (1..=self.n).filter(|x| !self.i.contains(x)).collect()
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// All `2^(n-3) C(n,3)` marked multi-indices, lexicographic in `(I, marks)`.
pub fn marked_indices(n: usize) -> Result<Vec<MarkedMultiIndex>> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("marked multi-indices need n >= 3, got {n}")));
    }
    let k = n - 3;
    let mut out = Vec::new();
    for i in subsets(n, k) {
        for mask in 0u32..1 << k {
            let starred = (0..k).map(|b| mask & (1 << (k - 1 - b)) != 0).collect();
            out.push(MarkedMultiIndex { n, i: i.clone(), starred });
        }
    }
    Ok(out)
}

impl std::fmt::Display for MarkedMultiIndex {
    /// `1,3*` for `i = (1, 3)` with the second index starred.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> =
            self.i.iter().zip(&self.starred).map(|(i, &s)| if s { format!("{i}*") } else { i.to_string() }).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(marked_indices(3).unwrap().len(), 1);
        assert_eq!(marked_indices(4).unwrap().len(), 8);
        assert_eq!(marked_indices(5).unwrap().len(), 40);
        assert!(marked_indices(2).is_err());
    }

    #[test]
    fn ordering_is_lexicographic() {
        let v = marked_indices(5).unwrap();
        assert!(v.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(v[0].survivors(), vec![3, 4, 5]);
    }

    #[test]
    fn validation() {
        assert!(MarkedMultiIndex::new(4, vec![2], vec![true]).is_ok());
        assert!(MarkedMultiIndex::new(4, vec![2, 3], vec![true, false]).is_err());
        assert!(MarkedMultiIndex::new(4, vec![5], vec![true]).is_err());
    }
}
