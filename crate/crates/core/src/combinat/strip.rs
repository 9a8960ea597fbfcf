//! Border strips, enumerated in particle coordinates: a border strip of size
//! `r` added to `λ` is a particle hop `p -> p + r` onto an empty site, and its
//! height is one more than the number of particles jumped over.

use super::partition::Partition;

fn positions(lambda: &Partition, len: usize) -> Vec<i64> {
    (0..len).map(|j| lambda.part(j) as i64 - j as i64 - 1).collect()
}

fn hops(lambda: &Partition, r: usize, up: bool) -> Vec<(Partition, usize)> {
    if r == 0 {
        return Vec::new();
    }
    let len = lambda.len() + r;
    let pos = positions(lambda, len);
    let occupied = |x: i64| x < -(len as i64) || pos.contains(&x);
    let mut out = Vec::new();
    for (i, &p) in pos.iter().enumerate() {
        let q = if up { p + r as i64 } else { p - r as i64 };
        if occupied(q) {
            continue;
        }
        let (lo, hi) = if up { (p, q) } else { (q, p) };
        let jumped = pos.iter().filter(|&&x| x > lo && x < hi).count()
            + (lo + 1..hi).filter(|&x| x < -(len as i64)).count();
        let mut next = pos.clone();
        next[i] = q;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let mu = Partition::from_particle_positions(&next).expect("hop keeps a partition");
        out.push((mu, jumped + 1));
    }
    out.sort();
    out
}

/// Every `μ ⊃ λ` with `μ/λ` a border strip of size `r`, with its height (row count).
pub fn border_strip_add(lambda: &Partition, r: usize) -> Vec<(Partition, usize)> {
    hops(lambda, r, true)
}

/// Every `μ ⊂ λ` with `λ/μ` a border strip of size `r`, with its height.
pub fn border_strip_remove(lambda: &Partition, r: usize) -> Vec<(Partition, usize)> {
    hops(lambda, r, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn add_fixtures() {
        assert_eq!(border_strip_add(&Partition::empty(), 1), vec![(p(&[1]), 1)]);
        let mut got = border_strip_add(&p(&[1]), 2);
        got.sort_by_key(|(_, h)| *h);
        assert_eq!(got, vec![(p(&[3]), 1), (p(&[1, 1, 1]), 2)]);
    }

    #[test]
    fn remove_fixtures() {
        assert_eq!(border_strip_remove(&p(&[2, 1]), 3), vec![(Partition::empty(), 2)]);
        assert!(border_strip_remove(&p(&[2, 1]), 2).is_empty());
        assert!(border_strip_remove(&Partition::empty(), 1).is_empty());
    }

    #[test]
    fn add_remove_are_inverse() {
        for lam in super::super::partitions_up_to(6) {
            for r in 1..=4 {
                for (mu, h) in border_strip_add(&lam, r) {
                    assert_eq!(mu.weight(), lam.weight() + r);
                    assert!(border_strip_remove(&mu, r).contains(&(lam.clone(), h)));
                }
            }
        }
    }
}
