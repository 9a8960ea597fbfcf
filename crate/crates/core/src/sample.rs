//! Seeded generators for random exact test data.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::kernel::{Rat, RatMatrix};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rational with numerator in `[-bound, bound]` and denominator in `[1, bound]`.
pub fn rat(rng: &mut SampleRng, bound: i64) -> Rat {
    Rat::new(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound))
}

/// Nonzero rational with the same bounds.
pub fn nonzero_rat(rng: &mut SampleRng, bound: i64) -> Rat {
    loop {
        let r = rat(rng, bound);
        if !r.is_zero() {
            return r;
        }
    }
}

pub fn matrix(rng: &mut SampleRng, rows: usize, cols: usize, bound: i64) -> RatMatrix {
    RatMatrix::from_rows((0..rows).map(|_| (0..cols).map(|_| rat(rng, bound)).collect()).collect())
        .expect("rectangular")
}

pub fn symmetric(rng: &mut SampleRng, n: usize, bound: i64) -> RatMatrix {
    let mut m = RatMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = rat(rng, bound);
            m[(i, j)] = v.clone();
            m[(j, i)] = v;
        }
    }
    m
}

/// A matrix with at least one asymmetric entry pair.
pub fn non_symmetric(rng: &mut SampleRng, n: usize, bound: i64) -> RatMatrix {
    assert!(n >= 2, "a 1x1 matrix is always symmetric");
    loop {
        let m = matrix(rng, n, n, bound);
        if !m.is_symmetric() {
            return m;
        }
    }
}
