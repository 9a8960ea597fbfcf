//! Partitions and the index combinatorics built on them.

pub mod marked;
pub mod partition;
pub mod strip;
pub mod tableau;

pub use marked::{marked_indices, MarkedMultiIndex};
pub use partition::{
    partitions_in_box, partitions_of, partitions_up_to, symmetric_partitions_in_box, Frobenius, IJLabel,
    Partition,
};
pub use strip::{border_strip_add, border_strip_remove};
pub use tableau::{admissible_shape, admissible_tableaux, StandardTableau};

/// Binomial coefficient as u64 (zero outside `0 <= k <= n`).
pub fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}
