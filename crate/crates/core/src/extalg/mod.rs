//! The exterior algebra `Λ(H_N)` with its symplectic ladder operators.

pub mod basis;
pub mod symplectic;
pub mod vector;

pub use basis::{basis_elements, basis_p, dim_p, k_bar, ladder_residuals, phi_basis_element, BasisElement};
pub use symplectic::{omega, omega_contract, omega_contract_fermionic, omega_wedge, omega_wedge_fermionic, x_elem};
pub use vector::ExtVector;

/// All index subsets of size `k` of `{-N..N-1}`, increasing, in lexicographic order.
pub fn subsets_of_degree(n: usize, k: usize) -> Vec<Vec<i32>> {
    fn rec(lo: i32, hi: i32, k: usize, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in lo..hi {
            cur.push(x);
            rec(x + 1, hi, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(-(n as i32), n as i32, k, &mut Vec::new(), &mut out);
    out
}
