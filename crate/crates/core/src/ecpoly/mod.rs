//! EC-polynomials.
//!
//! For a set partition `P = S_1 | ... | S_k` of `{1..n}` (blocks ordered by
//! minimum) put `sigma(S) = sum_{v in S} z_v` and
//! `d(j,i) = |S_j| sigma(S_i) - |S_i| sigma(S_j)`. Then
//!
//! ```text
//! EC_n = n! * sum_P e(P) * prod_j ( -|S_j| q + t sigma(S_j) - r sum_{i<j} d(j,i) )
//! ```
//!
//! with `e(P)` the product of the block weights [`e_of_block`].

mod assemble;
mod block;
mod bridge;
mod packed;

pub use assemble::{
    check_symmetry, ec_poly, ec_poly_cached, ec_poly_literal, ec_poly_progress, ec_poly_with, linear_factor,
    ECPolynomial, SymmetryVerdict,
};
pub use block::{d_form, e_of_block, e_of_block_literal, e_of_partition, BlockStats};
pub use bridge::{ec_eval_bridge_point, SpecializedEc};
