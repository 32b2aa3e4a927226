//! Exact computer algebra for EC-polynomials and rank-2 cluster algebras.
//!
//! The crate is organised bottom-up:
//!
//! * [`ring`]: big rationals, the parameter ring `Q[q,t,r]`, polynomials in
//!   `z1..zn` over it, and bivariate Laurent polynomials over `Z`.
//! * [`combinatorics`]: set partitions in block-minimum order, permutations,
//!   integer partitions, bounded compositions, binomials and the `a_n` sequence.
//! * [`ecpoly`]: the EC-polynomials, built from a sum over set partitions.
//! * [`symfunc`]: expansion into the monomial, Schur, elementary, complete
//!   homogeneous and power sum bases, plus sign-coherency verdicts.
//! * [`cluster`]: cluster variables by recurrence and closed form, and the
//!   Euler characteristic routes that must all agree.
//!
//! Nothing in here uses floating point.

pub mod cluster;
pub mod combinatorics;
pub mod ecpoly;
mod error;
pub mod exec;
pub mod ring;
pub mod symfunc;

pub use error::{Error, Result};
pub use exec::Exec;
