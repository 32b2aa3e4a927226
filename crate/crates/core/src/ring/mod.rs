//! Exact arithmetic: rationals, `Q[q,t,r]`, polynomials in `z` over it, and
//! Laurent polynomials in `x1, x2`.
//!
//! # Canonical text form
//!
//! Every polynomial type prints as a sum of terms joined by `" + "`. A term is
//! a signed coefficient (`num` or `num/den`, lowest terms) followed by
//! `*name^exp` factors for each variable with a nonzero exponent. The zero
//! polynomial prints as `0`. Terms are listed in graded lexicographic order
//! (see [`grlex_cmp`]); for `ZPoly` the `z` exponent is the primary key and
//! the parameter exponent breaks ties, and parameter factors `q, t, r` precede
//! the `z` factors inside a term. `EC_1` prints as
//!
//! ```text
//! -1*q^1 + 1*t^1*z1^1
//! ```
//!
//! Parsing accepts exactly this grammar (in any term order, with repeated
//! monomials summed), so printing, parsing and printing again is the identity.

mod laurent;
mod monomial;
mod param;
mod rational;
mod text;
mod zpoly;

pub use laurent::LaurentPoly2;
pub use monomial::{grlex_cmp, ZExp};
pub use param::{ParamExp, ParamPoly};
pub use rational::BigRat;
pub use zpoly::ZPoly;
