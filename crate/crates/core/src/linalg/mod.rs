//! Dense exact rational linear algebra.
//!
//! Nothing in here uses floating point or tolerances: every routine is
//! exact over the rationals.

mod echelon;
mod matrix;
mod poly;
mod rational;
mod span;

pub use echelon::{kernel_basis, rank, rank_of_rows, rref, solve, Rref};
pub use matrix::{dot, QMatrix};
pub use poly::Polynomial;
pub use rational::{binomial, binomial_rational, common_denominator, Rational};
pub use span::{is_multiplicatively_closed, span_closure, SpanBasis};
