//! Exact calculus on simplicial d-polytopic numbers.
//!
//! The d-simplex numbers `[n]_d = C(n+d-1, d)` replace the integers of the
//! ordinary calculus: simplitorials replace factorials, d-Hoggatt binomials
//! replace binomial coefficients, and the S_d-derivative sends `x^n` to
//! `[n]_d x^(n-1)`. On top of that this crate computes S_d-exponential and
//! S_d-hypergeometric series and the S_d-(hypergeometric) Bernoulli numbers
//! and polynomials, all in exact rational arithmetic.

pub mod bernoulli;
pub mod combinatorics;
pub mod error;
pub mod polynomials;
pub mod rational;
pub mod series;
pub mod verify;

pub use combinatorics::Dim;
pub use error::{Error, Result};
pub use polynomials::{BivariatePolynomial, Polynomial};
pub use rational::Rational;
pub use series::TruncatedSeries;
