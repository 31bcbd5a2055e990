//! S_d-Bernoulli and S_d-hypergeometric Bernoulli numbers and polynomials.
//!
//! The numbers `B_{d,n}(m)` are read off `1 / 1σ1(1; m+1; t)` after
//! normalising by `[n]_d!`. They are computed by exact series inversion and,
//! independently, by the explicit signed sum over compositions of `n`.

mod audit;
mod numbers;
mod polynomials;

pub use audit::{audit_published_tables, PublishedEntry, PUBLISHED_TABLES};
pub use numbers::{
    bernoulli_numbers_composition, bernoulli_numbers_series, bernoulli_table_composition,
    plain_bernoulli_composition, plain_bernoulli_numbers, BernoulliTable, Method, COMPOSITION_CAP,
};
pub use polynomials::{bernoulli_polynomials, BernoulliPolynomialFamily};
