//! Exact univariate and bivariate polynomials and the S_d-calculus on them.

mod bivariate;
mod derivative;
mod polynomial;
mod special;

pub use bivariate::BivariatePolynomial;
pub use derivative::{
    sd_derivative_iterated, sd_derivative_iterated_monomial, sd_derivative_operator_form,
    sd_derivative_stirling_form, sd_product_rule_rhs,
};
pub use polynomial::Polynomial;
pub use special::{
    bivariate_hoggatt, hoggatt_recurrence_correction, hoggatt_translate, kummer_polynomial,
    kummer_touchard_rhs, touchard,
};
