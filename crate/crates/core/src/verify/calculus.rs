//! Identity checks for the combinatorial kernels, the S_d-derivatives and the series layer.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{sample_points, IdentityReport, VerifyRanges};
use crate::combinatorics::{
    binomial, factorial, hoggatt_binomial, hoggatt_binomial_product_form, pascal_factor,
    rising_factorial, sd_factorial, sd_factorials, sd_number, sd_number_or_unit,
    sd_number_via_binomial_sum, sd_number_via_stirling, Dim,
};
use crate::error::Result;
use crate::polynomials::{
    bivariate_hoggatt, hoggatt_recurrence_correction, kummer_polynomial, kummer_touchard_rhs,
    sd_derivative_iterated, sd_derivative_iterated_monomial, sd_derivative_operator_form,
    sd_derivative_stirling_form, sd_product_rule_rhs, BivariatePolynomial, Polynomial,
};
use crate::rational::{frac, Rational};
use crate::series::{
    exp_d_partial_sum, exp_d_series, exp_hypergeometric_coefficient_check, one_sigma_one_tail,
    sigma_series, TruncatedSeries,
};

pub(super) fn dims(r: &VerifyRanges) -> impl Iterator<Item = Dim> {
    r.d.clone()
        .map(|d| Dim::new(d).expect("validated range starts at 1"))
}

fn big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Deterministic test polynomial of exact degree `deg`.
pub(super) fn sample_poly(deg: usize, seed: i64) -> Polynomial {
    let coeffs: Vec<Rational> = (0..=deg as i64)
        .map(|i| {
            let num = (seed * 31 + i * 17).rem_euclid(13) - 6;
            let den = (i * seed).rem_euclid(5) + 1;
            if i == deg as i64 && num == 0 {
                Rational::one()
            } else {
                frac(num, den)
            }
        })
        .collect();
    Polynomial::new(coeffs)
}

pub(super) fn sd_representations(r: &VerifyRanges) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    for d in dims(r) {
        for n in 0..=r.n_max {
            let mut rep = IdentityReport::new("sd-representations", &[("d", d.get()), ("n", n)]);
            let v = sd_number(d, n);
            rep.expect_eq("binomial sum", &sd_number_via_binomial_sum(d, n), &v);
            if let Some(s) = rep.expect_ok("stirling form", sd_number_via_stirling(d, n)) {
                rep.expect_eq("stirling form", &s, &v);
            }
            let rising = rising_factorial(n as i64, d.get());
            rep.expect_eq(
                "rising factorial",
                &big(rising),
                &big(&v * factorial(d.get())),
            );
            rep.expect_eq(
                "recursion",
                &sd_number(d, n + 1),
                &(&v + sd_number_or_unit(d.get() - 1, n + 1)),
            );
            out.push(rep);
        }
    }
    Ok(out)
}

pub(super) fn simplitorial(r: &VerifyRanges) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    for d in dims(r) {
        for n in 0..=r.n_max {
            let mut rep = IdentityReport::new("simplitorial", &[("d", d.get()), ("n", n)]);
            let lhs = sd_factorial(d, n);
            let lower = match Dim::new(d.get() - 1) {
                Ok(dl) => sd_factorial(dl, n),
                Err(_) => BigInt::one(),
            };
            let descent = Rational::new(
                rising_factorial(d.get() as i64, n) * lower,
                num_traits::pow(BigInt::from(d.get()), n as usize),
            );
            rep.expect_eq("dimension descent", &big(lhs.clone()), &descent);
            let left = (0..d.get()).fold(
                lhs * num_traits::pow(factorial(d.get()), n as usize),
                |acc, i| acc * factorial(i),
            );
            let right: BigInt = (0..d.get()).map(|i| factorial(n + i)).product();
            rep.expect_eq("closed form", &left, &right);
            out.push(rep);
        }
    }
    Ok(out)
}

pub(super) fn hoggatt_pascal(r: &VerifyRanges) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    for d in dims(r) {
        for n in 0..=r.n_max {
            let mut rep = IdentityReport::new("hoggatt-pascal", &[("d", d.get()), ("n", n)]);
            for k in 0..=n {
                let h = hoggatt_binomial(d, n, k)?;
                rep.expect_eq(
                    &format!("symmetry k={k}"),
                    &h,
                    &hoggatt_binomial(d, n, n - k)?,
                );
                rep.expect_eq(
                    &format!("product form k={k}"),
                    &h,
                    &hoggatt_binomial_product_form(d, n, k)?,
                );
                if k == 0 {
                    rep.expect_eq("<n 0>", &h, &Rational::one());
                }
                if k == 1 {
                    rep.expect_eq("<n 1>", &h, &big(sd_number(d, n)));
                }
                if d.get() >= 2 && k >= 1 {
                    let f = pascal_factor(d, n, k)?;
                    let rhs = f * &h + hoggatt_binomial(d, n, k - 1)?;
                    rep.expect_eq(
                        &format!("pascal k={k}"),
                        &hoggatt_binomial(d, n + 1, k)?,
                        &rhs,
                    );
                }
            }
            out.push(rep);
        }
    }
    Ok(out)
}

/// `[a+b]_d = sum_{k=0}^{d} [a]_{d-k} [b]_k` with `[.]_0 = 1`.
pub(super) fn convolution(r: &VerifyRanges) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    let top = r.n_max.clamp(1, 10);
    for d in dims(r) {
        for a in 1..=top {
            for b in 1..=top {
                let mut rep =
                    IdentityReport::new("convolution", &[("d", d.get()), ("a", a), ("b", b)]);
                let rhs: BigInt = (0..=d.get())
                    .map(|k| sd_number_or_unit(d.get() - k, a) * sd_number_or_unit(k, b))
                    .sum();
                rep.expect_eq("convolution", &sd_number(d, a + b), &rhs);
                out.push(rep);
            }
        }
    }
    Ok(out)
}

pub(super) fn narayana_cross(r: &VerifyRanges) -> Result<Vec<IdentityReport>> {
    let d2 = Dim::new(2)?;
    let mut out = Vec::new();
    for n in 1..=r.n_max.max(1) {
        let mut rep = IdentityReport::new("narayana-cross", &[("n", n)]);
        for k in 0..=n {
            let narayana = Rational::new(binomial(n, k) * binomial(n + 1, k), BigInt::from(k + 1));
            rep.expect_eq(
                &format!("narayana k={k}"),
                &hoggatt_binomial(d2, n, k)?,
                &narayana,
            );
            if k >= 1 {
                let lhs = big(binomial(n + 1, k) * binomial(n + 2, k));
                let rhs = frac((n + 2 + k).into(), (n + 2 - k).into())
                    * big(binomial(n, k) * binomial(n + 1, k))
                    + frac((k + 1).into(), k.into())
                        * big(binomial(n, k - 1) * binomial(n + 1, k - 1));
                rep.expect_eq(&format!("cross k={k}"), &lhs, &rhs);
            }
        }
        out.push(rep);
    }
    Ok(out)
}

pub(super) fn derivative_equivalence(r: &VerifyRanges) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    for d in dims(r) {
        for n in 0..=r.n_max {
            let mut rep =
                IdentityReport::new("derivative-equivalence", &[("d", d.get()), ("n", n)]);
            let mono = Polynomial::monomial(n as usize);
            let op = sd_derivative_operator_form(&mono, d);
            let expect = if n == 0 {
                Polynomial::zero()
            } else {
                Polynomial::term(big(sd_number(d, n)), n as usize - 1)
            };
            rep.expect_eq("monomial rule", &op, &expect);
            if let Some(st) = rep.expect_ok("stirling form", sd_derivative_stirling_form(&mono, d))
            {
                rep.expect_eq("operator vs stirling on x^n", &op, &st);
            }
            let p = sample_poly(n as usize, 3 + n as i64);
            if let Some(st) = rep.expect_ok("stirling form", sd_derivative_stirling_form(&p, d)) {
                rep.expect_eq(
                    "operator vs stirling on sample",
                    &sd_derivative_operator_form(&p, d),
                    &st,
                );
            }
            for k in [0, 1, 2, n / 2, n, n + 1] {
                rep.expect_eq(
                    &format!("iterated k={k}"),
                    &sd_derivative_iterated(&mono, d, k),
                    &sd_derivative_iterated_monomial(n, d, k),
                );
            }
            out.push(rep);
        }
    }
    Ok(out)
}

pub(super) fn product_rule(r: &VerifyRanges) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    let (alpha, beta) = (frac(-3, 4), frac(5, 3));
    for d in dims(r).filter(|d| d.get() >= 2) {
        for n in 0..=r.n_max {
            let mut rep = IdentityReport::new("product-rule", &[("d", d.get()), ("n", n)]);
            let f = sample_poly(n as usize, 1 + n as i64);
            let g = sample_poly((n as usize).saturating_sub(1), 7 + 2 * n as i64);
            let lhs = sd_derivative_operator_form(&(&f * &g), d);
            rep.expect_eq("product rule", &lhs, &sd_product_rule_rhs(&f, &g, d)?);
            let combo = &f.scale(&alpha) + &g.scale(&beta);
            let lin = &sd_derivative_operator_form(&f, d).scale(&alpha)
                + &sd_derivative_operator_form(&g, d).scale(&beta);
            rep.expect_eq("linearity", &sd_derivative_operator_form(&combo, d), &lin);
            out.push(rep);
        }
    }
    Ok(out)
}

pub(super) fn kummer_touchard(r: &VerifyRanges) -> Result<Vec<IdentityReport>> {
    Ok(dims(r)
        .map(|d| {
            let mut rep = IdentityReport::new("kummer-touchard", &[("d", d.get())]);
            if let Some(rhs) = rep.expect_ok("touchard side", kummer_touchard_rhs(d)) {
                rep.expect_eq("kummer-touchard", &kummer_polynomial(d), &rhs);
            }
            rep
        })
        .collect())
}

pub(super) fn bivariate_derivative(r: &VerifyRanges) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    for d in dims(r) {
        for n in 1..=r.n_max.max(1) {
            let mut rep = IdentityReport::new("bivariate-derivative", &[("d", d.get()), ("n", n)]);
            let p = bivariate_hoggatt(d, n);
            let q = bivariate_hoggatt(d, n - 1);
            let scale = big(sd_number(d, n));
            let lhs = p.map_x(|c| sd_derivative_operator_form(c, d));
            rep.expect_eq("symbolic", &lhs, &q.scale(&scale));
            for (_, a) in sample_points() {
                let lhs = sd_derivative_operator_form(&p.eval_y(&a), d);
                rep.expect_eq(&format!("a={a}"), &lhs, &q.eval_y(&a).scale(&scale));
            }
            out.push(rep);
        }
    }
    Ok(out)
}

pub(super) fn bivariate_recurrence(r: &VerifyRanges) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    let x_plus_y = &BivariatePolynomial::x() + &BivariatePolynomial::y();
    for d in dims(r) {
        for n in 0..=r.n_max {
            let mut rep = IdentityReport::new("bivariate-recurrence", &[("d", d.get()), ("n", n)]);
            let correction = hoggatt_recurrence_correction(d, n);
            let rhs = &(&x_plus_y * &bivariate_hoggatt(d, n)) + &correction;
            rep.expect_eq("recurrence", &bivariate_hoggatt(d, n + 1), &rhs);
            if d.get() == 2 {
                let narayana = BivariatePolynomial::from_terms((1..=n).map(|k| {
                    let c = Rational::new(
                        BigInt::from(2 * k) * binomial(n, k) * binomial(n + 1, k),
                        BigInt::from((k + 1) * (n + 2 - k)),
                    );
                    ((n + 1 - k) as usize, k as usize, c)
                }));
                rep.expect_eq("narayana correction", &correction, &narayana);
            }
            out.push(rep);
        }
    }
    Ok(out)
}

pub(super) fn exp_eigenfunction(r: &VerifyRanges) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    for d in dims(r) {
        for n in 1..=r.n_max.max(1) {
            let mut rep = IdentityReport::new("exp-eigenfunction", &[("d", d.get()), ("n", n)]);
            let partial = exp_d_partial_sum(d, n);
            let lower = exp_d_partial_sum(d, n - 1);
            rep.expect_eq(
                "operator form",
                &sd_derivative_operator_form(&partial, d),
                &lower,
            );
            if let Some(st) =
                rep.expect_ok("stirling form", sd_derivative_stirling_form(&partial, d))
            {
                rep.expect_eq("stirling form", &st, &lower);
            }
            out.push(rep);
        }
    }
    Ok(out)
}

pub(super) fn exp_hypergeometric(r: &VerifyRanges) -> Result<Vec<IdentityReport>> {
    Ok(dims(r)
        .map(|d| {
            let mut rep =
                IdentityReport::new("exp-hypergeometric", &[("d", d.get()), ("n", r.n_max)]);
            rep.expect(
                exp_hypergeometric_coefficient_check(d, r.n_max as usize),
                || "0F_{d-1} coefficients differ from 1/[n]_d!".to_string(),
            );
            let sigma = sigma_series(d, &[], &[], r.n_max as usize);
            if let Some(s) = rep.expect_ok("0σ0", sigma) {
                rep.expect_eq("0σ0 = exp_d", &s, &exp_d_series(d, r.n_max as usize));
            }
            rep
        })
        .collect())
}

/// `exp_d(xt) exp_d(yt) = sum (x (+)_d y)^(n) t^n / [n]_d!`, each side computed independently.
pub(super) fn product_law(r: &VerifyRanges) -> Result<Vec<IdentityReport>> {
    let order = r.n_max as usize;
    let mut out = Vec::new();
    for d in dims(r) {
        let exp = exp_d_series(d, order);
        let facts = sd_factorials(d, r.n_max);
        let hoggatt: Vec<_> = (0..=r.n_max).map(|n| bivariate_hoggatt(d, n)).collect();
        for (i, (x, y)) in sample_points().into_iter().enumerate() {
            let mut rep = IdentityReport::new("product-law", &[("d", d.get()), ("pair", i as u32)]);
            let lhs = exp.scale_argument(&x).mul(&exp.scale_argument(&y))?;
            let rhs = TruncatedSeries::from_fn(order, |n| {
                hoggatt[n].eval(&x, &y) / big(facts[n].clone())
            });
            rep.expect(lhs == rhs, || {
                let n = (0..=order)
                    .find(|&n| lhs.coeffs()[n] != rhs.coeffs()[n])
                    .unwrap_or(0);
                format!(
                    "x={x}, y={y}, t^{n}: lhs = {}, rhs = {}",
                    lhs.coeffs()[n],
                    rhs.coeffs()[n]
                )
            });
            out.push(rep);
        }
    }
    Ok(out)
}

pub(super) fn sigma_tail(r: &VerifyRanges) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    for d in dims(r) {
        for m in r.m.clone() {
            let mut rep =
                IdentityReport::new("sigma-tail", &[("d", d.get()), ("m", m), ("n", r.n_max)]);
            if let Some(s) = rep.expect_ok("tail", one_sigma_one_tail(d, m, r.n_max as usize)) {
                rep.expect(s.coeffs()[0] == Rational::one(), || {
                    "constant term is not 1".into()
                });
                rep.expect(s.coeffs().iter().all(|c| !c.is_zero()), || {
                    "vanishing coefficient".into()
                });
            }
            out.push(rep);
        }
    }
    Ok(out)
}
