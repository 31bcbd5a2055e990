//! Truncated formal power series in `t` and the S_d-exponential and
//! S_d-hypergeometric series.
//!
//! Series carry plain coefficients of `t^n`. The S_d normalisation
//! (`c_n * [n]_d!`) is applied by callers that extract S_d-type numbers.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::{factorial, rising_factorial, sd_factorials, sd_pochhammer, Dim};
use crate::error::{domain, internal, Result};
use crate::polynomials::Polynomial;
use crate::rational::Rational;

/// Coefficients `c_0, ..., c_N` of a power series; everything above `t^N` is discarded.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Series of order `coeffs.len() - 1`. An empty vector is rejected.
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(domain(
                "a truncated series needs at least the constant coefficient",
            ));
        }
        Ok(TruncatedSeries { coeffs })
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        TruncatedSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_| Rational::zero())
    }

    pub fn one(order: usize) -> Self {
        Self::from_fn(order, |n| {
            if n == 0 {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    /// Truncation bound `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coefficient(&self, n: usize) -> Result<&Rational> {
        self.coeffs.get(n).ok_or_else(|| {
            domain(format!(
                "coefficient {n} is above the truncation order {}",
                self.order()
            ))
        })
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(domain(format!(
                "truncation orders differ: {} vs {}",
                self.order(),
                other.order()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(Self::from_fn(self.order(), |n| {
            &self.coeffs[n] + &other.coeffs[n]
        }))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(Self::from_fn(self.order(), |n| {
            &self.coeffs[n] - &other.coeffs[n]
        }))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_fn(self.order(), |n| &self.coeffs[n] * c)
    }

    /// `f(t) -> f(c t)`, i.e. `c_n -> c^n c_n`.
    pub fn scale_argument(&self, c: &Rational) -> Self {
        let mut pow = Rational::one();
        Self::from_fn(self.order(), |n| {
            let out = &self.coeffs[n] * &pow;
            pow *= c;
            out
        })
    }

    /// Cauchy product, keeping the first `N + 1` coefficients.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(Self::from_fn(self.order(), |n| {
            (0..=n)
                .filter(|&k| !self.coeffs[k].is_zero())
                .map(|k| &self.coeffs[k] * &other.coeffs[n - k])
                .sum()
        }))
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(domain("series with zero constant term has no inverse"));
        }
        let inv_c0 = c0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv_c0.clone());
        for n in 1..=self.order() {
            let s: Rational = (1..=n)
                .filter(|&k| !self.coeffs[k].is_zero())
                .map(|k| &self.coeffs[k] * &out[n - k])
                .sum();
            out.push(-s * &inv_c0);
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Keep only coefficients up to `order` (which must not exceed the current order).
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(domain(format!(
                "cannot extend a series of order {} to {order}",
                self.order()
            )));
        }
        Ok(TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    /// Divide by `t^k` after checking the low coefficients vanish; the order drops by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(domain(format!(
                "cannot divide a series of order {} by t^{k}",
                self.order()
            )));
        }
        if let Some(i) = (0..k).find(|&i| !self.coeffs[i].is_zero()) {
            return Err(domain(format!(
                "coefficient of t^{i} is nonzero, cannot divide by t^{k}"
            )));
        }
        Ok(TruncatedSeries {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs.iter().enumerate() {
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, " + ({c})*t")?,
                _ => write!(f, " + ({c})*t^{n}")?,
            }
        }
        write!(f, " + O(t^{})", self.coeffs.len())
    }
}

/// `exp_d(t) = sum t^n / [n]_d!` to order `N`.
pub fn exp_d_series(d: Dim, order: usize) -> TruncatedSeries {
    let facts = sd_factorials(d, order as u32);
    TruncatedSeries::from_fn(order, |n| Rational::new(BigInt::one(), facts[n].clone()))
}

/// Partial sum `T_{d,m}(x) = sum_{k<=m} x^k / [k]_d!`.
pub fn exp_d_partial_sum(d: Dim, m: u32) -> Polynomial {
    Polynomial::new(exp_d_series(d, m as usize).coeffs().to_vec())
}

/// `rσs^d(a_1..a_r; b_1..b_s; t)` with coefficients
/// `prod (a_j)_{d,n} / (prod (b_i)_{d,n} [n]_d!)`. Parameters are positive integers.
pub fn sigma_series(d: Dim, upper: &[u32], lower: &[u32], order: usize) -> Result<TruncatedSeries> {
    if let Some(b) = lower.iter().find(|&&b| b == 0) {
        return Err(domain(format!(
            "lower parameter {b} would put a zero factor in the denominator"
        )));
    }
    if upper.contains(&0) {
        return Err(domain("upper parameters must be positive integers"));
    }
    let facts = sd_factorials(d, order as u32);
    let mut coeffs = Vec::with_capacity(order + 1);
    for n in 0..=order as u32 {
        let mut num = BigInt::one();
        for &a in upper {
            num *= sd_pochhammer(d, a, n)?;
        }
        let mut den = facts[n as usize].clone();
        for &b in lower {
            den *= sd_pochhammer(d, b, n)?;
        }
        coeffs.push(Rational::new(num, den));
    }
    TruncatedSeries::new(coeffs)
}

/// `1σ1^d(1; m+1; t)`, computed directly and cross-checked against the tail
/// `[m]_d! t^{-m} (exp_d(t) - T_{d,m-1}(t))`.
pub fn one_sigma_one_tail(d: Dim, m: u32, order: usize) -> Result<TruncatedSeries> {
    if m == 0 {
        return Err(domain("the exponential tail needs m >= 1"));
    }
    let direct = sigma_series(d, &[1], &[m + 1], order)?;
    let shifted = exp_d_tail(d, m, order)?;
    if direct != shifted {
        return Err(internal(format!(
            "1σ1(1;{};t) disagrees with the shifted exp_{d} tail",
            m + 1
        )));
    }
    Ok(direct)
}

/// `[m]_d! t^{-m} (exp_d(t) - T_{d,m-1}(t))` to order `N`, by coefficient shift.
pub fn exp_d_tail(d: Dim, m: u32, order: usize) -> Result<TruncatedSeries> {
    let full = exp_d_series(d, order + m as usize);
    let partial = exp_d_partial_sum(d, m.saturating_sub(1));
    let head = TruncatedSeries::from_fn(full.order(), |n| {
        if m == 0 {
            Rational::zero()
        } else {
            partial.coeff(n)
        }
    });
    let tail = full.sub(&head)?.shift_down(m as usize)?;
    let m_fact = Rational::from_integer(sd_factorials(d, m)[m as usize].clone());
    Ok(tail.scale(&m_fact))
}

/// Checks `1/[n]_d! = (d!)^n / (n! (2)_n (3)_n ... (d)_n)` for `n <= N`,
/// i.e. `exp_d(x) = 0F_{d-1}(; 2, ..., d; d! x)` coefficientwise.
pub fn exp_hypergeometric_coefficient_check(d: Dim, order: usize) -> bool {
    let exp = exp_d_series(d, order);
    let d_fact = factorial(d.get());
    (0..=order as u32).all(|n| {
        let mut den = factorial(n);
        for b in 2..=d.get() {
            den *= rising_factorial(b as i64, n);
        }
        let hyper = Rational::new(num_traits::pow(d_fact.clone(), n as usize), den);
        exp.coeffs()[n as usize] == hyper
    })
}
