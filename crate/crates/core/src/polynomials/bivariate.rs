use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::Zero;

use super::Polynomial;
use crate::rational::Rational;

/// Polynomial in `x` and `y`, stored as a polynomial in `y` whose coefficients
/// are polynomials in `x`. Trailing zero rows are trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BivariatePolynomial {
    by_y: Vec<Polynomial>,
}

impl BivariatePolynomial {
    pub fn from_y_coeffs(by_y: Vec<Polynomial>) -> Self {
        let mut p = BivariatePolynomial { by_y };
        while p.by_y.last().is_some_and(Polynomial::is_zero) {
            p.by_y.pop();
        }
        p
    }

    /// Builds from `(x-degree, y-degree, coefficient)` triples; repeated keys add up.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for (i, j, c) in terms {
            if rows.len() <= j {
                rows.resize_with(j + 1, Vec::new);
            }
            let row = &mut rows[j];
            if row.len() <= i {
                row.resize(i + 1, Rational::zero());
            }
            row[i] += c;
        }
        Self::from_y_coeffs(rows.into_iter().map(Polynomial::new).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn x() -> Self {
        Self::from_y_coeffs(vec![Polynomial::x()])
    }

    pub fn y() -> Self {
        Self::from_y_coeffs(vec![Polynomial::zero(), Polynomial::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.by_y.is_empty()
    }

    /// Coefficient of `x^i y^j`.
    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        self.by_y.get(j).map_or_else(Rational::zero, |p| p.coeff(i))
    }

    /// Coefficient of `y^j` as a polynomial in `x`.
    pub fn y_coeff(&self, j: usize) -> Polynomial {
        self.by_y.get(j).cloned().unwrap_or_default()
    }

    pub fn y_degree(&self) -> Option<usize> {
        self.by_y.len().checked_sub(1)
    }

    /// Substitute `y`, leaving a polynomial in `x`.
    pub fn eval_y(&self, y: &Rational) -> Polynomial {
        self.by_y
            .iter()
            .rev()
            .fold(Polynomial::zero(), |acc, p| &acc.scale(y) + p)
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.eval_y(y).eval(x)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_y_coeffs(self.by_y.iter().map(|p| p.scale(c)).collect())
    }

    /// Apply a linear operator in `x` to every `y`-coefficient.
    pub fn map_x(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Self {
        Self::from_y_coeffs(self.by_y.iter().map(f).collect())
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, p) in self.by_y.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "({p})")?,
                1 => write!(f, "({p})*y")?,
                _ => write!(f, "({p})*y^{j}")?,
            }
        }
        Ok(())
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let n = self.by_y.len().max(rhs.by_y.len());
        BivariatePolynomial::from_y_coeffs(
            (0..n).map(|j| &self.y_coeff(j) + &rhs.y_coeff(j)).collect(),
        )
    }
}

impl Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn sub(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let n = self.by_y.len().max(rhs.by_y.len());
        BivariatePolynomial::from_y_coeffs(
            (0..n).map(|j| &self.y_coeff(j) - &rhs.y_coeff(j)).collect(),
        )
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        if self.is_zero() || rhs.is_zero() {
            return BivariatePolynomial::zero();
        }
        let mut out = vec![Polynomial::zero(); self.by_y.len() + rhs.by_y.len() - 1];
        for (i, a) in self.by_y.iter().enumerate() {
            for (j, b) in rhs.by_y.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        BivariatePolynomial::from_y_coeffs(out)
    }
}
