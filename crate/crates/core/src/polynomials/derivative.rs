//! The two S_d-derivatives. Both send `x^n` to `[n]_d x^(n-1)`, but they are
//! computed along unrelated routes so that agreement between them is a real
//! check rather than a tautology.

use num_bigint::BigInt;
use num_traits::Zero;

use super::Polynomial;
use crate::combinatorics::{binomial, factorial, sd_factorial, stirling1_row, Dim};
use crate::error::{domain, internal, Result};
use crate::rational::Rational;

/// `D_{S_d} p = sum_{k<d} C(d-1,k) / (k+1)! * x^k * p^(k+1)`, by repeated
/// ordinary differentiation of the coefficient vector.
pub fn sd_derivative_operator_form(p: &Polynomial, d: Dim) -> Polynomial {
    let mut acc = Polynomial::zero();
    let mut deriv = p.derivative();
    for k in 0..d.get() {
        if deriv.is_zero() {
            break;
        }
        let weight = Rational::new(binomial(d.get() - 1, k), factorial(k + 1));
        acc = &acc + &deriv.scale(&weight).shift_up(k as usize);
        deriv = deriv.derivative();
    }
    acc
}

/// `D_{S'_d} p = (1/d!) sum_k c(d,k) x^{-1} (x D)^k p` with unsigned Stirling
/// numbers of the first kind, evaluated through repeated Euler operators.
///
/// The `x^{-1}` step must not leave a negative power behind; if it would,
/// the Stirling weights are wrong and an internal error is returned.
pub fn sd_derivative_stirling_form(p: &Polynomial, d: Dim) -> Result<Polynomial> {
    let weights = stirling1_row(d.get());
    let mut acc = Polynomial::zero();
    let mut power = p.clone();
    for (k, w) in weights.iter().enumerate() {
        if k > 0 {
            power = power.euler();
        }
        if !w.is_zero() {
            acc = &acc + &power.scale(&Rational::from_integer(w.clone()));
        }
    }
    if !acc.coeff(0).is_zero() {
        return Err(internal(format!(
            "x^-1 term survived in the Stirling-form derivative for d={d}"
        )));
    }
    let inv = Rational::new(BigInt::from(1), factorial(d.get()));
    Ok(Polynomial::new(
        acc.coeffs().iter().skip(1).map(|c| c * &inv).collect(),
    ))
}

/// `k`-fold application of [`sd_derivative_operator_form`].
pub fn sd_derivative_iterated(p: &Polynomial, d: Dim, k: u32) -> Polynomial {
    (0..k).fold(p.clone(), |acc, _| sd_derivative_operator_form(&acc, d))
}

/// Closed form of the iterated derivative on a monomial:
/// `D^k x^n = [n]_d! / [n-k]_d! * x^(n-k)`, zero once `k > n`.
pub fn sd_derivative_iterated_monomial(n: u32, d: Dim, k: u32) -> Polynomial {
    if k > n {
        return Polynomial::zero();
    }
    let c = Rational::new(sd_factorial(d, n), sd_factorial(d, n - k));
    Polynomial::term(c, (n - k) as usize)
}

/// Right-hand side of the S_d product rule
/// `D(fg) = Df*g + f*Dg + sum_{k=1}^{d-1} C(d-1,k)/(k+1)! x^k sum_{i=1}^{k} C(k+1,i) f^(k+1-i) g^(i)`.
pub fn sd_product_rule_rhs(f: &Polynomial, g: &Polynomial, d: Dim) -> Result<Polynomial> {
    if d.get() < 2 {
        return Err(domain("the S_d product rule is stated for d >= 2"));
    }
    let mut out =
        &(&sd_derivative_operator_form(f, d) * g) + &(f * &sd_derivative_operator_form(g, d));
    for k in 1..d.get() {
        let weight = Rational::new(binomial(d.get() - 1, k), factorial(k + 1));
        let mut inner = Polynomial::zero();
        for i in 1..=k {
            let term = &f.nth_derivative((k + 1 - i) as usize) * &g.nth_derivative(i as usize);
            inner = &inner + &term.scale(&Rational::from_integer(binomial(k + 1, i)));
        }
        out = &out + &inner.scale(&weight).shift_up(k as usize);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::sd_number;
    use crate::rational::int;

    fn dim(d: u32) -> Dim {
        Dim::new(d).unwrap()
    }

    fn poly(cs: &[i64]) -> Polynomial {
        Polynomial::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn operator_form_examples() {
        // (1/2) x * 6x + 3x^2
        assert_eq!(
            sd_derivative_operator_form(&Polynomial::monomial(3), dim(2)),
            Polynomial::term(int(6), 2)
        );
        assert!(sd_derivative_operator_form(&poly(&[7]), dim(4)).is_zero());
        for d in 1..=5 {
            for n in 0..12u32 {
                let expect = if n == 0 {
                    Polynomial::zero()
                } else {
                    Polynomial::term(Rational::from_integer(sd_number(dim(d), n)), n as usize - 1)
                };
                assert_eq!(
                    sd_derivative_operator_form(&Polynomial::monomial(n as usize), dim(d)),
                    expect
                );
            }
        }
    }

    #[test]
    fn stirling_form_examples() {
        assert!(sd_derivative_stirling_form(&Polynomial::one(), dim(3))
            .unwrap()
            .is_zero());
        assert_eq!(
            sd_derivative_stirling_form(&poly(&[0, 1, 1]), dim(2)).unwrap(),
            poly(&[1, 3])
        );
        assert_eq!(
            sd_derivative_stirling_form(&Polynomial::monomial(6), dim(3)).unwrap(),
            Polynomial::term(int(56), 5)
        );
    }

    #[test]
    fn iterated() {
        assert_eq!(
            sd_derivative_iterated(&Polynomial::monomial(5), dim(2), 2),
            Polynomial::term(int(150), 3)
        );
        assert_eq!(
            sd_derivative_iterated_monomial(5, dim(2), 2),
            Polynomial::term(int(150), 3)
        );
        let p = poly(&[1, 2, 3]);
        assert_eq!(sd_derivative_iterated(&p, dim(3), 0), p);
        assert!(sd_derivative_iterated(&Polynomial::monomial(3), dim(3), 4).is_zero());
    }

    #[test]
    fn product_rule_examples() {
        let x = Polynomial::x();
        assert_eq!(
            sd_product_rule_rhs(&x, &x, dim(2)).unwrap(),
            Polynomial::term(int(3), 1)
        );
        let p = poly(&[4, -1, 0, 2]);
        assert_eq!(
            sd_product_rule_rhs(&Polynomial::one(), &p, dim(3)).unwrap(),
            sd_derivative_operator_form(&p, dim(3))
        );
        assert_eq!(
            sd_product_rule_rhs(&Polynomial::monomial(2), &Polynomial::monomial(3), dim(3))
                .unwrap(),
            Polynomial::term(int(35), 4)
        );
        assert!(sd_product_rule_rhs(&x, &x, dim(1)).is_err());
    }
}
