use num_bigint::BigInt;
use num_traits::Zero;

use super::{BivariatePolynomial, Polynomial};
use crate::combinatorics::{
    binomial, factorial, hoggatt_row, sd_number, stirling1_row, stirling2_row, Dim,
};
use crate::error::{domain, internal, Result};
use crate::rational::Rational;

/// Touchard polynomial `T_n(x) = sum_i S(n,i) x^i`.
pub fn touchard(n: u32) -> Polynomial {
    Polynomial::new(
        stirling2_row(n)
            .into_iter()
            .map(Rational::from_integer)
            .collect(),
    )
}

/// `1F1(1-d; 2; -x) = sum_{k<d} C(d-1,k) x^k / (k+1)!`, a polynomial of degree `d-1`.
pub fn kummer_polynomial(d: Dim) -> Polynomial {
    Polynomial::new(
        (0..d.get())
            .map(|k| Rational::new(binomial(d.get() - 1, k), factorial(k + 1)))
            .collect(),
    )
}

/// `x^{-1} (1/d!) sum_k c(d,k) T_k(x)`, the Touchard side of the Kummer identity.
pub fn kummer_touchard_rhs(d: Dim) -> Result<Polynomial> {
    let weights = stirling1_row(d.get());
    let mut q = Polynomial::zero();
    for (k, w) in weights.iter().enumerate() {
        if !w.is_zero() {
            q = &q + &touchard(k as u32).scale(&Rational::from_integer(w.clone()));
        }
    }
    if !q.coeff(0).is_zero() {
        return Err(internal(format!(
            "Touchard combination for d={d} has a nonzero constant term"
        )));
    }
    let inv = Rational::new(BigInt::from(1), factorial(d.get()));
    Ok(Polynomial::new(
        q.coeffs().iter().skip(1).map(|c| c * &inv).collect(),
    ))
}

/// Bivariate d-Hoggatt polynomial `(x (+)_d y)^(n) = sum_k <n k>_d x^(n-k) y^k`.
///
/// `d = 1` gives the ordinary binomial expansion of `(x+y)^n`.
pub fn bivariate_hoggatt(d: Dim, n: u32) -> BivariatePolynomial {
    let n = n as usize;
    BivariatePolynomial::from_terms(
        hoggatt_row(d, n as u32)
            .into_iter()
            .enumerate()
            .map(|(k, c)| (n - k, k, c)),
    )
}

/// Correction term of the recurrence
/// `(x (+)_d y)^(n+1) = (x+y) (x (+)_d y)^(n) + R_n(x, y)`:
/// `R_n = sum_{k=1}^{n} <n k>_d / [n+1-k]_d * (sum_{i=1}^{d-1} [n+1-k]_{d-i} [k]_i) x^(n+1-k) y^k`.
pub fn hoggatt_recurrence_correction(d: Dim, n: u32) -> BivariatePolynomial {
    let row = hoggatt_row(d, n);
    let mut terms = Vec::new();
    for k in 1..=n {
        let j = n + 1 - k;
        let cross: BigInt = (1..d.get())
            .map(|i| {
                let lo = Dim::new(d.get() - i).expect("d - i >= 1");
                let hi = Dim::new(i).expect("i >= 1");
                sd_number(lo, j) * sd_number(hi, k)
            })
            .sum();
        let c = &row[k as usize] * Rational::new(cross, sd_number(d, j));
        terms.push((j as usize, k as usize, c));
    }
    BivariatePolynomial::from_terms(terms)
}

/// Formal translation `p_n(x (+)_d y) := sum_k <n k>_d p_k(x) y^(n-k)` of a
/// polynomial family at a fixed rational `y`.
///
/// `x (+)_d y` is not a pointwise sum of numbers; it only has meaning through
/// this expansion over a whole family `p_0, ..., p_n`.
pub fn hoggatt_translate(
    family: &[Polynomial],
    d: Dim,
    n: u32,
    y: &Rational,
) -> Result<Polynomial> {
    if family.len() <= n as usize {
        return Err(domain(format!(
            "translation of index {n} needs {} family members, got {}",
            n + 1,
            family.len()
        )));
    }
    let row = hoggatt_row(d, n);
    let mut y_pow = Rational::from_integer(1.into());
    let mut out = Polynomial::zero();
    // walk k downward so y^(n-k) grows with each step
    for k in (0..=n as usize).rev() {
        out = &out + &family[k].scale(&(&row[k] * &y_pow));
        y_pow *= y;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn dim(d: u32) -> Dim {
        Dim::new(d).unwrap()
    }

    fn poly(cs: &[Rational]) -> Polynomial {
        Polynomial::new(cs.to_vec())
    }

    #[test]
    fn touchard_rows() {
        assert_eq!(touchard(0), Polynomial::one());
        assert_eq!(touchard(2), poly(&[int(0), int(1), int(1)]));
        assert_eq!(touchard(3), poly(&[int(0), int(1), int(3), int(1)]));
    }

    #[test]
    fn kummer_examples() {
        assert_eq!(kummer_polynomial(dim(1)), Polynomial::one());
        assert_eq!(kummer_polynomial(dim(2)), poly(&[int(1), frac(1, 2)]));
        assert_eq!(
            kummer_polynomial(dim(3)),
            poly(&[int(1), int(1), frac(1, 6)])
        );
        assert_eq!(kummer_touchard_rhs(dim(1)).unwrap(), Polynomial::one());
        assert_eq!(
            kummer_touchard_rhs(dim(2)).unwrap(),
            poly(&[int(1), frac(1, 2)])
        );
        assert_eq!(
            kummer_touchard_rhs(dim(4)).unwrap(),
            kummer_polynomial(dim(4))
        );
    }

    #[test]
    fn bivariate_rows() {
        let b = bivariate_hoggatt(dim(1), 2);
        assert_eq!(
            (b.coeff(2, 0), b.coeff(1, 1), b.coeff(0, 2)),
            (int(1), int(2), int(1))
        );
        let b = bivariate_hoggatt(dim(2), 2);
        assert_eq!(b.coeff(1, 1), int(3));
        let b = bivariate_hoggatt(dim(2), 4);
        let row: Vec<_> = (0..=4).map(|k| b.coeff(4 - k, k)).collect();
        assert_eq!(row, [1, 10, 20, 10, 1].map(int));
        assert_eq!(
            bivariate_hoggatt(dim(3), 0),
            BivariatePolynomial::from_y_coeffs(vec![Polynomial::one()])
        );
    }

    #[test]
    fn translate_examples() {
        let monomials: Vec<_> = (0..=5).map(Polynomial::monomial).collect();
        let y = frac(-2, 3);
        assert_eq!(
            hoggatt_translate(&monomials, dim(3), 5, &y).unwrap(),
            bivariate_hoggatt(dim(3), 5).eval_y(&y)
        );
        // B_{2,0} = 1, B_{2,1}(x) = x - 1/3
        let family = vec![Polynomial::one(), poly(&[frac(-1, 3), int(1)])];
        assert_eq!(
            hoggatt_translate(&family, dim(2), 1, &int(1)).unwrap(),
            poly(&[frac(2, 3), int(1)])
        );
        assert_eq!(
            hoggatt_translate(&family, dim(2), 0, &int(9)).unwrap(),
            Polynomial::one()
        );
        assert!(hoggatt_translate(&family, dim(2), 2, &int(1)).is_err());
    }

    #[test]
    fn narayana_recurrence_correction() {
        // at d = 2 the correction is sum 2k / ((k+1)(n+2-k)) C(n,k) C(n+1,k) x^(n+1-k) y^k
        for n in 0..10u32 {
            let r = hoggatt_recurrence_correction(dim(2), n);
            for k in 1..=n {
                let expect = Rational::new(
                    BigInt::from(2 * k) * binomial(n, k) * binomial(n + 1, k),
                    BigInt::from((k + 1) * (n + 2 - k)),
                );
                assert_eq!(r.coeff((n + 1 - k) as usize, k as usize), expect);
            }
        }
    }
}
