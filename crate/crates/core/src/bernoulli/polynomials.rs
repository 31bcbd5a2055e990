use crate::combinatorics::{hoggatt_row, Dim};
use crate::error::{domain, Result};
use crate::polynomials::Polynomial;
use crate::rational::Rational;

use super::numbers::{bernoulli_numbers_series, BernoulliTable};

/// `B_{d,0}(m;x), ..., B_{d,N}(m;x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliPolynomialFamily {
    pub d: Dim,
    pub m: u32,
    pub polynomials: Vec<Polynomial>,
}

impl BernoulliPolynomialFamily {
    /// `B_{d,n}(m;x) = sum_k <n k>_d B_{d,k}(m) x^(n-k)`.
    pub fn from_table(table: &BernoulliTable) -> Self {
        let polynomials = (0..table.values.len())
            .map(|n| {
                let row = hoggatt_row(table.d, n as u32);
                // coefficient of x^(n-k) is <n k> B_k
                let coeffs: Vec<Rational> = (0..=n)
                    .map(|j| &row[n - j] * &table.values[n - j])
                    .collect();
                Polynomial::new(coeffs)
            })
            .collect();
        BernoulliPolynomialFamily {
            d: table.d,
            m: table.m,
            polynomials,
        }
    }

    pub fn get(&self, n: usize) -> Option<&Polynomial> {
        self.polynomials.get(n)
    }

    pub fn as_slice(&self) -> &[Polynomial] {
        &self.polynomials
    }
}

/// S_d-hypergeometric Bernoulli polynomials up to degree `N`, built on the
/// series-inversion numbers.
pub fn bernoulli_polynomials(d: Dim, m: u32, order: usize) -> Result<BernoulliPolynomialFamily> {
    if m == 0 {
        return Err(domain("hypergeometric order m must be at least 1"));
    }
    let table = bernoulli_numbers_series(d, m, order)?;
    Ok(BernoulliPolynomialFamily::from_table(&table))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::sd_number;
    use crate::rational::{frac, int};

    fn dim(d: u32) -> Dim {
        Dim::new(d).unwrap()
    }

    #[test]
    fn low_degree_members() {
        let fam = bernoulli_polynomials(dim(2), 1, 2).unwrap();
        assert_eq!(fam.polynomials[0], Polynomial::one());
        assert_eq!(
            fam.polynomials[1],
            Polynomial::new(vec![frac(-1, 3), int(1)])
        );
        assert_eq!(
            fam.polynomials[2],
            Polynomial::new(vec![frac(1, 6), int(-1), int(1)])
        );
        for d in 1..=5 {
            for m in 1..=3 {
                let fam = bernoulli_polynomials(dim(d), m, 1).unwrap();
                let b1 = -Rational::new(1.into(), sd_number(dim(d), m + 1));
                assert_eq!(fam.polynomials[1], Polynomial::new(vec![b1, int(1)]));
            }
        }
    }

    #[test]
    fn monic_with_number_constant_term() {
        for d in 1..=4 {
            for m in 1..=3 {
                let table = bernoulli_numbers_series(dim(d), m, 10).unwrap();
                let fam = BernoulliPolynomialFamily::from_table(&table);
                for (n, p) in fam.polynomials.iter().enumerate() {
                    assert_eq!(p.degree(), Some(n));
                    assert_eq!(p.leading_coeff(), Some(&int(1)));
                    assert_eq!(p.eval(&int(0)), table.values[n]);
                }
            }
        }
    }
}
