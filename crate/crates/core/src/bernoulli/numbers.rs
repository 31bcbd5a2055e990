use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::combinatorics::{sd_factorial, sd_factorials, sd_pochhammer, Dim};
use crate::error::{domain, Error, Result};
use crate::rational::Rational;
use crate::series::{exp_d_series, one_sigma_one_tail, TruncatedSeries};

/// Largest index accepted by the composition-sum algorithm (`2^(n-1)` terms).
pub const COMPOSITION_CAP: u32 = 18;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    SeriesInversion,
    CompositionSum,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::SeriesInversion => "series-inversion",
            Method::CompositionSum => "composition-sum",
        })
    }
}

/// `B_{d,0}(m), ..., B_{d,N}(m)`; `m = 1` is the plain S_d-Bernoulli case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliTable {
    pub d: Dim,
    pub m: u32,
    pub method: Method,
    pub values: Vec<Rational>,
}

impl BernoulliTable {
    pub fn get(&self, n: usize) -> Option<&Rational> {
        self.values.get(n)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

fn check_m(m: u32) -> Result<()> {
    if m == 0 {
        return Err(domain("hypergeometric order m must be at least 1"));
    }
    Ok(())
}

/// Rescale plain series coefficients by `[n]_d!`.
fn normalize(d: Dim, s: &TruncatedSeries) -> Vec<Rational> {
    let facts = sd_factorials(d, s.order() as u32);
    s.coeffs()
        .iter()
        .zip(facts)
        .map(|(c, f)| c * Rational::from_integer(f))
        .collect()
}

/// `B_{d,n}(m) = [n]_d! [t^n] 1 / 1σ1(1; m+1; t)`, by exact series inversion.
pub fn bernoulli_numbers_series(d: Dim, m: u32, order: usize) -> Result<BernoulliTable> {
    check_m(m)?;
    let inv = one_sigma_one_tail(d, m, order)?.inverse()?;
    Ok(BernoulliTable {
        d,
        m,
        method: Method::SeriesInversion,
        values: normalize(d, &inv),
    })
}

/// Visits every composition of `n` (ordered positive parts), passing its parts.
fn for_each_composition(n: u32, mut visit: impl FnMut(&[u32])) {
    if n == 0 {
        return;
    }
    let mut parts = Vec::with_capacity(n as usize);
    // bit i of `cuts` set means a part boundary after position i + 1
    for cuts in 0u64..(1u64 << (n - 1)) {
        parts.clear();
        let mut len = 1;
        for i in 0..n - 1 {
            if cuts >> i & 1 == 1 {
                parts.push(len);
                len = 1;
            } else {
                len += 1;
            }
        }
        parts.push(len);
        visit(&parts);
    }
}

fn check_cap(n: u32) -> Result<()> {
    if n > COMPOSITION_CAP {
        return Err(Error::Resource(format!(
            "composition sum at n={n} exceeds the cap of {COMPOSITION_CAP} ({} terms); use the series-inversion method",
            1u64 << (n - 1)
        )));
    }
    Ok(())
}

/// Signed sum over compositions `k_1 + ... + k_i = n` of `(-1)^i [n]_d! / prod w(k_j)`.
fn composition_sum(d: Dim, n: u32, weights: &[BigInt]) -> Rational {
    if n == 0 {
        return Rational::one();
    }
    let mut total = Rational::zero();
    for_each_composition(n, |parts| {
        let den: BigInt = parts.iter().map(|&k| &weights[k as usize]).product();
        let term = Rational::new(BigInt::one(), den);
        if parts.len() % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    });
    total * Rational::from_integer(sd_factorial(d, n))
}

/// `B_{d,n}(m)` from the explicit sum over compositions of `n` with weights `(m+1)_{d,k}`.
///
/// Independent of series inversion; limited to `n <= COMPOSITION_CAP`.
pub fn bernoulli_numbers_composition(d: Dim, m: u32, n: u32) -> Result<Rational> {
    check_m(m)?;
    check_cap(n)?;
    let weights = (0..=n)
        .map(|k| sd_pochhammer(d, m + 1, k))
        .collect::<Result<Vec<_>>>()?;
    Ok(composition_sum(d, n, &weights))
}

pub fn bernoulli_table_composition(d: Dim, m: u32, order: usize) -> Result<BernoulliTable> {
    let values = (0..=order as u32)
        .map(|n| bernoulli_numbers_composition(d, m, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(BernoulliTable {
        d,
        m,
        method: Method::CompositionSum,
        values,
    })
}

/// Plain `B_{d,n}` from `t / (exp_d(t) - 1)`.
pub fn plain_bernoulli_numbers(d: Dim, order: usize) -> Result<Vec<Rational>> {
    let exp = exp_d_series(d, order + 1);
    let denom = exp.sub(&TruncatedSeries::one(order + 1))?.shift_down(1)?;
    Ok(normalize(d, &denom.inverse()?))
}

/// Plain `B_{d,n}` from compositions weighted by `[k+1]_d!`.
pub fn plain_bernoulli_composition(d: Dim, n: u32) -> Result<Rational> {
    check_cap(n)?;
    let facts = sd_factorials(d, n + 1);
    let weights: Vec<BigInt> = (0..=n as usize).map(|k| facts[k + 1].clone()).collect();
    Ok(composition_sum(d, n, &weights))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn dim(d: u32) -> Dim {
        Dim::new(d).unwrap()
    }

    fn fracs(v: &[(i64, i64)]) -> Vec<Rational> {
        v.iter().map(|&(p, q)| frac(p, q)).collect()
    }

    #[test]
    fn triangular_numbers() {
        let t = bernoulli_numbers_series(dim(2), 1, 4).unwrap();
        assert_eq!(
            t.values,
            fracs(&[(1, 1), (-1, 3), (1, 6), (-1, 10), (2, 45)])
        );
        assert_eq!(t.method, Method::SeriesInversion);
    }

    #[test]
    fn tetrahedral_numbers() {
        let t = bernoulli_numbers_series(dim(3), 1, 4).unwrap();
        assert_eq!(
            t.values,
            fracs(&[(1, 1), (-1, 4), (3, 20), (-7, 40), (97, 280)])
        );
    }

    #[test]
    fn hypergeometric_m2() {
        let t = bernoulli_numbers_series(dim(2), 2, 3).unwrap();
        assert_eq!(t.values, fracs(&[(1, 1), (-1, 6), (1, 30), (-1, 300)]));
    }

    #[test]
    fn composition_examples() {
        assert_eq!(
            bernoulli_numbers_composition(dim(3), 2, 0).unwrap(),
            frac(1, 1)
        );
        assert_eq!(
            bernoulli_numbers_composition(dim(2), 1, 2).unwrap(),
            frac(1, 6)
        );
        assert_eq!(
            bernoulli_numbers_composition(dim(4), 1, 3).unwrap(),
            frac(-8, 35)
        );
        assert_eq!(
            plain_bernoulli_composition(dim(4), 3).unwrap(),
            frac(-8, 35)
        );
        assert!(matches!(
            bernoulli_numbers_composition(dim(2), 1, COMPOSITION_CAP + 1),
            Err(Error::Resource(_))
        ));
        assert!(bernoulli_numbers_composition(dim(2), 0, 2).is_err());
    }

    #[test]
    fn composition_count() {
        let mut count = 0;
        let mut seen_sum_ok = true;
        for_each_composition(6, |p| {
            count += 1;
            seen_sum_ok &= p.iter().sum::<u32>() == 6 && p.iter().all(|&k| k >= 1);
        });
        assert_eq!(count, 32);
        assert!(seen_sum_ok);
    }

    #[test]
    fn plain_route_matches_hypergeometric_m1() {
        for d in 1..=5 {
            let plain = plain_bernoulli_numbers(dim(d), 8).unwrap();
            let hyper = bernoulli_numbers_series(dim(d), 1, 8).unwrap();
            assert_eq!(plain, hyper.values);
        }
    }

    #[test]
    fn classical_bernoulli_at_d1() {
        // d = 1 recovers t/(e^t - 1): 1, -1/2, 1/6, 0, -1/30, 0, 1/42
        let b = plain_bernoulli_numbers(dim(1), 6).unwrap();
        assert_eq!(
            b,
            fracs(&[(1, 1), (-1, 2), (1, 6), (0, 1), (-1, 30), (0, 1), (1, 42)])
        );
    }
}
