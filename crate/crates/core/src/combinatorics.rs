//! Integer kernels over simplicial d-polytopic numbers.
//!
//! The n-th d-simplex number `[n]_d = C(n+d-1, d)` counts the points of a
//! d-dimensional triangular arrangement with side n. Everything built on top
//! of it (simplitorials, d-Hoggatt binomials, S_d-Pochhammer symbols) is
//! computed with exact big integers or big rationals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{domain, internal, Error, Result};
use crate::rational::Rational;

/// Simplex dimension `d >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dim(u32);

impl Dim {
    pub fn new(d: u32) -> Result<Self> {
        if d == 0 {
            return Err(domain("dimension d must be at least 1"));
        }
        Ok(Dim(d))
    }

    pub const fn get(self) -> u32 {
        self.0
    }
}

impl TryFrom<u32> for Dim {
    type Error = Error;

    fn try_from(d: u32) -> Result<Self> {
        Dim::new(d)
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn factorial(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Ordinary binomial coefficient; zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `a (a+1) ... (a+n-1)`, with the empty product equal to 1.
pub fn rising_factorial(a: i64, n: u32) -> BigInt {
    (0..n as i64).fold(BigInt::one(), |acc, i| acc * (a + i))
}

/// `[n]_d = C(n+d-1, d)`.
pub fn sd_number(d: Dim, n: u32) -> BigInt {
    if n == 0 {
        return BigInt::zero();
    }
    binomial(n + d.get() - 1, d.get())
}

/// `[n]_d` extended to `d = 0` by `[n]_0 = 1`, as needed by the dimension convolution.
pub fn sd_number_or_unit(d: u32, n: u32) -> BigInt {
    match Dim::new(d) {
        Ok(d) => sd_number(d, n),
        Err(_) => BigInt::one(),
    }
}

/// `[n]_d` as `sum_{k<d} C(d-1,k) C(n,k+1)`.
pub fn sd_number_via_binomial_sum(d: Dim, n: u32) -> BigInt {
    let d = d.get();
    (0..d)
        .map(|k| binomial(d - 1, k) * binomial(n, k + 1))
        .sum()
}

/// `[n]_d` as `(1/d!) sum_k c(d,k) n^k` with unsigned Stirling numbers of the first kind.
///
/// The upper Stirling index is the dimension: this is the expansion of the
/// rising factorial `n^(d)`. A nonzero remainder means the Stirling
/// convention drifted.
pub fn sd_number_via_stirling(d: Dim, n: u32) -> Result<BigInt> {
    let row = stirling1_row(d.get());
    let n_big = BigInt::from(n);
    let mut power = BigInt::one();
    let mut total = BigInt::zero();
    for c in &row {
        total += c * &power;
        power *= &n_big;
    }
    let (q, r) = total.div_rem(&factorial(d.get()));
    if !r.is_zero() {
        return Err(internal(format!(
            "Stirling expansion of [{n}]_{d} is not divisible by {d}!"
        )));
    }
    Ok(q)
}

/// Simplitorial `[n]_d! = [1]_d [2]_d ... [n]_d`.
pub fn sd_factorial(d: Dim, n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * sd_number(d, k))
}

/// `[0]_d!, [1]_d!, ..., [n]_d!`.
pub fn sd_factorials(d: Dim, n: u32) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut acc = BigInt::one();
    out.push(acc.clone());
    for k in 1..=n {
        acc *= sd_number(d, k);
        out.push(acc.clone());
    }
    out
}

fn check_k(n: u32, k: u32) -> Result<()> {
    if k > n {
        return Err(domain(format!("need 0 <= k <= n, got n={n}, k={k}")));
    }
    Ok(())
}

/// d-Hoggatt binomial `[n]_d! / ([k]_d! [n-k]_d!)`.
///
/// Returned as a rational: integrality is observed for every tested row but
/// is not assumed.
pub fn hoggatt_binomial(d: Dim, n: u32, k: u32) -> Result<Rational> {
    check_k(n, k)?;
    Ok(Rational::new(
        sd_factorial(d, n),
        sd_factorial(d, k) * sd_factorial(d, n - k),
    ))
}

/// The row `<n 0>_d, ..., <n n>_d` from a single pass over simplitorials.
pub fn hoggatt_row(d: Dim, n: u32) -> Vec<Rational> {
    let facts = sd_factorials(d, n);
    (0..=n as usize)
        .map(|k| {
            Rational::new(
                facts[n as usize].clone(),
                &facts[k] * &facts[n as usize - k],
            )
        })
        .collect()
}

/// d-Hoggatt binomial via `prod_{i<d} i! (n+i)! / ((k+i)! (n-k+i)!)`.
pub fn hoggatt_binomial_product_form(d: Dim, n: u32, k: u32) -> Result<Rational> {
    check_k(n, k)?;
    let mut acc = Rational::one();
    for i in 0..d.get() {
        acc *= Rational::new(
            factorial(i) * factorial(n + i),
            factorial(k + i) * factorial(n - k + i),
        );
    }
    Ok(acc)
}

/// S_d-Pochhammer `(a)_{d,n} = [a]_d [a+1]_d ... [a+n-1]_d` for integer base `a >= 1`.
pub fn sd_pochhammer(d: Dim, a: u32, n: u32) -> Result<BigInt> {
    if a == 0 {
        return Err(domain("S_d-Pochhammer base must be a positive integer"));
    }
    Ok((0..n).fold(BigInt::one(), |acc, i| acc * sd_number(d, a + i)))
}

/// Row `c(n, 0..=n)` of unsigned Stirling numbers of the first kind.
pub fn stirling1_row(n: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); m as usize + 1];
        for k in 0..=m as usize {
            if k >= 1 {
                next[k] += &row[k - 1];
            }
            if k < row.len() {
                next[k] += &row[k] * (m - 1);
            }
        }
        row = next;
    }
    row
}

/// Row `S(n, 0..=n)` of Stirling numbers of the second kind.
pub fn stirling2_row(n: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); m as usize + 1];
        for k in 1..=m as usize {
            next[k] += &row[k - 1];
            if k < row.len() {
                next[k] += &row[k] * k;
            }
        }
        row = next;
    }
    row
}

pub fn stirling1_unsigned(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    stirling1_row(n).swap_remove(k as usize)
}

pub fn stirling2(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    stirling2_row(n).swap_remove(k as usize)
}

/// Factor `f(d;n,k)` of the S_d-Pascal rule
/// `<n+1 k>_d = f(d;n,k) <n k>_d + <n k-1>_d`, valid for `d >= 2`, `1 <= k <= n`.
pub fn pascal_factor(d: Dim, n: u32, k: u32) -> Result<Rational> {
    if d.get() < 2 {
        return Err(domain("the S_d-Pascal rule needs d >= 2"));
    }
    if k == 0 || k > n {
        return Err(domain(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    let j = n + 1 - k;
    let mut cross = BigInt::zero();
    for i in 1..d.get() {
        let lo = Dim::new(d.get() - i)?;
        let hi = Dim::new(i)?;
        cross += sd_number(lo, j) * sd_number(hi, k);
    }
    Ok(Rational::one() + Rational::new(cross, sd_number(d, j)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn dim(d: u32) -> Dim {
        Dim::new(d).unwrap()
    }

    #[test]
    fn zero_dimension_rejected() {
        assert!(matches!(Dim::new(0), Err(Error::Domain(_))));
        assert!(Dim::try_from(3u32).is_ok());
    }

    #[test]
    fn figurate_lists() {
        let tri: Vec<_> = (0..6).map(|n| sd_number(dim(2), n)).collect();
        assert_eq!(tri, [0, 1, 3, 6, 10, 15].map(BigInt::from));
        assert_eq!(sd_number(dim(3), 5), BigInt::from(35));
        assert_eq!(sd_number(dim(5), 0), BigInt::zero());
        assert_eq!(sd_number(dim(1), 7), BigInt::from(7));
        let pent: Vec<_> = (0..11).map(|n| sd_number(dim(4), n)).collect();
        assert_eq!(
            pent,
            [0, 1, 5, 15, 35, 70, 126, 210, 330, 495, 715].map(BigInt::from)
        );
        let hex: Vec<_> = (0..10).map(|n| sd_number(dim(5), n)).collect();
        assert_eq!(
            hex,
            [0, 1, 6, 21, 56, 126, 252, 462, 792, 1287].map(BigInt::from)
        );
    }

    #[test]
    fn alternative_representations() {
        assert_eq!(sd_number_via_binomial_sum(dim(2), 4), BigInt::from(10));
        assert_eq!(sd_number_via_binomial_sum(dim(4), 2), BigInt::from(5));
        assert_eq!(sd_number_via_binomial_sum(dim(3), 0), BigInt::zero());
        assert_eq!(sd_number_via_stirling(dim(2), 3).unwrap(), BigInt::from(6));
        assert_eq!(sd_number_via_stirling(dim(1), 9).unwrap(), BigInt::from(9));
        assert_eq!(sd_number_via_stirling(dim(5), 4).unwrap(), BigInt::from(56));
    }

    #[test]
    fn simplitorials() {
        assert_eq!(sd_factorial(dim(2), 4), BigInt::from(180));
        assert_eq!(sd_factorial(dim(3), 3), BigInt::from(40));
        assert_eq!(sd_factorial(dim(6), 0), BigInt::one());
        assert_eq!(
            sd_factorials(dim(2), 4),
            [1, 1, 3, 18, 180].map(BigInt::from).to_vec()
        );
    }

    #[test]
    fn hoggatt_values() {
        assert_eq!(hoggatt_binomial(dim(2), 4, 2).unwrap(), int(20));
        assert_eq!(hoggatt_binomial(dim(3), 6, 3).unwrap(), int(980));
        assert_eq!(
            hoggatt_binomial_product_form(dim(3), 6, 3).unwrap(),
            int(980)
        );
        assert_eq!(hoggatt_binomial(dim(4), 7, 0).unwrap(), int(1));
        assert_eq!(hoggatt_binomial(dim(4), 7, 7).unwrap(), int(1));
        assert!(matches!(
            hoggatt_binomial(dim(2), 3, 4),
            Err(Error::Domain(_))
        ));
        assert_eq!(
            hoggatt_row(dim(2), 4),
            vec![int(1), int(10), int(20), int(10), int(1)]
        );
    }

    #[test]
    fn pochhammer() {
        assert_eq!(sd_pochhammer(dim(2), 3, 2).unwrap(), BigInt::from(60));
        assert_eq!(
            sd_pochhammer(dim(3), 1, 5).unwrap(),
            sd_factorial(dim(3), 5)
        );
        assert_eq!(sd_pochhammer(dim(3), 4, 0).unwrap(), BigInt::one());
        assert!(sd_pochhammer(dim(3), 0, 2).is_err());
    }

    #[test]
    fn stirling_values() {
        // coefficient of x^2 in x(x+1)(x+2)(x+3) = x^4 + 6x^3 + 11x^2 + 6x
        assert_eq!(stirling1_unsigned(4, 2), BigInt::from(11));
        assert_eq!(
            stirling1_row(4),
            [0, 6, 11, 6, 1].map(BigInt::from).to_vec()
        );
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(stirling1_unsigned(7, 7), BigInt::one());
        assert_eq!(stirling2(0, 0), BigInt::one());
        assert_eq!(stirling2(3, 5), BigInt::zero());
    }

    #[test]
    fn pascal_values() {
        assert_eq!(pascal_factor(dim(2), 4, 2).unwrap(), int(2));
        assert_eq!(pascal_factor(dim(3), 3, 1).unwrap(), frac(19, 10));
        for n in 1..10 {
            for k in 1..=n {
                assert_eq!(
                    pascal_factor(dim(2), n, k).unwrap(),
                    frac((n + 2 + k).into(), (n + 2 - k).into())
                );
            }
        }
        assert!(pascal_factor(dim(1), 3, 1).is_err());
        assert!(pascal_factor(dim(3), 3, 0).is_err());
        assert!(pascal_factor(dim(3), 3, 4).is_err());
    }

    #[test]
    fn rising() {
        assert_eq!(rising_factorial(3, 2), BigInt::from(12));
        assert_eq!(rising_factorial(1, 6), factorial(6));
        assert_eq!(rising_factorial(-2, 3), BigInt::zero());
        // d^(n) = (n+d-1)!/(d-1)!
        assert_eq!(rising_factorial(4, 5), factorial(8) / factorial(3));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }
}
