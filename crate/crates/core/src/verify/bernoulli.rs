//! The I1..I10 Bernoulli identity catalogue.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::calculus::dims;
use super::{sample_points, IdentityReport, VerifyRanges};
use crate::bernoulli::{
    bernoulli_numbers_composition, bernoulli_numbers_series, plain_bernoulli_composition,
    plain_bernoulli_numbers, BernoulliPolynomialFamily, BernoulliTable, COMPOSITION_CAP,
};
use crate::combinatorics::{hoggatt_row, sd_factorials, sd_number, sd_pochhammer, Dim};
use crate::error::Result;
use crate::polynomials::{hoggatt_translate, sd_derivative_operator_form, Polynomial};
use crate::rational::Rational;
use crate::series::{exp_d_series, one_sigma_one_tail};

fn big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

struct Setup {
    d: Dim,
    m: u32,
    table: BernoulliTable,
    family: BernoulliPolynomialFamily,
}

fn setups(r: &VerifyRanges, only_plain: bool) -> Result<Vec<Setup>> {
    let ms: Vec<u32> = if only_plain {
        vec![1]
    } else {
        r.m.clone().collect()
    };
    let mut out = Vec::new();
    for d in dims(r) {
        for &m in &ms {
            let table = bernoulli_numbers_series(d, m, r.n_max as usize)?;
            let family = BernoulliPolynomialFamily::from_table(&table);
            out.push(Setup {
                d,
                m,
                table,
                family,
            });
        }
    }
    Ok(out)
}

fn report(id: &str, s: &Setup, n: u32) -> IdentityReport {
    IdentityReport::new(id, &[("d", s.d.get()), ("m", s.m), ("n", n)])
}

/// `sum_{k=0}^{upto} <n k>_d p_{n-k}` over a family.
fn hoggatt_partial(row: &[Rational], family: &[Polynomial], n: usize, upto: usize) -> Polynomial {
    (0..=upto.min(n))
        .map(|k| family[n - k].scale(&row[k]))
        .sum()
}

/// I1
pub(super) fn derivative(r: &VerifyRanges) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    for s in setups(r, false)? {
        for n in 1..=r.n_max {
            let mut rep = report("bernoulli-derivative", &s, n);
            let fam = &s.family.polynomials;
            let lhs = sd_derivative_operator_form(&fam[n as usize], s.d);
            rep.expect_eq(
                "derivative",
                &lhs,
                &fam[n as usize - 1].scale(&big(sd_number(s.d, n))),
            );
            out.push(rep);
        }
    }
    Ok(out)
}

/// I2: the translated family against `exp_d(xt) exp_d(yt) / 1σ1(1; m+1; t)`
/// evaluated at fixed rational points.
pub(super) fn translation(r: &VerifyRanges) -> Result<Vec<IdentityReport>> {
    let order = r.n_max as usize;
    let mut out = Vec::new();
    for s in setups(r, false)? {
        let inv = one_sigma_one_tail(s.d, s.m, order)?.inverse()?;
        let exp = exp_d_series(s.d, order);
        let facts = sd_factorials(s.d, r.n_max);
        let mut gfs = Vec::new();
        for (x, y) in sample_points() {
            let gf = exp
                .scale_argument(&x)
                .mul(&exp.scale_argument(&y))?
                .mul(&inv)?;
            gfs.push((x, y, gf));
        }
        for n in 0..=r.n_max {
            let mut rep = report("translation", &s, n);
            for (x, y, gf) in &gfs {
                let shifted = hoggatt_translate(&s.family.polynomials, s.d, n, y)?;
                let rhs = &gf.coeffs()[n as usize] * big(facts[n as usize].clone());
                rep.expect_eq(&format!("x={x}, y={y}"), &shifted.eval(x), &rhs);
            }
            out.push(rep);
        }
    }
    Ok(out)
}

/// I3
pub(super) fn shift_split(r: &VerifyRanges) -> Result<Vec<IdentityReport>> {
    let one = Rational::one();
    let mut out = Vec::new();
    for s in setups(r, false)? {
        let fam = &s.family.polynomials;
        for n in 0..=r.n_max {
            let mut rep = report("shift-split", &s, n);
            let row = hoggatt_row(s.d, n);
            let shifted = hoggatt_translate(fam, s.d, n, &one)?;
            let (n, m) = (n as usize, s.m as usize);
            if n < m {
                rep.expect_eq("n < m", &shifted, &hoggatt_partial(&row, fam, n, n));
            } else {
                let defect = &shifted - &hoggatt_partial(&row, fam, n, m - 1);
                rep.expect_eq("n >= m", &defect, &Polynomial::term(row[m].clone(), n - m));
            }
            out.push(rep);
        }
    }
    Ok(out)
}

/// I4
pub(super) fn value_at_one(r: &VerifyRanges) -> Result<Vec<IdentityReport>> {
    let one = Rational::one();
    let mut out = Vec::new();
    for s in setups(r, false)? {
        let b = &s.table.values;
        for n in 0..=r.n_max {
            let mut rep = report("value-at-one", &s, n);
            let row = hoggatt_row(s.d, n);
            let (n, m) = (n as usize, s.m as usize);
            let sum_to =
                |upto: usize| -> Rational { (0..=upto).map(|k| &row[k] * &b[n - k]).sum() };
            let expect = match n.cmp(&m) {
                std::cmp::Ordering::Less => sum_to(n),
                std::cmp::Ordering::Equal => sum_to(n - 1) + Rational::one(),
                std::cmp::Ordering::Greater => sum_to(m - 1),
            };
            rep.expect_eq("B(m;1)", &s.family.polynomials[n].eval(&one), &expect);
            out.push(rep);
        }
    }
    Ok(out)
}

/// I5 with the `[n-k]_d!` denominator, plus the delta corollary at `x = 0`.
pub(super) fn inversion(r: &VerifyRanges) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    for s in setups(r, false)? {
        let facts = sd_factorials(s.d, r.n_max);
        let poch = (0..=r.n_max)
            .map(|k| sd_pochhammer(s.d, s.m + 1, k))
            .collect::<Result<Vec<_>>>()?;
        for n in 0..=r.n_max {
            let mut rep = report("inversion", &s, n);
            let n = n as usize;
            let weight = |k: usize| Rational::new(facts[n].clone(), &poch[k] * &facts[n - k]);
            let poly: Polynomial = (0..=n)
                .map(|k| s.family.polynomials[n - k].scale(&weight(k)))
                .sum();
            rep.expect_eq("inversion", &poly, &Polynomial::monomial(n));
            let delta: Rational = (0..=n).map(|k| weight(k) * &s.table.values[n - k]).sum();
            let expect = if n == 0 {
                Rational::one()
            } else {
                Rational::zero()
            };
            rep.expect_eq("delta", &delta, &expect);
            out.push(rep);
        }
    }
    Ok(out)
}

/// I6 (m = 1). The `x = 0` corollary `B(1) = B(0)` is only checked for `n >= 2`:
/// at `n = 1` the difference is `[1]_d x^0 = 1`.
pub(super) fn difference(r: &VerifyRanges) -> Result<Vec<IdentityReport>> {
    let one = Rational::one();
    let mut out = Vec::new();
    for s in setups(r, true)? {
        let fam = &s.family.polynomials;
        for n in 1..=r.n_max {
            let mut rep = report("difference", &s, n);
            let diff = &hoggatt_translate(fam, s.d, n, &one)? - &fam[n as usize];
            rep.expect_eq(
                "difference",
                &diff,
                &Polynomial::term(big(sd_number(s.d, n)), n as usize - 1),
            );
            if n >= 2 {
                rep.expect_eq(
                    "B(1) = B",
                    &fam[n as usize].eval(&one),
                    &s.table.values[n as usize],
                );
            }
            out.push(rep);
        }
    }
    Ok(out)
}

/// I7 (m = 1): `x^n = sum_k <n k>_d B_{d,n-k}(x) / [k+1]_d`.
pub(super) fn plain_inversion(r: &VerifyRanges) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    for s in setups(r, true)? {
        for n in 0..=r.n_max {
            let mut rep = report("plain-inversion", &s, n);
            let row = hoggatt_row(s.d, n);
            let n = n as usize;
            let poly: Polynomial = (0..=n)
                .map(|k| {
                    let w = &row[k] / big(sd_number(s.d, k as u32 + 1));
                    s.family.polynomials[n - k].scale(&w)
                })
                .sum();
            rep.expect_eq("plain inversion", &poly, &Polynomial::monomial(n));
            out.push(rep);
        }
    }
    Ok(out)
}

/// I8
pub(super) fn method_agreement(r: &VerifyRanges) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    for s in setups(r, false)? {
        for n in 0..=r.n_max.min(COMPOSITION_CAP) {
            let mut rep = report("method-agreement", &s, n);
            if let Some(c) =
                rep.expect_ok("composition", bernoulli_numbers_composition(s.d, s.m, n))
            {
                rep.expect_eq("series vs composition", &s.table.values[n as usize], &c);
            }
            out.push(rep);
        }
    }
    Ok(out)
}

/// I9
pub(super) fn m_reduction(r: &VerifyRanges) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    for s in setups(r, true)? {
        let plain = plain_bernoulli_numbers(s.d, r.n_max as usize)?;
        for n in 0..=r.n_max {
            let mut rep = report("m-reduction", &s, n);
            let hyper = &s.table.values[n as usize];
            rep.expect_eq(
                "hypergeometric m=1 vs t/(exp_d(t)-1)",
                hyper,
                &plain[n as usize],
            );
            if n <= COMPOSITION_CAP {
                if let Some(c) =
                    rep.expect_ok("plain composition", plain_bernoulli_composition(s.d, n))
                {
                    rep.expect_eq("plain composition", hyper, &c);
                }
            }
            out.push(rep);
        }
    }
    Ok(out)
}

/// I10: `B_{d,1} = -1/[2]_d`, `B_{d,2} = ([3]_d - [2]_d) / ([2]_d [3]_d)`.
pub(super) fn small_index(r: &VerifyRanges) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    for d in dims(r) {
        let b = plain_bernoulli_numbers(d, 2)?;
        let two = big(sd_number(d, 2));
        let three = big(sd_number(d, 3));
        let mut rep = IdentityReport::new("small-index", &[("d", d.get()), ("m", 1), ("n", 1)]);
        rep.expect_eq("B_1", &b[1], &-two.recip());
        out.push(rep);
        let mut rep = IdentityReport::new("small-index", &[("d", d.get()), ("m", 1), ("n", 2)]);
        rep.expect_eq("B_2", &b[2], &((&three - &two) / (&two * &three)));
        out.push(rep);
    }
    Ok(out)
}
