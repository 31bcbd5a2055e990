//! Catalogue of exact identity checks over the S_d-calculus.
//!
//! Every check produces one [`IdentityReport`] per parameter point, in
//! parameter order, so runs are deterministic and diffable.

mod bernoulli;
mod calculus;
mod report;

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

pub use report::IdentityReport;

use crate::error::{domain, Error, Result};
use crate::rational::{frac, Rational};

pub const MAX_DIM: u32 = 16;
pub const MAX_M: u32 = 16;
pub const MAX_N: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    SdRepresentations,
    Simplitorial,
    HoggattPascal,
    Convolution,
    NarayanaCross,
    DerivativeEquivalence,
    ProductRule,
    KummerTouchard,
    BivariateDerivative,
    BivariateRecurrence,
    ExpEigenfunction,
    ExpHypergeometric,
    ProductLaw,
    SigmaTail,
    /// I1: `D B_{d,n}(m;x) = [n]_d B_{d,n-1}(m;x)`.
    BernoulliDerivative,
    /// I2: translation formula against the generating function.
    Translation,
    /// I3: `B_{d,n}(m; x (+)_d 1)` split at `n = m`.
    ShiftSplit,
    /// I4: three-case values at `x = 1`.
    ValueAtOne,
    /// I5: inversion formula and its delta corollary.
    Inversion,
    /// I6: plain difference equation.
    Difference,
    /// I7: plain inversion formula.
    PlainInversion,
    /// I8: series inversion equals the composition sum.
    MethodAgreement,
    /// I9: the `m = 1` hypergeometric numbers equal the plain ones.
    MReduction,
    /// I10: closed forms of `B_{d,1}` and `B_{d,2}`.
    SmallIndex,
}

impl Identity {
    pub const ALL: [Identity; 24] = [
        Identity::SdRepresentations,
        Identity::Simplitorial,
        Identity::HoggattPascal,
        Identity::Convolution,
        Identity::NarayanaCross,
        Identity::DerivativeEquivalence,
        Identity::ProductRule,
        Identity::KummerTouchard,
        Identity::BivariateDerivative,
        Identity::BivariateRecurrence,
        Identity::ExpEigenfunction,
        Identity::ExpHypergeometric,
        Identity::ProductLaw,
        Identity::SigmaTail,
        Identity::BernoulliDerivative,
        Identity::Translation,
        Identity::ShiftSplit,
        Identity::ValueAtOne,
        Identity::Inversion,
        Identity::Difference,
        Identity::PlainInversion,
        Identity::MethodAgreement,
        Identity::MReduction,
        Identity::SmallIndex,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Identity::SdRepresentations => "sd-representations",
            Identity::Simplitorial => "simplitorial",
            Identity::HoggattPascal => "hoggatt-pascal",
            Identity::Convolution => "convolution",
            Identity::NarayanaCross => "narayana-cross",
            Identity::DerivativeEquivalence => "derivative-equivalence",
            Identity::ProductRule => "product-rule",
            Identity::KummerTouchard => "kummer-touchard",
            Identity::BivariateDerivative => "bivariate-derivative",
            Identity::BivariateRecurrence => "bivariate-recurrence",
            Identity::ExpEigenfunction => "exp-eigenfunction",
            Identity::ExpHypergeometric => "exp-hypergeometric",
            Identity::ProductLaw => "product-law",
            Identity::SigmaTail => "sigma-tail",
            Identity::BernoulliDerivative => "bernoulli-derivative",
            Identity::Translation => "translation",
            Identity::ShiftSplit => "shift-split",
            Identity::ValueAtOne => "value-at-one",
            Identity::Inversion => "inversion",
            Identity::Difference => "difference",
            Identity::PlainInversion => "plain-inversion",
            Identity::MethodAgreement => "method-agreement",
            Identity::MReduction => "m-reduction",
            Identity::SmallIndex => "small-index",
        }
    }

    /// Short catalogue label (`I1` .. `I10`) for the Bernoulli identities.
    pub fn label(self) -> Option<&'static str> {
        Some(match self {
            Identity::BernoulliDerivative => "I1",
            Identity::Translation => "I2",
            Identity::ShiftSplit => "I3",
            Identity::ValueAtOne => "I4",
            Identity::Inversion => "I5",
            Identity::Difference => "I6",
            Identity::PlainInversion => "I7",
            Identity::MethodAgreement => "I8",
            Identity::MReduction => "I9",
            Identity::SmallIndex => "I10",
            _ => return None,
        })
    }

    pub fn bernoulli_catalogue() -> impl Iterator<Item = Identity> {
        Self::ALL.into_iter().filter(|i| i.label().is_some())
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        Identity::ALL
            .into_iter()
            .find(|i| {
                i.id().eq_ignore_ascii_case(s)
                    || i.label().is_some_and(|l| l.eq_ignore_ascii_case(s))
            })
            .ok_or_else(|| domain(format!("unknown identity {s:?}")))
    }
}

/// Parameter ranges for a verification run. Each identity uses the subset it needs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyRanges {
    pub d: RangeInclusive<u32>,
    pub m: RangeInclusive<u32>,
    pub n_max: u32,
}

impl Default for VerifyRanges {
    fn default() -> Self {
        VerifyRanges {
            d: 1..=4,
            m: 1..=3,
            n_max: 10,
        }
    }
}

impl VerifyRanges {
    pub fn validate(&self) -> Result<()> {
        if self.d.is_empty() || *self.d.start() == 0 {
            return Err(domain(
                "dimension range must be non-empty and start at 1 or above",
            ));
        }
        if self.m.is_empty() || *self.m.start() == 0 {
            return Err(domain("m range must be non-empty and start at 1 or above"));
        }
        if *self.d.end() > MAX_DIM || *self.m.end() > MAX_M || self.n_max > MAX_N {
            return Err(Error::Resource(format!(
                "verification ranges are capped at d <= {MAX_DIM}, m <= {MAX_M}, n <= {MAX_N}"
            )));
        }
        Ok(())
    }
}

/// Runs one identity over the given ranges.
pub fn verify_identity(identity: Identity, ranges: &VerifyRanges) -> Result<Vec<IdentityReport>> {
    ranges.validate()?;
    match identity {
        Identity::SdRepresentations => calculus::sd_representations(ranges),
        Identity::Simplitorial => calculus::simplitorial(ranges),
        Identity::HoggattPascal => calculus::hoggatt_pascal(ranges),
        Identity::Convolution => calculus::convolution(ranges),
        Identity::NarayanaCross => calculus::narayana_cross(ranges),
        Identity::DerivativeEquivalence => calculus::derivative_equivalence(ranges),
        Identity::ProductRule => calculus::product_rule(ranges),
        Identity::KummerTouchard => calculus::kummer_touchard(ranges),
        Identity::BivariateDerivative => calculus::bivariate_derivative(ranges),
        Identity::BivariateRecurrence => calculus::bivariate_recurrence(ranges),
        Identity::ExpEigenfunction => calculus::exp_eigenfunction(ranges),
        Identity::ExpHypergeometric => calculus::exp_hypergeometric(ranges),
        Identity::ProductLaw => calculus::product_law(ranges),
        Identity::SigmaTail => calculus::sigma_tail(ranges),
        Identity::BernoulliDerivative => bernoulli::derivative(ranges),
        Identity::Translation => bernoulli::translation(ranges),
        Identity::ShiftSplit => bernoulli::shift_split(ranges),
        Identity::ValueAtOne => bernoulli::value_at_one(ranges),
        Identity::Inversion => bernoulli::inversion(ranges),
        Identity::Difference => bernoulli::difference(ranges),
        Identity::PlainInversion => bernoulli::plain_inversion(ranges),
        Identity::MethodAgreement => bernoulli::method_agreement(ranges),
        Identity::MReduction => bernoulli::m_reduction(ranges),
        Identity::SmallIndex => bernoulli::small_index(ranges),
    }
}

/// Runs every identity in catalogue order.
pub fn verify_all(ranges: &VerifyRanges) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    for id in Identity::ALL {
        out.extend(verify_identity(id, ranges)?);
    }
    Ok(out)
}

/// Fixed rational sample points used where an identity is checked pointwise.
pub(crate) fn sample_points() -> Vec<(Rational, Rational)> {
    vec![
        (frac(0, 1), frac(1, 1)),
        (frac(1, 1), frac(1, 1)),
        (frac(-1, 2), frac(3, 1)),
        (frac(2, 3), frac(-5, 7)),
        (frac(-7, 4), frac(-2, 9)),
        (frac(5, 2), frac(1, 3)),
    ]
}
