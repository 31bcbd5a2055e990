use crate::combinatorics::Dim;
use crate::error::{internal, Result};
use crate::rational::{frac, render, Rational};
use crate::verify::IdentityReport;

use super::numbers::{bernoulli_numbers_series, bernoulli_table_composition};

/// A published value of a plain S_d-Bernoulli number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PublishedEntry {
    pub d: u32,
    pub n: u32,
    pub numer: i64,
    pub denom: i64,
}

impl PublishedEntry {
    pub fn value(&self) -> Rational {
        frac(self.numer, self.denom)
    }
}

const fn entry(d: u32, n: u32, numer: i64, denom: i64) -> PublishedEntry {
    PublishedEntry { d, n, numer, denom }
}

/// Published first values of `B_{d,n}` for the triangular, tetrahedral,
/// pentachoron and hexateron cases, exactly as printed.
pub const PUBLISHED_TABLES: [PublishedEntry; 20] = [
    entry(2, 0, 1, 1),
    entry(2, 1, -1, 3),
    entry(2, 2, 1, 2),
    entry(2, 3, -1, 10),
    entry(2, 4, 2, 45),
    entry(3, 0, 1, 1),
    entry(3, 1, -1, 4),
    entry(3, 2, 3, 20),
    entry(3, 3, -7, 40),
    entry(3, 4, 97, 280),
    entry(4, 0, 1, 1),
    entry(4, 1, -1, 5),
    entry(4, 2, 2, 15),
    entry(4, 3, -8, 35),
    entry(4, 4, 2237, 210),
    entry(5, 0, 1, 1),
    entry(5, 1, -1, 6),
    entry(5, 2, 5, 42),
    entry(5, 3, -15, 56),
    entry(5, 4, 1755, 1334),
];

/// Compares computed `B_{d,n}` against [`PUBLISHED_TABLES`], one report per entry.
///
/// A mismatch is reported, not raised. Each computed value must agree between
/// series inversion and the composition sum; if not, that is an internal error.
pub fn audit_published_tables() -> Result<Vec<IdentityReport>> {
    let mut reports = Vec::with_capacity(PUBLISHED_TABLES.len());
    for d in 2..=5u32 {
        let dim = Dim::new(d)?;
        let series = bernoulli_numbers_series(dim, 1, 4)?;
        let comp = bernoulli_table_composition(dim, 1, 4)?;
        if series.values != comp.values {
            return Err(internal(format!(
                "series inversion and composition sum disagree for d={d}"
            )));
        }
        for e in PUBLISHED_TABLES.iter().filter(|e| e.d == d) {
            let computed = &series.values[e.n as usize];
            let published = e.value();
            let mut report = IdentityReport::new("table-audit", &[("d", d), ("n", e.n)]);
            if computed == &published {
                report.value = Some(render(computed));
            } else {
                report = report.fail(format!(
                    "computed {}, published {}",
                    render(computed),
                    render(&published)
                ));
                report.value = Some(render(computed));
            }
            reports.push(report);
        }
    }
    Ok(reports)
}
