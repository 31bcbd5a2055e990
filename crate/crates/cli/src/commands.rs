use std::ops::RangeInclusive;

use sdcalc_core::bernoulli::{
    audit_published_tables, bernoulli_numbers_series, bernoulli_polynomials,
};
use sdcalc_core::combinatorics::{hoggatt_row, sd_number};
use sdcalc_core::rational::{render, render_decimal};
use sdcalc_core::series::exp_d_partial_sum;
use sdcalc_core::verify::{verify_all, verify_identity, Identity, IdentityReport, VerifyRanges};
use sdcalc_core::{Dim, Error, Rational};

use crate::output::{Field, Output, Record};

/// Row limits for table commands; verification has its own caps in the core crate.
const MAX_ROWS: u32 = 1000;
const MAX_BERNOULLI_N: u32 = 200;
const MAX_DIGITS: usize = 10_000;

pub struct Run {
    pub output: Output,
    pub exit: u8,
    pub summary: Option<String>,
}

impl Run {
    fn ok(output: Output) -> Self {
        Run {
            output,
            exit: 0,
            summary: None,
        }
    }
}

#[derive(Debug)]
pub struct CmdError(Error);

impl CmdError {
    /// Internal inconsistencies count as verification failures; everything else is a usage error.
    pub fn exit_code(&self) -> u8 {
        match self.0 {
            Error::Internal(_) => 1,
            _ => 2,
        }
    }
}

impl std::fmt::Display for CmdError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

impl From<Error> for CmdError {
    fn from(e: Error) -> Self {
        CmdError(e)
    }
}

type Result<T> = std::result::Result<T, CmdError>;

fn usage(msg: impl Into<String>) -> CmdError {
    CmdError(Error::Domain(msg.into()))
}

fn cap(name: &str, value: u32, max: u32) -> Result<()> {
    if value > max {
        return Err(CmdError(Error::Resource(format!(
            "{name} is capped at {max}, got {value}"
        ))));
    }
    Ok(())
}

fn digits(decimal: Option<usize>) -> Result<Option<usize>> {
    match decimal {
        Some(n) if n > MAX_DIGITS => Err(usage(format!("--decimal is capped at {MAX_DIGITS}"))),
        other => Ok(other),
    }
}

fn value_record(r: Record, v: &Rational, decimal: Option<usize>) -> Record {
    r.with("value", render(v))
        .with_opt("decimal", decimal.map(|k| render_decimal(v, k)))
}

pub fn numbers(d: u32, n_max: u32) -> Result<Run> {
    let dim = Dim::new(d)?;
    cap("--n-max", n_max, MAX_ROWS)?;
    let records = (0..=n_max)
        .map(|n| {
            Record::new()
                .with("d", d)
                .with("n", n)
                .with("value", sd_number(dim, n).to_string())
        })
        .collect();
    Ok(Run::ok(Output {
        command: "numbers",
        params: Record::new().with("d", d).with("n_max", n_max),
        records,
    }))
}

pub fn binomials(d: u32, n: u32) -> Result<Run> {
    let dim = Dim::new(d)?;
    cap("--n", n, MAX_ROWS)?;
    let records = hoggatt_row(dim, n)
        .iter()
        .zip(0u32..)
        .map(|(v, k)| {
            Record::new()
                .with("d", d)
                .with("n", n)
                .with("k", k)
                .with("value", render(v))
        })
        .collect();
    Ok(Run::ok(Output {
        command: "binomials",
        params: Record::new().with("d", d).with("n", n),
        records,
    }))
}

pub fn bernoulli(d: u32, m: u32, n_max: u32, poly: bool, decimal: Option<usize>) -> Result<Run> {
    let dim = Dim::new(d)?;
    cap("--n-max", n_max, MAX_BERNOULLI_N)?;
    let decimal = digits(decimal)?;
    let params = Record::new()
        .with("d", d)
        .with("m", m)
        .with("n_max", n_max)
        .with("poly", poly);
    let base = |n: u32| Record::new().with("d", d).with("m", m).with("n", n);
    let records = if poly {
        let family = bernoulli_polynomials(dim, m, n_max as usize)?;
        family
            .as_slice()
            .iter()
            .zip(0u32..)
            .map(|(p, n)| {
                base(n).with(
                    "coefficients",
                    Field::List(p.coeffs().iter().map(render).collect()),
                )
            })
            .collect()
    } else {
        let table = bernoulli_numbers_series(dim, m, n_max as usize)?;
        table
            .values
            .iter()
            .zip(0u32..)
            .map(|(v, n)| value_record(base(n), v, decimal))
            .collect()
    };
    Ok(Run::ok(Output {
        command: "bernoulli",
        params,
        records,
    }))
}

pub struct VerifyRequest {
    pub identity: Option<String>,
    pub all: bool,
    pub d: RangeInclusive<u32>,
    pub m: RangeInclusive<u32>,
    pub n_max: u32,
    pub audit_tables: bool,
    pub strict_paper: bool,
}

fn report_record(r: IdentityReport) -> Record {
    Record::new()
        .with("identity", r.identity)
        .with("params", Field::Params(r.params))
        .with("passed", r.passed)
        .with_opt("value", r.value)
        .with_opt("witness", r.witness)
}

/// Selection: `--identity X` runs X, `--all` (or `--identity all`) runs everything,
/// `--audit-tables` adds the audit. With no selector at all, everything plus the audit runs.
pub fn verify(req: &VerifyRequest) -> Result<Run> {
    let ranges = VerifyRanges {
        d: req.d.clone(),
        m: req.m.clone(),
        n_max: req.n_max,
    };
    let wants_all = req.all
        || req
            .identity
            .as_deref()
            .is_some_and(|s| s.eq_ignore_ascii_case("all"));
    let single = match req.identity.as_deref() {
        Some(s) if !s.eq_ignore_ascii_case("all") => Some(s.parse::<Identity>()?),
        _ => None,
    };
    if wants_all && single.is_some() {
        return Err(usage(
            "--all and a specific --identity are mutually exclusive",
        ));
    }
    let nothing_selected = !wants_all && single.is_none() && !req.audit_tables;
    let run_audit = req.audit_tables || nothing_selected;

    let checks = if let Some(id) = single {
        verify_identity(id, &ranges)?
    } else if wants_all || nothing_selected {
        verify_all(&ranges)?
    } else {
        Vec::new()
    };
    let audit = if run_audit {
        audit_published_tables()?
    } else {
        Vec::new()
    };

    let failed = checks.iter().filter(|r| !r.passed).count();
    let mismatches = audit.iter().filter(|r| !r.passed).count();
    let exit = u8::from(failed > 0 || (req.strict_paper && mismatches > 0));
    let mut summary = format!("{} checks, {failed} failed", checks.len());
    if run_audit {
        summary.push_str(&format!(
            "; table audit: {} entries, {mismatches} mismatches",
            audit.len()
        ));
        if mismatches > 0 && !req.strict_paper {
            summary.push_str(" (reported only; pass --strict-paper to fail on them)");
        }
    }

    let selected = match single {
        Some(id) => id.id(),
        None if wants_all || nothing_selected => "all",
        None => "none",
    };
    let params = Record::new()
        .with("identity", selected)
        .with("d", format!("{}..{}", ranges.d.start(), ranges.d.end()))
        .with("m", format!("{}..{}", ranges.m.start(), ranges.m.end()))
        .with("n_max", ranges.n_max)
        .with("audit_tables", run_audit)
        .with("strict_paper", req.strict_paper);

    Ok(Run {
        output: Output {
            command: "verify",
            params,
            records: checks.into_iter().chain(audit).map(report_record).collect(),
        },
        exit,
        summary: Some(summary),
    })
}

pub fn exp(d: u32, x: &Rational, terms: u32, decimal: Option<usize>) -> Result<Run> {
    let dim = Dim::new(d)?;
    if terms == 0 {
        return Err(usage("--terms must be at least 1"));
    }
    cap("--terms", terms, MAX_ROWS)?;
    let decimal = digits(decimal)?;
    let value = exp_d_partial_sum(dim, terms).eval(x);
    let record = value_record(
        Record::new()
            .with("d", d)
            .with("x", render(x))
            .with("terms", terms),
        &value,
        decimal,
    );
    Ok(Run::ok(Output {
        command: "exp",
        params: Record::new()
            .with("d", d)
            .with("x", render(x))
            .with("terms", terms)
            .with_opt("decimal", decimal.map(|k| k as u32)),
        records: vec![record],
    }))
}
