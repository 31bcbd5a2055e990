//! `sdcalc`: tables, identity checks and exponential partial sums for the S_d-calculus.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on a usage or domain error.

mod commands;
mod output;

use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sdcalc_core::rational::parse_rational;
use sdcalc_core::Rational;

use output::Format;

#[derive(Debug, Parser)]
#[command(
    name = "sdcalc",
    version,
    about = "Exact S_d-calculus tables and identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Simplicial d-polytopic numbers [0]_d .. [n-max]_d.
    Numbers {
        #[arg(long)]
        d: u32,
        #[arg(long, default_value_t = 10)]
        n_max: u32,
    },
    /// Row n of the d-Hoggatt triangle.
    Binomials {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n: u32,
    },
    /// S_d-hypergeometric Bernoulli numbers, or polynomial coefficient rows with --poly.
    Bernoulli {
        #[arg(long)]
        d: u32,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[arg(long, default_value_t = 8)]
        n_max: u32,
        /// Emit B_{d,n}(m;x) coefficient rows, constant term first.
        #[arg(long)]
        poly: bool,
        /// Also print a decimal expansion truncated to this many digits.
        #[arg(long)]
        decimal: Option<usize>,
    },
    /// Run identity checks and the published-table audit.
    Verify(VerifyArgs),
    /// Exact partial sum of exp_d(x) through x^terms.
    Exp {
        #[arg(long)]
        d: u32,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_x)]
        x: Rational,
        #[arg(long, default_value_t = 10)]
        terms: u32,
        #[arg(long)]
        decimal: Option<usize>,
    },
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Identity id (e.g. kummer-touchard), catalogue label (I1..I10) or "all".
    #[arg(long)]
    identity: Option<String>,
    /// Run every identity.
    #[arg(long)]
    all: bool,
    /// Dimension range, `a..b` (inclusive) or a single value.
    #[arg(long, value_parser = parse_range, default_value = "1..4")]
    d: RangeInclusive<u32>,
    #[arg(long, value_parser = parse_range, default_value = "1..3")]
    m: RangeInclusive<u32>,
    #[arg(long, default_value_t = 10)]
    n_max: u32,
    /// Compare computed B_{d,n} with the published tables.
    #[arg(long)]
    audit_tables: bool,
    /// Count table mismatches as failures.
    #[arg(long)]
    strict_paper: bool,
}

fn parse_x(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn parse_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<u32>()
            .map_err(|_| format!("expected an integer or a range a..b, got {s:?}"))
    };
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?);
            if a > b {
                return Err(format!("empty range {s:?}"));
            }
            Ok(a..=b)
        }
        None => num(s).map(|v| v..=v),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let run = match cli.command {
        Command::Numbers { d, n_max } => commands::numbers(d, n_max),
        Command::Binomials { d, n } => commands::binomials(d, n),
        Command::Bernoulli {
            d,
            m,
            n_max,
            poly,
            decimal,
        } => commands::bernoulli(d, m, n_max, poly, decimal),
        Command::Verify(a) => commands::verify(&commands::VerifyRequest {
            identity: a.identity,
            all: a.all,
            d: a.d,
            m: a.m,
            n_max: a.n_max,
            audit_tables: a.audit_tables,
            strict_paper: a.strict_paper,
        }),
        Command::Exp {
            d,
            x,
            terms,
            decimal,
        } => commands::exp(d, &x, terms, decimal),
    };
    match run {
        Ok(run) => {
            let mut stdout = io::stdout().lock();
            if let Err(e) = run
                .output
                .write(cli.format, &mut stdout)
                .and_then(|()| stdout.flush())
            {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if let Some(summary) = run.summary {
                eprintln!("{summary}");
            }
            ExitCode::from(run.exit)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
