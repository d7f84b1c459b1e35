//! The `linprod` command line: region classification, coefficient tables,
//! cross-method comparison, sign scans and property checks.
//!
//! [`run`] takes the argument vector and two sinks and returns the process
//! exit code, so the whole front end can be driven in-process.

mod commands;
mod output;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use linprod::kernel::{parse_rational, Rational};
use linprod::{JacobiParams, ParamError};

pub use output::Format;

/// Exit code: success, property holds.
pub const EXIT_OK: i32 = 0;
/// Exit code: property violated, witness printed.
pub const EXIT_VIOLATION: i32 = 1;
/// Exit code: usage or range error.
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "linprod", version, about = "Exact linearization coefficients of Jacobi and generalized Chebyshev products")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct ParamArgs {
    /// alpha, as "p/q" or an integer
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    alpha: Rational,
    /// beta, as "p/q" or an integer
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    beta: Rational,
}

impl ParamArgs {
    fn params(&self) -> Result<JacobiParams, ParamError> {
        JacobiParams::new(self.alpha.clone(), self.beta.clone())
    }
}

#[derive(Args, Debug, Clone, Copy)]
struct FormatArgs {
    /// Output encoding
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Shorthand for --format json
    #[arg(long, conflicts_with = "format")]
    json: bool,
}

impl FormatArgs {
    fn get(self) -> Format {
        if self.json {
            Format::Json
        } else {
            self.format
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyArg {
    Jacobi,
    JacobiPlus,
    Gencheb,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodArg {
    Gasper,
    Brute,
    Rahman,
    Dougall,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckArg {
    Nonneg,
    Strict,
    Odd,
    Oscillation,
    All,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum PropertyArg {
    PqInequality,
    PhiAlternation,
    IotaZeros,
    RecursionConsistency,
    NecIdentities,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Region membership of (alpha, beta)
    Classify {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Coefficients g(m, n; k) of one product
    Linearize {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Gasper)]
        method: MethodArg,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Every applicable method on every product up to a degree, exact agreement required
    Compare {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        max_degree: u32,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Sign pattern of a coefficient family
    Scan {
        #[arg(long, value_enum)]
        check: CheckArg,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        max_degree: u32,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// One exact property at one (m, s)
    Verify {
        #[arg(long, value_enum)]
        property: PropertyArg,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 3)]
        m: u32,
        #[arg(long, default_value_t = 1)]
        s: u32,
        /// Degree bound for recursion-consistency
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// First negative odd-index generalized Chebyshev coefficient
    Witness {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        max_degree: u32,
        #[command(flatten)]
        format: FormatArgs,
    },
}

/// Failure that maps to [`EXIT_USAGE`].
#[derive(Debug)]
pub struct UsageError(pub String);

impl<E: std::error::Error> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32, UsageError> {
    match cmd {
        Command::Classify { params, format } => commands::classify(&params.params()?, format.get(), out),
        Command::Linearize { family, params, m, n, method, format } => {
            commands::linearize(&params.params()?, family, m, n, method, format.get(), out)
        }
        Command::Compare { params, max_degree, format } => {
            commands::compare(&params.params()?, max_degree, format.get(), out)
        }
        Command::Scan { check, params, max_degree, format } => {
            commands::scan(&params.params()?, check, max_degree, format.get(), out)
        }
        Command::Verify { property, params, m, s, max_degree, format } => {
            commands::verify(&params.params()?, property, m, s, max_degree, format.get(), out)
        }
        Command::Witness { params, max_degree, format } => {
            commands::witness(&params.params()?, max_degree, format.get(), out)
        }
    }
}
