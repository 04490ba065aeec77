//! Command-line surface: `expand`, `coeffs`, `solve`, `tables`, `count` and
//! `verify`. Commands render to a string; the binary only decides where the
//! string goes and which exit code to use.

mod render;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use thiserror::Error;

use crate::etaq::{EtaError, EtaQuotient};
use crate::formspace::build_family;
use crate::oracle::{count_by_convolution, count_by_enumeration, CountQuery, OracleError};
use crate::solver::{SolveError, Solver, DEFAULT_SOLVE_ORDER, TABLE4};
use crate::theta::{catalog_lookup, classify_form, theta_product, Family, FormSignature};
use crate::verify::{self, VerifyConfig};

/// Expansion order used when neither `--order` nor `QFORMS_ORDER` is given.
pub const DEFAULT_ORDER: usize = 120;
/// Expansion order for `verify` when not overridden.
pub const DEFAULT_VERIFY_ORDER: usize = 360;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountMethod {
    Formula,
    Convolution,
    Enumerate,
    /// Run all three and require agreement.
    All,
}

#[derive(Debug, Parser)]
#[command(name = "qforms", version, about = "Exact representation counts for octonary forms with coefficients 1, 2, 3, 6")]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Expansion (verification) order; defaults to 360 for `verify`, 120 elsewhere.
    #[arg(long, global = true, env = "QFORMS_ORDER")]
    pub order: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ligozat report and leading coefficients of an eta quotient.
    Expand {
        /// `delta:exponent` pairs, e.g. `4:3,12:1,24:4`.
        #[arg(long)]
        eta: String,
        /// Level to check against; defaults to the lcm of the deltas.
        #[arg(long)]
        level: Option<u64>,
        #[arg(long, default_value_t = 10)]
        terms: usize,
    },
    /// Theta-product coefficients of a form, or basis expansions of a family.
    Coeffs {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 10)]
        terms: usize,
    },
    /// Solve one form for its Eisenstein and cusp coefficients.
    Solve {
        #[arg(long)]
        form: FormSignature,
        /// Accept in-scope signatures that are not in the catalog.
        #[arg(long)]
        allow_any: bool,
    },
    /// Solve every catalog form of a family.
    Tables {
        #[arg(long)]
        family: Family,
        /// Coefficients of each basis element included in JSON output.
        #[arg(long, default_value_t = 20)]
        terms: usize,
    },
    /// `N(1^i,2^j,3^k,6^l; n)`.
    Count {
        #[arg(long)]
        form: FormSignature,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = CountMethod::Formula)]
        method: CountMethod,
    },
    /// Full sweep: Ligozat, ranks, published table, and formulas against oracles.
    Verify {
        #[arg(long, default_value_t = 100)]
        nmax: usize,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Target {
    #[arg(long)]
    pub form: Option<FormSignature>,
    #[arg(long)]
    pub family: Option<Family>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Eta(#[from] EtaError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("form {0} is not one of the 112 catalog forms (pass --allow-any to solve it anyway)")]
    NotInCatalog(FormSignature),
    #[error("{0}")]
    Usage(String),
    /// Checks ran and something disagreed. The payload is the full report.
    #[error("{0}")]
    Mismatch(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 1 for a verification mismatch, 2 for bad input, 3 for internal failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Mismatch(_) => 1,
            CliError::Solve(
                SolveError::InconsistentSystem { .. }
                | SolveError::NonIntegerResult { .. }
                | SolveError::UnderdeterminedSystem { .. },
            ) => 3,
            CliError::Io(_) => 3,
            _ => 2,
        }
    }
}

impl CliConfig {
    fn order(&self, default: usize) -> usize {
        self.order.unwrap_or(default)
    }

    fn solver(&self, default: usize) -> Result<Solver, CliError> {
        let order = self.order(default);
        Ok(Solver::new(DEFAULT_SOLVE_ORDER.min(order), order)?)
    }
}

/// Runs the parsed command and returns what should be printed.
pub fn run(cfg: &CliConfig) -> Result<String, CliError> {
    let fmt = cfg.format;
    match &cfg.command {
        Command::Expand { eta, level, terms } => {
            let mut q: EtaQuotient = eta.parse()?;
            if let Some(level) = level {
                q = q.at_level(*level)?;
            }
            let report = q.ligozat_check()?;
            let series = q.expand(terms.saturating_sub(1))?;
            Ok(render::expansion(fmt, &q, &report, &series))
        }
        Command::Coeffs { target, terms } => {
            let order = terms.saturating_sub(1);
            if let Some(form) = &target.form {
                let s = theta_product(form, order);
                Ok(render::form_coefficients(fmt, form, &s))
            } else {
                let family = target.family.expect("clap enforces one target");
                let basis = build_family(family, order)?;
                Ok(render::basis(fmt, &basis))
            }
        }
        Command::Solve { form, allow_any } => {
            let entry = catalog_lookup(form);
            if entry.is_none() {
                if classify_form(form).is_none() {
                    return Err(SolveError::OutOfScopeForm(*form).into());
                }
                if !allow_any {
                    return Err(CliError::NotInCatalog(*form));
                }
            }
            let solver = cfg.solver(DEFAULT_ORDER)?;
            let solved = solver.solve_form(form)?;
            Ok(render::solved(fmt, &[solved], entry.map(|e| e.row)))
        }
        Command::Tables { family, terms } => {
            let solver = cfg.solver(DEFAULT_ORDER)?;
            let solved = solver.solve_family(*family)?;
            Ok(render::table(fmt, solver.basis(*family), &solved, *terms))
        }
        Command::Count { form, n, method } => count(cfg, form, *n, *method),
        Command::Verify { nmax } => {
            let order = cfg.order(DEFAULT_VERIFY_ORDER);
            if *nmax > order {
                return Err(CliError::Usage(format!("--nmax {nmax} exceeds the expansion order {order}")));
            }
            let solver = cfg.solver(DEFAULT_VERIFY_ORDER)?;
            let config = VerifyConfig { nmax: *nmax, ..VerifyConfig::default() };
            let report = verify::run(&solver, &config, &TABLE4)?;
            let out = render::verify_report(fmt, &report);
            if report.passed() {
                Ok(out)
            } else {
                Err(CliError::Mismatch(out))
            }
        }
    }
}

fn count(cfg: &CliConfig, form: &FormSignature, n: u64, method: CountMethod) -> Result<String, CliError> {
    let mut results: Vec<(&'static str, BigInt)> = Vec::new();
    let want = |m: CountMethod| method == m || method == CountMethod::All;
    if want(CountMethod::Formula) {
        let solver = cfg.solver(DEFAULT_ORDER)?;
        let solved = solver.solve_form(form)?;
        results.push(("formula", solver.evaluate_formula(&solved, n)?));
    }
    if want(CountMethod::Convolution) {
        let c = count_by_convolution(form, n as usize)[n as usize];
        results.push(("convolution", BigInt::from(c)));
    }
    if want(CountMethod::Enumerate) {
        let c = count_by_enumeration(&CountQuery::for_form(form, n))?;
        results.push(("enumerate", BigInt::from(c)));
    }
    let consistent = results.windows(2).all(|w| w[0].1 == w[1].1);
    let out = render::count(cfg.format, form, n, &results, consistent);
    if consistent {
        Ok(out)
    } else {
        Err(CliError::Mismatch(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> CliConfig {
        CliConfig::try_parse_from(std::iter::once("qforms").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn exit_codes() {
        let form: FormSignature = "2,2,2,2".parse().unwrap();
        assert_eq!(CliError::Mismatch(String::new()).exit_code(), 1);
        assert_eq!(CliError::Solve(SolveError::OutOfScopeForm(form)).exit_code(), 2);
        assert_eq!(CliError::NotInCatalog(form).exit_code(), 2);
        let internal = SolveError::InconsistentSystem { form, detail: String::new() };
        assert_eq!(CliError::Solve(internal).exit_code(), 3);
    }

    #[test]
    fn defaults() {
        let cfg = parse(&["count", "--form", "1,0,1,6", "--n", "1"]);
        assert_eq!(cfg.format, OutputFormat::Text);
        assert!(matches!(cfg.command, Command::Count { method: CountMethod::Formula, .. }));
    }

    #[test]
    fn count_disagreement_is_never_reported_as_success() {
        let cfg = parse(&["count", "--form", "1,0,7,0", "--n", "3", "--method", "all"]);
        assert_eq!(run(&cfg).unwrap().lines().last(), Some("consistent: N(1,0,7,0; 3) = 14"));
    }
}
