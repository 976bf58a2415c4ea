//! `dualhahn` — exact tables, identity checks, operator matrices, and
//! limit sweeps for the dual −1 Hahn family and its relatives.

use clap::{Args, Parser, Subcommand, ValueEnum};
use dualhahn::scalar::Scalar;
use dualhahn_cli::commands::{
    cmd_coeffs, cmd_eval, cmd_grid, cmd_limits, cmd_operator, cmd_verify, cmd_weights,
    first_failing_suite, CliError, FamilySpec,
};
use dualhahn_cli::limits::EpsilonSchedule;
use dualhahn_cli::output::{Format, Report};
use num_traits::Zero;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "dualhahn",
    version,
    about = "Exact computations for dual -1 Hahn polynomials and their q-ancestors"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    /// Dual q-Hahn family on the grid q^{-s} + abq^{s+1}.
    #[value(name = "q-hahn")]
    QHahn,
    /// Dual -1 Hahn family on the signed linear grid.
    #[value(name = "m1-hahn")]
    M1Hahn,
    /// Classical dual Hahn family on the quadratic grid.
    Classical,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl FormatArg {
    fn to_format(self) -> Format {
        match self {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Args)]
struct CommonOpts {
    /// Polynomial family.
    #[arg(long, value_enum, default_value = "m1-hahn")]
    family: FamilyArg,
    /// alpha parameter (m1-hahn, classical), an exact rational like 3 or 7/2.
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    /// beta parameter (m1-hahn, classical), an exact rational.
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    /// a parameter (q-hahn), an exact rational.
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    /// b parameter (q-hahn), an exact rational.
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    /// q parameter (q-hahn), an exact rational.
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    /// Family size N (grid has N+1 nodes, degrees run 0..=N).
    #[arg(long = "N", value_name = "N")]
    n_max: usize,
    /// Output format.
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
}

fn parse_rational(text: &str, flag: &str) -> Result<Scalar, CliError> {
    let err =
        || CliError::Usage(format!("--{flag} expects an exact rational like 3 or 7/2, got {text:?}"));
    let t = text.trim();
    match t.split_once('/') {
        None => t.parse::<Scalar>().map_err(|_| err()),
        Some((n, d)) => {
            let num = n.trim().parse::<Scalar>().map_err(|_| err())?;
            let den = d.trim().parse::<Scalar>().map_err(|_| err())?;
            if den.is_zero() {
                return Err(err());
            }
            Ok(num / den)
        }
    }
}

impl CommonOpts {
    fn build(&self) -> Result<FamilySpec, CliError> {
        if self.n_max == 0 {
            return Err(CliError::Usage("--N must be at least 1".into()));
        }
        let need = |opt: &Option<String>, flag: &str| -> Result<Scalar, CliError> {
            match opt {
                Some(text) => parse_rational(text, flag),
                None => Err(CliError::Usage(format!(
                    "--{flag} is required for this family"
                ))),
            }
        };
        let reject = |opt: &Option<String>, flag: &str| -> Result<(), CliError> {
            match opt {
                Some(_) => Err(CliError::Usage(format!(
                    "--{flag} does not apply to this family"
                ))),
                None => Ok(()),
            }
        };
        match self.family {
            FamilyArg::M1Hahn | FamilyArg::Classical => {
                reject(&self.a, "a")?;
                reject(&self.b, "b")?;
                reject(&self.q, "q")?;
                let alpha = need(&self.alpha, "alpha")?;
                let beta = need(&self.beta, "beta")?;
                Ok(if self.family == FamilyArg::M1Hahn {
                    FamilySpec::M1 {
                        alpha,
                        beta,
                        n_max: self.n_max,
                    }
                } else {
                    FamilySpec::Classical {
                        alpha,
                        beta,
                        n_max: self.n_max,
                    }
                })
            }
            FamilyArg::QHahn => {
                reject(&self.alpha, "alpha")?;
                reject(&self.beta, "beta")?;
                Ok(FamilySpec::Q {
                    a: need(&self.a, "a")?,
                    b: need(&self.b, "b")?,
                    q: need(&self.q, "q")?,
                    n_max: self.n_max,
                })
            }
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the spectral grid points.
    Grid {
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Print recurrence coefficients with independent cross-checks.
    Coeffs {
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Print the orthogonality weights and total mass.
    Weights {
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Evaluate the monic degree-n polynomial on the grid or at --x.
    Eval {
        #[command(flatten)]
        opts: CommonOpts,
        /// Degree of the polynomial to evaluate (0 ≤ n ≤ N).
        #[arg(long)]
        n: usize,
        /// Evaluate at this exact rational point instead of the grid.
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
    },
    /// Run every identity suite for the family and report residuals.
    Verify {
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Print the generalized Leonard pair matrices and their bandwidths.
    Operator {
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Run limit convergence sweeps (m1-hahn: q -> -1; classical: q -> 1).
    Limits {
        #[command(flatten)]
        opts: CommonOpts,
        /// Comma-separated epsilon schedule, strictly decreasing positives.
        #[arg(long, value_delimiter = ',')]
        eps: Option<Vec<String>>,
    },
}

fn print_report(report: &Report, format: FormatArg) {
    print!("{}", report.render(format.to_format()));
}

fn build_schedule(eps: Option<Vec<String>>) -> Result<EpsilonSchedule, CliError> {
    match eps {
        None => Ok(EpsilonSchedule::default_geometric()),
        Some(raw) => {
            let mut values = Vec::with_capacity(raw.len());
            for item in &raw {
                let v: f64 = item.trim().parse().map_err(|_| {
                    CliError::Usage(format!("--eps entries must be floats, got {item:?}"))
                })?;
                values.push(v);
            }
            Ok(EpsilonSchedule::new(values)?)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Grid { opts } => {
            let report = cmd_grid(&opts.build()?)?;
            print_report(&report, opts.format);
            Ok(())
        }
        Command::Coeffs { opts } => {
            let report = cmd_coeffs(&opts.build()?)?;
            print_report(&report, opts.format);
            Ok(())
        }
        Command::Weights { opts } => {
            let report = cmd_weights(&opts.build()?)?;
            print_report(&report, opts.format);
            Ok(())
        }
        Command::Eval { opts, n, x } => {
            let at = match &x {
                Some(text) => Some(parse_rational(text, "x")?),
                None => None,
            };
            let report = cmd_eval(&opts.build()?, n, at.as_ref())?;
            print_report(&report, opts.format);
            Ok(())
        }
        Command::Verify { opts } => {
            let (report, all_ok) = cmd_verify(&opts.build()?)?;
            print_report(&report, opts.format);
            if all_ok {
                Ok(())
            } else {
                let suite = first_failing_suite(&report).unwrap_or_else(|| "unknown".into());
                Err(CliError::Identity(format!(
                    "suite {suite} reported a nonzero residual"
                )))
            }
        }
        Command::Operator { opts } => {
            let report = cmd_operator(&opts.build()?)?;
            print_report(&report, opts.format);
            Ok(())
        }
        Command::Limits { opts, eps } => {
            let schedule = build_schedule(eps)?;
            let (report, failure) = cmd_limits(&opts.build()?, &schedule)?;
            print_report(&report, opts.format);
            match failure {
                None => Ok(()),
                Some(e) => Err(e),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code())
        }
    }
}
