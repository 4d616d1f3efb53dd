use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use mhv_core::algebra::bracket;
use mhv_core::bider::{check_bider_family, BiderParams};
use mhv_core::lsa::lsa_product;
use mhv_core::suite::parse_checks;
use mhv_core::{
    parse_element, parse_scalar, run_suite, AlgebraMode, CheckName, EpsMode, Format, Parallelism, Report, RunConfig,
    Scalar,
};

/// Exact verifier for the mirror Heisenberg-Virasoro algebra.
///
/// Elements are written as `d(2) + 3*h(1/2) - c`; `h(p/2)` needs an odd `p`.
/// Set MHV_WORKERS to cap the worker count (1 runs sequentially).
#[derive(Parser)]
#[command(name = "mhv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Index window [-N, N] for every quantifier.
    #[arg(long, default_value_t = 5)]
    window: i64,
    /// `symbolic` or a nonzero rational p/q.
    #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
    eps: EpsMode,
    /// json or text.
    #[arg(long, default_value = "json")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Lie bracket of two elements.
    Bracket {
        x: String,
        y: String,
        #[arg(long)]
        centerless: bool,
    },
    /// Left-symmetric product of two elements.
    LsaMul {
        x: String,
        y: String,
        #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
        eps: EpsMode,
    },
    /// Run a selection of checks (default: all).
    Verify {
        #[command(flatten)]
        common: Common,
        /// Comma-separated check names, or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
        /// Run the Lie-algebra checks on the centerless algebra.
        #[arg(long)]
        centerless: bool,
    },
    /// Solve the theta system and certify uniqueness.
    SolveTheta {
        #[command(flatten)]
        common: Common,
    },
    /// Left-symmetric identity and compatibility of the product.
    LsaCheck {
        #[command(flatten)]
        common: Common,
    },
    /// Biderivation axioms for f = lambda[x,y] + Upsilon_Omega(x,y).
    BiderCheck {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        lambda: String,
        /// Entries k=mu separated by commas, e.g. `0=1,-1=1/2`.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        omega: String,
        #[arg(long)]
        centerless: bool,
    },
    /// Commutative post-Lie triviality over the parameter grid.
    PostlieGrid {
        #[command(flatten)]
        common: Common,
    },
    /// Left-symmetric biderivation triviality over the parameter grid.
    LsaBiderGrid {
        #[command(flatten)]
        common: Common,
    },
    /// Transcribed centerless coefficient equations.
    StarCheck {
        #[command(flatten)]
        common: Common,
    },
    /// Transcribed central coefficient equations.
    AstCheck {
        #[command(flatten)]
        common: Common,
    },
    /// Transcribed equations against the identity-derived oracle.
    CrossCheck {
        #[command(flatten)]
        common: Common,
    },
}

fn parse_omega(text: &str) -> Result<Vec<(i64, Scalar)>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|entry| {
            let (k, mu) = entry
                .split_once('=')
                .ok_or_else(|| anyhow!("omega entry '{entry}' is not k=mu"))?;
            let k: i64 = k.trim().parse().with_context(|| format!("bad omega index '{k}'"))?;
            Ok((k, parse_scalar(mu.trim())?))
        })
        .collect()
}

fn emit(reports: &[Report], format: Format, many: bool) {
    match format {
        Format::Json => {
            let value = if many {
                Value::Array(reports.iter().map(Report::to_json).collect())
            } else {
                reports[0].to_json()
            };
            println!("{}", serde_json::to_string_pretty(&value).expect("json"));
        }
        Format::Text => {
            for r in reports {
                println!("{}", r.to_text(20));
            }
        }
    }
}

fn suite(common: &Common, checks: Vec<CheckName>, centerless: bool) -> Result<Vec<Report>> {
    let cfg = RunConfig {
        window: common.window,
        eps: common.eps.clone(),
        format: common.format,
        checks,
        centerless,
        parallelism: Parallelism::from_env(),
    };
    Ok(run_suite(&cfg)?)
}

fn run(cli: Cli) -> Result<bool> {
    let (reports, format, many) = match cli.command {
        Command::Bracket { x, y, centerless } => {
            let mode = if centerless {
                AlgebraMode::Centerless
            } else {
                AlgebraMode::Full
            };
            println!("{}", bracket(&parse_element(&x)?, &parse_element(&y)?, mode)?);
            return Ok(true);
        }
        Command::LsaMul { x, y, eps } => {
            println!("{}", lsa_product(&parse_element(&x)?, &parse_element(&y)?, &eps)?);
            return Ok(true);
        }
        Command::Verify {
            common,
            checks,
            centerless,
        } => (suite(&common, parse_checks(&checks)?, centerless)?, common.format, true),
        Command::LsaCheck { common } => (
            suite(&common, vec![CheckName::LsaIdentity, CheckName::Compatibility], false)?,
            common.format,
            true,
        ),
        Command::BiderCheck {
            common,
            lambda,
            omega,
            centerless,
        } => {
            if common.window < 1 {
                bail!("window must be at least 1, got {}", common.window);
            }
            let params = BiderParams::new(parse_scalar(&lambda)?, parse_omega(&omega)?);
            let mode = if centerless {
                AlgebraMode::Centerless
            } else {
                AlgebraMode::Full
            };
            let mut r = check_bider_family(&[params], common.window, mode, Parallelism::from_env());
            r.check_name = "bider-check".into();
            (vec![r], common.format, false)
        }
        Command::SolveTheta { common } => single(&common, CheckName::SolveTheta)?,
        Command::PostlieGrid { common } => single(&common, CheckName::PostlieGrid)?,
        Command::LsaBiderGrid { common } => single(&common, CheckName::LsaBiderGrid)?,
        Command::StarCheck { common } => single(&common, CheckName::Star)?,
        Command::AstCheck { common } => single(&common, CheckName::Ast)?,
        Command::CrossCheck { common } => single(&common, CheckName::CrossCheck)?,
    };
    emit(&reports, format, many);
    Ok(reports.iter().all(|r| r.passed))
}

fn single(common: &Common, check: CheckName) -> Result<(Vec<Report>, Format, bool)> {
    Ok((suite(common, vec![check], false)?, common.format, false))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
