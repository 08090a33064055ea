use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qtrace::verify::{parse_checks, run_verify_in, Format, RunConfig};
use qtrace::{exprio, poisson, Error, IndexSet, Session};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "qtrace",
    version,
    about = "Exact computations with n x n quantum matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Matrix size.
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Output format: text or json.
    #[arg(long, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Run residual checks and report pass/fail per check.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Largest power used by power-indexed checks (default n+2).
        #[arg(long)]
        max_power: Option<usize>,
        /// Comma-separated check names, or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Wall-clock cap; checks that do not finish in time are skipped.
        #[arg(long)]
        budget_ms: Option<u64>,
        /// Disable data-parallel evaluation.
        #[arg(long)]
        sequential: bool,
    },
    /// Normal form of an expression in x[i,j] and q (or y[i,j] with --classical).
    Expand {
        expr: String,
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        classical: bool,
    },
    /// Sum of principal k x k quantum minors.
    Sigma {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        k: usize,
    },
    /// Trace of the k-th quantum power of the generic matrix.
    TracePower {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        k: usize,
    },
    /// Quantum minor on the given rows and columns.
    Minor {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',', required = true)]
        rows: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        cols: Vec<usize>,
    },
    /// Residual of Newton's relation at k.
    Newton {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        k: usize,
    },
    /// Poisson bracket of two classical polynomials in y[i,j].
    Pbracket {
        f: String,
        g: String,
        #[command(flatten)]
        common: Common,
    },
    /// t_k as a polynomial in t_1..t_n.
    TBasis {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        k: usize,
    },
}

enum Failure {
    Usage(String),
    Failed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn emit(format: Format, n: usize, kind: &str, value: String, terms: usize) {
    match format {
        Format::Text => println!("{value}"),
        Format::Json => {
            let out = json!({ "n": n, "kind": kind, "value": value, "terms": terms });
            println!("{}", serde_json::to_string_pretty(&out).expect("json"));
        }
    }
}

fn session(c: &Common) -> Result<Session, Failure> {
    if c.n == 0 {
        return Err(Error::EmptyAmbient.into());
    }
    Ok(Session::new(c.n)?)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Verify {
            common,
            max_power,
            checks,
            seed,
            budget_ms,
            sequential,
        } => {
            let checks = parse_checks(&checks).map_err(Failure::Usage)?;
            let cfg = RunConfig {
                n: common.n,
                max_power: max_power.unwrap_or(common.n + 2),
                checks,
                format: common.format,
                seed,
                budget_ms,
            };
            cfg.validate()?;
            let s = Session::new(cfg.n)?;
            s.algebra().set_parallel(!sequential);
            let summary = run_verify_in(&cfg, &s)?;
            match cfg.format {
                Format::Text => print!("{}", summary.to_text()),
                Format::Json => println!("{}", summary.to_json()),
            }
            if summary.exit_code() != 0 {
                return Err(Failure::Failed);
            }
        }
        Command::Expand {
            expr,
            common,
            classical,
        } => {
            if common.n == 0 {
                return Err(Error::EmptyAmbient.into());
            }
            if classical {
                let p = exprio::parse_cpoly(common.n, &expr)?;
                emit(
                    common.format,
                    common.n,
                    "classical",
                    p.to_string(),
                    p.terms().count(),
                );
            } else {
                let s = session(&common)?;
                let e = exprio::parse_element(s.algebra(), &expr)?;
                emit(common.format, common.n, "quantum", e.to_string(), e.len());
            }
        }
        Command::Sigma { common, k } => {
            let s = session(&common)?;
            let e = s.sigma(k)?;
            emit(common.format, common.n, "sigma", e.to_string(), e.len());
        }
        Command::TracePower { common, k } => {
            let s = session(&common)?;
            let e = s.t(k)?;
            emit(
                common.format,
                common.n,
                "trace_power",
                e.to_string(),
                e.len(),
            );
        }
        Command::Minor { common, rows, cols } => {
            let s = session(&common)?;
            let rows = IndexSet::new(rows, common.n)?;
            let cols = IndexSet::new(cols, common.n)?;
            let e = s.minors().qminor(&rows, &cols)?;
            emit(common.format, common.n, "minor", e.to_string(), e.len());
        }
        Command::Newton { common, k } => {
            let s = session(&common)?;
            let e = s.newton_residual(k)?;
            emit(
                common.format,
                common.n,
                "newton_residual",
                e.to_string(),
                e.len(),
            );
            if !e.is_zero() {
                return Err(Failure::Failed);
            }
        }
        Command::Pbracket { f, g, common } => {
            if common.n == 0 {
                return Err(Error::EmptyAmbient.into());
            }
            let f = exprio::parse_cpoly(common.n, &f)?;
            let g = exprio::parse_cpoly(common.n, &g)?;
            let b = poisson::pbracket(&f, &g)?;
            emit(common.format, common.n, "pbracket", b.to_string(), b.len());
        }
        Command::TBasis { common, k } => {
            let s = session(&common)?;
            let p = s.t_in_t_basis(k)?;
            emit(
                common.format,
                common.n,
                "t_basis",
                p.to_string(),
                p.terms().count(),
            );
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Failed) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
