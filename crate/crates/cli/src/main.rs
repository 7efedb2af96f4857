//! `dyckm`: command line access to m-Dyck path computations.
//!
//! Exit status is 0 on success, 1 when a verification finds a
//! counterexample, and 2 on usage errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dyckm::algebra::{star, star_i};
use dyckm::coalgebra::coproduct;
use dyckm::json::{path_from_json, path_sum_to_json, tensor_sum_to_json};
use dyckm::series::{dm_series, dm_series_fixed_point, functional_equation_holds};
use dyckm::tamari::hasse_dot;
use dyckm::trees::enumerate_basis;
use dyckm::verify::{run_suite, Suite};
use dyckm::{enumerate, MDyckPath};

#[derive(Parser)]
#[command(name = "dyckm", version, about = "m-Dyck paths, their products, coproduct and Tamari order")]
struct Cli {
    /// Lift the size guards.
    #[arg(long, global = true)]
    r#unsafe: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List all m-Dyck paths of size n as JSON.
    Enumerate {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Compute lhs *_i rhs, or the total product with `--i all`.
    Product {
        #[arg(long)]
        i: String,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    /// Compute the coproduct of a path.
    Coproduct {
        #[arg(long)]
        path: String,
    },
    /// Print the Hasse diagram of the m-Tamari order.
    Hasse {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// List the colored trees of the basis B_n^{m,k}.
    Basis {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Print the coefficients of the Fuss-Catalan series.
    Series {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        degree: usize,
        /// Also verify the functional equation.
        #[arg(long)]
        check: bool,
    },
    /// Run an exhaustive verification suite.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        max_size: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
}

enum Failure {
    Usage(String),
    Counterexample(String),
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

/// Largest total size accepted without `--unsafe`.
fn size_limit(m: usize) -> usize {
    match m {
        0..=2 => 6,
        3 => 4,
        _ => 3,
    }
}

const MAX_SERIES_DEGREE: usize = 20;

struct Guard {
    lifted: bool,
}

impl Guard {
    fn check(&self, m: usize, size: usize) -> Result<(), Failure> {
        if m == 0 {
            return Err(usage("m must be at least 1"));
        }
        if !self.lifted && size > size_limit(m) {
            return Err(usage(format!(
                "size {size} exceeds the limit {} for m = {m}; pass --unsafe to override",
                size_limit(m)
            )));
        }
        Ok(())
    }
}

fn parse_path(s: &str) -> Result<MDyckPath, Failure> {
    path_from_json(s).map_err(|e| usage(format!("invalid path: {e}")))
}

fn run(cli: Cli) -> Result<String, Failure> {
    let guard = Guard { lifted: cli.r#unsafe };
    match cli.command {
        Command::Enumerate { m, n } => {
            guard.check(m, n)?;
            let paths = enumerate(m, n).map_err(|e| usage(e.to_string()))?;
            Ok(serde_json::to_string(&paths).expect("serializable"))
        }
        Command::Product { i, lhs, rhs } => {
            let p = parse_path(&lhs)?;
            let q = parse_path(&rhs)?;
            guard.check(p.m(), p.size() + q.size())?;
            let result = if i == "all" {
                star(&p, &q)
            } else {
                let i: usize = i.parse().map_err(|_| usage(format!("--i must be 0..m or all, got {i:?}")))?;
                star_i(&p, i, &q)
            };
            result.map(|s| path_sum_to_json(&s)).map_err(|e| usage(e.to_string()))
        }
        Command::Coproduct { path } => {
            let p = parse_path(&path)?;
            guard.check(p.m(), p.size())?;
            Ok(tensor_sum_to_json(&coproduct(&p)))
        }
        Command::Hasse { m, n, format: Format::Dot } => {
            guard.check(m, n)?;
            hasse_dot(m, n).map(|s| s.trim_end().to_string()).map_err(|e| usage(e.to_string()))
        }
        Command::Basis { m, n, k, count_only } => {
            guard.check(m, n)?;
            if n == 0 || k > m {
                return Err(usage("need n >= 1 and k <= m"));
            }
            let trees = enumerate_basis(n, m, k, &[]);
            if count_only {
                Ok(trees.len().to_string())
            } else {
                Ok(serde_json::to_string(&trees).expect("serializable"))
            }
        }
        Command::Series { m, degree, check } => {
            if !guard.lifted && degree > MAX_SERIES_DEGREE {
                return Err(usage(format!("degree above {MAX_SERIES_DEGREE} needs --unsafe")));
            }
            let d = dm_series(m, degree);
            let out = serde_json::to_string(d.coeffs()).expect("serializable");
            if check && (d != dm_series_fixed_point(m, degree) || !functional_equation_holds(m, degree)) {
                return Err(Failure::Counterexample(format!("{out}\nfunctional equation fails")));
            }
            Ok(out)
        }
        Command::Verify { suite, m, max_size } => {
            guard.check(m, max_size)?;
            let report = run_suite(suite, m, max_size);
            if report.is_ok() {
                Ok(report.to_string())
            } else {
                Err(Failure::Counterexample(report.to_string()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Counterexample(msg)) => {
            println!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
