//! Command-line front end. Exit status: 0 success or true, 1 false or failed
//! check, 2 error.

use std::collections::BTreeMap;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dimcalc::expr::{evaluate, parse, render, Env, Format, Value};
use dimcalc::harness::laws::check_laws;
use dimcalc::harness::{builtin, cube_theorem_sweep, run_scenario, Scenario};
use dimcalc::Error;

#[derive(Parser)]
#[command(name = "dimcalc", version, about = "Calculator for cohomological dimension types")]
struct Cli {
    /// Output format: pretty or structured.
    #[arg(long, global = true, default_value = "pretty")]
    format: Format,

    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression, e.g. `dim(B(4) boxplus B(4))`.
    Eval { expr: String },
    /// Run a builtin scenario by name, or a scenario file.
    Verify {
        #[arg(long)]
        scenario: String,
        /// Value or inclusive range `A..B` for the parameter `n`.
        #[arg(long)]
        n: Option<String>,
    },
    /// Exhaustive sweep over uniform dimension types.
    Sweep {
        #[arg(long, required = true)]
        cube: bool,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        bound: u64,
    },
    /// Bockstein basis of a group, e.g. `Z/2 + Z/12`.
    Sigma { group: String },
    /// Random checks of the algebraic laws (uses --seed).
    Laws {
        #[arg(long, default_value_t = 10_000)]
        count: usize,
    },
}

fn parse_range(spec: &str) -> Result<Vec<u64>, Error> {
    let bad = || Error::Validity(format!("bad --n value `{spec}`, expected N or A..B"));
    match spec.split_once("..") {
        Some((a, b)) => {
            let a: u64 = a.trim().parse().map_err(|_| bad())?;
            let b: u64 = b.trim().parse().map_err(|_| bad())?;
            if a > b {
                return Err(bad());
            }
            Ok((a..=b).collect())
        }
        None => Ok(vec![spec.trim().parse().map_err(|_| bad())?]),
    }
}

fn load_scenario(spec: &str) -> Result<Scenario, Error> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Validity(format!("cannot read {spec}: {e}")))?;
        let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or(spec);
        Scenario::parse(name, &text)
    } else {
        builtin(spec)
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn run(cli: Cli) -> Result<bool, Error> {
    match cli.command {
        Command::Eval { expr } => {
            let value = evaluate(&parse(&expr)?, &Env::new())?;
            println!("{}", render(&value, cli.format));
            Ok(value != Value::Bool(false))
        }
        Command::Sigma { group } => {
            let expr = parse(&group)?;
            let value = evaluate(&expr, &Env::new())?;
            let Value::Group(g) = value else {
                return Err(Error::TypeMismatch {
                    pos: expr.pos,
                    message: format!("`{group}` is not a group"),
                });
            };
            let sigma = Value::Sigma(dimcalc::bockstein_basis(&g)?);
            println!("{}", render(&sigma, cli.format));
            Ok(true)
        }
        Command::Verify { scenario, n } => {
            let s = load_scenario(&scenario)?;
            let runs: Vec<BTreeMap<String, u64>> = match n {
                Some(spec) => parse_range(&spec)?
                    .into_iter()
                    .map(|v| BTreeMap::from([("n".to_string(), v)]))
                    .collect(),
                None => vec![BTreeMap::new()],
            };
            let reports = runs
                .iter()
                .map(|b| run_scenario(&s, b))
                .collect::<Result<Vec<_>, _>>()?;
            match cli.format {
                Format::Pretty => reports.iter().for_each(|r| print!("{}", r.to_text())),
                Format::Structured => println!("{}", json(&reports)),
            }
            Ok(reports.iter().all(|r| r.passed))
        }
        Command::Sweep { n, bound, .. } => {
            let report = cube_theorem_sweep(n, bound)?;
            match cli.format {
                Format::Pretty => print!("{}", report.to_text()),
                Format::Structured => println!("{}", json(&report)),
            }
            Ok(report.passed())
        }
        Command::Laws { count } => {
            let report = check_laws(cli.seed, count)?;
            match cli.format {
                Format::Pretty => print!("{}", report.to_text()),
                Format::Structured => println!("{}", json(&report)),
            }
            Ok(report.passed())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
