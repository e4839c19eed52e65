//! `permstat`: statistics, bijections, traces, distributions and exhaustive
//! verification from the command line.
//!
//! Exit codes: 0 success, 1 verification counterexample, 2 usage or parse
//! error, 3 domain violation.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use permstat::dist::{joint_polynomial, set_valued_distribution, SetStatistic, Statistic};
use permstat::signed::{f_map, foata_map, foata_map_inverse, phi_tilde, psi1, psi2};
use permstat::stats::StatsReport;
use permstat::triple::{phi_triple, phi_triple_inverse, phi_triple_traced};
use permstat::verify::{check_all, check_theorem, TheoremId, MAX_CHECK_N};
use permstat::{DomainError, Execution, MultiPoly, Permutation};

const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DOMAIN: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "permstat", version, about = "Permutation statistics and bijections on Sₙ")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print every statistic of a permutation as JSON.
    Stats {
        /// One-line notation, whitespace- or comma-separated.
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        permutation: Vec<String>,
    },
    /// Apply one of the bijections.
    Map {
        #[arg(long, value_enum)]
        bijection: Bijection,
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        permutation: Vec<String>,
    },
    /// Show the iteration trace of the triple bijection.
    Trace {
        #[arg(long, value_enum, default_value_t = TraceMap::PhiTriple)]
        bijection: TraceMap,
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        permutation: Vec<String>,
    },
    /// Export a joint generating polynomial or a set-valued table over Sₙ.
    Dist {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=12))]
        n: u64,
        /// Comma-separated statistics (depth, drp, exc, des, asc, exc-hat,
        /// aexc, fix-hat, exc-hat+fix-hat) or one table (suc-set, fix-set,
        /// asc2-des-suc, exc-aexc-fix-hat).
        #[arg(long)]
        stats: String,
        /// Weight each permutation by its sign.
        #[arg(long)]
        signed: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check theorems exhaustively for n = 1..=n-max.
    Verify {
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..=MAX_CHECK_N as u64))]
        n_max: u64,
        /// A theorem id or `all`.
        #[arg(long, default_value = "all")]
        theorem: String,
        /// Run on one thread.
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Bijection {
    PhiTriple,
    PhiTripleInv,
    Foata,
    FoataInv,
    PhiTilde,
    Psi1,
    Psi2,
    F,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum TraceMap {
    PhiTriple,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
}

enum Failure {
    Usage(String),
    Domain(DomainError),
    Counterexample,
}

impl From<DomainError> for Failure {
    fn from(e: DomainError) -> Self {
        Failure::Domain(e)
    }
}

fn parse_permutation(parts: &[String]) -> Result<Permutation, Failure> {
    parts
        .join(" ")
        .parse()
        .map_err(|e| Failure::Usage(format!("invalid permutation: {e}")))
}

fn apply(bijection: Bijection, p: &Permutation) -> Result<Permutation, DomainError> {
    Ok(match bijection {
        Bijection::PhiTriple => phi_triple(p),
        Bijection::PhiTripleInv => phi_triple_inverse(p),
        Bijection::Foata => foata_map(p),
        Bijection::FoataInv => foata_map_inverse(p),
        Bijection::PhiTilde => phi_tilde(p)?,
        Bijection::Psi1 => psi1(p)?,
        Bijection::Psi2 => psi2(p)?,
        Bijection::F => f_map(p),
    })
}

fn poly_csv(p: &MultiPoly) -> String {
    let mut out = p.variables().join(",");
    out.push_str(",coefficient\n");
    for (mono, c) in p.terms() {
        for e in mono {
            out.push_str(&format!("{e},"));
        }
        out.push_str(&format!("{c}\n"));
    }
    out
}

fn run_dist(n: usize, stats: &str, signed: bool, format: Format) -> Result<String, Failure> {
    let names: Vec<&str> = stats.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    let usage = |e: permstat::VerifyError| Failure::Usage(e.to_string());
    let exec = Execution::default();

    if let [single] = names.as_slice() {
        if let Ok(table_stat) = single.parse::<SetStatistic>() {
            if signed {
                return Err(Failure::Usage("--signed applies only to polynomial statistics".into()));
            }
            let table = set_valued_distribution(n, table_stat, exec).map_err(usage)?;
            return Ok(match format {
                Format::Csv => table.to_csv(),
                Format::Json => format!("{}\n", table.to_json(table_stat, n)),
            });
        }
    }
    let parsed = names
        .iter()
        .map(|s| s.parse::<Statistic>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(usage)?;
    let poly = joint_polynomial(n, &parsed, signed, exec).map_err(usage)?;
    Ok(match format {
        Format::Csv => poly_csv(&poly),
        Format::Json => format!("{}\n", serde_json::to_string(&poly).expect("plain data")),
    })
}

fn run_verify(n_max: usize, theorem: &str, exec: Execution) -> Result<(), Failure> {
    let reports = if theorem == "all" {
        check_all(n_max, exec)
    } else {
        let id: TheoremId = theorem.parse().map_err(|e: permstat::VerifyError| Failure::Usage(e.to_string()))?;
        (1..=n_max).map(|n| check_theorem(id, n, exec)).collect()
    }
    .map_err(|e| Failure::Usage(e.to_string()))?;

    for r in &reports {
        println!("{r}");
    }
    let passed = reports.iter().filter(|r| r.passed).count();
    println!("{passed}/{} checks passed", reports.len());
    if let Some(bad) = reports.iter().find(|r| !r.passed) {
        let witness = bad.witness.as_ref().map(ToString::to_string).unwrap_or_default();
        eprintln!("first counterexample: {} n={} witness={witness}", bad.theorem, bad.n);
        return Err(Failure::Counterexample);
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Stats { permutation } => {
            let p = parse_permutation(&permutation)?;
            let json = serde_json::to_string(&StatsReport::new(&p)).expect("plain data");
            println!("{json}");
        }
        Command::Map { bijection, permutation } => {
            let p = parse_permutation(&permutation)?;
            println!("{}", apply(bijection, &p)?);
        }
        Command::Trace { bijection: TraceMap::PhiTriple, permutation } => {
            let p = parse_permutation(&permutation)?;
            let (image, trace) = phi_triple_traced(&p);
            print!("{trace}");
            println!("final: {image}");
        }
        Command::Dist { n, stats, signed, format } => {
            print!("{}", run_dist(n as usize, &stats, signed, format)?);
        }
        Command::Verify { n_max, theorem, sequential } => {
            let exec = if sequential {
                Execution::Sequential
            } else {
                Execution::default()
            };
            run_verify(n_max as usize, &theorem, exec)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("domain error: {e}");
            ExitCode::from(EXIT_DOMAIN)
        }
        Err(Failure::Counterexample) => ExitCode::from(EXIT_COUNTEREXAMPLE),
    }
}
