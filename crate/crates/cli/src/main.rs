//! `qfib`: generate q-Fibonacci tables, verify identities over parameter
//! grids, and compute power determinants.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use qfib::identities::{power_matrix, IdentityId, IdentityReport, StepCoefficient};
use qfib::{
    ClosedForm, FibonomialReading, GridSpec, Poly, RunReport, SeqCache, SignedMonomial, ValueSet,
    Verifier,
};
use rayon::prelude::*;

/// Number of worker threads for `verify`; unset or `1` runs sequentially.
const WORKERS_ENV: &str = "QFIB_WORKERS";

#[derive(Parser)]
#[command(
    name = "qfib",
    version,
    about = "Exact verification of recurrences for powers of q-Fibonacci polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one polynomial per line for an index range.
    Gen(GenArgs),
    /// Run an identity over a parameter grid.
    Verify(VerifyArgs),
    /// Print det(f(n + m i - ell j, x, q^(ell j) s)^k) for 0 <= i, j < dim.
    Det(DetArgs),
    /// Print a triangle of coefficients, one row per line.
    Table(TableArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Classical,
    Qfib,
    Qbinomial,
    Fibonomial,
    Qfibonomial,
    Fac,
}

#[derive(clap::Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Index range; for `fac` the number of factors.
    #[arg(long, allow_hyphen_values = true)]
    n: ValueSet,
    /// Lower index for the binomial families (default `0..n`).
    #[arg(long, allow_hyphen_values = true)]
    k: Option<ValueSet>,
    /// Replace `s` by `q^shift s` (`qfib`, `fac`).
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    shift: i64,
    /// Index step (`qfibonomial`, `fac`).
    #[arg(long, default_value_t = 1)]
    ell: i64,
    #[arg(long, default_value = "fixed")]
    reading: FibonomialReading,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(clap::Args)]
struct VerifyArgs {
    #[arg(long)]
    identity: IdentityId,
    #[arg(long, allow_hyphen_values = true)]
    n: Option<ValueSet>,
    #[arg(long, allow_hyphen_values = true)]
    k: Option<ValueSet>,
    #[arg(long, allow_hyphen_values = true)]
    m: Option<ValueSet>,
    #[arg(long, allow_hyphen_values = true)]
    ell: Option<ValueSet>,
    #[arg(long, allow_hyphen_values = true)]
    j: Option<ValueSet>,
    /// Second denominator product of the step-ell q-fibonomial.
    #[arg(long, default_value = "fixed")]
    reading: FibonomialReading,
    /// Closed-form exponents as displayed or as recomputed.
    #[arg(long, default_value = "printed")]
    closed_form: ClosedForm,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Report every elapsed time as 0, making JSON output byte-reproducible.
    #[arg(long)]
    no_timings: bool,
}

#[derive(clap::Args)]
struct DetArgs {
    #[arg(long, allow_hyphen_values = true)]
    n: i64,
    #[arg(long, default_value_t = 1)]
    m: i64,
    #[arg(long, default_value_t = 1)]
    ell: i64,
    #[arg(long)]
    k: i64,
    #[arg(long)]
    dim: i64,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Qbinomial,
    Fibonomial,
}

#[derive(clap::Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    kind: TableKind,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    rows: u32,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(args) => gen(&args).map(|()| true),
        Command::Verify(args) => verify(&args),
        Command::Det(args) => det(&args).map(|()| true),
        Command::Table(args) => table(&args).map(|()| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

type CliResult<T> = Result<T, Box<dyn std::error::Error>>;

/// A quotient of products, printed as a polynomial when it divides.
fn quotient_text(num: Vec<Poly>, den: Vec<Poly>) -> String {
    let c = StepCoefficient::new(SignedMonomial::ONE, num, den);
    match c.to_poly() {
        Ok(p) => p.to_string(),
        Err(_) => format!(
            "({}) / ({})",
            c.numerator_product(),
            c.denominator_product()
        ),
    }
}

fn lower_range(k: &Option<ValueSet>, n: i64) -> Vec<i64> {
    k.as_ref()
        .map_or_else(|| (0..=n).collect(), ValueSet::values)
}

fn gen(args: &GenArgs) -> CliResult<()> {
    let seq = SeqCache::new();
    for n in args.n.values() {
        match args.family {
            Family::Classical => println!("{}", seq.classical_fib(n)),
            Family::Qfib => println!("{}", seq.qfib(n, args.shift)),
            Family::Fac => println!("{}", seq.fac(n, args.shift, args.ell)),
            Family::Qbinomial => {
                for k in lower_range(&args.k, n) {
                    println!("{}", seq.qbinomial(n, k));
                }
            }
            Family::Fibonomial => {
                for k in lower_range(&args.k, n) {
                    println!("{}", seq.fibonomial(n, k)?);
                }
            }
            Family::Qfibonomial => {
                for k in lower_range(&args.k, n) {
                    let (num, den) = seq.qfibonomial_factors(n, k, args.ell, args.reading);
                    println!("{}", quotient_text(num, den));
                }
            }
        }
    }
    Ok(())
}

fn workers() -> CliResult<usize> {
    match std::env::var(WORKERS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(format!("{WORKERS_ENV} must be a positive integer, got `{v}`").into()),
        },
        Err(_) => Ok(1),
    }
}

fn verify(args: &VerifyArgs) -> CliResult<bool> {
    let mut grid = GridSpec::new(args.identity);
    grid.reading = args.reading;
    grid.closed_form = args.closed_form;
    for (name, values) in [
        ("n", &args.n),
        ("k", &args.k),
        ("m", &args.m),
        ("ell", &args.ell),
        ("j", &args.j),
    ] {
        if let Some(v) = values {
            grid = grid.with_range(name, v.clone())?;
        }
    }
    let points = grid.points();
    let opts = grid.options();
    let verifier = Verifier::new();
    let start = Instant::now();
    let run_one = |p: &qfib::Params| verifier.run(args.identity, p, opts);
    let mut reports: Vec<IdentityReport> = match workers()? {
        1 => points.iter().map(run_one).collect(),
        n => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()?
            .install(|| points.par_iter().map(run_one).collect()),
    };
    let mut elapsed_ms = start.elapsed().as_millis() as u64;
    if args.no_timings {
        reports.iter_mut().for_each(|r| r.elapsed_ms = 0);
        elapsed_ms = 0;
    }
    let run = RunReport::new(grid, reports, elapsed_ms);
    match args.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&run)?),
        Format::Text => {
            for r in &run.reports {
                let status = serde_json::to_value(r.status)?;
                println!(
                    "{} {}: {} {}",
                    r.identity,
                    r.params,
                    status.as_str().unwrap_or_default(),
                    r.residual
                );
            }
            let s = run.summary;
            println!(
                "{} points: {} zero, {} residual, {} error",
                run.reports.len(),
                s.zero,
                s.residual,
                s.error
            );
        }
    }
    Ok(run.success())
}

fn det(args: &DetArgs) -> CliResult<()> {
    let seq = SeqCache::new();
    let m = power_matrix(&seq, args.n, args.m, args.ell, args.k, args.dim)?;
    println!("{}", m.det()?);
    Ok(())
}

fn table(args: &TableArgs) -> CliResult<()> {
    let seq = SeqCache::new();
    for n in 0..args.rows as i64 {
        let row = (0..=n)
            .map(|k| match args.kind {
                TableKind::Qbinomial => Ok(seq.qbinomial(n, k).to_string()),
                TableKind::Fibonomial => seq.fibonomial(n, k).map(|p| p.to_string()),
            })
            .collect::<qfib::Result<Vec<_>>>()?;
        println!("{}", row.join(", "));
    }
    Ok(())
}
