//! `classchar`: compute characters, shifted Schur values and invariants, run
//! verification sweeps, and maintain the golden corpus.
//!
//! Exit codes: 0 success, 1 mathematical mismatch or golden drift, 2 usage.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use classchar_core::characters::{branch, character, dimension, fmt_branch};
use classchar_core::golden::{compare_corpus, write_corpus};
use classchar_core::invariants::{mu_invariant, AlgebraModel};
use classchar_core::rational::{fmt_q, parse_q};
use classchar_core::shifted::{factorial_schur_eval, s_star, t_star};
use classchar_core::sweep::{run_sweep, OutputFormat, Suite, SweepConfig};
use classchar_core::{Error, Partition, Series, ShiftSequence, Signature};

const THREADS_ENV: &str = "CLASSCHAR_THREADS";

#[derive(Parser)]
#[command(
    name = "classchar",
    version,
    about = "Exact characters and shifted Schur identities for the classical groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute and print a single object.
    Compute(ComputeArgs),
    /// Run verification suites over a grid.
    Verify(VerifyArgs),
    /// Regenerate or compare the golden corpus.
    Golden(GoldenArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Character,
    Tstar,
    Sstar,
    FactorialSchur,
    Branch,
    Dimension,
    Invariant,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum ComputeFormat {
    #[default]
    Text,
    Json,
}

#[derive(Args)]
struct ComputeArgs {
    kind: Kind,
    #[arg(long)]
    series: Option<Series>,
    #[arg(long)]
    rank: Option<usize>,
    /// Comma-separated signature, padded with zeros up to the rank.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    #[arg(long)]
    mu: Option<String>,
    /// Comma-separated rational points for factorial-schur.
    #[arg(long, allow_hyphen_values = true)]
    points: Option<String>,
    /// `zero`, `falling`, or comma-separated explicit terms.
    #[arg(long, allow_hyphen_values = true)]
    shift: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    format: ComputeFormat,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suites to run (comma-separated); all when omitted.
    #[arg(long = "suite", value_delimiter = ',')]
    suites: Vec<Suite>,
    #[arg(long, value_delimiter = ',')]
    series: Vec<Series>,
    #[arg(long, default_value_t = 2)]
    max_rank: usize,
    #[arg(long, default_value_t = 4)]
    max_lambda: usize,
    #[arg(long, default_value_t = 2)]
    max_mu: usize,
    #[arg(long, value_parser = ["json", "csv", "text"], default_value = "json")]
    format: String,
    /// Report file; only the summary line is printed when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Worker threads; defaults to $CLASSCHAR_THREADS, then the core count.
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct GoldenArgs {
    #[arg(long)]
    update: bool,
    #[arg(long, default_value = "golden")]
    dir: PathBuf,
}

/// Failure with its exit code.
struct Failure(u8, String);

fn usage(msg: impl ToString) -> Failure {
    Failure(2, msg.to_string())
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        usage(e)
    }
}

fn required<T: Clone>(v: &Option<T>, name: &str) -> Result<T, Failure> {
    v.clone()
        .ok_or_else(|| usage(format!("--{name} is required")))
}

fn signature(args: &ComputeArgs, series: Series) -> Result<Signature, Failure> {
    let raw: Signature = required(&args.lambda, "lambda")?.parse()?;
    let rank = args.rank.unwrap_or(raw.rank());
    if raw.rank() > rank {
        return Err(usage(format!("lambda {raw} has more than {rank} entries")));
    }
    let mut parts = raw.parts().to_vec();
    parts.resize(rank, 0);
    let sig = Signature::new(parts)?;
    if !sig.is_dominant(series) {
        return Err(usage(format!(
            "{sig} is not a dominant weight for series {series}"
        )));
    }
    if rank == 0 {
        return Err(usage("rank must be at least 1"));
    }
    Ok(sig)
}

fn partition(raw: &Option<String>, name: &str) -> Result<Partition, Failure> {
    Ok(required(raw, name)?.parse()?)
}

fn rationals(raw: &str) -> Result<Vec<classchar_core::Q>, Failure> {
    raw.split(',')
        .map(|t| parse_q(t).map_err(Failure::from))
        .collect()
}

fn compute(args: &ComputeArgs) -> Result<String, Failure> {
    let series = || required(&args.series, "series");
    Ok(match args.kind {
        Kind::Character => {
            let s = series()?;
            character(s, &signature(args, s)?)?.canonical().to_string()
        }
        Kind::Tstar => {
            let s = series()?;
            fmt_q(&t_star(
                s,
                &partition(&args.mu, "mu")?,
                &signature(args, s)?,
            )?)
        }
        Kind::Sstar => fmt_q(&s_star(
            &partition(&args.mu, "mu")?,
            &signature(args, Series::A)?,
        )?),
        Kind::FactorialSchur => {
            let points = rationals(&required(&args.points, "points")?)?;
            let a = match (&args.series, args.shift.as_deref()) {
                (Some(s), None) => s.shift_sequence(),
                (None, None) | (None, Some("falling")) => ShiftSequence::Falling,
                (None, Some("zero")) => ShiftSequence::Zero,
                (None, Some(explicit)) => ShiftSequence::Explicit(rationals(explicit)?),
                (Some(_), Some(_)) => return Err(usage("use either --series or --shift")),
            };
            let mu = partition(&args.mu, "mu")?;
            if let ShiftSequence::Explicit(v) = &a {
                let needed = mu.part(0) + points.len();
                if v.len() < needed {
                    return Err(usage(format!("--shift needs at least {needed} terms")));
                }
            }
            fmt_q(&factorial_schur_eval(&mu, &points, &a)?)
        }
        Kind::Branch => {
            let s = series()?;
            fmt_branch(&branch(s, &signature(args, s)?)?)
        }
        Kind::Dimension => {
            let s = series()?;
            fmt_q(&dimension(s, &signature(args, s)?)?)
        }
        Kind::Invariant => {
            let s = series()?;
            let model = AlgebraModel::new(s, required(&args.rank, "rank")?)?;
            mu_invariant(&model, &partition(&args.mu, "mu")?)?.to_string()
        }
    })
}

fn verify(args: &VerifyArgs) -> Result<(), Failure> {
    let threads = match args.threads {
        Some(t) => Some(t),
        None => match std::env::var(THREADS_ENV) {
            Ok(v) => Some(
                v.parse()
                    .map_err(|_| usage(format!("{THREADS_ENV} must be a positive integer")))?,
            ),
            Err(_) => None,
        },
    };
    let format: OutputFormat = args.format.parse()?;
    let defaults = SweepConfig::default();
    let config = SweepConfig {
        series: if args.series.is_empty() {
            defaults.series
        } else {
            args.series.clone()
        },
        max_rank: args.max_rank,
        max_lambda: args.max_lambda,
        max_mu: args.max_mu,
        suites: if args.suites.is_empty() {
            defaults.suites
        } else {
            args.suites.clone()
        },
        format,
        threads,
    };
    let report = run_sweep(&config).map_err(|e| Failure(1, e.to_string()))?;
    if let Some(path) = &args.output {
        std::fs::write(path, report.render(format)?)
            .map_err(|e| usage(format!("{}: {e}", path.display())))?;
    }
    println!("{}", report.summary_line());
    if report.passed() {
        Ok(())
    } else {
        Err(Failure(1, format!("{} mismatches", report.failed())))
    }
}

fn golden(args: &GoldenArgs) -> Result<(), Failure> {
    if args.update {
        let n = write_corpus(&args.dir).map_err(|e| Failure(1, e.to_string()))?;
        println!("wrote {n} files to {}", args.dir.display());
        return Ok(());
    }
    if !args.dir.is_dir() {
        return Err(usage(format!(
            "golden directory {} does not exist",
            args.dir.display()
        )));
    }
    let diff = compare_corpus(&args.dir).map_err(|e| Failure(1, e.to_string()))?;
    if diff.is_clean() {
        println!("{} files match", diff.compared);
        Ok(())
    } else {
        print!("{}", diff.listing());
        Err(Failure(
            1,
            format!(
                "{} of {} files drifted",
                diff.missing.len() + diff.changed.len(),
                diff.compared
            ),
        ))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Compute(args) => compute(args).map(|out| match args.format {
            ComputeFormat::Text => println!("{out}"),
            ComputeFormat::Json => println!(
                "{}",
                serde_json::json!({ "kind": args.kind_name(), "value": out })
            ),
        }),
        Command::Verify(args) => verify(args),
        Command::Golden(args) => golden(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

impl ComputeArgs {
    fn kind_name(&self) -> String {
        self.kind
            .to_possible_value()
            .map(|v| v.get_name().to_string())
            .unwrap_or_default()
    }
}
