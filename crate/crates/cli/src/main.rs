//! Command-line front end for the Lucas palindromic-repdigit proof
//! toolkit. Each subcommand exposes one slice of the pipeline: the
//! low-range search, the Baker-type bound chain, the reduction sweeps,
//! the full certified run, and a reader for saved certificates.

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use palucas::pipeline::{self, Config, Verdict};
use palucas::{derive_bound_chain, explain, run_full, BoundCertificate, SearchMode};
use rug::ops::Pow;
use rug::Integer;
use std::path::PathBuf;
use std::process::ExitCode;

const PRECISION_ENV: &str = "PALUCAS_PRECISION";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Palindromic,
    TwoBlock,
}

impl From<Mode> for SearchMode {
    fn from(mode: Mode) -> SearchMode {
        match mode {
            Mode::Palindromic => SearchMode::Palindromic,
            Mode::TwoBlock => SearchMode::TwoBlock,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "palucas",
    version,
    about = "Certified proof that no Lucas number is a palindromic \
             concatenation of two distinct repdigits"
)]
struct Cli {
    /// Working precision in decimal digits (default 1000). The
    /// PALUCAS_PRECISION environment variable is consulted when the flag
    /// is absent.
    #[arg(long, global = true)]
    precision: Option<u32>,

    /// Upper index for the exhaustive Lucas search.
    #[arg(long, global = true, default_value_t = 1000)]
    n_max: usize,

    /// Digit pattern the search matches against.
    #[arg(long, global = true, value_enum, default_value_t = Mode::Palindromic)]
    mode: Mode,

    /// Include per-combination reduction rows in the certificate.
    #[arg(long, global = true)]
    detail: bool,

    /// Write the primary output to a file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Scan Lucas numbers up to n-max for the selected digit pattern.
    Search,
    /// Derive the linear-forms bound chain at the working precision.
    Bounds,
    /// Run the three reduction sweeps and report the sharpened bounds.
    Reduce,
    /// Run the complete proof and emit a TOML certificate.
    Full,
    /// Render a saved certificate as a human-readable report.
    Explain {
        /// Path to a certificate produced by `full`.
        certificate: PathBuf,
    },
}

fn resolve_precision(flag: Option<u32>) -> Result<u32> {
    if let Some(p) = flag {
        return Ok(p);
    }
    match std::env::var(PRECISION_ENV) {
        Ok(raw) => raw
            .trim()
            .parse::<u32>()
            .with_context(|| format!("{PRECISION_ENV} is not a valid digit count: {raw:?}")),
        Err(_) => Ok(palucas::DEFAULT_DIGITS),
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .with_context(|| format!("cannot write {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run_search(cli: &Cli) -> Result<String> {
    let report = match cli.mode {
        Mode::Palindromic => palucas::search_palindromic(cli.n_max)?,
        Mode::TwoBlock => palucas::search_two_block(cli.n_max)?,
    };
    let mut text = String::new();
    if report.hits.is_empty() {
        text.push_str(&format!(
            "no {} hits among L_n for n <= {}\n",
            report.mode, report.n_max
        ));
    } else {
        text.push_str(&format!(
            "{} {} hit(s) among L_n for n <= {}\n",
            report.hits.len(),
            report.mode,
            report.n_max
        ));
        for hit in &report.hits {
            text.push_str(&format!("n = {}: {} [{}]\n", hit.n, hit.value, hit.pattern));
        }
    }
    Ok(text)
}

fn run_bounds(precision: u32) -> Result<String> {
    let chain = derive_bound_chain(precision)?;
    let mut text = String::new();
    text.push_str(&format!("bound chain at {precision} digits\n"));
    text.push_str(&format!(
        "stage 1: Matveev coefficient {}, \u{2113} < {} log n\n",
        chain.matveev_stage1, chain.ell_log_bound
    ));
    text.push_str(&format!(
        "stage 2: A1 = {}, Matveev coefficient {}, m < {} (log n)^2\n",
        chain.a1_stage2, chain.matveev_stage2, chain.m_log_bound
    ));
    text.push_str(&format!(
        "stage 3: A1 = {}, Matveev coefficient {}, n < {} (log n)^3\n",
        chain.a1_stage3, chain.matveev_stage3, chain.n_poly_bound
    ));
    text.push_str(&format!(
        "absolute bounds: n <= {}, \u{2113} <= {}, m <= {}\n",
        chain.n_abs, chain.ell_abs, chain.m_abs
    ));
    Ok(text)
}

fn run_reduce(precision: u32) -> Result<String> {
    let m_cap = Integer::from(10).pow(46);
    let mut text = String::new();
    text.push_str(&format!(
        "reduction sweeps at {precision} digits, M = 10^46\n"
    ));
    let stages: [(&str, &str, u32); 3] = [
        ("ell", "\u{2113}", pipeline::ADOPTED_ELL_LESS_THAN),
        ("m", "m", pipeline::ADOPTED_M_LESS_THAN),
        ("n", "n", pipeline::ADOPTED_N_LESS_THAN),
    ];
    for (name, symbol, adopted) in stages {
        let agg = match name {
            "ell" => palucas::reduction::stage1_ell(&m_cap, precision)?,
            "m" => palucas::reduction::stage2_m(
                pipeline::ADOPTED_ELL_LESS_THAN,
                &m_cap,
                precision,
            )?,
            _ => palucas::reduction::stage3_n(
                pipeline::ADOPTED_ELL_LESS_THAN,
                pipeline::ADOPTED_M_LESS_THAN,
                &m_cap,
                precision,
            )?,
        };
        text.push_str(&format!(
            "stage {name}: {} combos, {symbol} < {} (adopted {symbol} < {adopted})",
            agg.combos, agg.k_less_than
        ));
        if let (Some(min), Some(max)) = (&agg.min_epsilon, &agg.max_epsilon) {
            text.push_str(&format!(
                ", epsilon in [{}, {}]",
                min.to_decimal_string(12),
                max.to_decimal_string(12)
            ));
        }
        text.push('\n');
    }
    Ok(text)
}

fn run_full_command(cli: &Cli, precision: u32) -> Result<ExitCode> {
    let config = Config {
        precision,
        n_max: cli.n_max,
        mode: cli.mode.into(),
        detail: cli.detail,
    };
    let cert = run_full(&config)?;
    let toml = cert.to_toml();
    match &cli.out {
        Some(path) => {
            emit(&cli.out, &toml)?;
            // With the certificate on disk, stdout carries the report.
            print!("{}", explain(&cert));
            eprintln!("certificate written to {}", path.display());
        }
        None => print!("{toml}"),
    }
    Ok(if cert.verdict == Verdict::NoSolutions {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn main() -> Result<ExitCode> {
    let cli = Cli::parse();
    let precision = resolve_precision(cli.precision)?;
    match &cli.command {
        Command::Search => {
            let text = run_search(&cli)?;
            emit(&cli.out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bounds => {
            let text = run_bounds(precision)?;
            emit(&cli.out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Reduce => {
            let text = run_reduce(precision)?;
            emit(&cli.out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Full => run_full_command(&cli, precision),
        Command::Explain { certificate } => {
            let raw = std::fs::read_to_string(certificate)
                .with_context(|| format!("cannot read {}", certificate.display()))?;
            let cert = BoundCertificate::from_toml(&raw)?;
            emit(&cli.out, &explain(&cert))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
