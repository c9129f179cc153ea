//! `burgess` — the verification harness. Each `verify-*` subcommand
//! replays one explicit inequality over a modulus range and emits one
//! record per checked instance; `sweep-bounds` and `char-table` tabulate;
//! `bound` evaluates every ceiling at a single parameter point.
//!
//! Output is reproducible bit-for-bit from (command, q-range, seed,
//! samples, format); worker count never changes the bytes. Exit code 0
//! means every record holds, 1 means at least one failed (the stream is
//! still complete), 2 means the request itself was unusable.

mod config;
mod output;
mod records;
mod rng;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use config::{parse_ratio, Format, QRange, RunConfig};
use records::{
    CharOutput, CharSummary, Meta, RunOutput, Summary, SweepOutput, SweepSummary,
    VerificationRecord,
};

#[derive(Parser)]
#[command(
    name = "burgess",
    version,
    about = "Exhaustively verify explicit character-sum bounds for composite moduli"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Coprime-count error (Proposition 2.1): for every window length
    /// A ≤ q, the count of units in [1, A] stays within 2^(ω(q)−1) of
    /// A·φ(q)/q. One record per modulus carrying its worst window.
    VerifyProp21(RunArgs),
    /// Fourth moment of windowed sums (Lemma 3.2): for every primitive
    /// character and window length B < √q, the moment over all shifts
    /// stays under 3·φ(q)·B² + 50·q^(1/2)·B⁴. One record per (q, χ, B).
    VerifyLemma32(RunArgs),
    /// Complete sums over polynomial pairs (Lemma 3.1): on seeded residue
    /// tuples with at least three distinct entries, |Σ χ(...)| stays
    /// under the gcd-weighted 9√q ceiling. One record per (q, χ) carrying
    /// that stream's worst tuple.
    VerifyLemma31(RunArgs),
    /// Pair-count moments (Section 4 counting): on seeded (q, M, N, A)
    /// tuples, Σ v(l)² stays under the explicit second-moment ceiling.
    /// One record per sample.
    VerifyVstats(RunArgs),
    /// Arithmetic growth ceilings over a full range: the totient floor
    /// (Theorem A.1), divisor ceiling (Theorem A.2), and ω ceiling
    /// (Theorem A.3). One record per theorem carrying the tightest witness.
    VerifyAppendix(RunArgs),
    /// The explicit constant chain in 50-digit arithmetic: 9.07
    /// (Theorem 1.1), 12.11 and 1.69 (Corollary 1.2), and the truncated
    /// geometric series behind the recursion (equation 4.6).
    VerifyConstants(RunArgs),
    /// Threshold facts: e^(e^9.594) ≈ 8.03104×10^6373, the Section 4
    /// eighth-root comparison, the window cutoff, and condition (2.6)
    /// where it must hold and where it must fail.
    VerifyThresholds(RunArgs),
    /// Tabulate measured maxima of character sums against the trivial
    /// bound, the Pólya–Vinogradov shape, and the Theorem 1.1 ceiling
    /// evaluated in relaxed mode with exact ω, d, and φ.
    SweepBounds(RunArgs),
    /// List every Dirichlet character mod q with its order, conductor,
    /// and primitive/principal flags.
    CharTable(CharTableArgs),
    /// Evaluate every bound at one parameter point, in the log domain so
    /// threshold-scale moduli (around 10^6373) evaluate exactly.
    Bound(BoundCommandArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Inclusive modulus range, e.g. "3..=300" (also accepts "3..300").
    #[arg(long, value_name = "START..=END")]
    q_range: Option<QRange>,
    /// Seed for every sampled stream.
    #[arg(long, default_value_t = 2024)]
    seed: u64,
    /// Samples per character stream (lemma 3.1) or per run (vstats).
    #[arg(long, default_value_t = 200)]
    samples: u64,
    /// Record stream format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the record stream here instead of stdout.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Worker threads; 0 picks one per core. Never affects output bytes.
    #[arg(long, default_value_t = 0)]
    parallelism: usize,
}

impl RunArgs {
    fn config(&self, default_range: QRange) -> RunConfig {
        RunConfig {
            q_range: self.q_range.unwrap_or(default_range),
            seed: self.seed,
            samples: self.samples,
            format: self.format,
            output: self.output.clone(),
            parallelism: self.parallelism,
        }
    }
}

#[derive(Args)]
struct CharTableArgs {
    /// The modulus (built exactly; capped at 10^7).
    #[arg(long)]
    q: u64,
    /// Table format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the table here instead of stdout.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BoundCommandArgs {
    /// ln q. Give this or --loglog-q.
    #[arg(long, required_unless_present = "loglog_q", conflicts_with = "loglog_q")]
    log_q: Option<f64>,
    /// ln ln q, for threshold-scale moduli.
    #[arg(long)]
    loglog_q: Option<f64>,
    /// ln N, the log of the window length.
    #[arg(long)]
    log_n: f64,
    /// ω(q), the number of distinct prime factors.
    #[arg(long)]
    omega: u32,
    /// d(q), the exact divisor count. Give this or --ln-d.
    #[arg(long, required_unless_present = "ln_d", conflicts_with = "ln_d")]
    d: Option<u64>,
    /// ln d(q), for divisor counts past u64.
    #[arg(long)]
    ln_d: Option<f64>,
    /// q/φ(q), as a fraction "997/996" or a decimal ≥ 1.
    #[arg(long, value_parser = parse_ratio, default_value = "1")]
    phi_ratio: f64,
    /// Evaluate below the e^(e^9.594) hypothesis; the report carries an
    /// out_of_hypothesis flag instead of erroring.
    #[arg(long)]
    relaxed: bool,
    /// Write the JSON object here instead of stdout.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::VerifyProp21(args) => {
            let cfg = args.config(QRange::new(1, 3000));
            let records = in_pool(cfg.parallelism, || suites::prop21(cfg.q_range))?;
            finish("verify-prop21", records, &cfg)
        }
        Command::VerifyLemma32(args) => {
            let cfg = args.config(QRange::new(1, 200));
            let records = in_pool(cfg.parallelism, || suites::lemma32(cfg.q_range))?;
            finish("verify-lemma32", records, &cfg)
        }
        Command::VerifyLemma31(args) => {
            let cfg = args.config(QRange::new(3, 300));
            let records =
                in_pool(cfg.parallelism, || suites::lemma31(cfg.q_range, cfg.seed, cfg.samples))?;
            finish("verify-lemma31", records, &cfg)
        }
        Command::VerifyVstats(args) => {
            let cfg = args.config(QRange::new(2, 500));
            // One sequential seeded stream; worker count must not touch it.
            let records = suites::vstats(cfg.q_range, cfg.seed, cfg.samples)?;
            finish("verify-vstats", records, &cfg)
        }
        Command::VerifyAppendix(args) => {
            let cfg = args.config(QRange::new(3, 1_000_000));
            let records = suites::appendix(cfg.q_range)?;
            finish("verify-appendix", records, &cfg)
        }
        Command::VerifyConstants(args) => {
            let cfg = args.config(QRange::new(1, 1));
            finish("verify-constants", suites::constants(), &cfg)
        }
        Command::VerifyThresholds(args) => {
            let cfg = args.config(QRange::new(1, 1));
            finish("verify-thresholds", suites::thresholds(), &cfg)
        }
        Command::SweepBounds(args) => {
            let cfg = args.config(QRange::new(3, 100));
            let rows = in_pool(cfg.parallelism, || suites::sweep(cfg.q_range))?;
            let summary = if rows.is_empty() {
                SweepSummary { max_ratio: 0.0, min_ratio: 0.0, rows: 0 }
            } else {
                SweepSummary {
                    max_ratio: rows.iter().map(|r| r.ratio).fold(0.0, f64::max),
                    min_ratio: rows.iter().map(|r| r.ratio).fold(f64::INFINITY, f64::min),
                    rows: rows.len() as u64,
                }
            };
            match cfg.format {
                Format::Json => {
                    let out = SweepOutput {
                        meta: meta("sweep-bounds", &cfg),
                        records: rows,
                        summary,
                    };
                    output::write_json(&out, cfg.output.as_deref())?;
                }
                Format::Csv => output::write_csv_sweep(&rows, cfg.output.as_deref())?,
            }
            output::table_line(
                "sweep-bounds",
                summary.rows as usize,
                &format!("ratio in [{:.3e}, {:.3e}]", summary.min_ratio, summary.max_ratio),
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::CharTable(args) => {
            let rows = suites::char_table(args.q)?;
            let summary = CharSummary {
                characters: rows.len() as u64,
                primitive: rows.iter().filter(|r| r.primitive).count() as u64,
            };
            let m = Meta::new("char-table", args.format.as_str(), QRange::new(args.q, args.q), 0, 0);
            match args.format {
                Format::Json => {
                    let out = CharOutput { meta: m, records: rows, summary };
                    output::write_json(&out, args.output.as_deref())?;
                }
                Format::Csv => output::write_csv_chars(&rows, args.output.as_deref())?,
            }
            output::table_line(
                "char-table",
                summary.characters as usize,
                &format!("{} primitive", summary.primitive),
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Bound(args) => {
            let out = suites::bound(&suites::BoundArgs {
                log_q: args.log_q,
                loglog_q: args.loglog_q,
                log_n: args.log_n,
                omega: args.omega,
                d: args.d,
                ln_d: args.ln_d,
                phi_ratio: args.phi_ratio,
                relaxed: args.relaxed,
            })?;
            output::write_json(&out, args.output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Run a suite inside a bounded worker pool. Shards are keyed by modulus
/// and merged in order, so the thread count never reaches the output.
fn in_pool<T: Send>(parallelism: usize, f: impl FnOnce() -> Result<T> + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism)
        .build()
        .context("building the worker pool")?;
    pool.install(f)
}

fn meta(command: &str, cfg: &RunConfig) -> Meta {
    Meta::new(command, cfg.format.as_str(), cfg.q_range, cfg.samples, cfg.seed)
}

fn finish(command: &str, records: Vec<VerificationRecord>, cfg: &RunConfig) -> Result<ExitCode> {
    let summary = Summary::of(&records);
    match cfg.format {
        Format::Json => {
            let out = RunOutput { meta: meta(command, cfg), records, summary };
            output::write_json(&out, cfg.output.as_deref())?;
        }
        Format::Csv => output::write_csv_records(&records, cfg.output.as_deref())?,
    }
    output::summary_line(command, summary.passed, summary.failed, summary.min_margin);
    Ok(if summary.failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
