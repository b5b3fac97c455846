//! Benchmark CLI for exact determinant computation over integral domains.
//!
//! Subcommands: `det` (compute a determinant from a matrix file), `counts`
//! (measured vs closed-form operation counts), `bench` (seeded benchmark
//! records as CSV/JSON/table), `plan` (modulus planning report).
//!
//! Exit codes: 0 success, 2 input error, 3 arithmetic-mode error (machine
//! word overflow), 4 internal invariant violation.

mod commands;
mod io;
mod records;
mod rings;

use clap::{Parser, Subcommand};
use commands::{BenchConfig, PlanArgs};
use records::OutputFormat;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "detbench", version, about = "Exact determinants over integral domains: run, count, verify, plan")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the determinant of a matrix file (one line per algorithm)
    Det {
        /// Matrix file (integer or polynomial format)
        #[arg(long)]
        file: PathBuf,
        /// dodgson | one-pass | combined | modular | all
        #[arg(long, default_value = "combined")]
        algo: String,
        /// Switch point for the combined algorithm: an integer or `auto`
        #[arg(long, default_value = "auto")]
        r: String,
        /// int | bigint | primefield:<m> | poly:<s>,<p>[:<base>]
        #[arg(long)]
        ring: Option<String>,
        /// Comma-separated prime pool override for the modular pipeline
        #[arg(long)]
        prime_pool: Option<String>,
    },
    /// Compare measured operation tallies against the closed-form counts
    Counts {
        /// Size or inclusive range, e.g. `5` or `3..8` (within [3, 64])
        #[arg(long, default_value = "3..8")]
        n: String,
        /// dodgson | one-pass | combined | all
        #[arg(long, default_value = "all")]
        algo: String,
        /// Switch points for combined: `all`, `auto` or an integer
        #[arg(long, default_value = "all")]
        r: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// table | csv | json
        #[arg(long, default_value = "table")]
        format: OutputFormat,
        /// Report wall-clock times (breaks byte-for-byte reproducibility)
        #[arg(long)]
        timings: bool,
        /// Write the record stream to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run seeded benchmarks and emit one record per (rep, algorithm)
    Bench {
        /// Matrix order
        #[arg(long)]
        n: usize,
        /// Column count for rectangular condensation (defaults to n)
        #[arg(long)]
        m: Option<usize>,
        /// dodgson | one-pass | combined | modular | all
        #[arg(long, default_value = "all")]
        algo: String,
        /// int | bigint | primefield:<m> | poly:<s>,<p>[:<base>]
        #[arg(long, default_value = "bigint")]
        ring: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        reps: usize,
        /// Switch point for the combined algorithm: an integer or `auto`
        #[arg(long, default_value = "auto")]
        r: String,
        /// Entries are sampled uniformly from [-bound, bound]
        #[arg(long, default_value_t = 99)]
        entry_bound: i64,
        /// csv | json | table
        #[arg(long, default_value = "csv")]
        format: OutputFormat,
        /// Report wall-clock times (breaks byte-for-byte reproducibility)
        #[arg(long)]
        timings: bool,
        /// Write the record stream to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Comma-separated prime pool override for the modular pipeline
        #[arg(long)]
        prime_pool: Option<String>,
    },
    /// Print the modulus plan for a matrix file or a shape
    Plan {
        /// Matrix file; alternatively give --n/--s/--p/--l
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long)]
        n: Option<u64>,
        /// Variable count
        #[arg(long)]
        s: Option<u64>,
        /// Degree per variable
        #[arg(long)]
        p: Option<u64>,
        /// Coefficient length in words
        #[arg(long)]
        l: Option<u64>,
        #[arg(long, default_value_t = 63)]
        word_bits: u32,
        /// Comma-separated prime pool override
        #[arg(long)]
        prime_pool: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Det { file, algo, r, ring, prime_pool } => {
            commands::run_det(&file, &algo, &r, &ring, &prime_pool)
        }
        Cmd::Counts { n, algo, r, seed, format, timings, out } => {
            commands::run_counts(&n, &algo, &r, seed, format, timings, &out)
        }
        Cmd::Bench {
            n,
            m,
            algo,
            ring,
            seed,
            reps,
            r,
            entry_bound,
            format,
            timings,
            out,
            prime_pool,
        } => commands::run_bench(&BenchConfig {
            n,
            m: m.unwrap_or(n),
            algo,
            ring,
            seed,
            reps,
            r,
            entry_bound,
            format,
            timings,
            out,
            prime_pool,
        }),
        Cmd::Plan { file, n, s, p, l, word_bits, prime_pool } => {
            commands::run_plan(&PlanArgs { file, n, s, p, l, word_bits, prime_pool })
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.code() as u8)
        }
    }
}
