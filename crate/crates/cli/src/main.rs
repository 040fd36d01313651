//! `artin`: command-line front end for the homology pipeline.
//!
//! Exit codes: 0 ok, 1 verification or table failure, 2 usage error,
//! 3 refused by a guard. `ARTIN_THREADS` caps the worker pool.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "artin", version, about = "Local homology of Artin groups via precise Morse matchings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Which Coxeter graph to work on: a built-in type or a matrix file.
#[derive(Args, Debug, Clone)]
struct Target {
    /// Built-in family (`A`, `B`, `D`, `E`, `F`, `H`, `I2`, `tA` … `tI`), or a
    /// full name such as `tD4` or `I2(5)` when `--rank` is omitted.
    #[arg(long = "type", value_name = "NAME", conflicts_with = "matrix")]
    type_name: Option<String>,
    /// Rank parameter (`m` for `I2`).
    #[arg(long)]
    rank: Option<u32>,
    /// Coxeter matrix file: first line `n`, then `n` rows, `inf` for ∞.
    #[arg(long, value_name = "FILE")]
    matrix: Option<std::path::PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dump K_W: simplices, Poincaré factorizations, weights and C⁰ boundaries.
    Complex {
        #[command(flatten)]
        target: Target,
        /// Also report φ_d-weights.
        #[arg(long)]
        d: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Build and dump a family matching (A, D, tB, tD, I2).
    Matching {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        d: u32,
        #[arg(long, default_value_t = 0)]
        f: i64,
        #[arg(long, default_value_t = 0)]
        g: i64,
        #[arg(long)]
        json: bool,
    },
    /// Search for a precise matching, or certify that none exists.
    Search {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        d: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Candidate matchings to try.
        #[arg(long, default_value_t = 5000)]
        budget: u64,
        /// Enumerate every weighted matching for a nonexistence certificate.
        #[arg(long)]
        prove_absence: bool,
        /// Most equal-weight covering pairs the enumeration accepts.
        #[arg(long, default_value_t = 40)]
        cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run the acyclic / weighted / precise checks on a matching.
    Verify {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        d: u32,
        #[arg(long, default_value_t = 0)]
        f: i64,
        #[arg(long, default_value_t = 0)]
        g: i64,
        /// Matching file as written by `matching --json` or `search --json`;
        /// without it the family matching is checked.
        #[arg(long, value_name = "FILE")]
        matching: Option<std::path::PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Compute H_*(X_W; R).
    Homology {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Method::Matching)]
        method: Method,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5000)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Reproduce the reference tables, one PASS/FAIL line per cell.
    Tables {
        /// `tD`, `exceptional-finite`, `exceptional-affine`, `critical` or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    Matching,
    Snf,
    Both,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("ARTIN_THREADS").ok().and_then(|s| s.parse().ok()) {
        // Only fails if a pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match commands::run(cli.command) {
        Ok(status) => status.into(),
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code().into()
        }
    }
}
