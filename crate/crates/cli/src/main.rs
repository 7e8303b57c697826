//! `sppk`: command-line front end for sppk-core.
//!
//! Exit codes: 0 success, 1 usage, 2 capacity exceeded, 3 I/O or
//! checkpoint format error.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sppk_core::stats::AvgKind;
use sppk_core::{CoverMode, Error, ScanKind};

#[derive(Debug, Parser)]
#[command(
    name = "sppk",
    version,
    about = "Sum-plus-product representation counts and zero searches"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// R3(n): ordered solutions of xyz + x + y + z = n.
    R3(RepArgs),
    /// R4(n): ordered solutions of xyzw + x + y + z + w = n.
    R4(RepArgs),
    /// S3(n): ordered solutions of xy + yz + zx + 1 = n.
    S3(RepArgs),
    /// Scan a range for non-representable n.
    Scan(ScanArgs),
    /// Continue a scan from a checkpoint file.
    Resume(ResumeArgs),
    /// U3(N) or U4(N).
    Count(CountArgs),
    /// Residues mod q that force R3(n) > 0.
    Residues(ResiduesArgs),
    /// Q(X) and the large-sieve bound on U3(N).
    Qbound(QboundArgs),
    /// Average order of R3 or R4.
    Avg(AvgArgs),
    /// Short-interval sums of tau_k over a polynomial.
    Tausum(TausumArgs),
    /// Record values of R3 with fixed-coordinate counts.
    Omega(OmegaArgs),
    /// Check R4(p + 1) > 0 for a list of R3 zeros.
    Shiftcheck(ShiftcheckArgs),
}

#[derive(Debug, Args)]
struct RepArgs {
    n: u64,
    /// Print every canonical solution.
    #[arg(long)]
    list: bool,
}

#[derive(Debug, Args)]
struct WorkerArgs {
    /// Worker threads (default: $SPPK_THREADS, else logical cores).
    #[arg(long)]
    threads: Option<usize>,
    /// Stop after this many blocks (leaves the scan resumable).
    #[arg(long, value_name = "BLOCKS")]
    stop_after: Option<u64>,
}

#[derive(Debug, Args)]
struct ScanArgs {
    #[arg(long, value_parser = parse_kind)]
    kind: ScanKind,
    #[arg(long, default_value_t = 1)]
    from: u64,
    #[arg(long)]
    to: u64,
    /// Block size, the unit of checkpointing.
    #[arg(long, default_value_t = sppk_core::search::DEFAULT_BLOCK_SIZE)]
    block: u64,
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Zero-list output file, written when the scan completes.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Disable the residue-cover prefilter.
    #[arg(long)]
    no_prefilter: bool,
    /// Compare the result with the published zero list.
    #[arg(long)]
    compare_published: bool,
    #[command(flatten)]
    workers: WorkerArgs,
}

#[derive(Debug, Args)]
struct ResumeArgs {
    #[arg(long)]
    checkpoint: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    no_prefilter: bool,
    #[command(flatten)]
    workers: WorkerArgs,
}

#[derive(Debug, Args)]
struct CountArgs {
    #[arg(long, value_parser = parse_kind)]
    kind: ScanKind,
    #[arg(long)]
    to: u64,
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Debug, Args)]
struct ResiduesArgs {
    #[arg(long)]
    q: u64,
}

#[derive(Debug, Args)]
struct QboundArgs {
    #[arg(long = "N")]
    n: u64,
    /// Sieve parameter (default: floor(sqrt(N))).
    #[arg(long = "X")]
    x: Option<u64>,
    #[arg(long, default_value = "enumerated", value_parser = parse_mode)]
    mode: CoverMode,
    /// Also sift the class 0 mod p.
    #[arg(long)]
    zero_class: bool,
    /// Compute U3(N) exactly and compare.
    #[arg(long)]
    check: bool,
}

#[derive(Debug, Args)]
struct AvgArgs {
    #[arg(long, value_parser = parse_avg_kind)]
    kind: AvgKind,
    /// One or more N, comma separated.
    #[arg(long = "N", value_delimiter = ',', required = true)]
    n: Vec<u64>,
    /// Skip the per-n cross-check.
    #[arg(long)]
    lattice_only: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct TausumArgs {
    /// Terms `coeff:deg_x,deg_y` separated by `;`, e.g. `1:1,0;-1:0,1` for x - y.
    #[arg(long, allow_hyphen_values = true)]
    poly: String,
    #[arg(long)]
    k: u32,
    /// One or more N, comma separated.
    #[arg(long = "N", value_delimiter = ',', required = true)]
    n: Vec<u64>,
    #[arg(long = "M")]
    m: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct OmegaArgs {
    #[arg(long = "N")]
    n: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ShiftcheckArgs {
    /// Zero-list file of R3 zeros.
    #[arg(long, conflicts_with = "to")]
    zeros: Option<PathBuf>,
    /// Scan R3 zeros in [2, TO] first.
    #[arg(long)]
    to: Option<u64>,
    #[arg(long)]
    threads: Option<usize>,
}

fn parse_kind(s: &str) -> Result<ScanKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_mode(s: &str) -> Result<CoverMode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_avg_kind(s: &str) -> Result<AvgKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Capacity { .. } => 2,
        Error::Io(_) | Error::Format(_) | Error::CheckpointWrite(_) => 3,
        Error::InvalidArgument(_) | Error::UnusableParameters(_) => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
