//! Block-parallel scans for non-representable numbers, with resumable
//! checkpoints.
//!
//! A range is cut into fixed-size blocks. Workers process blocks
//! independently; results are merged strictly in block order, and the
//! checkpoint sink sees the state after every merged block. Output depends
//! only on the range and never on the worker count.

mod checkpoint;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rayon::prelude::*;

pub use checkpoint::{
    decode_checkpoint, encode_checkpoint, format_zero_list, parse_zero_list, read_checkpoint, read_zero_list,
    write_zero_list, CheckpointSink, FileCheckpoint, MemoryCheckpoints, NoCheckpoint,
};

use crate::arithmetic::{spf_segment, DEFAULT_SEGMENT_LIMIT};
use crate::error::{Error, Result};
use crate::representations::{r3_witness, r4_witness, SolutionTuple, R3_LIMIT, R4_LIMIT};
use crate::residue_sieve::{covered_residues, ResidueCover};

pub const DEFAULT_BLOCK_SIZE: u64 = 1 << 20;

/// Largest prime whose residue cover is used by the prefilter.
const PREFILTER_MAX_PRIME: u64 = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScanKind {
    /// `n` with `R3(n) = 0`.
    R3Zero,
    /// `n` with `R4(n) = 0`.
    R4Zero,
}

impl ScanKind {
    fn limit(self) -> u64 {
        match self {
            ScanKind::R3Zero => R3_LIMIT,
            ScanKind::R4Zero => R4_LIMIT,
        }
    }
}

impl fmt::Display for ScanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScanKind::R3Zero => "r3zero",
            ScanKind::R4Zero => "r4zero",
        })
    }
}

impl FromStr for ScanKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "r3zero" | "r3" => Ok(ScanKind::R3Zero),
            "r4zero" | "r4" => Ok(ScanKind::R4Zero),
            other => Err(Error::Format(format!("unknown scan kind {other:?}"))),
        }
    }
}

/// Progress of a scan over `[lo, hi]`. Everything below `next` is done.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanState {
    pub kind: ScanKind,
    pub lo: u64,
    pub hi: u64,
    pub next: u64,
    pub zeros: Vec<u64>,
    pub block_size: u64,
}

impl ScanState {
    pub fn new(kind: ScanKind, lo: u64, hi: u64, block_size: u64) -> Result<Self> {
        if lo == 0 || lo > hi {
            return Err(Error::InvalidArgument(format!(
                "scan range needs 1 <= lo <= hi, got {lo}..{hi}"
            )));
        }
        if hi > kind.limit() {
            return Err(Error::capacity("scan upper end", hi, kind.limit()));
        }
        if block_size == 0 {
            return Err(Error::InvalidArgument("block size must be positive".into()));
        }
        if block_size > DEFAULT_SEGMENT_LIMIT {
            return Err(Error::capacity("block size", block_size, DEFAULT_SEGMENT_LIMIT));
        }
        Ok(ScanState {
            kind,
            lo,
            hi,
            next: lo,
            zeros: Vec::new(),
            block_size,
        })
    }

    pub fn is_complete(&self) -> bool {
        self.next > self.hi
    }

    /// Checks the structural invariants of a state read from disk.
    pub fn validate(&self) -> Result<()> {
        let bad = |why: String| Err(Error::Format(why));
        if self.lo == 0 || self.lo > self.hi {
            return bad(format!("invalid range {}..{}", self.lo, self.hi));
        }
        if self.hi > self.kind.limit() {
            return bad(format!("range end {} exceeds {}", self.hi, self.kind.limit()));
        }
        if self.block_size == 0 || self.block_size > DEFAULT_SEGMENT_LIMIT {
            return bad(format!("invalid block size {}", self.block_size));
        }
        if self.next < self.lo || self.next > self.hi + 1 {
            return bad(format!("next={} outside {}..={}", self.next, self.lo, self.hi + 1));
        }
        if self.zeros.windows(2).any(|w| w[0] >= w[1]) {
            return bad("zeros are not strictly ascending".into());
        }
        if self.zeros.iter().any(|&z| z < self.lo || z >= self.next) {
            return bad("zeros outside the completed part of the range".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanOptions {
    pub workers: usize,
    /// Skip `n` that fall in a forced residue class of a small prime.
    pub prefilter: bool,
    /// Stop after this many blocks, leaving the scan incomplete.
    pub max_blocks: Option<u64>,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            workers: default_workers(),
            prefilter: true,
            max_blocks: None,
        }
    }
}

impl ScanOptions {
    pub fn with_workers(workers: usize) -> Self {
        ScanOptions {
            workers,
            ..Default::default()
        }
    }
}

pub fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn prefilter_covers() -> &'static [ResidueCover] {
    static COVERS: OnceLock<Vec<ResidueCover>> = OnceLock::new();
    COVERS.get_or_init(|| {
        crate::arithmetic::primes_up_to(PREFILTER_MAX_PRIME)
            .into_iter()
            .map(|p| covered_residues(p).expect("small moduli factor"))
            .filter(|c| !c.covered.is_empty())
            .collect()
    })
}

/// Zeros of the chosen kind in `[lo, hi]`.
fn scan_block(kind: ScanKind, lo: u64, hi: u64, prefilter: bool) -> Result<Vec<u64>> {
    let mut zeros = Vec::new();
    match kind {
        ScanKind::R3Zero => {
            // 1, 2 and 3 lie below the minimum f3(1,1,1) = 4.
            zeros.extend((lo..=hi.min(3)).filter(|&n| n >= 1));
            if hi < 4 {
                return Ok(zeros);
            }
            let seg = spf_segment(lo.max(4), hi)?;
            let covers = if prefilter { prefilter_covers() } else { &[] };
            for (n, spf) in seg.iter() {
                // Composite n = (x + 1)(y + 1) has the solution (x, y, 1),
                // which also covers every even n >= 4.
                if spf != n {
                    continue;
                }
                if covers.iter().any(|c| c.covers(n)) {
                    continue;
                }
                if r3_witness(n)?.is_none() {
                    zeros.push(n);
                }
            }
        }
        ScanKind::R4Zero => {
            for n in lo..=hi {
                // Odd n >= 5 has (1, 1, 1, (n - 3) / 2).
                if n >= 5 && n % 2 == 1 {
                    continue;
                }
                if r4_witness(n)?.is_none() {
                    zeros.push(n);
                }
            }
        }
    }
    Ok(zeros)
}

/// Scans `[lo, hi]` from the beginning.
pub fn scan(
    kind: ScanKind,
    lo: u64,
    hi: u64,
    block_size: u64,
    options: &ScanOptions,
    sink: &mut dyn CheckpointSink,
) -> Result<ScanState> {
    resume(ScanState::new(kind, lo, hi, block_size)?, options, sink)
}

/// Continues a scan from `state.next`. A complete state is returned as is.
pub fn resume(mut state: ScanState, options: &ScanOptions, sink: &mut dyn CheckpointSink) -> Result<ScanState> {
    state.validate()?;
    if state.is_complete() {
        return Ok(state);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.workers.max(1))
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot start worker pool: {e}")))?;

    let mut budget = options.max_blocks.unwrap_or(u64::MAX);
    while !state.is_complete() && budget > 0 {
        let wave = (options.workers.max(1) as u64).min(budget);
        let blocks: Vec<(u64, u64)> = (0..wave)
            .map(|i| state.next.saturating_add(i.saturating_mul(state.block_size)))
            .take_while(|&start| start <= state.hi)
            .map(|start| (start, start.saturating_add(state.block_size - 1).min(state.hi)))
            .collect();
        let results: Vec<Result<Vec<u64>>> = pool.install(|| {
            blocks
                .par_iter()
                .map(|&(lo, hi)| scan_block(state.kind, lo, hi, options.prefilter))
                .collect()
        });
        for ((_, hi), zeros) in blocks.iter().zip(results) {
            state.zeros.extend(zeros?);
            state.next = hi + 1;
            sink.record(&state)?;
            budget -= 1;
        }
    }
    Ok(state)
}

/// U3(N) or U4(N): how many `1 <= n <= N` have no representation.
pub fn u_count(kind: ScanKind, n: u64) -> Result<u64> {
    let state = scan(
        kind,
        1,
        n,
        DEFAULT_BLOCK_SIZE,
        &ScanOptions::default(),
        &mut NoCheckpoint,
    )?;
    Ok(state.zeros.len() as u64)
}

/// Outcome of testing `R4(p + 1) > 0` for one `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftCheck {
    pub p: u64,
    pub witness: Option<SolutionTuple>,
}

impl ShiftCheck {
    pub fn passed(&self) -> bool {
        self.witness.is_some()
    }
}

/// For each `p`, searches for a representation of `p + 1` by `f4`.
pub fn verify_shift(zeros: &[u64]) -> Result<Vec<ShiftCheck>> {
    zeros
        .par_iter()
        .map(|&p| {
            Ok(ShiftCheck {
                p,
                witness: r4_witness(p + 1)?,
            })
        })
        .collect()
}
