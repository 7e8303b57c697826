use std::fs;
use std::path::Path;

use sppk_core::reference::{adjudicate_r4, R3_ZERO_PREFIX};
use sppk_core::representations::{r3, r4, s3};
use sppk_core::residue_sieve::{covered_residues, sieve_bound_with};
use sppk_core::search::{
    self, read_checkpoint, read_zero_list, verify_shift, write_zero_list, CheckpointSink, FileCheckpoint, NoCheckpoint,
    ScanOptions,
};
use sppk_core::stats::{self, csv::fmt_sig6, PolySpec};
use sppk_core::{Error, RepResult, Result, ScanKind, ScanState};

use crate::{
    AvgArgs, Command, CountArgs, OmegaArgs, QboundArgs, RepArgs, ResiduesArgs, ResumeArgs, ScanArgs, ShiftcheckArgs,
    TausumArgs, WorkerArgs,
};

pub fn run(command: Command) -> Result<()> {
    match command {
        Command::R3(a) => representation("R3", a, r3),
        Command::R4(a) => representation("R4", a, r4),
        Command::S3(a) => representation("S3", a, s3),
        Command::Scan(a) => scan(a),
        Command::Resume(a) => resume(a),
        Command::Count(a) => count(a),
        Command::Residues(a) => residues(a),
        Command::Qbound(a) => qbound(a),
        Command::Avg(a) => avg(a),
        Command::Tausum(a) => tausum(a),
        Command::Omega(a) => omega(a),
        Command::Shiftcheck(a) => shiftcheck(a),
    }
}

fn workers(explicit: Option<usize>) -> Result<usize> {
    if let Some(n) = explicit {
        return Ok(n.max(1));
    }
    match std::env::var("SPPK_THREADS") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(|n| n.max(1))
            .map_err(|_| Error::InvalidArgument(format!("SPPK_THREADS must be a positive integer, got {v:?}"))),
        Err(_) => Ok(search::default_workers()),
    }
}

fn scan_options(w: &WorkerArgs, no_prefilter: bool) -> Result<ScanOptions> {
    Ok(ScanOptions {
        workers: workers(w.threads)?,
        prefilter: !no_prefilter,
        max_blocks: w.stop_after,
    })
}

fn write_output(path: &Path, text: &str) -> Result<()> {
    Ok(fs::write(path, text)?)
}

fn representation(name: &str, a: RepArgs, f: fn(u64) -> Result<RepResult>) -> Result<()> {
    let r = f(a.n)?;
    println!("{name}({}) = {}", r.n, r.ordered_count);
    if a.list {
        for s in &r.solutions {
            println!("{s} x{}", s.permutation_count());
        }
    }
    Ok(())
}

fn finish(state: &ScanState, out: Option<&Path>) -> Result<()> {
    println!(
        "kind={} range={}..{} zeros={} next={}",
        state.kind,
        state.lo,
        state.hi,
        state.zeros.len(),
        state.next
    );
    if !state.is_complete() {
        println!("status=interrupted");
        return Ok(());
    }
    println!("status=complete");
    if let Some(last) = state.zeros.last() {
        println!("last_zero={last}");
    }
    if let Some(path) = out {
        write_zero_list(path, &state.zeros)?;
    }
    Ok(())
}

fn run_scan(initial: ScanState, opts: &ScanOptions, checkpoint: Option<&Path>) -> Result<ScanState> {
    let mut file_sink;
    let mut none = NoCheckpoint;
    let sink: &mut dyn CheckpointSink = match checkpoint {
        Some(p) => {
            file_sink = FileCheckpoint::new(p);
            &mut file_sink
        }
        None => &mut none,
    };
    search::resume(initial, opts, sink)
}

fn scan(a: ScanArgs) -> Result<()> {
    let opts = scan_options(&a.workers, a.no_prefilter)?;
    let state = ScanState::new(a.kind, a.from, a.to, a.block)?;
    let state = run_scan(state, &opts, a.checkpoint.as_deref())?;
    finish(&state, a.out.as_deref())?;
    if a.compare_published && state.is_complete() {
        compare_published(&state)?;
    }
    Ok(())
}

fn compare_published(state: &ScanState) -> Result<()> {
    match state.kind {
        ScanKind::R4Zero if state.lo == 1 => print!("{}", adjudicate_r4(&state.zeros, state.hi)?.render()),
        ScanKind::R4Zero => println!("published comparison needs --from 1"),
        ScanKind::R3Zero => {
            let expected: Vec<u64> = R3_ZERO_PREFIX
                .iter()
                .copied()
                .filter(|&p| p >= state.lo && p <= state.hi)
                .collect();
            let got: Vec<u64> = state.zeros.iter().copied().filter(|z| (2..=113).contains(z)).collect();
            let verdict = if got == expected { "matches" } else { "differs from" };
            println!("computed zeros up to 113 {verdict} the published prefix");
        }
    }
    Ok(())
}

fn resume(a: ResumeArgs) -> Result<()> {
    let opts = scan_options(&a.workers, a.no_prefilter)?;
    let state = read_checkpoint(&a.checkpoint)?;
    let state = run_scan(state, &opts, Some(&a.checkpoint))?;
    finish(&state, a.out.as_deref())
}

fn count(a: CountArgs) -> Result<()> {
    let opts = ScanOptions::with_workers(workers(a.threads)?);
    let state = search::scan(a.kind, 1, a.to, search::DEFAULT_BLOCK_SIZE, &opts, &mut NoCheckpoint)?;
    let name = match a.kind {
        ScanKind::R3Zero => "U3",
        ScanKind::R4Zero => "U4",
    };
    println!("{name}({}) = {}", a.to, state.zeros.len());
    Ok(())
}

fn residues(a: ResiduesArgs) -> Result<()> {
    let c = covered_residues(a.q)?;
    let list: Vec<String> = c.covered.iter().map(u64::to_string).collect();
    println!("{}", list.join(" "));
    println!("classes={} formula={}", c.class_count(), c.formula_value);
    Ok(())
}

fn qbound(a: QboundArgs) -> Result<()> {
    let x = a.x.unwrap_or_else(|| a.n.isqrt());
    let e = sieve_bound_with(a.n, x, a.mode, a.zero_class)?;
    println!(
        "N={} X={} mode={}{}",
        e.n,
        e.x,
        e.mode,
        if a.zero_class { " zero_class" } else { "" }
    );
    let exact = e.q.to_string();
    if exact.len() <= 40 {
        println!("Q={} ({exact})", fmt_sig6(e.q_f64()));
    } else {
        println!("Q={}", fmt_sig6(e.q_f64()));
    }
    println!("bound={}", fmt_sig6(e.bound));
    println!("u3_upper={}", fmt_sig6(e.u3_upper()));
    if a.check {
        let opts = ScanOptions::default();
        let u3 = search::scan(
            ScanKind::R3Zero,
            1,
            a.n,
            search::DEFAULT_BLOCK_SIZE,
            &opts,
            &mut NoCheckpoint,
        )?
        .zeros
        .len();
        let holds = (u3 as f64) <= e.u3_upper();
        println!("U3({})={u3} holds={holds}", a.n);
    }
    Ok(())
}

fn emit_csv(csv: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => write_output(path, csv),
        None => {
            print!("{csv}");
            Ok(())
        }
    }
}

fn avg(a: AvgArgs) -> Result<()> {
    let reports =
        a.n.iter()
            .map(|&n| {
                if a.lattice_only {
                    stats::sum_r_lattice(a.kind, n)
                } else {
                    stats::sum_r(a.kind, n)
                }
            })
            .collect::<Result<Vec<_>>>()?;
    for r in &reports {
        if r.per_n_total.is_some() && !r.paths_agree() {
            eprintln!("warning: N={} lattice {} != per-n {:?}", r.n, r.total, r.per_n_total);
        }
    }
    emit_csv(&stats::avg_csv(&reports), a.out.as_deref())
}

fn tausum(a: TausumArgs) -> Result<()> {
    let poly: PolySpec = a.poly.parse()?;
    let reports =
        a.n.iter()
            .map(|&n| stats::tau_interval_sum(&poly, a.k, n, a.m))
            .collect::<Result<Vec<_>>>()?;
    emit_csv(&stats::tau_csv(&poly, &reports), a.out.as_deref())
}

fn omega(a: OmegaArgs) -> Result<()> {
    let rows = stats::omega_report(a.n)?;
    emit_csv(&stats::omega_csv(&rows), a.out.as_deref())
}

fn shiftcheck(a: ShiftcheckArgs) -> Result<()> {
    let zeros = match (a.zeros, a.to) {
        (Some(path), _) => read_zero_list(path)?,
        (None, Some(to)) => {
            let opts = ScanOptions::with_workers(workers(a.threads)?);
            search::scan(
                ScanKind::R3Zero,
                2,
                to,
                search::DEFAULT_BLOCK_SIZE,
                &opts,
                &mut NoCheckpoint,
            )?
            .zeros
        }
        (None, None) => return Err(Error::InvalidArgument("shiftcheck needs --zeros or --to".into())),
    };
    let checks = verify_shift(&zeros)?;
    let mut failures = 0;
    for c in &checks {
        match &c.witness {
            Some(w) => println!("p={} R4({})>0 witness={w}", c.p, c.p + 1),
            None => {
                failures += 1;
                println!("p={} R4({})=0 FAIL", c.p, c.p + 1);
            }
        }
    }
    println!("checked={} failures={failures}", checks.len());
    Ok(())
}
