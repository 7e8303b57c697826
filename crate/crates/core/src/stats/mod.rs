//! Empirical checks of average orders, short-interval divisor sums, and
//! record values of R3.

pub mod csv;
mod poly;

use rayon::prelude::*;

pub use poly::{tau_interval_sum, PolySpec, TauIntervalReport};

use crate::arithmetic::{divisor_count, tau_k};
use crate::error::{Error, Result};
use crate::representations::{family_count, paper_family_bound, r3, r3_counts_up_to, r4};
use csv::{fmt_sig6, render};

pub const SUM_R3_LIMIT: u64 = 10_000_000;
pub const SUM_R4_LIMIT: u64 = 100_000;
pub const SUM_D3_LIMIT: u64 = 100_000_000;
pub const OMEGA_LIMIT: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AvgKind {
    R3,
    R4,
}

impl std::str::FromStr for AvgKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "r3" => Ok(AvgKind::R3),
            "r4" => Ok(AvgKind::R4),
            other => Err(Error::InvalidArgument(format!("unknown kind {other:?}"))),
        }
    }
}

impl AvgKind {
    /// Main term of the mean: `log^2 N / 2` or `log^3 N / 6`.
    pub fn asymptotic(self, n: u64) -> f64 {
        let l = (n as f64).ln();
        match self {
            AvgKind::R3 => l * l / 2.0,
            AvgKind::R4 => l * l * l / 6.0,
        }
    }

    fn limit(self) -> u64 {
        match self {
            AvgKind::R3 => SUM_R3_LIMIT,
            AvgKind::R4 => SUM_R4_LIMIT,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AvgReport {
    pub kind: AvgKind,
    pub n: u64,
    /// `sum_{n <= N} R(n)` from counting lattice points under the form.
    pub total: u64,
    /// The same sum from the per-`n` counter, when it was computed.
    pub per_n_total: Option<u64>,
    /// `total / (N * asymptotic(N))`.
    pub normalized: f64,
}

impl AvgReport {
    /// True when both computation paths were run and agree.
    pub fn paths_agree(&self) -> bool {
        self.per_n_total == Some(self.total)
    }
}

/// Summatory count by columns: for each leading tuple, the number of valid
/// last coordinates is a single floor division.
pub fn lattice_total(kind: AvgKind, n: u64) -> Result<u64> {
    if n > kind.limit() {
        return Err(Error::capacity("average-order N", n, kind.limit()));
    }
    Ok(match kind {
        AvgKind::R3 => (1..=(n / 2).saturating_sub(1))
            .into_par_iter()
            .map(|x| {
                (1..)
                    .take_while(|&y| (x + 1) * (y + 1) <= n)
                    .map(|y| (n - x - y) / (x * y + 1))
                    .sum::<u64>()
            })
            .sum(),
        AvgKind::R4 => (1..=n.saturating_sub(4))
            .into_par_iter()
            .map(|x| {
                let mut t = 0;
                for y in (1..).take_while(|&y| x * y + x + y + 2 <= n) {
                    for z in (1..).take_while(|&z| x * y * z + 1 + x + y + z <= n) {
                        t += (n - x - y - z) / (x * y * z + 1);
                    }
                }
                t
            })
            .sum(),
    })
}

fn per_n_total(kind: AvgKind, n: u64) -> Result<u64> {
    (1..=n)
        .into_par_iter()
        .map(|m| match kind {
            AvgKind::R3 => r3(m).map(|r| r.ordered_count),
            AvgKind::R4 => r4(m).map(|r| r.ordered_count),
        })
        .try_reduce(|| 0, |a, b| Ok(a + b))
}

fn report(kind: AvgKind, n: u64, total: u64, per_n_total: Option<u64>) -> AvgReport {
    AvgReport {
        kind,
        n,
        total,
        per_n_total,
        normalized: total as f64 / (n as f64 * kind.asymptotic(n)),
    }
}

/// `sum_{n <= N} R(n)` by both the per-`n` counter and lattice counting.
pub fn sum_r(kind: AvgKind, n: u64) -> Result<AvgReport> {
    let total = lattice_total(kind, n)?;
    Ok(report(kind, n, total, Some(per_n_total(kind, n)?)))
}

/// Lattice path only; usable at sizes where per-`n` counting is slow.
pub fn sum_r_lattice(kind: AvgKind, n: u64) -> Result<AvgReport> {
    Ok(report(kind, n, lattice_total(kind, n)?, None))
}

// sum_{b <= m} floor(m / b), by the hyperbola trick.
fn divisor_summatory(m: u64) -> u64 {
    let r = m.isqrt();
    2 * (1..=r).map(|b| m / b).sum::<u64>() - r * r
}

/// `sum_{m <= N} tau_3(m) = sum_{a} D(floor(N / a))`, grouping `a` with
/// equal quotients.
pub fn sum_d3(n: u64) -> Result<u64> {
    if n > SUM_D3_LIMIT {
        return Err(Error::capacity("sum_d3 N", n, SUM_D3_LIMIT));
    }
    let mut total = 0;
    let mut a = 1;
    while a <= n {
        let q = n / a;
        let last = n / q;
        total += (last - a + 1) * divisor_summatory(q);
        a = last + 1;
    }
    Ok(total)
}

/// One record-setting `n` for R3.
#[derive(Debug, Clone, PartialEq)]
pub struct OmegaRow {
    pub n: u64,
    pub r3: u64,
    pub d: u64,
    pub family1: u64,
    pub family2: u64,
    /// The published bound `6d(n) - 6`, reported next to the exact family count.
    pub paper_bound: i64,
    /// `log R3(n) * log log n / log n`.
    pub exponent_proxy: f64,
}

/// Every `n <= N` where `R3(n)` exceeds all earlier values.
pub fn omega_report(n: u64) -> Result<Vec<OmegaRow>> {
    if n > OMEGA_LIMIT {
        return Err(Error::capacity("omega report N", n, OMEGA_LIMIT));
    }
    let counts = r3_counts_up_to(n)?;
    let mut best = 0;
    let mut rows = Vec::new();
    for (m, &c) in counts.iter().enumerate() {
        if c <= best {
            continue;
        }
        best = c;
        let m = m as u64;
        let ln = (m as f64).ln();
        rows.push(OmegaRow {
            n: m,
            r3: c,
            d: divisor_count(m)?,
            family1: family_count(m, 1)?,
            family2: family_count(m, 2)?,
            paper_bound: paper_family_bound(m)?,
            exponent_proxy: (c as f64).ln() * ln.ln() / ln,
        });
    }
    Ok(rows)
}

pub fn avg_csv(reports: &[AvgReport]) -> String {
    render(
        &["kind", "N", "total", "per_n_total", "normalized"],
        reports.iter().map(|r| {
            vec![
                match r.kind {
                    AvgKind::R3 => "r3".into(),
                    AvgKind::R4 => "r4".into(),
                },
                r.n.to_string(),
                r.total.to_string(),
                r.per_n_total.map_or_else(String::new, |t| t.to_string()),
                fmt_sig6(r.normalized),
            ]
        }),
    )
}

pub fn omega_csv(rows: &[OmegaRow]) -> String {
    render(
        &[
            "n",
            "r3",
            "d",
            "family1",
            "family2",
            "paper_6d_minus_6",
            "exponent_proxy",
        ],
        rows.iter().map(|r| {
            vec![
                r.n.to_string(),
                r.r3.to_string(),
                r.d.to_string(),
                r.family1.to_string(),
                r.family2.to_string(),
                r.paper_bound.to_string(),
                fmt_sig6(r.exponent_proxy),
            ]
        }),
    )
}

pub fn tau_csv(poly: &PolySpec, reports: &[TauIntervalReport]) -> String {
    render(
        &["poly", "k", "N", "M", "raw", "normalized"],
        reports.iter().map(|r| {
            vec![
                format!("\"{poly}\""),
                r.k.to_string(),
                r.n.to_string(),
                r.m.to_string(),
                r.raw.to_string(),
                fmt_sig6(r.normalized),
            ]
        }),
    )
}

/// `sum_{m <= N} tau_3(m)` by factoring every `m`; test oracle for [`sum_d3`].
pub fn sum_d3_naive(n: u64) -> u64 {
    (1..=n as i64).map(|m| tau_k(3, m)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sum_r_examples() {
        let r = sum_r(AvgKind::R3, 4).unwrap();
        assert_eq!(r.total, 1);
        assert!(r.paths_agree());
        let r = sum_r(AvgKind::R3, 8).unwrap();
        assert_eq!(r.total, 7);
        assert!(r.paths_agree());
        assert_eq!(sum_r(AvgKind::R4, 7).unwrap().total, 5);
        assert!(sum_r(AvgKind::R3, SUM_R3_LIMIT + 1).is_err());
    }

    #[test]
    fn sum_d3_examples() {
        assert_eq!(sum_d3(1).unwrap(), 1);
        assert_eq!(sum_d3(4).unwrap(), 13);
        for n in [10, 99, 1000, 4321] {
            assert_eq!(sum_d3(n).unwrap(), sum_d3_naive(n));
        }
    }

    #[test]
    fn omega_small() {
        let rows = omega_report(4).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!((rows[0].n, rows[0].r3), (4, 1));

        let rows = omega_report(100).unwrap();
        assert!(rows.windows(2).all(|w| w[0].r3 < w[1].r3 && w[0].n < w[1].n));
        for row in &rows {
            assert!(row.r3 >= row.family1);
            assert!(row.r3 >= row.family2);
        }
    }

    #[test]
    fn csv_layout() {
        let r = sum_r_lattice(AvgKind::R3, 8).unwrap();
        let s = avg_csv(&[r]);
        assert!(s.starts_with("kind,N,total,per_n_total,normalized\nr3,8,7,,0.404711\n"));
    }
}
