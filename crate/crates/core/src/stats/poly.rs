//! Integer polynomials in two variables and short-interval τ_k sums over them.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::arithmetic::tau_k;
use crate::error::{Error, Result};

/// `sum coeff * x^deg_x * y^deg_y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySpec {
    pub terms: Vec<(i64, u32, u32)>,
}

impl PolySpec {
    pub fn new(terms: Vec<(i64, u32, u32)>) -> Self {
        PolySpec { terms }
    }

    /// Exact value, or `None` on `i128` overflow.
    pub fn eval(&self, x: i64, y: i64) -> Option<i128> {
        self.terms.iter().try_fold(0i128, |acc, &(c, dx, dy)| {
            let px = (x as i128).checked_pow(dx)?;
            let py = (y as i128).checked_pow(dy)?;
            acc.checked_add((c as i128).checked_mul(px)?.checked_mul(py)?)
        })
    }
}

/// Parses the compact form `coeff:deg_x,deg_y;...`, e.g. `1:1,0;-1:0,1` for `x - y`.
impl FromStr for PolySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("malformed polynomial {s:?}"));
        let terms = s
            .split(';')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                let (c, degs) = t.split_once(':').ok_or_else(bad)?;
                let (dx, dy) = degs.split_once(',').ok_or_else(bad)?;
                Ok((
                    c.trim().parse().map_err(|_| bad())?,
                    dx.trim().parse().map_err(|_| bad())?,
                    dy.trim().parse().map_err(|_| bad())?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        if terms.is_empty() {
            return Err(bad());
        }
        Ok(PolySpec { terms })
    }
}

impl fmt::Display for PolySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (c, dx, dy)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{c}:{dx},{dy}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TauIntervalReport {
    pub k: u32,
    pub n: u64,
    pub m: u64,
    pub raw: u128,
    /// `raw / (M (log N)^(k-1))`.
    pub normalized: f64,
}

/// `sum over N - M < n <= N of tau_k(f(N, n))`, with non-positive values
/// contributing 0.
pub fn tau_interval_sum(f: &PolySpec, k: u32, n: u64, m: u64) -> Result<TauIntervalReport> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be >= 1".into()));
    }
    if m == 0 || m >= n {
        return Err(Error::InvalidArgument(format!("need 1 <= M < N, got N={n}, M={m}")));
    }
    if n > i64::MAX as u64 {
        return Err(Error::capacity("tausum N", n, i64::MAX as u64));
    }
    let big_n = n as i64;
    let raw = (n - m + 1..=n)
        .into_par_iter()
        .map(|t| -> Result<u128> {
            let v = f
                .eval(big_n, t as i64)
                .filter(|v| *v <= i64::MAX as i128)
                .ok_or_else(|| Error::capacity("polynomial value", u128::MAX, i64::MAX as u64))?;
            Ok(if v <= 0 { 0 } else { tau_k(k, v as i64) as u128 })
        })
        .try_reduce(|| 0, |a, b| Ok(a + b))?;
    let normalized = raw as f64 / (m as f64 * (n as f64).ln().powi(k as i32 - 1));
    Ok(TauIntervalReport {
        k,
        n,
        m,
        raw,
        normalized,
    })
}
