//! Residue classes that force a representation, and the large-sieve bound
//! built from them.
//!
//! Writing `f3 = z(xy + 1) + x + y` shows that every `n > q` with
//! `n ≡ x + y (mod q)` for some factorization `xy = q - 1` is representable.
//! The pair `(1, q - 1)` gives the class `0`, which is left out.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, ToPrimitive, Zero};

use crate::arithmetic::{factorize, primes_up_to};
use crate::error::{Error, Result};

/// How the number of forced classes modulo a prime is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum CoverMode {
    /// Count the classes directly.
    #[default]
    Enumerated,
    /// Use the closed form `(d(p - 1) - 2) / 2`.
    Formula,
}

impl fmt::Display for CoverMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoverMode::Enumerated => "enumerated",
            CoverMode::Formula => "formula",
        })
    }
}

impl std::str::FromStr for CoverMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "enumerated" => Ok(CoverMode::Enumerated),
            "formula" => Ok(CoverMode::Formula),
            other => Err(Error::InvalidArgument(format!("unknown cover mode {other:?}"))),
        }
    }
}

/// Forced residues modulo `modulus`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueCover {
    pub modulus: u64,
    pub covered: BTreeSet<u64>,
    /// `(d(modulus - 1) - 2) / 2`; not an integer when `modulus - 1` is a square.
    pub formula_value: Ratio<i64>,
}

impl ResidueCover {
    pub fn class_count(&self) -> usize {
        self.covered.len()
    }

    pub fn covers(&self, n: u64) -> bool {
        n > self.modulus && self.covered.contains(&(n % self.modulus))
    }
}

pub fn covered_residues(q: u64) -> Result<ResidueCover> {
    if q < 2 {
        return Err(Error::InvalidArgument(format!("modulus must be >= 2, got {q}")));
    }
    let f = factorize(q - 1)?;
    let covered = f
        .divisors()
        .into_iter()
        .map(|x| (x + (q - 1) / x) % q)
        .filter(|&r| r != 0)
        .collect();
    let d = f.divisor_count() as i64;
    Ok(ResidueCover {
        modulus: q,
        covered,
        formula_value: Ratio::new(d - 2, 2),
    })
}

/// Sieve density `ω(p)` per prime; negative formula values are clamped to 0.
fn class_density(p: u64, mode: CoverMode, zero_class: bool) -> Result<Ratio<i64>> {
    let cover = covered_residues(p)?;
    let base = match mode {
        CoverMode::Enumerated => Ratio::from_integer(cover.class_count() as i64),
        CoverMode::Formula => cover.formula_value.max(Ratio::zero()),
    };
    Ok(if zero_class { base + 1 } else { base })
}

/// `Q(X) = sum over squarefree q <= X of prod_{p | q} ω(p) / (p - ω(p))`.
pub fn q_sum(x: u64, mode: CoverMode) -> Result<BigRational> {
    q_sum_with(x, mode, false)
}

/// [`q_sum`] with the option of also sifting out the class `0 (mod p)`,
/// which is sound when only `n > X` are sifted because such `n ≡ 0` are
/// composite and hence representable.
pub fn q_sum_with(x: u64, mode: CoverMode, zero_class: bool) -> Result<BigRational> {
    if x == 0 {
        return Err(Error::InvalidArgument("X must be >= 1".into()));
    }
    let mut weights = Vec::new();
    for p in primes_up_to(x) {
        let w = class_density(p, mode, zero_class)?;
        if *w.numer() > 0 {
            let prime = Ratio::from_integer(p as i64);
            let term = w / (prime - w);
            weights.push((
                p,
                BigRational::new(BigInt::from(*term.numer()), BigInt::from(*term.denom())),
            ));
        }
    }
    Ok(squarefree_sum(&weights, 0, x))
}

// Sum over squarefree products of weights[start..] with product <= bound,
// including the empty product.
fn squarefree_sum(weights: &[(u64, BigRational)], start: usize, bound: u64) -> BigRational {
    let mut total = BigRational::one();
    for (i, (p, w)) in weights.iter().enumerate().skip(start) {
        if *p > bound {
            break;
        }
        total += w * squarefree_sum(weights, i + 1, bound / p);
    }
    total
}

/// One evaluation of `(sqrt(N) + X)^2 / Q(X)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SieveEvaluation {
    pub n: u64,
    pub x: u64,
    pub mode: CoverMode,
    pub q: BigRational,
    /// Bound on the number of `n` in `(X, N]` with `R3(n) = 0`.
    pub bound: f64,
}

impl SieveEvaluation {
    pub fn q_f64(&self) -> f64 {
        self.q.to_f64().unwrap_or(f64::INFINITY)
    }

    /// Upper estimate for `U3(N)`: the `X` unsifted values plus the bound.
    pub fn u3_upper(&self) -> f64 {
        self.x as f64 + self.bound
    }
}

pub fn sieve_bound(n: u64, x: u64, mode: CoverMode) -> Result<SieveEvaluation> {
    sieve_bound_with(n, x, mode, false)
}

pub fn sieve_bound_with(n: u64, x: u64, mode: CoverMode, zero_class: bool) -> Result<SieveEvaluation> {
    if x == 0 || x.checked_mul(x).is_none_or(|xx| xx > n) {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= X <= sqrt(N), got N={n}, X={x}"
        )));
    }
    let q = q_sum_with(x, mode, zero_class)?;
    if q.is_zero() {
        return Err(Error::UnusableParameters(format!("Q({x}) = 0")));
    }
    let q_float = q.to_f64().unwrap_or(f64::INFINITY);
    let numerator = ((n as f64).sqrt() + x as f64).powi(2);
    Ok(SieveEvaluation {
        n,
        x,
        mode,
        q,
        bound: numerator / q_float,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u64]) -> BTreeSet<u64> {
        v.iter().copied().collect()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn worked_examples() {
        assert_eq!(covered_residues(7).unwrap().covered, set(&[5]));
        assert_eq!(covered_residues(11).unwrap().covered, set(&[7]));
        assert_eq!(covered_residues(13).unwrap().covered, set(&[7, 8]));
        let five = covered_residues(5).unwrap();
        assert_eq!(five.covered, set(&[4]));
        assert_eq!(five.formula_value, Ratio::new(1, 2));
    }

    #[test]
    fn tiny_moduli_cover_nothing() {
        assert!(covered_residues(2).unwrap().covered.is_empty());
        assert!(covered_residues(3).unwrap().covered.is_empty());
        assert!(covered_residues(1).is_err());
    }

    #[test]
    fn q_examples() {
        assert_eq!(q_sum(1, CoverMode::Enumerated).unwrap(), rat(1, 1));
        assert_eq!(q_sum(10, CoverMode::Enumerated).unwrap(), rat(17, 12));
        // 1 + (1/2)/(9/2) + 1/6
        assert_eq!(q_sum(10, CoverMode::Formula).unwrap(), rat(23, 18));
        // 35 = 5 * 7 enters at X = 35.
        let q35 = q_sum(35, CoverMode::Enumerated).unwrap();
        let q34 = q_sum(34, CoverMode::Enumerated).unwrap();
        assert_eq!(q35 - q34, rat(1, 24));
    }

    #[test]
    fn zero_class_option() {
        // ω(2) = ω(3) = 1 with the zero class, each contributing a factor 1.
        // X = 3: squarefree q in {1, 2, 3} -> 1 + 1 + 1/2.
        assert_eq!(q_sum_with(3, CoverMode::Enumerated, true).unwrap(), rat(5, 2));
    }

    #[test]
    fn bound_examples() {
        let e = sieve_bound(100, 1, CoverMode::Enumerated).unwrap();
        assert_eq!(e.bound, 121.0);
        assert_eq!(e.u3_upper(), 122.0);

        let e = sieve_bound(1_000_000, 10, CoverMode::Enumerated).unwrap();
        let expected = 1010.0f64.powi(2) * 12.0 / 17.0;
        assert!((e.bound - expected).abs() / expected < 1e-12);

        assert!(sieve_bound(100, 11, CoverMode::Enumerated).is_err());
        assert!(sieve_bound(100, 0, CoverMode::Enumerated).is_err());
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("formula".parse::<CoverMode>().unwrap(), CoverMode::Formula);
        assert!("other".parse::<CoverMode>().is_err());
    }
}
