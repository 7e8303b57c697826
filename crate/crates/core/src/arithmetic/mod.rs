//! Integer kernels: primality, factorization, divisors, and the usual
//! multiplicative functions.

mod factor;
mod primality;
mod sieve;

pub use factor::{factorize, Factorization, FACTOR_LIMIT};
pub use primality::is_prime;
pub use sieve::{spf_segment, spf_segment_with_limit, SpfSegment, DEFAULT_SEGMENT_LIMIT};

use crate::error::{Error, Result};

/// Selects the divisors `d` of `target` with `d ≡ residue (mod modulus)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DivisorQuery {
    target: u64,
    modulus: u64,
    residue: u64,
}

impl DivisorQuery {
    pub fn new(target: u64, modulus: u64, residue: u64) -> Result<Self> {
        if target == 0 {
            return Err(Error::InvalidArgument("divisor target must be positive".into()));
        }
        if modulus == 0 || residue >= modulus {
            return Err(Error::InvalidArgument(format!(
                "need residue < modulus, got {residue} mod {modulus}"
            )));
        }
        Ok(DivisorQuery {
            target,
            modulus,
            residue,
        })
    }

    pub fn target(&self) -> u64 {
        self.target
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }
}

/// Divisors of the query target in the requested residue class, ascending.
/// Both 1 and the target itself are included when they qualify.
pub fn divisors_filtered(q: DivisorQuery) -> Result<Vec<u64>> {
    let mut divs = factorize(q.target)?.divisors();
    divs.retain(|d| d % q.modulus == q.residue);
    Ok(divs)
}

/// Number of ordered `k`-tuples of positive integers with product `n`.
///
/// Zero for `n <= 0`. Saturates at `u64::MAX`, which cannot happen for
/// `k <= 16`.
pub fn tau_k(k: u32, n: i64) -> u64 {
    assert!(k >= 1, "tau_k requires k >= 1");
    if n <= 0 {
        return 0;
    }
    let f = factorize(n as u64).expect("i64 values are below the factorization limit");
    tau_k_of(k, &f)
}

/// `tau_k` from a known factorization.
pub fn tau_k_of(k: u32, f: &Factorization) -> u64 {
    f.factors()
        .iter()
        .map(|&(_, e)| multichoose(k as u64, e as u64))
        .fold(1u64, |acc, c| acc.saturating_mul(c))
}

// C(e + k - 1, k - 1): ways to spread e copies of a prime over k slots.
fn multichoose(k: u64, e: u64) -> u64 {
    let mut c: u128 = 1;
    for i in 1..=e {
        c = c * (k - 1 + i) as u128 / i as u128;
        if c > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    c as u64
}

/// d(n), the number of divisors of `n >= 1`.
pub fn divisor_count(n: u64) -> Result<u64> {
    Ok(factorize(n)?.divisor_count())
}

/// The Möbius function.
pub fn mobius(n: u64) -> Result<i8> {
    let f = factorize(n)?;
    Ok(if !f.is_squarefree() {
        0
    } else if f.factors().len() % 2 == 0 {
        1
    } else {
        -1
    })
}

/// Primes `<= limit` by a plain Eratosthenes sieve.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}
