//! Solutions of `xyz + x + y + z = n` that have a fixed coordinate, and a
//! full table of R3 over an initial segment.

use super::R3_LIMIT;
use crate::arithmetic::{divisor_count, factorize};
use crate::error::{Error, Result};

/// Number of ordered solutions of `xyz + x + y + z = n` with at least one
/// coordinate equal to `m`.
///
/// Inclusion–exclusion over the positions holding `m`. With `x = m` the
/// equation becomes `(my + 1)(mz + 1) = m(n - m) + 1`; two positions fixed
/// leave `z(m^2 + 1) = n - 2m`; all three need `m^3 + 3m = n`.
pub fn family_count(n: u64, m: u64) -> Result<u64> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidArgument("family_count needs n, m >= 1".into()));
    }
    if n > R3_LIMIT {
        return Err(Error::capacity("family_count input", n, R3_LIMIT));
    }
    if n <= m {
        return Ok(0);
    }

    let target = m as u128 * (n - m) as u128 + 1;
    if target >= crate::arithmetic::FACTOR_LIMIT as u128 {
        return Err(Error::capacity(
            "family_count target",
            target,
            crate::arithmetic::FACTOR_LIMIT,
        ));
    }
    let target = target as u64;
    let one_fixed = factorize(target)?
        .divisors()
        .into_iter()
        .filter(|&d| d % m == 1 % m && d > m && target / d > m)
        .count() as u64;

    let two_fixed = match n.checked_sub(2 * m) {
        Some(r) if r > 0 && r % (m * m + 1) == 0 => 1,
        _ => 0,
    };
    let three_fixed = u64::from(m.checked_pow(3).and_then(|c| c.checked_add(3 * m)) == Some(n));

    Ok(3 * one_fixed - 3 * two_fixed + three_fixed)
}

/// Closed form of `family_count(n, 1)`: `3(d(n) - 2) - 3[n even] + [n = 4]`,
/// valid for `n >= 4`.
pub fn one_family_identity(n: u64) -> Result<i64> {
    if n < 4 {
        return Err(Error::InvalidArgument("closed form holds for n >= 4".into()));
    }
    let d = divisor_count(n)? as i64;
    Ok(3 * (d - 2) - 3 * i64::from(n % 2 == 0) + i64::from(n == 4))
}

/// The published lower bound `6d(n) - 6`, kept for side-by-side reporting
/// against the exact family count.
pub fn paper_family_bound(n: u64) -> Result<i64> {
    Ok(6 * divisor_count(n)? as i64 - 6)
}

/// Largest `n` for [`r3_counts_up_to`].
pub const TABLE_LIMIT: u64 = 100_000_000;

/// `R3(n)` for every `0 <= n <= limit`, by enumerating all nondecreasing
/// triples with `f3 <= limit`.
pub fn r3_counts_up_to(limit: u64) -> Result<Vec<u64>> {
    if limit > TABLE_LIMIT {
        return Err(Error::capacity("R3 table length", limit, TABLE_LIMIT));
    }
    let mut counts = vec![0u64; limit as usize + 1];
    let f = |x: u64, y: u64, z: u64| x * y * z + x + y + z;
    for x in (1..).take_while(|&x| f(x, x, x) <= limit) {
        for y in (x..).take_while(|&y| f(x, y, y) <= limit) {
            for z in (y..).take_while(|&z| f(x, y, z) <= limit) {
                let mult = match (x == y, y == z) {
                    (true, true) => 1,
                    (false, false) => 6,
                    _ => 3,
                };
                counts[f(x, y, z) as usize] += mult;
            }
        }
    }
    Ok(counts)
}
