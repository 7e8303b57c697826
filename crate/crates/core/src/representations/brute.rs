//! Direct enumeration, used as an independent oracle for the fast paths.

use super::{Form, RepResult, SolutionTuple};
use crate::error::{Error, Result};

pub const BRUTE_LIMIT_ARITY3: u64 = 1_000_000;
pub const BRUTE_LIMIT_ARITY4: u64 = 100_000;

/// Enumerates nondecreasing tuples coordinate by coordinate, cutting each
/// loop once the form (increasing in every coordinate) exceeds `n`.
pub fn brute_oracle(arity: usize, form: Form, n: u64) -> Result<RepResult> {
    let limit = match (arity, form) {
        (3, _) => BRUTE_LIMIT_ARITY3,
        (4, Form::SumPlusProduct) => BRUTE_LIMIT_ARITY4,
        _ => {
            return Err(Error::InvalidArgument(format!(
                "no brute-force oracle for arity {arity} with {form:?}"
            )))
        }
    };
    if n > limit {
        return Err(Error::capacity("brute-force oracle input", n, limit));
    }

    let mut found = Vec::new();
    match (arity, form) {
        (3, Form::SumPlusProduct) => {
            let f = |x: u64, y: u64, z: u64| x * y * z + x + y + z;
            for x in (1..).take_while(|&x| f(x, x, x) <= n) {
                for y in (x..).take_while(|&y| f(x, y, y) <= n) {
                    for z in (y..).take_while(|&z| f(x, y, z) <= n) {
                        if f(x, y, z) == n {
                            found.push(vec![x, y, z]);
                        }
                    }
                }
            }
        }
        (3, Form::PairwiseProducts) => {
            let g = |x: u64, y: u64, z: u64| x * y + y * z + z * x + 1;
            for x in (1..).take_while(|&x| g(x, x, x) <= n) {
                for y in (x..).take_while(|&y| g(x, y, y) <= n) {
                    for z in (y..).take_while(|&z| g(x, y, z) <= n) {
                        if g(x, y, z) == n {
                            found.push(vec![x, y, z]);
                        }
                    }
                }
            }
        }
        _ => {
            let f = |x: u64, y: u64, z: u64, w: u64| x * y * z * w + x + y + z + w;
            for x in (1..).take_while(|&x| f(x, x, x, x) <= n) {
                for y in (x..).take_while(|&y| f(x, y, y, y) <= n) {
                    for z in (y..).take_while(|&z| f(x, y, z, z) <= n) {
                        for w in (z..).take_while(|&w| f(x, y, z, w) <= n) {
                            if f(x, y, z, w) == n {
                                found.push(vec![x, y, z, w]);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(RepResult::collect(
        n,
        found.into_iter().map(SolutionTuple::canonical).collect(),
    ))
}
