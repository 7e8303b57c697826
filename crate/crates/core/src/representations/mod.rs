//! Exact representation counts for
//!
//! * `f3(x, y, z) = xyz + x + y + z`
//! * `f4(x, y, z, w) = xyzw + x + y + z + w`
//! * `g3(x, y, z) = xy + yz + zx + 1`
//!
//! All counts are over ordered tuples of positive integers. Solutions are
//! kept once, in nondecreasing form, and carry their permutation multiplicity.
//!
//! The fast paths turn each equation into a factorization problem. Fixing
//! the smallest coordinate `x` of an `f3` solution gives
//! `(xy + 1)(xz + 1) = x(n - x) + 1`; fixing `x <= y` of an `f4` solution
//! gives `(xyz + 1)(xyw + 1) = xy(n - x - y) + 1`; and for `g3`,
//! `(x + y)(x + z) = n - 1 + x^2`. Each remaining pair of coordinates is
//! read off a divisor of the right-hand side.

mod brute;
mod family;

use std::fmt;
use std::ops::ControlFlow;

pub use brute::{brute_oracle, BRUTE_LIMIT_ARITY3, BRUTE_LIMIT_ARITY4};
pub use family::{family_count, one_family_identity, paper_family_bound, r3_counts_up_to};

use crate::arithmetic::factorize;
use crate::error::{Error, Result};

/// Largest `n` accepted by [`r3`] and [`s3`].
pub const R3_LIMIT: u64 = 1 << 47;
/// Largest `n` accepted by [`r4`].
pub const R4_LIMIT: u64 = 1 << 42;

/// Which polynomial a representation count refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Form {
    /// Product plus sum: `f3` or `f4`.
    SumPlusProduct,
    /// Pairwise products plus one: `g3`.
    PairwiseProducts,
}

/// A nondecreasing tuple of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SolutionTuple {
    coords: Vec<u64>,
}

impl SolutionTuple {
    /// Builds a tuple from coordinates in any order.
    pub fn canonical(mut coords: Vec<u64>) -> Self {
        assert!(coords.iter().all(|&c| c >= 1), "coordinates must be positive");
        coords.sort_unstable();
        SolutionTuple { coords }
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn arity(&self) -> usize {
        self.coords.len()
    }

    /// Number of distinct orderings of the coordinate multiset.
    pub fn permutation_count(&self) -> u64 {
        let factorial = |k: usize| (1..=k as u64).product::<u64>();
        let mut count = factorial(self.coords.len());
        let mut run = 1;
        for i in 1..=self.coords.len() {
            if i < self.coords.len() && self.coords[i] == self.coords[i - 1] {
                run += 1;
            } else {
                count /= factorial(run);
                run = 1;
            }
        }
        count
    }

    /// Evaluates `form` at this tuple.
    pub fn evaluate(&self, form: Form) -> u128 {
        let c: Vec<u128> = self.coords.iter().map(|&v| v as u128).collect();
        match form {
            Form::SumPlusProduct => c.iter().product::<u128>() + c.iter().sum::<u128>(),
            Form::PairwiseProducts => {
                let mut s = 1;
                for i in 0..c.len() {
                    for j in i + 1..c.len() {
                        s += c[i] * c[j];
                    }
                }
                s
            }
        }
    }
}

impl fmt::Display for SolutionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Solutions of one representation problem for a single `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepResult {
    pub n: u64,
    /// Number of ordered solutions.
    pub ordered_count: u64,
    /// Canonical solutions, sorted lexicographically.
    pub solutions: Vec<SolutionTuple>,
}

impl RepResult {
    fn collect(n: u64, mut solutions: Vec<SolutionTuple>) -> Self {
        solutions.sort_unstable();
        let ordered_count = solutions.iter().map(SolutionTuple::permutation_count).sum();
        RepResult {
            n,
            ordered_count,
            solutions,
        }
    }

    pub fn contains(&self, coords: &[u64]) -> bool {
        self.solutions.iter().any(|s| s.coords() == coords)
    }

    pub fn is_zero(&self) -> bool {
        self.ordered_count == 0
    }
}

fn check_cap(n: u64, limit: u64, what: &'static str) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument(format!("{what} requires n >= 1")));
    }
    if n > limit {
        return Err(Error::capacity(what, n, limit));
    }
    Ok(())
}

/// Calls `visit` with every divisor `d` of `target` satisfying
/// `d ≡ 1 (mod modulus)`, `d >= min` and `d * d <= target`, ascending.
fn for_each_small_divisor(
    target: u64,
    modulus: u64,
    min: u64,
    mut visit: impl FnMut(u64) -> ControlFlow<()>,
) -> Result<ControlFlow<()>> {
    if min.saturating_mul(min) > target {
        return Ok(ControlFlow::Continue(()));
    }
    let root = target.isqrt();
    for d in factorize(target)?.divisors() {
        if d > root {
            break;
        }
        if d >= min && d % modulus == 1 % modulus && visit(d).is_break() {
            return Ok(ControlFlow::Break(()));
        }
    }
    Ok(ControlFlow::Continue(()))
}

/// Visits every nondecreasing `(x, y, z)` with `f3 = n`.
fn visit_r3(n: u64, mut visit: impl FnMut([u64; 3]) -> ControlFlow<()>) -> Result<()> {
    check_cap(n, R3_LIMIT, "r3 input")?;
    let mut x = 1u64;
    while x * x * x + 3 * x <= n {
        // (xy + 1)(xz + 1) = x(n - x) + 1
        let target = x * (n - x) + 1;
        let flow = for_each_small_divisor(target, x, x * x + 1, |d| {
            let y = (d - 1) / x;
            let z = (target / d - 1) / x;
            debug_assert!(x <= y && y <= z);
            visit([x, y, z])
        })?;
        if flow.is_break() {
            break;
        }
        x += 1;
    }
    Ok(())
}

/// Visits every nondecreasing `(x, y, z, w)` with `f4 = n`.
fn visit_r4(n: u64, mut visit: impl FnMut([u64; 4]) -> ControlFlow<()>) -> Result<()> {
    check_cap(n, R4_LIMIT, "r4 input")?;
    let mut x = 1u64;
    'outer: while x * x * x * x + 4 * x <= n {
        let mut y = x;
        while x * y * y * y + x + 3 * y <= n {
            // (xyz + 1)(xyw + 1) = xy(n - x - y) + 1
            let m = x * y;
            let target = m * (n - x - y) + 1;
            let flow = for_each_small_divisor(target, m, m * y + 1, |d| {
                let z = (d - 1) / m;
                let w = (target / d - 1) / m;
                debug_assert!(y <= z && z <= w);
                visit([x, y, z, w])
            })?;
            if flow.is_break() {
                break 'outer;
            }
            y += 1;
        }
        x += 1;
    }
    Ok(())
}

/// Visits every nondecreasing `(x, y, z)` with `g3 = n`.
fn visit_s3(n: u64, mut visit: impl FnMut([u64; 3]) -> ControlFlow<()>) -> Result<()> {
    check_cap(n, R3_LIMIT, "s3 input")?;
    let mut x = 1u64;
    while 3 * x * x < n {
        // (x + y)(x + z) = n - 1 + x^2
        let target = n - 1 + x * x;
        let flow = for_each_small_divisor(target, 1, 2 * x, |d| {
            let y = d - x;
            let z = target / d - x;
            visit([x, y, z])
        })?;
        if flow.is_break() {
            break;
        }
        x += 1;
    }
    Ok(())
}

type Visitor<const K: usize> = fn(u64, &mut dyn FnMut([u64; K]) -> ControlFlow<()>) -> Result<()>;

fn collect_all<const K: usize>(n: u64, visitor: Visitor<K>) -> Result<RepResult> {
    let mut sols = Vec::new();
    visitor(n, &mut |t| {
        sols.push(SolutionTuple { coords: t.to_vec() });
        ControlFlow::Continue(())
    })?;
    Ok(RepResult::collect(n, sols))
}

fn first<const K: usize>(n: u64, visitor: Visitor<K>) -> Result<Option<SolutionTuple>> {
    let mut found = None;
    visitor(n, &mut |t| {
        found = Some(SolutionTuple { coords: t.to_vec() });
        ControlFlow::Break(())
    })?;
    Ok(found)
}

/// R3(n): ordered solutions of `xyz + x + y + z = n`.
pub fn r3(n: u64) -> Result<RepResult> {
    collect_all(n, |n, v| visit_r3(n, v))
}

/// Existence mode for [`r3`]: stops at the first solution found.
pub fn r3_witness(n: u64) -> Result<Option<SolutionTuple>> {
    first(n, |n, v| visit_r3(n, v))
}

/// R4(n): ordered solutions of `xyzw + x + y + z + w = n`.
pub fn r4(n: u64) -> Result<RepResult> {
    collect_all(n, |n, v| visit_r4(n, v))
}

/// Existence mode for [`r4`].
pub fn r4_witness(n: u64) -> Result<Option<SolutionTuple>> {
    first(n, |n, v| visit_r4(n, v))
}

/// S3(n): ordered solutions of `xy + yz + zx + 1 = n`.
pub fn s3(n: u64) -> Result<RepResult> {
    collect_all(n, |n, v| visit_s3(n, v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sols(r: &RepResult) -> Vec<Vec<u64>> {
        r.solutions.iter().map(|s| s.coords().to_vec()).collect()
    }

    #[test]
    fn r3_examples() {
        assert!(r3(5).unwrap().is_zero());
        let r = r3(4).unwrap();
        assert_eq!((r.ordered_count, sols(&r)), (1, vec![vec![1, 1, 1]]));
        let r = r3(8).unwrap();
        assert_eq!((r.ordered_count, sols(&r)), (3, vec![vec![1, 1, 3]]));
        assert!(r3(19).unwrap().contains(&[2, 2, 3]));
        for n in 1..=3 {
            assert!(r3(n).unwrap().is_zero());
        }
    }

    #[test]
    fn r4_examples() {
        let r = r4(7).unwrap();
        assert_eq!((r.ordered_count, sols(&r)), (4, vec![vec![1, 1, 1, 2]]));
        assert!(r4(11).unwrap().contains(&[1, 1, 1, 4]));
        assert!(r4(4).unwrap().is_zero());
        assert!(r4(12).unwrap().is_zero());
        assert_eq!(r4(5).unwrap().ordered_count, 1);
    }

    #[test]
    fn s3_examples() {
        let r = s3(4).unwrap();
        assert_eq!((r.ordered_count, sols(&r)), (1, vec![vec![1, 1, 1]]));
        assert!(s3(6).unwrap().contains(&[1, 1, 2]));
        assert!(s3(3).unwrap().is_zero());
    }

    #[test]
    fn perfect_square_target_counts_once() {
        // x = 1, n = 9: target 9 = 3 * 3 gives y = z = 2.
        let r = r3(9).unwrap();
        assert_eq!(sols(&r), vec![vec![1, 2, 2]]);
        assert_eq!(r.ordered_count, 3);
    }

    #[test]
    fn caps() {
        assert!(matches!(r3(R3_LIMIT + 1), Err(Error::Capacity { .. })));
        assert!(matches!(s3(R3_LIMIT + 1), Err(Error::Capacity { .. })));
        assert!(matches!(r4(R4_LIMIT + 1), Err(Error::Capacity { .. })));
        assert!(r3(0).is_err());
        // The largest admissible inputs run without overflow.
        assert!(r3_witness(R3_LIMIT).unwrap().is_some());
        assert!(r4_witness(R4_LIMIT).unwrap().is_some());
    }

    #[test]
    fn witnesses_solve_the_equation() {
        for n in [100u64, 1_000_003, 987_654_321] {
            let w = r3_witness(n).unwrap().unwrap();
            assert_eq!(w.evaluate(Form::SumPlusProduct), n as u128);
        }
        let w = r4_witness(1_000_000).unwrap().unwrap();
        assert_eq!(w.evaluate(Form::SumPlusProduct), 1_000_000);
    }

    #[test]
    fn permutation_counts() {
        let p = |v: &[u64]| SolutionTuple::canonical(v.to_vec()).permutation_count();
        assert_eq!(p(&[1, 1, 1]), 1);
        assert_eq!(p(&[1, 1, 3]), 3);
        assert_eq!(p(&[1, 2, 3]), 6);
        assert_eq!(p(&[1, 1, 2, 2]), 6);
        assert_eq!(p(&[1, 2, 3, 4]), 24);
        assert_eq!(p(&[2, 2, 2, 5]), 4);
    }

    #[test]
    fn display() {
        assert_eq!(SolutionTuple::canonical(vec![3, 1, 1]).to_string(), "(1,1,3)");
    }
}
