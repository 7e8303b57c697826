//! Segmented smallest-prime-factor sieve.

use crate::error::{Error, Result};

/// Default cap on `hi - lo + 1` for a single segment.
pub const DEFAULT_SEGMENT_LIMIT: u64 = 1 << 26;

/// Smallest prime factors for every integer in `[lo, hi]`.
#[derive(Debug, Clone)]
pub struct SpfSegment {
    lo: u64,
    hi: u64,
    // 0 marks "no factor up to sqrt(hi)", i.e. the entry itself is prime.
    spf: Vec<u32>,
}

impl SpfSegment {
    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn hi(&self) -> u64 {
        self.hi
    }

    /// Smallest prime factor of `n`, or `None` if `n` lies outside the segment.
    pub fn spf(&self, n: u64) -> Option<u64> {
        if n < self.lo || n > self.hi {
            return None;
        }
        Some(match self.spf[(n - self.lo) as usize] {
            0 => n,
            p => p as u64,
        })
    }

    pub fn is_prime(&self, n: u64) -> Option<bool> {
        self.spf(n).map(|p| p == n)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        (self.lo..=self.hi)
            .zip(self.spf.iter())
            .map(|(n, &p)| (n, if p == 0 { n } else { p as u64 }))
    }
}

/// Sieves `[lo, hi]` with the default segment limit.
pub fn spf_segment(lo: u64, hi: u64) -> Result<SpfSegment> {
    spf_segment_with_limit(lo, hi, DEFAULT_SEGMENT_LIMIT)
}

pub fn spf_segment_with_limit(lo: u64, hi: u64, limit: u64) -> Result<SpfSegment> {
    if lo < 2 || lo > hi {
        return Err(Error::InvalidArgument(format!(
            "spf segment needs 2 <= lo <= hi, got [{lo}, {hi}]"
        )));
    }
    let len = hi - lo + 1;
    if len > limit {
        return Err(Error::capacity("spf segment length", len, limit));
    }
    let root = hi.isqrt();
    if root >= 1 << 32 {
        return Err(Error::capacity("spf segment upper end", hi, u64::MAX));
    }

    let mut spf = vec![0u32; len as usize];
    for p in super::primes_up_to(root) {
        let first = (p * p).max(lo.div_ceil(p) * p);
        let mut m = first;
        while m <= hi {
            let slot = &mut spf[(m - lo) as usize];
            if *slot == 0 {
                *slot = p as u32;
            }
            m += p;
        }
    }
    Ok(SpfSegment { lo, hi, spf })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_segment() {
        let seg = spf_segment(2, 10).unwrap();
        assert_eq!(seg.spf(9), Some(3));
        assert_eq!(seg.spf(7), Some(7));
        assert_eq!(seg.spf(10), Some(2));
        assert_eq!(seg.spf(11), None);
    }

    #[test]
    fn offset_segment() {
        let seg = spf_segment(1_000_000, 1_000_100).unwrap();
        assert_eq!(seg.spf(1_000_003), Some(1_000_003));
        assert_eq!(seg.spf(1_000_001), Some(101));
        assert_eq!(seg.is_prime(1_000_033), Some(true));
    }

    #[test]
    fn rejects_bad_ranges() {
        assert!(spf_segment(1, 10).is_err());
        assert!(spf_segment(10, 9).is_err());
        assert!(matches!(
            spf_segment_with_limit(2, 1000, 100),
            Err(Error::Capacity { .. })
        ));
    }
}
