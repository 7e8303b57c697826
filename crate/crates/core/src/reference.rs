//! Published lists of non-representable numbers, and a comparison of a
//! computed R4 zero list against them.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::error::Result;
use crate::representations::{r4_witness, Form, SolutionTuple};

/// Start of the published list of primes `p` with `R3(p) = 0`.
pub const R3_ZERO_PREFIX: [u64; 20] = [
    2, 3, 5, 7, 11, 13, 17, 23, 31, 37, 41, 43, 53, 67, 71, 83, 97, 101, 107, 113,
];

/// End of the same list, which stops at 5336500537.
pub const R3_ZERO_SUFFIX: [u64; 4] = [5_178_563_387, 5_220_047_297, 5_284_333_573, 5_322_410_117];

/// Published length of that list.
pub const R3_ZERO_COUNT: usize = 2014;
pub const R3_SEARCH_BOUND: u64 = 5_336_500_537;

/// The published list of `n` believed to satisfy `R4(n) = 0`.
pub const R4_ZERO_LIST: [u64; 45] = [
    1, 2, 3, 4, 5, 6, 8, 11, 12, 14, 18, 23, 32, 38, 39, 44, 54, 68, 102, 108, 119, 182, 192, 194, 224, 252, 299, 374,
    422, 432, 908, 1043, 1092, 1202, 1278, 2468, 2768, 3182, 4508, 7208, 10763, 16104, 21998, 26348, 45752,
];

/// Differences between a computed R4 zero list and [`R4_ZERO_LIST`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct R4Adjudication {
    /// Range that was scanned, `1..=hi`.
    pub hi: u64,
    /// Published entries that are zeros.
    pub confirmed: Vec<u64>,
    /// Published entries that are representable, with a solution.
    pub refuted: Vec<(u64, SolutionTuple)>,
    /// Computed zeros missing from the published list.
    pub unlisted: Vec<u64>,
    /// Published entries with no representation that the computed list lacks.
    pub missing: Vec<u64>,
}

impl R4Adjudication {
    pub fn agrees(&self) -> bool {
        self.refuted.is_empty() && self.unlisted.is_empty() && self.missing.is_empty()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "published R4 zero list vs scan of 1..={}: {} confirmed, {} refuted, {} unlisted, {} missing",
            self.hi,
            self.confirmed.len(),
            self.refuted.len(),
            self.unlisted.len(),
            self.missing.len()
        );
        for (n, w) in &self.refuted {
            let _ = writeln!(out, "refuted {n}: f4{w} = {n}");
        }
        for n in &self.unlisted {
            let _ = writeln!(out, "unlisted zero {n}");
        }
        for n in &self.missing {
            let _ = writeln!(out, "missing zero {n}");
        }
        out
    }
}

/// Witness for odd `n >= 5`: `1*1*1*w + 3 + w = n` with `w = (n - 3) / 2`.
pub fn odd_r4_witness(n: u64) -> Option<SolutionTuple> {
    (n >= 5 && n % 2 == 1).then(|| SolutionTuple::canonical(vec![1, 1, 1, (n - 3) / 2]))
}

/// Compares `zeros`, the R4 zeros in `1..=hi`, with the published list.
pub fn adjudicate_r4(zeros: &[u64], hi: u64) -> Result<R4Adjudication> {
    let computed: BTreeSet<u64> = zeros.iter().copied().collect();
    let mut confirmed = Vec::new();
    let mut refuted = Vec::new();
    let mut missing = Vec::new();
    for &n in R4_ZERO_LIST.iter().filter(|&&n| n <= hi) {
        if computed.contains(&n) {
            confirmed.push(n);
            continue;
        }
        let witness = match odd_r4_witness(n) {
            Some(w) => w,
            None => match r4_witness(n)? {
                Some(w) => w,
                None => {
                    missing.push(n);
                    continue;
                }
            },
        };
        debug_assert_eq!(witness.evaluate(Form::SumPlusProduct), n as u128);
        refuted.push((n, witness));
    }
    let listed: BTreeSet<u64> = R4_ZERO_LIST.iter().copied().collect();
    let unlisted = computed.iter().copied().filter(|n| !listed.contains(n)).collect();
    Ok(R4Adjudication {
        hi,
        confirmed,
        refuted,
        unlisted,
        missing,
    })
}
