use sppk_core::arithmetic::{divisor_count, is_prime};
use sppk_core::representations::{
    brute_oracle, family_count, one_family_identity, paper_family_bound, r3, r3_counts_up_to, r4, s3, Form,
};

#[test]
fn fast_paths_match_oracle() {
    for n in 1..=3000 {
        assert_eq!(
            r3(n).unwrap(),
            brute_oracle(3, Form::SumPlusProduct, n).unwrap(),
            "r3({n})"
        );
    }
    for n in 1..=600 {
        assert_eq!(
            r4(n).unwrap(),
            brute_oracle(4, Form::SumPlusProduct, n).unwrap(),
            "r4({n})"
        );
    }
    for n in 1..=2000 {
        assert_eq!(
            s3(n).unwrap(),
            brute_oracle(3, Form::PairwiseProducts, n).unwrap(),
            "s3({n})"
        );
    }
}

#[test]
fn results_are_internally_consistent() {
    for n in 1..=5000 {
        for r in [r3(n).unwrap(), s3(n).unwrap()] {
            let sum: u64 = r.solutions.iter().map(|s| s.permutation_count()).sum();
            assert_eq!(sum, r.ordered_count);
            assert_eq!(r.ordered_count == 0, r.solutions.is_empty());
            assert!(r.solutions.windows(2).all(|w| w[0] < w[1]));
            assert!(r.solutions.iter().all(|s| s.coords().windows(2).all(|c| c[0] <= c[1])));
        }
        for s in r3(n).unwrap().solutions {
            assert_eq!(s.evaluate(Form::SumPlusProduct), n as u128);
        }
        for s in s3(n).unwrap().solutions {
            assert_eq!(s.evaluate(Form::PairwiseProducts), n as u128);
        }
    }
}

#[test]
fn zeros_are_prime_or_one() {
    assert!(r3(1).unwrap().is_zero());
    for n in 2..=100_000u64 {
        if r3(n).unwrap().is_zero() {
            assert!(is_prime(n), "R3({n}) = 0 but {n} is composite");
        }
    }
}

#[test]
fn even_and_odd_witnesses() {
    for n in (4..=100_000u64).step_by(2) {
        assert!(r3(n).unwrap().contains(&[1, 1, (n - 2) / 2]), "n={n}");
    }
    for n in (5..=10_000u64).step_by(2) {
        assert!(r4(n).unwrap().contains(&[1, 1, 1, (n - 3) / 2]), "n={n}");
    }
}

#[test]
fn shift_relation() {
    for n in 1..=10_000u64 {
        if !r3(n).unwrap().is_zero() {
            assert!(!r4(n + 1).unwrap().is_zero(), "R3({n}) > 0 but R4({}) = 0", n + 1);
        }
    }
}

#[test]
fn one_family_closed_form_and_lower_bounds() {
    let table = r3_counts_up_to(10_000).unwrap();
    for n in 5..=10_000u64 {
        let f1 = family_count(n, 1).unwrap();
        assert_eq!(f1 as i64, one_family_identity(n).unwrap(), "n={n}");
        let f2 = family_count(n, 2).unwrap();
        assert!(table[n as usize] >= f1 && table[n as usize] >= f2, "n={n}");
    }
    // The published constant is about twice the exact count, e.g. n = 12.
    assert_eq!(family_count(12, 1).unwrap(), 9);
    assert_eq!(paper_family_bound(12).unwrap(), 30);
    assert_eq!(divisor_count(12).unwrap(), 6);
}

#[test]
fn family_counts_match_brute_force() {
    for n in 1..=1500u64 {
        let all = brute_oracle(3, Form::SumPlusProduct, n).unwrap();
        for m in 1..=4u64 {
            let want: u64 = all
                .solutions
                .iter()
                .filter(|s| s.coords().contains(&m))
                .map(|s| s.permutation_count())
                .sum();
            assert_eq!(family_count(n, m).unwrap(), want, "n={n} m={m}");
        }
    }
}

#[test]
fn divisor_symmetry() {
    // Each unordered solution corresponds to exactly one divisor d <= sqrt(D)
    // of D = x(n - x) + 1; swapping d and D/d swaps y and z.
    for n in 4..=3000u64 {
        for s in r3(n).unwrap().solutions {
            let [x, y, z] = [s.coords()[0], s.coords()[1], s.coords()[2]];
            let target = x * (n - x) + 1;
            assert_eq!((x * y + 1) * (x * z + 1), target);
            assert!((x * y + 1) * (x * y + 1) <= target);
        }
    }
}
