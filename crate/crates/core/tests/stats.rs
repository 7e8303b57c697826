use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sppk_core::arithmetic::tau_k;
use sppk_core::representations::{r3, r4};
use sppk_core::stats::{
    avg_csv, lattice_total, omega_csv, omega_report, sum_d3, sum_r, tau_interval_sum, AvgKind, PolySpec,
};

#[test]
fn every_prefix_agrees() {
    let mut running = 0;
    for n in 1..=10_000u64 {
        running += r3(n).unwrap().ordered_count;
        assert_eq!(lattice_total(AvgKind::R3, n).unwrap(), running, "N={n}");
    }
    let mut running = 0;
    for n in 1..=2_000u64 {
        running += r4(n).unwrap().ordered_count;
        assert_eq!(lattice_total(AvgKind::R4, n).unwrap(), running, "N={n}");
    }
}

#[test]
fn two_paths_at_1e5() {
    assert!(sum_r(AvgKind::R3, 100_000).unwrap().paths_agree());
}

#[test]
fn normalized_anchors() {
    // Regression anchors from the first computation.
    let totals: Vec<u64> = [10_000, 100_000, 1_000_000]
        .iter()
        .map(|&n| lattice_total(AvgKind::R3, n).unwrap())
        .collect();
    assert_eq!(totals, vec![440_112, 6_954_121, 100_386_231]);
    assert_eq!(lattice_total(AvgKind::R4, 1_000).unwrap(), 79_963);
    assert_eq!(lattice_total(AvgKind::R4, 10_000).unwrap(), 1_814_623);
}

#[test]
fn d3_summatory_increments() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..100 {
        let n = rng.random_range(2..=100_000u64);
        assert_eq!(sum_d3(n).unwrap() - sum_d3(n - 1).unwrap(), tau_k(3, n as i64), "N={n}");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(18);
    for _ in 0..10_000 {
        let n = rng.random_range(2..=1_000_000u64);
        assert_eq!(sum_d3(n).unwrap() - sum_d3(n - 1).unwrap(), tau_k(3, n as i64), "N={n}");
    }
    assert!(sum_d3(100_000_001).is_err());
}

#[test]
fn difference_polynomial_grid() {
    let diff: PolySpec = "1:1,0;-1:0,1".parse().unwrap();
    for (k, n, m) in [
        (1, 10, 3),
        (2, 50, 49),
        (2, 1000, 100),
        (3, 1000, 100),
        (3, 777, 1),
        (3, 5000, 2500),
        (4, 200, 199),
        (4, 10_000, 300),
        (5, 3000, 1000),
        (2, 123_456, 5_000),
    ] {
        let got = tau_interval_sum(&diff, k, n, m).unwrap().raw;
        let want: u128 = (1..m as i64).map(|v| tau_k(k, v) as u128).sum();
        assert_eq!(got, want, "k={k} N={n} M={m}");
    }
}

#[test]
fn kernel_polynomial_stays_bounded() {
    // f(N, n) = N n - n^2 + 1, the R3 kernel with (n, x) in the roles of (N, n).
    let kernel: PolySpec = "1:1,1;-1:0,2;1:0,0".parse().unwrap();
    let values: Vec<f64> = [1_000, 10_000, 100_000]
        .iter()
        .map(|&n| tau_interval_sum(&kernel, 2, n, 100).unwrap().normalized)
        .collect();
    println!("kernel normalized: {values:?}");
    for v in &values {
        assert!(*v > 0.5 && *v < 3.0, "{values:?}");
    }
}

#[test]
fn omega_rows_at_1e5() {
    let rows = omega_report(100_000).unwrap();
    assert_eq!(rows[0].n, 4);
    for w in rows.windows(2) {
        assert!(w[0].n < w[1].n && w[0].r3 < w[1].r3);
    }
    for row in &rows {
        assert_eq!(row.r3, r3(row.n).unwrap().ordered_count);
        assert!(row.r3 >= row.family1 && row.r3 >= row.family2);
    }
    let csv = omega_csv(&rows);
    assert!(csv.starts_with("n,r3,d,family1,family2,paper_6d_minus_6,exponent_proxy\n4,1,3,1,0,12,0\n"));
    assert_eq!(csv.lines().count(), rows.len() + 1);
}

#[test]
fn avg_csv_fields_parse() {
    let reports = vec![sum_r(AvgKind::R3, 1_000).unwrap(), sum_r(AvgKind::R4, 1_000).unwrap()];
    let csv = avg_csv(&reports);
    for line in csv.lines().skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 5);
        fields[1].parse::<u64>().unwrap();
        fields[2].parse::<u64>().unwrap();
        fields[3].parse::<u64>().unwrap();
        fields[4].parse::<f64>().unwrap();
    }
}
