//! Acceptance suite: one test per shipping criterion, each printing a single
//! PASS line with its measured numbers. Run with
//! `cargo test -p bohrstrip-cli --test acceptance -- --nocapture` to see them.

use num_complex::Complex64;
use std::process::Command;

use bohrstrip::construction::{
    block_absolute_sum, block_line_sup, build_block, build_series, BlockData, BlockSpec,
};
use bohrstrip::dirichlet::{
    cauchy_schwarz_check, time_average_square, AverageMode, DirichletCoefficients,
};
use bohrstrip::monomials::count_monomials;
use bohrstrip::perron::{
    kernel_edge_integral, perron_error_scan, perron_partial_sum, ContourSpec, SeriesFunction,
};
use bohrstrip::prf::CounterPrf;
use bohrstrip::primes::pnt_ratio_scan;
use bohrstrip::quad::QuadConfig;
use bohrstrip::randpoly::{
    estimate_sup_polytorus_with, kahane_bound, make_polynomial, SignSource, SupSearchConfig,
};
use bohrstrip::zeta_eta::{
    cesaro_value, eta_accelerated, eta_coefficients, zeta_via_eta, SINGULAR_FACTOR_TOL,
};

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

#[test]
fn c01_construction_shape() {
    let seed = 1;
    let series = build_series(5, seed).unwrap();

    let expected_counts: Vec<u128> =
        (2..=5u32).map(|k| count_monomials(1 << k, k).unwrap()).collect();
    assert_eq!(expected_counts, vec![10, 120, 3876, 376_992]);

    // per-block counts
    for (k, &expected) in (2..=5u32).zip(&expected_counts) {
        let BlockData::Materialized(block) = build_block(k, seed).unwrap() else {
            panic!("block {k} should materialize");
        };
        assert_eq!(block.len() as u128, expected, "block {k} count");
    }

    // the union has the full count, so supports are disjoint
    let total: u128 = expected_counts.iter().sum();
    assert_eq!(series.materialized().len() as u128, total);

    // coefficients are ±1 and the support starts at 49
    let mut min_index = u128::MAX;
    for (n, a) in series.materialized().iter() {
        assert!(a == 1.0 || a == -1.0, "coefficient {a} at {n}");
        min_index = min_index.min(n);
    }
    assert_eq!(min_index, 49);

    println!(
        "criterion 01 PASS: construction shape — per-block counts {expected_counts:?}, \
         union {total}, min index 49, all coefficients ±1"
    );
}

#[test]
fn c02_monomial_bracketing() {
    let factorial = |m: u32| -> u128 { (1..=m as u128).product() };
    let mut checked = 0u32;
    for n in 2u32..=64 {
        for m in 2u32..=9 {
            let count = count_monomials(n, m).unwrap();
            let n_pow_m = (n as u128).pow(m);
            assert!(count <= n_pow_m, "upper bound fails at ({n}, {m})");
            assert!(n_pow_m <= count * factorial(m), "lower bound fails at ({n}, {m})");
            checked += 1;
        }
    }
    println!(
        "criterion 02 PASS: monomial bracketing n^m/m! <= count <= n^m on {checked} \
         (n, m) pairs, exact integers"
    );
}

#[test]
fn c03_prime_ratio_window() {
    let report = pnt_ratio_scan(1_000_000, 3.0).unwrap();
    assert!(
        report.all_within,
        "ratio window violated: [{}, {}]",
        report.min_ratio, report.max_ratio
    );
    println!(
        "criterion 03 PASS: p_n/(n ln n) in (1/3, 3) for n up to 1e6 — observed \
         [{:.6}, {:.6}]",
        report.min_ratio, report.max_ratio
    );
}

#[test]
fn c04_time_average_identity() {
    // twenty seeded coefficient sets: closed form vs quadrature
    let prf = CounterPrf::new(&[0xA4]);
    let mut worst: f64 = 0.0;
    for case in 0..20u64 {
        let n_terms = 3 + prf.value(case as u128) % 48; // N <= 50
        let b = prf.unit_f64((500 + case) as u128);
        let t_max = 1.0 + 999.0 * prf.unit_f64((900 + case) as u128);
        let coeffs = DirichletCoefficients::from_pairs((1..=n_terms).map(|n| {
            (n as u128, 2.0 * prf.unit_f64((10_000 * case + n) as u128) - 1.0)
        }))
        .unwrap();
        let closed =
            time_average_square(&coeffs, b, t_max, n_terms as u128, AverageMode::ClosedForm)
                .unwrap();
        let quad =
            time_average_square(&coeffs, b, t_max, n_terms as u128, AverageMode::Quadrature)
                .unwrap();
        worst = worst.max((closed - quad).abs());
        assert!(
            (closed - quad).abs() <= 1e-6,
            "case {case}: closed {closed} vs quadrature {quad}"
        );
    }

    // two-term case with its exact value at T = 1e4
    let two = DirichletCoefficients::from_pairs([(1, 1.0), (2, 1.0)]).unwrap();
    let avg = time_average_square(&two, 0.0, 1e4, 2, AverageMode::ClosedForm).unwrap();
    let exact = 2.0 + 2.0 * (1e4 * 2.0f64.ln()).sin() / (1e4 * 2.0f64.ln());
    assert!((avg - exact).abs() <= 1e-12, "closed form {avg} vs exact {exact}");
    assert!((avg - 2.0).abs() <= 1e-3, "T = 1e4 average {avg} not within 1e-3 of diagonal");

    println!(
        "criterion 04 PASS: time-average identity — 20 seeded sets agree within 1e-6 \
         (worst {worst:.2e}); two-term T=1e4 average {avg:.10} vs diagonal 2"
    );
}

#[test]
fn c05_cauchy_schwarz_step() {
    let prf = CounterPrf::new(&[0xC5]);
    let mut runs = 0u32;
    for seed in 0..100u128 {
        let coeffs = DirichletCoefficients::from_pairs(
            (1..=500u64).map(|n| (n as u128, prf.sign(seed * 1000 + n as u128))),
        )
        .unwrap();
        let report = cauchy_schwarz_check(&coeffs, 0.3, 0.1, 500).unwrap();
        assert!(report.holds, "seed {seed}: lhs {} rhs {}", report.lhs, report.rhs);
        runs += 1;
    }
    for n_max in [10u64, 100, 1000] {
        for (b, eps) in [(0.0, 0.25), (0.5, 0.1), (1.0, 0.05)] {
            let report =
                cauchy_schwarz_check(&eta_coefficients(n_max), b, eps, n_max as u128).unwrap();
            assert!(report.holds, "eta N={n_max}, b={b}, eps={eps}");
            runs += 1;
        }
    }
    println!("criterion 05 PASS: Cauchy–Schwarz comparison holds on all {runs} instances");
}

#[test]
fn c06_kahane_scale_gap() {
    let n_vars = 64;
    let degree = 3;
    let poly_bound = 3.0 * kahane_bound(n_vars, degree, 1.0).unwrap(); // 3 * 64^2 sqrt(ln 3)
    let term_count = count_monomials(n_vars, degree).unwrap() as f64;
    assert_eq!(term_count, 45_760.0);

    let cfg = SupSearchConfig { refine_sweeps: 1, golden_iters: 12 };
    let radii = vec![1.0; n_vars as usize];
    let mut estimates = Vec::new();
    for seed in 0..50u64 {
        let poly = make_polynomial(n_vars, degree, SignSource::Seeded(seed)).unwrap();
        let est = estimate_sup_polytorus_with(&poly, &radii, 2000, seed, &cfg).unwrap();
        assert!(
            est.estimate <= term_count * (1.0 + 1e-12),
            "seed {seed} exceeds the term-count bound"
        );
        estimates.push(est.estimate);
    }
    let within = estimates.iter().filter(|&&e| e <= poly_bound).count();
    assert!(
        within * 10 >= estimates.len() * 9,
        "only {within}/50 seeds inside 3x the probabilistic scale {poly_bound}"
    );

    // the gap: sampled sups sit at the sqrt(term count) scale, far below 45760
    let mut sorted = estimates.clone();
    sorted.sort_by(f64::total_cmp);
    let median = sorted[sorted.len() / 2];
    assert!(median >= term_count.sqrt(), "median {median} below sqrt scale");
    assert!(median <= poly_bound, "median {median} above the probabilistic scale");

    println!(
        "criterion 06 PASS: sampled sups at (64, 3) — {within}/50 seeds within 3x \
         probabilistic scale {poly_bound:.1}; median {median:.1} vs term count 45760"
    );
}

#[test]
fn c07_block_decay_vs_growth_at_the_half_line() {
    // sampled line sups strictly decrease for k = 2..5
    let sups: Vec<f64> = (2..=5u32)
        .map(|k| block_line_sup(k, 0, 0.5, 4096, 0).unwrap().estimate)
        .collect();
    assert!(
        sups.windows(2).all(|w| w[0] > w[1]),
        "line sups not strictly decreasing: {sups:?}"
    );

    // exact absolute sums strictly increase for k = 4..6 (block 6 streamed)
    let abs_sums: Vec<f64> =
        (4..=6u32).map(|k| block_absolute_sum(k, 0.5).unwrap()).collect();
    assert!(
        abs_sums.windows(2).all(|w| w[0] < w[1]),
        "absolute sums not strictly increasing: {abs_sums:?}"
    );

    // the streamed block-6 support has exactly the binomial count
    let mut streamed_count = 0u64;
    bohrstrip::construction::fold_block_support(6, |_, _| streamed_count += 1).unwrap();
    assert_eq!(streamed_count as u128, count_monomials(64, 6).unwrap());
    assert_eq!(streamed_count, 119_877_472);

    // independent oracle for the streamed block-6 sum: h_6 at p^{-1/2} from
    // power sums via Newton's identity
    let spec = BlockSpec::new(6).unwrap();
    let xs: Vec<f64> = spec.primes().iter().map(|&p| (p as f64).powf(-0.5)).collect();
    let power_sum = |i: i32| -> f64 { xs.iter().map(|x| x.powi(i)).sum() };
    let mut h = [0.0f64; 7];
    h[0] = 1.0;
    for t in 1..=6usize {
        h[t] = (1..=t).map(|i| power_sum(i as i32) * h[t - i]).sum::<f64>() / t as f64;
    }
    let rel = (abs_sums[2] - h[6]).abs() / h[6];
    assert!(rel < 1e-9, "streamed block-6 sum {} vs oracle {}", abs_sums[2], h[6]);

    println!(
        "criterion 07 PASS: line sups decrease {sups:?}; absolute sums increase \
         {abs_sums:?} (block 6 streamed over 119,877,472 terms, oracle agreement \
         {rel:.1e})"
    );
}

#[test]
fn c08_perron_exactness_and_kernel_dichotomy() {
    // contour recovery of a finite Dirichlet polynomial
    let coeffs = DirichletCoefficients::from_pairs([(1, 1.0), (2, -1.0), (3, 2.0)]).unwrap();
    let spec = ContourSpec::new(re(1.0), 2.0, 0.0, 0.5, 2).unwrap();
    let recovered = perron_partial_sum(&SeriesFunction::Coefficients(&coeffs), &spec).unwrap();
    let coeff_mass: f64 = coeffs.iter().map(|(_, b)| b.abs()).sum();
    let budget = 10.0 * spec.quad.abs_tol * (1.0 + coeff_mass);
    let error = (recovered - re(0.5)).norm();
    assert!(error <= budget, "recovery error {error} above 10*tolerance budget {budget}");

    // kernel dichotomy within the explicit tail bound
    let quad = QuadConfig::default();
    let mut worst_margin: f64 = 0.0;
    for &r in &[0.25, 0.5, 2.0, 4.0] {
        for &h in &[1e2, 1e3] {
            let value = kernel_edge_integral(r, 1.0, h, &quad).unwrap();
            let limit = if r > 1.0 { 1.0 } else { 0.0 };
            let bound = r / (std::f64::consts::PI * h * r.ln().abs()) + quad.abs_tol;
            let deviation = (value.re - limit).abs();
            assert!(deviation <= bound, "r={r}, H={h}: {deviation} > {bound}");
            worst_margin = worst_margin.max(deviation / bound);
        }
    }
    println!(
        "criterion 08 PASS: contour recovery error {error:.2e} <= {budget:.2e}; kernel \
         dichotomy within tail bounds (worst margin {worst_margin:.2})"
    );
}

#[test]
fn c09_perron_error_law() {
    let s = re(0.8);
    let reference = eta_accelerated(s).unwrap();
    let coeffs = eta_coefficients(128);
    let rows = perron_error_scan(reference, &coeffs, s, 0.3, &[8, 16, 32, 64]).unwrap();
    let ratios: Vec<f64> = rows.iter().map(|r| r.ratio).collect();
    let max = ratios.iter().cloned().fold(f64::MIN, f64::max);
    let min = ratios.iter().cloned().fold(f64::MAX, f64::min);
    assert!(
        max / min <= 10.0,
        "ratio column spread {:.3} exceeds 10: {ratios:?}",
        max / min
    );
    println!(
        "criterion 09 PASS: error/(M^-0.3 ln M) stays within a factor {:.2} band over \
         M in {{8, 16, 32, 64}}",
        max / min
    );
}

#[test]
fn c10_zeta_identities() {
    let basel = zeta_via_eta(re(2.0), 100_000, SINGULAR_FACTOR_TOL).unwrap();
    let basel_err = (basel.re - std::f64::consts::PI.powi(2) / 6.0).abs();
    assert!(basel_err <= 1e-6, "zeta(2) error {basel_err}");

    assert!(matches!(
        zeta_via_eta(re(1.0), 1000, SINGULAR_FACTOR_TOL),
        Err(bohrstrip::Error::SingularFactor(_))
    ));

    let grandi = (0..10_000u64).map(|n| re(if n % 2 == 0 { 1.0 } else { -1.0 }));
    let eta0 = cesaro_value(grandi, 1, 10_000).unwrap();
    assert!((eta0.re - 0.5).abs() <= 1e-3, "Grandi mean {}", eta0.re);
    let zeta0 = eta0.re / (1.0 - 2.0);
    assert!((zeta0 + 0.5).abs() <= 1e-3, "derived zeta(0) = {zeta0}");

    println!(
        "criterion 10 PASS: zeta(2) within {basel_err:.1e} of pi^2/6; s = 1 raises the \
         singular factor; Grandi mean {:.6} gives zeta(0) = {zeta0:.6}",
        eta0.re
    );
}

#[test]
fn c11_construct_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let out = dir.path().join(name);
        let status = Command::new(env!("CARGO_BIN_EXE_bohrstrip"))
            .args(["construct", "--kmax", "3", "--seed", "1", "--out", out.to_str().unwrap()])
            .status()
            .expect("binary runs");
        assert!(status.success());
        ["coefficients.jsonl", "blocks.json", "manifest.json"]
            .iter()
            .map(|f| std::fs::read(out.join(f)).unwrap())
            .collect::<Vec<_>>()
    };
    let first = run("a");
    let second = run("b");
    assert_eq!(first, second, "construct artifacts differ between identical runs");
    println!("criterion 11 PASS: identical construct runs produce byte-identical artifacts");
}
