//! Dirichlet series with real coefficients: partial sums, the mean-square
//! time average over a vertical segment, the Cauchy–Schwarz comparison, and
//! coefficient algebra. Indices are 128-bit so prime-block constructions far
//! beyond 64-bit products stay exact.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use crate::error::{invalid, Error, Result};
use crate::quad::{integrate, panels_for_oscillation, QuadConfig};

/// Default cap on materialized coefficient entries.
pub const DEFAULT_ENTRY_CAP: usize = 10_000_000;

/// Absolute tolerance on the quadrature value of a time average.
pub const AVERAGE_QUAD_TOL: f64 = 1e-9;

/// Finite map `n -> a_n` representing `sum a_n n^{-s}`. Zero coefficients are
/// never stored; iteration is always in ascending index order.
#[derive(Debug, Clone, PartialEq)]
pub struct DirichletCoefficients {
    entries: BTreeMap<u128, f64>,
    cap: usize,
}

impl Default for DirichletCoefficients {
    fn default() -> Self {
        Self::new()
    }
}

impl DirichletCoefficients {
    pub fn new() -> Self {
        DirichletCoefficients { entries: BTreeMap::new(), cap: DEFAULT_ENTRY_CAP }
    }

    /// A map with a custom materialization cap (mainly for tests).
    pub fn with_cap(cap: usize) -> Self {
        DirichletCoefficients { entries: BTreeMap::new(), cap }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (u128, f64)>) -> Result<Self> {
        let mut c = Self::new();
        for (n, a) in pairs {
            c.set(n, a)?;
        }
        Ok(c)
    }

    /// Set `a_n`, removing the entry when the coefficient is exactly zero.
    pub fn set(&mut self, n: u128, a: f64) -> Result<()> {
        if n == 0 {
            return Err(invalid("Dirichlet indices start at 1"));
        }
        if !a.is_finite() {
            return Err(invalid(format!("coefficient at {n} must be finite")));
        }
        if a == 0.0 {
            self.entries.remove(&n);
            return Ok(());
        }
        if !self.entries.contains_key(&n) && self.entries.len() >= self.cap {
            return Err(Error::ResourceLimit(format!(
                "coefficient map exceeds cap of {} entries",
                self.cap
            )));
        }
        self.entries.insert(n, a);
        Ok(())
    }

    pub fn coefficient(&self, n: u128) -> f64 {
        self.entries.get(&n).copied().unwrap_or(0.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u128, f64)> + '_ {
        self.entries.iter().map(|(&n, &a)| (n, a))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_index(&self) -> Option<u128> {
        self.entries.keys().next_back().copied()
    }

    /// Entries with index at most `n_max`.
    pub fn truncated(&self, n_max: u128) -> Self {
        DirichletCoefficients {
            entries: self.entries.range(..=n_max).map(|(&n, &a)| (n, a)).collect(),
            cap: self.cap,
        }
    }

    /// Serialize as JSON lines `{"n": "<decimal>", "a": <number>}`, ascending
    /// in `n`. Indices are strings because they may exceed 64 bits.
    pub fn write_jsonl<W: Write>(&self, mut out: W) -> Result<()> {
        for (n, a) in self.iter() {
            let line = CoefficientLine { n: n.to_string(), a };
            serde_json::to_writer(&mut out, &line)?;
            out.write_all(b"\n")?;
        }
        Ok(())
    }

    pub fn read_jsonl<R: BufRead>(reader: R) -> Result<Self> {
        let mut c = Self::new();
        for line in reader.lines() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let parsed: CoefficientLine = serde_json::from_str(&line)?;
            let n: u128 = parsed
                .n
                .parse()
                .map_err(|_| invalid(format!("bad index {:?}", parsed.n)))?;
            if c.entries.contains_key(&n) {
                return Err(invalid(format!("duplicate index {n}")));
            }
            c.set(n, parsed.a)?;
        }
        Ok(c)
    }
}

#[derive(Serialize, Deserialize)]
struct CoefficientLine {
    n: String,
    a: f64,
}

/// Pointwise sum of two coefficient maps; exact zeros are dropped.
pub fn add(c1: &DirichletCoefficients, c2: &DirichletCoefficients) -> Result<DirichletCoefficients> {
    let mut out = c1.clone();
    for (n, a) in c2.iter() {
        let sum = out.coefficient(n) + a;
        out.set(n, sum)?;
    }
    Ok(out)
}

/// Coefficients of a shifted zeta tail: `a_n = n^{-lambda}` for `n <= n_max`,
/// so that the series evaluates as `sum n^{-(s + lambda)}` truncated.
pub fn zeta_shift_coeffs(lambda: f64, n_max: u128) -> Result<DirichletCoefficients> {
    let mut c = DirichletCoefficients::new();
    if n_max > c.cap as u128 {
        return Err(Error::ResourceLimit(format!(
            "n_max {} exceeds materialization cap {}",
            n_max, c.cap
        )));
    }
    for n in 1..=n_max as u64 {
        c.set(n as u128, (n as f64).powf(-lambda))?;
    }
    Ok(c)
}

#[inline]
fn complex_power_term(n: u128, s: Complex64) -> Complex64 {
    // n^{-s} = exp(-s ln n)
    (-s * (n as f64).ln()).exp()
}

/// Truncated series value `sum_{n <= n_max} a_n n^{-s}`, summed in ascending
/// index order with compensation.
pub fn partial_sum(coeffs: &DirichletCoefficients, s: Complex64, n_max: u128) -> Complex64 {
    let mut sum = Complex64::default();
    let mut comp = Complex64::default();
    for (n, a) in coeffs.iter() {
        if n > n_max {
            break;
        }
        let y = complex_power_term(n, s) * a - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    sum
}

/// Truncated absolute value `sum_{n <= n_max} |a_n| n^{-sigma}`.
pub fn absolute_partial_sum(coeffs: &DirichletCoefficients, sigma: f64, n_max: u128) -> f64 {
    let mut sum = 0.0;
    let mut comp = 0.0;
    for (n, a) in coeffs.iter() {
        if n > n_max {
            break;
        }
        let y = a.abs() * (n as f64).powf(-sigma) - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    sum
}

/// How to compute the time average of the squared partial-sum modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AverageMode {
    /// Diagonal plus sinc-weighted cross terms, evaluated directly.
    ClosedForm,
    /// `(1/2T) \int_{-T}^{T} |sum a_n n^{-b-it}|^2 dt` by adaptive quadrature.
    Quadrature,
}

fn line_terms(coeffs: &DirichletCoefficients, b: f64, n_max: u128) -> (Vec<f64>, Vec<f64>) {
    let mut amplitudes = Vec::new();
    let mut logs = Vec::new();
    for (n, a) in coeffs.iter() {
        if n > n_max {
            break;
        }
        amplitudes.push(a * (n as f64).powf(-b));
        logs.push((n as f64).ln());
    }
    (amplitudes, logs)
}

/// Average of `|sum_{n <= n_max} a_n n^{-b-it}|^2` over `t in [-T, T]`.
///
/// The closed form is the diagonal `sum a_n^2 n^{-2b}` plus twice the real
/// cross terms damped by `sin(T ln(m/n)) / (T ln(m/n))`; the quadrature mode
/// integrates the squared modulus directly and must agree within tolerance.
pub fn time_average_square(
    coeffs: &DirichletCoefficients,
    b: f64,
    t_max: f64,
    n_max: u128,
    mode: AverageMode,
) -> Result<f64> {
    if !(t_max > 0.0) || !t_max.is_finite() {
        return Err(invalid(format!("averaging window T must be positive, got {t_max}")));
    }
    let (amplitudes, logs) = line_terms(coeffs, b, n_max);
    if amplitudes.is_empty() {
        return Ok(0.0);
    }
    match mode {
        AverageMode::ClosedForm => {
            let diag: f64 = amplitudes.iter().map(|a| a * a).sum();
            let mut cross = 0.0;
            for i in 0..amplitudes.len() {
                for j in i + 1..amplitudes.len() {
                    let x = t_max * (logs[j] - logs[i]);
                    cross += amplitudes[i] * amplitudes[j] * (x.sin() / x);
                }
            }
            Ok(diag + 2.0 * cross)
        }
        AverageMode::Quadrature => {
            let omega = logs.last().copied().unwrap_or(0.0);
            let panels = panels_for_oscillation(-t_max, t_max, omega, 1 << 18);
            let cfg = QuadConfig { abs_tol: AVERAGE_QUAD_TOL * 2.0 * t_max, max_panels: 1 << 20 };
            let outcome = integrate(
                |t| {
                    let mut s = Complex64::default();
                    for (amp, ln_n) in amplitudes.iter().zip(&logs) {
                        s += amp * Complex64::from_polar(1.0, -t * ln_n);
                    }
                    Complex64::new(s.norm_sqr(), 0.0)
                },
                -t_max,
                t_max,
                panels,
                &cfg,
            )?;
            Ok(outcome.value.re / (2.0 * t_max))
        }
    }
}

/// Explicit bound on how far the time average can sit from its diagonal:
/// `(2/T) sum_{n<m} |a_n a_m| (nm)^{-b} / ln(m/n)`.
pub fn average_tail_bound(coeffs: &DirichletCoefficients, b: f64, t_max: f64, n_max: u128) -> f64 {
    let (amplitudes, logs) = line_terms(coeffs, b, n_max);
    let mut total = 0.0;
    for i in 0..amplitudes.len() {
        for j in i + 1..amplitudes.len() {
            total += (amplitudes[i] * amplitudes[j]).abs() / (logs[j] - logs[i]);
        }
    }
    2.0 * total / t_max
}

/// Both sides of the splitting of `sum |a_n| n^{-(b+eps+1/2)}` into an
/// L2 factor and a zeta-tail factor.
#[derive(Debug, Clone, Copy)]
pub struct CauchySchwarzReport {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

/// Compare `sum_{n<=N} |a_n| n^{-(b+eps+1/2)}` against
/// `sqrt(sum |a_n|^2 n^{-2b}) * sqrt(sum_{n<=N} n^{-1-2eps})`.
/// The zeta factor runs over all integers up to `n_max`, so cost is O(n_max).
pub fn cauchy_schwarz_check(
    coeffs: &DirichletCoefficients,
    b: f64,
    eps: f64,
    n_max: u128,
) -> Result<CauchySchwarzReport> {
    if !(eps > 0.0) {
        return Err(invalid(format!("eps must be positive, got {eps}")));
    }
    let mut lhs = 0.0;
    let mut square_sum = 0.0;
    for (n, a) in coeffs.iter() {
        if n > n_max {
            break;
        }
        let nf = n as f64;
        lhs += a.abs() * nf.powf(-(b + eps + 0.5));
        square_sum += a * a * nf.powf(-2.0 * b);
    }
    let mut zeta_factor = 0.0;
    let mut n = 1u128;
    while n <= n_max {
        zeta_factor += (n as f64).powf(-1.0 - 2.0 * eps);
        n += 1;
    }
    let rhs = square_sum.sqrt() * zeta_factor.sqrt();
    Ok(CauchySchwarzReport { lhs, rhs, holds: lhs <= rhs * (1.0 + 1e-12) })
}

/// Whether abscissa values are proved or merely estimated from samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Provenance {
    Theoretical,
    EmpiricalDiagnostic,
}

/// The three convergence abscissas of a Dirichlet series: absolute (A),
/// uniform (B), and conditional (C), with C <= B <= A and A - C <= 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AbscissaTriple {
    pub sigma_abs: f64,
    pub sigma_unif: f64,
    pub sigma_conv: f64,
    pub provenance: Provenance,
}

impl AbscissaTriple {
    pub fn new(sigma_abs: f64, sigma_unif: f64, sigma_conv: f64, provenance: Provenance) -> Result<Self> {
        if sigma_abs.is_nan() || sigma_unif.is_nan() || sigma_conv.is_nan() {
            return Err(invalid("abscissas must not be NaN"));
        }
        if !(sigma_conv <= sigma_unif && sigma_unif <= sigma_abs) {
            return Err(invalid(format!(
                "abscissas must satisfy C <= B <= A, got C={sigma_conv}, B={sigma_unif}, A={sigma_abs}"
            )));
        }
        if sigma_abs.is_finite() && sigma_conv.is_finite() && sigma_abs - sigma_conv > 1.0 + 1e-12 {
            return Err(invalid(format!(
                "conditional-convergence strip is at most 1 wide, got A - C = {}",
                sigma_abs - sigma_conv
            )));
        }
        Ok(AbscissaTriple { sigma_abs, sigma_unif, sigma_conv, provenance })
    }

    /// Width of the strip of uniform but not absolute convergence.
    pub fn strip_width(&self) -> f64 {
        self.sigma_abs - self.sigma_unif
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use std::f64::consts::PI;

    fn eta(n_max: u64) -> DirichletCoefficients {
        DirichletCoefficients::from_pairs(
            (1..=n_max).map(|n| (n as u128, if n % 2 == 1 { 1.0 } else { -1.0 })),
        )
        .unwrap()
    }

    #[test]
    fn set_drops_zeros_and_validates() {
        let mut c = DirichletCoefficients::new();
        c.set(5, 2.0).unwrap();
        c.set(5, 0.0).unwrap();
        assert!(c.is_empty());
        assert!(c.set(0, 1.0).is_err());
        assert!(c.set(1, f64::NAN).is_err());
    }

    #[test]
    fn cap_is_enforced() {
        let mut c = DirichletCoefficients::with_cap(2);
        c.set(1, 1.0).unwrap();
        c.set(2, 1.0).unwrap();
        assert!(matches!(c.set(3, 1.0), Err(Error::ResourceLimit(_))));
        // overwriting an existing index is fine at the cap
        c.set(2, 3.0).unwrap();
    }

    #[test]
    fn add_cancels_and_merges() {
        let c = DirichletCoefficients::from_pairs([(1, 1.0), (2, -2.0)]).unwrap();
        let minus: DirichletCoefficients =
            DirichletCoefficients::from_pairs(c.iter().map(|(n, a)| (n, -a))).unwrap();
        assert!(add(&c, &minus).unwrap().is_empty());

        let a = DirichletCoefficients::from_pairs([(1, 1.0)]).unwrap();
        let b = DirichletCoefficients::from_pairs([(2, 1.0)]).unwrap();
        let merged = add(&a, &b).unwrap();
        assert_eq!(merged.coefficient(1), 1.0);
        assert_eq!(merged.coefficient(2), 1.0);

        let doubled = add(&eta(10), &eta(10)).unwrap();
        for n in 1..=10u128 {
            let expected = if n % 2 == 1 { 2.0 } else { -2.0 };
            assert_eq!(doubled.coefficient(n), expected);
        }
    }

    #[test]
    fn partial_sum_single_term_and_linearity() {
        let one = DirichletCoefficients::from_pairs([(1, 1.0)]).unwrap();
        for s in [Complex64::new(0.3, -2.0), Complex64::new(5.0, 40.0)] {
            assert_eq!(partial_sum(&one, s, 100), Complex64::new(1.0, 0.0));
        }

        let c1 = DirichletCoefficients::from_pairs([(2, 0.5), (3, -1.5), (7, 2.0)]).unwrap();
        let c2 = DirichletCoefficients::from_pairs([(2, -0.25), (5, 1.0)]).unwrap();
        let s = Complex64::new(0.7, 1.3);
        let lhs = partial_sum(&add(&c1, &c2).unwrap(), s, 100);
        let rhs = partial_sum(&c1, s, 100) + partial_sum(&c2, s, 100);
        assert_abs_diff_eq!(lhs.re, rhs.re, epsilon = 1e-14);
        assert_abs_diff_eq!(lhs.im, rhs.im, epsilon = 1e-14);
    }

    #[test]
    fn eta_partial_sum_approaches_pi_squared_over_twelve() {
        let value = partial_sum(&eta(10_000), Complex64::new(2.0, 0.0), 10_000);
        assert_abs_diff_eq!(value.re, PI * PI / 12.0, epsilon = 1e-4);
        assert_abs_diff_eq!(value.im, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn absolute_sums_match_known_values() {
        assert_relative_eq!(absolute_partial_sum(&eta(100), 0.0, 100), 100.0, max_relative = 1e-15);

        let single = DirichletCoefficients::from_pairs([(1, -2.0)]).unwrap();
        assert_relative_eq!(absolute_partial_sum(&single, 3.0, 10), 2.0, max_relative = 1e-15);

        // sum n^{-2} up to 1e6 sits within 1e-5 of pi^2/6
        let big = eta(1_000_000);
        assert_abs_diff_eq!(absolute_partial_sum(&big, 2.0, 1_000_000), PI * PI / 6.0, epsilon = 1e-5);
    }

    #[test]
    fn time_average_constant_term_is_one() {
        let one = DirichletCoefficients::from_pairs([(1, 1.0)]).unwrap();
        for t in [0.5, 10.0, 1e4] {
            let avg = time_average_square(&one, 0.37, t, 10, AverageMode::ClosedForm).unwrap();
            assert_relative_eq!(avg, 1.0, max_relative = 1e-15);
        }
        let quad = time_average_square(&one, 0.0, 3.0, 10, AverageMode::Quadrature).unwrap();
        assert_relative_eq!(quad, 1.0, max_relative = 1e-12);
    }

    #[test]
    fn two_term_average_matches_sinc_formula() {
        let c = DirichletCoefficients::from_pairs([(1, 1.0), (2, 1.0)]).unwrap();
        let expected = 2.0 + 2.0 * (1.0f64 * 2.0f64.ln()).sin() / 2.0f64.ln();
        let closed = time_average_square(&c, 0.0, 1.0, 2, AverageMode::ClosedForm).unwrap();
        assert_relative_eq!(closed, expected, max_relative = 1e-14);
        assert_relative_eq!(closed, 3.8436525, max_relative = 1e-6);

        let quad = time_average_square(&c, 0.0, 1.0, 2, AverageMode::Quadrature).unwrap();
        assert_abs_diff_eq!(quad, expected, epsilon = 1e-9);

        // long windows collapse to the diagonal
        let long = time_average_square(&c, 0.0, 1e4, 2, AverageMode::ClosedForm).unwrap();
        assert_abs_diff_eq!(long, 2.0, epsilon = 1e-3);
        let exact_long = 2.0 + 2.0 * (1e4 * 2.0f64.ln()).sin() / (1e4 * 2.0f64.ln());
        assert_relative_eq!(long, exact_long, max_relative = 1e-13);
    }

    #[test]
    fn modes_agree_and_tail_bound_holds() {
        let prf = crate::prf::CounterPrf::new(&[41]);
        for case in 0..5u64 {
            let n_terms = 3 + prf.value(case as u128) % 20;
            let b = prf.unit_f64((100 + case) as u128);
            let t_max = 1.0 + 200.0 * prf.unit_f64((200 + case) as u128);
            let coeffs = DirichletCoefficients::from_pairs((1..=n_terms).map(|n| {
                (n as u128, 2.0 * prf.unit_f64((1000 * case + n) as u128) - 1.0)
            }))
            .unwrap();
            let closed =
                time_average_square(&coeffs, b, t_max, n_terms as u128, AverageMode::ClosedForm)
                    .unwrap();
            let quad =
                time_average_square(&coeffs, b, t_max, n_terms as u128, AverageMode::Quadrature)
                    .unwrap();
            assert_abs_diff_eq!(closed, quad, epsilon = 1e-6);

            let diag: f64 = coeffs
                .iter()
                .map(|(n, a)| a * a * (n as f64).powf(-2.0 * b))
                .sum();
            let bound = average_tail_bound(&coeffs, b, t_max, n_terms as u128);
            assert!(
                (closed - diag).abs() <= bound * (1.0 + 1e-9) + 1e-15,
                "tail bound violated: |{closed} - {diag}| > {bound}"
            );
        }
    }

    #[test]
    fn time_average_rejects_bad_window() {
        let c = eta(4);
        assert!(time_average_square(&c, 0.0, 0.0, 4, AverageMode::ClosedForm).is_err());
        assert!(time_average_square(&c, 0.0, -1.0, 4, AverageMode::Quadrature).is_err());
    }

    #[test]
    fn cauchy_schwarz_equality_and_eta_cases() {
        let one = DirichletCoefficients::from_pairs([(1, 1.0)]).unwrap();
        let report = cauchy_schwarz_check(&one, 0.7, 0.1, 1).unwrap();
        assert_relative_eq!(report.lhs, 1.0, max_relative = 1e-15);
        assert_relative_eq!(report.rhs, 1.0, max_relative = 1e-15);
        assert!(report.holds);

        let report = cauchy_schwarz_check(&eta(100), 0.0, 0.25, 100).unwrap();
        assert!(report.holds, "lhs {} rhs {}", report.lhs, report.rhs);

        assert!(cauchy_schwarz_check(&one, 0.0, 0.0, 1).is_err());
    }

    #[test]
    fn cauchy_schwarz_holds_for_random_sign_patterns() {
        let prf = crate::prf::CounterPrf::new(&[7]);
        for seed in 0..100u128 {
            let coeffs = DirichletCoefficients::from_pairs(
                (1..=500u64).map(|n| (n as u128, prf.sign(seed * 1000 + n as u128))),
            )
            .unwrap();
            let report = cauchy_schwarz_check(&coeffs, 0.3, 0.1, 500).unwrap();
            assert!(report.holds, "seed {seed}: lhs {} rhs {}", report.lhs, report.rhs);
        }
    }

    #[test]
    fn zeta_shift_values_and_identity() {
        let flat = zeta_shift_coeffs(0.0, 5).unwrap();
        assert_eq!(flat.len(), 5);
        for n in 1..=5u128 {
            assert_eq!(flat.coefficient(n), 1.0);
        }
        assert_relative_eq!(zeta_shift_coeffs(1.0, 4).unwrap().coefficient(2), 0.5, max_relative = 1e-15);

        let shifted = zeta_shift_coeffs(0.3, 100).unwrap();
        let ones = zeta_shift_coeffs(0.0, 100).unwrap();
        let s = Complex64::new(1.1, 2.2);
        let lhs = partial_sum(&shifted, s, 100);
        let rhs = partial_sum(&ones, s + 0.3, 100);
        assert!((lhs - rhs).norm() <= 1e-12 * rhs.norm());
    }

    #[test]
    fn jsonl_round_trips_and_uses_string_indices() {
        let c = DirichletCoefficients::from_pairs([
            (49, -1.0),
            (1u128 << 80, 0.125),
            (3, 2.5),
        ])
        .unwrap();
        let mut buffer = Vec::new();
        c.write_jsonl(&mut buffer).unwrap();
        let text = String::from_utf8(buffer.clone()).unwrap();
        assert!(text.contains("{\"n\":\"49\",\"a\":-1.0}"));
        let back = DirichletCoefficients::read_jsonl(buffer.as_slice()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn abscissa_triple_orderings() {
        let eta_triple =
            AbscissaTriple::new(1.0, 1.0, 0.0, Provenance::Theoretical).unwrap();
        assert_eq!(eta_triple.strip_width(), 0.0);

        assert!(AbscissaTriple::new(1.0, 0.5, 0.6, Provenance::Theoretical).is_err());
        assert!(AbscissaTriple::new(2.0, 1.0, 0.5, Provenance::Theoretical).is_err());
        // a finite Dirichlet polynomial converges everywhere
        let finite_poly = AbscissaTriple::new(
            f64::NEG_INFINITY,
            f64::NEG_INFINITY,
            f64::NEG_INFINITY,
            Provenance::Theoretical,
        );
        assert!(finite_poly.is_ok());
        let entire = AbscissaTriple::new(f64::INFINITY, 1.0, 0.5, Provenance::EmpiricalDiagnostic);
        assert!(entire.is_ok());
    }

    #[test]
    fn bounded_line_implies_bounded_square_mass() {
        // For a finite series, the diagonal equals the limiting time average,
        // which a dense scan of |S(b+it)| over a long window dominates.
        let b = 0.4;
        let coeffs = eta(12);
        let diag: f64 = coeffs.iter().map(|(n, a)| a * a * (n as f64).powf(-2.0 * b)).sum();

        let (amps, logs) = super::line_terms(&coeffs, b, 12);
        let mut sup: f64 = 0.0;
        let step = 0.01;
        let mut t = 0.0;
        while t <= 2000.0 {
            let mut s = Complex64::default();
            for (a, l) in amps.iter().zip(&logs) {
                s += a * Complex64::from_polar(1.0, -t * l);
            }
            sup = sup.max(s.norm());
            t += step;
        }
        assert!(
            diag <= sup * sup * 1.05,
            "diagonal {diag} exceeds measured sup^2 {}",
            sup * sup
        );
    }

    #[test]
    fn infinity_strip_width_is_fine_without_finite_check() {
        let t = AbscissaTriple::new(f64::INFINITY, 0.0, -0.5, Provenance::Theoretical).unwrap();
        assert!(t.strip_width().is_infinite());
    }
}
