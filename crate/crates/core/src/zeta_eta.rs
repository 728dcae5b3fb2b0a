//! The alternating zeta series, its conversion factor to zeta, and iterated
//! Cesàro averaging as a summability device.

use num_complex::Complex64;

use crate::dirichlet::{AbscissaTriple, DirichletCoefficients, Provenance};
use crate::error::{invalid, Error, Result};

/// Default threshold below which the conversion factor `1 - 2^{1-s}` is
/// treated as singular.
pub const SINGULAR_FACTOR_TOL: f64 = 1e-8;

const ACCEL_CAP: usize = 64;

/// Truncated alternating series `sum_{n <= n_max} (-1)^{n+1} n^{-s}`,
/// summed in ascending order.
pub fn eta_partial(s: Complex64, n_max: u64) -> Complex64 {
    let mut sum = Complex64::default();
    let mut comp = Complex64::default();
    for n in 1..=n_max {
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        let term = (-s * (n as f64).ln()).exp() * sign;
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    sum
}

/// Alternating-series value by iterated averaging of partial sums.
///
/// Each new partial sum extends an averaging tableau one antidiagonal; the
/// corner entry converges geometrically for smoothly decaying terms. Depth
/// is adaptive with a hard cap of 64 rows.
pub fn eta_accelerated(s: Complex64) -> Result<Complex64> {
    let mut diagonal: Vec<Complex64> = Vec::with_capacity(ACCEL_CAP);
    let mut partial = Complex64::default();
    let mut prev_corner = Complex64::default();
    let mut best = (f64::INFINITY, Complex64::default());
    for k in 0..ACCEL_CAP {
        let n = (k + 1) as f64;
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        partial += (-s * n.ln()).exp() * sign;

        // new antidiagonal: d'[0] = S_k, d'[i+1] = (d[i] + d'[i]) / 2
        let mut next = Vec::with_capacity(diagonal.len() + 1);
        next.push(partial);
        for i in 0..diagonal.len() {
            let v = (diagonal[i] + next[i]) * 0.5;
            next.push(v);
        }
        diagonal = next;
        let corner = *diagonal.last().expect("nonempty");

        if k >= 8 {
            let diff = (corner - prev_corner).norm();
            if diff < best.0 {
                best = (diff, corner);
            }
            if diff <= 1e-12 * (1.0 + corner.norm()) {
                return Ok(corner);
            }
        }
        prev_corner = corner;
    }
    if best.0 <= 1e-10 * (1.0 + best.1.norm()) {
        return Ok(best.1);
    }
    Err(Error::AccelerationFailure {
        context: format!("alternating series at s = {s}"),
        error_estimate: best.0,
    })
}

// Bernoulli numbers B_2, B_4, ..., B_24.
const BERNOULLI_EVEN: [f64; 12] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
];

/// Zeta by Euler–Maclaurin summation, accurate far up a vertical line where
/// alternating-series acceleration stalls. Needs `Re s > 0` and `s` away
/// from the pole at 1.
pub fn zeta_euler_maclaurin(s: Complex64) -> Result<Complex64> {
    if s.re <= 0.0 {
        return Err(invalid(format!("Euler–Maclaurin route needs Re s > 0, got {}", s.re)));
    }
    if (s - Complex64::new(1.0, 0.0)).norm() < 1e-8 {
        return Err(Error::SingularFactor(format!("zeta has a pole at s = 1; got s = {s}")));
    }
    let cutoff = 32.0f64.max((0.5 * s.norm()).ceil());
    let n = cutoff as u64;
    let nf = cutoff;

    let mut main = Complex64::default();
    for j in 1..n {
        main += (-s * (j as f64).ln()).exp();
    }
    let ln_n = nf.ln();
    let n_pow = |e: Complex64| (e * ln_n).exp();
    let mut value = main + n_pow(-s) * 0.5 + n_pow(Complex64::new(1.0, 0.0) - s) / (s - 1.0);

    // correction terms B_2k/(2k)! * N^{1-s-2k} * s(s+1)...(s+2k-2)
    let mut rising = s;
    let mut factorial = 2.0f64;
    let mut n_shift = n_pow(-s - 1.0);
    let n_step = nf.powi(-2);
    let mut last_mag = f64::INFINITY;
    for (k, &b) in BERNOULLI_EVEN.iter().enumerate() {
        let term = rising * (b / factorial) * n_shift;
        value += term;
        last_mag = term.norm();
        let two_k = 2.0 * (k + 1) as f64;
        rising *= (s + two_k - 1.0) * (s + two_k);
        factorial *= (two_k + 1.0) * (two_k + 2.0);
        n_shift *= n_step;
    }
    if last_mag > 1e-9 * (1.0 + value.norm()) {
        return Err(Error::AccelerationFailure {
            context: format!("Euler–Maclaurin tail at s = {s}"),
            error_estimate: last_mag,
        });
    }
    Ok(value)
}

/// Evaluator for the alternating series valid far up vertical lines:
/// averaging acceleration near the real axis, the Euler–Maclaurin route
/// through `zeta * (1 - 2^{1-s})` beyond it.
pub fn eta_evaluator(s: Complex64) -> Result<Complex64> {
    if s.im.abs() <= 10.0 {
        eta_accelerated(s)
    } else {
        let factor = Complex64::new(1.0, 0.0) - ((1.0 - s) * 2.0f64.ln()).exp();
        Ok(zeta_euler_maclaurin(s)? * factor)
    }
}

/// Zeta through the alternating series: `eta(s) / (1 - 2^{1-s})`.
///
/// Plain truncation is used for `Re s > 1`; closer to the critical strip the
/// accelerated evaluation takes over. Fails when `s` is too close to a zero
/// of the conversion factor (s = 1 and its vertical translates by 2*pi/ln 2).
pub fn zeta_via_eta(s: Complex64, n_max: u64, tol: f64) -> Result<Complex64> {
    if s.re <= 0.0 {
        return Err(invalid(format!("zeta_via_eta needs Re s > 0, got {}", s.re)));
    }
    let factor = Complex64::new(1.0, 0.0) - ((1.0 - s) * 2.0f64.ln()).exp();
    if factor.norm() < tol {
        return Err(Error::SingularFactor(format!(
            "1 - 2^(1-s) = {factor} at s = {s} is below tolerance {tol}"
        )));
    }
    let eta = if s.re <= 1.0 { eta_accelerated(s)? } else { eta_partial(s, n_max) };
    Ok(eta / factor)
}

/// Coefficients of the alternating series up to `n_max`.
pub fn eta_coefficients(n_max: u64) -> DirichletCoefficients {
    DirichletCoefficients::from_pairs(
        (1..=n_max).map(|n| (n as u128, if n % 2 == 1 { 1.0 } else { -1.0 })),
    )
    .expect("alternating coefficients are valid")
}

/// The alternating series' convergence abscissas: absolute at 1, uniform at 1,
/// conditional at 0.
pub fn eta_abscissas() -> AbscissaTriple {
    AbscissaTriple::new(1.0, 1.0, 0.0, Provenance::Theoretical).expect("valid triple")
}

/// Streaming state for iterated Cesàro means: partial sums at level 0, each
/// higher level the running arithmetic mean of the one below. Memory is one
/// accumulator per level.
#[derive(Debug, Clone)]
pub struct CesaroState {
    order: u32,
    steps: u64,
    partial: Complex64,
    level_sums: Vec<Complex64>,
    current: Vec<Complex64>,
}

impl CesaroState {
    pub fn new(order: u32) -> Self {
        CesaroState {
            order,
            steps: 0,
            partial: Complex64::default(),
            level_sums: vec![Complex64::default(); order as usize],
            current: vec![Complex64::default(); order as usize + 1],
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    /// Absorb the next series term.
    pub fn push(&mut self, term: Complex64) {
        self.steps += 1;
        self.partial += term;
        let mut value = self.partial;
        self.current[0] = value;
        for level in 0..self.order as usize {
            self.level_sums[level] += value;
            value = self.level_sums[level] / self.steps as f64;
            self.current[level + 1] = value;
        }
    }

    /// Current value at the top averaging level.
    pub fn value(&self) -> Complex64 {
        self.current[self.order as usize]
    }

    /// Current values at every level, partial sum first.
    pub fn levels(&self) -> &[Complex64] {
        &self.current
    }
}

/// Iterated Cesàro mean of a term stream: the `n`-th entry of the top level
/// after `order` rounds of running arithmetic means over partial sums.
pub fn cesaro_value<I>(terms: I, order: u32, n: u64) -> Result<Complex64>
where
    I: IntoIterator<Item = Complex64>,
{
    if n == 0 {
        return Err(invalid("Cesàro evaluation index must be at least 1"));
    }
    let mut state = CesaroState::new(order);
    for term in terms.into_iter().take(n as usize) {
        state.push(term);
    }
    if state.steps() < n {
        return Err(invalid(format!(
            "stream ended after {} terms, needed {n}",
            state.steps()
        )));
    }
    Ok(state.value())
}
