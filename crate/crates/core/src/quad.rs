//! Adaptive Gauss–Kronrod quadrature for complex-valued integrands on real
//! intervals.
//!
//! A 7-point Gauss / 15-point Kronrod pair estimates each panel; the worst
//! panel is bisected until the summed error estimate is below tolerance.
//! Callers seed the panel count so that an oscillatory integrand starts
//! below its shortest period. Final summation is in interval order, so
//! results do not depend on the refinement history.

use num_complex::Complex64;
use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{invalid, Error, Result};

// 15-point Kronrod abscissae on [-1, 1] (nonnegative half).
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];

// Kronrod weights for the full 15-point rule (matching XGK).
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];

// 7-point Gauss weights (for XGK[1], XGK[3], XGK[5], XGK[7]).
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// Tolerance and work-limit settings for one integration.
#[derive(Debug, Clone, Copy)]
pub struct QuadConfig {
    /// Absolute tolerance on the integral value.
    pub abs_tol: f64,
    /// Hard cap on the number of panels before giving up.
    pub max_panels: usize,
}

impl Default for QuadConfig {
    fn default() -> Self {
        QuadConfig {
            abs_tol: 1e-8,
            max_panels: 1 << 20,
        }
    }
}

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy)]
pub struct QuadOutcome {
    pub value: Complex64,
    pub error_estimate: f64,
    pub panels_used: usize,
}

struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    error: f64,
    seq: u64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error && self.seq == other.seq
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        // Max-heap on error; break ties by insertion order for determinism.
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.seq.cmp(&self.seq))
    }
}

fn gk15<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> (Complex64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let f_center = f(center);
    let mut kronrod = WGK[7] * f_center;
    let mut gauss = WG[3] * f_center;
    let mut resabs = WGK[7] * f_center.norm();

    let mut samples = [Complex64::default(); 15];
    samples[7] = f_center;

    for j in 0..7 {
        let x = half * XGK[j];
        let lo = f(center - x);
        let hi = f(center + x);
        samples[j] = lo;
        samples[14 - j] = hi;
        let sum = lo + hi;
        kronrod += WGK[j] * sum;
        resabs += WGK[j] * (lo.norm() + hi.norm());
        if j % 2 == 1 {
            gauss += WG[j / 2] * sum;
        }
    }

    let mean = kronrod * 0.5;
    let mut resasc = WGK[7] * (f_center - mean).norm();
    for j in 0..7 {
        resasc += WGK[j] * ((samples[j] - mean).norm() + (samples[14 - j] - mean).norm());
    }

    let value = kronrod * half;
    let raw_err = ((kronrod - gauss) * half).norm();
    resabs *= half.abs();
    resasc *= half.abs();

    // QUADPACK-style error rescaling.
    let mut err = raw_err;
    if resasc != 0.0 && err != 0.0 {
        let scale = (200.0 * err / resasc).powf(1.5);
        err = if scale < 1.0 { resasc * scale } else { resasc };
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * resabs);
    }
    (value, err)
}

/// Integrate `f` over `[a, b]`, starting from `min_panels` equal panels.
pub fn integrate<F: Fn(f64) -> Complex64>(
    f: F,
    a: f64,
    b: f64,
    min_panels: usize,
    cfg: &QuadConfig,
) -> Result<QuadOutcome> {
    if !(a.is_finite() && b.is_finite()) || a >= b {
        return Err(invalid(format!("bad integration interval [{a}, {b}]")));
    }
    let initial = min_panels.clamp(1, cfg.max_panels);

    let mut heap = BinaryHeap::with_capacity(initial + 64);
    let mut seq = 0u64;
    let mut total_err = 0.0;
    let width = (b - a) / initial as f64;
    for i in 0..initial {
        let lo = a + i as f64 * width;
        let hi = if i + 1 == initial { b } else { a + (i + 1) as f64 * width };
        let (value, error) = gk15(&f, lo, hi);
        total_err += error;
        heap.push(Panel { a: lo, b: hi, value, error, seq });
        seq += 1;
    }

    while total_err > cfg.abs_tol && heap.len() < cfg.max_panels {
        let worst = heap.pop().expect("heap nonempty");
        if worst.b - worst.a <= f64::EPSILON * (worst.a.abs() + worst.b.abs()) {
            // Cannot subdivide further; stop refining.
            heap.push(worst);
            break;
        }
        total_err -= worst.error;
        let mid = 0.5 * (worst.a + worst.b);
        for (lo, hi) in [(worst.a, mid), (mid, worst.b)] {
            let (value, error) = gk15(&f, lo, hi);
            total_err += error;
            heap.push(Panel { a: lo, b: hi, value, error, seq });
            seq += 1;
        }
    }

    let panels_used = heap.len();
    let mut panels: Vec<Panel> = heap.into_vec();
    panels.sort_by(|p, q| p.a.total_cmp(&q.a));

    // Compensated summation in interval order.
    let mut sum = Complex64::default();
    let mut comp = Complex64::default();
    let mut err_sum = 0.0;
    for p in &panels {
        let y = p.value - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        err_sum += p.error;
    }

    if err_sum > cfg.abs_tol {
        return Err(Error::QuadratureFailure {
            context: format!("interval [{a}, {b}]"),
            error_estimate: err_sum,
            tolerance: cfg.abs_tol,
            panels: panels_used,
        });
    }

    Ok(QuadOutcome {
        value: sum,
        error_estimate: err_sum,
        panels_used,
    })
}

/// Panel count whose width resolves an oscillation of angular frequency `omega`.
pub fn panels_for_oscillation(a: f64, b: f64, omega: f64, cap: usize) -> usize {
    let len = b - a;
    if !(len > 0.0) || !(omega.abs() > 0.0) {
        return 1;
    }
    let width = (std::f64::consts::PI / omega.abs()).min(1.0);
    ((len / width).ceil() as usize).clamp(1, cap)
}
