//! Contour-integral recovery of Dirichlet partial sums.
//!
//! The working object is the kernel integral
//! `(1/2πi) ∫ r^w / w dw` over a vertical segment `[c - iH, c + iH]`:
//! as `H -> ∞` it tends to 1 for `r > 1` and 0 for `r < 1`, which is what
//! turns a weighted contour integral of a Dirichlet series into a partial
//! sum. For a finite coefficient map the per-term kernel integrals are
//! completed to their infinite-height limits by closing the contour: the two
//! horizontal tails are smooth Laplace-type integrals, evaluated to near
//! machine precision. A callable series evaluator is integrated over the
//! finite segment only, carrying the usual `M^{-delta} log M`-sized error.

use num_complex::Complex64;

use crate::dirichlet::{partial_sum, DirichletCoefficients};
use crate::error::{invalid, Result};
use crate::quad::{integrate, panels_for_oscillation, QuadConfig, QuadOutcome};

/// Rectangle and quadrature parameters for one contour evaluation.
///
/// The rectangle has vertices `s - delta ± iH` and `s + (a - b) ± iH` with
/// `H = M^(a-b+2)` unless overridden. The kernel's right-edge offset is
/// `c = a - b`.
#[derive(Debug, Clone)]
pub struct ContourSpec {
    pub s: Complex64,
    pub a: f64,
    pub b: f64,
    pub delta: f64,
    pub m: u64,
    pub height_override: Option<f64>,
    pub quad: QuadConfig,
}

impl ContourSpec {
    pub fn new(s: Complex64, a: f64, b: f64, delta: f64, m: u64) -> Result<Self> {
        if !(b < a) {
            return Err(invalid(format!("need b < a, got b={b}, a={a}")));
        }
        if !(delta > 0.0 && delta < 1.0) {
            return Err(invalid(format!("delta must lie in (0, 1), got {delta}")));
        }
        if s.re < b + delta {
            return Err(invalid(format!(
                "contour needs Re s >= b + delta, got Re s = {} < {}",
                s.re,
                b + delta
            )));
        }
        Ok(ContourSpec { s, a, b, delta, m, height_override: None, quad: QuadConfig::default() })
    }

    /// Contour half-height: `M^(a-b+2)`, with `M = 0` degenerating to 1.
    pub fn height(&self) -> f64 {
        self.height_override
            .unwrap_or_else(|| (self.m.max(1) as f64).powf(self.a - self.b + 2.0))
    }

    /// Horizontal offset of the right edge from `s`.
    pub fn kernel_offset(&self) -> f64 {
        self.a - self.b
    }
}

fn validate_kernel_args(r: f64, c: f64, h: f64) -> Result<()> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(invalid(format!("kernel ratio must be positive and finite, got {r}")));
    }
    if r == 1.0 {
        return Err(invalid("kernel ratio r = 1 sits on the dichotomy boundary"));
    }
    if !(c > 0.0) || !(h > 0.0) {
        return Err(invalid(format!("kernel needs c > 0 and H > 0, got c={c}, H={h}")));
    }
    Ok(())
}

/// `(1/2πi) ∫ r^w / w dw` over the segment `[c - iH, c + iH]` by adaptive
/// quadrature. Conjugate symmetry makes the true value real; the imaginary
/// part that comes back is quadrature noise.
pub fn kernel_edge_integral(r: f64, c: f64, h: f64, quad: &QuadConfig) -> Result<Complex64> {
    validate_kernel_args(r, c, h)?;
    let ln_r = r.ln();
    let panels = panels_for_oscillation(-h, h, ln_r, quad.max_panels / 2);
    // w = c + iy, dw = i dy; the 1/(2πi) and i cancel into 1/2π.
    let outcome: QuadOutcome = integrate(
        |y| {
            let w = Complex64::new(c, y);
            (w * ln_r).exp() / w
        },
        -h,
        h,
        panels,
        quad,
    )?;
    Ok(outcome.value / (2.0 * std::f64::consts::PI))
}

/// The amount the segment integral is missing from its infinite-height
/// limit: `kernel_edge_integral(r, c, H) + kernel_tail_correction(r, c, H)`
/// equals 1 for `r > 1` and 0 for `r < 1`, up to quadrature error.
///
/// Closing the contour (leftward for `r > 1` around the pole, rightward for
/// `r < 1`) leaves two horizontal tails; conjugate symmetry reduces them to
/// one Laplace-type integral `∫ e^{-v} / (ζ ∓ v/|ln r|) dv` with
/// `ζ = c + iH`, which is smooth and cheap to evaluate accurately.
pub fn kernel_tail_correction(r: f64, c: f64, h: f64) -> Result<f64> {
    validate_kernel_args(r, c, h)?;
    let zeta = Complex64::new(c, h);
    let ell = r.ln().abs();
    let cfg = QuadConfig { abs_tol: 1e-15_f64.max(1e-14 / r.powf(c)), max_panels: 1 << 16 };
    // e^{-45} is below double precision relative to the leading term.
    let upper = 45.0;
    let q = integrate(
        |v| {
            let denom = if r > 1.0 {
                zeta - Complex64::new(v / ell, 0.0)
            } else {
                zeta + Complex64::new(v / ell, 0.0)
            };
            Complex64::new((-v).exp(), 0.0) / denom
        },
        0.0,
        upper,
        16,
        &cfg,
    )?;
    let edge_factor = Complex64::from_polar(r.powf(c), h * r.ln());
    let xi = edge_factor * q.value / ell;
    // Closing left (r > 1) and right (r < 1) orient the tails oppositely.
    let signed = if r > 1.0 { -xi.im } else { xi.im };
    Ok(signed / std::f64::consts::PI)
}

/// A Dirichlet series handed to the contour machinery: either its finite
/// coefficient map or a callable evaluator accurate on the right edge.
pub enum SeriesFunction<'a> {
    Coefficients(&'a DirichletCoefficients),
    Callable(&'a (dyn Fn(Complex64) -> Complex64 + Sync)),
}

/// Recover `sum_{n <= M} b_n n^{-s}` through the right edge of the contour.
///
/// With a coefficient map, each term's kernel integral is evaluated over the
/// segment and completed by its tail correction, so the result matches the
/// direct partial sum to within quadrature tolerance. With a callable, only
/// the finite segment is integrated.
pub fn perron_partial_sum(f: &SeriesFunction<'_>, spec: &ContourSpec) -> Result<Complex64> {
    let c = spec.kernel_offset();
    let h = spec.height();
    let x = spec.m as f64 + 0.5;
    match f {
        SeriesFunction::Coefficients(coeffs) => {
            let mut total = Complex64::default();
            for (n, b_n) in coeffs.iter() {
                let r = x / n as f64;
                let kernel = kernel_edge_integral(r, c, h, &spec.quad)?
                    + kernel_tail_correction(r, c, h)?;
                total += (-spec.s * (n as f64).ln()).exp() * b_n * kernel;
            }
            Ok(total)
        }
        SeriesFunction::Callable(eval) => {
            let omega = x.ln().abs() + 1.0;
            let panels = panels_for_oscillation(-h, h, omega, spec.quad.max_panels / 2);
            let outcome = integrate(
                |y| {
                    let w = Complex64::new(c, y);
                    eval(spec.s + w) * (w * x.ln()).exp() / w
                },
                -h,
                h,
                panels,
                &spec.quad,
            )?;
            Ok(outcome.value / (2.0 * std::f64::consts::PI))
        }
    }
}

/// The four edge integrals of the full rectangle, for validating that the
/// left, top, and bottom edges are error-term sized while the whole contour
/// returns `f(s)` by the residue at `z = s`.
#[derive(Debug, Clone, Copy)]
pub struct EdgeIntegrals {
    pub right: Complex64,
    pub top: Complex64,
    pub left: Complex64,
    pub bottom: Complex64,
    /// Counterclockwise total divided by `2πi`; should approximate `f(s)`.
    pub cauchy_value: Complex64,
}

/// Integrate `f(z) (M + 1/2)^{z-s} / (z - s)` over all four rectangle edges,
/// with `f` the finite series of `coeffs`.
pub fn contour_edge_diagnostics(
    coeffs: &DirichletCoefficients,
    spec: &ContourSpec,
) -> Result<EdgeIntegrals> {
    let x = spec.m as f64 + 0.5;
    let h = spec.height();
    let x_right = spec.s.re + spec.kernel_offset();
    let x_left = spec.s.re - spec.delta;
    let ln_max = coeffs.max_index().map(|n| (n as f64).ln()).unwrap_or(0.0);

    let g = |z: Complex64| -> Complex64 {
        partial_sum(coeffs, z, u128::MAX) * ((z - spec.s) * x.ln()).exp() / (z - spec.s)
    };

    let vertical_omega = x.ln().abs() + ln_max + 1.0;
    let v_panels = panels_for_oscillation(-h, h, vertical_omega, spec.quad.max_panels / 2);
    let i = Complex64::new(0.0, 1.0);

    // Right edge, upward.
    let right = i * integrate(
        |y| g(Complex64::new(x_right, spec.s.im + y)),
        -h,
        h,
        v_panels,
        &spec.quad,
    )?
    .value;
    // Left edge, downward.
    let left = -i * integrate(
        |y| g(Complex64::new(x_left, spec.s.im + y)),
        -h,
        h,
        v_panels,
        &spec.quad,
    )?
    .value;
    // Top edge, leftward; bottom edge, rightward.
    let h_panels = panels_for_oscillation(x_left, x_right, 1.0, spec.quad.max_panels / 2).max(8);
    let top = -integrate(
        |xx| g(Complex64::new(xx, spec.s.im + h)),
        x_left,
        x_right,
        h_panels,
        &spec.quad,
    )?
    .value;
    let bottom = integrate(
        |xx| g(Complex64::new(xx, spec.s.im - h)),
        x_left,
        x_right,
        h_panels,
        &spec.quad,
    )?
    .value;

    let total = right + top + left + bottom;
    Ok(EdgeIntegrals {
        right,
        top,
        left,
        bottom,
        cauchy_value: total / (2.0 * std::f64::consts::PI * i),
    })
}

/// One row of a truncation-error scan.
#[derive(Debug, Clone, Copy)]
pub struct ErrorScanRow {
    pub m: u64,
    /// `|reference - sum_{n <= M} b_n n^{-s}|`, by direct truncation.
    pub error: f64,
    /// `M^{-delta} ln M`.
    pub bound: f64,
    pub ratio: f64,
}

/// Tabulate truncation errors against the `M^{-delta} ln M` envelope.
/// `reference` must be an independently computed high-accuracy value of the
/// full series at `s`; errors come from direct partial sums, not contours.
pub fn perron_error_scan(
    reference: Complex64,
    coeffs: &DirichletCoefficients,
    s: Complex64,
    delta: f64,
    m_list: &[u64],
) -> Result<Vec<ErrorScanRow>> {
    if !(delta > 0.0) {
        return Err(invalid(format!("delta must be positive, got {delta}")));
    }
    if m_list.is_empty() || m_list.windows(2).any(|w| w[0] >= w[1]) || m_list[0] < 2 {
        return Err(invalid("M list must be ascending with entries >= 2"));
    }
    Ok(m_list
        .iter()
        .map(|&m| {
            let truncated = partial_sum(coeffs, s, m as u128);
            let error = (reference - truncated).norm();
            let bound = (m as f64).powf(-delta) * (m as f64).ln();
            ErrorScanRow { m, error, bound, ratio: error / bound }
        })
        .collect())
}
