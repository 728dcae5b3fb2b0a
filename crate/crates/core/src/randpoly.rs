//! Homogeneous polynomials with deterministic ±1 coefficients, and sampled
//! sup-norm estimation on the polytorus.
//!
//! Signs come from a counter-mode function keyed by `(seed, n_vars, degree)`
//! and evaluated at the monomial's canonical rank, so they are independent of
//! enumeration order and of how work is partitioned. Sup estimates are
//! certified lower bounds: the estimate is the polynomial's modulus at the
//! returned witness point, recomputable at any time.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{invalid, Result};
use crate::monomials::{count_monomials, fold_monomials};
use crate::prf::CounterPrf;

const SIGN_DOMAIN: u64 = 0x5349_474e; // "SIGN"
const PHASE_DOMAIN: u64 = 0x5048_4153; // "PHAS"

/// Where the ±1 coefficients come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignSource {
    /// Every coefficient is +1 (test scaffolding; sup is attained at zero phases).
    AllPlus,
    /// Coefficients derived from a 64-bit seed.
    Seeded(u64),
}

/// A degree-`m` polynomial in `n` variables whose coefficients are ±1,
/// indexed by canonical monomial rank.
#[derive(Debug, Clone)]
pub struct SignedHomogeneousPolynomial {
    n_vars: u32,
    degree: u32,
    sign_source: SignSource,
    term_count: u128,
    prf: Option<CounterPrf>,
}

impl SignedHomogeneousPolynomial {
    pub fn n_vars(&self) -> u32 {
        self.n_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn sign_source(&self) -> SignSource {
        self.sign_source
    }

    pub fn term_count(&self) -> u128 {
        self.term_count
    }

    /// Coefficient of the monomial at `rank`, as +1.0 or -1.0.
    #[inline]
    pub fn sign(&self, rank: u128) -> f64 {
        debug_assert!(rank < self.term_count);
        match self.prf {
            None => 1.0,
            Some(prf) => prf.sign(rank),
        }
    }

    /// Exact value at a point, summing every term in canonical rank order.
    pub fn evaluate(&self, point: &[Complex64]) -> Result<Complex64> {
        if point.len() != self.n_vars as usize {
            return Err(invalid(format!(
                "point has {} coordinates, polynomial has {} variables",
                point.len(),
                self.n_vars
            )));
        }
        let mut sum = Complex64::default();
        let mut comp = Complex64::default();
        fold_monomials(
            self.n_vars,
            self.degree,
            Complex64::new(1.0, 0.0),
            |acc, var, e| {
                let mut v = acc;
                for _ in 0..e {
                    v *= point[var];
                }
                v
            },
            |rank, term| {
                let y = term * self.sign(rank) - comp;
                let t = sum + y;
                comp = (t - sum) - y;
                sum = t;
            },
        );
        Ok(sum)
    }
}

/// Build a ±1 homogeneous polynomial. Seeded signs require at least two
/// variables and degree two; the all-plus source is unrestricted.
pub fn make_polynomial(
    n_vars: u32,
    degree: u32,
    sign_source: SignSource,
) -> Result<SignedHomogeneousPolynomial> {
    if n_vars == 0 {
        return Err(invalid("polynomial needs at least one variable"));
    }
    if matches!(sign_source, SignSource::Seeded(_)) && (n_vars < 2 || degree < 2) {
        return Err(invalid(format!(
            "seeded signs need n_vars >= 2 and degree >= 2, got ({n_vars}, {degree})"
        )));
    }
    let term_count = count_monomials(n_vars, degree)?;
    let prf = match sign_source {
        SignSource::AllPlus => None,
        SignSource::Seeded(seed) => Some(CounterPrf::new(&[
            SIGN_DOMAIN,
            seed,
            n_vars as u64,
            degree as u64,
        ])),
    };
    Ok(SignedHomogeneousPolynomial { n_vars, degree, sign_source, term_count, prf })
}

/// The probabilistic sup-norm scale for random ±1 polynomials:
/// `c2 * n_vars^((degree+1)/2) * sqrt(ln degree)`.
pub fn kahane_bound(n_vars: u32, degree: u32, c2: f64) -> Result<f64> {
    if degree < 2 {
        return Err(invalid(format!("kahane_bound needs degree >= 2, got {degree}")));
    }
    if !(c2 > 0.0) {
        return Err(invalid(format!("c2 must be positive, got {c2}")));
    }
    let n = n_vars as f64;
    let m = degree as f64;
    Ok(c2 * n.powf((m + 1.0) / 2.0) * m.ln().sqrt())
}

/// A sampled lower bound on a sup norm, with its witness.
#[derive(Debug, Clone)]
pub struct SupEstimate {
    /// The polynomial's modulus at `witness_point`.
    pub estimate: f64,
    pub witness_point: Vec<Complex64>,
    pub samples_used: u64,
}

/// Knobs for the sampling + refinement search.
#[derive(Debug, Clone, Copy)]
pub struct SupSearchConfig {
    /// Passes of coordinate-wise phase refinement over all variables.
    pub refine_sweeps: u32,
    /// Golden-section iterations per coordinate and pass.
    pub golden_iters: u32,
}

impl Default for SupSearchConfig {
    fn default() -> Self {
        SupSearchConfig { refine_sweeps: 2, golden_iters: 32 }
    }
}

/// Sampled sup norm over the polytorus with prescribed coordinate moduli,
/// using the default refinement configuration.
pub fn estimate_sup_polytorus(
    poly: &SignedHomogeneousPolynomial,
    radii: &[f64],
    n_samples: u64,
    sample_seed: u64,
) -> Result<SupEstimate> {
    estimate_sup_polytorus_with(poly, radii, n_samples, sample_seed, &SupSearchConfig::default())
}

/// Sampled sup norm with explicit refinement configuration.
///
/// Sample 0 always uses all-zero phases (the positive real point); the rest
/// draw phases from a counter function of `(sample_seed, sample, coordinate)`,
/// so partitioned evaluation sees the same points. After sampling, each phase
/// is polished by golden-section search around the incumbent.
pub fn estimate_sup_polytorus_with(
    poly: &SignedHomogeneousPolynomial,
    radii: &[f64],
    n_samples: u64,
    sample_seed: u64,
    cfg: &SupSearchConfig,
) -> Result<SupEstimate> {
    if radii.len() != poly.n_vars() as usize {
        return Err(invalid(format!(
            "{} radii for {} variables",
            radii.len(),
            poly.n_vars()
        )));
    }
    if radii.iter().any(|&r| !(r > 0.0) || !r.is_finite()) {
        return Err(invalid("radii must be positive and finite"));
    }
    if n_samples == 0 {
        return Err(invalid("n_samples must be positive"));
    }

    let prf = CounterPrf::new(&[PHASE_DOMAIN, sample_seed]);
    let n_vars = poly.n_vars() as usize;
    let phases_of = |i: u64| -> Vec<f64> {
        if i == 0 {
            vec![0.0; n_vars]
        } else {
            (0..n_vars)
                .map(|j| {
                    let counter = (i as u128) * (n_vars as u128) + j as u128;
                    2.0 * std::f64::consts::PI * prf.unit_f64(counter)
                })
                .collect()
        }
    };
    let point_of = |phases: &[f64]| -> Vec<Complex64> {
        phases
            .iter()
            .zip(radii)
            .map(|(&th, &r)| Complex64::from_polar(r, th))
            .collect()
    };
    let modulus_at = |phases: &[f64]| -> f64 {
        poly.evaluate(&point_of(phases)).expect("lengths validated").norm()
    };

    // Deterministic max-reduction: ties resolve to the smaller sample index.
    let (_, best_idx) = (0..n_samples)
        .into_par_iter()
        .map(|i| (modulus_at(&phases_of(i)), i))
        .reduce(
            || (f64::NEG_INFINITY, u64::MAX),
            |a, b| {
                if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
                    b
                } else {
                    a
                }
            },
        );

    let mut phases = phases_of(best_idx);
    let mut best = modulus_at(&phases);

    // Coordinate-wise golden-section ascent on each phase.
    let inv_phi = (5.0f64.sqrt() - 1.0) / 2.0;
    for _ in 0..cfg.refine_sweeps {
        for j in 0..n_vars {
            let center = phases[j];
            let mut lo = center - std::f64::consts::FRAC_PI_2;
            let mut hi = center + std::f64::consts::FRAC_PI_2;
            let eval = |theta: f64, phases: &mut Vec<f64>| -> f64 {
                let old = phases[j];
                phases[j] = theta;
                let v = modulus_at(phases);
                phases[j] = old;
                v
            };
            let mut x1 = hi - inv_phi * (hi - lo);
            let mut x2 = lo + inv_phi * (hi - lo);
            let mut f1 = eval(x1, &mut phases);
            let mut f2 = eval(x2, &mut phases);
            let mut local_best = (best, center);
            for _ in 0..cfg.golden_iters {
                if f1 < f2 {
                    lo = x1;
                    x1 = x2;
                    f1 = f2;
                    x2 = lo + inv_phi * (hi - lo);
                    f2 = eval(x2, &mut phases);
                } else {
                    hi = x2;
                    x2 = x1;
                    f2 = f1;
                    x1 = hi - inv_phi * (hi - lo);
                    f1 = eval(x1, &mut phases);
                }
                let (fc, xc) = if f1 >= f2 { (f1, x1) } else { (f2, x2) };
                if fc > local_best.0 {
                    local_best = (fc, xc);
                }
            }
            if local_best.0 > best {
                best = local_best.0;
                phases[j] = local_best.1;
            }
        }
    }

    let witness_point = point_of(&phases);
    let estimate = poly.evaluate(&witness_point)?.norm();
    Ok(SupEstimate { estimate, witness_point, samples_used: n_samples })
}
