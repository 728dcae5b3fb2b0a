//! The extremal Dirichlet series built from random polynomials over prime
//! blocks.
//!
//! Block `k` (for `k = 2..=9`) takes the `2^k` consecutive primes starting at
//! the `2^k`-th prime and substitutes `p^{-s}` for the variables of a random
//! ±1 homogeneous polynomial of degree `k` in `2^k` variables. Every
//! resulting index is a product of exactly `k` primes from that window, so
//! supports of distinct blocks never collide and the smallest index overall
//! is `7^2 = 49`. Blocks up to `k = 5` are materialized (376,992 entries at
//! most); larger blocks are re-enumerated on demand, and reductions over them
//! (counts, absolute sums, line sums) stream in canonical rank order.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::dirichlet::{add, zeta_shift_coeffs, DirichletCoefficients};
use crate::error::{invalid, Result};
use crate::monomials::{count_monomials, fold_monomials};
use crate::prf::CounterPrf;
use crate::primes::prime_window;
use crate::randpoly::{make_polynomial, SignSource, SignedHomogeneousPolynomial};

/// Largest block index; keeps every support index below 2^128.
pub const MAX_K: u32 = 9;

/// Blocks up to this index are materialized as coefficient maps.
pub const MATERIALIZE_MAX_K: u32 = 5;

/// Default scan range and resolution for vertical-line sup sampling.
pub const LINE_SUP_T_MAX: f64 = 1e4;
pub const LINE_SUP_T_SAMPLES: u64 = 4096;

const LINE_JITTER_DOMAIN: u64 = 0x4a49_5454; // "JITT"

/// One block of the construction: `2^k` variables of degree `k` over the
/// prime window with 1-based indices `2^k ..= 2^(k+1) - 1`.
#[derive(Debug, Clone)]
pub struct BlockSpec {
    k: u32,
    primes: Vec<u64>,
}

impl BlockSpec {
    pub fn new(k: u32) -> Result<Self> {
        if !(2..=MAX_K).contains(&k) {
            return Err(invalid(format!("block index k must lie in [2, {MAX_K}], got {k}")));
        }
        let primes = prime_window(k)?;
        debug_assert_eq!(primes.len(), 1 << k);
        Ok(BlockSpec { k, primes })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n_vars(&self) -> u32 {
        1 << self.k
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    /// 1-based index of the first prime in the window.
    pub fn first_prime_index(&self) -> u64 {
        1 << self.k
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn support_size(&self) -> u128 {
        count_monomials(self.n_vars(), self.degree()).expect("within range by MAX_K")
    }

    /// Table of `primes[j]^e` for `e <= degree`.
    fn power_table(&self) -> Vec<Vec<u128>> {
        self.primes
            .iter()
            .map(|&p| (0..=self.degree()).map(|e| (p as u128).pow(e)).collect())
            .collect()
    }

    fn sigma_power_table(&self, sigma: f64) -> Vec<Vec<f64>> {
        self.primes
            .iter()
            .map(|&p| (0..=self.degree()).map(|e| (p as f64).powf(-sigma * e as f64)).collect())
            .collect()
    }
}

/// Stream the block support as `(rank, n)` with `n` the product of window
/// primes raised to the canonical exponent vector at `rank`.
pub fn fold_block_support(k: u32, mut visit: impl FnMut(u128, u128)) -> Result<()> {
    let spec = BlockSpec::new(k)?;
    let powers = spec.power_table();
    fold_monomials(
        spec.n_vars(),
        spec.degree(),
        1u128,
        |acc, var, e| acc * powers[var][e as usize],
        visit,
    );
    Ok(())
}

/// Iterator form of the block support. Each item recomputes its product from
/// the exponent vector; use [`fold_block_support`] for long streams.
pub fn block_support(k: u32) -> Result<impl Iterator<Item = (u128, u128)>> {
    let spec = BlockSpec::new(k)?;
    let primes = spec.primes.clone();
    Ok(crate::monomials::enumerate_exponents(spec.n_vars(), spec.degree())
        .enumerate()
        .map(move |(rank, v)| {
            let n = v
                .exponents()
                .iter()
                .zip(&primes)
                .map(|(&e, &p)| (p as u128).pow(e))
                .product();
            (rank as u128, n)
        }))
}

/// A block kept as a re-enumerable generator rather than a map.
#[derive(Debug, Clone)]
pub struct BlockStream {
    spec: BlockSpec,
    seed: u64,
    poly: SignedHomogeneousPolynomial,
}

impl BlockStream {
    pub fn new(k: u32, seed: u64) -> Result<Self> {
        let spec = BlockSpec::new(k)?;
        let poly = make_polynomial(spec.n_vars(), spec.degree(), SignSource::Seeded(seed))?;
        Ok(BlockStream { spec, seed, poly })
    }

    pub fn spec(&self) -> &BlockSpec {
        &self.spec
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// The signed polynomial whose substitution produces this block.
    pub fn polynomial(&self) -> &SignedHomogeneousPolynomial {
        &self.poly
    }

    /// Stream `(rank, n, sign)` in canonical rank order.
    pub fn fold(&self, mut visit: impl FnMut(u128, u128, f64)) {
        let powers = self.spec.power_table();
        fold_monomials(
            self.spec.n_vars(),
            self.spec.degree(),
            1u128,
            |acc, var, e| acc * powers[var][e as usize],
            |rank, n| visit(rank, n, self.poly.sign(rank)),
        );
    }
}

/// A materialized block map or a streaming handle, depending on size.
#[derive(Debug, Clone)]
pub enum BlockData {
    Materialized(DirichletCoefficients),
    Streaming(BlockStream),
}

/// Build block `k` under the given seed. Blocks up to
/// [`MATERIALIZE_MAX_K`] come back as coefficient maps.
pub fn build_block(k: u32, seed: u64) -> Result<BlockData> {
    let stream = BlockStream::new(k, seed)?;
    if k <= MATERIALIZE_MAX_K {
        let mut coeffs = DirichletCoefficients::new();
        let mut failure = None;
        stream.fold(|_, n, sign| {
            if failure.is_none() {
                if let Err(e) = coeffs.set(n, sign) {
                    failure = Some(e);
                }
            }
        });
        match failure {
            Some(e) => Err(e),
            None => Ok(BlockData::Materialized(coeffs)),
        }
    } else {
        Ok(BlockData::Streaming(stream))
    }
}

/// The union of blocks `k = 2 ..= k_max` under one seed: materialized blocks
/// merged into a single map, larger blocks kept as streams.
#[derive(Debug, Clone)]
pub struct ConstructedSeries {
    k_max: u32,
    seed: u64,
    materialized: DirichletCoefficients,
    streaming: Vec<BlockStream>,
}

impl ConstructedSeries {
    pub fn k_max(&self) -> u32 {
        self.k_max
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn materialized(&self) -> &DirichletCoefficients {
        &self.materialized
    }

    pub fn streaming_blocks(&self) -> &[BlockStream] {
        &self.streaming
    }
}

pub fn build_series(k_max: u32, seed: u64) -> Result<ConstructedSeries> {
    if !(2..=MAX_K).contains(&k_max) {
        return Err(invalid(format!("k_max must lie in [2, {MAX_K}], got {k_max}")));
    }
    let mut materialized = DirichletCoefficients::new();
    let mut streaming = Vec::new();
    for k in 2..=k_max {
        match build_block(k, seed)? {
            BlockData::Materialized(block) => {
                materialized = add(&materialized, &block)?;
            }
            BlockData::Streaming(stream) => streaming.push(stream),
        }
    }
    Ok(ConstructedSeries { k_max, seed, materialized, streaming })
}

/// Exact streamed value of `sum n^{-sigma}` over the block support (every
/// coefficient has modulus one). Partial powers ride down the enumeration
/// tree, so each leaf costs one multiply and one compensated add.
pub fn block_absolute_sum(k: u32, sigma: f64) -> Result<f64> {
    let spec = BlockSpec::new(k)?;
    let powers = spec.sigma_power_table(sigma);
    let mut sum = 0.0;
    let mut comp = 0.0;
    fold_monomials(
        spec.n_vars(),
        spec.degree(),
        1.0f64,
        |acc, var, e| acc * powers[var][e as usize],
        |_, term| {
            let y = term - comp;
            let t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        },
    );
    Ok(sum)
}

/// A sampled lower bound on a vertical-line sup.
#[derive(Debug, Clone, Copy)]
pub struct LineSup {
    /// `|sum_block a_n n^{-sigma - i t_best}|`.
    pub estimate: f64,
    pub t_best: f64,
    pub samples_used: u64,
}

/// Sampled sup of the block sum along the line `Re s = sigma`.
///
/// `t` runs over a jittered uniform grid on `[0, LINE_SUP_T_MAX]` (sample 0
/// pinned at `t = 0`), then the best sample is polished by golden-section
/// search. Blocks up to `k = 5` precompute per-index amplitudes; larger
/// blocks re-stream the support at every sample, which is slow.
pub fn block_line_sup(
    k: u32,
    seed: u64,
    sigma: f64,
    t_samples: u64,
    sample_seed: u64,
) -> Result<LineSup> {
    if t_samples == 0 {
        return Err(invalid("t_samples must be positive"));
    }
    let stream = BlockStream::new(k, seed)?;

    let value_at: Box<dyn Fn(f64) -> f64 + Sync> = if k <= MATERIALIZE_MAX_K {
        let mut amplitudes = Vec::new();
        let mut logs = Vec::new();
        stream.fold(|_, n, sign| {
            amplitudes.push(sign * (n as f64).powf(-sigma));
            logs.push((n as f64).ln());
        });
        Box::new(move |t: f64| {
            let mut s = Complex64::default();
            for (amp, ln_n) in amplitudes.iter().zip(&logs) {
                s += amp * Complex64::from_polar(1.0, -t * ln_n);
            }
            s.norm()
        })
    } else {
        let stream = stream.clone();
        Box::new(move |t: f64| {
            let mut s = Complex64::default();
            stream.fold(|_, n, sign| {
                let nf = n as f64;
                s += sign * nf.powf(-sigma) * Complex64::from_polar(1.0, -t * nf.ln());
            });
            s.norm()
        })
    };

    let jitter = CounterPrf::new(&[LINE_JITTER_DOMAIN, sample_seed]).unit_f64(0);
    let step = LINE_SUP_T_MAX / t_samples as f64;
    let t_of = |i: u64| if i == 0 { 0.0 } else { (i as f64 + jitter) * step };

    let (mut best_val, best_idx) = (0..t_samples)
        .into_par_iter()
        .map(|i| (value_at(t_of(i)), i))
        .reduce(
            || (f64::NEG_INFINITY, u64::MAX),
            |a, b| if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) { b } else { a },
        );

    // Golden-section polish around the winning sample.
    let mut t_best = t_of(best_idx);
    let inv_phi = (5.0f64.sqrt() - 1.0) / 2.0;
    let (mut lo, mut hi) = ((t_best - step).max(0.0), t_best + step);
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let (mut f1, mut f2) = (value_at(x1), value_at(x2));
    for _ in 0..48 {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = value_at(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = value_at(x1);
        }
        let (fc, xc) = if f1 >= f2 { (f1, x1) } else { (f2, x2) };
        if fc > best_val {
            best_val = fc;
            t_best = xc;
        }
    }

    Ok(LineSup { estimate: value_at(t_best), t_best, samples_used: t_samples })
}

/// The polytorus point realized by the line parameter `t`:
/// coordinate `j` is `p_j^{-sigma} e^{-i t ln p_j}`.
pub fn line_torus_point(k: u32, sigma: f64, t: f64) -> Result<Vec<Complex64>> {
    let spec = BlockSpec::new(k)?;
    Ok(spec
        .primes()
        .iter()
        .map(|&p| Complex64::from_polar((p as f64).powf(-sigma), -t * (p as f64).ln()))
        .collect())
}

/// Closed-form upper bound on a block's line sup:
/// `c2 * 2^(k(k+1)/2) * sqrt(ln k) / (k 2^k / (2 c1))^(k sigma)`.
pub fn theoretical_block_sup_bound(k: u32, sigma: f64, c1: f64, c2: f64) -> Result<f64> {
    if k < 2 {
        return Err(invalid(format!("bound needs k >= 2, got {k}")));
    }
    if !(c1 > 1.0) || !(c2 > 0.0) {
        return Err(invalid(format!("need c1 > 1 and c2 > 0, got c1={c1}, c2={c2}")));
    }
    let kf = k as f64;
    let numerator = c2 * 2.0f64.powf(kf * (kf + 1.0) / 2.0) * kf.ln().sqrt();
    let prime_floor = kf * 2.0f64.powf(kf) / (2.0 * c1);
    Ok(numerator / prime_floor.powf(kf * sigma))
}

/// Per-block divergence witness `2^(k^2 (1-sigma)) / (3 c1 k)^(k (1+sigma))`.
/// Overflows to infinity for large `k`; use the log form for growth scans.
pub fn divergence_lower_bound(k: u32, sigma: f64, c1: f64) -> Result<f64> {
    Ok(divergence_lower_bound_log(k, sigma, c1)?.exp())
}

/// Natural log of [`divergence_lower_bound`]:
/// `k^2 (1-sigma) ln 2 - k (1+sigma) ln(3 c1 k)`.
pub fn divergence_lower_bound_log(k: u32, sigma: f64, c1: f64) -> Result<f64> {
    if k < 2 {
        return Err(invalid(format!("divergence bound needs k >= 2, got {k}")));
    }
    if !(c1 > 1.0) {
        return Err(invalid(format!("c1 must exceed 1, got {c1}")));
    }
    let kf = k as f64;
    Ok(kf * kf * (1.0 - sigma) * 2.0f64.ln() - kf * (1.0 + sigma) * (3.0 * c1 * kf).ln())
}

/// Interpolated-width series: the materialized part of `series` truncated at
/// `n_max`, plus the shifted zeta coefficients `n^{-lambda}`.
pub fn combine_width(
    series: &ConstructedSeries,
    lambda: f64,
    n_max: u128,
) -> Result<DirichletCoefficients> {
    let shift = zeta_shift_coeffs(lambda, n_max)?;
    add(&series.materialized().truncated(n_max), &shift)
}
