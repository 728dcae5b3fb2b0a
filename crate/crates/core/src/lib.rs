//! Numerical laboratory for the convergence strips of ordinary Dirichlet
//! series.
//!
//! A Dirichlet series `sum a_n n^{-s}` has three abscissas: conditional (C),
//! uniform (B), and absolute (A) convergence, with `C <= B <= A`, `A - C <= 1`
//! and `A - B <= 1/2`. This crate builds the series that witness the extremes
//! of those gaps and makes the surrounding estimates checkable at a desk:
//!
//! - [`primes`]: segmented sieve, prime windows, and the `p_n/(n ln n)` ratio
//!   scan that calibrates the construction constants.
//! - [`monomials`]: counting and canonical-rank enumeration of monomials.
//! - [`randpoly`]: random ±1 homogeneous polynomials, polytorus sup-norm
//!   sampling, and the probabilistic sup-norm scale.
//! - [`dirichlet`]: coefficient maps, partial sums, the mean-square time
//!   average on a vertical line, and the Cauchy–Schwarz comparison.
//! - [`construction`]: the extremal series assembled from random polynomials
//!   over blocks of consecutive primes, with its divergence and sup bounds.
//! - [`perron`]: partial-sum recovery through contour integrals and the
//!   kernel dichotomy behind it.
//! - [`zeta_eta`]: the alternating zeta series, Euler-accelerated evaluation,
//!   and iterated Cesàro means.
//!
//! Everything is deterministic: signs, sample phases, and scan grids derive
//! from counter-mode functions of explicit seeds.

pub mod construction;
pub mod dirichlet;
pub mod error;
pub mod monomials;
pub mod perron;
pub mod prf;
pub mod primes;
pub mod quad;
pub mod randpoly;
pub mod zeta_eta;

pub use error::{Error, Result};
