//! Enumeration and counting of degree-`m` monomials in `n` variables.
//!
//! The canonical order is lexicographically decreasing exponent sequences:
//! `(m, 0, ..., 0)` first, `(0, ..., 0, m)` last. A monomial's 0-based
//! position in this order is its *rank*; ranks index the deterministic
//! sign streams of `randpoly`, so the order is part of the crate's contract.
//! [`unrank`] seeks into the stream, which lets consumers split work by
//! rank ranges and still see identical vectors.

use crate::error::{invalid, Error, Result};

/// Exponent sequence of one monomial; the degree is the sum of the entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector {
    exponents: Vec<u32>,
}

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(invalid("exponent vector must have at least one variable"));
        }
        Ok(ExponentVector { exponents })
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn n_vars(&self) -> u32 {
        self.exponents.len() as u32
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }
}

/// Number of distinct degree-`degree` monomials in `n_vars` variables:
/// the binomial coefficient C(n_vars + degree - 1, degree), computed exactly.
pub fn count_monomials(n_vars: u32, degree: u32) -> Result<u128> {
    if n_vars == 0 {
        return Err(invalid("monomial count requires at least one variable"));
    }
    let n = n_vars as u128;
    let mut acc: u128 = 1;
    for i in 1..=degree as u128 {
        // acc = C(n - 1 + i, i); the division is exact at every step.
        acc = acc
            .checked_mul(n - 1 + i)
            .ok_or_else(|| Error::Overflow(format!(
                "C({} + {} - 1, {}) exceeds 128 bits",
                n_vars, degree, degree
            )))?
            / i;
    }
    Ok(acc)
}

/// Iterator over all exponent vectors of fixed degree, in canonical order.
pub fn enumerate_exponents(n_vars: u32, degree: u32) -> ExponentIter {
    assert!(n_vars >= 1, "enumerate_exponents requires n_vars >= 1");
    let mut first = vec![0u32; n_vars as usize];
    first[0] = degree;
    ExponentIter { next: Some(first) }
}

pub struct ExponentIter {
    next: Option<Vec<u32>>,
}

impl Iterator for ExponentIter {
    type Item = ExponentVector;

    fn next(&mut self) -> Option<Self::Item> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if advance(&mut succ) {
            self.next = Some(succ);
        }
        Some(ExponentVector { exponents: current })
    }
}

/// Step to the next vector in lexicographically decreasing order.
/// Returns false from the final vector `(0, ..., 0, degree)`.
fn advance(e: &mut [u32]) -> bool {
    let n = e.len();
    if n == 1 {
        return false;
    }
    // The rightmost positive entry left of the last position carries; only
    // the final position can be nonzero to its right.
    let Some(j) = (0..n - 1).rfind(|&j| e[j] > 0) else {
        return false;
    };
    let tail = e[n - 1];
    e[n - 1] = 0;
    e[j] -= 1;
    e[j + 1] = tail + 1;
    true
}

/// The exponent vector at a given canonical rank.
pub fn unrank(n_vars: u32, degree: u32, rank: u128) -> Result<ExponentVector> {
    let total = count_monomials(n_vars, degree)?;
    if rank >= total {
        return Err(invalid(format!(
            "rank {rank} out of range for {total} monomials"
        )));
    }
    let mut exponents = vec![0u32; n_vars as usize];
    let mut rank = rank;
    let mut remaining = degree;
    for j in 0..n_vars as usize - 1 {
        let vars_right = n_vars - j as u32 - 1;
        let mut e = remaining;
        loop {
            // Vectors with entry `e` here: monomials of degree remaining - e
            // in the variables to the right.
            let block = count_monomials(vars_right, remaining - e)?;
            if rank < block {
                exponents[j] = e;
                remaining -= e;
                break;
            }
            rank -= block;
            e -= 1;
        }
    }
    exponents[n_vars as usize - 1] = remaining;
    Ok(ExponentVector { exponents })
}

/// The canonical rank of an exponent vector.
pub fn rank_of(vector: &ExponentVector) -> Result<u128> {
    let n_vars = vector.n_vars();
    let degree = vector.degree();
    let mut rank: u128 = 0;
    let mut remaining = degree;
    for (j, &e) in vector.exponents().iter().enumerate().take(n_vars as usize - 1) {
        let vars_right = n_vars - j as u32 - 1;
        for higher in (e + 1..=remaining).rev() {
            rank += count_monomials(vars_right, remaining - higher)?;
        }
        remaining -= e;
    }
    Ok(rank)
}

/// Stream every monomial as `(rank, value)` where `value` accumulates
/// `extend(acc, var, exponent)` over the nonzero exponents, starting from
/// `base`. The visit order is canonical rank order. Recursing with partial
/// values means a full product is never recomputed from scratch.
pub(crate) fn fold_monomials<T, X, L>(n_vars: u32, degree: u32, base: T, extend: X, mut leaf: L)
where
    T: Copy,
    X: Fn(T, usize, u32) -> T + Copy,
    L: FnMut(u128, T),
{
    let mut rank: u128 = 0;
    descend(0, n_vars as usize, degree, base, extend, &mut rank, &mut leaf);
}

fn descend<T, X, L>(var: usize, n_vars: usize, remaining: u32, acc: T, extend: X, rank: &mut u128, leaf: &mut L)
where
    T: Copy,
    X: Fn(T, usize, u32) -> T + Copy,
    L: FnMut(u128, T),
{
    if remaining == 0 {
        leaf(*rank, acc);
        *rank += 1;
        return;
    }
    if var == n_vars - 1 {
        leaf(*rank, extend(acc, var, remaining));
        *rank += 1;
        return;
    }
    let mut e = remaining;
    loop {
        let next = if e == 0 { acc } else { extend(acc, var, e) };
        descend(var + 1, n_vars, remaining - e, next, extend, rank, leaf);
        if e == 0 {
            break;
        }
        e -= 1;
    }
}
