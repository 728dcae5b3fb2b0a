//! Prime enumeration and the empirical prime-counting ratio window.
//!
//! A segmented sieve backs both the explicit [`sieve_primes`] table and a
//! process-wide cache used by [`nth_prime`], [`prime_window`], and
//! [`pnt_ratio_scan`]. The cache grows on demand and is safe for concurrent
//! readers.

use std::sync::{Arc, RwLock};

use crate::error::{invalid, Result};

/// Default ratio-window constant: `1/3 < p_n/(n ln n) < 3` holds empirically
/// for every `n` up to at least 10^6.
pub const DEFAULT_C1: f64 = 3.0;

/// All primes up to a limit, in increasing order.
#[derive(Debug, Clone)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
}

impl PrimeTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn count(&self) -> usize {
        self.primes.len()
    }
}

/// Outcome of scanning `p_n/(n ln n)` against the window `(1/c1, c1)`.
#[derive(Debug, Clone, Copy)]
pub struct PntRatioReport {
    pub n_max: u64,
    pub c1: f64,
    pub min_ratio: f64,
    pub max_ratio: f64,
    pub all_within: bool,
}

const SEGMENT: usize = 1 << 17;

/// Sieve of Eratosthenes, segmented over odd numbers.
pub fn sieve_primes(limit: u64) -> Result<PrimeTable> {
    if limit < 2 {
        return Err(invalid(format!("sieve limit must be at least 2, got {limit}")));
    }

    let mut primes: Vec<u64> = Vec::new();
    primes.push(2);

    // Odd base primes up to sqrt(limit), by a plain odd-only sieve.
    let root = (limit as f64).sqrt() as u64 + 1;
    let base_len = (root / 2) as usize + 1;
    let mut base_composite = vec![false; base_len]; // index i <-> odd number 2i+1
    let mut base_primes: Vec<u64> = Vec::new();
    for i in 1..base_len {
        if base_composite[i] {
            continue;
        }
        let p = 2 * i as u64 + 1;
        if p > root {
            break;
        }
        base_primes.push(p);
        let mut j = (p * p) / 2;
        while (j as usize) < base_len {
            base_composite[j as usize] = true;
            j += p;
        }
    }

    // Walk odd segments [lo, lo + 2*SEGMENT), marking multiples of base primes.
    let mut segment = vec![false; SEGMENT];
    let mut lo: u64 = 3;
    while lo <= limit {
        let span = 2 * SEGMENT as u64; // numeric width: SEGMENT odd values
        let hi = (lo + span - 1).min(limit | 1);
        segment.fill(false);
        for &p in &base_primes {
            let mut start = p * p;
            if start < lo {
                // first odd multiple of p that is >= lo
                let mut m = lo.div_ceil(p) * p;
                if m % 2 == 0 {
                    m += p;
                }
                start = m;
            }
            let mut m = start;
            while m <= hi {
                segment[((m - lo) / 2) as usize] = true;
                m += 2 * p;
            }
        }
        let cells = ((hi - lo) / 2 + 1) as usize;
        for (i, &marked) in segment.iter().enumerate().take(cells) {
            if !marked {
                let n = lo + 2 * i as u64;
                if n <= limit && n >= 3 {
                    primes.push(n);
                }
            }
        }
        lo += span;
    }

    Ok(PrimeTable { limit, primes })
}

static CACHE: RwLock<Option<Arc<Vec<u64>>>> = RwLock::new(None);

/// Shared prime list containing at least `count` primes.
fn primes_with_count(count: usize) -> Arc<Vec<u64>> {
    if let Some(cached) = CACHE.read().expect("prime cache poisoned").as_ref() {
        if cached.len() >= count {
            return Arc::clone(cached);
        }
    }

    let mut guard = CACHE.write().expect("prime cache poisoned");
    if let Some(cached) = guard.as_ref() {
        if cached.len() >= count {
            return Arc::clone(cached);
        }
    }

    // Rosser: p_n < n(ln n + ln ln n) for n >= 6.
    let n = count.max(16) as f64;
    let mut limit = (n * (n.ln() + n.ln().ln())).ceil() as u64 + 16;
    let table = loop {
        let table = sieve_primes(limit).expect("limit >= 2");
        if table.count() >= count {
            break table;
        }
        limit *= 2;
    };
    let arc = Arc::new(table.primes);
    *guard = Some(Arc::clone(&arc));
    arc
}

/// The n-th prime, 1-indexed (`nth_prime(1) == 2`).
pub fn nth_prime(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(invalid("prime index is 1-based; got 0"));
    }
    let primes = primes_with_count(n as usize);
    Ok(primes[(n - 1) as usize])
}

/// The window of `2^k` consecutive primes starting at the `2^k`-th prime,
/// i.e. primes with 1-based indices `2^k ..= 2^(k+1) - 1`.
pub fn prime_window(k: u32) -> Result<Vec<u64>> {
    if !(2..=9).contains(&k) {
        return Err(invalid(format!("prime window index k must lie in [2, 9], got {k}")));
    }
    let first = 1u64 << k;
    let last = (1u64 << (k + 1)) - 1;
    let primes = primes_with_count(last as usize);
    Ok(primes[(first - 1) as usize..last as usize].to_vec())
}

/// Scan `p_n/(n ln n)` for `n in [2, n_max]` against the window `(1/c1, c1)`.
pub fn pnt_ratio_scan(n_max: u64, c1: f64) -> Result<PntRatioReport> {
    if n_max < 2 {
        return Err(invalid(format!("n_max must be at least 2, got {n_max}")));
    }
    if !(c1 > 1.0) {
        return Err(invalid(format!("c1 must exceed 1, got {c1}")));
    }
    let primes = primes_with_count(n_max as usize);
    let mut min_ratio = f64::INFINITY;
    let mut max_ratio = f64::NEG_INFINITY;
    for n in 2..=n_max {
        let p = primes[(n - 1) as usize] as f64;
        let ratio = p / (n as f64 * (n as f64).ln());
        min_ratio = min_ratio.min(ratio);
        max_ratio = max_ratio.max(ratio);
    }
    let all_within = min_ratio > 1.0 / c1 && max_ratio < c1;
    Ok(PntRatioReport { n_max, c1, min_ratio, max_ratio, all_within })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn is_prime_trial(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        let mut d = 2;
        while d * d <= n {
            if n % d == 0 {
                return false;
            }
            d += 1;
        }
        true
    }

    #[test]
    fn small_tables_are_exact() {
        assert_eq!(sieve_primes(10).unwrap().primes(), &[2, 3, 5, 7]);
        assert_eq!(sieve_primes(2).unwrap().primes(), &[2]);
        assert_eq!(sieve_primes(3).unwrap().primes(), &[2, 3]);
    }

    #[test]
    fn sieve_matches_trial_division_oracle() {
        let table = sieve_primes(1000).unwrap();
        let oracle: Vec<u64> = (2..=1000).filter(|&n| is_prime_trial(n)).collect();
        assert_eq!(table.primes(), oracle.as_slice());
        assert_eq!(sieve_primes(100).unwrap().count(), 25);
    }

    #[test]
    fn table_invariants_hold() {
        let table = sieve_primes(5000).unwrap();
        assert_eq!(&table.primes()[..3], &[2, 3, 5]);
        assert_eq!(table.count(), table.primes().len());
        assert!(table.primes().windows(2).all(|w| w[0] < w[1]));
        assert!(table.primes().iter().all(|&p| is_prime_trial(p)));
    }

    #[test]
    fn sieve_rejects_tiny_limits() {
        assert!(sieve_primes(0).is_err());
        assert!(sieve_primes(1).is_err());
    }

    #[test]
    fn nth_prime_known_values() {
        assert_eq!(nth_prime(1).unwrap(), 2);
        assert_eq!(nth_prime(2).unwrap(), 3);
        assert_eq!(nth_prime(3).unwrap(), 5);
        assert_eq!(nth_prime(4).unwrap(), 7);
        assert_eq!(nth_prime(16).unwrap(), 53);
        assert!(nth_prime(0).is_err());
    }

    #[test]
    fn nth_prime_agrees_with_sieve() {
        let table = sieve_primes(10_000).unwrap();
        for (i, &p) in table.primes().iter().enumerate() {
            if i % 97 == 0 {
                assert_eq!(nth_prime(i as u64 + 1).unwrap(), p);
            }
        }
    }

    #[test]
    fn ratio_scan_single_point() {
        let report = pnt_ratio_scan(2, 3.0).unwrap();
        let expected = 3.0 / (2.0 * 2.0f64.ln());
        assert_relative_eq!(report.max_ratio, expected, max_relative = 1e-15);
        assert_relative_eq!(report.min_ratio, expected, max_relative = 1e-15);
        assert!(report.all_within);

        let narrow = pnt_ratio_scan(2, 1.01).unwrap();
        assert!(!narrow.all_within);
    }

    #[test]
    fn ratio_window_holds_to_1e5() {
        let report = pnt_ratio_scan(100_000, DEFAULT_C1).unwrap();
        assert!(report.all_within, "ratios [{}, {}]", report.min_ratio, report.max_ratio);
    }

    #[test]
    fn ratio_scan_validates_arguments() {
        assert!(pnt_ratio_scan(1, 3.0).is_err());
        assert!(pnt_ratio_scan(10, 1.0).is_err());
    }

    #[test]
    fn windows_are_disjoint_and_start_correctly() {
        assert_eq!(prime_window(2).unwrap(), vec![7, 11, 13, 17]);
        let mut last_max = 0;
        for k in 2..=9 {
            let window = prime_window(k).unwrap();
            assert_eq!(window.len(), 1 << k);
            assert!(window[0] > last_max, "window {k} overlaps its predecessor");
            assert!(window.windows(2).all(|w| w[0] < w[1]));
            last_max = *window.last().unwrap();
        }
        assert!(prime_window(1).is_err());
        assert!(prime_window(10).is_err());
    }
}
