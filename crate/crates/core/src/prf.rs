//! Keyed counter-mode value generation.
//!
//! All randomness in the crate is derived by hashing `(key material, counter)`
//! with a SplitMix64-style finalizer. Values are a pure function of their
//! inputs, so streams can be re-enumerated or partitioned across workers
//! without changing a single output.

/// SplitMix64 finalizer: a bijective 64-bit mixer with good avalanche.
#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// A keyed pseudorandom function evaluated at 128-bit counters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CounterPrf {
    key: u64,
}

impl CounterPrf {
    /// Derive a key by folding domain-separation parts through the mixer.
    pub fn new(parts: &[u64]) -> Self {
        let mut key = 0x6c62_272e_07bb_0142;
        for &p in parts {
            key = mix64(key ^ p);
        }
        CounterPrf { key }
    }

    /// Raw 64-bit value at `counter`.
    #[inline]
    pub fn value(&self, counter: u128) -> u64 {
        let lo = counter as u64;
        let hi = (counter >> 64) as u64;
        mix64(self.key ^ mix64(lo) ^ mix64(hi).rotate_left(32))
    }

    /// Uniform value in `[0, 1)` with 53 random bits.
    #[inline]
    pub fn unit_f64(&self, counter: u128) -> f64 {
        (self.value(counter) >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// A `+1.0`/`-1.0` sign.
    #[inline]
    pub fn sign(&self, counter: u128) -> f64 {
        if self.value(counter) & (1 << 63) == 0 {
            1.0
        } else {
            -1.0
        }
    }
}
