//! Small deterministic RNG (splitmix64) so solver restarts and sampled
//! experiments reproduce bit-for-bit from a single `u64` seed, with no
//! dependency on external generator versions.

/// splitmix64 stream.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    /// Derives an independent stream for substream `index` (restart, sample).
    pub fn derive(seed: u64, index: u64) -> Self {
        let mut base = Self::new(seed ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15));
        // burn a few outputs to decorrelate nearby indices
        base.next_u64();
        base.next_u64();
        base
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1).
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Standard normal via Box-Muller.
    pub fn next_gaussian(&mut self) -> f64 {
        loop {
            let u = self.next_f64();
            let v = self.next_f64();
            if u > 0.0 {
                let r = (-2.0 * u.ln()).sqrt();
                let g = r * (2.0 * std::f64::consts::PI * v).cos();
                if g.is_finite() {
                    return g;
                }
            }
        }
    }

    /// Gaussian vector of length `n`.
    pub fn gaussian_vec(&mut self, n: usize) -> Vec<f64> {
        (0..n).map(|_| self.next_gaussian()).collect()
    }
}
