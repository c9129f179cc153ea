//! Deterministic pseudo-randomness for tuple sampling: SplitMix64
//! (Steele–Lea–Flood), a 64-bit-state generator with a documented,
//! dependency-free update, so that seeded runs are reproducible
//! bit-for-bit on any platform.

/// SplitMix64 over a 64-bit state. Each call advances the state by the
/// golden-ratio increment and scrambles it through two xor-shift-multiply
/// rounds.
pub struct SplitMix64(u64);

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64(seed)
    }

    /// A per-(q, character) stream: mixes the shard coordinates into the
    /// base seed so that worker order cannot influence which tuples a
    /// given (q, χ) receives.
    pub fn for_shard(seed: u64, q: u64, chi_index: u64) -> SplitMix64 {
        SplitMix64(seed ^ (q << 24) ^ chi_index)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish draw below `bound` by reduction; the modulus bias is
    /// below 2^{-50} for every bound used here (≤ 10^4) and identical on
    /// every platform, which is what reproducibility needs.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "draw from an empty range");
        self.next_u64() % bound
    }
}
