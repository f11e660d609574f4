//! Deterministic sampling for the randomized sweeps.
//!
//! 64-bit linear congruential generator `s ← s·6364136223846793005 + 1442695040888963407`
//! (Knuth's MMIX constants); each draw is the high 32 bits of the new state.

#[derive(Debug, Clone)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub const DEFAULT_SEED: u64 = 20_230_917;

    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self
            .state
            .wrapping_mul(6_364_136_223_846_793_005)
            .wrapping_add(1_442_695_040_888_963_407);
        (self.state >> 32) as u32
    }

    /// Uniform-ish draw from `0..n` by multiply-shift.
    pub fn below(&mut self, n: usize) -> usize {
        ((self.next_u32() as u64 * n as u64) >> 32) as usize
    }
}
