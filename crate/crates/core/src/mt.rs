//! 32-bit Mersenne Twister (MT19937), scalar seeding only.

const N: usize = 624;
const M: usize = 397;
const MATRIX_A: u32 = 0x9908_B0DF;
const UPPER_MASK: u32 = 0x8000_0000;
const LOWER_MASK: u32 = 0x7FFF_FFFF;
const INIT_MULTIPLIER: u32 = 1_812_433_253;

/// Seed used when none is given.
pub const DEFAULT_SEED: u32 = 5489;

/// Generator state: 624 words plus the read cursor.
///
/// `cursor == 624` means the next draw twists the whole block first. The
/// only constructor is [`MtState::new`], so an unseeded state cannot exist.
#[derive(Clone, PartialEq, Eq)]
pub struct MtState {
    words: [u32; N],
    cursor: usize,
}

impl std::fmt::Debug for MtState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("MtState")
            .field("words[0]", &self.words[0])
            .field("cursor", &self.cursor)
            .finish()
    }
}

impl Default for MtState {
    fn default() -> Self {
        Self::new(DEFAULT_SEED)
    }
}

impl MtState {
    pub fn new(seed: u32) -> Self {
        let mut words = [0u32; N];
        words[0] = seed;
        for i in 1..N {
            let prev = words[i - 1];
            words[i] = INIT_MULTIPLIER
                .wrapping_mul(prev ^ (prev >> 30))
                .wrapping_add(i as u32);
        }
        Self { words, cursor: N }
    }

    pub fn cursor(&self) -> usize {
        self.cursor
    }

    pub fn words(&self) -> &[u32; N] {
        &self.words
    }

    fn twist(&mut self) {
        for i in 0..N {
            let y = (self.words[i] & UPPER_MASK) | (self.words[(i + 1) % N] & LOWER_MASK);
            let mut next = self.words[(i + M) % N] ^ (y >> 1);
            if y & 1 != 0 {
                next ^= MATRIX_A;
            }
            self.words[i] = next;
        }
        self.cursor = 0;
    }

    pub fn next_u32(&mut self) -> u32 {
        if self.cursor >= N {
            self.twist();
        }
        let mut y = self.words[self.cursor];
        self.cursor += 1;
        y ^= y >> 11;
        y ^= (y << 7) & 0x9D2C_5680;
        y ^= (y << 15) & 0xEFC6_0000;
        y ^= y >> 18;
        y
    }

    /// Uniform real in `[0, 1)` with 53 bits of resolution (two words per draw).
    pub fn next_real(&mut self) -> f64 {
        let a = (self.next_u32() >> 5) as f64;
        let b = (self.next_u32() >> 6) as f64;
        (a * 67_108_864.0 + b) * (1.0 / 9_007_199_254_740_992.0)
    }

    pub fn reals(&mut self, count: usize) -> Vec<f64> {
        (0..count).map(|_| self.next_real()).collect()
    }
}
