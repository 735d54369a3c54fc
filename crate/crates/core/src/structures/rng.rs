//! Reproducible pseudorandom numbers, independent of any platform RNG.
//!
//! Seeds are expanded with one SplitMix64 step (increment
//! `0x9E37_79B9_7F4A_7C15`, multipliers `0xBF58_476D_1CE4_E5B9` and
//! `0x94D0_49BB_1331_11EB`, shifts 30/27/31). The stream is xorshift64*
//! (shifts 12, 25, 27; output multiplier `0x2545_F491_4F6C_DD1D`).
//! Bounded draws use the high half of a 128-bit product.

#[derive(Debug, Clone)]
pub struct XorShiftRng {
    state: u64,
}

fn splitmix64(seed: u64) -> u64 {
    let mut z = seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl XorShiftRng {
    pub fn new(seed: u64) -> Self {
        let state = splitmix64(seed);
        XorShiftRng {
            state: if state == 0 { 0x9E37_79B9_7F4A_7C15 } else { state },
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    /// Uniform in `0..n`; `n` must be positive.
    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0);
        ((self.next_u64() as u128 * n as u128) >> 64) as usize
    }

    /// Uniform in `lo..=hi`.
    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.below(hi - lo + 1)
    }

    pub fn coin(&mut self) -> bool {
        self.next_u64() >> 63 == 1
    }

    /// Fisher–Yates, from the back.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i + 1);
            items.swap(i, j);
        }
    }
}
