//! Shared inputs for the benchmarks.

use covseq_core::CyclicSequence;

/// Deterministic pseudo-random sequence of length `len` (xorshift bits).
pub fn pseudo_random(len: usize, seed: u64) -> CyclicSequence {
    let mut x = seed | 1;
    let bits: Vec<u8> = (0..len)
        .map(|_| {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            (x & 1) as u8
        })
        .collect();
    CyclicSequence::from_bits(&bits).expect("len > 0")
}
