//! Recursive construction of self-dual covering sequence codes.
//!
//! A codeword has the form `[X X̄]`. From a code with halves of length `n`, a
//! code with halves of length `2n` is formed by `[U, U+X, Ū, Ū+X]` for every
//! even-weight `n`-word `U` starting with zero.

use crate::error::{Error, Result};
use crate::seq::CyclicSequence;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfDualCode {
    /// Length `n` of each half; codewords have length `2n` and cover at width `n`.
    pub half_length: usize,
    pub codewords: Vec<CyclicSequence>,
    /// Perfect matching of codewords whose first halves differ only in the last coordinate.
    pub pairing: Vec<(usize, usize)>,
}

/// The base code with halves of length 8.
pub fn selfdual_base() -> SelfDualCode {
    let codewords = ["0001101111100100", "0001101011100101"]
        .iter()
        .map(|s| s.parse().expect("valid literal"))
        .collect();
    SelfDualCode { half_length: 8, codewords, pairing: vec![(0, 1)] }
}

/// Even-weight words of length `n` with a leading zero, in increasing order.
pub fn even_words(n: usize) -> impl Iterator<Item = Vec<u8>> {
    (0u64..1 << (n - 1))
        .filter(|u| u.count_ones() % 2 == 0)
        .map(move |u| (0..n).map(|i| (u >> (n - 1 - i) & 1) as u8).collect())
}

fn step_codeword(u: &[u8], cw: &[u8], n: usize) -> CyclicSequence {
    let x = &cw[..n];
    let mut bits = Vec::with_capacity(4 * n);
    bits.extend_from_slice(u);
    bits.extend(u.iter().zip(x).map(|(a, b)| a ^ b));
    bits.extend(u.iter().map(|a| a ^ 1));
    bits.extend(u.iter().zip(x).map(|(a, b)| a ^ b ^ 1));
    CyclicSequence::from_bits_unchecked(&bits)
}

pub fn selfdual_step(c: &SelfDualCode) -> Result<SelfDualCode> {
    let n = c.half_length;
    if !n.is_power_of_two() || n > 32 {
        return Err(Error::Parameter(format!("half length {n} must be a power of two at most 32")));
    }
    let halves: Vec<Vec<u8>> = c.codewords.iter().map(CyclicSequence::to_bits).collect();
    let mut codewords = Vec::new();
    let mut pairing = Vec::new();
    for (ui, u) in even_words(n).enumerate() {
        let base = ui * halves.len();
        codewords.extend(halves.iter().map(|cw| step_codeword(&u, cw, n)));
        pairing.extend(c.pairing.iter().map(|&(i, j)| (base + i, base + j)));
    }
    Ok(SelfDualCode { half_length: 2 * n, codewords, pairing })
}

/// Streams `combine_pair` over the paired codewords of `selfdual_step(c)`
/// without materialising the intermediate code.
pub fn for_each_combined_step(c: &SelfDualCode, mut f: impl FnMut(CyclicSequence) -> Result<()>) -> Result<()> {
    let n = c.half_length;
    let halves: Vec<Vec<u8>> = c.codewords.iter().map(CyclicSequence::to_bits).collect();
    for u in even_words(n) {
        for &(i, j) in &c.pairing {
            let a = step_codeword(&u, &halves[i], n);
            let b = step_codeword(&u, &halves[j], n);
            f(combine_pair(&a, &b)?)?;
        }
    }
    Ok(())
}

fn split_self_dual(s: &CyclicSequence) -> Option<Vec<u8>> {
    let bits = s.to_bits();
    let l = bits.len() / 2;
    (bits.len() % 2 == 0 && (0..l).all(|i| bits[i] != bits[i + l])).then_some(bits)
}

/// `[X X̄] + [X' X̄'] -> [X X̄ X' X̄']`, for halves differing only in the last coordinate.
///
/// Every window of width `|X|` of either input is a window of the result.
pub fn combine_pair(a: &CyclicSequence, b: &CyclicSequence) -> Result<CyclicSequence> {
    if a.len() != b.len() {
        return Err(Error::Pairing(format!("lengths {} and {} differ", a.len(), b.len())));
    }
    let (Some(x), Some(y)) = (split_self_dual(a), split_self_dual(b)) else {
        return Err(Error::Pairing("codewords must have the form [X X̄]".into()));
    };
    let l = x.len() / 2;
    let diff: Vec<usize> = (0..l).filter(|&i| x[i] != y[i]).collect();
    if diff != [l - 1] {
        return Err(Error::Pairing("halves must differ exactly in the last coordinate".into()));
    }
    CyclicSequence::concat([a, b])
}

/// All combined sequences of a code's pairing.
pub fn combine_all(c: &SelfDualCode) -> Result<Vec<CyclicSequence>> {
    c.pairing.iter().map(|&(i, j)| combine_pair(&c.codewords[i], &c.codewords[j])).collect()
}
