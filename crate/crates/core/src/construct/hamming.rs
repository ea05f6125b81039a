use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::seq::{BinaryWord, CyclicSequence, SequenceCode};

use super::gf2::{least_primitive, Gf2Poly};

/// Codewords of the cyclic Hamming code of length `2^k - 1` generated by `g`,
/// as `n`-bit values with bit `i` (from the least significant end) the
/// coefficient of `x^i`.
pub fn hamming_codewords(k: usize, g: Gf2Poly) -> Result<Vec<u32>> {
    check_k(k)?;
    if g.degree() != k {
        return Err(Error::Parameter(format!("generator {g} must have degree {k}")));
    }
    let n = (1usize << k) - 1;
    let dim = n - k;
    let basis: Vec<u32> = (0..dim).map(|i| (g.coeffs() << i) as u32).collect();
    // Gray-code walk over the span
    let mut out = Vec::with_capacity(1 << dim);
    let mut c = 0u32;
    out.push(c);
    for i in 1u32..1 << dim {
        c ^= basis[i.trailing_zeros() as usize];
        out.push(c);
    }
    Ok(out)
}

fn check_k(k: usize) -> Result<()> {
    if !(2..=5).contains(&k) {
        return Err(Error::Unsupported(format!("Hamming code parameter k={k} (need 2 <= k <= 5)")));
    }
    Ok(())
}

fn rotl(w: u32, n: usize) -> u32 {
    let mask = (1u32 << n) - 1;
    ((w << 1) | (w >> (n - 1))) & mask
}

fn is_least_rotation(w: u32, n: usize) -> bool {
    let mut r = w;
    for _ in 1..n {
        r = rotl(r, n);
        if r < w {
            return false;
        }
    }
    true
}

/// `(2^k - 1, 1)`-covering sequence code from the cyclic Hamming code.
///
/// The code is generated by the numerically least primitive polynomial of
/// degree `k`. One representative per rotation class is kept, reduced to its
/// minimal period. Representatives are ordered by decreasing length, then as
/// strings.
pub fn hamming_csc(k: usize) -> Result<SequenceCode> {
    check_k(k)?;
    hamming_csc_with(k, least_primitive(k)?)
}

pub fn hamming_csc_with(k: usize, g: Gf2Poly) -> Result<SequenceCode> {
    let n = (1usize << k) - 1;
    let words = hamming_codewords(k, g)?;
    let mut reps: Vec<CyclicSequence> = words
        .par_iter()
        .filter(|&&w| is_least_rotation(w, n))
        .map(|&w| {
            let bw = BinaryWord::from_raw(w, n);
            let bits: Vec<u8> = (0..n).map(|i| bw.bit(i)).collect();
            CyclicSequence::from_bits_unchecked(&bits).canonical_rotation().primitive_root()
        })
        .collect();
    reps.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.to_bits().cmp(&b.to_bits())));
    Ok(SequenceCode::new(n, 1, reps))
}

/// Histogram of codeword lengths, longest first.
pub fn length_profile(code: &SequenceCode) -> Vec<(usize, usize)> {
    let mut profile: Vec<(usize, usize)> = Vec::new();
    let mut lens: Vec<usize> = code.codewords.iter().map(CyclicSequence::len).collect();
    lens.sort_unstable_by(|a, b| b.cmp(a));
    for l in lens {
        match profile.last_mut() {
            Some((len, count)) if *len == l => *count += 1,
            _ => profile.push((l, 1)),
        }
    }
    profile
}
