use crate::error::{Error, Result};
use crate::seq::CyclicSequence;

use super::gf2::{is_primitive, Gf2Poly, LfsrStream};

/// The four cyclic sequences behind the primitive-polynomial construction.
#[derive(Clone, Debug)]
pub struct PrimitiveParts {
    /// M-sequence of `a_k = sum c_i a_{k-i}`, rotated to start with its run of `n - 1` zeros.
    pub a: CyclicSequence,
    /// Sequence of `b_k = sum c_i b_{k-i} + 1` from the complemented state.
    pub b: CyclicSequence,
}

/// Generates `A` and `B` for a primitive `p` of degree `n`.
pub fn primitive_parts(p: Gf2Poly) -> Result<PrimitiveParts> {
    if !is_primitive(p)? {
        return Err(Error::Parameter(format!("{p} is not primitive")));
    }
    let n = p.degree();
    let period = (1usize << n) - 1;
    // 0^{n-1} 1 starts the unique run of n - 1 zeros
    let mut init = vec![0u8; n];
    init[n - 1] = 1;
    let a: Vec<u8> = LfsrStream::new(p, 0, &init)?.take(period).collect();
    let comp: Vec<u8> = init.iter().map(|b| b ^ 1).collect();
    let b: Vec<u8> = LfsrStream::new(p, 1, &comp)?.take(period).collect();
    Ok(PrimitiveParts { a: CyclicSequence::from_bits(&a)?, b: CyclicSequence::from_bits(&b)? })
}

/// Length `2^{n+1} + 2n + 8R + 2` of the combined sequence.
pub fn primitive_cs_length(n: usize, radius: usize) -> usize {
    (1 << (n + 1)) + 2 * n + 8 * radius + 2
}

/// `(n + 2R + 1, R)`-covering sequence from a primitive `p` of degree `n` with
/// `c_1 = .. = c_{2R+1} = 0`.
///
/// `A` is opened at its run of `n - 1` zeros and prefixed by `2R + 2` zeros so
/// that the all-zero window is present, `B` likewise with ones, and the two
/// acyclic strings are concatenated.
pub fn primitive_cs(n: usize, radius: usize, p: Gf2Poly) -> Result<CyclicSequence> {
    if p.degree() != n {
        return Err(Error::Parameter(format!("{p} does not have degree {n}")));
    }
    if 2 * radius + 1 >= n || (1..=2 * radius + 1).any(|i| p.coeff(i) == 1) {
        return Err(Error::Parameter(format!("{p} needs c_1 .. c_{} equal to zero", 2 * radius + 1)));
    }
    let parts = primitive_parts(p)?;
    let width = n + 2 * radius + 1;
    let mut bits = Vec::with_capacity(primitive_cs_length(n, radius));
    for (seq, fill) in [(&parts.a, 0u8), (&parts.b, 1u8)] {
        bits.extend(std::iter::repeat_n(fill, 2 * radius + 2));
        bits.extend(seq.linear_extension(width - 1));
    }
    debug_assert_eq!(bits.len(), primitive_cs_length(n, radius));
    CyclicSequence::from_bits(&bits)
}
