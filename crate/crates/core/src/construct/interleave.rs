use crate::error::{Error, Result};
use crate::seq::CyclicSequence;
use crate::verify::{is_covering_sequence_with, VerifyLimits};

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Interleaves an `(n1, R1)`-CS `a` and an `(n2, R2)`-CS `b` into an
/// `(n1 + n2, R1 + R2)`-CS of length `2|a||b|`.
///
/// Even positions run through `a` and odd positions through `b`; coprime
/// lengths make every pair of phases occur.
pub fn interleave(
    a: &CyclicSequence,
    b: &CyclicSequence,
    n1: usize,
    n2: usize,
    r1: usize,
    r2: usize,
) -> Result<CyclicSequence> {
    if n1 != n2 && n1 != n2 + 1 {
        return Err(Error::Parameter(format!(
            "window widths n1={n1}, n2={n2} need n1 = n2 or n1 = n2 + 1"
        )));
    }
    if r1 > n1 || r2 > n2 {
        return Err(Error::InvalidRadius { n: if r1 > n1 { n1 } else { n2 }, radius: r1.max(r2) });
    }
    let (k1, k2) = (a.len(), b.len());
    if gcd(k1, k2) != 1 {
        return Err(Error::IncompatibleLengths(k1, k2));
    }
    let total = k1
        .checked_mul(k2)
        .and_then(|p| p.checked_mul(2))
        .ok_or_else(|| Error::ResourceLimit("interleaved length overflows".into()))?;
    let mut bits = Vec::with_capacity(total);
    for i in 0..k1 * k2 {
        bits.push(a.get(i % k1));
        bits.push(b.get(i % k2));
    }
    CyclicSequence::from_bits(&bits)
}

/// Position where a cyclic run of `run` copies of `fill` starts, if any.
pub fn find_run(a: &CyclicSequence, run: usize, fill: u8) -> Option<usize> {
    let k = a.len();
    if run == 0 {
        return Some(0);
    }
    if run > k {
        return None;
    }
    let mut len = 0;
    // scan twice around so runs crossing the end are seen
    for i in 0..2 * k {
        if a.get(i) == fill {
            len += 1;
            if len >= run {
                let start = (i + 1 - run) % k;
                return Some(start);
            }
        } else {
            len = 0;
        }
    }
    None
}

/// Length of `square_interleave` for a seed of length `k`.
pub fn square_interleave_length(k: usize) -> usize {
    if k % 2 == 0 {
        k * (k + 1)
    } else {
        (k + 1) * (k + 1)
    }
}

/// Interleaves an `(n, R)`-CS with itself at every relative phase, giving a
/// `(2n, 2R)`-CS of length `k(k+1)` for even `k` and `(k+1)^2` for odd `k`.
///
/// `a` must contain a run of `n - 1` copies of `fill`; it is rotated so the run
/// starts at position 0. Part `i` reads `a_{i-1+j} a_j` for `j = 0 .. k-1`,
/// followed by `a_{i-1}` and `fill`.
pub fn square_interleave(a: &CyclicSequence, n: usize, fill: u8) -> Result<CyclicSequence> {
    if fill > 1 {
        return Err(Error::Parameter(format!("fill symbol {fill} is not a bit")));
    }
    let run = n.saturating_sub(1);
    let start = find_run(a, run, fill).ok_or_else(|| {
        Error::Precondition(format!("sequence has no run of {run} consecutive {fill}s"))
    })?;
    let a = a.rotate(start);
    let k = a.len();
    let parts = k.div_ceil(2);
    let mut bits = Vec::with_capacity(square_interleave_length(k));
    for i in 1..=parts {
        for j in 0..k {
            bits.push(a.get(i - 1 + j));
            bits.push(a.get(j));
        }
        bits.push(a.get(i - 1));
        bits.push(fill);
    }
    debug_assert_eq!(bits.len(), square_interleave_length(k));
    CyclicSequence::from_bits(&bits)
}

/// Reading direction of the seed used by [`square_interleave_verified`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Forward,
    Reversed,
}

/// [`square_interleave`] followed by an exhaustive `(2n, 2R)` check.
///
/// For even `k` the `A` phase advances by `k/2` over all parts, so the
/// sequence wraps with a phase jump and a few windows are lost. When that
/// breaks coverage the reversed seed, also an `(n, R)`-CS with the same run,
/// is tried. Fails with `Precondition` when neither direction covers.
pub fn square_interleave_verified(
    a: &CyclicSequence,
    n: usize,
    radius: usize,
    fill: u8,
    limits: &VerifyLimits,
) -> Result<(CyclicSequence, Orientation)> {
    for (seed, orientation) in [(a.clone(), Orientation::Forward), (a.reversed(), Orientation::Reversed)] {
        let s = square_interleave(&seed, n, fill)?;
        if is_covering_sequence_with(&s, 2 * n, 2 * radius, limits)?.is_covering() {
            return Ok((s, orientation));
        }
    }
    Err(Error::Precondition(format!(
        "square interleave of a length-{} seed is not a ({}, {})-CS in either direction",
        a.len(),
        2 * n,
        2 * radius
    )))
}
