use crate::error::{Error, Result};
use crate::seq::CyclicSequence;

/// Largest de Bruijn sequence length produced, `q^span <= 2^24`.
pub const MAX_DEBRUIJN_LEN: u64 = 1 << 24;

/// Lexicographically least de Bruijn sequence of order `span` over `{0, .., q-1}`.
///
/// Built by concatenating, in lexicographic order, the Lyndon words whose length
/// divides `span`.
pub fn debruijn(q: usize, span: usize) -> Result<Vec<usize>> {
    if q < 2 {
        return Err(Error::Parameter(format!("alphabet size {q} must be at least 2")));
    }
    if span == 0 {
        return Err(Error::Parameter("span must be positive".into()));
    }
    let len = u32::try_from(span)
        .ok()
        .and_then(|s| (q as u64).checked_pow(s))
        .filter(|&l| l <= MAX_DEBRUIJN_LEN)
        .ok_or_else(|| Error::ResourceLimit(format!("{q}^{span} exceeds 2^24 symbols")))?;

    let mut out = Vec::with_capacity(len as usize);
    // Duval's generation of Lyndon words in lexicographic order; those whose
    // length divides `span` concatenate to the sequence.
    let mut w: Vec<usize> = vec![0];
    while !w.is_empty() {
        let m = w.len();
        if span % m == 0 {
            out.extend_from_slice(&w);
        }
        while w.len() < span {
            w.push(w[w.len() - m]);
        }
        while w.last() == Some(&(q - 1)) {
            w.pop();
        }
        if let Some(last) = w.last_mut() {
            *last += 1;
        }
    }
    debug_assert_eq!(out.len() as u64, len);
    Ok(out)
}

/// Binary de Bruijn sequence of span `n`, the `(n, 0)`-covering sequence.
pub fn debruijn_binary(n: usize) -> Result<CyclicSequence> {
    let d = debruijn(2, n)?;
    let bits: Vec<u8> = d.into_iter().map(|x| x as u8).collect();
    CyclicSequence::from_bits(&bits)
}
