//! Bit-packed binary words, cyclic sequences and torus arrays.
//!
//! Printed strings read left to right from position 0. Inside a
//! [`BinaryWord`] position 0 is the most significant bit, so the string
//! `"00011011"` has value `0b00011011`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported window width.
pub const MAX_WORD_BITS: usize = 32;

/// A binary word of fixed length `len <= 32`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord {
    bits: u32,
    len: u8,
}

impl BinaryWord {
    pub fn new(bits: u32, len: usize) -> Result<Self> {
        if len == 0 || len > MAX_WORD_BITS {
            return Err(Error::UnsupportedWindowWidth(len));
        }
        if len < 32 && bits >> len != 0 {
            return Err(Error::Dimension(format!(
                "value {bits:#x} does not fit in {len} bits"
            )));
        }
        Ok(Self { bits, len: len as u8 })
    }

    pub(crate) fn from_raw(bits: u32, len: usize) -> Self {
        debug_assert!((1..=MAX_WORD_BITS).contains(&len));
        Self { bits, len: len as u8 }
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.bits
    }

    #[inline]
    pub fn len(self) -> usize {
        self.len as usize
    }

    /// Symbol at position `i` (position 0 is the leftmost character).
    #[inline]
    pub fn bit(self, i: usize) -> u8 {
        ((self.bits >> (self.len() - 1 - i)) & 1) as u8
    }

    pub fn complement(self) -> Self {
        Self::from_raw(!self.bits & word_mask(self.len()), self.len())
    }

    pub fn distance(self, other: Self) -> Result<u32> {
        hamming_distance(self, other)
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            f.write_str(if self.bit(i) == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord({self})")
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = parse_bits(s, 1)?;
        if bits.len() > MAX_WORD_BITS {
            return Err(Error::UnsupportedWindowWidth(bits.len()));
        }
        let value = bits.iter().fold(0u32, |acc, &b| (acc << 1) | b as u32);
        BinaryWord::new(value, bits.len())
    }
}

#[inline]
pub(crate) fn word_mask(len: usize) -> u32 {
    if len >= 32 {
        u32::MAX
    } else {
        (1u32 << len) - 1
    }
}

/// Number of positions in which `a` and `b` differ.
pub fn hamming_distance(a: BinaryWord, b: BinaryWord) -> Result<u32> {
    if a.len != b.len {
        return Err(Error::Dimension(format!(
            "cannot compare words of length {} and {}",
            a.len, b.len
        )));
    }
    Ok((a.bits ^ b.bits).count_ones())
}

/// `V_q(n, R)`, the number of words within distance `radius` of a fixed word.
pub fn ball_volume(q: u64, n: usize, radius: usize) -> Result<u128> {
    if q < 2 {
        return Err(Error::Parameter(format!("alphabet size {q} < 2")));
    }
    if radius > n {
        return Err(Error::InvalidRadius { n, radius });
    }
    let overflow = || Error::ResourceLimit(format!("V_{q}({n},{radius}) overflows u128"));
    let mut total: u128 = 0;
    let mut binom: u128 = 1;
    let mut power: u128 = 1;
    for i in 0..=radius {
        if i > 0 {
            // C(n, i) = C(n, i-1) * (n - i + 1) / i stays exact.
            binom = binom
                .checked_mul((n - i + 1) as u128)
                .ok_or_else(overflow)?
                / i as u128;
            power = power.checked_mul(q as u128 - 1).ok_or_else(overflow)?;
        }
        let term = binom.checked_mul(power).ok_or_else(overflow)?;
        total = total.checked_add(term).ok_or_else(overflow)?;
    }
    Ok(total)
}

/// A cyclic binary sequence of length at least one, stored 64 symbols per word.
///
/// Equality is positional: two rotations of the same necklace compare unequal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclicSequence {
    words: Vec<u64>,
    len: usize,
}

impl CyclicSequence {
    /// Builds a sequence from symbols in `{0, 1}`.
    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::EmptyInput("cyclic sequence"));
        }
        if let Some(pos) = bits.iter().position(|&b| b > 1) {
            return Err(Error::Parse {
                line: 1,
                msg: format!("symbol {} at position {pos} is not binary", bits[pos]),
            });
        }
        Ok(Self::from_bits_unchecked(bits))
    }

    pub(crate) fn from_bits_unchecked(bits: &[u8]) -> Self {
        debug_assert!(!bits.is_empty());
        let mut words = vec![0u64; bits.len().div_ceil(64)];
        for (i, &b) in bits.iter().enumerate() {
            if b != 0 {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        Self { words, len: bits.len() }
    }

    pub fn zeros(len: usize) -> Result<Self> {
        Self::from_bits(&vec![0; len])
    }

    pub fn ones(len: usize) -> Result<Self> {
        Self::from_bits(&vec![1; len])
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    /// Always false; kept for API symmetry with collections.
    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Symbol at cyclic position `i`.
    #[inline]
    pub fn get(&self, i: usize) -> u8 {
        let i = i % self.len;
        ((self.words[i / 64] >> (i % 64)) & 1) as u8
    }

    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Left rotation: `result[i] = self[(i + j) mod k]`.
    pub fn rotate(&self, j: usize) -> Self {
        let j = j % self.len;
        if j == 0 {
            return self.clone();
        }
        let bits: Vec<u8> = (0..self.len).map(|i| self.get(i + j)).collect();
        Self::from_bits_unchecked(&bits)
    }

    /// Reading order reversed: `result[i] = self[k - 1 - i]`.
    pub fn reversed(&self) -> Self {
        let bits: Vec<u8> = (0..self.len).rev().map(|i| self.get(i)).collect();
        Self::from_bits_unchecked(&bits)
    }

    pub fn complement(&self) -> Self {
        let mut words: Vec<u64> = self.words.iter().map(|w| !w).collect();
        let tail = self.len % 64;
        if tail != 0 {
            *words.last_mut().unwrap() &= (1u64 << tail) - 1;
        }
        Self { words, len: self.len }
    }

    /// Smallest `d` dividing the length with `s[i] = s[i + d]` for all `i`.
    pub fn minimal_period(&self) -> usize {
        let bits = self.to_bits();
        let border = failure_function(&bits)[self.len];
        let p = self.len - border;
        if self.len % p == 0 {
            p
        } else {
            self.len
        }
    }

    /// The first `minimal_period()` symbols; it has the same window set.
    pub fn primitive_root(&self) -> Self {
        let p = self.minimal_period();
        if p == self.len {
            return self.clone();
        }
        Self::from_bits_unchecked(&self.to_bits()[..p])
    }

    /// Lexicographically least rotation (necklace representative).
    pub fn canonical_rotation(&self) -> Self {
        self.rotate(least_rotation(&self.to_bits()))
    }

    /// Window value starting at cyclic position `start`, first symbol most significant.
    #[inline]
    pub fn window_value(&self, start: usize, n: usize) -> u32 {
        let mut w = 0u32;
        for j in 0..n {
            w = (w << 1) | self.get(start + j) as u32;
        }
        w
    }

    /// All `k` cyclic `n`-windows in start-position order, duplicates kept.
    pub fn windows(&self, n: usize) -> Result<Vec<BinaryWord>> {
        Ok(self
            .window_values(n)?
            .map(|w| BinaryWord::from_raw(w, n))
            .collect())
    }

    /// Streaming form of [`windows`](Self::windows) yielding raw values.
    pub fn window_values(&self, n: usize) -> Result<WindowValues<'_>> {
        if n == 0 || n > MAX_WORD_BITS {
            return Err(Error::UnsupportedWindowWidth(n));
        }
        Ok(WindowValues {
            seq: self,
            n,
            next: 0,
            current: if n > 1 { self.window_value(0, n - 1) } else { 0 },
        })
    }

    /// Concatenation of the given sequences in order.
    pub fn concat<'a, I>(parts: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a CyclicSequence>,
    {
        let mut bits = Vec::new();
        for p in parts {
            bits.extend(p.to_bits());
        }
        Self::from_bits(&bits)
    }

    /// Linear string of `self` followed by its own first `extra` symbols (cyclically).
    pub fn linear_extension(&self, extra: usize) -> Vec<u8> {
        (0..self.len + extra).map(|i| self.get(i)).collect()
    }
}

/// Iterator over cyclic window values of a sequence.
pub struct WindowValues<'a> {
    seq: &'a CyclicSequence,
    n: usize,
    next: usize,
    current: u32,
}

impl Iterator for WindowValues<'_> {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.next >= self.seq.len {
            return None;
        }
        let incoming = self.seq.get(self.next + self.n - 1) as u32;
        let w = ((self.current << 1) | incoming) & word_mask(self.n);
        self.current = w;
        self.next += 1;
        Some(w)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rest = self.seq.len - self.next;
        (rest, Some(rest))
    }
}

impl ExactSizeIterator for WindowValues<'_> {}

impl fmt::Display for CyclicSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len)
            .map(|i| if self.get(i) == 1 { '1' } else { '0' })
            .collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for CyclicSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len <= 128 {
            write!(f, "CyclicSequence({self})")
        } else {
            write!(f, "CyclicSequence(len={})", self.len)
        }
    }
}

impl FromStr for CyclicSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_bits(&parse_bits(s, 1)?)
    }
}

/// Parses a run of `0`/`1` characters, ignoring ASCII whitespace.
pub(crate) fn parse_bits(s: &str, line: usize) -> Result<Vec<u8>> {
    let mut out = Vec::with_capacity(s.len());
    for (col, c) in s.chars().enumerate() {
        match c {
            '0' => out.push(0),
            '1' => out.push(1),
            c if c.is_ascii_whitespace() => {}
            other => {
                return Err(Error::Parse {
                    line,
                    msg: format!("unexpected character {other:?} at column {}", col + 1),
                })
            }
        }
    }
    Ok(out)
}

/// KMP failure function: `f[i]` is the longest proper border of `s[..i]`.
pub(crate) fn failure_function(s: &[u8]) -> Vec<usize> {
    let mut f = vec![0usize; s.len() + 1];
    let mut k = 0;
    for i in 1..s.len() {
        while k > 0 && s[i] != s[k] {
            k = f[k];
        }
        if s[i] == s[k] {
            k += 1;
        }
        f[i + 1] = k;
    }
    f
}

/// Start index of the lexicographically least rotation (two-pointer minimum expression).
pub(crate) fn least_rotation(s: &[u8]) -> usize {
    let n = s.len();
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = s[(i + k) % n];
        let b = s[(j + k) % n];
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

/// A doubly periodic `rows x cols` binary array, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TorusArray {
    rows: usize,
    cols: usize,
    words: Vec<u64>,
}

impl TorusArray {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u8) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyInput("torus array"));
        }
        let mut words = vec![0u64; (rows * cols).div_ceil(64)];
        for r in 0..rows {
            for c in 0..cols {
                if f(r, c) != 0 {
                    let i = r * cols + c;
                    words[i / 64] |= 1 << (i % 64);
                }
            }
        }
        Ok(Self { rows, cols, words })
    }

    /// Builds an array from equal-length rows.
    pub fn from_rows(rows: &[CyclicSequence]) -> Result<Self> {
        let Some(first) = rows.first() else {
            return Err(Error::EmptyInput("torus array"));
        };
        let cols = first.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::Dimension(format!(
                "row of length {} in array of width {cols}",
                bad.len()
            )));
        }
        Self::from_fn(rows.len(), cols, |r, c| rows[r].get(c))
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn area(&self) -> usize {
        self.rows * self.cols
    }

    /// Symbol at toroidal position `(r, c)`.
    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        let i = (r % self.rows) * self.cols + (c % self.cols);
        ((self.words[i / 64] >> (i % 64)) & 1) as u8
    }

    pub fn row(&self, r: usize) -> CyclicSequence {
        let bits: Vec<u8> = (0..self.cols).map(|c| self.get(r, c)).collect();
        CyclicSequence::from_bits_unchecked(&bits)
    }

    /// The `m x n` window at `(r, c)` flattened row-major, first symbol most significant.
    #[inline]
    pub fn window_value(&self, r: usize, c: usize, m: usize, n: usize) -> u32 {
        let mut w = 0u32;
        for i in 0..m {
            for j in 0..n {
                w = (w << 1) | self.get(r + i, c + j) as u32;
            }
        }
        w
    }
}

impl fmt::Display for TorusArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            writeln!(f, "{}", self.row(r))?;
        }
        Ok(())
    }
}

impl fmt::Debug for TorusArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TorusArray({}x{})", self.rows, self.cols)
    }
}

/// A set of cyclic codewords whose `n`-windows should form an `(n, R)`-covering code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceCode {
    pub n: usize,
    pub radius: usize,
    pub codewords: Vec<CyclicSequence>,
}

impl SequenceCode {
    pub fn new(n: usize, radius: usize, codewords: Vec<CyclicSequence>) -> Self {
        Self { n, radius, codewords }
    }

    /// Common codeword length, if all codewords share one.
    pub fn uniform_length(&self) -> Option<usize> {
        let first = self.codewords.first()?.len();
        self.codewords.iter().all(|c| c.len() == first).then_some(first)
    }

    pub fn total_length(&self) -> usize {
        self.codewords.iter().map(CyclicSequence::len).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cs(s: &str) -> CyclicSequence {
        s.parse().unwrap()
    }

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    #[test]
    fn rotate_matches_printed_rows() {
        let s = cs("000100111011");
        assert_eq!(s.rotate(1), cs("001001110110"));
        assert_eq!(s.rotate(3), cs("100111011000"));
        assert_eq!(s.rotate(0), s);
        assert_eq!(s.rotate(12), s);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(cs("00011011").complement(), cs("11100100"));
        assert_eq!(cs("0").complement(), cs("1"));
        let long: CyclicSequence = "10".repeat(50).parse().unwrap();
        assert_eq!(long.complement().complement(), long);
        assert_eq!(long.complement().weight(), 50);
    }

    #[test]
    fn minimal_period_examples() {
        assert_eq!(cs("1000010000").minimal_period(), 5);
        assert_eq!(cs("1010101010").minimal_period(), 2);
        assert_eq!(cs("0110").minimal_period(), 4);
        assert_eq!(cs("0").minimal_period(), 1);
        assert_eq!(cs("1111").minimal_period(), 1);
        // border exists but does not divide the length
        assert_eq!(cs("10100").minimal_period(), 5);
        assert_eq!(cs("1000010000").primitive_root(), cs("10000"));
    }

    #[test]
    fn windows_examples() {
        let ws = cs("10").windows(2).unwrap();
        assert_eq!(ws, vec![w("10"), w("01")]);
        let ws = cs("10000").windows(9).unwrap();
        assert_eq!(ws.len(), 5);
        assert_eq!(ws[0], w("100001000"));
        assert_eq!(ws[1], w("000010000"));
        assert!(matches!(cs("01").windows(33), Err(Error::UnsupportedWindowWidth(33))));
        assert!(matches!(cs("01").windows(0), Err(Error::UnsupportedWindowWidth(0))));
    }

    #[test]
    fn window_values_match_direct_reads() {
        let s = cs("0001101111100100000110101110011100101");
        for n in 1..=12 {
            let fast: Vec<u32> = s.window_values(n).unwrap().collect();
            let slow: Vec<u32> = (0..s.len()).map(|i| s.window_value(i, n)).collect();
            assert_eq!(fast, slow, "n = {n}");
        }
    }

    #[test]
    fn distance_examples() {
        assert_eq!(hamming_distance(w("00011011"), w("00011010")).unwrap(), 1);
        let x = w("10110");
        assert_eq!(x.distance(x).unwrap(), 0);
        assert_eq!(x.distance(x.complement()).unwrap(), 5);
        assert!(matches!(
            hamming_distance(w("101"), w("1010")),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn binary_word_rejects_overflow() {
        assert!(BinaryWord::new(0b100, 2).is_err());
        assert!(BinaryWord::new(u32::MAX, 32).is_ok());
        assert_eq!(w("00011011").bits(), 0b00011011);
        assert_eq!(w("00011011").to_string(), "00011011");
    }

    #[test]
    fn ball_volume_examples() {
        assert_eq!(ball_volume(2, 8, 1).unwrap(), 9);
        assert_eq!(ball_volume(2, 13, 0).unwrap(), 1);
        assert_eq!(ball_volume(2, 20, 2).unwrap(), 211);
        assert_eq!(ball_volume(2, 10, 10).unwrap(), 1024);
        assert_eq!(ball_volume(3, 4, 2).unwrap(), 1 + 8 + 24);
        assert!(matches!(ball_volume(2, 3, 4), Err(Error::InvalidRadius { .. })));
    }

    #[test]
    fn canonical_rotation_is_least() {
        let s = cs("1101000");
        assert_eq!(s.canonical_rotation(), cs("0001101"));
        assert_eq!(cs("0").canonical_rotation(), cs("0"));
        assert_eq!(cs("1010").canonical_rotation(), cs("0101"));
    }

    #[test]
    fn torus_indexing_wraps() {
        let rows = [cs("0011"), cs("0101"), cs("1110")];
        let a = TorusArray::from_rows(&rows).unwrap();
        assert_eq!((a.rows(), a.cols()), (3, 4));
        assert_eq!(a.get(3, 4), a.get(0, 0));
        assert_eq!(a.window_value(2, 3, 2, 2), 0b01_10);
        assert_eq!(a.to_string(), "0011\n0101\n1110\n");
        assert!(TorusArray::from_rows(&[cs("01"), cs("011")]).is_err());
    }

    #[test]
    fn empty_sequence_is_rejected() {
        assert!(matches!(CyclicSequence::from_bits(&[]), Err(Error::EmptyInput(_))));
        assert!("".parse::<CyclicSequence>().is_err());
        assert!("01x".parse::<CyclicSequence>().is_err());
    }
}
