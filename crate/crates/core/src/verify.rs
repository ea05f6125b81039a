//! Exhaustive covering checks over the full `2^n` word space.
//!
//! Every check collects the distinct windows into a bit table indexed by word
//! value, marks the radius-`R` ball around each of them, and counts the marked
//! words. Tables are plain `Vec<u64>` bitsets, so the cost is
//! `O(#distinct windows * V(n, R))` marks plus one linear scan of `2^n / 64` words.

use std::env;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::seq::{ball_volume, BinaryWord, CyclicSequence, SequenceCode, TorusArray, MAX_WORD_BITS};

/// Default cap on the window width: a table of `2^28` bits is 32 MiB.
pub const DEFAULT_MAX_BITS: usize = 28;

/// Number of uncovered words retained as witnesses in a report.
pub const WITNESS_LIMIT: usize = 100;

/// Environment variable that raises the default width cap.
pub const MAX_N_ENV: &str = "COVSEQ_MAX_N";

/// Resource limits for exhaustive checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyLimits {
    /// Largest window width (`n`, or `m * n` for arrays) that may be tabulated.
    pub max_bits: usize,
    /// Split ball marking across the rayon pool when the table is small enough.
    pub parallel: bool,
}

impl Default for VerifyLimits {
    fn default() -> Self {
        Self { max_bits: DEFAULT_MAX_BITS, parallel: true }
    }
}

impl VerifyLimits {
    /// Defaults, with `max_bits` taken from `COVSEQ_MAX_N` when set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Self::default();
        if let Ok(raw) = env::var(MAX_N_ENV) {
            let max: usize = raw
                .trim()
                .parse()
                .map_err(|_| Error::Parameter(format!("{MAX_N_ENV}={raw:?} is not an integer")))?;
            if max > MAX_WORD_BITS {
                return Err(Error::UnsupportedWindowWidth(max));
            }
            limits.max_bits = max;
        }
        Ok(limits)
    }

    pub fn sequential(self) -> Self {
        Self { parallel: false, ..self }
    }

    fn check(&self, bits: usize, radius: usize) -> Result<()> {
        if bits == 0 || bits > MAX_WORD_BITS {
            return Err(Error::UnsupportedWindowWidth(bits));
        }
        if bits > self.max_bits {
            return Err(Error::ResourceLimit(format!(
                "window width {bits} exceeds the verification cap {} (raise it with {MAX_N_ENV})",
                self.max_bits
            )));
        }
        if radius > bits {
            return Err(Error::InvalidRadius { n: bits, radius });
        }
        Ok(())
    }
}

/// Result of an exhaustive covering check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverageReport {
    /// Word length being covered (`n`, or `m * n` for arrays).
    pub word_bits: usize,
    pub radius: usize,
    pub space_size: u64,
    pub covered_count: u64,
    pub distinct_windows: u64,
    /// At most [`WITNESS_LIMIT`] uncovered words in ascending order.
    pub uncovered: Vec<BinaryWord>,
    pub uncovered_total: u64,
    /// Smallest radius achieving full coverage, when requested.
    pub computed_radius: Option<usize>,
}

impl CoverageReport {
    pub fn is_covering(&self) -> bool {
        self.covered_count == self.space_size
    }
}

/// Fixed-size bitset over all words of a given width.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct WordTable {
    bits: usize,
    words: Vec<u64>,
}

impl WordTable {
    pub(crate) fn new(bits: usize) -> Self {
        let size = 1u64 << bits;
        Self { bits, words: vec![0; size.div_ceil(64) as usize] }
    }

    #[inline]
    pub(crate) fn insert(&mut self, w: u32) {
        self.words[(w >> 6) as usize] |= 1 << (w & 63);
    }

    pub(crate) fn count(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    fn union_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub(crate) fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros();
                w &= w - 1;
                Some(((i as u32) << 6) | t)
            })
        })
    }

    fn missing(&self, limit: usize) -> Vec<u32> {
        let size = 1u64 << self.bits;
        let mut out = Vec::new();
        for (i, &w) in self.words.iter().enumerate() {
            let mut free = !w;
            while free != 0 && out.len() < limit {
                let t = free.trailing_zeros() as u64;
                free &= free - 1;
                let v = ((i as u64) << 6) | t;
                if v < size {
                    out.push(v as u32);
                }
            }
            if out.len() >= limit {
                break;
            }
        }
        out
    }

    /// Adds every word at distance one from a member.
    pub(crate) fn dilate(&mut self) {
        let src = self.words.clone();
        for b in 0..self.bits {
            if b < 6 {
                let shift = 1u32 << b;
                let low = LOW_HALF_MASKS[b];
                for (dst, &x) in self.words.iter_mut().zip(&src) {
                    *dst |= ((x & low) << shift) | ((x >> shift) & low);
                }
            } else {
                let stride = 1usize << (b - 6);
                for (i, dst) in self.words.iter_mut().enumerate() {
                    *dst |= src[i ^ stride];
                }
            }
        }
    }
}

/// For bit `b` of the in-word index: positions whose bit `b` is clear.
const LOW_HALF_MASKS: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0f0f_0f0f_0f0f_0f0f,
    0x00ff_00ff_00ff_00ff,
    0x0000_ffff_0000_ffff,
    0x0000_0000_ffff_ffff,
];

/// All error patterns of weight at most `radius` over `bits` positions.
pub(crate) fn ball_masks(bits: usize, radius: usize) -> Vec<u32> {
    let mut masks = vec![0u32];
    for weight in 1..=radius.min(bits) {
        // Gosper's hack over `bits`-bit combinations of the given weight.
        let limit = 1u64 << bits;
        let mut m: u64 = (1u64 << weight) - 1;
        while m < limit {
            masks.push(m as u32);
            let c = m & m.wrapping_neg();
            let r = m + c;
            m = (((r ^ m) >> 2) / c) | r;
        }
    }
    masks
}

fn mark_balls(bits: usize, radius: usize, windows: &WordTable, limits: &VerifyLimits) -> WordTable {
    let masks = ball_masks(bits, radius);
    let centers: Vec<u32> = windows.iter().collect();
    let work = centers.len() as u64 * masks.len() as u64;
    let mark_into = |table: &mut WordTable, chunk: &[u32]| {
        for &c in chunk {
            for &m in &masks {
                table.insert(c ^ m);
            }
        }
    };
    // Parallel workers own private tables, so cap the table size they may copy.
    if limits.parallel && bits <= 22 && work >= 1 << 20 {
        let chunk = centers.len().div_ceil(rayon::current_num_threads() * 4).max(1);
        centers
            .par_chunks(chunk)
            .fold(
                || WordTable::new(bits),
                |mut t, c| {
                    mark_into(&mut t, c);
                    t
                },
            )
            .reduce(
                || WordTable::new(bits),
                |mut a, b| {
                    a.union_with(&b);
                    a
                },
            )
    } else {
        let mut table = WordTable::new(bits);
        mark_into(&mut table, &centers);
        table
    }
}

fn report(bits: usize, radius: usize, windows: &WordTable, limits: &VerifyLimits) -> CoverageReport {
    let covered = mark_balls(bits, radius, windows, limits);
    let space_size = 1u64 << bits;
    let covered_count = covered.count();
    let uncovered = covered
        .missing(WITNESS_LIMIT)
        .into_iter()
        .map(|w| BinaryWord::from_raw(w, bits))
        .collect();
    CoverageReport {
        word_bits: bits,
        radius,
        space_size,
        covered_count,
        distinct_windows: windows.count(),
        uncovered,
        uncovered_total: space_size - covered_count,
        computed_radius: None,
    }
}

pub(crate) fn sequence_windows(seqs: &[CyclicSequence], n: usize) -> Result<WordTable> {
    let mut table = WordTable::new(n);
    for s in seqs {
        for w in s.window_values(n)? {
            table.insert(w);
        }
    }
    Ok(table)
}

/// Checks whether the windows of all codewords form an `(n, R)`-covering code.
pub fn coverage(code: &SequenceCode) -> Result<CoverageReport> {
    coverage_with(code, &VerifyLimits::from_env()?)
}

pub fn coverage_with(code: &SequenceCode, limits: &VerifyLimits) -> Result<CoverageReport> {
    limits.check(code.n, code.radius)?;
    if code.codewords.is_empty() {
        return Err(Error::EmptyInput("sequence code"));
    }
    let windows = sequence_windows(&code.codewords, code.n)?;
    Ok(report(code.n, code.radius, &windows, limits))
}

/// Coverage check of a single sequence as an `(n, R)`-covering sequence.
pub fn is_covering_sequence(s: &CyclicSequence, n: usize, radius: usize) -> Result<CoverageReport> {
    is_covering_sequence_with(s, n, radius, &VerifyLimits::from_env()?)
}

pub fn is_covering_sequence_with(
    s: &CyclicSequence,
    n: usize,
    radius: usize,
    limits: &VerifyLimits,
) -> Result<CoverageReport> {
    limits.check(n, radius)?;
    let windows = sequence_windows(std::slice::from_ref(s), n)?;
    Ok(report(n, radius, &windows, limits))
}

/// Smallest `R` for which `s` is an `(n, R)`-covering sequence.
///
/// Multi-source breadth-first expansion from all windows over the `n`-cube,
/// one full-table dilation per layer.
pub fn covering_radius(s: &CyclicSequence, n: usize) -> Result<usize> {
    covering_radius_with(s, n, &VerifyLimits::from_env()?)
}

pub fn covering_radius_with(s: &CyclicSequence, n: usize, limits: &VerifyLimits) -> Result<usize> {
    limits.check(n, 0)?;
    let mut reached = sequence_windows(std::slice::from_ref(s), n)?;
    let space = 1u64 << n;
    let mut radius = 0;
    while reached.count() < space {
        reached.dilate();
        radius += 1;
    }
    Ok(radius)
}

/// Full coverage report for `s` at width `n`, including the computed radius.
pub fn sequence_report_with_radius(
    s: &CyclicSequence,
    n: usize,
    radius: usize,
    limits: &VerifyLimits,
) -> Result<CoverageReport> {
    let mut rep = is_covering_sequence_with(s, n, radius, limits)?;
    rep.computed_radius = Some(covering_radius_with(s, n, limits)?);
    Ok(rep)
}

pub(crate) fn array_windows(a: &TorusArray, m: usize, n: usize) -> WordTable {
    let mut table = WordTable::new(m * n);
    for r in 0..a.rows() {
        for c in 0..a.cols() {
            table.insert(a.window_value(r, c, m, n));
        }
    }
    table
}

/// Checks whether the toroidal `m x n` windows of `a` form a covering code of radius `R`.
pub fn is_c2ds(a: &TorusArray, m: usize, n: usize, radius: usize) -> Result<CoverageReport> {
    is_c2ds_with(a, m, n, radius, &VerifyLimits::from_env()?)
}

pub fn is_c2ds_with(
    a: &TorusArray,
    m: usize,
    n: usize,
    radius: usize,
    limits: &VerifyLimits,
) -> Result<CoverageReport> {
    if m == 0 || n == 0 {
        return Err(Error::Parameter("window dimensions must be positive".into()));
    }
    limits.check(m * n, radius)?;
    let windows = array_windows(a, m, n);
    Ok(report(m * n, radius, &windows, limits))
}

/// `ceil(2^n / V_2(n, R))`, the counting lower bound on the length of an `(n, R)`-CS.
pub fn sphere_covering_bound(n: usize, radius: usize) -> Result<u128> {
    let volume = ball_volume(2, n, radius)?;
    if n >= 128 {
        return Err(Error::ResourceLimit(format!("2^{n} overflows u128")));
    }
    Ok((1u128 << n).div_ceil(volume))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cs(s: &str) -> CyclicSequence {
        s.parse().unwrap()
    }

    #[test]
    fn optimal_8_1_sequence_covers() {
        let s = cs("00011011111001000001101011100101");
        let rep = is_covering_sequence(&s, 8, 1).unwrap();
        assert_eq!(rep.covered_count, 256);
        assert!(rep.is_covering());
        assert_eq!(rep.uncovered_total, 0);
    }

    #[test]
    fn full_radius_covers_everything() {
        let rep = is_covering_sequence(&cs("0"), 3, 3).unwrap();
        assert!(rep.is_covering());
    }

    #[test]
    fn uncovered_witnesses_are_reported() {
        let rep = is_covering_sequence(&cs("10"), 2, 0).unwrap();
        assert_eq!(rep.covered_count, 2);
        let w: Vec<String> = rep.uncovered.iter().map(|w| w.to_string()).collect();
        assert_eq!(w, ["00", "11"]);
        assert!(!rep.is_covering());
    }

    #[test]
    fn witness_list_is_truncated() {
        let rep = is_covering_sequence(&cs("0"), 12, 0).unwrap();
        assert_eq!(rep.uncovered.len(), WITNESS_LIMIT);
        assert_eq!(rep.uncovered_total, 4095);
    }

    #[test]
    fn short_sequences_cannot_cover() {
        // sphere_covering_bound(8, 1) = 29
        let s = cs("0001101111100100000110101110");
        assert!(!is_covering_sequence(&s, 8, 1).unwrap().is_covering());
    }

    #[test]
    fn radius_of_optimal_sequence() {
        let s = cs("00011011111001000001101011100101");
        assert_eq!(covering_radius(&s, 8).unwrap(), 1);
        assert_eq!(covering_radius(&cs("0"), 7).unwrap(), 7);
        assert_eq!(covering_radius(&cs("01"), 1).unwrap(), 0);
    }

    #[test]
    fn sphere_bound_examples() {
        assert_eq!(sphere_covering_bound(8, 1).unwrap(), 29);
        assert_eq!(sphere_covering_bound(9, 9).unwrap(), 1);
        assert_eq!(sphere_covering_bound(16, 1).unwrap(), 3856);
        assert_eq!(sphere_covering_bound(9, 1).unwrap(), 52);
    }

    #[test]
    fn limits_are_enforced() {
        let s = cs("01");
        let tight = VerifyLimits { max_bits: 10, parallel: false };
        assert!(matches!(
            is_covering_sequence_with(&s, 11, 1, &tight),
            Err(Error::ResourceLimit(_))
        ));
        assert!(matches!(
            is_covering_sequence_with(&s, 33, 1, &tight),
            Err(Error::UnsupportedWindowWidth(33))
        ));
        assert!(matches!(
            is_covering_sequence_with(&s, 4, 5, &tight),
            Err(Error::InvalidRadius { .. })
        ));
    }

    #[test]
    fn ball_mask_counts_match_volume() {
        for n in 1..=12 {
            for r in 0..=n {
                let masks = ball_masks(n, r);
                assert_eq!(masks.len() as u128, ball_volume(2, n, r).unwrap(), "n={n} r={r}");
                assert!(masks.iter().all(|&m| (m as u64) < 1u64 << n));
            }
        }
    }

    #[test]
    fn dilation_matches_mask_marking() {
        let s = cs("0001101111100100000110101110011100101");
        for n in [3usize, 6, 7, 9, 11] {
            let windows = sequence_windows(std::slice::from_ref(&s), n).unwrap();
            let mut grown = windows.clone();
            for r in 1..=3 {
                grown.dilate();
                let marked = mark_balls(n, r, &windows, &VerifyLimits::default().sequential());
                assert_eq!(grown, marked, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let bits: Vec<u8> = (0..3000u32).map(|i| (i.wrapping_mul(2654435761) >> 13 & 1) as u8).collect();
        let s = CyclicSequence::from_bits(&bits).unwrap();
        let par = is_covering_sequence_with(&s, 18, 3, &VerifyLimits::default()).unwrap();
        let seq = is_covering_sequence_with(&s, 18, 3, &VerifyLimits::default().sequential()).unwrap();
        assert_eq!(par, seq);
    }

    #[test]
    fn array_coverage_of_single_row_wraps() {
        // the vertical extent wraps onto the same row
        let a = TorusArray::from_rows(&[cs("00011011111001000001101011100101")]).unwrap();
        let rep = is_c2ds(&a, 2, 4, 1).unwrap();
        assert!(!rep.is_covering());
    }
}
