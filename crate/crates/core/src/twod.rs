//! Covering 2D-sequences from covering sequences.

use rayon::prelude::*;

use crate::construct::debruijn;
use crate::error::{Error, Result};
use crate::seq::{CyclicSequence, TorusArray};
use crate::verify::{is_covering_sequence_with, VerifyLimits};

/// Absolute left rotations of the seed, one per array row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftSchedule {
    pub shifts: Vec<usize>,
    pub seed_length: usize,
}

impl ShiftSchedule {
    /// Row `i` rotated by `i(i+1)/2`; for even `k` the last row is repeated.
    pub fn triangular(k: usize) -> Self {
        let mut shifts: Vec<usize> = (0..k).map(|i| (i * (i + 1) / 2) % k).collect();
        if k % 2 == 0 {
            shifts.push(shifts[k - 1]);
        } else {
            assert_eq!((k * (k + 1) / 2) % k, 0, "odd k wraps back to the unshifted row");
        }
        Self { shifts, seed_length: k }
    }

    /// Relative shifts follow the span `m - 1` de Bruijn sequence over `Z_k`.
    pub fn de_bruijn(k: usize, m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::Parameter(format!("window height m={m} must be at least 2")));
        }
        let rows = u32::try_from(m - 1)
            .ok()
            .and_then(|e| (k as u64).checked_pow(e))
            .filter(|&r| r <= 1 << 20)
            .ok_or_else(|| Error::ResourceLimit(format!("{k}^{} rows exceed 2^20", m - 1)))?;
        if k < 2 {
            return Err(Error::Parameter("seed length must be at least 2".into()));
        }
        let t = debruijn(k, m - 1)?;
        debug_assert_eq!(t.len() as u64, rows);
        let total: usize = t.iter().fold(0, |acc, &x| (acc + x) % k);
        if total != 0 {
            return Err(Error::Precondition(format!(
                "relative shifts sum to {total} mod {k}, so the rows do not close up"
            )));
        }
        let mut shifts = Vec::with_capacity(t.len());
        let mut acc = 0;
        for &x in &t {
            shifts.push(acc);
            acc = (acc + x) % k;
        }
        Ok(Self { shifts, seed_length: k })
    }

    /// Shift from each row to the next, wrapping from the last row to the first.
    pub fn relative_shifts(&self) -> Vec<usize> {
        let k = self.seed_length;
        let r = self.shifts.len();
        (0..r).map(|i| (self.shifts[(i + 1) % r] + k - self.shifts[i]) % k).collect()
    }

    pub fn apply(&self, s: &CyclicSequence) -> Result<TorusArray> {
        if s.len() != self.seed_length {
            return Err(Error::Dimension(format!(
                "seed of length {} for a schedule over {}",
                s.len(),
                self.seed_length
            )));
        }
        let rows: Vec<CyclicSequence> = self.shifts.par_iter().map(|&j| s.rotate(j)).collect();
        TorusArray::from_rows(&rows)
    }
}

fn check_seed(s: &CyclicSequence, n: usize, radius: usize, limits: &VerifyLimits) -> Result<()> {
    let rep = is_covering_sequence_with(s, n, radius, limits)?;
    if !rep.is_covering() {
        return Err(Error::InvalidSeed(format!(
            "sequence of length {} is not an ({n},{radius})-covering sequence ({} words uncovered)",
            s.len(),
            rep.uncovered_total
        )));
    }
    Ok(())
}

/// Folds a cyclic sequence whose length is a multiple of `n` into rows of
/// width `2n - 1`: row `j` is `t_{jn} .. t_{jn + 2n - 2}`.
pub fn fold_rows(t: &CyclicSequence, n: usize) -> Result<TorusArray> {
    if n == 0 || t.len() % n != 0 {
        return Err(Error::Dimension(format!("length {} is not a multiple of {n}", t.len())));
    }
    TorusArray::from_fn(t.len() / n, 2 * n - 1, |j, c| t.get(j * n + c))
}

/// How the seed was lengthened to a multiple of `n` before folding.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Padding {
    None,
    /// The first `a` symbols were appended and the result re-verified.
    Wrap(usize),
    /// The first `mn - 1 + eps` symbols were appended.
    Extension { eps: usize },
}

#[derive(Clone, Debug)]
pub struct FoldOutcome {
    pub array: TorusArray,
    pub padding: Padding,
    pub padded_length: usize,
}

/// `(m x n, R)`-C2DS of width `2n - 1` from an `(mn, R)`-CS.
pub fn fold(s: &CyclicSequence, m: usize, n: usize, radius: usize) -> Result<TorusArray> {
    Ok(fold_with(s, m, n, radius, &VerifyLimits::from_env()?)?.array)
}

/// Folding with explicit verification limits.
///
/// When `n` does not divide the length, the shortest wrap padding is tried
/// first and kept if the padded sequence still verifies; otherwise the seed is
/// extended by its first `mn - 1 + eps` symbols, which always preserves coverage.
pub fn fold_with(
    s: &CyclicSequence,
    m: usize,
    n: usize,
    radius: usize,
    limits: &VerifyLimits,
) -> Result<FoldOutcome> {
    if m == 0 || n == 0 {
        return Err(Error::Parameter("window dimensions must be positive".into()));
    }
    let width = m * n;
    check_seed(s, width, radius, limits)?;
    let k = s.len();
    let short = (n - k % n) % n;
    if short == 0 {
        return Ok(FoldOutcome { array: fold_rows(s, n)?, padding: Padding::None, padded_length: k });
    }
    let wrapped = CyclicSequence::from_bits(&s.linear_extension(short))?;
    if is_covering_sequence_with(&wrapped, width, radius, limits)?.is_covering() {
        return Ok(FoldOutcome {
            array: fold_rows(&wrapped, n)?,
            padding: Padding::Wrap(short),
            padded_length: wrapped.len(),
        });
    }
    let base = k + width - 1;
    let eps = (n - base % n) % n;
    let extended = CyclicSequence::from_bits(&s.linear_extension(width - 1 + eps))?;
    Ok(FoldOutcome {
        array: fold_rows(&extended, n)?,
        padding: Padding::Extension { eps },
        padded_length: extended.len(),
    })
}

/// `(2 x n, 2R)`-C2DS from an `(n, R)`-CS by triangular-number row shifts.
pub fn triangular_shift_array(s: &CyclicSequence, n: usize, radius: usize) -> Result<TorusArray> {
    check_seed(s, n, radius, &VerifyLimits::from_env()?)?;
    ShiftSchedule::triangular(s.len()).apply(s)
}

/// `(m x n, mR)`-C2DS of size `k^{m-1} x k` with de Bruijn-ordered row shifts.
pub fn debruijn_shift_array(s: &CyclicSequence, n: usize, radius: usize, m: usize) -> Result<TorusArray> {
    let schedule = ShiftSchedule::de_bruijn(s.len(), m)?;
    check_seed(s, n, radius, &VerifyLimits::from_env()?)?;
    schedule.apply(s)
}
