//! Stochastic local search for short covering sequences.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::construct::debruijn_binary;
use crate::error::{Error, Result};
use crate::seq::CyclicSequence;
use crate::verify::{ball_masks, is_covering_sequence_with, sphere_covering_bound, VerifyLimits};

/// Largest window width the search accepts.
pub const MAX_SEARCH_N: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub n: usize,
    pub radius: usize,
    /// Search only at this length. Without a target the search starts near
    /// twice the sphere-covering bound and shortens after every success.
    pub target_length: Option<usize>,
    /// Total number of bit-flip moves.
    pub budget: u64,
    pub rng_seed: u64,
    /// Moves without improvement before the candidate is re-randomised.
    pub restart_after: u64,
}

impl SearchConfig {
    pub fn new(n: usize, radius: usize) -> Self {
        Self { n, radius, target_length: None, budget: 1_000_000, rng_seed: 0, restart_after: 300_000 }
    }
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub sequence: CyclicSequence,
    /// False when the budget ran out and the de Bruijn sequence was returned.
    pub found: bool,
    pub moves: u64,
    pub restarts: u64,
}

/// Coverage counts of a fixed-length candidate under single-bit flips.
struct Candidate<'a> {
    n: usize,
    bits: Vec<u8>,
    windows: Vec<u32>,
    counts: Vec<u32>,
    uncovered: usize,
    masks: &'a [u32],
}

impl<'a> Candidate<'a> {
    fn new(n: usize, bits: Vec<u8>, masks: &'a [u32]) -> Self {
        let len = bits.len();
        let windows: Vec<u32> = (0..len)
            .map(|s| (0..n).fold(0u32, |w, j| (w << 1) | bits[(s + j) % len] as u32))
            .collect();
        let mut counts = vec![0u32; 1 << n];
        for &w in &windows {
            for &m in masks {
                counts[(w ^ m) as usize] += 1;
            }
        }
        let uncovered = counts.iter().filter(|&&c| c == 0).count();
        Self { n, bits, windows, counts, uncovered, masks }
    }

    fn len(&self) -> usize {
        self.bits.len()
    }

    fn shift_window(&mut self, start: usize, new: u32) {
        let old = self.windows[start];
        for &m in self.masks {
            let c = &mut self.counts[(old ^ m) as usize];
            *c -= 1;
            if *c == 0 {
                self.uncovered += 1;
            }
        }
        for &m in self.masks {
            let c = &mut self.counts[(new ^ m) as usize];
            if *c == 0 {
                self.uncovered -= 1;
            }
            *c += 1;
        }
        self.windows[start] = new;
    }

    fn flip(&mut self, pos: usize) {
        let len = self.len();
        self.bits[pos] ^= 1;
        if len < self.n {
            for s in 0..len {
                let w = (0..self.n).fold(0u32, |w, j| (w << 1) | self.bits[(s + j) % len] as u32);
                self.shift_window(s, w);
            }
            return;
        }
        for off in 0..self.n {
            let start = (pos + len - off) % len;
            let w = self.windows[start] ^ (1 << (self.n - 1 - off));
            self.shift_window(start, w);
        }
    }
}

fn random_bits(rng: &mut ChaCha8Rng, len: usize) -> Vec<u8> {
    (0..len).map(|_| rng.gen_range(0..2u8)).collect()
}

/// Runs flips at a fixed length until coverage is total or `moves` runs out.
fn climb(
    cand: &mut Candidate<'_>,
    rng: &mut ChaCha8Rng,
    moves: &mut u64,
    budget: u64,
    restart_after: u64,
    restarts: &mut u64,
) -> bool {
    let mut best = cand.uncovered;
    let mut stale = 0u64;
    while cand.uncovered > 0 && *moves < budget {
        *moves += 1;
        let pos = rng.gen_range(0..cand.len());
        let before = cand.uncovered;
        cand.flip(pos);
        let worse = cand.uncovered > before;
        // accept plateaus always, uphill moves rarely
        if worse && rng.gen_range(0..1000u32) >= 2 {
            cand.flip(pos);
        }
        if cand.uncovered < best {
            best = cand.uncovered;
            stale = 0;
        } else {
            stale += 1;
            if stale >= restart_after {
                let fresh = random_bits(rng, cand.len());
                *cand = Candidate::new(cand.n, fresh, cand.masks);
                best = cand.uncovered;
                stale = 0;
                *restarts += 1;
            }
        }
    }
    cand.uncovered == 0
}

/// Searches for a short `(n, R)`-covering sequence.
///
/// Deterministic for a given configuration. Falls back to the de Bruijn
/// sequence of span `n` when the budget is exhausted without success.
pub fn search_cs(cfg: &SearchConfig) -> Result<SearchOutcome> {
    let (n, radius) = (cfg.n, cfg.radius);
    if n == 0 || n > MAX_SEARCH_N {
        return Err(Error::Parameter(format!("search supports 1 <= n <= {MAX_SEARCH_N}, got {n}")));
    }
    if radius > n {
        return Err(Error::InvalidRadius { n, radius });
    }
    let bound = sphere_covering_bound(n, radius)? as usize;
    let full = 1usize << n;
    if let Some(t) = cfg.target_length {
        if t < bound || t == 0 {
            return Err(Error::Parameter(format!(
                "target length {t} is below the sphere-covering bound {bound}"
            )));
        }
    }
    let fallback = |moves, restarts| -> Result<SearchOutcome> {
        Ok(SearchOutcome { sequence: debruijn_binary(n)?, found: false, moves, restarts })
    };
    if radius == 0 {
        return fallback(0, 0);
    }

    let masks = ball_masks(n, radius);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
    let mut moves = 0u64;
    let mut restarts = 0u64;
    let start_len = cfg.target_length.unwrap_or_else(|| (2 * bound).min(full));
    let mut cand = Candidate::new(n, random_bits(&mut rng, start_len), &masks);
    let mut best: Option<Vec<u8>> = None;

    loop {
        if !climb(&mut cand, &mut rng, &mut moves, cfg.budget, cfg.restart_after, &mut restarts) {
            break;
        }
        let len = cand.len();
        best = Some(cand.bits.clone());
        if cfg.target_length.is_some() || len <= bound {
            break;
        }
        // shorten by deleting one bit and continue from the damaged candidate
        let mut bits = cand.bits.clone();
        bits.remove(rng.gen_range(0..len));
        cand = Candidate::new(n, bits, &masks);
    }

    match best {
        Some(bits) if bits.len() <= full => {
            let sequence = CyclicSequence::from_bits(&bits)?;
            let check = is_covering_sequence_with(&sequence, n, radius, &VerifyLimits::default().sequential())?;
            debug_assert!(check.is_covering());
            Ok(SearchOutcome { sequence, found: true, moves, restarts })
        }
        _ => fallback(moves, restarts),
    }
}
