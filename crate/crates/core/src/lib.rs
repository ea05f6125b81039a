//! Binary covering sequences, covering sequence codes and covering 2D-sequences.
//!
//! A cyclic binary sequence is an `(n, R)`-covering sequence when every binary
//! word of length `n` lies within Hamming distance `R` of one of its cyclic
//! `n`-windows. This crate builds such sequences with a number of algebraic and
//! combinatorial constructions and checks them exhaustively.

pub mod construct;
pub mod corpus;
pub mod error;
pub mod merge;
pub mod search;
pub mod seq;
pub mod text;
pub mod twod;
pub mod verify;

pub use error::{Error, Result};
pub use merge::{greedy_merge, MergeOutcome, OverlapGraph};
pub use seq::{ball_volume, hamming_distance, BinaryWord, CyclicSequence, SequenceCode, TorusArray};
pub use verify::{
    coverage, covering_radius, is_c2ds, is_covering_sequence, sphere_covering_bound, CoverageReport,
    VerifyLimits,
};
