//! One-dimensional constructions.

pub mod debruijn;
pub mod gf2;
pub mod hamming;
pub mod interleave;
pub mod primitive;
pub mod selfdual;

pub use debruijn::{debruijn, debruijn_binary};
pub use gf2::{find_sparse_primitive, is_primitive, least_primitive, m_sequence, Gf2Poly, LfsrStream};
pub use hamming::{hamming_csc, length_profile};
pub use interleave::{interleave, square_interleave, square_interleave_verified, Orientation};
pub use primitive::{primitive_cs, primitive_cs_length, primitive_parts};
pub use selfdual::{combine_pair, selfdual_base, selfdual_step, SelfDualCode};
