use std::collections::{BTreeSet, HashSet};

use proptest::prelude::*;

use covseq_core::construct::{
    debruijn_binary, find_sparse_primitive, interleave, primitive_cs, primitive_cs_length, square_interleave,
};
use covseq_core::construct::interleave::square_interleave_length;
use covseq_core::merge::acyclic_extension;
use covseq_core::twod::{debruijn_shift_array, fold_with, triangular_shift_array};
use covseq_core::verify::{covering_radius, is_c2ds, is_covering_sequence_with, VerifyLimits};
use covseq_core::{ball_volume, coverage, is_covering_sequence, sphere_covering_bound, CyclicSequence, SequenceCode};

fn bits(max_len: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..2, 1..=max_len)
}

fn seq(b: &[u8]) -> CyclicSequence {
    CyclicSequence::from_bits(b).unwrap()
}

fn covers(s: &CyclicSequence, n: usize, r: usize) -> bool {
    is_covering_sequence(s, n, r).unwrap().is_covering()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rotation_keeps_verdict(b in bits(80), n in 2usize..=9, r in 0usize..=2, j in 0usize..200) {
        let s = seq(&b);
        prop_assert_eq!(covers(&s, n, r), covers(&s.rotate(j), n, r));
        prop_assert_eq!(covers(&s, n, r), covers(&s.complement(), n, r));
    }

    #[test]
    fn windows_rotate_cyclically(b in bits(60), n in 1usize..=12, j in 0usize..100) {
        let s = seq(&b);
        let w: Vec<u32> = s.window_values(n).unwrap().collect();
        let t: Vec<u32> = s.rotate(j).window_values(n).unwrap().collect();
        let k = w.len();
        prop_assert_eq!(t, (0..k).map(|i| w[(i + j) % k]).collect::<Vec<_>>());
    }

    #[test]
    fn radius_monotone(b in bits(120), n in 2usize..=10, r in 0usize..=3) {
        prop_assume!(r < n);
        let s = seq(&b);
        if covers(&s, n, r) {
            prop_assert!(covers(&s, n, r + 1));
        }
    }

    #[test]
    fn covering_radius_is_least(b in bits(150), n in 1usize..=12) {
        let s = seq(&b);
        let linear = (0..=n).find(|&r| covers(&s, n, r)).unwrap();
        prop_assert_eq!(covering_radius(&s, n).unwrap(), linear);
    }

    #[test]
    fn parallel_matches_sequential(b in bits(400), n in 8usize..=14, r in 0usize..=2) {
        let s = seq(&b);
        let par = is_covering_sequence_with(&s, n, r, &VerifyLimits::default()).unwrap();
        let one = is_covering_sequence_with(&s, n, r, &VerifyLimits::default().sequential()).unwrap();
        prop_assert_eq!(par, one);
    }

    #[test]
    fn short_sequences_never_cover(n in 3usize..=12, r in 0usize..=2, seed in any::<u64>()) {
        let bound = sphere_covering_bound(n, r).unwrap() as usize;
        prop_assume!(bound > 1);
        let len = 1 + seed as usize % (bound - 1);
        let b: Vec<u8> = (0..len).map(|i| ((seed >> (i % 64)) & 1) as u8).collect();
        prop_assert!(!covers(&seq(&b), n, r));
    }

    #[test]
    fn acyclic_extension_keeps_windows(b in bits(40), n in 1usize..=10) {
        let s = seq(&b);
        let ext = acyclic_extension(&s, n, 0);
        prop_assert_eq!(ext.len(), s.len() + n - 1);
        let linear: BTreeSet<Vec<u8>> = ext.windows(n).map(<[u8]>::to_vec).collect();
        let cyclic: BTreeSet<Vec<u8>> = s.windows(n).unwrap().iter()
            .map(|w| (0..n).map(|i| w.bit(i)).collect()).collect();
        prop_assert_eq!(linear, cyclic);
    }

    #[test]
    fn period_and_canonical_rotation(b in bits(48), j in 0usize..64) {
        let s = seq(&b);
        let p = s.minimal_period();
        prop_assert_eq!(s.len() % p, 0);
        prop_assert_eq!(s.rotate(p), s.clone());
        prop_assert_eq!(s.rotate(j).canonical_rotation(), s.canonical_rotation());
        prop_assert_eq!(s.primitive_root().len(), p);
        prop_assert_eq!(s.complement().complement(), s.clone());
    }

    #[test]
    fn interleave_covers(a in bits(40), b in bits(40), n2 in 2usize..=5, wider in any::<bool>()) {
        let n1 = n2 + wider as usize;
        let (sa, sb) = (seq(&a), seq(&b));
        prop_assume!(gcd(sa.len(), sb.len()) == 1);
        let (r1, r2) = (covering_radius(&sa, n1).unwrap(), covering_radius(&sb, n2).unwrap());
        let s = interleave(&sa, &sb, n1, n2, r1, r2).unwrap();
        prop_assert_eq!(s.len(), 2 * sa.len() * sb.len());
        prop_assert!(covers(&s, n1 + n2, r1 + r2));
    }

    #[test]
    fn square_length_and_odd_coverage(body in bits(50), n in 2usize..=6, fill in 0u8..2) {
        let mut b = vec![fill; n - 1];
        b.extend(body);
        let a = seq(&b);
        let r = covering_radius(&a, n).unwrap();
        let s = square_interleave(&a, n, fill).unwrap();
        prop_assert_eq!(s.len(), square_interleave_length(a.len()));
        if a.len() % 2 == 1 {
            prop_assert!(covers(&s, 2 * n, 2 * r));
        }
    }

    #[test]
    fn fold_covers(b in bits(120), m in 1usize..=3, n in 2usize..=4) {
        let s = seq(&b);
        let r = covering_radius(&s, m * n).unwrap();
        let out = fold_with(&s, m, n, r, &VerifyLimits::default()).unwrap();
        prop_assert_eq!(out.array.cols(), 2 * n - 1);
        prop_assert!(out.padded_length >= s.len());
        prop_assert!(is_c2ds(&out.array, m, n, r).unwrap().is_covering());
    }

    #[test]
    fn triangular_shift_covers(b in bits(30), n in 2usize..=6) {
        let s = seq(&b);
        let r = covering_radius(&s, n).unwrap();
        let a = triangular_shift_array(&s, n, r).unwrap();
        let k = s.len();
        prop_assert_eq!(a.rows(), if k % 2 == 0 { k + 1 } else { k });
        prop_assert!(is_c2ds(&a, 2, n, 2 * r).unwrap().is_covering());
    }

    #[test]
    fn merge_keeps_windows(words in prop::collection::vec(bits(20), 1..6), n in 2usize..=8) {
        let code = SequenceCode::new(n, 0, words.iter().map(|w| seq(w)).collect());
        let merged = covseq_core::greedy_merge(&code).unwrap();
        let have: HashSet<u32> = merged.sequence.window_values(n).unwrap().collect();
        for c in &code.codewords {
            for w in c.window_values(n).unwrap() {
                prop_assert!(have.contains(&w));
            }
        }
        prop_assert!(merged.sequence.len() <= merged.zero_overlap_baseline);
    }
}

#[test]
fn ball_volume_matches_enumeration() {
    for n in 0..=12usize {
        for r in 0..=n {
            let counted = (0u32..1 << n).filter(|w| w.count_ones() as usize <= r).count() as u128;
            assert_eq!(ball_volume(2, n, r).unwrap(), counted, "V({n},{r})");
        }
    }
    assert_eq!(ball_volume(3, 2, 1).unwrap(), 5);
}

#[test]
fn sphere_bound_examples() {
    assert_eq!(sphere_covering_bound(8, 1).unwrap(), 29);
    assert_eq!(sphere_covering_bound(16, 1).unwrap(), 3856);
    assert_eq!(sphere_covering_bound(9, 1).unwrap(), 52);
    assert_eq!(sphere_covering_bound(7, 7).unwrap(), 1);
}

#[test]
fn primitive_sequences_cover_up_to_width_twenty() {
    let mut checked = 0;
    for n in 3..=16usize {
        for r in 0..=3usize {
            let width = n + 2 * r + 1;
            if width > 20 {
                continue;
            }
            let Some(p) = find_sparse_primitive(n, r).unwrap() else { continue };
            let s = primitive_cs(n, r, p).unwrap();
            assert_eq!(s.len(), primitive_cs_length(n, r));
            assert!(covers(&s, width, r), "({width},{r}) from {p}");
            checked += 1;
        }
    }
    assert!(checked >= 15, "only {checked} instances");
}

#[test]
fn debruijn_shift_arrays_cover() {
    let s: CyclicSequence = "000100111011".parse().unwrap();
    let a = debruijn_shift_array(&s, 6, 1, 3).unwrap();
    assert!(is_c2ds(&a, 3, 6, 3).unwrap().is_covering());
    // odd seed length, m = 2
    let t: CyclicSequence = "0001011".parse().unwrap();
    let a = debruijn_shift_array(&t, 3, 1, 2).unwrap();
    assert_eq!((a.rows(), a.cols()), (7, 7));
    assert!(is_c2ds(&a, 2, 3, 2).unwrap().is_covering());
}

#[test]
fn de_bruijn_sequences_are_exact() {
    for n in 1..=16 {
        let d = debruijn_binary(n).unwrap();
        assert_eq!(d.len(), 1 << n);
        assert_eq!(covering_radius(&d, n).unwrap(), 0);
        assert_eq!(d.window_values(n).unwrap().collect::<HashSet<_>>().len(), 1 << n);
    }
}

#[test]
fn code_coverage_is_union_of_windows() {
    let words: Vec<CyclicSequence> = ["1000010000", "0001001101", "1001111001", "1111010111", "1010101010",
        "0101011000", "0110111001", "0111010000"].iter().map(|s| s.parse().unwrap()).collect();
    assert!(coverage(&SequenceCode::new(9, 1, words.clone())).unwrap().is_covering());
    assert!(!coverage(&SequenceCode::new(9, 1, words[1..].to_vec())).unwrap().is_covering());
}
