//! End-to-end acceptance criteria. Each test prints one PASS/FAIL line.

use std::collections::HashSet;
use std::time::Instant;

use covseq_core::construct::{
    debruijn, debruijn_binary, find_sparse_primitive, hamming_csc, interleave, length_profile, primitive_cs,
    primitive_parts, selfdual::combine_all, selfdual_base, selfdual_step, square_interleave,
    square_interleave_verified,
};
use covseq_core::corpus::{find_entry, verify_corpus_with, Payload};
use covseq_core::twod::{debruijn_shift_array, fold_with, triangular_shift_array};
use covseq_core::verify::{coverage, is_c2ds, is_covering_sequence, VerifyLimits};
use covseq_core::{greedy_merge, CyclicSequence, SequenceCode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(name: &str, start: Instant, outcome: Result<String, String>) {
    let secs = start.elapsed().as_secs_f64();
    match outcome {
        Ok(detail) => println!("PASS {name}: {detail} ({secs:.2}s)"),
        Err(why) => {
            println!("FAIL {name}: {why} ({secs:.2}s)");
            panic!("{name} failed: {why}");
        }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn entry_seq(id: &str) -> CyclicSequence {
    find_entry(id).and_then(|e| e.sequence().cloned()).unwrap_or_else(|| panic!("corpus entry {id}"))
}

fn covers(s: &CyclicSequence, n: usize, r: usize) -> bool {
    is_covering_sequence(s, n, r).unwrap().is_covering()
}

#[test]
fn criterion_1_corpus_regression() {
    let start = Instant::now();
    let outcome = (|| {
        let rep = verify_corpus_with(None, &VerifyLimits::default()).map_err(|e| e.to_string())?;
        let failed: Vec<String> = rep.failures().map(|f| format!("{}: {}", f.id, f.detail)).collect();
        ensure(failed.is_empty(), || failed.join("; "))?;
        for (id, n, len) in [("cs-16-1-4462", 16, 4462), ("cs-15-1-3516", 15, 3516)] {
            let s = entry_seq(id);
            ensure(s.len() == len && covers(&s, n, 1), || format!("{id} mismatch"))?;
        }
        let small = ["cs-8-1-32", "cs-8-1-35", "cs-8-1-37", "cs-8-1-40", "cs-8-2-14", "cs-9-2-20"];
        let merged = [
            "cs-10-1-175", "cs-10-1-177", "cs-11-1-283", "cs-12-1-597", "cs-13-1-1172", "cs-14-1-2271",
            "cs-11-2-111", "cs-12-2-161", "cs-13-2-292", "cs-14-2-525", "cs-15-2-907", "cs-13-3-93",
            "cs-14-3-239", "cs-15-3-406",
        ];
        for id in small.iter().chain(&merged) {
            ensure(rep.results.iter().any(|r| r.id == *id && r.passed), || format!("{id} missing"))?;
        }
        Ok(format!("{} checks passed", rep.results.len()))
    })();
    report("criterion 1 corpus regression", start, outcome);
}

#[test]
fn criterion_2_self_dual_pipeline() {
    let start = Instant::now();
    let outcome = (|| {
        let c16 = selfdual_step(&selfdual_base()).map_err(|e| e.to_string())?;
        ensure(c16.codewords.len() == 128 && c16.codewords.iter().all(|c| c.len() == 32), || {
            "step does not give 128 codewords of length 32".into()
        })?;
        let combined = combine_all(&c16).map_err(|e| e.to_string())?;
        ensure(combined.len() == 64 && combined.iter().all(|c| c.len() == 64), || "64 x 64 expected".into())?;
        let windows: HashSet<u32> = combined.iter().flat_map(|c| c.window_values(16).unwrap()).collect();
        ensure(windows.len() == 4096, || format!("{} distinct 16-windows", windows.len()))?;
        let code = SequenceCode::new(16, 1, combined);
        ensure(coverage(&code).unwrap().is_covering(), || "combined code does not cover".into())?;
        let merged = greedy_merge(&code).map_err(|e| e.to_string())?;
        let len = merged.sequence.len();
        ensure(covers(&merged.sequence, 16, 1), || "merged sequence does not cover".into())?;
        ensure(len <= 5056, || format!("merged length {len} > 5056"))?;
        ensure((5056.0 / 4096.0) < 1.25 && (len as f64 / 4096.0) < 1.25, || "1.25 factor".into())?;
        Ok(format!("(16,1)-CS of length {len}, ratio {:.4}", len as f64 / 4096.0))
    })();
    report("criterion 2 self-dual pipeline", start, outcome);
}

#[test]
fn criterion_3_hamming_pipeline() {
    let start = Instant::now();
    let outcome = (|| {
        let code = hamming_csc(4).map_err(|e| e.to_string())?;
        let profile = length_profile(&code);
        ensure(profile == vec![(15, 134), (5, 6), (3, 2), (1, 2)], || format!("profile {profile:?}"))?;
        let windows: HashSet<u32> = code.codewords.iter().flat_map(|c| c.window_values(15).unwrap()).collect();
        ensure(windows.len() == 2048, || format!("{} window codewords", windows.len()))?;
        let merged = greedy_merge(&code).map_err(|e| e.to_string())?;
        let len = merged.sequence.len();
        ensure(covers(&merged.sequence, 15, 1), || "merged sequence does not cover".into())?;
        ensure(len < 4096, || format!("merged length {len} >= 4096"))?;
        Ok(format!("(15,1)-CS of length {len}"))
    })();
    report("criterion 3 Hamming pipeline", start, outcome);
}

#[test]
fn criterion_4_interleaving() {
    let start = Instant::now();
    let outcome = (|| {
        let db9 = debruijn_binary(9).unwrap();
        let db10 = debruijn_binary(10).unwrap();
        let s = entry_seq;
        // (a, n1, r1, b, n2, r2, expected length)
        let recipes = [
            (s("cs-8-1-37"), 8, 1, s("cs-8-2-14"), 8, 2, 1036),
            (s("cs-9-2-20"), 9, 2, s("cs-8-1-37"), 8, 1, 1480),
            (s("cs-9-1-93"), 9, 1, s("cs-9-2-20"), 9, 2, 3720),
            (s("cs-9-1-93"), 9, 1, s("cs-8-1-32"), 8, 1, 5952),
            (db9, 9, 0, s("cs-9-1-93"), 9, 1, 95232),
            (s("cs-10-2-38"), 10, 2, s("cs-9-1-93"), 9, 1, 7068),
            (s("cs-10-1-175"), 10, 1, s("cs-10-2-38"), 10, 2, 13300),
            (db10, 10, 0, s("cs-10-1-175"), 10, 1, 358400),
        ];
        let mut done = Vec::new();
        for (a, n1, r1, b, n2, r2, want) in recipes {
            let out = interleave(&a, &b, n1, n2, r1, r2).map_err(|e| e.to_string())?;
            let (n, r) = (n1 + n2, r1 + r2);
            ensure(out.len() == want, || format!("({n},{r}) length {} != {want}", out.len()))?;
            ensure(covers(&out, n, r), || format!("({n},{r}) of length {want} does not cover"))?;
            done.push(format!("({n},{r})={want}"));
        }
        Ok(done.join(" "))
    })();
    report("criterion 4 interleaving", start, outcome);
}

#[test]
fn criterion_5_square_interleave() {
    let start = Instant::now();
    let outcome = (|| {
        let mut done = Vec::new();
        for (id, n, fill, want) in [("cs-8-1-40", 8, 0, 1640), ("cs-9-1-102", 9, 1, 10506), ("cs-10-1-177", 10, 0, 31684)] {
            let a = entry_seq(id);
            let k = a.len();
            let formula = if k % 2 == 0 { k * (k + 1) } else { (k + 1) * (k + 1) };
            let literal = square_interleave(&a, n, fill).map_err(|e| e.to_string())?;
            ensure(literal.len() == want && formula == want, || format!("{id}: length {}", literal.len()))?;
            let (out, orientation) =
                square_interleave_verified(&a, n, 1, fill, &VerifyLimits::default()).map_err(|e| e.to_string())?;
            ensure(out.len() == want, || format!("{id}: verified length {}", out.len()))?;
            ensure(covers(&out, 2 * n, 2), || format!("({},2) from {id} does not cover", 2 * n))?;
            done.push(format!("({},2)={want} {orientation:?}", 2 * n));
        }
        Ok(done.join(" "))
    })();
    report("criterion 5 square interleave", start, outcome);
}

#[test]
fn criterion_6_primitive_polynomial() {
    let start = Instant::now();
    let outcome = (|| {
        let p = find_sparse_primitive(7, 1).unwrap().ok_or("no sparse primitive of degree 7")?;
        let s = primitive_cs(7, 1, p).map_err(|e| e.to_string())?;
        let want = (1 << 8) + 2 * 7 + 8 + 2;
        ensure(s.len() == want && want == 280, || format!("length {}", s.len()))?;
        ensure(covers(&s, 10, 1), || "(10,1) sequence does not cover".into())?;
        let mut accepted = 0;
        for n in 2..=16 {
            for r in 0..=3 {
                if let Some(q) = find_sparse_primitive(n, r).unwrap() {
                    accepted += 1;
                    ensure(q.feedback_weight() % 2 == 0, || format!("{q} has odd coefficient sum"))?;
                    let parts = primitive_parts(q).unwrap();
                    ensure(parts.b == parts.a.complement(), || format!("{q}: B is not the complement of A"))?;
                }
            }
        }
        Ok(format!("{p} gives a (10,1)-CS of length 280; {accepted} polynomials checked"))
    })();
    report("criterion 6 primitive polynomial", start, outcome);
}

#[test]
fn criterion_7_two_dimensional() {
    let start = Instant::now();
    let outcome = (|| {
        let seed = entry_seq("cs-6-1-12");
        let tri = triangular_shift_array(&seed, 6, 1).map_err(|e| e.to_string())?;
        let Some(Payload::Array(published)) = find_entry("c2ds-2x6-2-13x12").map(|e| e.payload) else {
            return Err("published array missing".into());
        };
        ensure(tri == published, || "13x12 array differs from the published one".into())?;
        ensure(is_c2ds(&tri, 2, 6, 2).unwrap().is_covering(), || "13x12 array does not cover".into())?;

        let d = entry_seq("cs-16-1-4462");
        let folded = fold_with(&d, 4, 4, 1, &VerifyLimits::default()).map_err(|e| e.to_string())?;
        let dims = (folded.array.rows(), folded.array.cols());
        ensure(dims == (1116, 7), || format!("fold gives {dims:?}"))?;
        ensure(is_c2ds(&folded.array, 4, 4, 1).unwrap().is_covering(), || "fold does not cover".into())?;

        let db = debruijn_shift_array(&seed, 6, 1, 3).map_err(|e| e.to_string())?;
        ensure((db.rows(), db.cols()) == (144, 12), || "de Bruijn shift array shape".into())?;
        ensure(is_c2ds(&db, 3, 6, 3).unwrap().is_covering(), || "144x12 array does not cover".into())?;
        Ok("13x12 (2x6,2), 1116x7 (4x4,1), 144x12 (3x6,3)".into())
    })();
    report("criterion 7 two-dimensional", start, outcome);
}

// Naive oracle: every word is compared against every window.
fn naive_covers(s: &CyclicSequence, n: usize, r: usize) -> bool {
    let windows: Vec<u32> = s.window_values(n).unwrap().collect();
    (0..1u32 << n).all(|w| windows.iter().any(|&x| (x ^ w).count_ones() as usize <= r))
}

fn random_seq(rng: &mut ChaCha8Rng, len: usize) -> CyclicSequence {
    let bits: Vec<u8> = (0..len).map(|_| rng.gen_range(0..2)).collect();
    CyclicSequence::from_bits(&bits).unwrap()
}

#[test]
fn criterion_8_property_suites() {
    let start = Instant::now();
    let outcome = (|| {
        let rep = verify_corpus_with(Some("downgrade"), &VerifyLimits::default()).map_err(|e| e.to_string())?;
        ensure(rep.all_passed(), || format!("{:?}", rep.results))?;

        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for _ in 0..1000 {
            let n = rng.gen_range(3..=10);
            let r = rng.gen_range(0..=2);
            let len = rng.gen_range(1..=3 * (1 << n) / (1 + n * r).max(1));
            let s = random_seq(&mut rng, len);
            ensure(covers(&s, n, r) == naive_covers(&s, n, r), || format!("oracle mismatch on {s} ({n},{r})"))?;
        }

        for _ in 0..100 {
            let n = rng.gen_range(3..=8);
            let count = rng.gen_range(1..=6);
            let words: Vec<CyclicSequence> =
                (0..count).map(|_| { let l = rng.gen_range(1..=24); random_seq(&mut rng, l) }).collect();
            let code = SequenceCode::new(n, 0, words);
            let r = (0..=n).find(|&r| coverage(&SequenceCode { radius: r, ..code.clone() }).unwrap().is_covering()).unwrap();
            let merged = greedy_merge(&code).map_err(|e| e.to_string())?;
            let have: HashSet<u32> = merged.sequence.window_values(n).unwrap().collect();
            let lost = code.codewords.iter().flat_map(|c| c.window_values(n).unwrap()).any(|w| !have.contains(&w));
            ensure(!lost, || format!("merge lost a window at n={n}"))?;
            ensure(covers(&merged.sequence, n, r), || "merged sequence does not cover".into())?;
            ensure(merged.sequence.len() <= merged.zero_overlap_baseline, || "zero-overlap bound".into())?;
        }

        let mut cases = 0;
        for q in 2usize..=16 {
            let mut span = 1;
            while (q as u64).pow(span as u32) <= 1 << 20 {
                let d = debruijn(q, span).unwrap();
                let total = d.len();
                let mut seen = vec![false; total];
                for i in 0..total {
                    let idx = (0..span).fold(0usize, |acc, j| acc * q + d[(i + j) % total]);
                    ensure(!seen[idx], || format!("repeated window in debruijn({q},{span})"))?;
                    seen[idx] = true;
                }
                cases += 1;
                span += 1;
            }
        }
        Ok(format!("downgrade, 1000 oracle runs, 100 merges, {cases} de Bruijn cases"))
    })();
    report("criterion 8 property suites", start, outcome);
}
