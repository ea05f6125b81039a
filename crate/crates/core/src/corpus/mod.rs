//! Embedded published covering sequences, codes and arrays, with regression checks.

pub mod bounds;
mod data;

use rayon::prelude::*;

use crate::construct::{hamming_csc, length_profile};
use crate::error::{Error, Result};
use crate::merge::{assemble_chain, max_overlap};
use crate::seq::{parse_bits, CyclicSequence, SequenceCode, TorusArray};
use crate::text::{write_array, write_code, write_sequence, Header, Kind};
use crate::verify::{coverage_with, is_c2ds_with, is_covering_sequence_with, VerifyLimits};

pub use bounds::{lookup_bounds, table_bounds, BoundSource, BoundsEntry};

/// Search settings that reproduce the sequences found by local search.
pub const SEARCH_BUDGET: u64 = 5_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Sequence(CyclicSequence),
    Code(Vec<CyclicSequence>),
    Array(TorusArray),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Published(&'static str),
    /// Found by `search_cs` at the stored length with this seed and [`SEARCH_BUDGET`].
    Search { seed: u64 },
}

/// Acyclic strings with stated overlaps that assemble into a sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub rows: Vec<(Vec<u8>, usize)>,
    /// Stated `(total bits, total overlap)`.
    pub totals: Option<(usize, usize)>,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub id: String,
    pub kind: Kind,
    /// Window height, for arrays.
    pub m: Option<usize>,
    pub n: usize,
    pub radius: usize,
    /// Sequence length, number of codewords, or array area.
    pub claimed: usize,
    pub payload: Payload,
    pub chain: Option<Chain>,
    pub source: Source,
}

impl CorpusEntry {
    pub fn sequence(&self) -> Option<&CyclicSequence> {
        match &self.payload {
            Payload::Sequence(s) => Some(s),
            _ => None,
        }
    }

    pub fn header(&self) -> Header {
        match &self.payload {
            Payload::Sequence(s) => Header::cs(self.n, self.radius, s.len()),
            Payload::Code(c) => Header::csc(self.n, self.radius, c.len()),
            Payload::Array(a) => Header::c2ds(self.m.unwrap_or(1), self.n, self.radius, a.rows(), a.cols()),
        }
    }

    /// Text form with a header line.
    pub fn to_text(&self) -> String {
        let header = self.header();
        match &self.payload {
            Payload::Sequence(s) => write_sequence(&header, s),
            Payload::Code(c) => write_code(&header, &SequenceCode::new(self.n, self.radius, c.clone())),
            Payload::Array(a) => write_array(&header, a),
        }
    }
}

fn seq(s: &str) -> CyclicSequence {
    s.parse().expect("embedded sequence")
}

fn chain(rows: &[(&str, usize)], totals: Option<(usize, usize)>) -> Chain {
    Chain {
        rows: rows.iter().map(|(s, o)| (parse_bits(s, 0).expect("embedded row"), *o)).collect(),
        totals,
    }
}

fn cs_entry(n: usize, radius: usize, s: &str, source: Source) -> CorpusEntry {
    let sequence = seq(s);
    CorpusEntry {
        id: format!("cs-{n}-{radius}-{}", sequence.len()),
        kind: Kind::Cs,
        m: None,
        n,
        radius,
        claimed: sequence.len(),
        payload: Payload::Sequence(sequence),
        chain: None,
        source,
    }
}

fn csc_entry(id: String, n: usize, radius: usize, words: &[&str], source: Source) -> CorpusEntry {
    CorpusEntry {
        id,
        kind: Kind::Csc,
        m: None,
        n,
        radius,
        claimed: words.len(),
        payload: Payload::Code(words.iter().map(|w| seq(w)).collect()),
        chain: None,
        source,
    }
}

/// The (7,1) sequence of length 22 and the (10,2) sequence of length 38, found by local search.
const SEARCHED: &[(usize, usize, &str, u64)] = &[
    (7, 1, "0011110111011000010001", 0),
    (10, 2, "00111010010111111011100010110100000010", 0),
];

/// Every embedded entry, in a fixed order.
pub fn corpus_entries() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    let published = Source::Published("published sequence");
    for &(n, r, s) in data::SMALL_SEQUENCES {
        out.push(cs_entry(n, r, s, published));
    }
    out.push(cs_entry(6, 1, data::SHIFT_ARRAY_13X12[0], Source::Published("first row of the 13x12 array")));
    for &(n, r, s, seed) in SEARCHED {
        out.push(cs_entry(n, r, s, Source::Search { seed }));
    }

    let example = Source::Published("(9,10,1)-CSC and its merge");
    out.push(csc_entry("csc-9-1-8x10".into(), 9, 1, data::NINE_ONE_CODEWORDS, example));
    let mut e = cs_entry(9, 1, data::NINE_ONE_106, example);
    e.chain = Some(chain(data::NINE_ONE_CHAIN, Some((144, 38))));
    out.push(e);
    out.push(cs_entry(9, 1, data::NINE_ONE_93, example));
    out.push(cs_entry(9, 1, data::NINE_ONE_102, Source::Published("93-bit merge with a run of 8 ones")));

    for b in data::CHAIN_BLOCKS {
        let source = Source::Published("merged covering sequence code");
        if !b.codewords.is_empty() {
            let id = format!("csc-{}-{}-{}x{}", b.n, b.radius, b.codewords.len(), b.codeword_length);
            // two codes share (n, R) and shape; keep ids unique
            let id = if out.iter().any(|x: &CorpusEntry| x.id == id) { format!("{id}-b") } else { id };
            out.push(csc_entry(id, b.n, b.radius, b.codewords, source));
        }
        let mut e = cs_entry(b.n, b.radius, b.sequence, source);
        if !b.chain.is_empty() {
            e.chain = Some(chain(b.chain, b.totals));
        }
        out.push(e);
    }

    for (rows, totals, n, what) in [
        (data::HAMMING_CHAIN, (4064, 548), 15, "merged Hamming-derived code"),
        (data::SELF_DUAL_CHAIN, (5056, 594), 16, "merged self-dual code"),
    ] {
        let c = chain(rows, Some(totals));
        let s = assemble_chain(&c.rows).expect("embedded chain overlaps are genuine");
        let mut e = cs_entry(n, 1, &s.to_string(), Source::Published(what));
        e.chain = Some(c);
        out.push(e);
    }

    let rows: Vec<CyclicSequence> = data::SHIFT_ARRAY_13X12.iter().map(|r| seq(r)).collect();
    let array = TorusArray::from_rows(&rows).expect("rectangular");
    out.push(CorpusEntry {
        id: "c2ds-2x6-2-13x12".into(),
        kind: Kind::C2ds,
        m: Some(2),
        n: 6,
        radius: 2,
        claimed: 156,
        payload: Payload::Array(array),
        chain: None,
        source: Source::Published("row shifts of the (6,1)-CS of length 12"),
    });
    out
}

pub fn find_entry(id: &str) -> Option<CorpusEntry> {
    corpus_entries().into_iter().find(|e| e.id == id)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryResult {
    pub id: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct CorpusReport {
    pub results: Vec<EntryResult>,
}

impl CorpusReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &EntryResult> {
        self.results.iter().filter(|r| !r.passed)
    }
}

fn check_entry(e: &CorpusEntry, limits: &VerifyLimits) -> Result<Vec<String>> {
    let mut problems = Vec::new();
    let (size, rep) = match &e.payload {
        Payload::Sequence(s) => (s.len(), is_covering_sequence_with(s, e.n, e.radius, limits)?),
        Payload::Code(c) => (c.len(), coverage_with(&SequenceCode::new(e.n, e.radius, c.clone()), limits)?),
        Payload::Array(a) => (a.area(), is_c2ds_with(a, e.m.unwrap_or(1), e.n, e.radius, limits)?),
    };
    if size != e.claimed {
        problems.push(format!("size {size} differs from claimed {}", e.claimed));
    }
    if !rep.is_covering() {
        let first = rep.uncovered.first().map(|w| w.to_string()).unwrap_or_default();
        problems.push(format!("{} words uncovered, e.g. {first}", rep.uncovered_total));
    }
    if let Some(c) = &e.chain {
        match assemble_chain(&c.rows) {
            Ok(s) if Some(&s) != e.sequence() => problems.push("chain does not assemble to the sequence".into()),
            Ok(_) => {}
            Err(err) => problems.push(err.to_string()),
        }
        let bits: usize = c.rows.iter().map(|(r, _)| r.len()).sum();
        let overlap: usize = c.rows.iter().map(|(_, o)| o).sum();
        if let Some((tb, to)) = c.totals {
            if (bits, overlap) != (tb, to) || tb - to != e.claimed {
                problems.push(format!("totals {bits}-{overlap} differ from stated {tb}-{to}"));
            }
        }
        for (i, (r, o)) in c.rows.iter().enumerate() {
            let next = &c.rows[(i + 1) % c.rows.len()].0;
            if max_overlap(r, next, usize::MAX) < *o {
                problems.push(format!("row {i} overlap {o} exceeds the maximum"));
            }
        }
    }
    Ok(problems)
}

/// Every (n+1, R) sequence must also cover at (n, R).
fn check_downgrade(entries: &[CorpusEntry], limits: &VerifyLimits) -> Result<Vec<String>> {
    let mut problems = Vec::new();
    for e in entries {
        if let (Some(s), true) = (e.sequence(), e.n > e.radius + 1) {
            if !is_covering_sequence_with(s, e.n - 1, e.radius, limits)?.is_covering() {
                problems.push(format!("{} fails at ({},{})", e.id, e.n - 1, e.radius));
            }
        }
    }
    Ok(problems)
}

/// The shortest entry per `(n, R)` must not beat a lower bound nor exceed the best upper bound.
fn check_table(entries: &[CorpusEntry]) -> Vec<String> {
    let mut best: std::collections::BTreeMap<(usize, usize), (usize, &str)> = Default::default();
    for e in entries {
        if let Some(s) = e.sequence() {
            let slot = best.entry((e.n, e.radius)).or_insert((s.len(), &e.id));
            if s.len() < slot.0 {
                *slot = (s.len(), &e.id);
            }
        }
    }
    best.iter()
        .filter_map(|(&(n, r), &(len, id))| {
            let b = lookup_bounds(n, r)?;
            (len as u64 > b.upper || (len as u64) < b.lower).then(|| format!("{id} outside table range {b}"))
        })
        .collect()
}

fn check_hamming_profile() -> Result<Vec<String>> {
    let profile = length_profile(&hamming_csc(4)?);
    let want = vec![(15, 134), (5, 6), (3, 2), (1, 2)];
    Ok(if profile == want { vec![] } else { vec![format!("class profile {profile:?}")] })
}

fn result(id: impl Into<String>, problems: Result<Vec<String>>) -> EntryResult {
    let id = id.into();
    match problems {
        Ok(p) if p.is_empty() => EntryResult { id, passed: true, detail: "ok".into() },
        Ok(p) => EntryResult { id, passed: false, detail: p.join("; ") },
        Err(err) => EntryResult { id, passed: false, detail: err.to_string() },
    }
}

/// Verifies every entry at its claimed parameters, plus the cross-entry checks.
pub fn verify_corpus() -> Result<CorpusReport> {
    verify_corpus_with(None, &VerifyLimits::from_env()?)
}

/// Verifies one entry (by id) or the whole corpus.
pub fn verify_corpus_with(id: Option<&str>, limits: &VerifyLimits) -> Result<CorpusReport> {
    let entries = corpus_entries();
    let selected: Vec<&CorpusEntry> = entries.iter().filter(|e| id.is_none_or(|i| e.id == i)).collect();
    if let Some(i) = id {
        if selected.is_empty() && !matches!(i, "downgrade" | "table" | "hamming-profile") {
            return Err(Error::Parameter(format!("no corpus entry {i:?}")));
        }
    }
    let mut results: Vec<EntryResult> =
        selected.par_iter().map(|e| result(e.id.clone(), check_entry(e, limits))).collect();
    let extra = |name: &str| id.is_none_or(|i| i == name);
    if extra("downgrade") {
        results.push(result("downgrade", check_downgrade(&entries, limits)));
    }
    if extra("table") {
        results.push(result("table", Ok(check_table(&entries))));
    }
    if extra("hamming-profile") {
        results.push(result("hamming-profile", check_hamming_profile()));
    }
    Ok(CorpusReport { results })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn ids_are_unique() {
        let entries = corpus_entries();
        let ids: HashSet<&str> = entries.iter().map(|e| e.id.as_str()).collect();
        assert_eq!(ids.len(), entries.len());
    }

    #[test]
    fn stated_totals() {
        let d = find_entry("cs-16-1-4462").unwrap();
        assert_eq!(d.chain.as_ref().unwrap().totals, Some((5056, 594)));
        assert_eq!(d.chain.as_ref().unwrap().rows.len(), 64);
        let c = find_entry("cs-15-1-3516").unwrap();
        assert_eq!(c.chain.as_ref().unwrap().rows.len(), 144);
    }

    #[test]
    fn export_round_trip() {
        let e = find_entry("cs-8-2-14").unwrap();
        assert_eq!(e.to_text(), "# kind=cs n=8 r=2 len=14\n00111011010010\n");
    }

    #[test]
    fn everything_verifies() {
        let report = verify_corpus_with(None, &VerifyLimits::default()).unwrap();
        let failures: Vec<_> = report.failures().collect();
        assert!(failures.is_empty(), "{failures:#?}");
        assert_eq!(report.results.len(), corpus_entries().len() + 3);
    }

    #[test]
    fn unknown_id() {
        assert!(verify_corpus_with(Some("nope"), &VerifyLimits::default()).is_err());
    }
}
