//! Merging a covering sequence code into a single covering sequence.
//!
//! Each cyclic codeword is opened into an acyclic string by appending its first
//! `n - 1` symbols, the strings are chained so that the suffix of one lines up
//! with the prefix of the next, and the chain is closed into a cycle. Every
//! `n`-window of every codeword survives as a substring of the result.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::seq::{failure_function, CyclicSequence, SequenceCode};

/// Replaces every codeword by its minimal-period representative.
pub fn reduce_periodic(code: &SequenceCode) -> SequenceCode {
    SequenceCode {
        n: code.n,
        radius: code.radius,
        codewords: code.codewords.iter().map(CyclicSequence::primitive_root).collect(),
    }
}

/// `s` followed by its own first `n - 1 + eps` symbols, read cyclically.
///
/// With `eps = 0` the length-`n` substrings of the result are exactly the
/// cyclic `n`-windows of `s`.
pub fn acyclic_extension(s: &CyclicSequence, n: usize, eps: usize) -> Vec<u8> {
    s.linear_extension((n + eps).saturating_sub(1))
}

/// Largest `t <= cap` with `suffix_t(a) == prefix_t(b)`.
///
/// `cap` is clamped below `min(|a|, |b|)`.
pub fn max_overlap(a: &[u8], b: &[u8], cap: usize) -> usize {
    let limit = a.len().min(b.len());
    if limit == 0 {
        return 0;
    }
    let cap = cap.min(limit - 1);
    let fail = failure_function(b);
    let mut k = 0usize;
    for &c in a {
        if k == b.len() {
            k = fail[k];
        }
        while k > 0 && b[k] != c {
            k = fail[k];
        }
        if b[k] == c {
            k += 1;
        }
    }
    while k > cap {
        k = fail[k];
    }
    k
}

/// Complete directed overlap graph over acyclic node strings.
#[derive(Clone, Debug)]
pub struct OverlapGraph {
    nodes: Vec<Vec<u8>>,
    overlaps: Vec<u32>,
}

impl OverlapGraph {
    /// Computes `max_overlap` for every ordered pair of distinct nodes in parallel.
    pub fn new(nodes: Vec<Vec<u8>>) -> Self {
        let count = nodes.len();
        let overlaps = (0..count * count)
            .into_par_iter()
            .map(|idx| {
                let (i, j) = (idx / count, idx % count);
                if i == j {
                    0
                } else {
                    max_overlap(&nodes[i], &nodes[j], usize::MAX) as u32
                }
            })
            .collect();
        Self { nodes, overlaps }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, i: usize) -> &[u8] {
        &self.nodes[i]
    }

    /// Overlap of the arc `i -> j` (0 on the diagonal).
    pub fn overlap(&self, i: usize, j: usize) -> usize {
        self.overlaps[i * self.nodes.len() + j] as usize
    }
}

/// One codeword in the merged cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MergeStep {
    /// Index into the periodicity-reduced code.
    pub codeword: usize,
    /// Left rotation applied before opening the codeword.
    pub rotation: usize,
    /// Overlap with the following step (the last one wraps to the first).
    pub overlap: usize,
}

#[derive(Clone, Debug)]
pub struct MergeOutcome {
    pub sequence: CyclicSequence,
    pub order: Vec<MergeStep>,
    /// Total length of the opened strings, i.e. the zero-overlap length after reduction.
    pub total_bits: usize,
    pub total_overlap: usize,
    /// `sum(k_i + n - 1)` over the codewords as given, before periodicity reduction.
    pub zero_overlap_baseline: usize,
}

struct Node {
    codeword: usize,
    rotation: usize,
    bits: Vec<u8>,
}

struct Chains {
    parent: Vec<usize>,
}

impl Chains {
    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }
}

/// Greedy cyclic-superstring assembly of a covering sequence code.
///
/// Codewords are reduced to their minimal period and every rotation of every
/// codeword is a candidate node. Joins are taken in order of decreasing overlap,
/// ties broken by the lexicographically least joined string, and each codeword
/// is used with exactly one rotation. The final chain is closed with its
/// wraparound overlap.
pub fn greedy_merge(code: &SequenceCode) -> Result<MergeOutcome> {
    if code.codewords.is_empty() {
        return Err(Error::EmptyInput("sequence code"));
    }
    if code.n == 0 {
        return Err(Error::Parameter("window width must be positive".into()));
    }
    let zero_overlap_baseline = code.codewords.iter().map(|c| c.len() + code.n - 1).sum();
    let reduced = reduce_periodic(code);
    let cws = &reduced.codewords;
    let k = cws.len();

    let nodes: Vec<Node> = cws
        .iter()
        .enumerate()
        .flat_map(|(ci, c)| {
            (0..c.len()).map(move |r| Node {
                codeword: ci,
                rotation: r,
                bits: acyclic_extension(&c.rotate(r), code.n, 0),
            })
        })
        .collect();

    let mut succ: Vec<Option<(usize, usize)>> = vec![None; k];
    let mut has_pred = vec![false; k];
    let mut fixed: Vec<Option<usize>> = vec![None; k];
    let mut chains = Chains { parent: (0..k).collect() };
    let mut remaining = k;

    let max_len = nodes.iter().map(|n| n.bits.len()).max().unwrap_or(0);
    for t in (0..max_len).rev() {
        if remaining == 1 {
            break;
        }
        let rotation_ok = |fixed: &[Option<usize>], node: &Node| {
            fixed[node.codeword].is_none_or(|r| r == node.rotation)
        };

        let mut groups: HashMap<&[u8], Vec<usize>> = HashMap::new();
        for (i, node) in nodes.iter().enumerate() {
            if node.bits.len() > t && !has_pred[node.codeword] && rotation_ok(&fixed, node) {
                groups.entry(&node.bits[..t]).or_default().push(i);
            }
        }
        for g in groups.values_mut() {
            g.sort_by(|&a, &b| nodes[a].bits.cmp(&nodes[b].bits).then(a.cmp(&b)));
        }

        let mut cursor: HashMap<usize, usize> = HashMap::new();
        let mut heap: BinaryHeap<Reverse<(Vec<u8>, usize, usize)>> = BinaryHeap::new();

        // Next admissible head for tail `u` at this level, advancing its cursor.
        let next_candidate = |u: usize,
                              cursor: &mut HashMap<usize, usize>,
                              chains: &mut Chains,
                              has_pred: &[bool],
                              fixed: &[Option<usize>]|
         -> Option<(Vec<u8>, usize, usize)> {
            let tail = &nodes[u];
            let group = groups.get(&tail.bits[tail.bits.len() - t..])?;
            let pos = cursor.entry(u).or_insert(0);
            let tail_chain = chains.find(tail.codeword);
            while *pos < group.len() {
                let v = group[*pos];
                let head = &nodes[v];
                if !has_pred[head.codeword]
                    && rotation_ok(fixed, head)
                    && chains.find(head.codeword) != tail_chain
                {
                    let mut joined = tail.bits.clone();
                    joined.extend_from_slice(&head.bits[t..]);
                    return Some((joined, u, v));
                }
                *pos += 1;
            }
            None
        };

        for (u, node) in nodes.iter().enumerate() {
            if node.bits.len() > t && succ[node.codeword].is_none() && rotation_ok(&fixed, node) {
                if let Some(c) = next_candidate(u, &mut cursor, &mut chains, &has_pred, &fixed) {
                    heap.push(Reverse(c));
                }
            }
        }

        while let Some(Reverse((_, u, v))) = heap.pop() {
            if remaining == 1 {
                break;
            }
            let (a, b) = (nodes[u].codeword, nodes[v].codeword);
            if succ[a].is_some() || !rotation_ok(&fixed, &nodes[u]) {
                continue;
            }
            let head_ok = !has_pred[b]
                && rotation_ok(&fixed, &nodes[v])
                && chains.find(a) != chains.find(b);
            if head_ok {
                fixed[a] = Some(nodes[u].rotation);
                fixed[b] = Some(nodes[v].rotation);
                succ[a] = Some((b, t));
                has_pred[b] = true;
                let (ra, rb) = (chains.find(a), chains.find(b));
                chains.parent[rb] = ra;
                remaining -= 1;
            } else if let Some(c) = next_candidate(u, &mut cursor, &mut chains, &has_pred, &fixed) {
                heap.push(Reverse(c));
            }
        }
    }

    let first = (0..k).find(|&c| !has_pred[c]).expect("a chain has exactly one head");
    let node_bits = |c: usize| -> Vec<u8> {
        let rot = fixed[c].unwrap_or(0);
        acyclic_extension(&cws[c].rotate(rot), code.n, 0)
    };

    let mut order = Vec::with_capacity(k);
    let mut chain: Vec<u8> = Vec::new();
    let mut total_bits = 0;
    let mut total_overlap = 0;
    let mut cur = first;
    let mut incoming = 0;
    let last_bits = loop {
        let bits = node_bits(cur);
        total_bits += bits.len();
        chain.extend_from_slice(&bits[incoming..]);
        let next = succ[cur];
        order.push(MergeStep {
            codeword: cur,
            rotation: fixed[cur].unwrap_or(0),
            overlap: next.map_or(0, |(_, t)| t),
        });
        match next {
            Some((nxt, t)) => {
                total_overlap += t;
                incoming = t;
                cur = nxt;
            }
            None => break bits,
        }
    };
    debug_assert_eq!(order.len(), k);

    let first_bits = node_bits(first);
    let closing = max_overlap(&last_bits, &first_bits, usize::MAX);
    order.last_mut().unwrap().overlap = closing;
    total_overlap += closing;
    chain.truncate(chain.len() - closing);

    Ok(MergeOutcome {
        sequence: CyclicSequence::from_bits(&chain)?,
        order,
        total_bits,
        total_overlap,
        zero_overlap_baseline,
    })
}

/// Assembles listed acyclic strings with stated overlaps into one cyclic sequence.
///
/// `rows[i].1` is the overlap between string `i` and string `i + 1`; the last
/// entry wraps to the first. Every stated overlap must be a genuine
/// suffix/prefix match shorter than both strings.
pub fn assemble_chain(rows: &[(Vec<u8>, usize)]) -> Result<CyclicSequence> {
    if rows.is_empty() {
        return Err(Error::EmptyInput("chain"));
    }
    let mut bits = Vec::new();
    for (i, (s, ov)) in rows.iter().enumerate() {
        let next = &rows[(i + 1) % rows.len()].0;
        if *ov >= s.len() || *ov >= next.len() || s[s.len() - ov..] != next[..*ov] {
            return Err(Error::Parameter(format!(
                "stated overlap {ov} between chain entries {i} and {} does not match",
                (i + 1) % rows.len()
            )));
        }
        bits.extend_from_slice(&s[..s.len() - ov]);
    }
    CyclicSequence::from_bits(&bits)
}
