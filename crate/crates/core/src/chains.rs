//! Enumeration of chains (generators of the Anick-type resolution) and of
//! Goulden–Jackson clusters for an antichain of forbidden patterns.
//!
//! Index convention: the empty permutation is the only 0-chain, a single
//! entry is the only 1-chain, and the 2-chains are the patterns themselves.
//! A `q`-chain extends a `(q-1)`-chain with tail `τ'` by a new tail `τ` such
//! that `τ'τ` contains exactly one occurrence, which is a suffix of `τ'τ`
//! starting inside `τ'`.
//!
//! Clusters use the same index shifted so that a cluster with `m` marked
//! occurrences has index `m + 1`; both tables then feed the same inversion.
//!
//! # Counting engine
//!
//! Permutations are grown one entry at a time. A new entry is described by
//! its rank `r ∈ 1..=len+1` among everything placed so far; entries of rank
//! `≥ r` move up by one. Only entries from the start of the current tail
//! onwards can take part in later windows, so the search state is the vector
//! of their ranks inside the whole prefix, together with the tail length.
//! States reached by different prefixes are merged and carry a count per
//! chain index.

use std::collections::HashMap;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pattern::{Matcher, PatternSet};
use crate::perm::{Permutation, Shape};

/// Counts fit in `u128` while `n! < 2^128`.
pub const MAX_LEN: usize = 34;

/// A chain with its unique factorization.
///
/// `breakpoints` lists `0` followed by the end position of every linked
/// segment: the first segment is the first pattern, each later one a tail.
/// A `q`-chain with `q ≥ 2` has `q` breakpoints ending in `n`; the 1-chain
/// has `[0, 1]` and the empty 0-chain has `[0]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chain {
    pub perm: Permutation,
    pub q: usize,
    pub breakpoints: Vec<usize>,
}

impl Chain {
    /// Segments between consecutive breakpoints, as 1-based position ranges.
    pub fn segments(&self) -> impl Iterator<Item = std::ops::Range<usize>> + '_ {
        self.breakpoints.windows(2).map(|w| w[0]..w[1])
    }
}

/// A cluster: a permutation together with its marked occurrences.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cluster {
    pub perm: Permutation,
    /// `marked.len() + 1`.
    pub q: usize,
    /// Marked occurrences as `(1-based start, length)`, by increasing start.
    pub marked: Vec<(usize, usize)>,
}

/// Exact counts indexed by length `n` and chain index `q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainTable {
    pub n_max: usize,
    /// `counts[n][q]` for `0 ≤ q ≤ n ≤ n_max`.
    #[serde(with = "crate::decimal::table")]
    pub counts: Vec<Vec<BigUint>>,
}

/// Cluster counts `cl_{n,q}` in the chain-index convention.
pub type ClusterTable = ChainTable;

impl ChainTable {
    pub(crate) fn zeroed(n_max: usize) -> Self {
        let mut counts: Vec<Vec<BigUint>> = (0..=n_max)
            .map(|n| vec![BigUint::default(); n + 1])
            .collect();
        counts[0][0] = 1u32.into();
        if n_max >= 1 {
            counts[1][1] = 1u32.into();
        }
        ChainTable { n_max, counts }
    }

    pub fn get(&self, n: usize, q: usize) -> BigUint {
        self.counts
            .get(n)
            .and_then(|row| row.get(q))
            .cloned()
            .unwrap_or_default()
    }

    pub fn row(&self, n: usize) -> &[BigUint] {
        &self.counts[n]
    }

    /// Number of chains of length `n`, over all indices.
    pub fn total(&self, n: usize) -> BigUint {
        self.counts[n].iter().sum()
    }

    /// Keep only lengths `≤ n_max`.
    pub fn truncate(&self, n_max: usize) -> Self {
        let n_max = n_max.min(self.n_max);
        ChainTable {
            n_max,
            counts: self.counts[..=n_max].to_vec(),
        }
    }

    /// Nonzero entries as `(n, q, count)`.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &BigUint)> {
        self.counts.iter().enumerate().flat_map(|(n, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| **c != BigUint::default())
                .map(move |(q, c)| (n, q, c))
        })
    }

    fn add(&mut self, n: usize, q: usize, c: u128) {
        self.counts[n][q] += BigUint::from(c);
    }
}

fn check_len(n_max: usize) -> Result<()> {
    if n_max > MAX_LEN {
        return Err(Error::invalid(format!(
            "maximum length {n_max} exceeds the supported {MAX_LEN}"
        )));
    }
    Ok(())
}

/// Outcome of appending one entry to a partially built tail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Step {
    /// The new entry closes the tail: a chain of the next index.
    Complete,
    /// No occurrence yet and one can still start inside the previous tail.
    Open,
    Dead,
}

/// `tracked` holds the previous tail followed by the tail under construction,
/// ending with the entry just appended.
#[inline]
fn chain_step<T: Ord>(matcher: &Matcher, tracked: &[T], tail_len: usize) -> Step {
    match matcher.suffix_match(tracked) {
        Some(k) if tracked.len() - k < tail_len => Step::Complete,
        Some(_) => Step::Dead,
        None => {
            // an occurrence ending at the next entry must start at index
            // tail_len - 1 or earlier
            let next = tracked.len();
            if matcher.max_len() + tail_len >= next + 2 {
                Step::Open
            } else {
                Step::Dead
            }
        }
    }
}

/// Ranks after inserting a new entry of rank `r` among `len` entries.
#[inline]
fn insert_rank(ranks: &[u8], r: u8, out: &mut Vec<u8>) {
    out.clear();
    out.extend(ranks.iter().map(|&x| if x >= r { x + 1 } else { x }));
    out.push(r);
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct ChainState {
    tail_len: u8,
    ranks: Vec<u8>,
}

type Layer<S> = HashMap<S, Vec<u128>>;

fn merge_into<S: std::hash::Hash + Eq>(layer: &mut Layer<S>, key: S, by_q: &[u128], shift: usize) {
    let slot = layer.entry(key).or_default();
    if slot.len() < by_q.len() + shift {
        slot.resize(by_q.len() + shift, 0);
    }
    for (q, &c) in by_q.iter().enumerate() {
        slot[q + shift] += c;
    }
}

fn merge_layers<S: std::hash::Hash + Eq>(mut a: Layer<S>, b: Layer<S>) -> Layer<S> {
    if a.len() < b.len() {
        return merge_layers(b, a);
    }
    for (k, v) in b {
        merge_into(&mut a, k, &v, 0);
    }
    a
}

fn validated(set: &PatternSet, n_max: usize) -> Result<()> {
    check_len(n_max)?;
    if set.is_empty() {
        return Err(Error::invalid("empty pattern set"));
    }
    // PatternSet construction already guarantees an antichain
    Ok(())
}

/// Counts `c_{n,q}` for all `n ≤ n_max`.
pub fn enumerate_chains(set: &PatternSet, n_max: usize) -> Result<ChainTable> {
    validated(set, n_max)?;
    let matcher = set.matcher();
    let mut table = ChainTable::zeroed(n_max);
    if n_max < 2 {
        return Ok(table);
    }
    let mut current: Layer<ChainState> = HashMap::new();
    current.insert(
        ChainState {
            tail_len: 1,
            ranks: vec![1],
        },
        vec![0, 1],
    );
    for len in 1..n_max {
        let entries: Vec<(ChainState, Vec<u128>)> = current.drain().collect();
        let (next, completed) = entries
            .par_iter()
            .fold(
                || (Layer::<ChainState>::new(), vec![0u128; len + 3]),
                |(mut next, mut completed), (state, by_q)| {
                    let mut buf = Vec::with_capacity(state.ranks.len() + 1);
                    let tail_len = state.tail_len as usize;
                    for r in 1..=(len + 1) as u8 {
                        insert_rank(&state.ranks, r, &mut buf);
                        match chain_step(&matcher, &buf, tail_len) {
                            Step::Complete => {
                                for (q, &c) in by_q.iter().enumerate() {
                                    completed[q + 1] += c;
                                }
                                let key = ChainState {
                                    tail_len: (buf.len() - tail_len) as u8,
                                    ranks: buf[tail_len..].to_vec(),
                                };
                                merge_into(&mut next, key, by_q, 1);
                            }
                            Step::Open => {
                                let key = ChainState {
                                    tail_len: state.tail_len,
                                    ranks: buf.clone(),
                                };
                                merge_into(&mut next, key, by_q, 0);
                            }
                            Step::Dead => {}
                        }
                    }
                    (next, completed)
                },
            )
            .reduce(
                || (Layer::new(), vec![0u128; len + 3]),
                |(a, mut ca), (b, cb)| {
                    ca.iter_mut().zip(cb).for_each(|(x, y)| *x += y);
                    (merge_layers(a, b), ca)
                },
            );
        for (q, &c) in completed.iter().enumerate() {
            if c != 0 {
                table.add(len + 1, q, c);
            }
        }
        current = next;
    }
    Ok(table)
}

/// Every chain of length `≤ n_max`, with its factorization.
pub fn list_chains(set: &PatternSet, n_max: usize) -> Result<Vec<Chain>> {
    validated(set, n_max)?;
    let matcher = set.matcher();
    let mut out = vec![Chain {
        perm: Permutation::empty(),
        q: 0,
        breakpoints: vec![0],
    }];
    if n_max >= 1 {
        out.push(Chain {
            perm: Permutation::identity(1),
            q: 1,
            breakpoints: vec![0, 1],
        });
        let mut ends = vec![1usize];
        walk_chains(&matcher, n_max, &[1], 0, &mut ends, &mut out);
    }
    out.sort_by(|a, b| (a.perm.len(), a.q, &a.perm).cmp(&(b.perm.len(), b.q, &b.perm)));
    Ok(out)
}

/// `word` is the standardized prefix; `tail_start..ends.last()` is the
/// previous tail and everything after it the tail under construction.
fn walk_chains(
    matcher: &Matcher,
    n_max: usize,
    word: &[u8],
    tail_start: usize,
    ends: &mut Vec<usize>,
    out: &mut Vec<Chain>,
) {
    let len = word.len();
    if len >= n_max {
        return;
    }
    let tail_end = *ends.last().expect("chain has a tail");
    let mut next = Vec::with_capacity(len + 1);
    for r in 1..=(len + 1) as u8 {
        insert_rank(word, r, &mut next);
        match chain_step(matcher, &next[tail_start..], tail_end - tail_start) {
            Step::Complete => {
                ends.push(next.len());
                let q = ends.len();
                let mut breakpoints = vec![0];
                breakpoints.extend(ends.iter().skip(1));
                out.push(Chain {
                    perm: Permutation::from_vec_unchecked(next.iter().map(|&v| v as u32).collect()),
                    q,
                    breakpoints,
                });
                walk_chains(matcher, n_max, &next.clone(), tail_end, ends, out);
                ends.pop();
            }
            Step::Open => {
                walk_chains(matcher, n_max, &next.clone(), tail_start, ends, out);
            }
            Step::Dead => {}
        }
    }
}

/// All factorizations of `perm` as a chain, found by trying every
/// breakpoint set against the definition directly.
pub fn chain_factorizations(perm: &Permutation, set: &PatternSet) -> Vec<Chain> {
    let word = perm.as_slice();
    let n = word.len();
    if n == 0 {
        return vec![Chain {
            perm: perm.clone(),
            q: 0,
            breakpoints: vec![0],
        }];
    }
    let shapes: Vec<Shape> = set.patterns().iter().map(Shape::new).collect();
    let mut found = Vec::new();
    let mut ends = vec![0, 1];
    search_factorizations(word, &shapes, &mut ends, &mut found);
    found
        .into_iter()
        .map(|ends| {
            let q = ends.len() - 1;
            let breakpoints = if q == 1 {
                ends
            } else {
                std::iter::once(0)
                    .chain(ends[2..].iter().copied())
                    .collect()
            };
            Chain {
                perm: perm.clone(),
                q,
                breakpoints,
            }
        })
        .collect()
}

/// `ends` holds 0 and the end of every tail so far.
fn search_factorizations(
    word: &[u32],
    shapes: &[Shape],
    ends: &mut Vec<usize>,
    found: &mut Vec<Vec<usize>>,
) {
    let n = word.len();
    let e = *ends.last().unwrap();
    if e == n {
        found.push(ends.clone());
        return;
    }
    let s = ends[ends.len() - 2];
    for e2 in e + 1..=n {
        let window = &word[s..e2];
        let occ: Vec<(usize, usize)> = (0..window.len())
            .flat_map(|i| {
                shapes
                    .iter()
                    .filter(move |sh| i + sh.len() <= window.len())
                    .filter(move |sh| sh.matches(&window[i..i + sh.len()]))
                    .map(move |sh| (i, sh.len()))
            })
            .collect();
        if let [(start, k)] = occ[..] {
            if start + k == window.len() && start < e - s {
                ends.push(e2);
                search_factorizations(word, shapes, ends, found);
                ends.pop();
            }
        }
    }
}

/// The chain structure of `perm`, if it is a chain.
pub fn is_chain(perm: &Permutation, set: &PatternSet) -> Option<Chain> {
    chain_factorizations(perm, set).into_iter().next()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct ClusterState {
    /// Ranks of the entries covered by the last marked occurrence.
    window: Vec<u8>,
}

/// Prefix shapes of one pattern: `prefixes[j]` tests the first `j` entries.
struct PatternPrefixes {
    prefixes: Vec<Shape>,
}

impl PatternPrefixes {
    fn new(p: &Permutation) -> Self {
        let word = p.as_slice();
        let prefixes = (0..=word.len())
            .map(|j| Shape::new(&crate::perm::standardize(&word[..j]).expect("distinct")))
            .collect();
        PatternPrefixes { prefixes }
    }

    fn len(&self) -> usize {
        self.prefixes.len() - 1
    }

    fn prefix_matches(&self, window: &[u8]) -> bool {
        self.prefixes[window.len()].matches(window)
    }
}

/// Counts `cl_{n,q}` of marked clusters with `q - 1` occurrences.
pub fn enumerate_clusters(set: &PatternSet, n_max: usize) -> Result<ClusterTable> {
    validated(set, n_max)?;
    let pats: Vec<PatternPrefixes> = set.patterns().iter().map(PatternPrefixes::new).collect();
    let mut table = ChainTable::zeroed(n_max);
    let mut layers: Vec<Layer<ClusterState>> = (0..=n_max).map(|_| HashMap::new()).collect();
    for p in set.patterns() {
        if p.len() <= n_max {
            let window = p.as_slice().iter().map(|&v| v as u8).collect();
            merge_into(&mut layers[p.len()], ClusterState { window }, &[0, 1], 0);
        }
    }
    for len in 2..=n_max {
        let entries: Vec<(ClusterState, Vec<u128>)> = layers[len].drain().collect();
        for (_, by_m) in &entries {
            for (m, &c) in by_m.iter().enumerate() {
                if c != 0 {
                    table.add(len, m + 1, c);
                }
            }
        }
        let produced: Vec<(usize, ClusterState, Vec<u128>)> = entries
            .par_iter()
            .flat_map_iter(|(state, by_m)| {
                let mut acc: Vec<(usize, ClusterState, Vec<u128>)> = Vec::new();
                extend_cluster(&pats, n_max, len, &state.window, &mut |new_len, window| {
                    acc.push((new_len, ClusterState { window }, by_m.clone()));
                });
                acc
            })
            .collect();
        for (new_len, state, by_m) in produced {
            merge_into(&mut layers[new_len], state, &by_m, 1);
        }
    }
    Ok(table)
}

/// Calls `emit(new_len, new_window)` once for every way to mark a further
/// occurrence starting strictly inside `window` and ending past it.
fn extend_cluster(
    pats: &[PatternPrefixes],
    n_max: usize,
    len: usize,
    window: &[u8],
    emit: &mut dyn FnMut(usize, Vec<u8>),
) {
    let w = window.len();
    for pat in pats {
        let k = pat.len();
        for st in 1..w {
            let overlap = w - st;
            if overlap >= k || len + (k - overlap) > n_max {
                continue;
            }
            if !pat.prefix_matches(&window[st..]) {
                continue;
            }
            grow_occurrence(pat, len, &window[st..], k, emit);
        }
    }
}

fn grow_occurrence(
    pat: &PatternPrefixes,
    len: usize,
    partial: &[u8],
    k: usize,
    emit: &mut dyn FnMut(usize, Vec<u8>),
) {
    if partial.len() == k {
        emit(len, partial.to_vec());
        return;
    }
    let mut next = Vec::with_capacity(partial.len() + 1);
    for r in 1..=(len + 1) as u8 {
        insert_rank(partial, r, &mut next);
        if pat.prefix_matches(&next) {
            grow_occurrence(pat, len + 1, &next, k, emit);
        }
    }
}

/// Every cluster of length `≤ n_max` with its marking.
pub fn list_clusters(set: &PatternSet, n_max: usize) -> Result<Vec<Cluster>> {
    validated(set, n_max)?;
    let matcher = set.matcher();
    let mut out = Vec::new();
    for p in set.patterns() {
        if p.len() > n_max {
            continue;
        }
        let word: Vec<u8> = p.as_slice().iter().map(|&v| v as u8).collect();
        let mut marked = vec![(0usize, p.len())];
        walk_clusters(&matcher, n_max, &word, &mut marked, &mut out);
    }
    out.sort_by(|a, b| {
        (a.perm.len(), a.q, &a.perm, &a.marked).cmp(&(b.perm.len(), b.q, &b.perm, &b.marked))
    });
    Ok(out)
}

fn walk_clusters(
    matcher: &Matcher,
    n_max: usize,
    word: &[u8],
    marked: &mut Vec<(usize, usize)>,
    out: &mut Vec<Cluster>,
) {
    out.push(Cluster {
        perm: Permutation::from_vec_unchecked(word.iter().map(|&v| v as u32).collect()),
        q: marked.len() + 1,
        marked: marked.iter().map(|&(s, k)| (s + 1, k)).collect(),
    });
    let (last_start, last_len) = *marked.last().expect("at least one marked occurrence");
    let last_end = last_start + last_len;
    let limit = (last_end - 1 + matcher.max_len()).min(n_max);
    grow_marked(
        matcher,
        n_max,
        word.to_vec(),
        last_start,
        last_end,
        limit,
        marked,
        out,
    );
}

/// Appends entries one at a time and marks every occurrence that ends at the
/// new entry and starts strictly inside the last marked window.
#[allow(clippy::too_many_arguments)]
fn grow_marked(
    matcher: &Matcher,
    n_max: usize,
    word: Vec<u8>,
    last_start: usize,
    last_end: usize,
    limit: usize,
    marked: &mut Vec<(usize, usize)>,
    out: &mut Vec<Cluster>,
) {
    if word.len() >= limit {
        return;
    }
    let mut next = Vec::with_capacity(word.len() + 1);
    for r in 1..=(word.len() + 1) as u8 {
        insert_rank(&word, r, &mut next);
        let end = next.len();
        for k in 2..=matcher.max_len().min(end) {
            let start = end - k;
            if start > last_start && start < last_end && matcher.matches_window(&next[start..]) {
                marked.push((start, k));
                walk_clusters(matcher, n_max, &next, marked, out);
                marked.pop();
            }
        }
        grow_marked(
            matcher,
            n_max,
            next.clone(),
            last_start,
            last_end,
            limit,
            marked,
            out,
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &str) -> PatternSet {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn small(t: &ChainTable, n: usize, q: usize) -> u64 {
        u64::try_from(&t.get(n, q)).unwrap()
    }

    #[test]
    fn rise_of_two_has_one_chain_per_length() {
        let t = enumerate_chains(&set("12"), 6).unwrap();
        for n in 0..=6 {
            for q in 0..=n {
                assert_eq!(small(&t, n, q), u64::from(q == n), "n={n} q={q}");
            }
        }
    }

    #[test]
    fn rise_of_three_examples() {
        let s = set("123");
        let t = enumerate_chains(&s, 7).unwrap();
        assert_eq!(small(&t, 3, 2), 1);
        assert_eq!(small(&t, 4, 3), 1);
        assert_eq!(t.total(5), 0u32.into());
        assert_eq!(small(&t, 6, 4), 1);
        assert_eq!(small(&t, 7, 5), 1);
        assert!(is_chain(&p("12345"), &s).is_none());
        let c = is_chain(&p("1234"), &s).unwrap();
        assert_eq!(c.q, 3);
        assert_eq!(c.breakpoints, vec![0, 3, 4]);
    }

    #[test]
    fn pattern_is_a_two_chain() {
        let c = is_chain(&p("132"), &set("132")).unwrap();
        assert_eq!(c.q, 2);
        assert_eq!(c.breakpoints, vec![0, 3]);
        assert_eq!(is_chain(&p("1"), &set("132")).unwrap().q, 1);
        assert_eq!(is_chain(&Permutation::empty(), &set("132")).unwrap().q, 0);
        assert!(is_chain(&p("312"), &set("12")).is_none());
    }

    #[test]
    fn chains_of_1324() {
        let t = enumerate_chains(&set("1324"), 7).unwrap();
        assert_eq!(small(&t, 4, 2), 1);
        assert_eq!(t.total(5), 0u32.into());
        assert_eq!(small(&t, 6, 3), 2);
        assert_eq!(small(&t, 7, 3), 1);
        assert_eq!(t.total(7), 1u32.into());
    }

    #[test]
    fn listing_agrees_with_counts() {
        for s in ["123", "1324", "132;231", "2413", "12"] {
            let s = set(s);
            let t = enumerate_chains(&s, 8).unwrap();
            let list = list_chains(&s, 8).unwrap();
            let mut from_list = ChainTable::zeroed(8);
            from_list
                .counts
                .iter_mut()
                .flatten()
                .for_each(|c| *c = 0u32.into());
            for c in &list {
                from_list.add(c.perm.len(), c.q, 1);
                assert_eq!(is_chain(&c.perm, &s).as_ref(), Some(c));
            }
            assert_eq!(from_list, t);
        }
    }

    #[test]
    fn clusters_of_123() {
        let t = enumerate_clusters(&set("123"), 5).unwrap();
        assert_eq!(small(&t, 3, 2), 1);
        assert_eq!(small(&t, 4, 3), 1);
        assert_eq!(small(&t, 5, 3), 1);
        assert_eq!(small(&t, 5, 4), 1);
        assert_eq!(t.total(5), 2u32.into());
    }

    #[test]
    fn cluster_listing_agrees_with_counts() {
        for s in ["123", "12", "1324;123", "2143"] {
            let s = set(s);
            let t = enumerate_clusters(&s, 7).unwrap();
            let list = list_clusters(&s, 7).unwrap();
            let mut from_list = ChainTable::zeroed(7);
            for c in &list {
                from_list.add(c.perm.len(), c.q, 1);
            }
            assert_eq!(from_list, t, "{s}");
        }
    }

    #[test]
    fn length_limit() {
        assert!(enumerate_chains(&set("12"), MAX_LEN + 1).is_err());
    }
}
