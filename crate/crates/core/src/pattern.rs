//! Forbidden pattern sets: antichain hygiene, occurrence counting and
//! self-overlap profiles.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{occurrences, standardize, Permutation, Shape};

/// An antichain of forbidden consecutive patterns, each of length at least 2.
///
/// Patterns are kept sorted by length, then lexicographically, so two sets
/// with the same members compare equal and print identically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Permutation>", into = "Vec<Permutation>")]
pub struct PatternSet {
    patterns: Vec<Permutation>,
}

impl PatternSet {
    /// Builds a pattern set, rejecting short patterns, duplicates and
    /// non-antichains. Use [`antichain_reduce`] to drop redundant members
    /// instead.
    pub fn new(patterns: impl IntoIterator<Item = Permutation>) -> Result<Self> {
        let mut patterns: Vec<Permutation> = patterns.into_iter().collect();
        check_lengths(&patterns)?;
        sort_patterns(&mut patterns);
        if let Some(w) = patterns.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("pattern {} listed twice", w[0])));
        }
        for (i, small) in patterns.iter().enumerate() {
            for big in &patterns[i + 1..] {
                if big.len() > small.len() && !occurrences(big, small).is_empty() {
                    return Err(Error::invalid(format!(
                        "not an antichain: {big} contains {small}"
                    )));
                }
            }
        }
        Ok(PatternSet { patterns })
    }

    pub fn patterns(&self) -> &[Permutation] {
        &self.patterns
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn max_len(&self) -> usize {
        self.patterns
            .iter()
            .map(Permutation::len)
            .max()
            .unwrap_or(0)
    }

    /// `counts[k]` is `|P_k|`, the number of patterns of length `k`.
    pub fn length_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.max_len() + 1];
        for p in &self.patterns {
            counts[p.len()] += 1;
        }
        counts
    }

    pub fn reverse(&self) -> Self {
        self.map(Permutation::reverse)
    }

    pub fn complement(&self) -> Self {
        self.map(Permutation::complement)
    }

    fn map(&self, f: impl Fn(&Permutation) -> Permutation) -> Self {
        let mut patterns: Vec<Permutation> = self.patterns.iter().map(f).collect();
        sort_patterns(&mut patterns);
        PatternSet { patterns }
    }

    pub(crate) fn matcher(&self) -> Matcher {
        Matcher::new(self)
    }
}

fn check_lengths(patterns: &[Permutation]) -> Result<()> {
    match patterns.iter().find(|p| p.len() < 2) {
        Some(p) => Err(Error::invalid(format!(
            "pattern {p:?} has length {} (< 2)",
            p.len()
        ))),
        None => Ok(()),
    }
}

fn sort_patterns(patterns: &mut [Permutation]) {
    patterns.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
}

impl TryFrom<Vec<Permutation>> for PatternSet {
    type Error = Error;

    fn try_from(patterns: Vec<Permutation>) -> Result<Self> {
        PatternSet::new(patterns)
    }
}

impl From<PatternSet> for Vec<Permutation> {
    fn from(set: PatternSet) -> Self {
        set.patterns
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.patterns.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for PatternSet {
    type Err = Error;

    /// Semicolon-separated patterns, e.g. `"132;231"` or `"1,3,2;2,3,1"`.
    fn from_str(text: &str) -> Result<Self> {
        if text.trim().is_empty() {
            return Err(Error::Parse {
                what: "pattern set",
                text: text.to_string(),
                reason: "no patterns given".into(),
            });
        }
        let patterns = text
            .split(';')
            .map(str::parse)
            .collect::<Result<Vec<Permutation>>>()?;
        PatternSet::new(patterns)
    }
}

/// Drops every pattern that contains another member as a consecutive
/// pattern. The set of avoiders is unchanged.
pub fn antichain_reduce(raw: impl IntoIterator<Item = Permutation>) -> Result<PatternSet> {
    let mut raw: Vec<Permutation> = raw.into_iter().collect();
    check_lengths(&raw)?;
    sort_patterns(&mut raw);
    raw.dedup();
    let mut kept: Vec<Permutation> = Vec::new();
    for p in raw {
        if kept.iter().all(|small| occurrences(&p, small).is_empty()) {
            kept.push(p);
        }
    }
    Ok(PatternSet { patterns: kept })
}

/// Total number of occurrences of members of `set` in `sigma`.
pub fn occurrence_count(sigma: &Permutation, set: &PatternSet) -> usize {
    set.patterns()
        .iter()
        .map(|tau| occurrences(sigma, tau).len())
        .sum()
}

pub fn avoids(sigma: &Permutation, set: &PatternSet) -> bool {
    occurrence_count(sigma, set) == 0
}

/// Lengths `j` for which the length-`j` prefix and suffix of a pattern are
/// order-isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OverlapProfile {
    pub pattern: Permutation,
    pub overlaps: BTreeSet<usize>,
}

impl OverlapProfile {
    /// Only the trivial single-entry overlap.
    pub fn is_overlap_free(&self) -> bool {
        self.overlaps.len() == 1
    }
}

pub fn self_overlaps(tau: &Permutation) -> Result<OverlapProfile> {
    let m = tau.len();
    if m < 2 {
        return Err(Error::invalid(format!(
            "self-overlaps need a pattern of length >= 2, got {tau:?}"
        )));
    }
    let word = tau.as_slice();
    let overlaps = (1..m)
        .filter(|&j| {
            // distinct entries, so standardization cannot fail
            standardize(&word[..j]).ok() == standardize(&word[m - j..]).ok()
        })
        .collect();
    Ok(OverlapProfile {
        pattern: tau.clone(),
        overlaps,
    })
}

/// Occurrence tests for windows ending at a given position.
#[derive(Debug, Clone)]
pub(crate) struct Matcher {
    /// Shapes grouped by length, shortest first.
    by_len: Vec<(usize, Vec<Shape>)>,
    max_len: usize,
}

impl Matcher {
    fn new(set: &PatternSet) -> Self {
        let mut by_len: Vec<(usize, Vec<Shape>)> = Vec::new();
        for p in set.patterns() {
            match by_len.last_mut() {
                Some((len, shapes)) if *len == p.len() => shapes.push(Shape::new(p)),
                _ => by_len.push((p.len(), vec![Shape::new(p)])),
            }
        }
        Matcher {
            by_len,
            max_len: set.max_len(),
        }
    }

    pub(crate) fn max_len(&self) -> usize {
        self.max_len
    }

    /// Length of the pattern occurring as a suffix of `word`, if any.
    ///
    /// For an antichain at most one window ending at the last entry can be an
    /// occurrence; with a non-antichain the shortest match is reported.
    #[inline]
    pub(crate) fn suffix_match<T: Ord>(&self, word: &[T]) -> Option<usize> {
        let n = word.len();
        for (k, shapes) in &self.by_len {
            if *k > n {
                break;
            }
            let window = &word[n - k..];
            if shapes.iter().any(|s| s.matches(window)) {
                return Some(*k);
            }
        }
        None
    }

    /// Number of members occurring as a suffix of `word`.
    #[inline]
    pub(crate) fn suffix_match_count<T: Ord>(&self, word: &[T]) -> usize {
        let n = word.len();
        let mut count = 0;
        for (k, shapes) in &self.by_len {
            if *k > n {
                break;
            }
            let window = &word[n - k..];
            count += shapes.iter().filter(|s| s.matches(window)).count();
        }
        count
    }

    /// Whether a window `word[start..start + k]` is an occurrence of a
    /// length-`k` member.
    #[inline]
    pub(crate) fn matches_window<T: Ord>(&self, window: &[T]) -> bool {
        self.by_len
            .iter()
            .find(|(k, _)| *k == window.len())
            .is_some_and(|(_, shapes)| shapes.iter().any(|s| s.matches(window)))
    }
}
