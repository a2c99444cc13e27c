//! Brute-force ground truth by exhaustive enumeration of `S_n`.
//!
//! Permutations are generated value by value; each new entry is checked only
//! against the windows that end at it. The search is split by first entry and
//! the partial counts are summed, so the work runs on the rayon pool.

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pattern::{Matcher, PatternSet};

pub const DEFAULT_GUARD: usize = 12;

/// Hard limit imposed by the bitmask used during the search.
const MAX_N: usize = 31;

/// Number of permutations of length `n` with exactly `k` occurrences,
/// indexed by `k`. Index 0 is always present.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OccurrenceProfile {
    pub n: usize,
    #[serde(with = "crate::decimal::vec")]
    pub counts: Vec<BigUint>,
}

impl OccurrenceProfile {
    pub fn avoiders(&self) -> &BigUint {
        &self.counts[0]
    }

    pub fn get(&self, k: usize) -> BigUint {
        self.counts.get(k).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WilfOutcome {
    pub equivalent: bool,
    /// First length at which the avoider counts differ.
    pub counterexample: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FullOutcome {
    pub equivalent: bool,
    /// First `(n, k)` at which the occurrence distributions differ.
    pub counterexample: Option<(usize, usize)>,
}

/// Exhaustive counter with a ceiling on `n`.
#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    guard: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            guard: DEFAULT_GUARD,
        }
    }
}

impl Oracle {
    pub fn with_guard(guard: usize) -> Self {
        Oracle {
            guard: guard.min(MAX_N),
        }
    }

    pub fn guard(&self) -> usize {
        self.guard
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.guard {
            Err(Error::GuardExceeded {
                n,
                guard: self.guard,
            })
        } else {
            Ok(())
        }
    }

    pub fn count_avoiders(&self, set: &PatternSet, n: usize) -> Result<BigUint> {
        self.check(n)?;
        if n == 0 {
            return Ok(BigUint::from(1u32));
        }
        let matcher = set.matcher();
        let total: u64 = (1..=n as u8)
            .into_par_iter()
            .map(|first| {
                let mut word = Vec::with_capacity(n);
                word.push(first);
                count_avoiding(&matcher, n, 1u32 << first, &mut word)
            })
            .sum();
        Ok(BigUint::from(total))
    }

    /// Avoider counts for every length `0..=n_max`.
    pub fn avoider_sequence(&self, set: &PatternSet, n_max: usize) -> Result<Vec<BigUint>> {
        self.check(n_max)?;
        (0..=n_max).map(|n| self.count_avoiders(set, n)).collect()
    }

    pub fn occurrence_profile(&self, set: &PatternSet, n: usize) -> Result<OccurrenceProfile> {
        self.check(n)?;
        if n == 0 {
            return Ok(OccurrenceProfile {
                n,
                counts: vec![BigUint::from(1u32)],
            });
        }
        let matcher = set.matcher();
        // at most one occurrence per (end position, member)
        let slots = n * set.len() + 1;
        let merged = (1..=n as u8)
            .into_par_iter()
            .map(|first| {
                let mut hist = vec![0u64; slots];
                let mut word = Vec::with_capacity(n);
                word.push(first);
                histogram(&matcher, n, 1u32 << first, &mut word, 0, &mut hist);
                hist
            })
            .reduce(
                || vec![0u64; slots],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            );
        let last = merged.iter().rposition(|&c| c != 0).unwrap_or(0);
        Ok(OccurrenceProfile {
            n,
            counts: merged[..=last].iter().map(|&c| BigUint::from(c)).collect(),
        })
    }

    pub fn wilf_equivalent(
        &self,
        left: &PatternSet,
        right: &PatternSet,
        n_max: usize,
    ) -> Result<WilfOutcome> {
        self.check(n_max)?;
        for n in 0..=n_max {
            if self.count_avoiders(left, n)? != self.count_avoiders(right, n)? {
                return Ok(WilfOutcome {
                    equivalent: false,
                    counterexample: Some(n),
                });
            }
        }
        Ok(WilfOutcome {
            equivalent: true,
            counterexample: None,
        })
    }

    pub fn fully_equivalent(
        &self,
        left: &PatternSet,
        right: &PatternSet,
        n_max: usize,
    ) -> Result<FullOutcome> {
        self.check(n_max)?;
        for n in 0..=n_max {
            let a = self.occurrence_profile(left, n)?;
            let b = self.occurrence_profile(right, n)?;
            let width = a.counts.len().max(b.counts.len());
            if let Some(k) = (0..width).find(|&k| a.get(k) != b.get(k)) {
                return Ok(FullOutcome {
                    equivalent: false,
                    counterexample: Some((n, k)),
                });
            }
        }
        Ok(FullOutcome {
            equivalent: true,
            counterexample: None,
        })
    }
}

fn count_avoiding(matcher: &Matcher, n: usize, used: u32, word: &mut Vec<u8>) -> u64 {
    if word.len() == n {
        return 1;
    }
    let mut total = 0;
    for v in 1..=n as u8 {
        if used & (1 << v) != 0 {
            continue;
        }
        word.push(v);
        if matcher.suffix_match(word).is_none() {
            total += count_avoiding(matcher, n, used | (1 << v), word);
        }
        word.pop();
    }
    total
}

fn histogram(
    matcher: &Matcher,
    n: usize,
    used: u32,
    word: &mut Vec<u8>,
    occ: usize,
    hist: &mut [u64],
) {
    if word.len() == n {
        hist[occ] += 1;
        return;
    }
    for v in 1..=n as u8 {
        if used & (1 << v) != 0 {
            continue;
        }
        word.push(v);
        let occ = occ + matcher.suffix_match_count(word);
        histogram(matcher, n, used | (1 << v), word, occ, hist);
        word.pop();
    }
}
