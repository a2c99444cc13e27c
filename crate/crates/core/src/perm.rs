//! Permutations in one-line notation, standardization and consecutive
//! occurrences.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{1, …, n}` in one-line notation.
///
/// Values are stored 1-based exactly as written, so `132` is `[1, 3, 2]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation(Vec<u32>);

impl Permutation {
    /// Validates that `word` is a bijection of `{1, …, word.len()}`.
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            let v = v as usize;
            if v == 0 || v > n {
                return Err(Error::invalid(format!(
                    "value {v} out of range 1..={n} in {word:?}"
                )));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::invalid(format!("value {v} repeated in {word:?}")));
            }
        }
        Ok(Permutation(word))
    }

    pub(crate) fn from_vec_unchecked(word: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation(word)
    }

    pub fn empty() -> Self {
        Permutation(Vec::new())
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    /// Read right to left.
    pub fn reverse(&self) -> Self {
        Permutation(self.0.iter().rev().copied().collect())
    }

    /// Replace every value `v` by `n + 1 - v`.
    pub fn complement(&self) -> Self {
        let n = self.0.len() as u32;
        Permutation(self.0.iter().map(|&v| n + 1 - v).collect())
    }

    /// `positions()[v - 1]` is the 0-based position holding value `v`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v as usize - 1] = i;
        }
        pos
    }

    /// Whether `window` is order-isomorphic to this permutation.
    pub fn matches<T: Ord>(&self, window: &[T]) -> bool {
        window.len() == self.len() && Shape::new(self).matches(window)
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;

    fn try_from(word: Vec<u32>) -> Result<Self> {
        Permutation::new(word)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

/// Digit string for length at most nine, comma-separated otherwise.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() <= 9 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
        } else {
            for (i, v) in self.0.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let parse_err = |reason: String| Error::Parse {
            what: "permutation",
            text: text.to_string(),
            reason,
        };
        let trimmed = text.trim();
        let word: Vec<u32> = if trimmed.contains(',') {
            trimmed
                .split(',')
                .map(|tok| {
                    let tok = tok.trim();
                    tok.parse::<u32>()
                        .map_err(|e| parse_err(format!("bad entry {tok:?}: {e}")))
                })
                .collect::<Result<_>>()?
        } else {
            if trimmed.len() > 9 {
                return Err(parse_err(
                    "digit strings are limited to length 9; use commas".into(),
                ));
            }
            trimmed
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| parse_err(format!("unexpected character {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(word).map_err(|e| parse_err(e.to_string()))
    }
}

/// Precomputed order test for one pattern: a window matches when its entries,
/// read in the order of the pattern's positions of `1, 2, …, k`, increase.
#[derive(Debug, Clone)]
pub(crate) struct Shape {
    order: Vec<usize>,
}

impl Shape {
    pub(crate) fn new(p: &Permutation) -> Self {
        Shape {
            order: p.positions(),
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.order.len()
    }

    #[inline]
    pub(crate) fn matches<T: Ord>(&self, window: &[T]) -> bool {
        debug_assert_eq!(window.len(), self.order.len());
        self.order.windows(2).all(|w| window[w[0]] < window[w[1]])
    }
}

/// The permutation order-isomorphic to a sequence of distinct values.
pub fn standardize<T: Ord>(s: &[T]) -> Result<Permutation> {
    let mut idx: Vec<usize> = (0..s.len()).collect();
    idx.sort_by(|&a, &b| s[a].cmp(&s[b]));
    if idx.windows(2).any(|w| s[w[0]] == s[w[1]]) {
        return Err(Error::invalid(
            "standardization needs pairwise distinct entries",
        ));
    }
    let mut word = vec![0u32; s.len()];
    for (rank, &i) in idx.iter().enumerate() {
        word[i] = rank as u32 + 1;
    }
    Ok(Permutation(word))
}

/// 1-based start positions `i` with `st(σ_i … σ_{i+|τ|-1}) = τ`, ascending.
pub fn occurrences(sigma: &Permutation, tau: &Permutation) -> Vec<usize> {
    let k = tau.len();
    if k > sigma.len() {
        return Vec::new();
    }
    let shape = Shape::new(tau);
    sigma
        .as_slice()
        .windows(k)
        .enumerate()
        .filter(|(_, w)| shape.matches(w))
        .map(|(i, _)| i + 1)
        .collect()
}
