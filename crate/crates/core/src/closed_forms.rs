//! Specialized chain-count recurrences and explicit kernels for pattern
//! sets whose chains admit a direct description.
//!
//! Tables here are indexed by the number `l` of linked patterns, which is one
//! less than the chain index: `l = q - 1`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::chains::ChainTable;
use crate::egf::{kernel_from_chains, Egf};
use crate::error::{Error, Result};
use crate::pattern::{self_overlaps, PatternSet};
use crate::perm::Permutation;

/// Chain counts `c_{n,l}` with `l` the number of linked patterns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LSeriesTable {
    pub n_max: usize,
    /// `counts[n][l]`; row 0 is empty since the empty chain has no `l`.
    #[serde(with = "crate::decimal::table")]
    pub counts: Vec<Vec<BigUint>>,
}

impl LSeriesTable {
    fn zeroed(n_max: usize) -> Self {
        LSeriesTable {
            n_max,
            counts: (0..=n_max).map(|n| vec![BigUint::zero(); n]).collect(),
        }
    }

    pub fn get(&self, n: usize, l: usize) -> BigUint {
        self.counts
            .get(n)
            .and_then(|row| row.get(l))
            .cloned()
            .unwrap_or_default()
    }

    /// Shift to the chain index `q = l + 1` and add the empty 0-chain.
    pub fn to_chain_table(&self) -> ChainTable {
        let mut counts: Vec<Vec<BigUint>> = (0..=self.n_max)
            .map(|n| vec![BigUint::zero(); n + 1])
            .collect();
        counts[0][0] = BigUint::one();
        for (n, row) in self.counts.iter().enumerate() {
            for (l, c) in row.iter().enumerate() {
                counts[n][l + 1] = c.clone();
            }
        }
        ChainTable {
            n_max: self.n_max,
            counts,
        }
    }

    pub fn kernel(&self) -> Egf {
        kernel_from_chains(&self.to_chain_table())
    }
}

/// Pascal's triangle up to a fixed row.
struct Binomials {
    rows: Vec<Vec<BigUint>>,
}

impl Binomials {
    fn new(n_max: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = vec![vec![BigUint::one()]];
        for n in 1..=n_max {
            let prev = &rows[n - 1];
            let mut row = vec![BigUint::one(); n + 1];
            for k in 1..n {
                row[k] = &prev[k - 1] + &prev[k];
            }
            rows.push(row);
        }
        Binomials { rows }
    }

    /// `C(n, k)`, zero outside `0 ≤ k ≤ n`.
    fn get(&self, n: i64, k: i64) -> BigUint {
        if n < 0 || k < 0 || k > n {
            return BigUint::zero();
        }
        self.rows[n as usize][k as usize].clone()
    }
}

fn catalan(b: &Binomials, k: usize) -> BigUint {
    b.get(2 * k as i64, k as i64) / BigUint::from(k + 1)
}

/// Shared shape of the 1324 and 1423 recurrences:
/// `c_{n,l} = Σ_{4 ≤ 2k+2 ≤ n} w(n, k)·c_{n-2k-1, l-k}`.
fn run_recurrence(n_max: usize, weight: impl Fn(usize, usize) -> BigUint) -> LSeriesTable {
    let mut t = LSeriesTable::zeroed(n_max);
    if n_max >= 1 {
        t.counts[1][0] = BigUint::one();
    }
    for n in 4..=n_max {
        for k in (1..).take_while(|k| 2 * k + 2 <= n) {
            let w = weight(n, k);
            if w.is_zero() {
                continue;
            }
            let src = n - 2 * k - 1;
            for l_src in 0..src {
                let c = &t.counts[src][l_src];
                if !c.is_zero() {
                    let add = &w * c;
                    t.counts[n][l_src + k] += add;
                }
            }
        }
    }
    t
}

/// Chains of 1324: a run of `k` patterns overlapping in two entries is
/// counted by the Catalan number `C_k`.
pub fn chains_1324(n_max: usize) -> LSeriesTable {
    let b = Binomials::new(2 * n_max + 2);
    run_recurrence(n_max, |_, k| catalan(&b, k))
}

/// Chains of 1423: weight `C(n-k-2, k)`.
pub fn chains_1423(n_max: usize) -> LSeriesTable {
    let b = Binomials::new(n_max + 1);
    run_recurrence(n_max, |n, k| b.get(n as i64 - k as i64 - 2, k as i64))
}

/// Chains of 2143, refined by the first entry `p`.
///
/// A leading run of `k` patterns overlapping in two entries ends at
/// `a_{2k+2} = q`, which starts the remaining chain as its `(q-2k)`-th
/// smallest entry. The run fixes `a_2 < p` (`p-1` ways), `a_{2k+1} > q`
/// (`n-q` ways) and `a_3 … a_{2k}` inside `(p, q)`.
pub fn chains_2143(n_max: usize) -> LSeriesTable {
    let b = Binomials::new(n_max + 1);
    // refined[n][l][p]
    let mut refined: Vec<Vec<Vec<BigUint>>> = (0..=n_max)
        .map(|n| vec![vec![BigUint::zero(); n + 1]; n.max(1)])
        .collect();
    if n_max >= 1 {
        refined[1][0][1] = BigUint::one();
    }
    for n in 4..=n_max {
        for k in (1..).take_while(|k| 2 * k + 2 <= n) {
            let src = n - 2 * k - 1;
            for p in 2..=n {
                // q ranges over 2k+1 ..= n-1; the q = n term vanishes
                for q in (2 * k + 1).max(p + 1)..n {
                    let w = b.get((q - p - 1) as i64, (2 * k - 2) as i64)
                        * BigUint::from((p - 1) * (n - q));
                    if w.is_zero() {
                        continue;
                    }
                    let rank = q - 2 * k;
                    for l_src in 0..src.max(1) {
                        let c = refined[src]
                            .get(l_src)
                            .and_then(|row| row.get(rank))
                            .cloned()
                            .unwrap_or_default();
                        if !c.is_zero() {
                            refined[n][l_src + k][p] += &w * c;
                        }
                    }
                }
            }
        }
    }
    aggregate(n_max, &refined)
}

fn aggregate(n_max: usize, refined: &[Vec<Vec<BigUint>>]) -> LSeriesTable {
    let mut t = LSeriesTable::zeroed(n_max);
    for (out, levels) in t.counts.iter_mut().zip(refined) {
        for (slot, row) in out.iter_mut().zip(levels) {
            *slot = row.iter().sum();
        }
    }
    t
}

/// Chains of 2413, refined by the first two entries `(p, q)`.
///
/// The first pattern `a_1 … a_4` satisfies `a_3 < a_1 < a_4 < a_2`. If the
/// next pattern starts at `a_3`, dropping `a_1, a_2` leaves a chain whose
/// first entries have ranks `(a_3, a_4 - 1)`. If it starts at `a_4`, dropping
/// `a_1, a_2, a_3` (with `p - 1` choices for `a_3`) leaves a chain whose first
/// entries have ranks `(a_4 - 2, a_5 - 2)` or `(a_4 - 2, a_5 - 3)` depending
/// on whether `a_5` lies below or above `q`.
pub fn chains_2413(n_max: usize) -> LSeriesTable {
    // refined[n][l] is a (n+1)×(n+1) grid indexed by (p, q)
    let grid = |n: usize| vec![vec![BigUint::zero(); n + 1]; n + 1];
    let mut refined: Vec<Vec<Vec<Vec<BigUint>>>> = (0..=n_max)
        .map(|n| (0..n.max(1)).map(|_| grid(n)).collect())
        .collect();
    let get = |tab: &Vec<Vec<Vec<Vec<BigUint>>>>, n: usize, l: usize, p: usize, q: usize| {
        tab.get(n)
            .and_then(|t| t.get(l))
            .and_then(|g| g.get(p))
            .and_then(|row| row.get(q))
            .cloned()
            .unwrap_or_default()
    };
    if n_max >= 4 {
        refined[4][1][2][4] = BigUint::one();
    }
    for n in 5..=n_max {
        for l in 2..n {
            for p in 2..=n {
                for q in p + 2..=n {
                    let mut total = BigUint::zero();
                    // next pattern starts at a_3: r = a_3 < p < s = a_4 < q
                    for r in 1..p {
                        for s in p + 1..q {
                            total += get(&refined, n - 2, l - 1, r, s - 1);
                        }
                    }
                    // next pattern starts at a_4 = r, with a_5 = s > r
                    let mut tail = BigUint::zero();
                    for r in p + 1..q {
                        for s in r + 1..=n {
                            if s == q {
                                continue;
                            }
                            let s_rank = if s < q { s - 2 } else { s - 3 };
                            tail += get(&refined, n - 3, l - 1, r - 2, s_rank);
                        }
                    }
                    total += tail * BigUint::from(p - 1);
                    refined[n][l][p][q] = total;
                }
            }
        }
    }
    let mut t = LSeriesTable::zeroed(n_max);
    for (out, levels) in t.counts.iter_mut().zip(&refined) {
        for (slot, grid) in out.iter_mut().zip(levels) {
            *slot = grid.iter().flatten().sum();
        }
    }
    if n_max >= 1 {
        t.counts[1][0] = BigUint::one();
    }
    t
}

/// Up–down (alternating) permutation counts `E_0, E_1, …, E_n` by the
/// Seidel–Entringer boustrophedon.
pub fn zigzag_numbers(n_max: usize) -> Vec<BigUint> {
    let mut out = vec![BigUint::one()];
    let mut row = vec![BigUint::one()];
    for n in 1..=n_max {
        let mut next = vec![BigUint::zero(); n + 1];
        for k in 1..=n {
            next[k] = &next[k - 1] + &row[n - k];
        }
        out.push(next[n].clone());
        row = next;
    }
    out
}

/// Chains of `{132, 231}` are the up–down permutations of odd length, so
/// `c_{2l+1, l}` is the tangent number `E_{2l+1}`.
pub fn chains_updown(n_max: usize) -> LSeriesTable {
    let e = zigzag_numbers(n_max);
    let mut t = LSeriesTable::zeroed(n_max);
    for n in (1..=n_max).step_by(2) {
        t.counts[n][(n - 1) / 2] = e[n].clone();
    }
    t
}

/// Kernel for the single pattern `12…k`: `+1` at `n ≡ 0`, `-1` at `n ≡ 1`
/// modulo `k`.
pub fn kernel_monotone(k: usize, n_max: usize) -> Result<Egf> {
    if k < 2 {
        return Err(Error::invalid(format!("rise length must be >= 2, got {k}")));
    }
    Egf::from_ints((0..=n_max).map(|n| match n % k {
        0 => 1,
        1 => -1,
        _ => 0,
    }))
}

/// Chains of `12…k`: the `2j`-chain is the rise of length `kj`, the
/// `(2j+1)`-chain the rise of length `kj + 1`.
pub fn chains_monotone(k: usize, n_max: usize) -> Result<LSeriesTable> {
    if k < 2 {
        return Err(Error::invalid(format!("rise length must be >= 2, got {k}")));
    }
    let mut t = LSeriesTable::zeroed(n_max);
    for q in 1..=n_max {
        let n = if q % 2 == 0 {
            k * (q / 2)
        } else {
            k * (q / 2) + 1
        };
        if n <= n_max {
            t.counts[n][q - 1] = BigUint::one();
        }
    }
    Ok(t)
}

/// Chains of `12…a τ (a+1)` of length `m+1`: `∏_{j=1}^{l} C(jm-a, m-a)`
/// chains with `l` patterns, all of length `lm + 1`.
pub fn chains_nonoverlap_rise(a: usize, m: usize, n_max: usize) -> Result<LSeriesTable> {
    if a == 0 || a >= m {
        return Err(Error::invalid(format!(
            "need 1 <= a < m, got a = {a}, m = {m}"
        )));
    }
    let b = Binomials::new(n_max + m);
    let mut t = LSeriesTable::zeroed(n_max);
    let mut product = BigUint::one();
    for l in 0.. {
        let n = l * m + 1;
        if n > n_max {
            break;
        }
        if l > 0 {
            product *= b.get((l * m - a) as i64, (m - a) as i64);
        }
        t.counts[n][l] = product.clone();
    }
    Ok(t)
}

/// Kernel `1 - t + Σ_{l≥1} (-1)^{l+1} ∏_{j=1}^{l} C(jm-a, m-a) t^{lm+1}/(lm+1)!`.
///
/// The pattern's own term (`l = 1`) enters with a plus sign.
pub fn kernel_nonoverlap_rise(a: usize, m: usize, n_max: usize) -> Result<Egf> {
    Ok(chains_nonoverlap_rise(a, m, n_max)?.kernel())
}

/// Chains of a single pattern without self-overlaps of length `m+1`.
///
/// `f_k(p)` counts chains of `k` patterns (length `km + 1`) with first entry
/// `p + 1`. With `a = τ(1) - 1 < b = τ(m+1) - 1`, the first pattern picks `a`
/// entries below `p + 1`, `m - b` above its last entry `q + 1`, and
/// `b - a - 1` in between; the rest is a chain of `k - 1` patterns starting at
/// its `(q + 1 - b)`-th smallest entry. For `a > b` the complement is counted.
pub fn chains_nonoverlap_general(tau: &Permutation, n_max: usize) -> Result<LSeriesTable> {
    let profile = self_overlaps(tau)?;
    if !profile.is_overlap_free() {
        return Err(Error::invalid(format!("pattern {tau} has self-overlaps")));
    }
    let m = tau.len() - 1;
    let (first, last) = (
        tau.as_slice()[0] as usize - 1,
        tau.as_slice()[m] as usize - 1,
    );
    let (a, b) = if first < last {
        (first, last)
    } else {
        (m - first, m - last)
    };
    let bin = Binomials::new(n_max + m + 1);
    let mut t = LSeriesTable::zeroed(n_max);
    if n_max >= 1 {
        t.counts[1][0] = BigUint::one();
    }
    // f[p] for the current k
    let mut f: Vec<BigUint> = vec![BigUint::one()];
    for k in 1.. {
        let len = k * m + 1;
        if len > n_max {
            break;
        }
        let mut next = vec![BigUint::zero(); len];
        for (p, slot) in next.iter_mut().enumerate() {
            let below = bin.get(p as i64, a as i64);
            if below.is_zero() {
                continue;
            }
            for q in p + 1..len {
                let Some(prev) = q.checked_sub(b).and_then(|i| f.get(i)) else {
                    continue;
                };
                if prev.is_zero() {
                    continue;
                }
                let w = bin.get((k * m - q) as i64, (m - b) as i64)
                    * bin.get((q - p - 1) as i64, (b - a - 1) as i64);
                *slot += &below * w * prev;
            }
        }
        t.counts[len][k] = next.iter().sum();
        f = next;
    }
    Ok(t)
}

/// A pattern set with a dedicated chain-count formula.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClosedForm {
    P1324,
    P1423,
    P2143,
    P2413,
    UpDown,
    Rise { k: usize },
    NonoverlapRise { a: usize, m: usize },
    Nonoverlap { pattern: Permutation },
}

impl ClosedForm {
    pub fn chains(&self, n_max: usize) -> Result<LSeriesTable> {
        match self {
            ClosedForm::P1324 => Ok(chains_1324(n_max)),
            ClosedForm::P1423 => Ok(chains_1423(n_max)),
            ClosedForm::P2143 => Ok(chains_2143(n_max)),
            ClosedForm::P2413 => Ok(chains_2413(n_max)),
            ClosedForm::UpDown => Ok(chains_updown(n_max)),
            ClosedForm::Rise { k } => chains_monotone(*k, n_max),
            ClosedForm::NonoverlapRise { a, m } => chains_nonoverlap_rise(*a, *m, n_max),
            ClosedForm::Nonoverlap { pattern } => chains_nonoverlap_general(pattern, n_max),
        }
    }

    pub fn kernel(&self, n_max: usize) -> Result<Egf> {
        match self {
            ClosedForm::Rise { k } => kernel_monotone(*k, n_max),
            ClosedForm::NonoverlapRise { a, m } => kernel_nonoverlap_rise(*a, *m, n_max),
            other => Ok(other.chains(n_max)?.kernel()),
        }
    }

    /// The pattern set this formula counts chains for.
    pub fn pattern_set(&self) -> PatternSet {
        let parse = |s: &str| s.parse::<PatternSet>().expect("static pattern");
        match self {
            ClosedForm::P1324 => parse("1324"),
            ClosedForm::P1423 => parse("1423"),
            ClosedForm::P2143 => parse("2143"),
            ClosedForm::P2413 => parse("2413"),
            ClosedForm::UpDown => parse("132;231"),
            ClosedForm::Rise { k } => {
                PatternSet::new([Permutation::identity(*k)]).expect("rise of length >= 2")
            }
            ClosedForm::NonoverlapRise { a, m } => {
                // 12…a (a+2)…(m+1) (a+1)
                let mut word: Vec<u32> = (1..=*a as u32).collect();
                word.extend(*a as u32 + 2..=*m as u32 + 1);
                word.push(*a as u32 + 1);
                PatternSet::new([Permutation::from_vec_unchecked(word)]).expect("valid shape")
            }
            ClosedForm::Nonoverlap { pattern } => {
                PatternSet::new([pattern.clone()]).expect("pattern of length >= 2")
            }
        }
    }

    /// Recognizes `set` exactly, without symmetries.
    pub fn recognize(set: &PatternSet) -> Option<ClosedForm> {
        let text = set.to_string();
        match text.as_str() {
            "1324" => return Some(ClosedForm::P1324),
            "1423" => return Some(ClosedForm::P1423),
            "2143" => return Some(ClosedForm::P2143),
            "2413" => return Some(ClosedForm::P2413),
            "132;231" => return Some(ClosedForm::UpDown),
            _ => {}
        }
        let [tau] = set.patterns() else {
            return None;
        };
        let word = tau.as_slice();
        let k = word.len();
        if *tau == Permutation::identity(k) {
            return Some(ClosedForm::Rise { k });
        }
        if !self_overlaps(tau).ok()?.is_overlap_free() {
            return None;
        }
        let m = k - 1;
        let a = word[m] as usize - 1;
        let rises = word[..a]
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == i + 1);
        if a >= 1 && a < m && rises {
            return Some(ClosedForm::NonoverlapRise { a, m });
        }
        Some(ClosedForm::Nonoverlap {
            pattern: tau.clone(),
        })
    }
}

/// Symmetry turning the requested set into the one a formula counts. All
/// four preserve avoider counts; identity and complement also preserve the
/// chain tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Symmetry {
    Identity,
    Complement,
    Reverse,
    ReverseComplement,
}

impl Symmetry {
    pub const ALL: [Symmetry; 4] = [
        Symmetry::Identity,
        Symmetry::Complement,
        Symmetry::Reverse,
        Symmetry::ReverseComplement,
    ];

    pub fn apply(self, set: &PatternSet) -> PatternSet {
        match self {
            Symmetry::Identity => set.clone(),
            Symmetry::Complement => set.complement(),
            Symmetry::Reverse => set.reverse(),
            Symmetry::ReverseComplement => set.reverse().complement(),
        }
    }

    pub fn preserves_chains(self) -> bool {
        matches!(self, Symmetry::Identity | Symmetry::Complement)
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Symmetry::Identity => "identity",
            Symmetry::Complement => "complement",
            Symmetry::Reverse => "reverse",
            Symmetry::ReverseComplement => "reverse_complement",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Resolved {
    pub form: ClosedForm,
    pub symmetry: Symmetry,
}

/// Finds a closed form for `set` up to reversal and complement.
pub fn resolve(set: &PatternSet) -> Option<Resolved> {
    Symmetry::ALL.iter().find_map(|&symmetry| {
        ClosedForm::recognize(&symmetry.apply(set)).map(|form| Resolved { form, symmetry })
    })
}

/// Avoider counts `a_0 … a_{n_max}` from a closed-form kernel.
pub fn count_avoiders_closed_form(resolved: &Resolved, n_max: usize) -> Result<Egf> {
    resolved.form.kernel(n_max)?.invert()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn small(t: &LSeriesTable, n: usize, l: usize) -> u64 {
        t.get(n, l).to_u64().unwrap()
    }

    fn avoiders(t: &LSeriesTable) -> Vec<u64> {
        t.kernel()
            .invert()
            .unwrap()
            .coeffs
            .iter()
            .map(|c| c.to_u64().unwrap())
            .collect()
    }

    #[test]
    fn recurrence_1324() {
        let t = chains_1324(10);
        assert_eq!(small(&t, 4, 1), 1);
        assert_eq!(small(&t, 6, 2), 2);
        assert_eq!(small(&t, 7, 2), 1);
        assert_eq!(avoiders(&t)[6], 632);
    }

    #[test]
    fn recurrence_1423() {
        let t = chains_1423(10);
        assert_eq!(small(&t, 4, 1), 1);
        assert_eq!(avoiders(&t)[7], 4218);
    }

    #[test]
    fn recurrence_2143() {
        let t = chains_2143(10);
        assert_eq!(small(&t, 4, 1), 1);
        let a = avoiders(&t);
        assert_eq!(a[8], 32301);
        assert_eq!(a[9], 277962);
    }

    #[test]
    fn recurrence_2413() {
        let t = chains_2413(10);
        assert_eq!(small(&t, 4, 1), 1);
        assert_eq!(small(&t, 7, 2), 9);
        assert_eq!(small(&t, 9, 3), 108);
        let a = avoiders(&t);
        assert_eq!(a[7], 4237);
        assert_eq!(a[9], 279828);
    }

    #[test]
    fn zigzag() {
        let e: Vec<u64> = zigzag_numbers(9)
            .iter()
            .map(|c| c.to_u64().unwrap())
            .collect();
        assert_eq!(e, vec![1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936]);
        let t = chains_updown(7);
        assert_eq!(small(&t, 3, 1), 2);
        assert_eq!(small(&t, 5, 2), 16);
        assert_eq!(small(&t, 7, 3), 272);
    }

    #[test]
    fn monotone_kernels() {
        assert_eq!(kernel_monotone(2, 6).unwrap(), Egf::exp(6, true));
        let k: Vec<i64> = kernel_monotone(3, 7)
            .unwrap()
            .coeffs
            .iter()
            .map(|c| c.to_i64().unwrap())
            .collect();
        assert_eq!(k, vec![1, -1, 0, 1, -1, 0, 1, -1]);
        assert!(kernel_monotone(1, 5).is_err());
        assert_eq!(
            chains_monotone(3, 7).unwrap().kernel(),
            kernel_monotone(3, 7).unwrap()
        );
    }

    #[test]
    fn nonoverlap_rise() {
        let k: Vec<i64> = kernel_nonoverlap_rise(1, 2, 7)
            .unwrap()
            .coeffs
            .iter()
            .map(|c| c.to_i64().unwrap())
            .collect();
        assert_eq!(k, vec![1, -1, 0, 1, 0, -3, 0, 15]);
        let t = chains_nonoverlap_rise(2, 3, 10).unwrap();
        assert_eq!(small(&t, 4, 1), 1);
        assert_eq!(small(&t, 7, 2), 4);
        assert_eq!(small(&t, 10, 3), 28);
        assert!(chains_nonoverlap_rise(3, 3, 10).is_err());
        assert!(chains_nonoverlap_rise(0, 3, 10).is_err());
    }

    #[test]
    fn nonoverlap_general() {
        let t = chains_nonoverlap_general(&"23154".parse().unwrap(), 9).unwrap();
        assert_eq!(
            avoiders(&t),
            vec![1, 1, 2, 6, 24, 119, 708, 4914, 38976, 347776]
        );
        let u = chains_nonoverlap_general(&"21534".parse().unwrap(), 9).unwrap();
        assert_eq!(t, u);
        assert!(chains_nonoverlap_general(&"1324".parse().unwrap(), 8).is_err());
    }

    #[test]
    fn recognition() {
        let r = |s: &str| resolve(&s.parse().unwrap());
        assert_eq!(r("1324").unwrap().form, ClosedForm::P1324);
        assert_eq!(r("4231").unwrap().symmetry, Symmetry::Complement);
        assert_eq!(r("3142").unwrap().form, ClosedForm::P2413);
        assert_eq!(r("231;132").unwrap().form, ClosedForm::UpDown);
        assert_eq!(r("1234").unwrap().form, ClosedForm::Rise { k: 4 });
        assert_eq!(r("4321").unwrap().form, ClosedForm::Rise { k: 4 });
        assert_eq!(
            r("132").unwrap().form,
            ClosedForm::NonoverlapRise { a: 1, m: 2 }
        );
        assert_eq!(
            r("1243").unwrap().form,
            ClosedForm::NonoverlapRise { a: 2, m: 3 }
        );
        assert_eq!(
            r("23154").unwrap().form,
            ClosedForm::Nonoverlap {
                pattern: "23154".parse().unwrap()
            }
        );
        assert!(r("123;132").is_none());
        assert!(r("12435").is_none());
        assert_eq!(
            r("12453").unwrap().form,
            ClosedForm::NonoverlapRise { a: 2, m: 4 }
        );
    }

    #[test]
    fn shape_pattern_sets() {
        assert_eq!(
            ClosedForm::NonoverlapRise { a: 2, m: 3 }
                .pattern_set()
                .to_string(),
            "1243"
        );
        assert_eq!(
            ClosedForm::NonoverlapRise { a: 1, m: 3 }
                .pattern_set()
                .to_string(),
            "1342"
        );
    }
}
