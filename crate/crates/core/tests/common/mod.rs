#![allow(dead_code)]

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use patternhom::{PatternSet, Permutation};

pub fn set(s: &str) -> PatternSet {
    s.parse().unwrap()
}

pub fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

pub fn big(v: &[u64]) -> Vec<BigUint> {
    v.iter().map(|&x| BigUint::from(x)).collect()
}

/// Catalog of pattern sets with a representative of every length-4 class.
pub const CATALOG: [&str; 12] = [
    "12", "123", "132", "132;231", "1234", "2413", "2143", "1324", "1423", "1342", "1243", "23154",
];

/// Rearranges `a` into the next permutation in lexicographic order.
pub fn next_permutation(a: &mut [u32]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).unwrap();
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Calls `f` on every permutation of length `n`.
pub fn for_each_perm(n: usize, mut f: impl FnMut(&[u32])) {
    let mut a: Vec<u32> = (1..=n as u32).collect();
    loop {
        f(&a);
        if !next_permutation(&mut a) {
            break;
        }
    }
}

fn is_order_isomorphic(window: &[u32], pattern: &[u32]) -> bool {
    (0..window.len())
        .all(|i| (0..window.len()).all(|j| (window[i] < window[j]) == (pattern[i] < pattern[j])))
}

/// All occurrences `(start, len)` of members of `patterns`, 0-based.
pub fn all_occurrences(word: &[u32], patterns: &[Permutation]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for s in 0..word.len() {
        for p in patterns {
            let k = p.len();
            if s + k <= word.len() && is_order_isomorphic(&word[s..s + k], p.as_slice()) {
                out.push((s, k));
            }
        }
    }
    out
}

/// Number of marked clusters on `word` by number of marked occurrences:
/// increasing starts, each occurrence overlapping the next, covering the word.
pub fn clusters_on(word: &[u32], patterns: &[Permutation]) -> Vec<u64> {
    let occ = all_occurrences(word, patterns);
    let n = word.len();
    let mut by_marked = vec![0u64; n + 1];
    fn walk(
        occ: &[(usize, usize)],
        n: usize,
        last: (usize, usize),
        marked: usize,
        out: &mut [u64],
    ) {
        let end = last.0 + last.1;
        if end == n {
            out[marked] += 1;
        }
        for &(s, k) in occ {
            if s > last.0 && s < end && s + k > end {
                walk(occ, n, (s, k), marked + 1, out);
            }
        }
    }
    for &o in occ.iter().filter(|o| o.0 == 0) {
        walk(&occ, n, o, 1, &mut by_marked);
    }
    by_marked
}

/// Brute-force `cl_{n,q}` for `2 ≤ n`, indexed by `q = marked + 1`.
pub fn brute_cluster_row(set: &PatternSet, n: usize) -> Vec<u64> {
    let mut row = vec![0u64; n + 1];
    for_each_perm(n, |w| {
        for (m, c) in clusters_on(w, set.patterns()).into_iter().enumerate() {
            if c > 0 {
                row[m + 1] += c;
            }
        }
    });
    row
}

/// Avoiders of an arbitrary (not necessarily antichain) list of patterns.
pub fn brute_avoiders(patterns: &[Permutation], n: usize) -> u64 {
    let mut count = 0;
    for_each_perm(n, |w| {
        if all_occurrences(w, patterns).is_empty() {
            count += 1;
        }
    });
    count
}

/// Up–down permutations `σ1 < σ2 > σ3 < …` of length `n`.
pub fn brute_up_down(n: usize) -> u64 {
    let mut count = 0;
    for_each_perm(n, |w| {
        if w.windows(2)
            .enumerate()
            .all(|(i, p)| (p[0] < p[1]) == (i % 2 == 0))
        {
            count += 1;
        }
    });
    count
}

fn factorial(n: usize) -> BigInt {
    (1..=n)
        .map(BigInt::from)
        .product::<BigInt>()
        .max(BigInt::one())
}

/// `n!·[tⁿ](1 - tanh t)` for `n ≤ order`, by exact division of the sinh and
/// cosh series.
pub fn one_minus_tanh(order: usize) -> Vec<BigInt> {
    let term = |n: usize| BigRational::new(BigInt::one(), factorial(n));
    let sinh: Vec<BigRational> = (0..=order)
        .map(|n| {
            if n % 2 == 1 {
                term(n)
            } else {
                BigRational::zero()
            }
        })
        .collect();
    let cosh: Vec<BigRational> = (0..=order)
        .map(|n| {
            if n % 2 == 0 {
                term(n)
            } else {
                BigRational::zero()
            }
        })
        .collect();
    // tanh·cosh = sinh, with cosh(0) = 1
    let mut tanh = vec![BigRational::zero(); order + 1];
    for n in 0..=order {
        let mut acc = sinh[n].clone();
        for k in 1..=n {
            acc -= &cosh[k] * &tanh[n - k];
        }
        tanh[n] = acc;
    }
    (0..=order)
        .map(|n| {
            let one = if n == 0 {
                BigRational::one()
            } else {
                BigRational::zero()
            };
            let c = (one - &tanh[n]) * BigRational::from_integer(factorial(n));
            assert!(c.is_integer());
            c.to_integer()
        })
        .collect()
}
