//! Truncated exponential generating functions with exact coefficients.
//!
//! An [`Egf`] of order `N` stores `e_n = n!·[tⁿ]f` for `0 ≤ n ≤ N`, so every
//! series in this crate has integer coefficients and products are binomial
//! convolutions.

use std::fmt;
use std::ops::Mul;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::chains::{enumerate_chains, enumerate_clusters, ChainTable};
use crate::error::{Error, Result};
use crate::pattern::PatternSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Egf {
    /// Truncation order `N`.
    pub order: usize,
    #[serde(with = "crate::decimal::vec")]
    pub coeffs: Vec<BigInt>,
}

impl Egf {
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::invalid("a series needs at least the constant term"));
        }
        Ok(Egf {
            order: coeffs.len() - 1,
            coeffs,
        })
    }

    pub fn from_ints<I, T>(coeffs: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Egf::new(coeffs.into_iter().map(Into::into).collect())
    }

    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); order + 1];
        coeffs[0] = BigInt::one();
        Egf { order, coeffs }
    }

    /// `exp(±t)`.
    pub fn exp(order: usize, negative: bool) -> Self {
        let coeffs = (0..=order)
            .map(|n| {
                if negative && n % 2 == 1 {
                    -BigInt::one()
                } else {
                    BigInt::one()
                }
            })
            .collect();
        Egf { order, coeffs }
    }

    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Egf {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Multiplicative inverse to the same order; the constant term must be
    /// `±1`.
    pub fn invert(&self) -> Result<Self> {
        let h0 = &self.coeffs[0];
        if !(h0.is_one() || (-h0).is_one()) {
            return Err(Error::invalid(format!(
                "cannot invert a series with constant term {h0}"
            )));
        }
        let n_max = self.order;
        let mut g: Vec<BigInt> = Vec::with_capacity(n_max + 1);
        g.push(h0.clone());
        let mut binom = vec![BigInt::one()];
        for n in 1..=n_max {
            binom = next_binomial_row(&binom);
            let s: BigInt = (1..=n)
                .map(|k| &binom[k] * &self.coeffs[k] * &g[n - k])
                .sum();
            // h0 is ±1, so dividing by it is multiplying by it
            g.push(-(s * h0));
        }
        Ok(Egf {
            order: n_max,
            coeffs: g,
        })
    }

    /// Binomial convolution, truncated to the smaller order.
    pub fn product(&self, other: &Egf) -> Egf {
        let order = self.order.min(other.order);
        let mut binom = vec![BigInt::one()];
        let mut coeffs = Vec::with_capacity(order + 1);
        for n in 0..=order {
            if n > 0 {
                binom = next_binomial_row(&binom);
            }
            coeffs.push(
                (0..=n)
                    .map(|k| &binom[k] * &self.coeffs[k] * &other.coeffs[n - k])
                    .sum(),
            );
        }
        Egf { order, coeffs }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Coefficients as unsigned counts; fails on a negative entry.
    pub fn to_counts(&self) -> Result<Vec<BigUint>> {
        self.coeffs
            .iter()
            .map(|c| {
                c.to_biguint()
                    .ok_or_else(|| Error::invalid(format!("negative coefficient {c}")))
            })
            .collect()
    }
}

impl Mul for &Egf {
    type Output = Egf;

    fn mul(self, rhs: &Egf) -> Egf {
        self.product(rhs)
    }
}

impl fmt::Display for Egf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

fn next_binomial_row(row: &[BigInt]) -> Vec<BigInt> {
    let mut next = Vec::with_capacity(row.len() + 1);
    next.push(BigInt::one());
    for w in row.windows(2) {
        next.push(&w[0] + &w[1]);
    }
    next.push(BigInt::one());
    next
}

/// The series `Σ_q (-1)^q c_{n,q} tⁿ/n!` whose inverse is the avoider EGF.
pub fn kernel_from_chains(table: &ChainTable) -> Egf {
    let coeffs = table
        .counts
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .map(|(q, c)| {
                    let c = BigInt::from(c.clone());
                    if q % 2 == 0 {
                        c
                    } else {
                        -c
                    }
                })
                .sum()
        })
        .collect();
    Egf {
        order: table.n_max,
        coeffs,
    }
}

/// Avoider counts `a_0 … a_{n_max}` by inverting the chain kernel.
pub fn count_avoiders_via_chains(set: &PatternSet, n_max: usize) -> Result<Egf> {
    kernel_from_chains(&enumerate_chains(set, n_max)?).invert()
}

/// Avoider counts `a_0 … a_{n_max}` by inverting the cluster kernel.
pub fn count_avoiders_via_clusters(set: &PatternSet, n_max: usize) -> Result<Egf> {
    kernel_from_chains(&enumerate_clusters(set, n_max)?).invert()
}

/// The polynomial `1 - t + Σ_{k≥2} |P_k| t^k/k!`, stored factorially
/// normalized: `coeffs = [1, -1, |P_2|, |P_3|, …]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GsKernelPoly {
    #[serde(with = "crate::decimal::vec")]
    coeffs: Vec<BigInt>,
}

impl GsKernelPoly {
    /// From the counts `|P_k|`, where `counts[k]` is the number of patterns of
    /// length `k`; entries at `k < 2` are ignored.
    pub fn from_length_counts<T: Into<BigUint> + Clone>(counts: &[T]) -> Self {
        let mut coeffs = vec![BigInt::one(), -BigInt::one()];
        for c in counts.iter().skip(2) {
            coeffs.push(BigInt::from(c.clone().into()));
        }
        let mut poly = GsKernelPoly { coeffs };
        poly.trim();
        poly
    }

    /// From an explicit factorially normalized coefficient list, which must
    /// start `1, -1` and be nonnegative afterwards.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() < 2 || !coeffs[0].is_one() || !(-&coeffs[1]).is_one() {
            return Err(Error::invalid("kernel coefficients must start with 1, -1"));
        }
        if let Some(c) = coeffs[2..].iter().find(|c| c.is_negative()) {
            return Err(Error::invalid(format!(
                "kernel coefficient {c} of degree >= 2 is negative"
            )));
        }
        let mut poly = GsKernelPoly { coeffs };
        poly.trim();
        Ok(poly)
    }

    /// One pattern of every length `4 ≤ k ≤ degree`, i.e. the truncation of
    /// `e^t - 2t - t²/2 - t³/6`.
    pub fn one_per_length_from_four(degree: usize) -> Self {
        let counts: Vec<u32> = (0..=degree).map(|k| u32::from(k >= 4)).collect();
        GsKernelPoly::from_length_counts(&counts)
    }

    fn trim(&mut self) {
        while self.coeffs.len() > 2 && self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Factorially normalized coefficients `n!·[tⁿ]`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// As a truncated EGF of the given order.
    pub fn to_egf(&self, order: usize) -> Egf {
        let coeffs = (0..=order)
            .map(|n| self.coeffs.get(n).cloned().unwrap_or_default())
            .collect();
        Egf { order, coeffs }
    }

    /// `f(t)` in floating point.
    pub fn eval(&self, t: f64) -> f64 {
        self.eval_scaled(t, 0)
    }

    /// `f'(t)` in floating point.
    pub fn eval_derivative(&self, t: f64) -> f64 {
        self.eval_scaled(t, 1)
    }

    /// `Σ_k e_k t^{k-d}/(k-d)!` for `k ≥ d`.
    fn eval_scaled(&self, t: f64, d: usize) -> f64 {
        let mut term = 1.0; // t^j / j!
        let mut sum = 0.0;
        for (j, c) in self.coeffs.iter().skip(d).enumerate() {
            if j > 0 {
                term *= t / j as f64;
            }
            sum += c.to_f64().unwrap_or(f64::INFINITY) * term;
        }
        sum
    }
}

impl fmt::Display for GsKernelPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("1 - t")?;
        for (k, c) in self.coeffs.iter().enumerate().skip(2) {
            if !c.is_zero() {
                write!(f, " + {c}·t^{k}/{k}!")?;
            }
        }
        Ok(())
    }
}

pub fn gs_kernel(set: &PatternSet) -> GsKernelPoly {
    GsKernelPoly::from_length_counts(
        &set.length_counts()
            .iter()
            .map(|&c| c as u64)
            .collect::<Vec<_>>(),
    )
}

/// `n!·[tⁿ]` of `(1 - t + Σ|P_k|t^k/k!)·g_P` for `n ≤ n_max`. By the
/// Golod–Shafarevich argument this equals `1 + f_H(t)` with `f_H ≥ 0`.
pub fn gs_product(set: &PatternSet, n_max: usize) -> Result<Egf> {
    let g = count_avoiders_via_chains(set, n_max)?;
    Ok(gs_kernel(set).to_egf(n_max).product(&g))
}

/// The product minus one: the generating function of the homology that the
/// inequality discards. Nonnegative whenever the inequality holds.
pub fn gs_defect(set: &PatternSet, n_max: usize) -> Result<Egf> {
    let mut product = gs_product(set, n_max)?;
    product.coeffs[0] -= 1;
    Ok(product)
}

/// Whether the product is `≥ 1` at `n = 0` and `≥ 0` for `1 ≤ n ≤ n_max`.
pub fn verify_gs_inequality(set: &PatternSet, n_max: usize) -> Result<bool> {
    Ok(gs_inequality_holds(&gs_product(set, n_max)?))
}

pub fn gs_inequality_holds(product: &Egf) -> bool {
    product.coeffs[0] >= BigInt::one() && product.coeffs[1..].iter().all(|c| !c.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &str) -> PatternSet {
        s.parse().unwrap()
    }

    fn ints(e: &Egf) -> Vec<i64> {
        e.coeffs.iter().map(|c| c.to_i64().unwrap()).collect()
    }

    #[test]
    fn exp_inverse_is_exp() {
        assert_eq!(Egf::exp(8, true).invert().unwrap(), Egf::exp(8, false));
        assert_eq!(Egf::exp(8, false).invert().unwrap(), Egf::exp(8, true));
    }

    #[test]
    fn inversion_is_an_involution() {
        let h = Egf::from_ints([1, -1, 0, 2, -16, 5, 0, 272]).unwrap();
        assert_eq!(h.invert().unwrap().invert().unwrap(), h);
        let h = Egf::from_ints([-1, 3, 4, -2]).unwrap();
        assert_eq!(h.invert().unwrap().invert().unwrap(), h);
    }

    #[test]
    fn inversion_needs_unit_constant() {
        assert!(Egf::from_ints([2, 1]).unwrap().invert().is_err());
        assert!(Egf::from_ints([0, 1]).unwrap().invert().is_err());
        assert!(Egf::new(vec![]).is_err());
    }

    #[test]
    fn product_is_binomial_convolution() {
        // exp(t)·exp(t) = exp(2t): e_n = 2^n
        let e = Egf::exp(6, false);
        assert_eq!(ints(&(&e * &e)), vec![1, 2, 4, 8, 16, 32, 64]);
        assert_eq!(ints(&(&Egf::exp(6, true) * &e)), vec![1, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn kernels_from_chains() {
        let k = kernel_from_chains(&enumerate_chains(&set("12"), 7).unwrap());
        assert_eq!(k, Egf::exp(7, true));
        let k = kernel_from_chains(&enumerate_chains(&set("123"), 7).unwrap());
        assert_eq!(ints(&k), vec![1, -1, 0, 1, -1, 0, 1, -1]);
        let k = kernel_from_chains(&enumerate_chains(&set("132;231"), 7).unwrap());
        assert_eq!(ints(&k), vec![1, -1, 0, 2, 0, -16, 0, 272]);
    }

    #[test]
    fn avoiders_of_1324() {
        let g = count_avoiders_via_chains(&set("1324"), 9).unwrap();
        assert_eq!(
            ints(&g),
            vec![1, 1, 2, 6, 23, 110, 632, 4229, 32337, 278204]
        );
    }

    #[test]
    fn cluster_pipeline_examples() {
        assert_eq!(
            count_avoiders_via_clusters(&set("123"), 6).unwrap(),
            count_avoiders_via_chains(&set("123"), 6).unwrap()
        );
        assert_eq!(
            ints(&count_avoiders_via_clusters(&set("12"), 6).unwrap()),
            vec![1; 7]
        );
    }

    #[test]
    fn gs_kernel_examples() {
        let k = gs_kernel(&set("1324"));
        assert_eq!(k.coeffs(), &[1, -1, 0, 0, 1].map(BigInt::from));
        assert_eq!(k.to_string(), "1 - t + 1·t^4/4!");
        let k = gs_kernel(&set("132;231"));
        assert_eq!(k.coeffs(), &[1, -1, 0, 2].map(BigInt::from));
        let k = gs_kernel(&set("123;1324"));
        assert_eq!(k.coeffs(), &[1, -1, 0, 1, 1].map(BigInt::from));
        assert!((k.eval(1.0) - (1.0 / 6.0 + 1.0 / 24.0)).abs() < 1e-15);
    }

    #[test]
    fn gs_inequality_examples() {
        assert!(verify_gs_inequality(&set("1324"), 10).unwrap());
        assert!(verify_gs_inequality(&set("123;132"), 8).unwrap());
        // (1 - t + t²/2)·eᵗ: n!·[tⁿ] = 1 - n + C(n, 2)
        let p = gs_product(&set("12"), 6).unwrap();
        assert_eq!(ints(&p), vec![1, 0, 0, 1, 3, 6, 10]);
        let d = gs_defect(&set("12"), 6).unwrap();
        assert_eq!(ints(&d), vec![0, 0, 0, 1, 3, 6, 10]);
    }

    #[test]
    fn explicit_kernel_validation() {
        assert!(GsKernelPoly::from_coeffs(vec![1.into(), (-1).into(), 0.into(), 1.into()]).is_ok());
        assert!(GsKernelPoly::from_coeffs(vec![1.into(), 1.into()]).is_err());
        assert!(GsKernelPoly::from_coeffs(vec![1.into(), (-1).into(), (-2).into()]).is_err());
        assert_eq!(GsKernelPoly::one_per_length_from_four(30).degree(), 30);
    }

    #[test]
    fn serde_uses_decimal_strings() {
        let e = Egf::from_ints([1, -1, 2]).unwrap();
        let json = serde_json::to_string(&e).unwrap();
        assert_eq!(json, r#"{"order":2,"coeffs":["1","-1","2"]}"#);
        assert_eq!(serde_json::from_str::<Egf>(&json).unwrap(), e);
    }
}
