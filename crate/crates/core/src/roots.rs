//! Smallest positive root of a Golod–Shafarevich kernel and the resulting
//! lower bound `a_n ≥ α⁻ⁿ n!`.

use serde::{Deserialize, Serialize};

use crate::egf::{gs_kernel, GsKernelPoly};
use crate::error::{Error, Result};
use crate::pattern::PatternSet;

pub const DEFAULT_TOL: f64 = 1e-12;
pub const HORIZON: f64 = 64.0;
const FIRST_STEP: f64 = 1.0 / 64.0;

/// An interval `[lo, hi]` with `f(lo) > 0 ≥ f(hi)` and `hi - lo ≤ tol`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RootBracket {
    pub lo: f64,
    pub hi: f64,
}

impl RootBracket {
    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

/// Brackets the smallest positive root of `f`.
///
/// Starting from `f(0) = 1` the search doubles `t` until `f(t) ≤ 0`. All
/// coefficients past degree one are nonnegative, so `f` is convex on
/// `t ≥ 0`; once `f'(t) ≥ 0` the minimum has been passed and is located by
/// bisection on `f'`. A positive minimum means there is no root.
pub fn smallest_positive_root(f: &GsKernelPoly, tol: f64) -> Result<RootBracket> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::invalid(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let no_root = Error::NoRoot { horizon: HORIZON };
    let mut prev = 0.0;
    let mut t = FIRST_STEP;
    let (lo, hi) = loop {
        if t > HORIZON {
            return Err(no_root);
        }
        if f.eval(t) <= 0.0 {
            break (prev, t);
        }
        if f.eval_derivative(t) >= 0.0 {
            let t_min = bisect(prev, t, tol, |x| f.eval_derivative(x) < 0.0);
            if f.eval(t_min) > 0.0 {
                return Err(no_root);
            }
            break (prev, t_min);
        }
        prev = t;
        t *= 2.0;
    };
    let lo_end = bisect_bracket(lo, hi, tol, |x| f.eval(x) > 0.0);
    Ok(lo_end)
}

/// Shrinks `[lo, hi]` where `left(lo)` holds and `left(hi)` fails.
fn bisect_bracket(mut lo: f64, mut hi: f64, tol: f64, left: impl Fn(f64) -> bool) -> RootBracket {
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if left(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    RootBracket { lo, hi }
}

fn bisect(lo: f64, hi: f64, tol: f64, left: impl Fn(f64) -> bool) -> f64 {
    bisect_bracket(lo, hi, tol, left).hi
}

/// `α⁻ⁿ n!` using the upper end of the root bracket, so the value stays a
/// valid lower bound on the number of avoiders.
pub fn lower_bound_from_root(root: &RootBracket, n: usize) -> f64 {
    (1..=n).map(|j| j as f64 / root.hi).product()
}

pub fn asymptotic_lower_bound(set: &PatternSet, n: usize, tol: f64) -> Result<f64> {
    let root = smallest_positive_root(&gs_kernel(set), tol)?;
    Ok(lower_bound_from_root(&root, n))
}
