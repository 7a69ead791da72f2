//! The mean-and-two-values inequality every bound here is built on:
//!
//! ```text
//! Σ x_i² >= n x̄² + (x_j - x_k)²/2 + 2n/(n-2) · (x̄ - (x_j + x_k)/2)²
//! ```
//!
//! for `n >= 3` reals and `j != k`, with equality iff every `x_i` other
//! than `x_j, x_k` takes the same value. The slack is exactly
//! `Σ_{i ∉ {j,k}} (x_i - x̄_τ)²`, the spread of the remaining values.

use num_traits::{FromPrimitive, Num};

use super::BoundError;

/// Numbers the kernel can be evaluated over (rationals and `f64`).
pub trait KernelScalar: Num + Clone + FromPrimitive + PartialOrd {}
impl<T: Num + Clone + FromPrimitive + PartialOrd> KernelScalar for T {}

fn from_usize<T: KernelScalar>(v: usize) -> T {
    T::from_usize(v).expect("small integer")
}

pub(crate) fn check_pair(n: usize, j: usize, k: usize) -> Result<(), BoundError> {
    if n < 3 {
        return Err(BoundError::Hypothesis(format!(
            "needs at least 3 values, got {n}"
        )));
    }
    if j == k {
        return Err(BoundError::Parameter(format!(
            "pair positions must differ, got ({j}, {k})"
        )));
    }
    for p in [j, k] {
        if p == 0 || p > n {
            return Err(BoundError::Parameter(format!(
                "position {p} outside 1..={n}"
            )));
        }
    }
    Ok(())
}

/// Right-hand side of the kernel inequality; `j`, `k` are 1-based.
pub fn lemma1_rhs<T: KernelScalar>(xs: &[T], j: usize, k: usize) -> Result<T, BoundError> {
    let n = xs.len();
    check_pair(n, j, k)?;
    let nn: T = from_usize(n);
    let two: T = from_usize(2);
    let total = xs.iter().cloned().fold(T::zero(), |a, b| a + b);
    let mean = total / nn.clone();
    let (xj, xk) = (xs[j - 1].clone(), xs[k - 1].clone());

    let spread = xj.clone() - xk.clone();
    let dev = mean.clone() - (xj + xk) / two.clone();
    Ok(nn.clone() * mean.clone() * mean
        + spread.clone() * spread / two.clone()
        + two * nn.clone() / (nn - from_usize(2)) * dev.clone() * dev)
}

/// Whether equality holds: all values off the pair coincide.
pub fn lemma1_equality<T: PartialEq>(xs: &[T], j: usize, k: usize) -> bool {
    let mut rest = xs
        .iter()
        .enumerate()
        .filter(|(i, _)| i + 1 != j && i + 1 != k)
        .map(|(_, x)| x);
    match rest.next() {
        Some(first) => rest.all(|x| x == first),
        None => true,
    }
}
