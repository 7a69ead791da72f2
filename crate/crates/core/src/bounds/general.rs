use std::fmt;

use serde::Serialize;

use super::kernel::{lemma1_equality, lemma1_rhs};
use super::{BoundError, BoundId, BoundValue, Direction, Target};
use crate::graph::DegreeSequence;
use crate::indices::{degree_power, integer_exponent, IndexError};
use crate::scalar::{Rational, Scalar};

/// One instance of the unified bound on `Z_{2α}`: sorted positions to
/// remove (at most two) and the kernel pair among the rest. Positions are
/// 1-based, `1` for `Δ` and `n` for `δ`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KernelSpec {
    pub alpha: f64,
    pub removed: Vec<usize>,
    pub pair: (usize, usize),
}

impl KernelSpec {
    /// Normalizes the removal set to ascending order and the pair to `j < k`.
    pub fn new(alpha: f64, removed: &[usize], j: usize, k: usize) -> Self {
        let mut removed = removed.to_vec();
        removed.sort_unstable();
        KernelSpec {
            alpha,
            removed,
            pair: (j.min(k), j.max(k)),
        }
    }

    pub fn pair_only(alpha: f64, j: usize, k: usize) -> Self {
        KernelSpec::new(alpha, &[], j, k)
    }

    /// The extreme-position instance: pair `(1, n)` after removing nothing,
    /// `Δ` alone, or both `Δ` and `δ`.
    pub fn extreme(alpha: f64, removed_count: usize, n: usize) -> Self {
        match removed_count {
            0 => KernelSpec::new(alpha, &[], 1, n),
            1 => KernelSpec::new(alpha, &[1], 2, n),
            _ => KernelSpec::new(alpha, &[1, n], 2, n.saturating_sub(1)),
        }
    }

    pub fn theorem(&self) -> BoundId {
        BoundId::theorem_for(self.removed.len())
    }

    pub fn validate(&self, n: usize) -> Result<(), BoundError> {
        let r = self.removed.len();
        if r > 2 {
            return Err(BoundError::Parameter(format!(
                "at most two removed positions, got {r}"
            )));
        }
        if n < r + 3 {
            return Err(BoundError::Hypothesis(format!(
                "{} needs n >= {}, got n = {n}",
                self.theorem(),
                r + 3
            )));
        }
        let (j, k) = self.pair;
        if j == k {
            return Err(BoundError::Parameter(format!(
                "pair positions must differ, got ({j}, {k})"
            )));
        }
        for &p in self.removed.iter().chain([&j, &k]) {
            if p == 0 || p > n {
                return Err(BoundError::Parameter(format!(
                    "position {p} outside 1..={n}"
                )));
            }
        }
        if r == 2 && self.removed[0] == self.removed[1] {
            return Err(BoundError::Parameter(
                "removed positions must differ".into(),
            ));
        }
        if self.removed.contains(&j) || self.removed.contains(&k) {
            return Err(BoundError::Parameter(format!(
                "pair ({j}, {k}) overlaps removed positions {:?}",
                self.removed
            )));
        }
        Ok(())
    }

    /// Every admissible instance with `removed_count` removed positions,
    /// in lexicographic order of (removed, pair).
    pub fn all(alpha: f64, n: usize, removed_count: usize) -> Vec<KernelSpec> {
        if n < removed_count + 3 {
            return Vec::new();
        }
        let removal_sets: Vec<Vec<usize>> = match removed_count {
            0 => vec![vec![]],
            1 => (1..=n).map(|l| vec![l]).collect(),
            _ => (1..=n)
                .flat_map(|l| (l + 1..=n).map(move |m| vec![l, m]))
                .collect(),
        };
        let mut out = Vec::new();
        for removed in removal_sets {
            let kept: Vec<usize> = (1..=n).filter(|p| !removed.contains(p)).collect();
            for (a, &j) in kept.iter().enumerate() {
                for &k in &kept[a + 1..] {
                    out.push(KernelSpec {
                        alpha,
                        removed: removed.clone(),
                        pair: (j, k),
                    });
                }
            }
        }
        out
    }

    /// All admissible instances with up to two removed positions, sorted
    /// lexicographically by (removed, pair).
    pub fn all_admissible(alpha: f64, n: usize) -> Vec<KernelSpec> {
        let mut out: Vec<KernelSpec> = (0..=2).flat_map(|r| KernelSpec::all(alpha, n, r)).collect();
        out.sort_by(|a, b| (&a.removed, a.pair).cmp(&(&b.removed, b.pair)));
        out
    }
}

impl fmt::Display for KernelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let removed = if self.removed.is_empty() {
            "-".to_string()
        } else {
            self.removed
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "a={}; removed={removed}; pair={},{}",
            self.alpha, self.pair.0, self.pair.1
        )
    }
}

/// `Z_{2α} >= Σ_{removed} d^{2α} + kernel({d_i^α : i not removed}, j, k)`.
///
/// Exact for integer `α`. Negative `α` requires `δ > 0`.
pub fn general_zagreb_lower_bound(
    ds: &DegreeSequence,
    spec: &KernelSpec,
) -> Result<BoundValue, BoundError> {
    let n = ds.len();
    spec.validate(n)?;
    let alpha = spec.alpha;
    if alpha < 0.0 && ds.min() == 0 {
        return Err(IndexError::IsolatedVertex { alpha }.into());
    }

    let kept: Vec<usize> = (1..=n).filter(|p| !spec.removed.contains(p)).collect();
    let local = |p: usize| kept.iter().position(|&q| q == p).expect("pair is kept") + 1;
    let (j, k) = (local(spec.pair.0), local(spec.pair.1));

    let (value, equality) = match integer_exponent(alpha) {
        Some(a) => {
            let pow = |p: usize, e: i32| degree_power(ds.get(p), e).expect("positive degree");
            let xs: Vec<Rational> = kept.iter().map(|&p| pow(p, a)).collect();
            let head: Rational = spec.removed.iter().map(|&p| pow(p, 2 * a)).sum();
            let rhs = lemma1_rhs(&xs, j, k)?;
            (Scalar::Exact(head + rhs), lemma1_equality(&xs, j, k))
        }
        None => {
            let pow = |p: usize, e: f64| (ds.get(p) as f64).powf(e);
            let xs: Vec<f64> = kept.iter().map(|&p| pow(p, alpha)).collect();
            let head: f64 = spec.removed.iter().map(|&p| pow(p, 2.0 * alpha)).sum();
            let rhs = lemma1_rhs(&xs, j, k)?;
            let same: Vec<usize> = kept.iter().map(|&p| ds.get(p)).collect();
            (Scalar::approx(head + rhs), lemma1_equality(&same, j, k))
        }
    };

    Ok(BoundValue {
        id: spec.theorem(),
        target: Target::Zagreb {
            exponent: 2.0 * alpha,
        },
        direction: Direction::Lower,
        value,
        alpha: Some(alpha),
        spec: Some(spec.clone()),
        via: None,
        equality_predicted: Some(equality),
    })
}

/// The `α = 1` pair bound on `M1` for sorted positions `j != k`.
pub fn m1_pair_bound(ds: &DegreeSequence, j: usize, k: usize) -> Result<BoundValue, BoundError> {
    general_zagreb_lower_bound(ds, &KernelSpec::pair_only(1.0, j, k))
}

/// Resolves a named corollary on `ds` and evaluates it. The returned
/// `equality_predicted` reports membership in the stated Γ classes.
pub fn named_bound(ds: &DegreeSequence, id: BoundId) -> Result<BoundValue, BoundError> {
    let layout = id
        .layout()
        .ok_or_else(|| BoundError::Parameter(format!("{id} is not a named corollary")))?;
    let n = ds.len();
    if n < layout.min_order {
        return Err(BoundError::Hypothesis(format!(
            "{id} needs n >= {}, got n = {n}",
            layout.min_order
        )));
    }
    let at = |p: crate::graph::RelPos| p.resolve(n).expect("order checked");
    let removed: Vec<usize> = layout.removed.iter().map(|&p| at(p)).collect();
    let spec = KernelSpec::new(layout.alpha, &removed, at(layout.pair.0), at(layout.pair.1));
    let mut bound = general_zagreb_lower_bound(ds, &spec)?;
    bound.id = id;
    bound.equality_predicted = id
        .stated_equality_classes()
        .map(|classes| classes.iter().any(|c| c.holds(ds)));
    Ok(bound)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModifiedVariant {
    Pair,
    OneRemoved,
    TwoRemoved,
}

impl ModifiedVariant {
    fn removed_count(self) -> usize {
        match self {
            ModifiedVariant::Pair => 0,
            ModifiedVariant::OneRemoved => 1,
            ModifiedVariant::TwoRemoved => 2,
        }
    }
}

/// Lower bound on the modified first Zagreb index, the `α = -1` instance.
pub fn modified_m1_bound(
    ds: &DegreeSequence,
    variant: ModifiedVariant,
    removed: &[usize],
    pair: (usize, usize),
) -> Result<BoundValue, BoundError> {
    if removed.len() != variant.removed_count() {
        return Err(BoundError::Parameter(format!(
            "{variant:?} takes {} removed positions, got {}",
            variant.removed_count(),
            removed.len()
        )));
    }
    general_zagreb_lower_bound(ds, &KernelSpec::new(-1.0, removed, pair.0, pair.1))
}
