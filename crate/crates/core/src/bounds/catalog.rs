use super::application::{
    coindex_forms, coindex_sum_lower_bound, m2_lower_bound, nordhaus_gaddum_forms,
    spectral_lower_bound,
};
use super::baseline::baseline_bound;
use super::general::{general_zagreb_lower_bound, named_bound, KernelSpec};
use super::{BoundError, BoundId, BoundValue, Family};
use crate::graph::DegreeSequence;

/// What `bounds` should evaluate on one graph.
#[derive(Debug, Clone, PartialEq)]
pub enum BoundSelection {
    Ids(Vec<BoundId>),
    AllPairs,
    Best,
}

/// The M1 bound substituted into application bounds.
pub const APPLICATION_SOURCE: BoundId = BoundId::CorZte2;

/// Evaluates one id. Theorem ids use the extreme-position instance at
/// `alpha`; corollaries fix their own exponent; application ids expand to
/// one row per derived quantity.
pub fn evaluate(
    ds: &DegreeSequence,
    id: BoundId,
    alpha: f64,
) -> Result<Vec<BoundValue>, BoundError> {
    let n = ds.len();
    Ok(match id.family() {
        Family::Theorem => {
            let r = id.removed_count().expect("theorem id");
            if n < r + 3 {
                return Err(BoundError::Hypothesis(format!(
                    "{id} needs n >= {}, got n = {n}",
                    r + 3
                )));
            }
            vec![general_zagreb_lower_bound(
                ds,
                &KernelSpec::extreme(alpha, r, n),
            )?]
        }
        Family::Corollary => vec![named_bound(ds, id)?],
        Family::Baseline => vec![baseline_bound(ds, id, alpha)?],
        Family::Application => {
            let m1 = named_bound(ds, APPLICATION_SOURCE)?;
            match id {
                BoundId::AppM2 => vec![m2_lower_bound(ds, &m1)?],
                BoundId::AppSpectral => vec![spectral_lower_bound(ds, &m1)?],
                BoundId::AppNg => nordhaus_gaddum_forms(ds)
                    .iter()
                    .map(|f| f.substitute(id, &m1))
                    .collect::<Result<_, _>>()?,
                _ => {
                    let mut rows: Vec<BoundValue> = coindex_forms(ds)
                        .iter()
                        .map(|f| f.substitute(id, &m1))
                        .collect::<Result<_, _>>()?;
                    rows.push(coindex_sum_lower_bound(
                        ds,
                        &KernelSpec::extreme(alpha, 0, n),
                    )?);
                    rows
                }
            }
        }
    })
}

/// Every admissible (removed, pair) instance at `alpha`, in lexicographic order.
pub fn evaluate_all_specs(ds: &DegreeSequence, alpha: f64) -> Result<Vec<BoundValue>, BoundError> {
    let specs = KernelSpec::all_admissible(alpha, ds.len());
    if specs.is_empty() {
        return Err(BoundError::Hypothesis(format!(
            "no admissible instance for n = {}",
            ds.len()
        )));
    }
    specs
        .iter()
        .map(|s| general_zagreb_lower_bound(ds, s))
        .collect()
}

/// The largest bound over all admissible instances; ties go to the
/// lexicographically smallest (removed, pair).
pub fn best_bound(ds: &DegreeSequence, alpha: f64) -> Result<BoundValue, BoundError> {
    let mut best: Option<BoundValue> = None;
    for b in evaluate_all_specs(ds, alpha)? {
        let better = match &best {
            None => true,
            Some(cur) => b.value.compare(&cur.value) == std::cmp::Ordering::Greater,
        };
        if better {
            best = Some(b);
        }
    }
    Ok(best.expect("non-empty"))
}
