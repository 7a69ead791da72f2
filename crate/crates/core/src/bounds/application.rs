//! Bounds that follow by substituting an `M1` lower bound into a relation
//! that is affine in `M1`.

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::general::{general_zagreb_lower_bound, KernelSpec};
use super::{small, BoundError, BoundId, BoundValue, Direction, Target};
use crate::graph::DegreeSequence;
use crate::scalar::{rat, rational_to_f64, Rational, Scalar};

/// `target = constant + slope · M1` (or `>=` for the M2 relation).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AffineForm {
    pub target: Target,
    #[serde(serialize_with = "ser_rational")]
    pub constant: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub slope: Rational,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&crate::scalar::rational_to_string(r))
}

impl AffineForm {
    pub fn at(&self, m1: &Rational) -> Rational {
        &self.constant + &self.slope * m1
    }

    /// A lower bound on `M1` yields a lower bound here when the slope is
    /// non-negative and an upper bound otherwise.
    pub fn direction(&self) -> Direction {
        if self.slope.is_negative() {
            Direction::Upper
        } else {
            Direction::Lower
        }
    }

    pub fn substitute(&self, id: BoundId, m1_lb: &BoundValue) -> Result<BoundValue, BoundError> {
        check_m1_bound(m1_lb)?;
        let value = m1_lb
            .value
            .affine(&self.constant, &self.slope)
            .ok_or_else(|| {
                BoundError::Parameter("M1 bound must be rational or approximate".into())
            })?;
        Ok(BoundValue {
            id,
            target: self.target,
            direction: self.direction(),
            value,
            alpha: None,
            spec: None,
            via: Some(m1_lb.id),
            equality_predicted: None,
        })
    }
}

fn check_m1_bound(b: &BoundValue) -> Result<(), BoundError> {
    if b.target == Target::M1 && b.direction == Direction::Lower {
        Ok(())
    } else {
        Err(BoundError::Parameter(format!(
            "{} is not a lower bound on M1",
            b.label()
        )))
    }
}

fn order_and_size(ds: &DegreeSequence) -> (Rational, Rational) {
    (small(ds.len()), small(ds.edge_count()))
}

/// `M2 >= 2m² - (n-1)mΔ + (Δ-1)/2 · M1`, with `M1` replaced by `m1_lb`.
pub fn m2_lower_bound(ds: &DegreeSequence, m1_lb: &BoundValue) -> Result<BoundValue, BoundError> {
    if ds.max() == 0 {
        return Err(BoundError::Hypothesis("M2 bound needs Δ >= 1".into()));
    }
    let (n, m) = order_and_size(ds);
    let dmax = small(ds.max());
    let form = AffineForm {
        target: Target::SecondZagreb,
        constant: small(2) * &m * &m - (&n - small(1)) * &m * &dmax,
        slope: (dmax - small(1)) * rat(1, 2),
    };
    form.substitute(BoundId::AppM2, m1_lb)
}

/// `λ_1 >= sqrt(M1/n)`, with `M1` replaced by `m1_lb`.
pub fn spectral_lower_bound(
    ds: &DegreeSequence,
    m1_lb: &BoundValue,
) -> Result<BoundValue, BoundError> {
    check_m1_bound(m1_lb)?;
    let n = small(ds.len());
    let value = match &m1_lb.value {
        Scalar::Exact(r) => Scalar::sqrt_of(r / n),
        other => Scalar::approx((other.to_f64().max(0.0) / rational_to_f64(&n)).sqrt()),
    };
    Ok(BoundValue {
        id: BoundId::AppSpectral,
        target: Target::SpectralRadius,
        direction: Direction::Lower,
        value,
        alpha: None,
        spec: None,
        via: Some(m1_lb.id),
        equality_predicted: None,
    })
}

/// Complement sums of `M1`, `M2` and `F`, each affine in `M1(G)`.
pub fn nordhaus_gaddum_forms(ds: &DegreeSequence) -> [AffineForm; 3] {
    let (n, m) = order_and_size(ds);
    let n1 = &n - small(1);
    [
        AffineForm {
            target: Target::FirstComplementSum,
            constant: &n * &n1 * &n1 - small(4) * &m * &n1,
            slope: small(2),
        },
        AffineForm {
            target: Target::SecondComplementSum,
            constant: &n * &n1 * &n1 * &n1 * rat(1, 2) + small(2) * &m * &m
                - small(3) * &m * &n1 * &n1,
            slope: &n - rat(3, 2),
        },
        AffineForm {
            target: Target::ForgottenComplementSum,
            constant: &n * &n1 * &n1 * &n1 - small(6) * &m * &n1 * &n1,
            slope: small(3) * &n1,
        },
    ]
}

/// Coindex relations: `M2 + M̄2 = 2m² - M1/2`, `M̄1 = 2m(n-1) - M1` and
/// `F + F̄ = (n-1) M1`.
pub fn coindex_forms(ds: &DegreeSequence) -> [AffineForm; 3] {
    let (n, m) = order_and_size(ds);
    let n1 = &n - small(1);
    [
        AffineForm {
            target: Target::SecondCoindexSum,
            constant: small(2) * &m * &m,
            slope: rat(-1, 2),
        },
        AffineForm {
            target: Target::FirstCoindex,
            constant: small(2) * &m * &n1,
            slope: rat(-1, 1),
        },
        AffineForm {
            target: Target::CoindexSum { exponent: 3.0 },
            constant: Rational::zero(),
            slope: n1,
        },
    ]
}

/// `Z_{2α+1} + Z̄_{2α+1} >= (n-1) · bound(Z_{2α})`.
pub fn coindex_sum_lower_bound(
    ds: &DegreeSequence,
    spec: &KernelSpec,
) -> Result<BoundValue, BoundError> {
    let base = general_zagreb_lower_bound(ds, spec)?;
    let factor = small(ds.len() - 1);
    let value = base
        .value
        .affine(&Rational::zero(), &factor)
        .expect("kernel bounds are rational or approximate");
    Ok(BoundValue {
        id: BoundId::AppCoindex,
        target: Target::CoindexSum {
            exponent: 2.0 * spec.alpha + 1.0,
        },
        value,
        ..base
    })
}
