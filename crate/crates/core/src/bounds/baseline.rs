//! Earlier lower bounds, kept for comparison.
//!
//! | id                 | bound                                                      |
//! |--------------------|------------------------------------------------------------|
//! | `base_xu2`         | `M1 >= 4m²/n + (Δ-δ)²/2`                                   |
//! | `base_xu1`         | `M1 >= Δ² + d_2² + (2m-Δ-d_2)²/(n-2)`                      |
//! | `base_avg`         | `M1 >= Δ² + (2m-Δ)²/(n-1) + (d_2-δ)²/2`                    |
//! | `base_avg1`        | `M1 >= δ² + (2m-δ)²/(n-1) + (Δ-d_{n-1})²/2`                |
//! | `base_xu3`         | `M1 >= Δ² + δ² + (2m-Δ-δ)²/(n-2) + (d_2-d_{n-1})²/2`       |
//! | `base_das_ng`      | `M1 >= 4m²/n + 2(n-2)(Δ-δ)²/(n-1)²`                        |
//! | `base_randic_diff` | `Z_{2α} >= Z_α²/n + (Δ^α-δ^α)²/2`                          |
//! | `base_m26`         | `mM1 >= ID²/n + (1/δ-1/Δ)²/2`                              |
//! | `base_m27`         | `mM1 >= 1/Δ² + (n-1)³/(2m-Δ)²`                             |
//! | `base_m28`         | `mM1 >= 1/Δ² + 1/δ² + sqrt((ID-1/Δ-1/δ)³/(2m-Δ-δ))`        |
//! | `base_m29`         | `mM1 >= 1/Δ² + 1/δ² + (n-2)³/(2m-Δ-δ)²`                    |

use num_traits::{Signed, Zero};

use super::{small, BoundError, BoundId, BoundValue, Direction, Family, Target};
use crate::graph::DegreeSequence;
use crate::indices::{general_zagreb_of, integer_exponent, IndexError};
use crate::scalar::{rat, Rational, Scalar};

fn sq(x: &Rational) -> Rational {
    x * x
}

fn cube(x: &Rational) -> Rational {
    x * x * x
}

fn positive(x: &Rational, what: &str) -> Result<(), BoundError> {
    if x.is_positive() {
        Ok(())
    } else {
        Err(BoundError::Hypothesis(format!("{what} must be positive")))
    }
}

/// Evaluates a baseline bound. `alpha` is only read by `base_randic_diff`.
pub fn baseline_bound(
    ds: &DegreeSequence,
    id: BoundId,
    alpha: f64,
) -> Result<BoundValue, BoundError> {
    if id.family() != Family::Baseline {
        return Err(BoundError::Parameter(format!(
            "{id} is not a baseline bound"
        )));
    }
    let n = ds.len();
    if n < 3 {
        return Err(BoundError::Hypothesis(format!(
            "{id} needs n >= 3, got n = {n}"
        )));
    }
    let nn = small(n);
    let two_m = small(ds.degree_sum());
    let half = rat(1, 2);
    let (dmax, d2, dn1, dmin) = (
        small(ds.max()),
        small(ds.second()),
        small(ds.second_min()),
        small(ds.min()),
    );
    let one = small(1);
    let two = small(2);

    let mut target = Target::M1;
    let mut bound_alpha = None;
    let value = match id {
        BoundId::BaseXu2 => Scalar::Exact(sq(&two_m) / &nn + &half * sq(&(&dmax - &dmin))),
        BoundId::BaseXu1 => {
            Scalar::Exact(sq(&dmax) + sq(&d2) + sq(&(&two_m - &dmax - &d2)) / (&nn - &two))
        }
        BoundId::BaseAvg => Scalar::Exact(
            sq(&dmax) + sq(&(&two_m - &dmax)) / (&nn - &one) + &half * sq(&(&d2 - &dmin)),
        ),
        BoundId::BaseAvg1 => Scalar::Exact(
            sq(&dmin) + sq(&(&two_m - &dmin)) / (&nn - &one) + &half * sq(&(&dmax - &dn1)),
        ),
        BoundId::BaseXu3 => Scalar::Exact(
            sq(&dmax)
                + sq(&dmin)
                + sq(&(&two_m - &dmax - &dmin)) / (&nn - &two)
                + &half * sq(&(&d2 - &dn1)),
        ),
        BoundId::BaseDasNg => Scalar::Exact(
            sq(&two_m) / &nn + &two * (&nn - &two) / sq(&(&nn - &one)) * sq(&(&dmax - &dmin)),
        ),
        BoundId::BaseRandicDiff => {
            if alpha < 0.0 && ds.min() == 0 {
                return Err(IndexError::IsolatedVertex { alpha }.into());
            }
            target = Target::Zagreb {
                exponent: 2.0 * alpha,
            };
            bound_alpha = Some(alpha);
            let z = general_zagreb_of(ds, alpha)?;
            match (integer_exponent(alpha), z) {
                (Some(a), Scalar::Exact(z)) => {
                    let p = |d: usize| crate::indices::degree_power(d, a).expect("positive degree");
                    let spread = p(ds.max()) - p(ds.min());
                    Scalar::Exact(sq(&z) / &nn + &half * sq(&spread))
                }
                (_, z) => {
                    let z = z.to_f64();
                    let spread = (ds.max() as f64).powf(alpha) - (ds.min() as f64).powf(alpha);
                    Scalar::approx(z * z / n as f64 + 0.5 * spread * spread)
                }
            }
        }
        BoundId::BaseM26 | BoundId::BaseM27 | BoundId::BaseM28 | BoundId::BaseM29 => {
            if ds.min() == 0 {
                return Err(IndexError::IsolatedVertex { alpha: -2.0 }.into());
            }
            target = Target::MODIFIED_M1;
            let id_index = general_zagreb_of(ds, -1.0)?
                .as_exact()
                .cloned()
                .expect("integer exponent");
            let (inv_max, inv_min) = (dmax.recip(), dmin.recip());
            match id {
                BoundId::BaseM26 => {
                    Scalar::Exact(sq(&id_index) / &nn + &half * sq(&(&inv_min - &inv_max)))
                }
                BoundId::BaseM27 => {
                    let rest = &two_m - &dmax;
                    positive(&rest, "2m - Δ")?;
                    Scalar::Exact(sq(&inv_max) + cube(&(&nn - &one)) / sq(&rest))
                }
                BoundId::BaseM28 => {
                    let rest = &two_m - &dmax - &dmin;
                    positive(&rest, "2m - Δ - δ")?;
                    let inner = &id_index - &inv_max - &inv_min;
                    let radicand = if inner.is_negative() {
                        Rational::zero()
                    } else {
                        cube(&inner) / &rest
                    };
                    Scalar::Surd {
                        base: sq(&inv_max) + sq(&inv_min),
                        radicand,
                    }
                }
                _ => {
                    let rest = &two_m - &dmax - &dmin;
                    positive(&rest, "2m - Δ - δ")?;
                    Scalar::Exact(sq(&inv_max) + sq(&inv_min) + cube(&(&nn - &two)) / sq(&rest))
                }
            }
        }
        _ => unreachable!("family checked"),
    };

    Ok(BoundValue {
        id,
        target,
        direction: Direction::Lower,
        value,
        alpha: bound_alpha,
        spec: None,
        via: None,
        equality_predicted: None,
    })
}
