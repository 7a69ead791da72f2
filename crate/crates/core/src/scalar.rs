//! Exact and approximate values.
//!
//! Integer exponents keep everything in [`Rational`]. Non-integer exponents
//! and eigenvalues fall back to [`Approx`], whose comparisons carry an
//! absolute tolerance. [`Scalar::Surd`] holds `base + sqrt(radicand)` so
//! bounds containing one square root still compare exactly against
//! rationals.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

pub type Rational = BigRational;

pub const DEFAULT_ABS_TOL: f64 = 1e-9;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// `p/q` with `q > 0`; integers keep the explicit `/1`.
pub fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (
            p.trim().parse::<BigInt>().ok()?,
            q.trim().parse::<BigInt>().ok()?,
        ),
        None => (s.trim().parse::<BigInt>().ok()?, BigInt::one()),
    };
    (!q.is_zero()).then(|| Rational::new(p, q))
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// A float whose comparisons allow `abs_tol` of slack.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Approx {
    pub value: f64,
    pub abs_tol: f64,
}

impl Approx {
    pub fn new(value: f64) -> Self {
        Approx {
            value,
            abs_tol: DEFAULT_ABS_TOL,
        }
    }

    /// `self <= other` up to the tolerance.
    pub fn le(&self, other: f64) -> bool {
        self.value <= other + self.abs_tol
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Exact(Rational),
    Approx(Approx),
    /// `base + sqrt(radicand)`, radicand >= 0.
    Surd {
        base: Rational,
        radicand: Rational,
    },
}

impl Scalar {
    pub fn exact(r: Rational) -> Self {
        Scalar::Exact(r)
    }

    pub fn approx(v: f64) -> Self {
        Scalar::Approx(Approx::new(v))
    }

    /// `sqrt(radicand)`; negative radicands clamp to zero.
    pub fn sqrt_of(radicand: Rational) -> Self {
        let radicand = if radicand.is_negative() {
            Rational::zero()
        } else {
            radicand
        };
        Scalar::Surd {
            base: Rational::zero(),
            radicand,
        }
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            Scalar::Exact(r) => Some(r),
            Scalar::Surd { base, radicand } if radicand.is_zero() => Some(base),
            _ => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, Scalar::Approx(_))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => rational_to_f64(r),
            Scalar::Approx(a) => a.value,
            Scalar::Surd { base, radicand } => {
                rational_to_f64(base) + rational_to_f64(radicand).sqrt()
            }
        }
    }

    fn tolerance(&self) -> f64 {
        match self {
            Scalar::Approx(a) => a.abs_tol,
            _ => 0.0,
        }
    }

    /// `a + b * self`. Only defined for exact or approximate values.
    pub fn affine(&self, a: &Rational, b: &Rational) -> Option<Scalar> {
        match self {
            Scalar::Exact(r) => Some(Scalar::Exact(a + b * r)),
            Scalar::Approx(x) => Some(Scalar::Approx(Approx {
                value: rational_to_f64(a) + rational_to_f64(b) * x.value,
                abs_tol: x.abs_tol * rational_to_f64(b).abs().max(1.0),
            })),
            Scalar::Surd { .. } => None,
        }
    }

    /// Compares two values. Exact when neither side is approximate;
    /// otherwise differences within the larger tolerance count as equal.
    pub fn compare(&self, other: &Scalar) -> Ordering {
        if let (Some(a), Some(b)) = (self.as_exact(), other.as_exact()) {
            return a.cmp(b);
        }
        match (self, other) {
            (Scalar::Surd { base, radicand }, Scalar::Exact(c)) => surd_cmp(base, radicand, c),
            (Scalar::Exact(c), Scalar::Surd { base, radicand }) => {
                surd_cmp(base, radicand, c).reverse()
            }
            _ => {
                // two surds: no exact route, allow rounding noise only
                let floor = if self.is_exact() && other.is_exact() {
                    1e-12
                } else {
                    0.0
                };
                let tol = self.tolerance().max(other.tolerance()).max(floor);
                let (a, b) = (self.to_f64(), other.to_f64());
                if (a - b).abs() <= tol {
                    Ordering::Equal
                } else {
                    a.partial_cmp(&b).unwrap_or(Ordering::Equal)
                }
            }
        }
    }

    /// `self - other` as a float, for reporting slack.
    pub fn minus_f64(&self, other: &Scalar) -> f64 {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => rational_to_f64(&(a - b)),
            _ => self.to_f64() - other.to_f64(),
        }
    }

    /// Exact difference when both sides are rational.
    pub fn minus_exact(&self, other: &Scalar) -> Option<Rational> {
        Some(self.as_exact()? - other.as_exact()?)
    }
}

/// Compares `base + sqrt(radicand)` with `c`.
fn surd_cmp(base: &Rational, radicand: &Rational, c: &Rational) -> Ordering {
    let rhs = c - base;
    if rhs.is_negative() {
        // sqrt(r) >= 0 > rhs
        return Ordering::Greater;
    }
    radicand.cmp(&(&rhs * &rhs))
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => f.write_str(&rational_to_string(r)),
            Scalar::Approx(a) => write!(f, "{}", a.value),
            Scalar::Surd { base, radicand } if base.is_zero() => {
                write!(f, "sqrt({})", rational_to_string(radicand))
            }
            Scalar::Surd { base, radicand } => write!(
                f,
                "{} + sqrt({})",
                rational_to_string(base),
                rational_to_string(radicand)
            ),
        }
    }
}

/// Serialized as `{"exact": "p/q" | null, "approx": <f64>, "decimal": "<6 places>"}`.
impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Scalar", 3)?;
        let exact = match self {
            Scalar::Approx(_) => None,
            other => Some(other.to_string()),
        };
        st.serialize_field("exact", &exact)?;
        st.serialize_field("approx", &self.to_f64())?;
        st.serialize_field("decimal", &format!("{:.6}", self.to_f64()))?;
        st.end()
    }
}
