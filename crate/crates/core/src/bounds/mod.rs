//! Lower bounds on `Z_{2α}` and everything derived from them.
//!
//! Every theorem and corollary bound comes from one construction: remove
//! up to two sorted-degree positions, apply the [`kernel`] inequality to
//! `d_i^α` over the rest, and add the removed `d^{2α}` back. The literature
//! bounds these improve on live in [`baseline`], and the M2, spectral,
//! complement and coindex consequences in [`application`].

pub mod application;
pub mod baseline;
mod catalog;
pub mod general;
pub mod kernel;

pub use application::{
    coindex_forms, coindex_sum_lower_bound, m2_lower_bound, nordhaus_gaddum_forms,
    spectral_lower_bound, AffineForm,
};
pub use baseline::baseline_bound;
pub use catalog::{best_bound, evaluate, evaluate_all_specs, BoundSelection};
pub use general::{
    general_zagreb_lower_bound, m1_pair_bound, modified_m1_bound, named_bound, KernelSpec,
    ModifiedVariant,
};
pub use kernel::{lemma1_equality, lemma1_rhs};

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{GammaPattern, Graph, RelPos};
use crate::indices::{self, IndexError};
use crate::scalar::{int, Scalar};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundError {
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error("invalid parameters: {0}")]
    Parameter(String),
    #[error(transparent)]
    Domain(#[from] IndexError),
}

macro_rules! bound_ids {
    ($($variant:ident => $name:literal,)*) => {
        /// Stable identifiers used on the command line and in reports.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum BoundId {
            $($variant,)*
        }

        impl BoundId {
            pub const ALL: &'static [BoundId] = &[$(BoundId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(BoundId::$variant => $name,)*
                }
            }
        }

        impl FromStr for BoundId {
            type Err = BoundError;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($name => Ok(BoundId::$variant),)*
                    other => Err(BoundError::Parameter(format!("unknown bound id {other:?}"))),
                }
            }
        }
    };
}

bound_ids! {
    Thm1 => "thm1",
    Thm2 => "thm2",
    Thm3 => "thm3",
    CorZte2 => "cor_zte2",
    CorZ2te1 => "cor_z2te1",
    CorZ2te2 => "cor_z2te2",
    CorZr31 => "cor_zr31",
    CorZr32 => "cor_zr32",
    CorXu4 => "cor_xu4",
    CorZ24degree => "cor_z24degree",
    BaseXu2 => "base_xu2",
    BaseXu1 => "base_xu1",
    BaseAvg => "base_avg",
    BaseAvg1 => "base_avg1",
    BaseXu3 => "base_xu3",
    BaseRandicDiff => "base_randic_diff",
    BaseDasNg => "base_das_ng",
    Mm1Pair => "mm1_pair",
    Mm1One => "mm1_one",
    Mm1Two => "mm1_two",
    BaseM26 => "base_m26",
    BaseM27 => "base_m27",
    BaseM28 => "base_m28",
    BaseM29 => "base_m29",
    AppM2 => "app_m2",
    AppSpectral => "app_spectral",
    AppNg => "app_ng",
    AppCoindex => "app_coindex",
}

use RelPos::{End, Start};

const fn gp(i: RelPos, j: RelPos) -> GammaPattern {
    GammaPattern::new(i, j)
}

const CLASSES_14: &[GammaPattern] = &[
    gp(Start(1), End(0)),
    gp(Start(2), End(1)),
    gp(Start(1), End(1)),
    gp(Start(2), End(0)),
];
const CLASSES_18: &[GammaPattern] = &[
    gp(Start(1), End(0)),
    gp(Start(1), End(1)),
    gp(Start(1), End(2)),
];
const CLASSES_19: &[GammaPattern] = &[
    gp(Start(1), End(0)),
    gp(Start(3), End(0)),
    gp(Start(2), End(0)),
];
const CLASSES_16: &[GammaPattern] = &[
    gp(Start(1), End(0)),
    gp(Start(3), End(1)),
    gp(Start(3), End(0)),
    gp(Start(2), End(1)),
    gp(Start(2), End(0)),
    gp(Start(1), End(1)),
];
const CLASSES_17: &[GammaPattern] = &[
    gp(Start(1), End(0)),
    gp(Start(2), End(2)),
    gp(Start(2), End(1)),
    gp(Start(2), End(0)),
    gp(Start(1), End(2)),
    gp(Start(1), End(1)),
];
const CLASSES_NINE: &[GammaPattern] = &[
    gp(Start(1), End(0)),
    gp(Start(3), End(2)),
    gp(Start(2), End(2)),
    gp(Start(3), End(1)),
    gp(Start(2), End(1)),
    gp(Start(3), End(0)),
    gp(Start(2), End(0)),
    gp(Start(1), End(2)),
    gp(Start(1), End(1)),
];

/// Sorted-degree layout of a named corollary: exponent, removed positions, pair.
#[derive(Debug, Clone, Copy)]
pub struct NamedLayout {
    pub alpha: f64,
    pub removed: &'static [RelPos],
    pub pair: (RelPos, RelPos),
    pub min_order: usize,
}

impl BoundId {
    pub fn family(self) -> Family {
        use BoundId::*;
        match self {
            Thm1 | Thm2 | Thm3 => Family::Theorem,
            CorZte2 | CorZ2te1 | CorZ2te2 | CorZr31 | CorZr32 | CorXu4 | CorZ24degree | Mm1Pair
            | Mm1One | Mm1Two => Family::Corollary,
            BaseXu2 | BaseXu1 | BaseAvg | BaseAvg1 | BaseXu3 | BaseRandicDiff | BaseDasNg
            | BaseM26 | BaseM27 | BaseM28 | BaseM29 => Family::Baseline,
            AppM2 | AppSpectral | AppNg | AppCoindex => Family::Application,
        }
    }

    /// Number of removed positions for a theorem id.
    pub fn removed_count(self) -> Option<usize> {
        match self {
            BoundId::Thm1 => Some(0),
            BoundId::Thm2 => Some(1),
            BoundId::Thm3 => Some(2),
            _ => None,
        }
    }

    pub fn theorem_for(removed: usize) -> BoundId {
        match removed {
            0 => BoundId::Thm1,
            1 => BoundId::Thm2,
            _ => BoundId::Thm3,
        }
    }

    pub fn layout(self) -> Option<NamedLayout> {
        use BoundId::*;
        let (alpha, removed, pair, min_order): (f64, &'static [RelPos], _, _) = match self {
            CorZte2 => (1.0, &[], (Start(1), End(0)), 3),
            CorZ2te1 => (1.0, &[], (End(1), End(0)), 3),
            CorZ2te2 => (1.0, &[], (Start(1), Start(2)), 3),
            CorZr31 => (1.0, &[Start(1)], (Start(2), End(0)), 4),
            CorZr32 => (1.0, &[End(0)], (Start(1), End(1)), 4),
            CorXu4 => (1.0, &[Start(1), Start(2)], (End(1), End(0)), 5),
            CorZ24degree => (1.0, &[Start(1), End(0)], (Start(2), End(1)), 5),
            Mm1Pair => (-1.0, &[], (Start(1), End(0)), 3),
            Mm1One => (-1.0, &[Start(1)], (Start(2), End(0)), 4),
            Mm1Two => (-1.0, &[Start(1), End(0)], (Start(2), End(1)), 5),
            _ => return None,
        };
        Some(NamedLayout {
            alpha,
            removed,
            pair,
            min_order,
        })
    }

    /// The union of Γ classes claimed to characterize equality, where one is stated.
    pub fn stated_equality_classes(self) -> Option<&'static [GammaPattern]> {
        use BoundId::*;
        Some(match self {
            CorZte2 | Mm1Pair => CLASSES_14,
            CorZ2te1 => CLASSES_18,
            CorZ2te2 => CLASSES_19,
            CorZr31 => CLASSES_16,
            CorZr32 | Mm1One => CLASSES_17,
            CorXu4 | CorZ24degree | Mm1Two => CLASSES_NINE,
            _ => return None,
        })
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for BoundId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Theorem,
    Corollary,
    Baseline,
    Application,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Lower,
    Upper,
}

/// The quantity a bound estimates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Target {
    /// `Z_e(G)`.
    Zagreb {
        exponent: f64,
    },
    SecondZagreb,
    SpectralRadius,
    /// `M1(G) + M1(Ḡ)`.
    FirstComplementSum,
    /// `M2(G) + M2(Ḡ)`.
    SecondComplementSum,
    /// `F(G) + F(Ḡ)`.
    ForgottenComplementSum,
    /// `Z_e(G) + Z̄_e(G)`.
    CoindexSum {
        exponent: f64,
    },
    /// `M2(G) + M̄2(G)`.
    SecondCoindexSum,
    /// `M̄1(G)`.
    FirstCoindex,
}

impl Target {
    pub const M1: Target = Target::Zagreb { exponent: 2.0 };
    pub const MODIFIED_M1: Target = Target::Zagreb { exponent: -2.0 };

    /// True value on `g`.
    pub fn actual(&self, g: &Graph) -> Result<Scalar, IndexError> {
        use indices::*;
        Ok(match *self {
            Target::Zagreb { exponent } => general_zagreb(g, exponent)?.value,
            Target::SecondZagreb => second_zagreb(g).value,
            Target::SpectralRadius => spectral_radius(g, &SpectralSettings::default())?.value,
            Target::FirstComplementSum => {
                sum(first_zagreb(g).value, first_zagreb(&g.complement()).value)
            }
            Target::SecondComplementSum => {
                sum(second_zagreb(g).value, second_zagreb(&g.complement()).value)
            }
            Target::ForgottenComplementSum => {
                sum(forgotten(g).value, forgotten(&g.complement()).value)
            }
            Target::CoindexSum { exponent } => sum(
                general_zagreb(g, exponent)?.value,
                general_zagreb_coindex(g, exponent)?.value,
            ),
            Target::SecondCoindexSum => sum(second_zagreb(g).value, second_zagreb_coindex(g).value),
            Target::FirstCoindex => first_zagreb_coindex(g).value,
        })
    }

    /// Whether [`Target::actual`] depends on the degree sequence alone.
    pub fn degree_determined(&self) -> bool {
        matches!(
            self,
            Target::Zagreb { .. }
                | Target::FirstComplementSum
                | Target::ForgottenComplementSum
                | Target::CoindexSum { .. }
                | Target::FirstCoindex
        )
    }
}

fn sum(a: Scalar, b: Scalar) -> Scalar {
    match (a, b) {
        (Scalar::Exact(x), Scalar::Exact(y)) => Scalar::Exact(x + y),
        (a, b) => Scalar::approx(a.to_f64() + b.to_f64()),
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Zagreb { exponent } => write!(f, "Z_{exponent}"),
            Target::SecondZagreb => f.write_str("M2"),
            Target::SpectralRadius => f.write_str("lambda_1"),
            Target::FirstComplementSum => f.write_str("M1+M1(complement)"),
            Target::SecondComplementSum => f.write_str("M2+M2(complement)"),
            Target::ForgottenComplementSum => f.write_str("F+F(complement)"),
            Target::CoindexSum { exponent } => write!(f, "Z_{exponent}+coZ_{exponent}"),
            Target::SecondCoindexSum => f.write_str("M2+coM2"),
            Target::FirstCoindex => f.write_str("coM1"),
        }
    }
}

/// One evaluated bound.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundValue {
    pub id: BoundId,
    pub target: Target,
    pub direction: Direction,
    pub value: Scalar,
    /// Exponent of the underlying `Z_α` construction, where there is one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spec: Option<KernelSpec>,
    /// The M1 bound substituted into an application bound.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub via: Option<BoundId>,
    /// Equality predicted from the sorted degrees: the stated Γ classes for
    /// named corollaries, the kernel condition for bare theorem instances.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equality_predicted: Option<bool>,
}

impl BoundValue {
    /// Whether the bound is respected by `actual`.
    pub fn holds(&self, actual: &Scalar) -> bool {
        match self.direction {
            Direction::Lower => self.value.compare(actual) != Ordering::Greater,
            Direction::Upper => self.value.compare(actual) != Ordering::Less,
        }
    }

    /// Whether the bound is attained by `actual`.
    pub fn tight(&self, actual: &Scalar) -> bool {
        self.value.compare(actual) == Ordering::Equal
    }

    /// `|actual - bound|` oriented so a valid bound gives a non-negative slack.
    pub fn slack(&self, actual: &Scalar) -> f64 {
        match self.direction {
            Direction::Lower => actual.minus_f64(&self.value),
            Direction::Upper => self.value.minus_f64(actual),
        }
    }

    /// Short human label such as `thm2[a=1; removed=1; pair=2,8]`.
    pub fn label(&self) -> String {
        let mut out = self.id.as_str().to_string();
        let mut parts = Vec::new();
        if let Some(spec) = &self.spec {
            parts.push(spec.to_string());
        } else if let Some(a) = self.alpha {
            if self.id == BoundId::BaseRandicDiff {
                parts.push(format!("a={a}"));
            }
        }
        if let Some(via) = self.via {
            parts.push(format!("via={via}"));
        }
        if self.id.family() == Family::Application {
            parts.push(self.target.to_string());
        }
        if !parts.is_empty() {
            out.push('[');
            out.push_str(&parts.join("; "));
            out.push(']');
        }
        out
    }
}

/// Parses a real exponent such as `2`, `-1` or `0.5`.
pub fn parse_alpha(s: &str) -> Result<f64, BoundError> {
    s.trim()
        .parse::<f64>()
        .ok()
        .filter(|a| a.is_finite())
        .ok_or_else(|| BoundError::Parameter(format!("invalid exponent {s:?}")))
}

pub(crate) fn small(v: usize) -> crate::scalar::Rational {
    int(v as i64)
}
