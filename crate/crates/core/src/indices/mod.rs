//! Degree-based indices with their coindices. The adjacency spectral
//! radius comes from power iteration.
//!
//! | kind            | definition                                   |
//! |-----------------|----------------------------------------------|
//! | `Z_α`           | `Σ d_i^α` over vertices                      |
//! | `M1, F, ID, mM1`| `Z_2, Z_3, Z_{-1}, Z_{-2}`                   |
//! | `M2`            | `Σ d_i d_j` over edges                       |
//! | `Z̄_α`           | `Σ (d_i^{α-1} + d_j^{α-1})` over non-edges   |
//! | `M̄2`            | `Σ d_i d_j` over non-edges                   |
//!
//! Non-edges are unordered pairs of distinct vertices. `0^0` is taken as 1,
//! so `Z_0 = n` holds with isolated vertices present.

mod spectral;

pub use spectral::{spectral_radius, SpectralSettings};

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{DegreeSequence, Graph};
use crate::scalar::{int, Rational, Scalar};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IndexError {
    #[error("δ = 0: exponent {alpha} needs every vertex to have positive degree")]
    IsolatedVertex { alpha: f64 },
    #[error(
        "power iteration did not converge after {iterations} iterations (residual {residual:e})"
    )]
    NotConverged { iterations: usize, residual: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IndexKind {
    ZAlpha,
    M1,
    M2,
    F,
    Id,
    ModifiedM1,
    ZAlphaCoindex,
    M1Coindex,
    M2Coindex,
    FCoindex,
    SpectralRadius,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndexValue {
    pub kind: IndexKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    pub value: Scalar,
}

/// `Some(k)` when `alpha` is an integer small enough for exact powers.
pub fn integer_exponent(alpha: f64) -> Option<i32> {
    (alpha.is_finite() && alpha.fract() == 0.0 && alpha.abs() <= 64.0).then_some(alpha as i32)
}

/// `d^k` as a rational; `None` for `0^k` with `k < 0`.
pub fn degree_power(d: usize, k: i32) -> Option<Rational> {
    let base = int(d as i64);
    if k >= 0 {
        Some(num_traits::pow(base, k as usize))
    } else if d == 0 {
        None
    } else {
        Some(num_traits::pow(base, k.unsigned_abs() as usize).recip())
    }
}

fn degree_power_f64(d: usize, alpha: f64) -> Option<f64> {
    if d == 0 {
        return if alpha < 0.0 {
            None
        } else if alpha == 0.0 {
            Some(1.0)
        } else {
            Some(0.0)
        };
    }
    Some((d as f64).powf(alpha))
}

/// Sums `term(d)` over a list of degrees, exactly for integer `alpha`.
fn power_sum<I>(degrees: I, alpha: f64) -> Result<Scalar, IndexError>
where
    I: IntoIterator<Item = usize>,
{
    match integer_exponent(alpha) {
        Some(k) => {
            let mut acc = Rational::zero();
            for d in degrees {
                acc += degree_power(d, k).ok_or(IndexError::IsolatedVertex { alpha })?;
            }
            Ok(Scalar::Exact(acc))
        }
        None => {
            let mut acc = 0.0;
            for d in degrees {
                acc += degree_power_f64(d, alpha).ok_or(IndexError::IsolatedVertex { alpha })?;
            }
            Ok(Scalar::approx(acc))
        }
    }
}

/// `Z_α` straight from a degree sequence.
pub fn general_zagreb_of(ds: &DegreeSequence, alpha: f64) -> Result<Scalar, IndexError> {
    power_sum(ds.as_slice().iter().copied(), alpha)
}

/// Exact `Z_k` for integer `k`.
pub fn general_zagreb_exact(ds: &DegreeSequence, k: i32) -> Result<Rational, IndexError> {
    match general_zagreb_of(ds, k as f64)? {
        Scalar::Exact(r) => Ok(r),
        _ => unreachable!("integer exponent"),
    }
}

pub fn general_zagreb(g: &Graph, alpha: f64) -> Result<IndexValue, IndexError> {
    Ok(IndexValue {
        kind: IndexKind::ZAlpha,
        alpha: Some(alpha),
        value: general_zagreb_of(&g.degree_sequence(), alpha)?,
    })
}

fn named(g: &Graph, kind: IndexKind, k: i32) -> Result<IndexValue, IndexError> {
    Ok(IndexValue {
        kind,
        alpha: None,
        value: general_zagreb_of(&g.degree_sequence(), k as f64)?,
    })
}

pub fn first_zagreb(g: &Graph) -> IndexValue {
    named(g, IndexKind::M1, 2).expect("positive exponent")
}

pub fn forgotten(g: &Graph) -> IndexValue {
    named(g, IndexKind::F, 3).expect("positive exponent")
}

pub fn inverse_degree(g: &Graph) -> Result<IndexValue, IndexError> {
    named(g, IndexKind::Id, -1)
}

pub fn modified_first_zagreb(g: &Graph) -> Result<IndexValue, IndexError> {
    named(g, IndexKind::ModifiedM1, -2)
}

pub fn second_zagreb(g: &Graph) -> IndexValue {
    let deg = g.degrees();
    let sum: i64 = g.edges().map(|(u, v)| (deg[u] * deg[v]) as i64).sum();
    IndexValue {
        kind: IndexKind::M2,
        alpha: None,
        value: Scalar::Exact(int(sum)),
    }
}

/// `Z̄_α`, summed directly over non-adjacent pairs.
pub fn general_zagreb_coindex(g: &Graph, alpha: f64) -> Result<IndexValue, IndexError> {
    let deg = g.degrees();
    if alpha < 1.0 && g.min_degree() == 0 {
        return Err(IndexError::IsolatedVertex { alpha });
    }
    let terms = g.non_edges().flat_map(|(u, v)| [deg[u], deg[v]]);
    Ok(IndexValue {
        kind: IndexKind::ZAlphaCoindex,
        alpha: Some(alpha),
        value: power_sum(terms, alpha - 1.0)?,
    })
}

pub fn first_zagreb_coindex(g: &Graph) -> IndexValue {
    IndexValue {
        kind: IndexKind::M1Coindex,
        alpha: None,
        ..general_zagreb_coindex(g, 2.0).expect("exponent 1")
    }
}

pub fn forgotten_coindex(g: &Graph) -> IndexValue {
    IndexValue {
        kind: IndexKind::FCoindex,
        alpha: None,
        ..general_zagreb_coindex(g, 3.0).expect("exponent 2")
    }
}

pub fn second_zagreb_coindex(g: &Graph) -> IndexValue {
    let deg = g.degrees();
    let sum: i64 = g.non_edges().map(|(u, v)| (deg[u] * deg[v]) as i64).sum();
    IndexValue {
        kind: IndexKind::M2Coindex,
        alpha: None,
        value: Scalar::Exact(int(sum)),
    }
}

/// Everything the `compute` report lists for one graph.
#[derive(Debug, Clone, Serialize)]
pub struct IndexSummary {
    pub n: usize,
    pub m: usize,
    pub degrees: Vec<usize>,
    pub general: Vec<IndexValue>,
    pub m1: IndexValue,
    pub m2: IndexValue,
    pub f: IndexValue,
    pub id: Option<IndexValue>,
    pub modified_m1: Option<IndexValue>,
    pub m1_coindex: IndexValue,
    pub m2_coindex: IndexValue,
    pub f_coindex: IndexValue,
    pub spectral_radius: IndexValue,
}

/// Computes the standard index set plus `Z_α` for each requested `alpha`.
/// Fails if any requested `alpha` is undefined on this graph; `ID` and `mM1`
/// are reported as absent when `δ = 0`.
pub fn summarize(g: &Graph, alphas: &[f64]) -> Result<IndexSummary, IndexError> {
    let general = alphas
        .iter()
        .map(|&a| general_zagreb(g, a))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IndexSummary {
        n: g.order(),
        m: g.size(),
        degrees: g.degree_sequence().as_slice().to_vec(),
        general,
        m1: first_zagreb(g),
        m2: second_zagreb(g),
        f: forgotten(g),
        id: inverse_degree(g).ok(),
        modified_m1: modified_first_zagreb(g).ok(),
        m1_coindex: first_zagreb_coindex(g),
        m2_coindex: second_zagreb_coindex(g),
        f_coindex: forgotten_coindex(g),
        spectral_radius: spectral_radius(g, &SpectralSettings::default())?,
    })
}

/// `(n-1) Z_{k-1}`, which equals `Z_k + Z̄_k`.
pub fn coindex_identity_rhs(ds: &DegreeSequence, k: i32) -> Result<Rational, IndexError> {
    Ok(int(ds.len() as i64 - 1) * general_zagreb_exact(ds, k - 1)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_edge_list;
    use crate::scalar::rat;

    fn exact(v: &IndexValue) -> Rational {
        v.value.as_exact().cloned().expect("exact")
    }

    fn g1() -> Graph {
        parse_edge_list(
            "1 2\n1 5\n1 7\n1 8\n2 5\n2 6\n2 7\n2 8\n3 7\n3 8\n4 5\n4 6\n4 7\n4 8\n5 6\n5 7\n5 8\n6 8\n7 8",
        )
        .unwrap()
    }

    #[test]
    fn table_value_m1_of_g1() {
        assert_eq!(exact(&general_zagreb(&g1(), 2.0).unwrap()), int(198));
        assert_eq!(exact(&first_zagreb(&g1())), int(198));
    }

    #[test]
    fn zero_exponent_counts_vertices() {
        let g = Graph::from_edges(4, &[(0, 1)]).unwrap();
        assert_eq!(exact(&general_zagreb(&g, 0.0).unwrap()), int(4));
        assert_eq!(exact(&general_zagreb(&g, 1.0).unwrap()), int(2));
    }

    #[test]
    fn negative_exponent_rejects_isolated_vertex() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(matches!(
            general_zagreb(&g, -1.0),
            Err(IndexError::IsolatedVertex { .. })
        ));
        assert!(inverse_degree(&g).is_err());
        assert!(general_zagreb_coindex(&g, 0.5).is_err());
        assert!(general_zagreb_coindex(&g, 1.0).is_ok());
    }

    #[test]
    fn second_zagreb_examples() {
        assert_eq!(exact(&second_zagreb(&Graph::complete(3).unwrap())), int(12));
        // r-regular: m r^2
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(exact(&second_zagreb(&c6)), int(6 * 4));
    }

    #[test]
    fn coindex_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(exact(&general_zagreb_coindex(&c5, 2.0).unwrap()), int(20));
        assert_eq!(exact(&second_zagreb_coindex(&c5)), int(20));
        let k5 = Graph::complete(5).unwrap();
        for a in [-1.0, 0.0, 1.0, 2.0, 2.5] {
            assert_eq!(general_zagreb_coindex(&k5, a).unwrap().value.to_f64(), 0.0);
        }
        assert_eq!(exact(&second_zagreb_coindex(&k5)), int(0));
        // G1 via Z_2 + Z̄_2 = (n-1) Z_1
        assert_eq!(exact(&first_zagreb_coindex(&g1())), int(7 * 38 - 198));
    }

    #[test]
    fn negative_and_fractional_exponents() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(exact(&inverse_degree(&p3).unwrap()), rat(5, 2));
        assert_eq!(exact(&modified_first_zagreb(&p3).unwrap()), rat(9, 4));
        let half = general_zagreb(&p3, 0.5).unwrap();
        assert!(!half.value.is_exact());
        assert!((half.value.to_f64() - (2f64.sqrt() + 2.0)).abs() < 1e-12);
    }

    #[test]
    fn summary_on_k4() {
        let s = summarize(&Graph::complete(4).unwrap(), &[2.0]).unwrap();
        assert_eq!(exact(&s.m1), int(36));
        assert_eq!(exact(&s.m2), int(54));
        assert!((s.spectral_radius.value.to_f64() - 3.0).abs() < 1e-9);
        assert_eq!(s.general[0].value, s.m1.value);
    }

    #[test]
    fn summary_with_isolated_vertex() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let s = summarize(&g, &[1.0]).unwrap();
        assert!(s.id.is_none() && s.modified_m1.is_none());
        assert!(summarize(&g, &[-1.0]).is_err());
    }
}
