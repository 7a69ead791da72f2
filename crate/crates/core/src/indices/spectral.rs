use serde::Serialize;

use super::{IndexError, IndexKind, IndexValue};
use crate::graph::Graph;
use crate::scalar::{Approx, Scalar, DEFAULT_ABS_TOL};

/// Power-iteration controls for [`spectral_radius`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralSettings {
    /// Tolerance attached to the returned value.
    pub abs_tol: f64,
    pub max_iterations: usize,
    /// Stop once successive Rayleigh quotients differ by less than this...
    pub rayleigh_tol: f64,
    /// ...and the eigen-residual `|Bx - ρx|` is below this.
    pub residual_tol: f64,
}

impl Default for SpectralSettings {
    fn default() -> Self {
        SpectralSettings {
            abs_tol: DEFAULT_ABS_TOL,
            max_iterations: 100_000,
            rayleigh_tol: 1e-12,
            residual_tol: 1e-6,
        }
    }
}

/// Largest adjacency eigenvalue `λ_1`.
///
/// Iterates on `A + I`, whose spectrum is shifted into the positive range
/// so that `λ_1 + 1` strictly dominates even for bipartite graphs. Starts
/// from the all-ones vector.
pub fn spectral_radius(g: &Graph, settings: &SpectralSettings) -> Result<IndexValue, IndexError> {
    let n = g.order();
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let apply = |x: &[f64], out: &mut [f64]| {
        for v in 0..n {
            out[v] = x[v] + nbrs[v].iter().map(|&u| x[u]).sum::<f64>();
        }
    };
    let normalize = |x: &mut [f64]| -> f64 {
        let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm > 0.0 {
            x.iter_mut().for_each(|v| *v /= norm);
        }
        norm
    };

    let mut x = vec![1.0; n];
    normalize(&mut x);
    let mut y = vec![0.0; n];
    let mut prev = f64::NAN;
    let mut residual = f64::INFINITY;

    for iter in 0..settings.max_iterations {
        apply(&x, &mut y);
        if normalize(&mut y) < 1e-300 {
            // start vector annihilated; restart from a fixed non-symmetric vector
            x = (0..n)
                .map(|i| 1.0 + (i + 1) as f64 / (n + 1) as f64)
                .collect();
            normalize(&mut x);
            continue;
        }
        std::mem::swap(&mut x, &mut y);

        apply(&x, &mut y);
        let rq: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        residual = x
            .iter()
            .zip(&y)
            .map(|(a, b)| (b - rq * a).powi(2))
            .sum::<f64>()
            .sqrt();
        if iter > 0 && (rq - prev).abs() < settings.rayleigh_tol && residual < settings.residual_tol
        {
            return Ok(IndexValue {
                kind: IndexKind::SpectralRadius,
                alpha: None,
                value: Scalar::Approx(Approx {
                    value: rq - 1.0,
                    abs_tol: settings.abs_tol,
                }),
            });
        }
        prev = rq;
    }
    Err(IndexError::NotConverged {
        iterations: settings.max_iterations,
        residual,
    })
}
