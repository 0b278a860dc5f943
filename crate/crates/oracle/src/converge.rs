// SPDX-License-Identifier: Apache-2.0
//! Error tracking along a grid of deformation exponents.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use boxplus_core::Scalar;

use crate::PParam;

pub const DEFAULT_P_GRID: [u32; 6] = [1, 2, 4, 8, 16, 32];
pub const DEFAULT_TOL: f64 = 1e-6;

/// Length of the tail that must be non-increasing.
const TAIL: usize = 3;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceReport {
    #[serde(rename = "p")]
    pub p_grid: Vec<u32>,
    #[serde(rename = "error")]
    pub errors: Vec<f64>,
    pub converged: bool,
    pub final_error: f64,
}

impl ConvergenceReport {
    fn from_errors(p_grid: &[u32], errors: Vec<f64>, tol: f64) -> Self {
        let final_error = errors.last().copied().unwrap_or(f64::INFINITY);
        let tail = &errors[errors.len().saturating_sub(TAIL)..];
        let monotone = tail.windows(2).all(|w| w[1] <= w[0]);
        ConvergenceReport {
            p_grid: p_grid.to_vec(),
            converged: !errors.is_empty() && monotone && final_error <= tol,
            errors,
            final_error,
        }
    }

    pub fn tail_non_increasing(&self) -> bool {
        let tail = &self.errors[self.errors.len().saturating_sub(TAIL)..];
        tail.windows(2).all(|w| w[1] <= w[0])
    }
}

/// Evaluates `error(p)` at every grid point (in parallel) and applies the
/// convergence rule: final error within `tol`, non-increasing over the last
/// three entries.
pub fn converge_with(p_grid: &[u32], tol: f64, error: impl Fn(&PParam) -> f64 + Sync) -> ConvergenceReport {
    let errors: Vec<f64> = p_grid.par_iter().map(|&p| error(&PParam::new(p))).collect();
    ConvergenceReport::from_errors(p_grid, errors, tol)
}

/// `|evaluator(p) − limit|` along the grid.
pub fn converge(
    evaluator: impl Fn(&PParam) -> Scalar + Sync,
    limit: &Scalar,
    p_grid: &[u32],
    tol: f64,
) -> ConvergenceReport {
    converge_with(p_grid, tol, |pp| (evaluator(pp) - limit).abs().to_f64())
}
