// SPDX-License-Identifier: Apache-2.0
//! The limit distance `d⊞` and the geometry of its closed balls.

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};
use crate::scalar::Scalar;
use crate::vector::Vector;

/// `d⊞(x,y)`: 0 if `x = y`, otherwise the largest `max(|x_i|, |y_i|)` over the
/// coordinates where `x` and `y` disagree.
pub fn dist_boxplus(x: &Vector, y: &Vector) -> Result<Scalar> {
    check_dim(x.dim(), y.dim())?;
    Ok(x.iter()
        .zip(y.iter())
        .filter(|(a, b)| a != b)
        .map(|(a, b)| a.abs().max(b.abs()))
        .max()
        .unwrap_or_else(Scalar::zero))
}

/// Per-coordinate shape of a closed ball.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum BallCoord {
    /// Members share this coordinate with the center.
    Fixed(Scalar),
    /// Members range over `[-bound, bound]` here; `bound` equals the radius.
    Free(Scalar),
}

/// Closed ball `B⊞(x, α]` as a product of singletons and symmetric intervals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BallDescriptor {
    pub center: Vector,
    pub radius: Scalar,
    pub coords: Vec<BallCoord>,
}

impl BallDescriptor {
    pub fn is_singleton(&self) -> bool {
        self.coords.iter().all(|c| matches!(c, BallCoord::Fixed(_)))
    }

    pub fn is_box(&self) -> bool {
        self.coords.iter().all(|c| matches!(c, BallCoord::Free(_)))
    }
}

/// Fixed where `|x_k| > α`, free with bound `α` where `|x_k| ≤ α`.
pub fn ball_describe(x: &Vector, alpha: &Scalar) -> Result<BallDescriptor> {
    if alpha.is_negative() {
        return Err(Error::NegativeRadius(alpha.to_string()));
    }
    let coords = x
        .iter()
        .map(|c| {
            if c.abs() > *alpha {
                BallCoord::Fixed(c.clone())
            } else {
                BallCoord::Free(alpha.clone())
            }
        })
        .collect();
    Ok(BallDescriptor {
        center: x.clone(),
        radius: alpha.clone(),
        coords,
    })
}

pub fn ball_contains(b: &BallDescriptor, z: &Vector) -> Result<bool> {
    check_dim(b.coords.len(), z.dim())?;
    Ok(b.coords.iter().zip(z.iter()).all(|(c, zk)| match c {
        BallCoord::Fixed(v) => zk == v,
        BallCoord::Free(bound) => zk.abs() <= *bound,
    }))
}

/// Sequence characterization of `Ϝ`-convergence to `x`.
///
/// Nonzero coordinates of `x` must be hit exactly and then kept; zero
/// coordinates must satisfy `|z_i| ≤ eps` over the last quarter of the sequence.
pub fn f_limit_check(sequence: &[Vector], x: &Vector, eps: &Scalar) -> Result<bool> {
    if sequence.is_empty() {
        return Ok(false);
    }
    for z in sequence {
        check_dim(x.dim(), z.dim())?;
    }
    let tail_start = sequence.len() - sequence.len().div_ceil(4);
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            if sequence[tail_start..].iter().any(|z| z[i].abs() > *eps) {
                return Ok(false);
            }
        } else {
            let Some(first) = sequence.iter().position(|z| z[i] == *xi) else {
                return Ok(false);
            };
            if sequence[first..].iter().any(|z| z[i] != *xi) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
