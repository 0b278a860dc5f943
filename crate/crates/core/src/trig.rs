// SPDX-License-Identifier: Apache-2.0
//! Limit orthogonality, the three-point form, and the square trigonometry
//! on the Chebyshev unit circle.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::nary_owned;
use crate::error::{check_dim, Error, Result};
use crate::scalar::Scalar;
use crate::ultrametric::dist_boxplus;
use crate::vector::{det_infty, inner_infty, norm_infty, Matrix, Vector};

/// `⟨⟨x,y,z⟩⟩∞ = Ϝ({x_i y_i} ∪ {−x_i z_i} ∪ {−y_i z_i} ∪ {z_i²})`.
pub fn inner3_limit(x: &Vector, y: &Vector, z: &Vector) -> Result<Scalar> {
    check_dim(x.dim(), y.dim())?;
    check_dim(x.dim(), z.dim())?;
    if x.dim() == 0 {
        return Err(Error::EmptyIndexSet);
    }
    Ok(nary_owned(inner3_terms(x, y, z)))
}

/// The `4n` terms of the three-point form, in definition order.
pub fn inner3_terms(x: &Vector, y: &Vector, z: &Vector) -> Vec<Scalar> {
    let n = x.dim();
    let mut t = Vec::with_capacity(4 * n);
    t.extend((0..n).map(|i| &x[i] * &y[i]));
    t.extend((0..n).map(|i| -(&x[i] * &z[i])));
    t.extend((0..n).map(|i| -(&y[i] * &z[i])));
    t.extend((0..n).map(|i| &z[i] * &z[i]));
    t
}

/// `[x, y, z]` is right-angled in `z`.
pub fn is_f_right_angled(x: &Vector, y: &Vector, z: &Vector) -> Result<bool> {
    Ok(inner3_limit(x, y, z)?.is_zero())
}

/// Partition of the coordinates into pairs with `x_i y_i + x_j y_j = 0` and
/// at most one leftover index with `x_j y_j = 0`. Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pairing {
    pub pairs: Vec<(usize, usize)>,
    pub rest: Option<usize>,
}

pub fn orthogonal_pairing(x: &Vector, y: &Vector) -> Result<Pairing> {
    if !inner_infty(x, y)?.is_zero() {
        return Err(Error::NotOrthogonal);
    }
    let mut groups: BTreeMap<Scalar, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    let mut zeros = Vec::new();
    for i in 0..x.dim() {
        let p = &x[i] * &y[i];
        match p.sign() {
            Ordering::Equal => zeros.push(i),
            Ordering::Greater => groups.entry(p.abs()).or_default().0.push(i),
            Ordering::Less => groups.entry(p.abs()).or_default().1.push(i),
        }
    }
    let mut pairs = Vec::new();
    for (pos, neg) in groups.values() {
        if pos.len() != neg.len() {
            return Err(Error::NotOrthogonal);
        }
        pairs.extend(pos.iter().copied().zip(neg.iter().copied()));
    }
    pairs.extend(zeros.chunks_exact(2).map(|c| (c[0], c[1])));
    let rest = (zeros.len() % 2 == 1).then(|| zeros[zeros.len() - 1]);
    pairs.sort_unstable();
    Ok(Pairing { pairs, rest })
}

/// `d⊞(x,y) = max(d⊞(x,z), d⊞(y,z))` for a triple right-angled in `z`.
pub fn pythagoras_check(x: &Vector, y: &Vector, z: &Vector) -> Result<bool> {
    if !is_f_right_angled(x, y, z)? {
        return Err(Error::NotRightAngled);
    }
    let h = dist_boxplus(x, y)?;
    Ok(h == dist_boxplus(x, z)?.max(dist_boxplus(y, z)?))
}

fn norms(x: &Vector, y: &Vector) -> Result<Scalar> {
    check_dim(x.dim(), y.dim())?;
    if x.is_zero() || y.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(norm_infty(x) * norm_infty(y))
}

/// `⟨x,y⟩∞ / (‖x‖∞ ‖y‖∞)`.
pub fn cos_infty(x: &Vector, y: &Vector) -> Result<Scalar> {
    let d = norms(x, y)?;
    Ok(inner_infty(x, y)? / d)
}

/// `|x,y|∞ / (‖x‖∞ ‖y‖∞)` in the plane, with `x, y` as the columns.
pub fn sin_infty(x: &Vector, y: &Vector) -> Result<Scalar> {
    check_dim(2, x.dim())?;
    let d = norms(x, y)?;
    Ok(det_infty(&Matrix::from_columns(&[x.clone(), y.clone()])?)? / d)
}

/// An angle of the square, reduced into `[0, 8)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AngleParam {
    theta: Scalar,
}

impl AngleParam {
    pub fn new(theta: &Scalar) -> Self {
        AngleParam {
            theta: theta.rem_euclid(&Scalar::from_int(8)),
        }
    }

    pub fn theta(&self) -> &Scalar {
        &self.theta
    }
}

impl std::fmt::Display for AngleParam {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.theta.fmt(f)
    }
}

/// Arc-length parameter of a point of the unit square `max(|x₁|,|x₂|) = 1`,
/// starting at `(1,0)` and turning counterclockwise.
pub fn alpha(z: &Vector) -> Result<AngleParam> {
    check_dim(2, z.dim())?;
    if !norm_infty(z).is_one() {
        return Err(Error::NotOnUnitSquare);
    }
    let (x1, x2) = (&z[0], &z[1]);
    let one = Scalar::one();
    let q = Scalar::from_int;
    let theta = if x1.is_one() && !x2.is_negative() {
        x2.clone()
    } else if x2.is_one() {
        q(2) - x1
    } else if *x1 == -&one {
        q(4) - x2
    } else if *x2 == -&one {
        q(6) + x1
    } else {
        q(8) + x2
    };
    Ok(AngleParam::new(&theta))
}

pub fn alpha_inv(theta: &AngleParam) -> Vector {
    Vector::new(vec![pcos(theta.theta()), psin(theta.theta())])
}

/// Square cosine, period 8.
pub fn pcos(theta: &Scalar) -> Scalar {
    let t = AngleParam::new(theta).theta;
    let q = Scalar::from_int;
    if t <= q(1) {
        q(1)
    } else if t <= q(3) {
        q(2) - t
    } else if t <= q(5) {
        q(-1)
    } else if t <= q(7) {
        t - q(6)
    } else {
        q(1)
    }
}

/// Square sine, period 8.
pub fn psin(theta: &Scalar) -> Scalar {
    let t = AngleParam::new(theta).theta;
    let q = Scalar::from_int;
    if t <= q(1) {
        t
    } else if t <= q(3) {
        q(1)
    } else if t <= q(5) {
        q(4) - t
    } else if t <= q(7) {
        q(-1)
    } else {
        t - q(8)
    }
}
