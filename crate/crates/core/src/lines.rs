// SPDX-License-Identifier: Apache-2.0
//! Limit lines `𝒟∞(x,y)`, limit hyperplanes through `n` points, half-lines
//! and parallelism.

use serde::{Deserialize, Serialize};

use crate::algebra::{lower_form, upper_form};
use crate::error::{check_dim, Error, Result};
use crate::scalar::Scalar;
use crate::search::{combine, f4, find_coefficients, grid_search, Domain};
use crate::vector::{det_infty, vec_boxminus, Matrix, Vector};

/// Default coefficient step of the line grid oracle.
pub fn default_grid_step() -> Scalar {
    Scalar::frac(1, 4)
}

/// Default coefficient bound of the line grid oracle.
pub fn default_grid_bound() -> Scalar {
    Scalar::from_int(4)
}

/// Smile-inequality description of a limit line or hyperplane:
/// `z` is a member iff `⌣⁻_i a_i z_i ≤ c ≤ ⌣⁺_i a_i z_i`.
///
/// The lower smile bounds the constant from below and the upper smile from
/// above. Negating both `a` and `c` describes the same set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineForm {
    pub coeffs: Vector,
    pub constant: Scalar,
}

impl LineForm {
    pub fn contains(&self, z: &Vector) -> Result<bool> {
        check_dim(self.coeffs.dim(), z.dim())?;
        let lo = lower_form(&self.coeffs, z)?;
        let hi = upper_form(&self.coeffs, z)?;
        Ok(lo <= self.constant && self.constant <= hi)
    }
}

/// Real coefficients `(t, r, s, w)` with `Ϝ(t,r,s,w) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LineCoefficients {
    pub t: Scalar,
    pub r: Scalar,
    pub s: Scalar,
    pub w: Scalar,
}

impl LineCoefficients {
    pub fn new(t: Scalar, r: Scalar, s: Scalar, w: Scalar) -> Result<Self> {
        let c = LineCoefficients { t, r, s, w };
        if !f4([&c.t, &c.r, &c.s, &c.w]).is_one() {
            return Err(Error::InvalidCoefficients(format!(
                "Ϝ({}, {}, {}, {}) must be 1",
                c.t, c.r, c.s, c.w
            )));
        }
        Ok(c)
    }

    pub fn as_array(&self) -> [Scalar; 4] {
        [self.t.clone(), self.r.clone(), self.s.clone(), self.w.clone()]
    }

    fn from_array([t, r, s, w]: [Scalar; 4]) -> Self {
        LineCoefficients { t, r, s, w }
    }
}

/// Outcome of the candidate search; `NotFound` does not prove non-membership.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum LineMembership {
    Member(LineCoefficients),
    NotFound,
}

impl LineMembership {
    pub fn is_member(&self) -> bool {
        matches!(self, LineMembership::Member(_))
    }
}

fn distinct(x: &Vector, y: &Vector) -> Result<()> {
    check_dim(x.dim(), y.dim())?;
    if x == y {
        Err(Error::DegeneratePair)
    } else {
        Ok(())
    }
}

/// Coordinatewise `Ϝ(t x_i, r x_i, s y_i, w y_i)`.
pub fn line_point(x: &Vector, y: &Vector, c: &LineCoefficients) -> Result<Vector> {
    distinct(x, y)?;
    let c = LineCoefficients::new(c.t.clone(), c.r.clone(), c.s.clone(), c.w.clone())?;
    Ok(combine(x, y, &c.as_array()))
}

/// Limit hyperplane through `n` points of `ℝⁿ`, taken as the columns of `V`:
/// `a_i = |V with row i replaced by ones|∞`, `c = |V|∞`.
pub fn hyperplane_form(points: &[Vector]) -> Result<LineForm> {
    let v = Matrix::from_columns(points)?;
    let constant = det_infty(&v)?;
    if constant.is_zero() {
        return Err(Error::DegenerateConfiguration("|V|∞ = 0".into()));
    }
    let ones = vec![Scalar::one(); v.order()];
    let coeffs = (0..v.order())
        .map(|i| det_infty(&v.with_row(i, &ones)?))
        .collect::<Result<Vec<_>>>()?;
    let form = LineForm {
        coeffs: Vector::new(coeffs),
        constant,
    };
    for p in points {
        if !form.contains(p)? {
            return Err(Error::DegenerateConfiguration(format!(
                "generator {p} fails its own form"
            )));
        }
    }
    Ok(form)
}

/// The limit line through two distinct points of `ℝ²`.
pub fn line2d_form(x: &Vector, y: &Vector) -> Result<LineForm> {
    check_dim(2, x.dim())?;
    distinct(x, y)?;
    hyperplane_form(&[x.clone(), y.clone()])
}

pub fn line_contains_2d(f: &LineForm, z: &Vector) -> Result<bool> {
    check_dim(2, f.coeffs.dim())?;
    f.contains(z)
}

/// Searches for coefficients certifying `z ∈ 𝒟∞(x,y)`.
pub fn line_contains_nd(x: &Vector, y: &Vector, z: &Vector) -> Result<LineMembership> {
    distinct(x, y)?;
    check_dim(x.dim(), z.dim())?;
    Ok(match find_coefficients(x, y, z, Domain::Line) {
        Some(c) => LineMembership::Member(LineCoefficients::from_array(c)),
        None => LineMembership::NotFound,
    })
}

/// Exhaustive search over the coefficient grid `{k·step : |k·step| ≤ bound}⁴`.
pub fn line_grid_search(
    x: &Vector,
    y: &Vector,
    z: &Vector,
    step: &Scalar,
    bound: &Scalar,
) -> Result<Option<LineCoefficients>> {
    distinct(x, y)?;
    check_dim(x.dim(), z.dim())?;
    Ok(grid_search(x, y, z, Domain::Line, step, bound).map(LineCoefficients::from_array))
}

/// `offset + t·direction` for `t ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfLine {
    pub offset: Vector,
    pub direction: Vector,
}

impl HalfLine {
    pub fn point(&self, t: &Scalar) -> Result<Vector> {
        if *t < Scalar::one() {
            return Err(Error::InvalidCoefficients(format!("half-line parameter {t} < 1")));
        }
        self.offset.add(&self.direction.scale(t))
    }
}

/// The two half-lines `x_[J] + t(x⊟y)` and `x_[J] + t(y⊟x)`, `t ≥ 1`, where
/// `J` is the set of coordinates on which `x` and `y` agree.
pub fn half_lines(x: &Vector, y: &Vector) -> Result<(HalfLine, HalfLine)> {
    distinct(x, y)?;
    let offset = Vector::new(
        x.iter()
            .zip(y.iter())
            .map(|(a, b)| if a == b { a.clone() } else { Scalar::zero() })
            .collect(),
    );
    let fwd = vec_boxminus(x, y)?;
    let back = vec_boxminus(y, x)?;
    Ok((
        HalfLine {
            offset: offset.clone(),
            direction: fwd,
        },
        HalfLine {
            offset,
            direction: back,
        },
    ))
}

/// Coefficients placing `x_[J] + t(x⊟y)` on the line: `(1, t, −t, 0)`.
pub fn half_line_certificate(t: &Scalar) -> Result<LineCoefficients> {
    LineCoefficients::new(Scalar::one(), t.clone(), -t, Scalar::zero())
}

/// `α` with `x⊟y = α(u⊟v)`, if the two directions are collinear.
pub fn parallel_factor(x: &Vector, y: &Vector, u: &Vector, v: &Vector) -> Result<Option<Scalar>> {
    distinct(x, y)?;
    distinct(u, v)?;
    check_dim(x.dim(), u.dim())?;
    let d1 = vec_boxminus(x, y)?;
    let d2 = vec_boxminus(u, v)?;
    let Some(k) = (0..d2.dim()).find(|&i| !d2[i].is_zero()) else {
        return Ok(None);
    };
    let alpha = &d1[k] / &d2[k];
    if alpha.is_zero() {
        return Ok(None);
    }
    Ok(d1
        .iter()
        .zip(d2.iter())
        .all(|(a, b)| *a == &alpha * b)
        .then_some(alpha))
}

pub fn is_parallel(x: &Vector, y: &Vector, u: &Vector, v: &Vector) -> Result<bool> {
    Ok(parallel_factor(x, y, u, v)?.is_some())
}

/// Shared coefficient vector and the two constants of a pair of parallel 2D lines.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParallelForm {
    pub coeffs: Vector,
    /// Constant of the line through `x, y`.
    pub c: Scalar,
    /// Constant of the line through `u, v`, rescaled to the shared coefficients.
    pub d: Scalar,
    /// `x⊟y = α(u⊟v)`.
    pub alpha: Scalar,
}

/// Rewrites the line through `u, v` with the coefficients of the line through `x, y`.
pub fn parallel_normal_form(x: &Vector, y: &Vector, u: &Vector, v: &Vector) -> Result<ParallelForm> {
    check_dim(2, x.dim())?;
    let alpha = parallel_factor(x, y, u, v)?.ok_or(Error::NotParallel)?;
    let f = line2d_form(x, y)?;
    let g = line2d_form(u, v)?;
    let k = (0..2)
        .find(|&i| !f.coeffs[i].is_zero())
        .ok_or_else(|| Error::DegenerateConfiguration("zero coefficient vector".into()))?;
    let lambda = &g.coeffs[k] / &f.coeffs[k];
    if lambda.is_zero() || g.coeffs != f.coeffs.scale(&lambda) {
        return Err(Error::NotParallel);
    }
    Ok(ParallelForm {
        d: &g.constant / &lambda,
        coeffs: f.coeffs,
        c: f.constant,
        alpha,
    })
}
