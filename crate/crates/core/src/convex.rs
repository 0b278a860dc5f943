// SPDX-License-Identifier: Apache-2.0
//! Two-point limit hulls `Co∞(x,y)`, same-orthant finite hulls, and the
//! distance laws over hulls.

use serde::{Deserialize, Serialize};

use crate::algebra::nary_owned;
use crate::error::{check_dim, Error, Result};
use crate::scalar::Scalar;
use crate::search::{combine, find_coefficients, grid_search, Domain};
use crate::ultrametric::dist_boxplus;
use crate::vector::Vector;

/// Coefficients `(t, r, s, w)` of `t x ⊞ r x ⊞ s y ⊞ w y`, all in `[0,1]` with maximum 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HullCombination {
    pub t: Scalar,
    pub r: Scalar,
    pub s: Scalar,
    pub w: Scalar,
}

impl HullCombination {
    pub fn new(t: Scalar, r: Scalar, s: Scalar, w: Scalar) -> Result<Self> {
        let c = HullCombination { t, r, s, w };
        let all = c.as_array();
        if let Some(bad) = all.iter().find(|v| v.is_negative() || **v > Scalar::one()) {
            return Err(Error::InvalidCombination(format!("{bad} is outside [0,1]")));
        }
        if !all.iter().any(Scalar::is_one) {
            return Err(Error::InvalidCombination("largest coefficient must be 1".into()));
        }
        Ok(c)
    }

    pub fn as_array(&self) -> [Scalar; 4] {
        [self.t.clone(), self.r.clone(), self.s.clone(), self.w.clone()]
    }

    fn from_array([t, r, s, w]: [Scalar; 4]) -> Self {
        HullCombination { t, r, s, w }
    }
}

/// Coordinatewise `Ϝ(t x_i, r x_i, s y_i, w y_i)`.
pub fn co_point(x: &Vector, y: &Vector, c: &HullCombination) -> Result<Vector> {
    check_dim(x.dim(), y.dim())?;
    HullCombination::new(c.t.clone(), c.r.clone(), c.s.clone(), c.w.clone())?;
    Ok(combine(x, y, &c.as_array()))
}

/// A combination reproducing `z`, if the candidate enumeration finds one.
pub fn co_find(x: &Vector, y: &Vector, z: &Vector) -> Result<Option<HullCombination>> {
    check_dim(x.dim(), y.dim())?;
    check_dim(x.dim(), z.dim())?;
    let bounded = x
        .iter()
        .zip(y.iter())
        .zip(z.iter())
        .all(|((a, b), c)| c.abs() <= a.abs().max(b.abs()));
    if !bounded {
        return Ok(None);
    }
    Ok(find_coefficients(x, y, z, Domain::Hull).map(HullCombination::from_array))
}

/// Membership in `Co∞(x,y)`; a positive answer is always backed by an exact
/// reconstruction of `z`.
pub fn co_contains(x: &Vector, y: &Vector, z: &Vector) -> Result<bool> {
    co_find(x, y, z).map(|c| c.is_some())
}

/// Brute-force membership over the coefficient grid of the given step.
pub fn co_grid_find(x: &Vector, y: &Vector, z: &Vector, step: &Scalar) -> Result<Option<HullCombination>> {
    check_dim(x.dim(), y.dim())?;
    check_dim(x.dim(), z.dim())?;
    Ok(grid_search(x, y, z, Domain::Hull, step, &Scalar::one()).map(HullCombination::from_array))
}

/// `true` when every coordinate has a constant sign (zero allowed) across the points.
pub fn same_orthant(points: &[Vector]) -> bool {
    let Some(first) = points.first() else {
        return true;
    };
    (0..first.dim()).all(|i| {
        let pos = points.iter().any(|p| p[i].is_positive());
        let neg = points.iter().any(|p| p[i].is_negative());
        !(pos && neg)
    })
}

/// `⊞_i t_i x^(i)` for points sharing a closed orthant; there it is the
/// coordinatewise signed maximum.
pub fn co_orthant(points: &[Vector], coeffs: &[Scalar]) -> Result<Vector> {
    let first = points.first().ok_or(Error::EmptyList)?;
    check_dim(points.len(), coeffs.len())?;
    for p in points {
        check_dim(first.dim(), p.dim())?;
    }
    if !same_orthant(points) {
        return Err(Error::OrthantViolation);
    }
    if let Some(bad) = coeffs.iter().find(|t| t.is_negative() || **t > Scalar::one()) {
        return Err(Error::InvalidCoefficients(format!("{bad} is outside [0,1]")));
    }
    if !coeffs.iter().any(Scalar::is_one) {
        return Err(Error::InvalidCoefficients("largest coefficient must be 1".into()));
    }
    Ok(Vector::new(
        (0..first.dim())
            .map(|i| nary_owned(points.iter().zip(coeffs).map(|(p, t)| t * &p[i]).collect()))
            .collect(),
    ))
}

/// `d⊞(x,y) = max(d⊞(x,z), d⊞(z,y))` for a member `z` of `Co∞(x,y)`.
pub fn dist_decomposition_check(x: &Vector, y: &Vector, z: &Vector) -> Result<bool> {
    if !co_contains(x, y, z)? {
        return Err(Error::NotAMember(z.to_string()));
    }
    let whole = dist_boxplus(x, y)?;
    let left = dist_boxplus(x, z)?;
    let right = dist_boxplus(z, y)?;
    Ok(whole == left.max(right))
}

/// Largest consecutive distance along the chain.
///
/// When consecutive hulls decompose `Co∞(x^(1), x^(m))` and meet only at
/// shared endpoints this equals `d⊞(x^(1), x^(m))`. Those hypotheses are
/// not checked here.
pub fn chain_distance(points: &[Vector]) -> Result<Scalar> {
    let first = points.first().ok_or(Error::EmptyList)?;
    let mut best = Scalar::zero();
    for w in points.windows(2) {
        check_dim(first.dim(), w[1].dim())?;
        best = best.max(dist_boxplus(&w[0], &w[1])?);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[i64]) -> Vector {
        Vector::from_ints(c)
    }

    fn hc(t: i64, r: i64, s: i64, w: i64) -> HullCombination {
        HullCombination::new(t.into(), r.into(), s.into(), w.into()).unwrap()
    }

    #[test]
    fn hull_points() {
        let x = v(&[3, -1]);
        let y = v(&[1, 2]);
        assert_eq!(co_point(&x, &y, &hc(1, 0, 0, 0)).unwrap(), x);
        assert_eq!(co_point(&x, &y, &hc(0, 0, 1, 0)).unwrap(), y);
        assert!(co_point(&x, &x.neg(), &hc(1, 1, 1, 1)).unwrap().is_zero());
        assert_eq!(co_point(&x, &y, &hc(1, 0, 1, 0)).unwrap(), v(&[3, 2]));
    }

    #[test]
    fn invalid_combinations() {
        assert!(HullCombination::new(Scalar::frac(1, 2), 0.into(), 0.into(), 0.into()).is_err());
        assert!(HullCombination::new(2.into(), 1.into(), 0.into(), 0.into()).is_err());
        assert!(HullCombination::new((-1).into(), 1.into(), 0.into(), 0.into()).is_err());
    }

    #[test]
    fn membership() {
        let x = v(&[3, -1]);
        let y = v(&[1, 2]);
        assert!(co_contains(&x, &y, &x).unwrap());
        assert!(co_contains(&x, &y, &y).unwrap());
        assert!(co_contains(&x, &y, &v(&[3, 2])).unwrap());
        assert!(!co_contains(&x, &y, &v(&[4, 0])).unwrap());
        assert!(!co_contains(&x, &y, &v(&[1, -1])).unwrap());
    }

    #[test]
    fn orthant_hulls() {
        let pts = [v(&[1, 4]), v(&[3, 2])];
        assert_eq!(
            co_orthant(&pts, &[Scalar::one(), Scalar::frac(1, 2)]).unwrap(),
            Vector::new(vec![Scalar::frac(3, 2), Scalar::from_int(4)])
        );
        let neg = [v(&[-1, -4]), v(&[-3, 0])];
        assert_eq!(co_orthant(&neg, &[Scalar::one(), Scalar::one()]).unwrap(), v(&[-3, -4]));
        assert_eq!(
            co_orthant(&[v(&[1, -1]), v(&[-1, 1])], &[Scalar::one(), Scalar::one()]),
            Err(Error::OrthantViolation)
        );
    }

    #[test]
    fn distance_laws() {
        let x = v(&[3, -1]);
        let y = v(&[1, 2]);
        assert!(dist_decomposition_check(&x, &y, &x).unwrap());
        assert!(dist_decomposition_check(&x, &y, &v(&[3, 2])).unwrap());
        assert!(matches!(
            dist_decomposition_check(&x, &y, &v(&[9, 9])),
            Err(Error::NotAMember(_))
        ));
        assert_eq!(chain_distance(&[x.clone(), y.clone()]).unwrap(), dist_boxplus(&x, &y).unwrap());
        assert_eq!(chain_distance(&[x.clone(), x.clone(), x]).unwrap(), Scalar::zero());
    }
}
