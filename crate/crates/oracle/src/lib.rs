// SPDX-License-Identifier: Apache-2.0
//! Finite-`p` deformed arithmetic.
//!
//! With `q = 2p+1` and `φ_p(λ) = λ^q`, every deformed operation is
//! `φ_p⁻¹` of an ordinary sum of `q`-th powers. The sums are computed in
//! exact rationals and only the final real root is rounded, to
//! `PParam::bits` binary digits, so cancellation is never lost to rounding.

pub mod bridge;
pub mod converge;
pub mod filter;
pub mod sets;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use boxplus_core::error::{Error, Result};
use boxplus_core::vector::{signed_permutations, Matrix, Vector, MAX_DET_ORDER};
use boxplus_core::Scalar;

pub use converge::{converge, converge_with, ConvergenceReport, DEFAULT_P_GRID, DEFAULT_TOL};

/// Deformation exponent and working precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PParam {
    p: u32,
    bits: u64,
}

impl PParam {
    pub fn min_bits(p: u32) -> u64 {
        64 + 16 * (2 * p as u64 + 1)
    }

    pub fn new(p: u32) -> Self {
        PParam {
            p,
            bits: Self::min_bits(p),
        }
    }

    /// `None` when `bits` is below `64 + 16(2p+1)`.
    pub fn with_bits(p: u32, bits: u64) -> Option<Self> {
        (bits >= Self::min_bits(p)).then_some(PParam { p, bits })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// `2p + 1`.
    pub fn q(&self) -> u32 {
        2 * self.p + 1
    }
}

/// `r^(1/k)` rounded toward zero to `bits` fractional binary digits, real
/// branch for odd `k`. Even `k` expects `r ≥ 0`.
fn root(r: &Scalar, k: u32, bits: u64) -> Scalar {
    if r.is_zero() || k == 1 {
        return r.clone();
    }
    debug_assert!(k % 2 == 1 || !r.is_negative());
    let scaled = (r.numer().abs() << (k as u64 * bits)) / r.denom();
    let m = scaled.nth_root(k);
    let m = if r.is_negative() { -m } else { m };
    Scalar::from_bigs(m, BigInt::one() << bits).expect("nonzero denominator")
}

/// `φ_p⁻¹`.
pub fn phi_inv(r: &Scalar, pp: &PParam) -> Scalar {
    root(r, pp.q(), pp.bits)
}

/// `(Σ φ_p(x_i))^(1/q)`.
pub fn p_sum(values: &[Scalar], pp: &PParam) -> Result<Scalar> {
    if values.is_empty() {
        return Err(Error::EmptyList);
    }
    Ok(phi_inv(&power_sum(values, pp.q()), pp))
}

pub fn p_plus(a: &Scalar, b: &Scalar, pp: &PParam) -> Scalar {
    phi_inv(&(a.pow(pp.q()) + b.pow(pp.q())), pp)
}

/// `a ⊟_p b = φ_p⁻¹(a^q − b^q)`.
pub fn p_minus(a: &Scalar, b: &Scalar, pp: &PParam) -> Scalar {
    phi_inv(&(a.pow(pp.q()) - b.pow(pp.q())), pp)
}

fn power_sum(values: &[Scalar], q: u32) -> Scalar {
    values.iter().map(|v| v.pow(q)).sum()
}

/// Exact test of `Σ x_i^(2p+1) = 0`.
pub fn exact_power_sum_is_zero(values: &[Scalar], p: u32) -> bool {
    power_sum(values, 2 * p + 1).is_zero()
}

fn same_dim(x: &Vector, y: &Vector) -> Result<()> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            found: y.dim(),
        });
    }
    Ok(())
}

fn inner_power(x: &Vector, y: &Vector, q: u32) -> Scalar {
    x.iter().zip(y.iter()).map(|(a, b)| (a * b).pow(q)).sum()
}

fn norm_power(x: &Vector, q: u32) -> Scalar {
    x.iter().map(|a| a.pow(2 * q)).sum()
}

/// `(Σ x_i^q y_i^q)^(1/q)`.
pub fn p_inner(x: &Vector, y: &Vector, pp: &PParam) -> Result<Scalar> {
    same_dim(x, y)?;
    Ok(phi_inv(&inner_power(x, y, pp.q()), pp))
}

/// `(Σ |x_i|^(2q))^(1/(2q))`.
pub fn p_norm(x: &Vector, pp: &PParam) -> Scalar {
    root(&norm_power(x, pp.q()), 2 * pp.q(), pp.bits)
}

/// `‖x ⊟_p y‖_{φ_p} = (Σ (x_i^q − y_i^q)²)^(1/(2q))`.
pub fn p_dist(x: &Vector, y: &Vector, pp: &PParam) -> Result<Scalar> {
    same_dim(x, y)?;
    Ok(root(&p_dist_power(x, y, pp.q()), 2 * pp.q(), pp.bits))
}

fn p_dist_power(x: &Vector, y: &Vector, q: u32) -> Scalar {
    x.iter()
        .zip(y.iter())
        .map(|(a, b)| {
            let d = a.pow(q) - b.pow(q);
            &d * &d
        })
        .sum()
}

/// `d_{φ_p}(x,y)² = (Σ (x_i^q − y_i^q)²)^(1/q)`.
pub fn p_dist_sq(x: &Vector, y: &Vector, pp: &PParam) -> Result<Scalar> {
    same_dim(x, y)?;
    Ok(root(&p_dist_power(x, y, pp.q()), pp.q(), pp.bits))
}

fn det_power(a: &Matrix, q: u32) -> Result<Scalar> {
    if a.order() > MAX_DET_ORDER {
        return Err(Error::TooLarge(a.order()));
    }
    Ok(signed_permutations(a.order())
        .into_iter()
        .map(|(perm, odd)| {
            let prod = perm
                .iter()
                .enumerate()
                .fold(Scalar::one(), |acc, (i, &j)| acc * a.get(i, j).pow(q));
            if odd {
                -prod
            } else {
                prod
            }
        })
        .sum())
}

/// `(Σ_σ sgn σ Π_i a_{iσ(i)}^q)^(1/q)`.
pub fn p_det(a: &Matrix, pp: &PParam) -> Result<Scalar> {
    Ok(phi_inv(&det_power(a, pp.q())?, pp))
}

/// `A ·_p x`: coordinatewise `φ_p⁻¹(Σ_j a_ij^q x_j^q)`.
pub fn p_matvec(a: &Matrix, x: &Vector, pp: &PParam) -> Result<Vector> {
    if a.order() != x.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.order(),
            found: x.dim(),
        });
    }
    Ok(Vector::new(
        (0..a.order())
            .map(|i| {
                let terms: Vec<Scalar> = (0..x.dim()).map(|j| a.get(i, j) * &x[j]).collect();
                phi_inv(&power_sum(&terms, pp.q()), pp)
            })
            .collect(),
    ))
}

/// `sign(S)·(S² / (N_x N_y))^(1/(2q))` with `S` the inner or determinant
/// power sum and `N` the norm power sums; the quotient is exact.
fn ratio_root(s: &Scalar, x: &Vector, y: &Vector, pp: &PParam) -> Result<Scalar> {
    if x.is_zero() || y.is_zero() {
        return Err(Error::ZeroVector);
    }
    let q = pp.q();
    let r = (s * s) / (norm_power(x, q) * norm_power(y, q));
    let m = root(&r, 2 * q, pp.bits);
    Ok(if s.is_negative() { -m } else { m })
}

/// `⟨x,y⟩_p / (‖x‖_{φ_p} ‖y‖_{φ_p})`.
pub fn p_cos(x: &Vector, y: &Vector, pp: &PParam) -> Result<Scalar> {
    same_dim(x, y)?;
    ratio_root(&inner_power(x, y, pp.q()), x, y, pp)
}

/// `|x,y|_p / (‖x‖_{φ_p} ‖y‖_{φ_p})` in the plane, `x, y` as columns.
pub fn p_sin(x: &Vector, y: &Vector, pp: &PParam) -> Result<Scalar> {
    if x.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: x.dim(),
        });
    }
    same_dim(x, y)?;
    let d = det_power(&Matrix::from_columns(&[x.clone(), y.clone()])?, pp.q())?;
    ratio_root(&d, x, y, pp)
}

fn distinct(x: &Vector, y: &Vector) -> Result<()> {
    same_dim(x, y)?;
    if x == y {
        return Err(Error::DegeneratePair);
    }
    Ok(())
}

fn affine_power(x: &Vector, y: &Vector, s: &Scalar, pp: &PParam) -> Vector {
    let q = pp.q();
    let a = s.pow(q);
    let b = Scalar::one() - &a;
    Vector::new(
        x.iter()
            .zip(y.iter())
            .map(|(xi, yi)| phi_inv(&(&a * xi.pow(q) + &b * yi.pow(q)), pp))
            .collect(),
    )
}

/// `φ_p⁻¹(t^q φ_p(x) + (1 − t^q) φ_p(y))`, `t ∈ [0,1]`.
pub fn co_p_sample(x: &Vector, y: &Vector, pp: &PParam, t: &Scalar) -> Result<Vector> {
    distinct(x, y)?;
    if t.is_negative() || *t > Scalar::one() {
        return Err(Error::InvalidCoefficients(format!("{t} is outside [0,1]")));
    }
    Ok(affine_power(x, y, t, pp))
}

/// The point of the `φ_p`-line with coefficients `(s, 1 ⊟_p s)`.
pub fn line_p_sample(x: &Vector, y: &Vector, pp: &PParam, s: &Scalar) -> Result<Vector> {
    distinct(x, y)?;
    Ok(affine_power(x, y, s, pp))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn close(a: &Scalar, b: &Scalar, tol: f64) -> bool {
        (a - b).abs().to_f64() <= tol
    }

    #[test]
    fn roots() {
        assert_eq!(root(&q(-27), 3, 64), q(-3));
        assert_eq!(root(&q(16), 4, 64), q(2));
        let r = root(&Scalar::frac(1, 3), 5, 200);
        assert!(close(&r.pow(5), &Scalar::frac(1, 3), 1e-50));
    }

    #[test]
    fn sums() {
        assert_eq!(p_sum(&[q(1), q(1)], &PParam::new(0)).unwrap(), q(2));
        assert_eq!(p_sum(&[q(5), q(-5)], &PParam::new(7)).unwrap(), q(0));
        assert!(close(&p_sum(&[q(3), q(-2)], &PParam::new(16)).unwrap(), &q(3), 1e-6));
        assert_eq!(p_sum(&[], &PParam::new(1)), Err(Error::EmptyList));
        assert!(exact_power_sum_is_zero(&[q(1), q(-1), q(2), q(-2)], 3));
        assert!(!exact_power_sum_is_zero(&[q(1), q(2)], 1));
    }

    #[test]
    fn vector_ops() {
        let pp = PParam::new(32);
        let x = Vector::from_ints(&[1, 2]);
        let y = Vector::from_ints(&[2, -1]);
        assert!(p_inner(&x, &y, &pp).unwrap().is_zero());
        assert!(close(&p_norm(&Vector::from_ints(&[3, -4]), &pp), &q(4), 1e-6));
        let d = p_dist(&Vector::from_ints(&[3, 2]), &Vector::from_ints(&[3, 5]), &pp).unwrap();
        assert!(close(&d, &q(5), 1e-6));
        let a = Matrix::from_int_rows(&[&[3, 1], &[1, -2]]).unwrap();
        assert!(close(&p_det(&a, &pp).unwrap(), &q(-6), 1e-6));
        assert_eq!(p_det(&Matrix::identity(2), &pp).unwrap(), q(1));
        assert_eq!(p_matvec(&Matrix::identity(2), &x, &pp).unwrap(), x);
        let e1 = Vector::from_ints(&[1, 0]);
        let e2 = Vector::from_ints(&[0, 1]);
        assert_eq!(p_cos(&e1, &e2, &pp).unwrap(), q(0));
        assert_eq!(p_sin(&e1, &e2, &pp).unwrap(), q(1));
        assert_eq!(p_cos(&x, &x, &pp).unwrap(), q(1));
    }

    #[test]
    fn samples() {
        let pp = PParam::new(4);
        let x = Vector::from_ints(&[3, 1]);
        let y = Vector::from_ints(&[1, 2]);
        assert_eq!(co_p_sample(&x, &y, &pp, &q(1)).unwrap(), x);
        assert_eq!(co_p_sample(&x, &y, &pp, &q(0)).unwrap(), y);
        assert_eq!(line_p_sample(&x, &y, &pp, &q(1)).unwrap(), x);
        assert!(co_p_sample(&x, &y, &pp, &q(2)).is_err());
        assert_eq!(line_p_sample(&x, &x, &pp, &q(2)), Err(Error::DegeneratePair));
    }
}
