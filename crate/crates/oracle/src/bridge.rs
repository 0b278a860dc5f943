// SPDX-License-Identifier: Apache-2.0
//! Floating-point bridge between the symmetrized Max-Plus carrier and the reals.

use boxplus_core::algebra::boxplus;
use boxplus_core::maxplus::{mp_boxplus, MSym};
use boxplus_core::Scalar;

use crate::PParam;

/// `|ψ_exp(z ~⊞ w) − (ψ_exp z ⊞ ψ_exp w)|`, relative to `max(1, |ψ_exp z|, |ψ_exp w|)`.
///
/// The floats are converted to rationals exactly before `⊞`.
pub fn transport_error(z: &MSym, w: &MSym) -> Option<f64> {
    let (a, b) = (z.to_f64(), w.to_f64());
    let lhs = mp_boxplus(z, w).to_f64();
    let rhs = boxplus(&Scalar::from_f64(a)?, &Scalar::from_f64(b)?).to_f64();
    Some((lhs - rhs).abs() / a.abs().max(b.abs()).max(1.0))
}

/// `ψ_ln ∘ φ_p⁻¹ (Σ φ_p(ψ_exp z_i))`, as `(negative, logmag)`, computed as a
/// shifted signed log-sum-exp. `None` for `−∞`.
pub fn dequantize(zs: &[MSym], pp: &PParam) -> Option<(bool, f64)> {
    let q = pp.q() as f64;
    let live: Vec<(f64, f64)> = zs
        .iter()
        .filter_map(|z| match z {
            MSym::Zero => None,
            MSym::Signed { neg, logmag } => Some((if *neg { -1.0 } else { 1.0 }, logmag.to_f64())),
        })
        .collect();
    let m = live.iter().map(|(_, a)| *a).fold(f64::NEG_INFINITY, f64::max);
    let s: f64 = live.iter().map(|(sg, a)| sg * (q * (a - m)).exp()).sum();
    if live.is_empty() || s == 0.0 {
        return None;
    }
    Some((s < 0.0, m + s.abs().ln() / q))
}
