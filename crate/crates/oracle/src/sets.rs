// SPDX-License-Identifier: Apache-2.0
//! Chebyshev distances from sample points to limit sets, in `f64`.

use boxplus_core::lines::LineForm;
use boxplus_core::vector::Vector;

/// Chebyshev distance from `p` to the segment `[a, b]`.
///
/// `max_i |a_i + u(b_i − a_i) − p_i|` is convex and piecewise linear in `u`,
/// so its minimum sits at an endpoint, a zero of one coordinate, or a
/// crossing of two coordinates.
pub fn segment_distance(a: &[f64], b: &[f64], p: &[f64]) -> f64 {
    let n = p.len();
    let g0: Vec<f64> = (0..n).map(|i| a[i] - p[i]).collect();
    let d: Vec<f64> = (0..n).map(|i| b[i] - a[i]).collect();
    let eval = |u: f64| (0..n).map(|i| (g0[i] + u * d[i]).abs()).fold(0.0, f64::max);
    let mut cands = vec![0.0, 1.0];
    for i in 0..n {
        if d[i] != 0.0 {
            cands.push(-g0[i] / d[i]);
        }
        for j in 0..i {
            for sgn in [1.0, -1.0] {
                let den = d[i] - sgn * d[j];
                if den != 0.0 {
                    cands.push((sgn * g0[j] - g0[i]) / den);
                }
            }
        }
    }
    cands
        .into_iter()
        .filter(|u| (0.0..=1.0).contains(u))
        .map(eval)
        .fold(f64::INFINITY, f64::min)
}

/// Vertices of `u ↦ (σ_i max(u A_i, B_i))_i` for `u ∈ [0,1]`.
fn staircase(a: &[f64], b: &[f64], sign: &[f64]) -> Vec<Vec<f64>> {
    let mut us = vec![0.0, 1.0];
    for i in 0..a.len() {
        if a[i] > 0.0 && b[i] < a[i] && b[i] > 0.0 {
            us.push(b[i] / a[i]);
        }
    }
    us.sort_by(f64::total_cmp);
    us.dedup();
    us.into_iter()
        .map(|u| (0..a.len()).map(|i| sign[i] * (u * a[i]).max(b[i])).collect())
        .collect()
}

/// Chebyshev distance from `p` to `Co∞(x,y)` for `x, y` in a common closed
/// orthant. The hull is the union of `t x ⊞ y` and `x ⊞ s y`, `s,t ∈ [0,1]`,
/// each a polyline with one breakpoint per coordinate.
pub fn hull_distance(x: &Vector, y: &Vector, p: &[f64]) -> f64 {
    let xf: Vec<f64> = x.iter().map(|v| v.to_f64()).collect();
    let yf: Vec<f64> = y.iter().map(|v| v.to_f64()).collect();
    let sign: Vec<f64> = xf
        .iter()
        .zip(&yf)
        .map(|(a, b)| if *a < 0.0 || *b < 0.0 { -1.0 } else { 1.0 })
        .collect();
    let xa: Vec<f64> = xf.iter().map(|v| v.abs()).collect();
    let ya: Vec<f64> = yf.iter().map(|v| v.abs()).collect();
    [staircase(&xa, &ya, &sign), staircase(&ya, &xa, &sign)]
        .iter()
        .flat_map(|poly| poly.windows(2).map(|w| segment_distance(&w[0], &w[1], p)))
        .fold(f64::INFINITY, f64::min)
}

/// Chebyshev distance, in the coordinates `u_i = a_i z_i`, from `z` to the
/// plane set `⌣⁻(u) ≤ c ≤ ⌣⁺(u)`, divided by `‖a‖∞ · max(1, ‖z‖∞)`.
///
/// For `c ≠ 0` the set is the two segments `{u_k = c, |u_j| ≤ |c|}` and the
/// anti-diagonal rays `{u_1 = −u_2, |u_1| ≥ |c|}`.
pub fn line_slack(form: &LineForm, z: &[f64]) -> f64 {
    let a: Vec<f64> = form.coeffs.iter().map(|v| v.to_f64()).collect();
    let c = form.constant.to_f64();
    let cm = c.abs();
    let (u1, u2) = (a[0] * z[0], a[1] * z[1]);
    let d1 = (u1 - c).abs().max((u2.abs() - cm).max(0.0));
    let d2 = (u2 - c).abs().max((u1.abs() - cm).max(0.0));
    let h = |m: f64| (u1 - m).abs().max((u2 + m).abs());
    let m = (u1 - u2) / 2.0;
    let d3 = h(m.max(cm)).min(h(m.min(-cm)));
    let scale = a.iter().fold(0.0f64, |s, v| s.max(v.abs())) * z.iter().fold(1.0f64, |s, v| s.max(v.abs()));
    d1.min(d2).min(d3) / scale
}

#[cfg(test)]
mod tests {
    use super::*;
    use boxplus_core::lines::line2d_form;

    #[test]
    fn segments() {
        assert_eq!(segment_distance(&[0.0, 0.0], &[2.0, 0.0], &[1.0, 1.0]), 1.0);
        assert_eq!(segment_distance(&[0.0, 0.0], &[2.0, 2.0], &[2.0, 0.0]), 1.0);
        assert_eq!(segment_distance(&[0.0, 0.0], &[1.0, 0.0], &[3.0, 0.0]), 2.0);
    }

    #[test]
    fn hull_points() {
        let x = Vector::from_ints(&[3, 1]);
        let y = Vector::from_ints(&[1, 2]);
        assert_eq!(hull_distance(&x, &y, &[3.0, 1.0]), 0.0);
        assert_eq!(hull_distance(&x, &y, &[3.0, 2.0]), 0.0);
        assert_eq!(hull_distance(&x, &y, &[2.0, 2.0]), 0.0);
        assert_eq!(hull_distance(&x, &y, &[1.0, 1.0]), 1.0);
        let n = Vector::from_ints(&[-3, -1]);
        assert_eq!(hull_distance(&n, &y.neg(), &[-3.0, -1.5]), 0.0);
    }

    #[test]
    fn line_points() {
        let f = line2d_form(&Vector::from_ints(&[3, 1]), &Vector::from_ints(&[1, -2])).unwrap();
        assert_eq!(line_slack(&f, &[3.0, 1.0]), 0.0);
        assert_eq!(line_slack(&f, &[1.0, -2.0]), 0.0);
        assert!(line_slack(&f, &[0.0, 0.0]) > 0.1);
    }
}
