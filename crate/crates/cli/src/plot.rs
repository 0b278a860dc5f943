// SPDX-License-Identifier: Apache-2.0
//! Figure reproductions. Every curve is drawn from `SAMPLES` parameter values.

use boxplus_core::convex::{co_point, HullCombination};
use boxplus_core::error::Error;
use boxplus_core::lines::line2d_form;
use boxplus_core::trig::{alpha_inv, pcos, psin, AngleParam};
use boxplus_core::ultrametric::{ball_describe, BallCoord};
use boxplus_core::vector::norm_infty;
use boxplus_core::{Scalar, Vector};

use crate::svg::{Canvas, PALETTE};
use crate::CliError;

pub const SAMPLES: i64 = 512;

fn f(s: &Scalar) -> f64 {
    s.to_f64()
}

fn pt(v: &Vector) -> (f64, f64) {
    (f(&v[0]), f(&v[1]))
}

fn plane(v: &Vector) -> Result<(), CliError> {
    if v.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: v.dim(),
        }
        .into());
    }
    Ok(())
}

fn unit_steps() -> impl Iterator<Item = Scalar> {
    (0..SAMPLES).map(|k| Scalar::frac(k, SAMPLES - 1))
}

/// `Co∞(x,y)` for each pair, sampled along the coefficient families
/// `(1,0,u,0)`, `(u,0,1,0)`, `(1,1,u,0)` and `(u,0,1,1)`.
pub fn hulls(pairs: &[(Vector, Vector)]) -> Result<String, CliError> {
    let mut r = 1.0f64;
    for (x, y) in pairs {
        plane(x)?;
        plane(y)?;
        r = r.max(f(&norm_infty(x))).max(f(&norm_infty(y)));
    }
    let mut c = Canvas::centered(r * 1.15);
    c.axes();
    let (one, zero) = (Scalar::one(), Scalar::zero());
    for (k, (x, y)) in pairs.iter().enumerate() {
        let color = PALETTE[k % PALETTE.len()];
        for u in unit_steps() {
            let fams = [
                [one.clone(), zero.clone(), u.clone(), zero.clone()],
                [u.clone(), zero.clone(), one.clone(), zero.clone()],
                [one.clone(), one.clone(), u.clone(), zero.clone()],
                [u.clone(), zero.clone(), one.clone(), one.clone()],
            ];
            for [t, rr, s, w] in fams {
                let p = co_point(x, y, &HullCombination::new(t, rr, s, w)?)?;
                let (a, b) = pt(&p);
                c.dot(a, b, 1.5, color);
            }
        }
        for (v, name) in [(x, "x"), (y, "y")] {
            let (a, b) = pt(v);
            c.dot(a, b, 4.0, "#000000");
            c.label(a, b, &format!("{name}{} = {v}", k + 1));
        }
    }
    Ok(c.finish("limit hulls"))
}

/// Closed balls of the given radii around one center.
pub fn balls(center: &Vector, radii: &[Scalar]) -> Result<String, CliError> {
    plane(center)?;
    let rmax = radii.iter().map(f).fold(0.0, f64::max);
    let r = f(&norm_infty(center)).max(rmax).max(1.0) * 1.15;
    let mut c = Canvas::centered(r);
    c.axes();
    for (k, alpha) in radii.iter().enumerate() {
        let b = ball_describe(center, alpha)?;
        let color = PALETTE[k % PALETTE.len()];
        let range = |bc: &BallCoord| match bc {
            BallCoord::Fixed(v) => (f(v), f(v)),
            BallCoord::Free(a) => (-f(a), f(a)),
        };
        let (x0, x1) = range(&b.coords[0]);
        let (y0, y1) = range(&b.coords[1]);
        if x0 == x1 && y0 == y1 {
            c.dot(x0, y0, 5.0, color);
        } else if x0 == x1 || y0 == y1 {
            c.line(x0, y0, x1, y1, color, 4.0);
        } else {
            c.rect(x0, y0, x1, y1, color);
        }
        c.label(x1, y1, &format!("α = {alpha}"));
    }
    let (a, b) = pt(center);
    c.dot(a, b, 4.0, "#000000");
    Ok(c.finish("limit balls"))
}

/// Limit lines through each pair, drawn from their smile-inequality form in
/// the coordinates `u_i = a_i z_i`: two segments and two anti-diagonal rays.
pub fn lines(pairs: &[(Vector, Vector)]) -> Result<String, CliError> {
    let mut r = 1.0f64;
    let mut forms = Vec::new();
    for (x, y) in pairs {
        let form = line2d_form(x, y)?;
        if form.coeffs.iter().any(Scalar::is_zero) {
            return Err(Error::DegenerateConfiguration("a line coefficient is zero".into()).into());
        }
        r = r.max(f(&norm_infty(x))).max(f(&norm_infty(y)));
        for a in form.coeffs.iter() {
            r = r.max((f(&form.constant) / f(a)).abs());
        }
        forms.push(form);
    }
    let r = r * 1.5;
    let mut c = Canvas::centered(r);
    c.axes();
    for (k, ((x, y), form)) in pairs.iter().zip(&forms).enumerate() {
        let color = PALETTE[k % PALETTE.len()];
        let (a1, a2) = (f(&form.coeffs[0]), f(&form.coeffs[1]));
        let cst = f(&form.constant);
        let cm = cst.abs();
        let reach = r * a1.abs().max(a2.abs()) * 2.0;
        let piece = |c: &mut Canvas, from: (f64, f64), to: (f64, f64)| {
            let pts: Vec<(f64, f64)> = (0..SAMPLES)
                .map(|i| {
                    let s = i as f64 / (SAMPLES - 1) as f64;
                    let u1 = from.0 + s * (to.0 - from.0);
                    let u2 = from.1 + s * (to.1 - from.1);
                    (u1 / a1, u2 / a2)
                })
                .collect();
            c.polyline(&pts, color);
        };
        piece(&mut c, (cst, -cm), (cst, cm));
        piece(&mut c, (-cm, cst), (cm, cst));
        piece(&mut c, (cm, -cm), (reach, -reach));
        piece(&mut c, (-cm, cm), (-reach, reach));
        for (v, name) in [(x, "x"), (y, "y")] {
            let (a, b) = pt(v);
            c.dot(a, b, 4.0, "#000000");
            c.label(a, b, &format!("{name}{} = {v}", k + 1));
        }
    }
    Ok(c.finish("limit lines"))
}

/// The Chebyshev unit circle with the corner angles `a..h`.
pub fn unit_square() -> String {
    let mut c = Canvas::centered(1.4);
    c.axes();
    let pts: Vec<(f64, f64)> = (0..SAMPLES)
        .map(|k| pt(&alpha_inv(&AngleParam::new(&Scalar::frac(8 * k, SAMPLES)))))
        .chain(std::iter::once((1.0, 0.0)))
        .collect();
    c.polyline(&pts, PALETTE[0]);
    for (k, name) in ["a", "b", "c", "d", "e", "f", "g", "h"].iter().enumerate() {
        let (x, y) = pt(&alpha_inv(&AngleParam::new(&Scalar::from_int(k as i64))));
        c.dot(x, y, 4.0, PALETTE[1]);
        c.label(x, y, &format!("{name} (θ = {k})"));
    }
    c.finish("square angles")
}

/// Graphs of `pcos` and `psin` over `[from, to]`.
pub fn trig_graph(from: &Scalar, to: &Scalar) -> Result<String, CliError> {
    if from >= to {
        return Err(CliError::Usage("--from must be below --to".into()));
    }
    let (lo, hi) = (f(from), f(to));
    let mut c = Canvas::new(lo, hi, -1.5, 1.5);
    c.axes();
    let width = to - from;
    for (k, g) in [pcos as fn(&Scalar) -> Scalar, psin].into_iter().enumerate() {
        let pts: Vec<(f64, f64)> = (0..SAMPLES)
            .map(|i| {
                let t = from + &(&width * &Scalar::frac(i, SAMPLES - 1));
                (f(&t), f(&g(&t)))
            })
            .collect();
        c.polyline(&pts, PALETTE[k]);
    }
    c.label(lo, 1.2, "pcos");
    c.label(lo, -1.2, "psin");
    Ok(c.finish("square cosine and sine"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figures_render() {
        let x = Vector::from_ints(&[3, 1]);
        let y = Vector::from_ints(&[1, -2]);
        let doc = hulls(&[(x.clone(), y.clone())]).unwrap();
        assert!(doc.matches("<circle").count() >= 4 * SAMPLES as usize);
        assert!(lines(&[(x.clone(), y.clone())]).unwrap().contains("<polyline"));
        let radii = [Scalar::one(), Scalar::frac(5, 2), Scalar::from_int(4)];
        assert!(balls(&Vector::from_ints(&[3, 2]), &radii).unwrap().contains("<rect"));
        assert!(unit_square().contains("h (θ = 7)"));
        assert!(trig_graph(&Scalar::from_int(-4), &Scalar::from_int(4)).is_ok());
        assert!(hulls(&[(Vector::from_ints(&[1, 2, 3]), x)]).is_err());
    }
}
