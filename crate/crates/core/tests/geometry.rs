// SPDX-License-Identifier: Apache-2.0
use proptest::prelude::*;

use boxplus_core::complex::{cconj, cmod_infty, cplus, ctimes, from_polar, polar, BoxComplex};
use boxplus_core::convex::{
    chain_distance, co_contains, co_find, co_grid_find, co_orthant, co_point, dist_decomposition_check, same_orthant,
    HullCombination,
};
use boxplus_core::lines::{
    half_line_certificate, half_lines, hyperplane_form, line2d_form, line_contains_nd, line_grid_search, line_point,
    parallel_normal_form, LineCoefficients,
};
use boxplus_core::trig::{
    alpha, alpha_inv, cos_infty, inner3_limit, orthogonal_pairing, pcos, psin, pythagoras_check, sin_infty,
    AngleParam,
};
use boxplus_core::ultrametric::{ball_contains, ball_describe, dist_boxplus, f_limit_check, BallCoord};
use boxplus_core::vector::inner_infty;
use boxplus_core::{Error, LineMembership, Scalar, Vector};

fn q(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn v(xs: &[i64]) -> Vector {
    Vector::from_ints(xs)
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, prop::sample::select(vec![1i64, 2])).prop_map(|(n, d)| Scalar::frac(n, d))
}

fn vector(n: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(scalar(), n).prop_map(Vector::new)
}

fn unit() -> impl Strategy<Value = Scalar> {
    (0i64..=8).prop_map(|k| Scalar::frac(k, 8))
}

fn hull_coeffs() -> impl Strategy<Value = HullCombination> {
    (unit(), unit(), unit(), unit(), 0usize..4).prop_map(|(a, b, c, d, k)| {
        let mut arr = [a, b, c, d];
        arr[k] = Scalar::one();
        HullCombination::new(arr[0].clone(), arr[1].clone(), arr[2].clone(), arr[3].clone()).unwrap()
    })
}

proptest! {
    #[test]
    fn ultrametric(x in vector(3), y in vector(3), z in vector(3)) {
        let (dxy, dxz, dzy) = (dist_boxplus(&x, &y).unwrap(), dist_boxplus(&x, &z).unwrap(), dist_boxplus(&z, &y).unwrap());
        prop_assert_eq!(&dxy, &dist_boxplus(&y, &x).unwrap());
        prop_assert!(dxy <= dxz.clone().max(dzy.clone()));
        let mut ds = [dxy, dxz, dzy];
        ds.sort();
        prop_assert_eq!(&ds[1], &ds[2]);
    }

    #[test]
    fn balls_match_the_distance(c in vector(3), z in vector(3), a in (0i64..=12).prop_map(|k| Scalar::frac(k, 2))) {
        let b = ball_describe(&c, &a).unwrap();
        prop_assert_eq!(ball_contains(&b, &z).unwrap(), dist_boxplus(&c, &z).unwrap() <= a);
    }

    #[test]
    fn balls_are_closed_under_combination(c in vector(2), u in vector(2), w in vector(2), t in unit()) {
        let a = q(3);
        let b = ball_describe(&c, &a).unwrap();
        prop_assume!(ball_contains(&b, &u).unwrap() && ball_contains(&b, &w).unwrap());
        let combo = Vector::new(u.iter().zip(w.iter()).map(|(p, r)| boxplus_core::boxplus(p, &(&t * r))).collect());
        prop_assert!(ball_contains(&b, &combo).unwrap());
    }

    #[test]
    fn hull_points_are_found(x in vector(3), y in vector(3), h in hull_coeffs()) {
        let z = co_point(&x, &y, &h).unwrap();
        let c = co_find(&x, &y, &z).unwrap();
        prop_assert!(c.is_some());
        prop_assert_eq!(co_point(&x, &y, &c.unwrap()).unwrap(), z.clone());
        prop_assert!(dist_decomposition_check(&x, &y, &z).unwrap());
    }

    #[test]
    fn hull_is_idempotent_convex(x in vector(2), y in vector(2), h1 in hull_coeffs(), h2 in hull_coeffs(), t in unit()) {
        let u = co_point(&x, &y, &h1).unwrap();
        let w = co_point(&x, &y, &h2).unwrap();
        let combo = Vector::new(u.iter().zip(w.iter()).map(|(p, r)| boxplus_core::boxplus(p, &(&t * r))).collect());
        prop_assert!(co_contains(&x, &y, &combo).unwrap());
    }

    #[test]
    fn hull_points_lie_on_the_line(x in vector(2), y in vector(2), h in hull_coeffs()) {
        prop_assume!(x != y);
        let Ok(form) = line2d_form(&x, &y) else { return Ok(()) };
        let z = co_point(&x, &y, &h).unwrap();
        prop_assert!(form.contains(&z).unwrap());
        prop_assert!(line_contains_nd(&x, &y, &z).unwrap().is_member());
    }

    #[test]
    fn line_points_satisfy_the_form(x in vector(2), y in vector(2), k in 0usize..4, c in prop::collection::vec(scalar(), 3)) {
        prop_assume!(x != y);
        let Ok(form) = line2d_form(&x, &y) else { return Ok(()) };
        // Force Ϝ of the coefficients to 1 by placing a dominant 1.
        let mut arr: Vec<Scalar> = c.iter().map(|s| s / &q(7)).collect();
        arr.insert(k, q(1));
        let lc = LineCoefficients::new(arr[0].clone(), arr[1].clone(), arr[2].clone(), arr[3].clone()).unwrap();
        let z = line_point(&x, &y, &lc).unwrap();
        prop_assert!(form.contains(&z).unwrap());
    }

    #[test]
    fn square_trig(n in -2000i64..2000, d in 1i64..50) {
        let th = Scalar::frac(n, d);
        let one = q(1);
        prop_assert_eq!(pcos(&th).abs().max(psin(&th).abs()), one);
        let z = alpha_inv(&AngleParam::new(&th));
        prop_assert_eq!(alpha(&z).unwrap(), AngleParam::new(&th));
        prop_assert_eq!(pcos(&(&th + &q(8))), pcos(&th));
    }

    #[test]
    fn limit_cos_sin(x in vector(2), y in vector(2)) {
        prop_assume!(!x.is_zero() && !y.is_zero());
        let (c, s) = (cos_infty(&x, &y).unwrap(), sin_infty(&x, &y).unwrap());
        prop_assert_eq!(c.abs().max(s.abs()), q(1));
    }

    #[test]
    fn complex_modulus(a in scalar(), b in scalar(), c in scalar(), d in scalar()) {
        let (z, w) = (BoxComplex::new(a, b), BoxComplex::new(c, d));
        prop_assert_eq!(cmod_infty(&ctimes(&z, &w)), cmod_infty(&z) * cmod_infty(&w));
        let m = cmod_infty(&z);
        prop_assert_eq!(ctimes(&z, &cconj(&z)), BoxComplex::new(&m * &m, Scalar::zero()));
        prop_assert_eq!(ctimes(&z, &w), ctimes(&w, &z));
        prop_assert_eq!(cplus(&z, &w), cplus(&w, &z));
        if !z.is_zero() {
            let (r, th) = polar(&z).unwrap();
            prop_assert_eq!(from_polar(&r, &th), z.clone());
            // z ⊠ (z̄ / |z|∞²) = 1
            let inv = cconj(&z).scale(&(&m * &m).recip().unwrap());
            prop_assert_eq!(ctimes(&z, &inv), BoxComplex::one());
        }
    }
}

#[test]
fn ball_regimes() {
    let c = v(&[3, 2]);
    let coords = |a: Scalar| ball_describe(&c, &a).unwrap().coords;
    assert_eq!(coords(q(0)), vec![BallCoord::Fixed(q(3)), BallCoord::Fixed(q(2))]);
    assert_eq!(coords(Scalar::frac(3, 2)), vec![BallCoord::Fixed(q(3)), BallCoord::Fixed(q(2))]);
    assert_eq!(coords(q(2)), vec![BallCoord::Fixed(q(3)), BallCoord::Free(q(2))]);
    assert_eq!(coords(Scalar::frac(5, 2)), vec![BallCoord::Fixed(q(3)), BallCoord::Free(Scalar::frac(5, 2))]);
    assert_eq!(coords(q(3)), vec![BallCoord::Free(q(3)), BallCoord::Free(q(3))]);
    assert_eq!(coords(q(5)), vec![BallCoord::Free(q(5)), BallCoord::Free(q(5))]);
    assert!(matches!(ball_describe(&c, &q(-1)), Err(Error::NegativeRadius(_))));
}

#[test]
fn sequences_converge_in_the_limit_metric() {
    let x = v(&[2, 0]);
    let seq: Vec<Vector> = (1..=40).map(|k| Vector::new(vec![q(2), Scalar::frac(1, k)])).collect();
    assert!(f_limit_check(&seq, &x, &Scalar::frac(1, 10)).unwrap());
    let wrong: Vec<Vector> = (1..=40).map(|k| Vector::new(vec![Scalar::frac(2 * k + 1, k), q(0)])).collect();
    assert!(!f_limit_check(&wrong, &x, &Scalar::frac(1, 10)).unwrap());
}

#[test]
fn candidate_search_agrees_with_a_grid() {
    let pts = [v(&[3, 1]), v(&[1, 2]), v(&[-2, 1]), v(&[2, -2]), v(&[0, 3]), v(&[4, 4])];
    let step = Scalar::frac(1, 8);
    for x in &pts {
        for y in &pts {
            for a in -4..=4 {
                for b in -4..=4 {
                    let z = Vector::new(vec![Scalar::frac(a, 1), Scalar::frac(b, 2)]);
                    let grid = co_grid_find(x, y, &z, &step).unwrap().is_some();
                    let found = co_find(x, y, &z).unwrap().is_some();
                    // The grid only sees coefficients on its lattice.
                    assert!(!grid || found, "{x} {y} {z}");
                }
            }
        }
    }
}

#[test]
fn same_orthant_hulls() {
    let pts = [v(&[3, 1]), v(&[1, 2]), v(&[0, 4])];
    assert!(same_orthant(&pts));
    let z = co_orthant(&pts, &[q(1), Scalar::frac(1, 2), Scalar::frac(1, 4)]).unwrap();
    assert_eq!(z, v(&[3, 1]));
    assert!(!same_orthant(&[v(&[1, 1]), v(&[-1, 1])]));
    assert_eq!(co_orthant(&[v(&[1, 1]), v(&[-1, 1])], &[q(1), q(1)]), Err(Error::OrthantViolation));
    assert_eq!(chain_distance(&[v(&[1, 0]), v(&[2, 0]), v(&[2, 3])]).unwrap(), q(3));
}

#[test]
fn worked_lines() {
    let f = line2d_form(&v(&[3, 1]), &v(&[1, -2])).unwrap();
    assert_eq!((f.coeffs, f.constant), (v(&[-2, 3]), q(-6)));
    let g = hyperplane_form(&[v(&[1, 0]), v(&[0, 1])]).unwrap();
    assert_eq!((g.coeffs, g.constant), (v(&[1, 1]), q(1)));
    assert!(hyperplane_form(&[v(&[1, 1]), v(&[2, 2])]).is_err());
    let p = parallel_normal_form(&v(&[3, 1]), &v(&[1, -2]), &v(&[-2, 4]), &v(&[-6, 1])).unwrap();
    assert_eq!((p.c, p.d, p.alpha), (q(-6), q(12), Scalar::frac(1, 2)));
}

#[test]
fn unbounded_line_points() {
    let (x, y) = (v(&[3, -2, 1]), v(&[1, -1, 1]));
    for delta in [-10, -5, -2, 2, 7, 10] {
        let c = half_line_certificate(&q(delta)).unwrap();
        assert_eq!(line_point(&x, &y, &c).unwrap(), v(&[3 * delta, -2 * delta, 1]));
        assert!(line_contains_nd(&x, &y, &v(&[3 * delta, -2 * delta, 1])).unwrap().is_member());
    }
    let (h, _) = half_lines(&x, &y).unwrap();
    assert_eq!(h.point(&q(4)).unwrap(), v(&[12, -8, 1]));
    let grid = line_grid_search(&x, &y, &v(&[6, -4, 1]), &Scalar::frac(1, 2), &q(4)).unwrap();
    assert!(grid.is_some());
    assert!(matches!(line_contains_nd(&x, &x, &y), Err(Error::DegeneratePair)));
    assert_eq!(line_contains_nd(&v(&[1, 0]), &v(&[0, 1]), &v(&[5, 5])).unwrap(), LineMembership::NotFound);
}

#[test]
fn right_angles() {
    let (x, y, z) = (v(&[1, -2, -1]), v(&[2, 3, -2]), v(&[3, 2, -3]));
    assert_eq!(inner3_limit(&x, &y, &z).unwrap(), q(9));
    let (x, y) = (v(&[2, 1, 3, 0]), v(&[3, -6, 0, 5]));
    assert!(inner_infty(&x, &y).unwrap().is_zero());
    let p = orthogonal_pairing(&x, &y).unwrap();
    assert_eq!((p.pairs, p.rest), (vec![(0, 1), (2, 3)], None));
    let p = orthogonal_pairing(&v(&[2, 1, 3]), &v(&[3, -6, 0])).unwrap();
    assert_eq!((p.pairs, p.rest), (vec![(0, 1)], Some(2)));
    assert!(pythagoras_check(&v(&[4, 1]), &v(&[-1, 4]), &v(&[0, 0])).unwrap());
    assert_eq!(orthogonal_pairing(&v(&[1, 1]), &v(&[1, 1])), Err(Error::NotOrthogonal));
}
