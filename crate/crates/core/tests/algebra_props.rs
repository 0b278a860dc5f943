// SPDX-License-Identifier: Apache-2.0
use proptest::prelude::*;

use boxplus_core::algebra::{
    boxminus, boxplus, lower_form, nary, residual_index_set, smile_minus, smile_plus, upper_form, xi,
};
use boxplus_core::vector::{det_infty, inner_infty, norm_infty, signed_products, vec_boxplus};
use boxplus_core::{IndexedTuple, Matrix, Scalar, Vector};

fn scalar() -> impl Strategy<Value = Scalar> {
    // Small pools so that magnitude ties and exact cancellations are common.
    (-8i64..=8, prop::sample::select(vec![1i64, 2, 3])).prop_map(|(n, d)| Scalar::frac(n, d))
}

fn list(max: usize) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec(scalar(), 1..=max)
}

fn square(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(prop::collection::vec(scalar(), n), n).prop_map(|rows| Matrix::from_rows(rows).unwrap())
}

proptest! {
    #[test]
    fn binary_laws(a in scalar(), b in scalar(), k in scalar()) {
        let ab = boxplus(&a, &b);
        prop_assert_eq!(&ab, &boxplus(&b, &a));
        prop_assert_eq!(boxplus(&a, &a), a.clone());
        prop_assert!(boxplus(&a, &-&a).is_zero());
        prop_assert_eq!(boxplus(&a, &Scalar::zero()), a.clone());
        prop_assert_eq!(boxminus(&a, &b), boxplus(&a, &-&b));
        prop_assert_eq!(boxplus(&(&k * &a), &(&k * &b)), &k * &ab);
        prop_assert!(ab == a || ab == b || ab.is_zero());
    }

    #[test]
    fn weak_associativity(a in scalar(), b in scalar(), c in scalar()) {
        prop_assume!(!(&a + &b).is_zero() && !(&b + &c).is_zero() && !(&a + &c).is_zero());
        prop_assert_eq!(boxplus(&boxplus(&a, &b), &c), boxplus(&a, &boxplus(&b, &c)));
    }

    #[test]
    fn nary_is_order_free(xs in list(8), seed in any::<u64>()) {
        let mut ys = xs.clone();
        let n = ys.len();
        for i in (1..n).rev() {
            ys.swap(i, (seed as usize).wrapping_mul(i + 7) % (i + 1));
        }
        prop_assert_eq!(nary(&xs).unwrap(), nary(&ys).unwrap());
    }

    #[test]
    fn nary_agrees_with_binary(a in scalar(), b in scalar()) {
        prop_assert_eq!(nary(&[a.clone(), b.clone()]).unwrap(), boxplus(&a, &b));
    }

    #[test]
    fn nary_result_is_residual(xs in list(8)) {
        let f = nary(&xs).unwrap();
        let t = IndexedTuple::new(xs.clone());
        let res = residual_index_set(&t);
        if res.is_empty() {
            prop_assert!(f.is_zero());
        } else {
            let best = res.iter().map(|&i| xs[i].abs()).max().unwrap();
            prop_assert_eq!(f.abs(), best);
            prop_assert!(xi(&t, &f) > 0);
        }
        prop_assert!(f.abs() <= xs.iter().map(Scalar::abs).max().unwrap());
    }

    #[test]
    fn appending_a_symmetric_pair_changes_nothing(xs in list(6), v in scalar()) {
        let mut ys = xs.clone();
        ys.push(v.clone());
        ys.push(-&v);
        prop_assert_eq!(nary(&xs).unwrap(), nary(&ys).unwrap());
    }

    #[test]
    fn smiles(xs in list(6)) {
        let lo = smile_minus(&xs).unwrap();
        let hi = smile_plus(&xs).unwrap();
        let f = nary(&xs).unwrap();
        prop_assert!(lo <= hi);
        prop_assert_eq!(lo.abs(), hi.abs());
        prop_assert!(lo <= f && f <= hi);
    }

    #[test]
    fn smile_bridge(u in scalar(), v in scalar()) {
        let m = |a: &Scalar, b: &Scalar| smile_minus(&[a.clone(), b.clone()]).unwrap();
        prop_assert_eq!(boxplus(&u, &v), (m(&u, &v) - m(&-&u, &-&v)) / Scalar::from_int(2));
    }

    #[test]
    fn sandwich(pairs in prop::collection::vec((scalar(), scalar()), 1..6)) {
        let (a, x): (Vec<Scalar>, Vec<Scalar>) = pairs.into_iter().unzip();
        let prods: Vec<Scalar> = a.iter().zip(&x).map(|(s, t)| s * t).collect();
        let mid = nary(&prods).unwrap();
        prop_assert!(lower_form(&a, &x).unwrap() <= mid);
        prop_assert!(mid <= upper_form(&a, &x).unwrap());
        let (va, vx) = (Vector::new(a), Vector::new(x));
        prop_assert_eq!(inner_infty(&va, &vx).unwrap(), mid);
    }

    #[test]
    fn norm_and_inner(xs in list(5)) {
        let v = Vector::new(xs);
        let n = norm_infty(&v);
        prop_assert_eq!(&n * &n, inner_infty(&v, &v).unwrap());
        prop_assert_eq!(vec_boxplus(&v, &v).unwrap(), v.clone());
    }

    #[test]
    fn determinant_laws(m in square(3), k in scalar()) {
        let d = det_infty(&m).unwrap();
        prop_assert_eq!(&d, &nary(&signed_products(&m).unwrap()).unwrap());
        prop_assert_eq!(det_infty(&m.swap_columns(0, 1)).unwrap(), -&d);
        let scaled = Matrix::from_rows({
            let mut r = m.rows();
            r[0] = r[0].iter().map(|v| &k * v).collect();
            r
        }).unwrap();
        prop_assert_eq!(det_infty(&scaled).unwrap(), &k * &d);
    }

    #[test]
    fn literals_round_trip(a in scalar()) {
        prop_assert_eq!(a.to_string().parse::<Scalar>().unwrap(), a);
    }
}

#[test]
fn worked_values() {
    let xs: Vector = "-3,-2,3,3,1,-3".parse().unwrap();
    assert_eq!(nary(&xs).unwrap(), Scalar::from_int(-2));
    let t = IndexedTuple::new(xs.into_coords());
    assert_eq!(residual_index_set(&t), vec![1, 4]);
    let m = Matrix::from_int_rows(&[&[3, 1], &[1, -2]]).unwrap();
    assert_eq!(det_infty(&m).unwrap(), Scalar::from_int(-6));
    let m = Matrix::from_int_rows(&[&[-2, -6], &[4, 1]]).unwrap();
    assert_eq!(det_infty(&m).unwrap(), Scalar::from_int(24));
}

#[test]
fn empty_input_is_an_error() {
    assert!(nary(&[]).is_err());
    assert!(smile_minus(&[]).is_err());
}
