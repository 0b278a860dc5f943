// SPDX-License-Identifier: Apache-2.0
//! Magnitude-gap filters for randomized convergence checks.
//!
//! Power sums converge to their limit at rate `ρ^q / q`, where `ρ` is the
//! ratio between the two largest surviving magnitudes. Exactly cancelling
//! `±` pairs vanish at every `p` and are removed first. Inputs whose ratio
//! exceeds `MAX_GAP_RATIO` are treated as near ties and skipped.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use boxplus_core::algebra::boxminus;
use boxplus_core::vector::{signed_products, Matrix, Vector};
use boxplus_core::Scalar;

pub const MAX_GAP_RATIO: f64 = 0.9;

/// Ratio of the second largest to the largest surviving magnitude; 0 when
/// fewer than two survive. Repeated magnitudes give 1.
pub fn gap_ratio(terms: &[Scalar]) -> f64 {
    let mut net: BTreeMap<Scalar, i64> = BTreeMap::new();
    for t in terms {
        match t.sign() {
            Ordering::Equal => {}
            Ordering::Greater => *net.entry(t.abs()).or_default() += 1,
            Ordering::Less => *net.entry(t.abs()).or_default() -= 1,
        }
    }
    let mut mags = net
        .iter()
        .rev()
        .flat_map(|(m, c)| std::iter::repeat_n(m, c.unsigned_abs() as usize));
    match (mags.next(), mags.next()) {
        (Some(a), Some(b)) => (b / a).to_f64(),
        _ => 0.0,
    }
}

pub fn separated(terms: &[Scalar]) -> bool {
    gap_ratio(terms) <= MAX_GAP_RATIO
}

fn products(x: &Vector, y: &Vector) -> Vec<Scalar> {
    x.iter().zip(y.iter()).map(|(a, b)| a * b).collect()
}

fn norm_terms(x: &Vector) -> Vec<Scalar> {
    x.iter().map(Scalar::abs).collect()
}

pub fn sum_ok(values: &[Scalar]) -> bool {
    separated(values)
}

pub fn inner_ok(x: &Vector, y: &Vector) -> bool {
    separated(&products(x, y))
}

pub fn norm_ok(x: &Vector) -> bool {
    separated(&norm_terms(x))
}

/// Each coordinate difference and the two largest differences.
pub fn dist_ok(x: &Vector, y: &Vector) -> bool {
    let coords = x.iter().zip(y.iter()).all(|(a, b)| a == b || separated(&[a.clone(), -b]));
    let diffs: Vec<Scalar> = x.iter().zip(y.iter()).map(|(a, b)| boxminus(a, b).abs()).collect();
    coords && separated(&diffs)
}

pub fn det_ok(a: &Matrix) -> bool {
    signed_products(a).is_ok_and(|t| separated(&t))
}

pub fn cos_ok(x: &Vector, y: &Vector) -> bool {
    inner_ok(x, y) && norm_ok(x) && norm_ok(y)
}

pub fn sin_ok(x: &Vector, y: &Vector) -> bool {
    Matrix::from_columns(&[x.clone(), y.clone()]).is_ok_and(|m| det_ok(&m)) && norm_ok(x) && norm_ok(y)
}
