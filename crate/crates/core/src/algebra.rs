// SPDX-License-Identifier: Apache-2.0
//! The binary limit addition `⊞`, its one-shot n-ary extension `Ϝ`, and the
//! associative smile operations.
//!
//! `⊞` is idempotent and commutative but not associative, so the n-ary
//! extension is never computed by folding the binary one.

use std::cmp::Ordering;

use crate::error::{check_dim, Error, Result};
use crate::scalar::Scalar;

/// `a ⊞ b`: the operand of larger magnitude; `(a+b)/2` on a magnitude tie.
pub fn boxplus(a: &Scalar, b: &Scalar) -> Scalar {
    match a.cmp_abs(b) {
        Ordering::Greater => a.clone(),
        Ordering::Less => b.clone(),
        Ordering::Equal => {
            if a == b {
                a.clone()
            } else {
                Scalar::zero()
            }
        }
    }
}

/// `a ⊟ b = a ⊞ (−b)`.
pub fn boxminus(a: &Scalar, b: &Scalar) -> Scalar {
    boxplus(a, &-b)
}

/// Residual selection shared by every n-ary extension in the crate.
///
/// Items are grouped by magnitude; inside a group the signed count decides.
/// The largest group with a nonzero count wins and a representative with the
/// winning sign is returned. `None` means complete cancellation.
pub fn residual_winner<'a, T>(
    items: impl IntoIterator<Item = &'a T>,
    sign: impl Fn(&T) -> Ordering,
    cmp_mag: impl Fn(&T, &T) -> Ordering,
) -> Option<&'a T>
where
    T: 'a,
{
    let mut live: Vec<&T> = items
        .into_iter()
        .filter(|x| sign(x) != Ordering::Equal)
        .collect();
    live.sort_by(|a, b| cmp_mag(b, a));
    let mut i = 0;
    while i < live.len() {
        let mut j = i;
        let mut net: i64 = 0;
        while j < live.len() && cmp_mag(live[i], live[j]) == Ordering::Equal {
            net += if sign(live[j]) == Ordering::Greater { 1 } else { -1 };
            j += 1;
        }
        if net != 0 {
            let want = if net > 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            };
            return live[i..j].iter().copied().find(|x| sign(x) == want);
        }
        i = j;
    }
    None
}

/// A tuple of scalars together with the positions an n-ary evaluation ranges over.
///
/// Positions are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexedTuple {
    values: Vec<Scalar>,
    index_set: Vec<usize>,
}

impl IndexedTuple {
    /// Tuple indexed by all of its positions.
    pub fn new(values: Vec<Scalar>) -> Self {
        let index_set = (0..values.len()).collect();
        IndexedTuple { values, index_set }
    }

    /// Tuple restricted to `indices` (sorted and deduplicated here).
    pub fn with_indices(values: Vec<Scalar>, mut indices: Vec<usize>) -> Result<Self> {
        indices.sort_unstable();
        indices.dedup();
        if let Some(&bad) = indices.iter().find(|&&i| i >= values.len()) {
            return Err(Error::DimensionMismatch {
                expected: values.len(),
                found: bad + 1,
            });
        }
        Ok(IndexedTuple {
            values,
            index_set: indices,
        })
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn index_set(&self) -> &[usize] {
        &self.index_set
    }

    fn selected(&self) -> impl Iterator<Item = &Scalar> + '_ {
        self.index_set.iter().map(move |&i| &self.values[i])
    }
}

/// `ξ_I[x](α)`: occurrences of `α` minus occurrences of `−α` over the index set.
pub fn xi(x: &IndexedTuple, alpha: &Scalar) -> i64 {
    let neg = -alpha;
    x.selected().fold(0, |acc, v| {
        acc + i64::from(v == alpha) - i64::from(*v == neg)
    })
}

/// Positions `j` of the index set with `ξ(x_j) ≠ 0`.
pub fn residual_index_set(x: &IndexedTuple) -> Vec<usize> {
    x.index_set
        .iter()
        .copied()
        .filter(|&j| xi(x, &x.values[j]) != 0)
        .collect()
}

/// `Ϝ_I(x)`, evaluated in one pass over the whole index set.
pub fn nary_boxplus(x: &IndexedTuple) -> Result<Scalar> {
    if x.index_set.is_empty() {
        return Err(Error::EmptyIndexSet);
    }
    let sel: Vec<&Scalar> = x.selected().collect();
    Ok(residual_winner(sel.iter().copied(), Scalar::sign, Scalar::cmp_abs)
        .cloned()
        .unwrap_or_else(Scalar::zero))
}

/// `Ϝ` over every entry of `values`.
pub fn nary(values: &[Scalar]) -> Result<Scalar> {
    if values.is_empty() {
        return Err(Error::EmptyIndexSet);
    }
    Ok(residual_winner(values, Scalar::sign, Scalar::cmp_abs)
        .cloned()
        .unwrap_or_else(Scalar::zero))
}

/// `Ϝ` over owned values; the caller guarantees a nonempty input.
pub(crate) fn nary_owned(values: Vec<Scalar>) -> Scalar {
    residual_winner(values.iter(), Scalar::sign, Scalar::cmp_abs)
        .cloned()
        .unwrap_or_else(Scalar::zero)
}

fn smile(values: &[Scalar], tie: Ordering) -> Result<Scalar> {
    let first = values.first().ok_or(Error::EmptyList)?;
    let mut best = first;
    for v in &values[1..] {
        match v.cmp_abs(best) {
            Ordering::Greater => best = v,
            Ordering::Equal if v.sign() == tie => best = v,
            _ => {}
        }
    }
    Ok(best.clone())
}

/// Fold of `⌣⁻`: the entry of largest magnitude, the negative one on ties.
/// An all-zero list gives 0.
pub fn smile_minus(values: &[Scalar]) -> Result<Scalar> {
    smile(values, Ordering::Less)
}

/// Fold of `⌣⁺`: the entry of largest magnitude, the positive one on ties.
pub fn smile_plus(values: &[Scalar]) -> Result<Scalar> {
    smile(values, Ordering::Greater)
}

fn products(a: &[Scalar], x: &[Scalar]) -> Result<Vec<Scalar>> {
    check_dim(a.len(), x.len())?;
    Ok(a.iter().zip(x).map(|(ai, xi)| ai * xi).collect())
}

/// Lower symmetric form `⌣⁻_i a_i x_i`.
pub fn lower_form(a: &[Scalar], x: &[Scalar]) -> Result<Scalar> {
    smile_minus(&products(a, x)?)
}

/// Upper symmetric form `⌣⁺_i a_i x_i`.
pub fn upper_form(a: &[Scalar], x: &[Scalar]) -> Result<Scalar> {
    smile_plus(&products(a, x)?)
}
