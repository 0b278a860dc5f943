// SPDX-License-Identifier: Apache-2.0
//! Vectors, square matrices, and the limit inner product and determinant.

use std::fmt;
use std::ops::{Deref, Index};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{boxminus, boxplus, nary_owned};
use crate::error::{check_dim, Error, Result};
use crate::scalar::Scalar;

/// Largest matrix order accepted by the determinant (8! = 40320 terms).
pub const MAX_DET_ORDER: usize = 8;

/// A point of `ℝⁿ` with exact coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vector(Vec<Scalar>);

impl Vector {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Vector(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    pub fn zeros(n: usize) -> Self {
        Vector(vec![Scalar::zero(); n])
    }

    /// The canonical basis vector `e_i` (0-based).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Vector::zeros(n);
        v.0[i] = Scalar::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn neg(&self) -> Vector {
        Vector(self.0.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, t: &Scalar) -> Vector {
        Vector(self.0.iter().map(|c| t * c).collect())
    }

    /// Ordinary coordinatewise sum.
    pub fn add(&self, other: &Vector) -> Result<Vector> {
        check_dim(self.dim(), other.dim())?;
        Ok(Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Vector {
        Vector(self.0.iter().map(f).collect())
    }
}

impl Deref for Vector {
    type Target = [Scalar];
    fn deref(&self) -> &[Scalar] {
        &self.0
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl From<Vec<Scalar>> for Vector {
    fn from(v: Vec<Scalar>) -> Self {
        Vector(v)
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Vector {
    type Err = Error;

    /// Comma-separated rational literals, optionally wrapped in parentheses or brackets.
    fn from_str(s: &str) -> Result<Self> {
        let t = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        if t.trim().is_empty() {
            return Err(Error::Parse {
                input: s.to_string(),
                reason: "empty vector".into(),
            });
        }
        t.split(',')
            .map(|c| c.parse::<Scalar>())
            .collect::<Result<Vec<_>>>()
            .map(Vector)
    }
}

/// A square matrix stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyList);
        }
        let mut entries = Vec::with_capacity(n * n);
        for r in rows {
            check_dim(n, r.len())?;
            entries.extend(r);
        }
        Ok(Matrix { n, entries })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Scalar::from_int(v)).collect())
                .collect(),
        )
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vector]) -> Result<Self> {
        let n = cols.len();
        if n == 0 {
            return Err(Error::EmptyList);
        }
        for c in cols {
            check_dim(n, c.dim())?;
        }
        let entries = (0..n)
            .flat_map(|i| cols.iter().map(move |c| c[i].clone()))
            .collect();
        Ok(Matrix { n, entries })
    }

    pub fn identity(n: usize) -> Self {
        let entries = (0..n * n)
            .map(|k| {
                if k / n == k % n {
                    Scalar::one()
                } else {
                    Scalar::zero()
                }
            })
            .collect();
        Matrix { n, entries }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    /// Copy with row `i` replaced.
    pub fn with_row(&self, i: usize, row: &[Scalar]) -> Result<Matrix> {
        check_dim(self.n, row.len())?;
        let mut m = self.clone();
        m.entries[i * self.n..(i + 1) * self.n].clone_from_slice(row);
        Ok(m)
    }

    pub fn swap_columns(&self, a: usize, b: usize) -> Matrix {
        let mut m = self.clone();
        for i in 0..self.n {
            m.entries.swap(i * self.n + a, i * self.n + b);
        }
        m
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", Vector::new(self.row(i).to_vec()))?;
        }
        write!(f, "]")
    }
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<Scalar>>::deserialize(d)?;
        Matrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

/// All permutations of `0..n` with their signs, by Heap's algorithm.
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut out = vec![(perm.clone(), false)];
    let mut c = vec![0usize; n];
    let mut odd = false;
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            odd = !odd;
            out.push((perm.clone(), odd));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Coordinatewise `x ⊞ y`.
pub fn vec_boxplus(x: &Vector, y: &Vector) -> Result<Vector> {
    check_dim(x.dim(), y.dim())?;
    Ok(Vector(x.iter().zip(y.iter()).map(|(a, b)| boxplus(a, b)).collect()))
}

/// Coordinatewise `x ⊟ y`.
pub fn vec_boxminus(x: &Vector, y: &Vector) -> Result<Vector> {
    check_dim(x.dim(), y.dim())?;
    Ok(Vector(x.iter().zip(y.iter()).map(|(a, b)| boxminus(a, b)).collect()))
}

/// Coordinatewise `Ϝ` over a list of vectors, one pass per coordinate.
pub fn nary_vec_boxplus(vectors: &[Vector]) -> Result<Vector> {
    let first = vectors.first().ok_or(Error::EmptyList)?;
    let n = first.dim();
    for v in vectors {
        check_dim(n, v.dim())?;
    }
    Ok(Vector(
        (0..n)
            .map(|i| nary_owned(vectors.iter().map(|v| v[i].clone()).collect()))
            .collect(),
    ))
}

/// `⟨x,y⟩∞ = Ϝ_i x_i y_i`.
pub fn inner_infty(x: &Vector, y: &Vector) -> Result<Scalar> {
    check_dim(x.dim(), y.dim())?;
    if x.dim() == 0 {
        return Err(Error::EmptyIndexSet);
    }
    Ok(nary_owned(x.iter().zip(y.iter()).map(|(a, b)| a * b).collect()))
}

/// Chebyshev norm `max_i |x_i|`.
pub fn norm_infty(x: &Vector) -> Scalar {
    x.iter()
        .map(Scalar::abs)
        .max()
        .unwrap_or_else(Scalar::zero)
}

/// The signed permutation products `sgn(σ) Π_i a_{i,σ(i)}`.
pub fn signed_products(a: &Matrix) -> Result<Vec<Scalar>> {
    if a.order() > MAX_DET_ORDER {
        return Err(Error::TooLarge(a.order()));
    }
    Ok(signed_permutations(a.order())
        .into_iter()
        .map(|(p, odd)| {
            let prod = p
                .iter()
                .enumerate()
                .fold(Scalar::one(), |acc, (i, &j)| acc * a.get(i, j));
            if odd {
                -prod
            } else {
                prod
            }
        })
        .collect())
}

/// `|A|∞`: `Ϝ` applied once to the multiset of all signed permutation products.
pub fn det_infty(a: &Matrix) -> Result<Scalar> {
    Ok(nary_owned(signed_products(a)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[i64]) -> Vector {
        Vector::from_ints(c)
    }

    #[test]
    fn permutation_signs() {
        let perms = signed_permutations(3);
        assert_eq!(perms.len(), 6);
        let odd = perms.iter().filter(|(_, o)| *o).count();
        assert_eq!(odd, 3);
        for (p, o) in &perms {
            let inversions = (0..3)
                .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            assert_eq!(inversions % 2 == 1, *o);
        }
        assert_eq!(signed_permutations(1).len(), 1);
    }

    #[test]
    fn coordinatewise_ops() {
        assert_eq!(vec_boxplus(&v(&[3, -2, 1]), &v(&[1, -1, 1])).unwrap(), v(&[3, -2, 1]));
        let x = v(&[2, -5, 0]);
        assert_eq!(vec_boxplus(&x, &x).unwrap(), x);
        assert!(vec_boxplus(&x, &x.neg()).unwrap().is_zero());
    }

    #[test]
    fn nary_vectors() {
        let a = v(&[1, 2]);
        let b = v(&[3, -4]);
        assert_eq!(nary_vec_boxplus(std::slice::from_ref(&a)).unwrap(), a);
        assert_eq!(nary_vec_boxplus(&[a.clone(), a.neg(), b.clone()]).unwrap(), b);
        assert_eq!(
            nary_vec_boxplus(&[v(&[1, 5]), v(&[4, 2]), v(&[0, 3])]).unwrap(),
            v(&[4, 5])
        );
        assert_eq!(nary_vec_boxplus(&[]), Err(Error::EmptyList));
    }

    #[test]
    fn inner_and_norm() {
        assert_eq!(inner_infty(&v(&[1, 2]), &v(&[2, -1])).unwrap(), Scalar::zero());
        assert_eq!(inner_infty(&v(&[3, 1]), &v(&[1, -2])).unwrap(), Scalar::from_int(3));
        let x = v(&[3, -4]);
        assert_eq!(norm_infty(&x), Scalar::from_int(4));
        assert_eq!(inner_infty(&x, &x).unwrap(), Scalar::from_int(16));
        assert_eq!(norm_infty(&v(&[0, 0])), Scalar::zero());
    }

    #[test]
    fn determinants() {
        assert_eq!(det_infty(&Matrix::identity(3)).unwrap(), Scalar::one());
        let a = Matrix::from_int_rows(&[&[3, 1], &[1, -2]]).unwrap();
        assert_eq!(det_infty(&a).unwrap(), Scalar::from_int(-6));
        let b = Matrix::from_int_rows(&[&[-2, -6], &[4, 1]]).unwrap();
        assert_eq!(det_infty(&b).unwrap(), Scalar::from_int(24));
        assert_eq!(det_infty(&Matrix::identity(9)), Err(Error::TooLarge(9)));
    }

    #[test]
    fn columns_and_rows() {
        let m = Matrix::from_columns(&[v(&[3, 1]), v(&[1, -2])]).unwrap();
        assert_eq!(m, Matrix::from_int_rows(&[&[3, 1], &[1, -2]]).unwrap());
        let r = m.with_row(0, &[Scalar::one(), Scalar::one()]).unwrap();
        assert_eq!(r.row(0), &[Scalar::one(), Scalar::one()]);
        assert_eq!(m.swap_columns(0, 1).get(0, 0), &Scalar::one());
    }

    #[test]
    fn parse_vectors() {
        assert_eq!("(1, -2/3, 0.5)".parse::<Vector>().unwrap().dim(), 3);
        assert_eq!("[3,1]".parse::<Vector>().unwrap(), v(&[3, 1]));
        assert!("".parse::<Vector>().is_err());
        assert!("1,,2".parse::<Vector>().is_err());
    }
}
