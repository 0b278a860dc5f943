// SPDX-License-Identifier: Apache-2.0
//! The symmetrized Max-Plus carrier `~𝕄 = 𝕄 ∪ (ℝ + iπ)`.
//!
//! An element is `−∞`, a real `a` (standing for `e^a`) or `a + iπ`
//! (standing for `−e^a`). Operations are transported from `(ℝ, ⊞, ·)`
//! through the extended logarithm, which on this encoding never needs an
//! irrational value.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::residual_winner;
use crate::axioms::{PseudoField, SymmetricSpace};
use crate::error::{check_dim, Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MSym {
    /// `−∞`, the image of 0.
    Zero,
    /// `logmag` when `neg` is false, `logmag + iπ` otherwise.
    Signed { neg: bool, logmag: Scalar },
}

impl MSym {
    pub fn pos(logmag: Scalar) -> Self {
        MSym::Signed { neg: false, logmag }
    }

    pub fn neg_of(logmag: Scalar) -> Self {
        MSym::Signed { neg: true, logmag }
    }

    /// `0`, the multiplicative unit.
    pub fn one() -> Self {
        MSym::pos(Scalar::zero())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, MSym::Zero)
    }

    /// Sign of the represented real number.
    pub fn sign(&self) -> Ordering {
        match self {
            MSym::Zero => Ordering::Equal,
            MSym::Signed { neg: false, .. } => Ordering::Greater,
            MSym::Signed { neg: true, .. } => Ordering::Less,
        }
    }

    pub fn logmag(&self) -> Option<&Scalar> {
        match self {
            MSym::Zero => None,
            MSym::Signed { logmag, .. } => Some(logmag),
        }
    }

    /// Order of the represented magnitudes `e^a`, with `−∞` lowest.
    pub fn cmp_mag(&self, other: &MSym) -> Ordering {
        match (self.logmag(), other.logmag()) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some(a), Some(b)) => a.cmp(b),
        }
    }

    /// `ψ_exp`: the represented real number.
    pub fn to_f64(&self) -> f64 {
        match self {
            MSym::Zero => 0.0,
            MSym::Signed { neg, logmag } => {
                let m = logmag.to_f64().exp();
                if *neg {
                    -m
                } else {
                    m
                }
            }
        }
    }

    /// `ψ_ln` of a finite float; the logarithm is rounded to `f64` first.
    pub fn from_f64(x: f64) -> Option<Self> {
        if x == 0.0 {
            return Some(MSym::Zero);
        }
        let l = Scalar::from_f64(x.abs().ln())?;
        Some(MSym::Signed { neg: x < 0.0, logmag: l })
    }
}

impl fmt::Display for MSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MSym::Zero => f.write_str("-inf"),
            MSym::Signed { neg: false, logmag } => write!(f, "{logmag}"),
            MSym::Signed { neg: true, logmag } => write!(f, "{logmag}+ipi"),
        }
    }
}

impl FromStr for MSym {
    type Err = Error;

    /// `-inf`, `a` or `a+ipi` (also `a+iπ`).
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let t = t.replace('−', "-");
        if t == "-inf" || t == "-∞" {
            return Ok(MSym::Zero);
        }
        for suffix in ["+ipi", "+iπ"] {
            if let Some(a) = t.strip_suffix(suffix) {
                let l = a.parse().map_err(|_| Error::parse(s, "bad logarithm"))?;
                return Ok(MSym::neg_of(l));
            }
        }
        t.parse()
            .map(MSym::pos)
            .map_err(|_| Error::parse(s, "expected -inf, a or a+ipi"))
    }
}

impl Serialize for MSym {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for MSym {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `z ~⊞ w`.
pub fn mp_boxplus(z: &MSym, w: &MSym) -> MSym {
    match z.cmp_mag(w) {
        Ordering::Greater => z.clone(),
        Ordering::Less => w.clone(),
        Ordering::Equal if z == w => z.clone(),
        Ordering::Equal => MSym::Zero,
    }
}

pub fn mp_neg(z: &MSym) -> MSym {
    match z {
        MSym::Zero => MSym::Zero,
        MSym::Signed { neg, logmag } => MSym::Signed {
            neg: !neg,
            logmag: logmag.clone(),
        },
    }
}

pub fn mp_boxminus(z: &MSym, w: &MSym) -> MSym {
    mp_boxplus(z, &mp_neg(w))
}

/// `z ~⊗ w`: logarithms add, signs multiply, `−∞` absorbs.
pub fn mp_otimes(z: &MSym, w: &MSym) -> MSym {
    match (z, w) {
        (MSym::Signed { neg: a, logmag: l }, MSym::Signed { neg: b, logmag: m }) => MSym::Signed {
            neg: a ^ b,
            logmag: l + m,
        },
        _ => MSym::Zero,
    }
}

pub fn mp_inv(z: &MSym) -> Option<MSym> {
    match z {
        MSym::Zero => None,
        MSym::Signed { neg, logmag } => Some(MSym::Signed {
            neg: *neg,
            logmag: -logmag,
        }),
    }
}

/// Transported `Ϝ`.
pub fn mp_nary(zs: &[MSym]) -> Result<MSym> {
    if zs.is_empty() {
        return Err(Error::EmptyList);
    }
    Ok(residual_winner(zs, MSym::sign, MSym::cmp_mag)
        .cloned()
        .unwrap_or(MSym::Zero))
}

pub fn mp_abs(z: &MSym) -> MSym {
    match z {
        MSym::Zero => MSym::Zero,
        MSym::Signed { logmag, .. } => MSym::pos(logmag.clone()),
    }
}

/// `d_~⊞(z,w) = ~⊞_i |z_i ~⊟ w_i|`; `−∞` exactly when `z = w`.
pub fn mp_dist(z: &[MSym], w: &[MSym]) -> Result<MSym> {
    check_dim(z.len(), w.len())?;
    if z.is_empty() {
        return Err(Error::EmptyIndexSet);
    }
    let terms: Vec<MSym> = z.iter().zip(w).map(|(a, b)| mp_abs(&mp_boxminus(a, b))).collect();
    mp_nary(&terms)
}

/// `ψ_exp(d_~⊞(z,w))` in floating point.
pub fn mp_dist_std(z: &[MSym], w: &[MSym]) -> Result<f64> {
    Ok(mp_dist(z, w)?.to_f64())
}

/// `(~𝕄, ~⊞, ~⊗)` as a pseudo-field.
#[derive(Debug, Clone, Copy, Default)]
pub struct MaslovField;

impl PseudoField for MaslovField {
    type Elem = MSym;

    fn add(&self, a: &MSym, b: &MSym) -> MSym {
        mp_boxplus(a, b)
    }
    fn mul(&self, a: &MSym, b: &MSym) -> MSym {
        mp_otimes(a, b)
    }
    fn neg(&self, a: &MSym) -> MSym {
        mp_neg(a)
    }
    fn zero(&self) -> MSym {
        MSym::Zero
    }
    fn one(&self) -> MSym {
        MSym::one()
    }
    fn inv(&self, a: &MSym) -> Option<MSym> {
        mp_inv(a)
    }
}

/// `~𝕄ⁿ` with coordinatewise operations.
#[derive(Debug, Clone, Copy)]
pub struct MaslovSpace {
    pub n: usize,
}

impl SymmetricSpace for MaslovSpace {
    type Field = MaslovField;
    type Elem = Vec<MSym>;

    fn field(&self) -> &MaslovField {
        &MaslovField
    }
    fn add(&self, x: &Vec<MSym>, y: &Vec<MSym>) -> Vec<MSym> {
        x.iter().zip(y).map(|(a, b)| mp_boxplus(a, b)).collect()
    }
    fn smul(&self, l: &MSym, x: &Vec<MSym>) -> Vec<MSym> {
        x.iter().map(|a| mp_otimes(l, a)).collect()
    }
    fn neg(&self, x: &Vec<MSym>) -> Vec<MSym> {
        x.iter().map(mp_neg).collect()
    }
    fn zero(&self) -> Vec<MSym> {
        vec![MSym::Zero; self.n]
    }
}

/// Sampled 𝕄-convexity: `x ~⊞ (t ~⊗ y) ∈ M` for all sampled `x, y ∈ M` and
/// `t ∈ 𝕄`. Returns the first violating `(x, y, t)`.
pub fn m_convex_check(
    membership: impl Fn(&MSym) -> bool,
    members: &[MSym],
    scalars: &[MSym],
) -> Option<(MSym, MSym, MSym)> {
    let scalars: Vec<&MSym> = scalars.iter().filter(|t| t.sign() != Ordering::Less).collect();
    for x in members {
        for y in members {
            for t in &scalars {
                if !membership(&mp_boxplus(x, &mp_otimes(t, y))) {
                    return Some((x.clone(), y.clone(), (*t).clone()));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{check_pseudo_field_axioms, check_symmetric_space_axioms};

    fn p(a: i64) -> MSym {
        MSym::pos(a.into())
    }

    fn n(a: i64) -> MSym {
        MSym::neg_of(a.into())
    }

    #[test]
    fn operations() {
        assert_eq!(mp_boxplus(&p(3), &p(1)), p(3));
        assert_eq!(mp_boxplus(&p(2), &n(2)), MSym::Zero);
        assert_eq!(mp_boxplus(&n(2), &MSym::Zero), n(2));
        assert_eq!(mp_otimes(&p(5), &MSym::one()), p(5));
        assert_eq!(mp_otimes(&n(1), &n(1)), p(2));
        assert_eq!(mp_otimes(&MSym::Zero, &n(1)), MSym::Zero);
        assert_eq!(mp_abs(&n(4)), p(4));
        assert_eq!(mp_inv(&n(4)), Some(n(-4)));
    }

    #[test]
    fn nary_transport() {
        let l = |k: i64| Scalar::from_int(k);
        let zs: Vec<MSym> = [-3i64, -2, 3, 3, 1, -3]
            .iter()
            .map(|&v| if v < 0 { MSym::neg_of(l(-v)) } else { MSym::pos(l(v)) })
            .collect();
        assert_eq!(mp_nary(&zs).unwrap(), n(2));
        assert_eq!(mp_nary(&[MSym::Zero, MSym::Zero]).unwrap(), MSym::Zero);
        assert_eq!(mp_nary(&[n(7)]).unwrap(), n(7));
        assert_eq!(mp_nary(&[]), Err(Error::EmptyList));
    }

    #[test]
    fn literals() {
        for s in ["-inf", "3", "-1/2+ipi", "0+ipi"] {
            assert_eq!(s.parse::<MSym>().unwrap().to_string(), s);
        }
        assert_eq!("−inf".parse::<MSym>().unwrap(), MSym::Zero);
        assert_eq!("2 + iπ".parse::<MSym>().unwrap(), n(2));
        assert!("inf".parse::<MSym>().is_err());
    }

    #[test]
    fn distances() {
        let z = vec![p(1), n(3)];
        let w = vec![p(1), p(2)];
        assert_eq!(mp_dist(&z, &z).unwrap(), MSym::Zero);
        assert_eq!(mp_dist(&z, &w).unwrap(), p(3));
        assert_eq!(mp_dist_std(&z, &z).unwrap(), 0.0);
    }

    #[test]
    fn structure() {
        let vals = [MSym::Zero, p(0), p(1), n(1), p(-2), n(0)];
        let mut triples = Vec::new();
        for a in &vals {
            for b in &vals {
                for c in &vals {
                    triples.push((a.clone(), b.clone(), c.clone()));
                }
            }
        }
        let r = check_pseudo_field_axioms(&MaslovField, &triples);
        assert!(r.passed(), "{:?}", r.first_failure());
        let samples: Vec<_> = triples
            .iter()
            .map(|(a, b, c)| (vec![a.clone(), b.clone()], vec![c.clone(), a.clone()], b.clone(), c.clone()))
            .collect();
        let r = check_symmetric_space_axioms(&MaslovSpace { n: 2 }, &samples);
        assert!(r.passed(), "{:?}", r.first_failure());
    }

    #[test]
    fn m_convexity() {
        let whole = |_: &MSym| true;
        assert!(m_convex_check(whole, &[p(1), n(2)], &[MSym::Zero, p(0)]).is_none());
        let positives = |z: &MSym| z.sign() != Ordering::Less;
        assert!(m_convex_check(positives, &[p(1), p(3)], &[p(-1), p(4)]).is_none());
        assert!(m_convex_check(|z: &MSym| *z == p(0), &[p(0)], &[p(1)]).is_some());
    }
}
