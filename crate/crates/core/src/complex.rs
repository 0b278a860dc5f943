// SPDX-License-Identifier: Apache-2.0
//! Complex numbers under coordinatewise `⊞` and the limit product `⊠`.

use serde::{Deserialize, Serialize};

use crate::algebra::{boxminus, boxplus};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::trig::{alpha, pcos, psin, AngleParam};
use crate::vector::Vector;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct BoxComplex {
    pub re: Scalar,
    pub im: Scalar,
}

impl BoxComplex {
    pub fn new(re: Scalar, im: Scalar) -> Self {
        BoxComplex { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        BoxComplex::new(re.into(), im.into())
    }

    pub fn one() -> Self {
        BoxComplex::from_ints(1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        BoxComplex::new(k * &self.re, k * &self.im)
    }

    /// Ordinary complex product.
    pub fn mul_std(&self, w: &BoxComplex) -> Self {
        BoxComplex::new(
            &self.re * &w.re - &self.im * &w.im,
            &self.re * &w.im + &self.im * &w.re,
        )
    }
}

impl std::fmt::Display for BoxComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, self.im.abs())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl std::str::FromStr for BoxComplex {
    type Err = Error;

    /// Accepts `re,im`.
    fn from_str(s: &str) -> Result<Self> {
        let v: Vector = s.parse()?;
        match v.coords() {
            [re, im] => Ok(BoxComplex::new(re.clone(), im.clone())),
            _ => Err(Error::parse(s, "expected two components re,im")),
        }
    }
}

/// `z⊠w = (ac ⊟ bd) + i(ad ⊞ bc)` for `z = a+ib`, `w = c+id`.
pub fn ctimes(z: &BoxComplex, w: &BoxComplex) -> BoxComplex {
    let (a, b, c, d) = (&z.re, &z.im, &w.re, &w.im);
    BoxComplex::new(boxminus(&(a * c), &(b * d)), boxplus(&(a * d), &(b * c)))
}

/// `|z|∞ = max(|a|, |b|)`.
pub fn cmod_infty(z: &BoxComplex) -> Scalar {
    z.re.abs().max(z.im.abs())
}

pub fn cconj(z: &BoxComplex) -> BoxComplex {
    BoxComplex::new(z.re.clone(), -&z.im)
}

pub fn cplus(z: &BoxComplex, w: &BoxComplex) -> BoxComplex {
    BoxComplex::new(boxplus(&z.re, &w.re), boxplus(&z.im, &w.im))
}

/// `z = |z|∞ (pcos θ + i psin θ)`.
pub fn polar(z: &BoxComplex) -> Result<(Scalar, AngleParam)> {
    if z.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let m = cmod_infty(z);
    let u = Vector::new(vec![&z.re / &m, &z.im / &m]);
    Ok((m, alpha(&u)?))
}

pub fn from_polar(modulus: &Scalar, theta: &AngleParam) -> BoxComplex {
    BoxComplex::new(modulus * &pcos(theta.theta()), modulus * &psin(theta.theta()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(a: i64, b: i64) -> BoxComplex {
        BoxComplex::from_ints(a, b)
    }

    #[test]
    fn products() {
        let z = c(3, -2);
        assert_eq!(ctimes(&z, &BoxComplex::one()), z);
        assert_eq!(ctimes(&c(1, 1), &c(1, -1)), c(1, 0));
        assert_eq!(ctimes(&z, &cconj(&z)), c(9, 0));
        assert_eq!(ctimes(&c(1, 1), &c(1, 1)), c(0, 1));
    }

    #[test]
    fn moduli_and_sums() {
        assert_eq!(cmod_infty(&c(3, 4)), Scalar::from_int(4));
        assert_eq!(cplus(&c(3, 1), &c(-3, 2)), c(0, 2));
        let (z, w) = (c(2, -5), c(-3, 1));
        assert_eq!(cmod_infty(&ctimes(&z, &w)), cmod_infty(&z) * cmod_infty(&w));
    }

    #[test]
    fn polar_form() {
        let (m, t) = polar(&c(1, 1)).unwrap();
        assert_eq!((m, t.theta().clone()), (Scalar::one(), Scalar::one()));
        let z = c(-6, 2);
        let (m, t) = polar(&z).unwrap();
        assert_eq!(from_polar(&m, &t), z);
        assert_eq!(polar(&c(0, 0)), Err(Error::ZeroArgument));
        assert_eq!("2,-1".parse::<BoxComplex>().unwrap(), c(2, -1));
        assert_eq!(c(2, -1).to_string(), "2-1i");
    }
}
