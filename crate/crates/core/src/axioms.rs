// SPDX-License-Identifier: Apache-2.0
//! Sampling harnesses for the idempotent pseudo-field and idempotent symmetric
//! space axioms, plus the finite-combination closure check for subspaces.
//!
//! These are tests on samples, not proofs.

use std::fmt::Debug;

use crate::algebra::boxplus;
use crate::error::Result;
use crate::scalar::Scalar;
use crate::vector::{nary_vec_boxplus, Vector};

/// Operations of a candidate idempotent pseudo-field.
pub trait PseudoField {
    type Elem: Clone + PartialEq + Debug;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    /// Multiplicative inverse; `None` for the zero element.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
}

/// Operations of a candidate idempotent symmetric space over a pseudo-field.
pub trait SymmetricSpace {
    type Field: PseudoField;
    type Elem: Clone + PartialEq + Debug;

    fn field(&self) -> &Self::Field;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn smul(&self, l: &<Self::Field as PseudoField>::Elem, x: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn zero(&self) -> Self::Elem;
}

/// Outcome of one axiom over the sample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomResult {
    pub axiom: &'static str,
    pub checked: usize,
    pub failed: usize,
    /// First counterexample, rendered with `Debug`.
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.failed == 0)
    }

    pub fn first_failure(&self) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.failed > 0)
    }

    pub fn result(&self, axiom: &str) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.axiom == axiom)
    }

    fn record(&mut self, axiom: &'static str, ok: Option<bool>, witness: impl FnOnce() -> String) {
        let idx = match self.results.iter().position(|r| r.axiom == axiom) {
            Some(i) => i,
            None => {
                self.results.push(AxiomResult {
                    axiom,
                    checked: 0,
                    failed: 0,
                    witness: None,
                });
                self.results.len() - 1
            }
        };
        let r = &mut self.results[idx];
        match ok {
            None => {}
            Some(true) => r.checked += 1,
            Some(false) => {
                r.checked += 1;
                r.failed += 1;
                if r.witness.is_none() {
                    r.witness = Some(witness());
                }
            }
        }
    }
}

/// Checks axioms (a)(i)-(v), (b)(i)-(iv) and (c) on every sampled triple.
///
/// Weak associativity is tested on pairwise non-symmetric triples only
/// (`a ≠ −b`, `b ≠ −c`, `a ≠ −c`).
pub fn check_pseudo_field_axioms<F: PseudoField>(
    f: &F,
    sample: &[(F::Elem, F::Elem, F::Elem)],
) -> AxiomReport {
    let mut rep = AxiomReport::default();
    let zero = f.zero();
    let one = f.one();
    for (a, b, c) in sample {
        let w = || format!("({a:?}, {b:?}, {c:?})");
        rep.record("add_idempotent", Some(f.add(a, a) == *a), w);
        rep.record("add_commutative", Some(f.add(a, b) == f.add(b, a)), w);
        rep.record("add_neutral", Some(f.add(a, &zero) == *a), w);
        rep.record("add_symmetric", Some(f.add(a, &f.neg(a)) == zero), w);
        let non_symmetric = *a != f.neg(b) && *b != f.neg(c) && *a != f.neg(c);
        rep.record(
            "add_weak_associative",
            non_symmetric.then(|| f.add(&f.add(a, b), c) == f.add(a, &f.add(b, c))),
            w,
        );
        rep.record("mul_commutative", Some(f.mul(a, b) == f.mul(b, a)), w);
        rep.record(
            "mul_associative",
            Some(f.mul(&f.mul(a, b), c) == f.mul(a, &f.mul(b, c))),
            w,
        );
        rep.record("mul_unit", Some(f.mul(a, &one) == *a), w);
        let inv_ok = if *a == zero {
            None
        } else {
            Some(f.inv(a).is_some_and(|i| f.mul(a, &i) == one))
        };
        rep.record("mul_inverse", inv_ok, w);
        rep.record(
            "distributive",
            Some(f.mul(a, &f.add(b, c)) == f.add(&f.mul(a, b), &f.mul(a, c))),
            w,
        );
    }
    rep
}

/// Checks (a)(i)-(iv), (b)(i)-(iv) and the derived rules `λ·0 = 0`, `0·x = 0`
/// and `((−y) ⊞ (−x)) ⊞ (x ⊞ y) = 0` on every sample `(x, y, λ, μ)`.
pub fn check_symmetric_space_axioms<S: SymmetricSpace>(
    s: &S,
    sample: &[(S::Elem, S::Elem, <S::Field as PseudoField>::Elem, <S::Field as PseudoField>::Elem)],
) -> AxiomReport {
    let mut rep = AxiomReport::default();
    let k = s.field();
    let zero = s.zero();
    for (x, y, l, m) in sample {
        let w = || format!("(x={x:?}, y={y:?}, l={l:?}, m={m:?})");
        rep.record("add_idempotent", Some(s.add(x, x) == *x), w);
        rep.record("add_commutative", Some(s.add(x, y) == s.add(y, x)), w);
        rep.record("add_neutral", Some(s.add(x, &zero) == *x), w);
        rep.record("add_symmetric", Some(s.add(x, &s.neg(x)) == zero), w);
        rep.record(
            "smul_distributes_vectors",
            Some(s.smul(l, &s.add(x, y)) == s.add(&s.smul(l, x), &s.smul(l, y))),
            w,
        );
        rep.record(
            "smul_distributes_scalars",
            Some(s.smul(&k.add(l, m), x) == s.add(&s.smul(l, x), &s.smul(m, x))),
            w,
        );
        rep.record(
            "smul_compatible",
            Some(s.smul(&k.mul(l, m), x) == s.smul(l, &s.smul(m, x))),
            w,
        );
        rep.record(
            "smul_unit_and_sign",
            Some(s.smul(&k.one(), x) == *x && s.neg(x) == s.smul(&k.neg(&k.one()), x)),
            w,
        );
        rep.record("scalar_times_zero", Some(s.smul(l, &zero) == zero), w);
        rep.record("zero_times_vector", Some(s.smul(&k.zero(), x) == zero), w);
        let lhs = s.add(&s.add(&s.neg(y), &s.neg(x)), &s.add(x, y));
        rep.record("opposite_sums_cancel", Some(lhs == zero), w);
    }
    rep
}

/// `(ℝ, ⊞, ·)` with exact rationals.
#[derive(Debug, Clone, Copy, Default)]
pub struct RealField;

impl PseudoField for RealField {
    type Elem = Scalar;

    fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        boxplus(a, b)
    }
    fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a * b
    }
    fn neg(&self, a: &Scalar) -> Scalar {
        -a
    }
    fn zero(&self) -> Scalar {
        Scalar::zero()
    }
    fn one(&self) -> Scalar {
        Scalar::one()
    }
    fn inv(&self, a: &Scalar) -> Option<Scalar> {
        a.recip()
    }
}

/// `(ℝⁿ, ⊞, ·)` over [`RealField`].
#[derive(Debug, Clone, Copy)]
pub struct Cartesian {
    pub n: usize,
}

impl SymmetricSpace for Cartesian {
    type Field = RealField;
    type Elem = Vector;

    fn field(&self) -> &RealField {
        &RealField
    }
    fn add(&self, x: &Vector, y: &Vector) -> Vector {
        Vector::new(x.iter().zip(y.iter()).map(|(a, b)| boxplus(a, b)).collect())
    }
    fn smul(&self, l: &Scalar, x: &Vector) -> Vector {
        x.scale(l)
    }
    fn neg(&self, x: &Vector) -> Vector {
        x.neg()
    }
    fn zero(&self) -> Vector {
        Vector::zeros(self.n)
    }
}

/// A combination that escaped the candidate subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureWitness {
    pub coeffs: Vec<Scalar>,
    pub point: Vector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureReport {
    pub closed: bool,
    pub tested: usize,
    pub witness: Option<ClosureWitness>,
}

/// Tests `⊞_i t_i x_i ∈ Y` for every coefficient list, the combination being
/// evaluated coordinatewise in one pass.
pub fn subspace_closure_check(
    membership: impl Fn(&Vector) -> bool,
    generators: &[Vector],
    coeffs: &[Vec<Scalar>],
) -> Result<ClosureReport> {
    let mut tested = 0;
    for t in coeffs {
        crate::error::check_dim(generators.len(), t.len())?;
        let scaled: Vec<Vector> = generators.iter().zip(t).map(|(x, ti)| x.scale(ti)).collect();
        let point = nary_vec_boxplus(&scaled)?;
        tested += 1;
        if !membership(&point) {
            return Ok(ClosureReport {
                closed: false,
                tested,
                witness: Some(ClosureWitness {
                    coeffs: t.clone(),
                    point,
                }),
            });
        }
    }
    Ok(ClosureReport {
        closed: true,
        tested,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    struct OrdinarySum;

    impl PseudoField for OrdinarySum {
        type Elem = Scalar;
        fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
            a + b
        }
        fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
            a * b
        }
        fn neg(&self, a: &Scalar) -> Scalar {
            -a
        }
        fn zero(&self) -> Scalar {
            Scalar::zero()
        }
        fn one(&self) -> Scalar {
            Scalar::one()
        }
        fn inv(&self, a: &Scalar) -> Option<Scalar> {
            a.recip()
        }
    }

    fn triples() -> Vec<(Scalar, Scalar, Scalar)> {
        let vals: Vec<Scalar> = [-3, -1, 0, 1, 2, 3].iter().map(|&n| Scalar::from_int(n)).collect();
        let mut out = vec![];
        for a in &vals {
            for b in &vals {
                for c in &vals {
                    out.push((a.clone(), b.clone(), c.clone()));
                }
            }
        }
        out
    }

    #[test]
    fn reals_pass() {
        let rep = check_pseudo_field_axioms(&RealField, &triples());
        assert!(rep.passed(), "{:?}", rep.first_failure());
        assert!(rep.result("add_weak_associative").unwrap().checked > 0);
    }

    #[test]
    fn ordinary_sum_is_not_idempotent() {
        let rep = check_pseudo_field_axioms(&OrdinarySum, &triples());
        let r = rep.result("add_idempotent").unwrap();
        assert!(r.failed > 0);
        assert!(r.witness.is_some());
    }

    #[test]
    fn cartesian_space_passes() {
        let xs = [Vector::from_ints(&[1, -2]), Vector::from_ints(&[-1, 3]), Vector::from_ints(&[0, 2])];
        let ls = [Scalar::from_int(2), Scalar::from_int(-2), Scalar::frac(1, 2), Scalar::zero()];
        let mut sample = vec![];
        for x in &xs {
            for y in &xs {
                for l in &ls {
                    for m in &ls {
                        sample.push((x.clone(), y.clone(), l.clone(), m.clone()));
                    }
                }
            }
        }
        let rep = check_symmetric_space_axioms(&Cartesian { n: 2 }, &sample);
        assert!(rep.passed(), "{:?}", rep.first_failure());
    }

    #[test]
    fn affine_line_is_not_a_subspace() {
        let first_is_one = |v: &Vector| v[0] == Scalar::one();
        let gens = [Vector::from_ints(&[1, 0]), Vector::from_ints(&[1, 5])];
        let coeffs = vec![vec![Scalar::one(), Scalar::zero()], vec![Scalar::from_int(2), Scalar::zero()]];
        let rep = subspace_closure_check(first_is_one, &gens, &coeffs).unwrap();
        assert!(!rep.closed);
        assert_eq!(rep.witness.unwrap().point, Vector::from_ints(&[2, 0]));
    }
}
