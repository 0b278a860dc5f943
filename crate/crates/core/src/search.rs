// SPDX-License-Identifier: Apache-2.0
//! Coefficient searches behind hull and line membership.
//!
//! A point `z` is a member when some `(t,r,s,w)` gives
//! `z_i = Ϝ(t x_i, r x_i, s y_i, w y_i)` for every `i`. Every nonzero `z_i`
//! equals one of the four terms, and the coefficient constraint forces one
//! coefficient to be exactly 1, so candidates are drawn from ratios of the
//! data and from tie partners of values already chosen.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::scalar::{common_denominator, Scalar};
use crate::vector::Vector;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Domain {
    /// `t,r,s,w ∈ [0,1]` with `max = 1`.
    Hull,
    /// Real coefficients with `Ϝ(t,r,s,w) = 1`.
    Line,
}

/// `Ϝ` over four terms without allocating.
pub(crate) fn f4(terms: [&Scalar; 4]) -> Scalar {
    let mut done = [false; 4];
    loop {
        let mut best: Option<usize> = None;
        for i in 0..4 {
            if done[i] || terms[i].is_zero() {
                continue;
            }
            match best {
                None => best = Some(i),
                Some(b) if terms[i].cmp_abs(terms[b]) == Ordering::Greater => best = Some(i),
                _ => {}
            }
        }
        let Some(b) = best else {
            return Scalar::zero();
        };
        let mut net = 0i32;
        for i in 0..4 {
            if !done[i] && !terms[i].is_zero() && terms[i].cmp_abs(terms[b]) == Ordering::Equal {
                done[i] = true;
                net += if terms[i].is_positive() { 1 } else { -1 };
            }
        }
        if net > 0 {
            return terms[b].abs();
        }
        if net < 0 {
            return -terms[b].abs();
        }
    }
}

pub(crate) fn coeffs_valid(domain: Domain, c: &[Scalar; 4]) -> bool {
    match domain {
        Domain::Hull => {
            c.iter().all(|v| !v.is_negative() && *v <= Scalar::one())
                && c.iter().any(Scalar::is_one)
        }
        Domain::Line => f4([&c[0], &c[1], &c[2], &c[3]]).is_one(),
    }
}

pub(crate) fn combine(x: &Vector, y: &Vector, c: &[Scalar; 4]) -> Vector {
    Vector::new(
        x.iter()
            .zip(y.iter())
            .map(|(a, b)| f4([&(&c[0] * a), &(&c[1] * a), &(&c[2] * b), &(&c[3] * b)]))
            .collect(),
    )
}

fn matches_at(a: &Scalar, b: &Scalar, z: &Scalar, c: &[Scalar; 4]) -> bool {
    f4([&(&c[0] * a), &(&c[1] * a), &(&c[2] * b), &(&c[3] * b)]) == *z
}

struct Cands {
    domain: Domain,
    set: BTreeSet<Scalar>,
}

impl Cands {
    fn new(domain: Domain) -> Self {
        let mut c = Cands {
            domain,
            set: BTreeSet::new(),
        };
        c.push(Scalar::zero());
        c.push_pm(Scalar::one());
        c
    }

    fn push(&mut self, v: Scalar) {
        let ok = match self.domain {
            Domain::Hull => !v.is_negative() && v <= Scalar::one(),
            Domain::Line => true,
        };
        if ok {
            self.set.insert(v);
        }
    }

    fn push_pm(&mut self, v: Scalar) {
        self.push(-&v);
        self.push(v);
    }
}

/// Search with `t = 1` fixed; the `s = 1` case is the same search with the
/// roles of `x` and `y` exchanged.
fn search_anchored(x: &Vector, y: &Vector, z: &Vector, domain: Domain) -> Option<[Scalar; 4]> {
    let n = x.dim();
    let one = Scalar::one();
    let nz = |v: &Scalar| !v.is_zero();
    let ratio = |p: &Scalar, q: &Scalar| if q.is_zero() { None } else { Some(p / q) };

    let zx: Vec<Scalar> = (0..n).filter_map(|i| ratio(&z[i], &x[i])).collect();
    let zy: Vec<Scalar> = (0..n).filter_map(|i| ratio(&z[i], &y[i])).collect();
    let xy: Vec<Scalar> = (0..n)
        .filter(|&i| nz(&x[i]) && nz(&y[i]))
        .map(|i| &x[i] / &y[i])
        .collect();
    let yx: Vec<Scalar> = xy.iter().filter_map(|v| v.recip()).collect();

    let mut s_c = Cands::new(domain);
    for v in zy.iter().chain(&xy) {
        s_c.push_pm(v.clone());
    }
    for k in &zx {
        for rho in &xy {
            s_c.push_pm(k * rho);
        }
    }

    let free_y: Vec<usize> = (0..n).filter(|&i| y[i].is_zero()).collect();

    for s in &s_c.set {
        let mut r_c = Cands::new(domain);
        r_c.push_pm(s.clone());
        for v in &zx {
            r_c.push_pm(v.clone());
        }
        for rho in &yx {
            r_c.push_pm(s * rho);
            for k in &zy {
                r_c.push_pm(k * rho);
            }
        }
        for r in &r_c.set {
            let partial = [one.clone(), r.clone(), Scalar::zero(), Scalar::zero()];
            if !free_y.iter().all(|&i| matches_at(&x[i], &y[i], &z[i], &partial)) {
                continue;
            }
            let mut w_c = Cands::new(domain);
            w_c.push_pm(s.clone());
            w_c.push_pm(r.clone());
            for v in &zy {
                w_c.push(v.clone());
            }
            for v in &xy {
                w_c.push_pm(v.clone());
                w_c.push_pm(r * v);
            }
            for w in &w_c.set {
                let c = [one.clone(), r.clone(), s.clone(), w.clone()];
                if coeffs_valid(domain, &c)
                    && (0..n).all(|i| matches_at(&x[i], &y[i], &z[i], &c))
                {
                    return Some(c);
                }
            }
        }
    }
    None
}

pub(crate) fn find_coefficients(
    x: &Vector,
    y: &Vector,
    z: &Vector,
    domain: Domain,
) -> Option<[Scalar; 4]> {
    if let Some(c) = search_anchored(x, y, z, domain) {
        return Some(c);
    }
    search_anchored(y, x, z, domain).map(|[s, w, t, r]| [t, r, s, w])
}

fn f4_int(terms: [i128; 4]) -> i128 {
    let mut done = [false; 4];
    loop {
        let mut best: Option<i128> = None;
        for i in 0..4 {
            if !done[i] && terms[i] != 0 {
                let m = terms[i].abs();
                if best.is_none_or(|b| m > b) {
                    best = Some(m);
                }
            }
        }
        let Some(m) = best else {
            return 0;
        };
        let mut net = 0;
        for i in 0..4 {
            if !done[i] && terms[i] != 0 && terms[i].abs() == m {
                done[i] = true;
                net += terms[i].signum();
            }
        }
        if net != 0 {
            return m * net.signum();
        }
    }
}

fn to_i128(v: &BigInt) -> Option<i128> {
    v.to_i128()
}

/// Exhaustive search over the coefficient grid `{k·step : |k·step| ≤ bound}`
/// (restricted to `[0,1]` for hulls). Integer arithmetic after clearing
/// denominators; returns `None` if nothing on the grid reproduces `z` or if
/// the scaled data do not fit in 128 bits.
pub(crate) fn grid_search(
    x: &Vector,
    y: &Vector,
    z: &Vector,
    domain: Domain,
    step: &Scalar,
    bound: &Scalar,
) -> Option<[Scalar; 4]> {
    if !step.is_positive() {
        return None;
    }
    let l = common_denominator(x.iter().chain(y.iter()).chain(z.iter()));
    let scale = |v: &Scalar| to_i128(&(v.numer() * (&l / v.denom())));
    let xs: Vec<i128> = x.iter().map(scale).collect::<Option<_>>()?;
    let ys: Vec<i128> = y.iter().map(scale).collect::<Option<_>>()?;
    let zs: Vec<i128> = z.iter().map(scale).collect::<Option<_>>()?;
    let sn = to_i128(step.numer())?;
    let sd = to_i128(step.denom())?;
    let (lo, hi) = match domain {
        Domain::Hull => (0i128, (Scalar::one() / step).floor().numer().to_i128()?),
        Domain::Line => {
            let k = (bound / step).floor().numer().to_i128()?;
            (-k, k)
        }
    };
    let n = xs.len();
    let target: Vec<i128> = zs.iter().map(|v| v.checked_mul(sd)).collect::<Option<_>>()?;
    for k0 in lo..=hi {
        for k1 in lo..=hi {
            let (c0, c1) = (k0 * sn, k1 * sn);
            for k2 in lo..=hi {
                for k3 in lo..=hi {
                    let (c2, c3) = (k2 * sn, k3 * sn);
                    let ok = match domain {
                        Domain::Hull => c0.max(c1).max(c2).max(c3) == sd,
                        Domain::Line => f4_int([c0, c1, c2, c3]) == sd,
                    };
                    if !ok {
                        continue;
                    }
                    let hit = (0..n).all(|i| {
                        let t = [
                            c0.checked_mul(xs[i]),
                            c1.checked_mul(xs[i]),
                            c2.checked_mul(ys[i]),
                            c3.checked_mul(ys[i]),
                        ];
                        match t {
                            [Some(a), Some(b), Some(c), Some(d)] => f4_int([a, b, c, d]) == target[i],
                            _ => false,
                        }
                    });
                    if hit {
                        let q = |k: i128| step * &Scalar::from(BigInt::from(k));
                        return Some([q(k0), q(k1), q(k2), q(k3)]);
                    }
                }
            }
        }
    }
    None
}
