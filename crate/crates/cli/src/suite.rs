// SPDX-License-Identifier: Apache-2.0
//! Randomized invariant suites behind `boxplus suite`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use boxplus_core::algebra::{boxplus, lower_form, nary, smile_minus, smile_plus, upper_form};
use boxplus_core::axioms::{check_pseudo_field_axioms, check_symmetric_space_axioms, Cartesian, RealField};
use boxplus_core::complex::{cconj, cmod_infty, ctimes, from_polar, polar, BoxComplex};
use boxplus_core::convex::{co_point, HullCombination};
use boxplus_core::lines::{line2d_form, line_contains_nd};
use boxplus_core::maxplus::{MSym, MaslovField, MaslovSpace};
use boxplus_core::trig::{alpha, alpha_inv, inner3_limit, pcos, psin, pythagoras_check, AngleParam};
use boxplus_core::ultrametric::{ball_contains, ball_describe, dist_boxplus};
use boxplus_core::vector::{det_infty, inner_infty, norm_infty};
use boxplus_core::{Matrix, Scalar, Vector};
use boxplus_oracle::{
    bridge, converge, exact_power_sum_is_zero, filter, p_cos, p_det, p_dist, p_inner, p_norm, p_plus, p_sin, p_sum,
    PParam,
};

pub const SUITES: [&str; 9] = [
    "scalar",
    "convergence",
    "induc",
    "ultrametric",
    "pythagoras",
    "trig",
    "complex",
    "lines",
    "maxplus",
];

pub struct Settings {
    pub seed: u64,
    pub samples: usize,
    pub p_grid: Vec<u32>,
    pub tol: f64,
}

#[derive(Debug, Default)]
pub struct Tally {
    pub checked: usize,
    pub failed: usize,
    pub witness: Option<String>,
}

impl Tally {
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }

    pub fn to_json(&self, name: &str) -> Value {
        json!({
            "suite": name,
            "checked": self.checked,
            "failed": self.failed,
            "passed": self.failed == 0,
            "witness": self.witness,
        })
    }
}

/// Small rationals with frequent magnitude ties.
pub fn small(rng: &mut impl Rng) -> Scalar {
    let den = [1, 1, 2, 3][rng.gen_range(0..4)];
    Scalar::frac(rng.gen_range(-6..=6), den)
}

pub fn small_vec(rng: &mut impl Rng, n: usize) -> Vector {
    Vector::new((0..n).map(|_| small(rng)).collect())
}

/// Rationals spread widely enough for the gap filter to pass often.
pub fn wide(rng: &mut impl Rng) -> Scalar {
    Scalar::frac(rng.gen_range(-60..=60), rng.gen_range(1..=6))
}

pub fn wide_vec(rng: &mut impl Rng, n: usize) -> Vector {
    Vector::new((0..n).map(|_| wide(rng)).collect())
}

pub fn run(name: &str, s: &Settings) -> Option<Tally> {
    let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
    let n = s.samples.max(1);
    Some(match name {
        "scalar" => scalar(&mut rng, n),
        "convergence" => convergence(&mut rng, n, s),
        "induc" => induc(&mut rng, n),
        "ultrametric" => ultrametric(&mut rng, n),
        "pythagoras" => pythagoras(&mut rng, n),
        "trig" => trig(&mut rng, n),
        "complex" => complex(&mut rng, n),
        "lines" => lines(&mut rng, n),
        "maxplus" => maxplus(&mut rng, n),
        _ => return None,
    })
}

fn scalar(rng: &mut ChaCha8Rng, n: usize) -> Tally {
    let mut t = Tally::default();
    let samples: Vec<(Scalar, Scalar, Scalar)> = (0..n).map(|_| (small(rng), small(rng), small(rng))).collect();
    let rep = check_pseudo_field_axioms(&RealField, &samples);
    for r in &rep.results {
        t.checked += r.checked;
        t.failed += r.failed;
        if t.witness.is_none() {
            t.witness = r.witness.as_ref().map(|w| format!("{}: {w}", r.axiom));
        }
    }
    for _ in 0..n {
        let len = rng.gen_range(1..=7);
        let xs: Vec<Scalar> = (0..len).map(|_| small(rng)).collect();
        let f = nary(&xs).unwrap();
        let k = small(rng);
        let scaled: Vec<Scalar> = xs.iter().map(|v| &k * v).collect();
        t.check(nary(&scaled).unwrap() == &k * &f, || format!("homogeneity {xs:?} by {k}"));
        let m = xs.iter().map(Scalar::abs).max().unwrap();
        t.check(f.abs() <= m, || format!("bound {xs:?}"));
        let brackets: Vec<Scalar> = (0..len)
            .map(|i| {
                let rest: Vec<Scalar> = xs.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, v)| v.clone()).collect();
                if rest.is_empty() {
                    xs[i].clone()
                } else {
                    boxplus(&xs[i], &nary(&rest).unwrap())
                }
            })
            .collect();
        let decomposes = brackets.iter().all(|b| b.is_zero() || *b == f) && nary(&brackets).unwrap() == f;
        t.check(decomposes, || format!("decomposition {xs:?}"));
        let mut shuffled = xs.clone();
        shuffled.shuffle(rng);
        t.check(
            smile_minus(&xs).unwrap() == smile_minus(&shuffled).unwrap()
                && smile_plus(&xs).unwrap() == smile_plus(&shuffled).unwrap(),
            || format!("smile order {xs:?}"),
        );
        let a: Vec<Scalar> = (0..len).map(|_| small(rng)).collect();
        let prods: Vec<Scalar> = a.iter().zip(&xs).map(|(p, q)| p * q).collect();
        let mid = nary(&prods).unwrap();
        t.check(
            lower_form(&a, &xs).unwrap() <= mid && mid <= upper_form(&a, &xs).unwrap(),
            || format!("sandwich a={a:?} x={xs:?}"),
        );
        let (u, v) = (small(rng), small(rng));
        let bridge = (smile_minus(&[u.clone(), v.clone()]).unwrap() - smile_minus(&[-&u, -&v]).unwrap())
            / Scalar::from_int(2);
        t.check(bridge == boxplus(&u, &v), || format!("bridge ({u}, {v})"));
        t.check(nary(&[u.clone(), v.clone()]).unwrap() == boxplus(&u, &v), || format!("binary ({u}, {v})"));
    }
    t
}

fn rand_matrix(rng: &mut ChaCha8Rng, k: usize) -> Matrix {
    Matrix::from_rows((0..k).map(|_| (0..k).map(|_| wide(rng)).collect()).collect()).unwrap()
}

fn convergence(rng: &mut ChaCha8Rng, n: usize, s: &Settings) -> Tally {
    let mut t = Tally::default();
    let run = |t: &mut Tally, what: &str, eval: &(dyn Fn(&PParam) -> Scalar + Sync), limit: Scalar| {
        let r = converge(eval, &limit, &s.p_grid, s.tol);
        t.check(r.converged, || format!("{what}: limit {limit}, errors {:?}", r.errors));
    };
    let mut done = [0usize; 7];
    let mut guard = 0;
    while done.iter().any(|&d| d < n) && guard < 400 * n {
        guard += 1;
        let dim = rng.gen_range(2..=4);
        let x = wide_vec(rng, dim);
        let y = wide_vec(rng, dim);
        if done[0] < n && filter::sum_ok(&x) {
            done[0] += 1;
            run(&mut t, &format!("sum {x}"), &|pp| p_sum(&x, pp).unwrap(), nary(&x).unwrap());
        }
        if done[1] < n && filter::inner_ok(&x, &y) {
            done[1] += 1;
            run(&mut t, &format!("inner {x} {y}"), &|pp| p_inner(&x, &y, pp).unwrap(), inner_infty(&x, &y).unwrap());
        }
        if done[2] < n && filter::norm_ok(&x) {
            done[2] += 1;
            run(&mut t, &format!("norm {x}"), &|pp| p_norm(&x, pp), norm_infty(&x));
        }
        if done[3] < n && filter::dist_ok(&x, &y) {
            done[3] += 1;
            run(&mut t, &format!("dist {x} {y}"), &|pp| p_dist(&x, &y, pp).unwrap(), dist_boxplus(&x, &y).unwrap());
        }
        let m = rand_matrix(rng, 3);
        if done[4] < n && filter::det_ok(&m) {
            done[4] += 1;
            run(&mut t, &format!("det {:?}", m.rows()), &|pp| p_det(&m, pp).unwrap(), det_infty(&m).unwrap());
        }
        let (u, v) = (wide_vec(rng, 2), wide_vec(rng, 2));
        if u.is_zero() || v.is_zero() {
            continue;
        }
        let den = norm_infty(&u) * norm_infty(&v);
        if done[5] < n && filter::cos_ok(&u, &v) {
            done[5] += 1;
            let lim = inner_infty(&u, &v).unwrap() / &den;
            run(&mut t, &format!("cos {u} {v}"), &|pp| p_cos(&u, &v, pp).unwrap(), lim);
        }
        if done[6] < n && filter::sin_ok(&u, &v) {
            done[6] += 1;
            let m2 = Matrix::from_columns(&[u.clone(), v.clone()]).unwrap();
            let lim = det_infty(&m2).unwrap() / &den;
            run(&mut t, &format!("sin {u} {v}"), &|pp| p_sin(&u, &v, pp).unwrap(), lim);
        }
    }
    t
}

/// A tuple whose magnitude groups all cancel, plus zeros, shuffled.
pub fn cancelling_tuple(rng: &mut impl Rng) -> Vec<Scalar> {
    let mut xs = Vec::new();
    for _ in 0..rng.gen_range(1..=4) {
        let v = wide(rng);
        for _ in 0..rng.gen_range(1..=2) {
            xs.push(v.clone());
            xs.push(-&v);
        }
    }
    for _ in 0..rng.gen_range(0..=2) {
        xs.push(Scalar::zero());
    }
    xs.shuffle(rng);
    xs
}

fn induc(rng: &mut ChaCha8Rng, n: usize) -> Tally {
    let mut t = Tally::default();
    for _ in 0..n {
        let xs = cancelling_tuple(rng);
        t.check(nary(&xs).unwrap().is_zero(), || format!("construction {xs:?}"));
        for p in 1..=5 {
            t.check(exact_power_sum_is_zero(&xs, p), || format!("p={p} {xs:?}"));
        }
    }
    t
}

fn ultrametric(rng: &mut ChaCha8Rng, n: usize) -> Tally {
    let mut t = Tally::default();
    for _ in 0..n {
        let dim = rng.gen_range(1..=4);
        let (x, y, z) = (small_vec(rng, dim), small_vec(rng, dim), small_vec(rng, dim));
        let (dxy, dyx) = (dist_boxplus(&x, &y).unwrap(), dist_boxplus(&y, &x).unwrap());
        let (dxz, dzy) = (dist_boxplus(&x, &z).unwrap(), dist_boxplus(&z, &y).unwrap());
        t.check(dxy == dyx, || format!("symmetry {x} {y}"));
        t.check(dxy.is_zero() == (x == y), || format!("identity {x} {y}"));
        t.check(dxy <= dxz.clone().max(dzy.clone()), || format!("strong triangle {x} {y} {z}"));
        let mut ds = [dxy, dxz, dzy];
        ds.sort();
        t.check(ds[1] == ds[2], || format!("isosceles {x} {y} {z}"));
        let a = small(rng).abs();
        let b = ball_describe(&x, &a).unwrap();
        t.check(
            ball_contains(&b, &z).unwrap() == (dist_boxplus(&x, &z).unwrap() <= a),
            || format!("ball {x} {a} {z}"),
        );
    }
    t
}

/// A triple right-angled in `z`, built coordinate by coordinate.
pub fn right_angled_triple(rng: &mut impl Rng) -> (Vector, Vector, Vector) {
    if rng.gen_bool(0.25) {
        let (a, b, k) = (wide(rng), wide(rng), wide(rng));
        let x = Vector::new(vec![a.clone(), b.clone()]);
        let y = Vector::new(vec![-(&k * &b), &k * &a]);
        return (x, y, Vector::zeros(2));
    }
    let (mut x, mut y, mut z) = (Vec::new(), Vec::new(), Vec::new());
    for _ in 0..rng.gen_range(1..=3) {
        match rng.gen_range(0..4) {
            0 => {
                let (a, b) = (wide(rng), wide(rng));
                x.push(a.clone());
                z.push(a);
                y.push(b);
            }
            1 => {
                let (a, b) = (wide(rng), wide(rng));
                y.push(a.clone());
                z.push(a);
                x.push(b);
            }
            2 => {
                let (a, b, c) = (wide(rng), wide(rng), wide(rng));
                x.push(a.clone());
                y.push(b.clone());
                if c.is_zero() {
                    x.push(Scalar::zero());
                    y.push(wide(rng));
                } else {
                    x.push(c.clone());
                    y.push(-(&a * &b) / &c);
                }
                z.push(Scalar::zero());
                z.push(Scalar::zero());
            }
            _ => {
                x.push(Scalar::zero());
                y.push(wide(rng));
                z.push(Scalar::zero());
            }
        }
    }
    (Vector::new(x), Vector::new(y), Vector::new(z))
}

fn pythagoras(rng: &mut ChaCha8Rng, n: usize) -> Tally {
    let mut t = Tally::default();
    for _ in 0..n {
        let (x, y, z) = right_angled_triple(rng);
        t.check(inner3_limit(&x, &y, &z).unwrap().is_zero(), || format!("construction {x} {y} {z}"));
        t.check(pythagoras_check(&x, &y, &z).unwrap_or(false), || format!("distances {x} {y} {z}"));
    }
    t
}

fn trig(rng: &mut ChaCha8Rng, n: usize) -> Tally {
    let mut t = Tally::default();
    let one = Scalar::one();
    for _ in 0..n {
        let th = Scalar::frac(rng.gen_range(-4000..=4000), rng.gen_range(1..=60));
        let (c, s) = (pcos(&th), psin(&th));
        t.check(c.abs().max(s.abs()) == one, || format!("unit {th}"));
        let k = Scalar::from_int(8 * rng.gen_range(-2..=2));
        t.check(pcos(&(&th + &k)) == c && psin(&(&th + &k)) == s, || format!("period {th}"));
        let z = alpha_inv(&AngleParam::new(&th));
        t.check(alpha(&z).map(|a| a == AngleParam::new(&th)).unwrap_or(false), || format!("alpha {th}"));
        let (u, v) = (small_vec(rng, 2), small_vec(rng, 2));
        if u.is_zero() || v.is_zero() {
            continue;
        }
        let den = norm_infty(&u) * norm_infty(&v);
        let cos = inner_infty(&u, &v).unwrap() / &den;
        let sin = det_infty(&Matrix::from_columns(&[u.clone(), v.clone()]).unwrap()).unwrap() / &den;
        t.check(cos.abs().max(sin.abs()) == one, || format!("max cos sin {u} {v}"));
        let pp = PParam::new(rng.gen_range(0..=8));
        let (cp, sp) = (p_cos(&u, &v, &pp).unwrap(), p_sin(&u, &v, &pp).unwrap());
        let lhs = p_plus(&(&cp * &cp), &(&sp * &sp), &pp);
        t.check((lhs - &one).abs().to_f64() <= 1e-9, || format!("cos_p sin_p {u} {v} p={}", pp.p()));
    }
    t
}

fn complex(rng: &mut ChaCha8Rng, n: usize) -> Tally {
    let mut t = Tally::default();
    for _ in 0..n {
        let z = BoxComplex::new(small(rng), small(rng));
        let w = BoxComplex::new(small(rng), small(rng));
        t.check(cmod_infty(&ctimes(&z, &w)) == cmod_infty(&z) * cmod_infty(&w), || format!("modulus {z} {w}"));
        let m = cmod_infty(&z);
        t.check(ctimes(&z, &cconj(&z)) == BoxComplex::new(&m * &m, Scalar::zero()), || format!("conjugate {z}"));
        if z.is_zero() || w.is_zero() {
            continue;
        }
        let (zu, wu) = (z.scale(&m.recip().unwrap()), w.scale(&cmod_infty(&w).recip().unwrap()));
        t.check(cmod_infty(&ctimes(&zu, &wu)).is_one(), || format!("unit square {zu} {wu}"));
        let (r, th) = polar(&z).unwrap();
        t.check(from_polar(&r, &th) == z, || format!("polar {z}"));
    }
    t
}

fn lines(rng: &mut ChaCha8Rng, n: usize) -> Tally {
    let mut t = Tally::default();
    for _ in 0..n {
        let (x, y) = (small_vec(rng, 2), small_vec(rng, 2));
        let Ok(form) = line2d_form(&x, &y) else {
            continue;
        };
        t.check(form.contains(&x).unwrap() && form.contains(&y).unwrap(), || format!("generators {x} {y}"));
        let c: [Scalar; 4] = std::array::from_fn(|_| Scalar::frac(rng.gen_range(0..=4), 4));
        let Ok(h) = HullCombination::new(c[0].clone(), c[1].clone(), Scalar::one(), c[3].clone()) else {
            continue;
        };
        let p = co_point(&x, &y, &h).unwrap();
        t.check(form.contains(&p).unwrap(), || format!("hull point {p} on line {x} {y}"));
        let dim = rng.gen_range(2..=4);
        let (u, v) = (small_vec(rng, dim), small_vec(rng, dim));
        if u != v {
            let q = co_point(&u, &v, &h).unwrap();
            t.check(line_contains_nd(&u, &v, &q).unwrap().is_member(), || format!("hull point {q} on line {u} {v}"));
        }
    }
    t
}

fn msym(rng: &mut impl Rng) -> MSym {
    match rng.gen_range(0..5) {
        0 => MSym::Zero,
        1 | 2 => MSym::pos(small(rng)),
        _ => MSym::neg_of(small(rng)),
    }
}

fn maxplus(rng: &mut ChaCha8Rng, n: usize) -> Tally {
    let mut t = Tally::default();
    let triples: Vec<(MSym, MSym, MSym)> = (0..n).map(|_| (msym(rng), msym(rng), msym(rng))).collect();
    let vecs: Vec<_> = (0..n)
        .map(|_| (vec![msym(rng), msym(rng)], vec![msym(rng), msym(rng)], msym(rng), msym(rng)))
        .collect();
    let reals: Vec<_> = (0..n).map(|_| (small_vec(rng, 2), small_vec(rng, 2), small(rng), small(rng))).collect();
    for rep in [
        check_pseudo_field_axioms(&MaslovField, &triples),
        check_symmetric_space_axioms(&MaslovSpace { n: 2 }, &vecs),
        check_symmetric_space_axioms(&Cartesian { n: 2 }, &reals),
    ] {
        for r in &rep.results {
            t.checked += r.checked;
            t.failed += r.failed;
            if t.witness.is_none() {
                t.witness = r.witness.as_ref().map(|w| format!("{}: {w}", r.axiom));
            }
        }
    }
    for (a, b, _) in &triples {
        let e = bridge::transport_error(a, b);
        t.check(e.is_some_and(|e| e <= 1e-9), || format!("float bridge {a} {b}"));
    }
    t
}
