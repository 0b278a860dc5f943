// SPDX-License-Identifier: Apache-2.0
//! The `boxplus` command-line front end.
//!
//! Exit codes: 0 on success, 1 on a domain error, 2 on a usage error or a
//! malformed literal. Every failure writes one JSON object
//! `{"error": code, "detail": text}` to stderr.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use boxplus_core::algebra::{boxminus, boxplus, lower_form, nary, residual_index_set, smile_minus, smile_plus};
use boxplus_core::complex::{cconj, cmod_infty, cplus, ctimes, polar, BoxComplex};
use boxplus_core::convex::{co_find, co_grid_find, co_point, HullCombination};
use boxplus_core::lines::{
    half_line_certificate, half_lines, hyperplane_form, line_contains_nd, line_grid_search, parallel_normal_form,
};
use boxplus_core::maxplus::{mp_boxplus, mp_dist, mp_dist_std, mp_nary, mp_otimes};
use boxplus_core::trig::{
    alpha, cos_infty, inner3_limit, is_f_right_angled, orthogonal_pairing, pcos, psin, pythagoras_check, sin_infty,
};
use boxplus_core::ultrametric::{ball_contains, ball_describe, dist_boxplus};
use boxplus_core::vector::{det_infty, inner_infty, norm_infty, signed_products};
use boxplus_core::{Error, IndexedTuple, Scalar, Vector};
use boxplus_oracle::{converge, filter, p_cos, p_det, p_dist, p_inner, p_norm, p_sin, p_sum, DEFAULT_P_GRID, DEFAULT_TOL};

pub mod input;
pub mod output;
pub mod plot;
pub mod suite;
pub mod svg;

use input::{parse_p_grid, parse_points, FileInputs};
use output::{render, Format, Out};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(Error),
    /// A suite reported failures; the payload is the failing suite names.
    SuiteFailed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Domain(Error::Parse { .. }) => 2,
            CliError::Domain(_) | CliError::SuiteFailed(_) => 1,
        }
    }

    pub fn to_json(&self) -> Value {
        let (code, detail) = match self {
            CliError::Usage(d) => ("usage", d.clone()),
            CliError::Domain(e) => (e.code(), e.to_string()),
            CliError::SuiteFailed(d) => ("suite_failed", d.clone()),
        };
        json!({ "error": code, "detail": detail })
    }
}

#[derive(Debug, Parser)]
#[command(name = "boxplus", version, about = "Exact limit algebra (ℝ, ⊞, ·) and its geometry")]
struct Cli {
    /// Output format; defaults to text, json for `oracle` and `suite`, svg for `plot`.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    /// Comma-separated p values for convergence checks.
    #[arg(long, global = true)]
    p_grid: Option<String>,
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// JSON object supplying any named input not given on the command line.
    #[arg(long, global = true)]
    file: Option<PathBuf>,
    /// Sample count for suites and hull sampling.
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Print rationals as decimals with this many digits.
    #[arg(long, global = true)]
    decimals: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Scalar operations.
    Eval(EvalArgs),
    /// Limit determinant of a square matrix, rows separated by `;`.
    Det {
        #[arg(long, allow_hyphen_values = true)]
        matrix: Option<String>,
    },
    /// Limit distance, inner product and norms of two vectors.
    Dist(Pair),
    /// Closed ball descriptor.
    Ball {
        #[arg(long, allow_hyphen_values = true)]
        center: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        /// Also test this point.
        #[arg(long, allow_hyphen_values = true)]
        contains: Option<String>,
    },
    /// Two-point limit hull: samples, or membership of `--z`.
    Hull {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
        /// Search a coefficient grid of this step instead of the candidate set.
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
    },
    /// Limit lines and hyperplanes.
    #[command(subcommand)]
    Line(LineCmd),
    /// Limit trigonometry.
    #[command(subcommand)]
    Trig(TrigCmd),
    /// Limit complex numbers, literals `re,im`.
    #[command(subcommand)]
    Complex(ComplexCmd),
    /// Symmetrized Max-Plus elements, literals `-inf`, `a`, `a+ipi`.
    #[command(subcommand)]
    Maxplus(MaxplusCmd),
    /// Convergence of a finite-p deformation to its limit.
    Oracle(OracleArgs),
    /// Randomized invariant suites.
    Suite {
        /// `all` or one of the suite names.
        #[arg(default_value = "all")]
        name: String,
    },
    /// SVG figures.
    #[command(subcommand)]
    Plot(PlotCmd),
}

#[derive(Debug, Args)]
#[group(multiple = false)]
struct EvalArgs {
    /// n-ary limit sum of a list.
    #[arg(long, allow_hyphen_values = true)]
    nary: Option<String>,
    /// `a,b`.
    #[arg(long, allow_hyphen_values = true)]
    boxplus: Option<String>,
    /// `a,b`.
    #[arg(long, allow_hyphen_values = true)]
    boxminus: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    smile_minus: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    smile_plus: Option<String>,
    /// Residual index set of a list (1-based).
    #[arg(long, allow_hyphen_values = true)]
    residual: Option<String>,
    /// Lower and upper smile forms of `a;x`.
    #[arg(long, allow_hyphen_values = true)]
    forms: Option<String>,
}

#[derive(Debug, Args)]
struct Pair {
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    y: Option<String>,
}

#[derive(Debug, Subcommand)]
enum LineCmd {
    /// Equation through two 2D points, or a hyperplane through `--points`.
    Equation {
        #[command(flatten)]
        pair: Pair,
        /// Points separated by `;`.
        #[arg(long, allow_hyphen_values = true)]
        points: Option<String>,
    },
    /// Whether `--z` lies on the line through `--x`, `--y`.
    Contains {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
        /// Grid step for an exhaustive coefficient search.
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
        /// Grid bound.
        #[arg(long, allow_hyphen_values = true)]
        bound: Option<String>,
    },
    /// Parallelism of the lines through `a, b` and `c, d`.
    Parallel {
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        c: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        d: Option<String>,
    },
    /// The two half-lines, optionally evaluated at `--t`.
    Halflines {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
    },
    /// SVG of the lines through each `--pair "x;y"`.
    Plot {
        #[arg(long, allow_hyphen_values = true)]
        pair: Vec<String>,
    },
}

#[derive(Debug, Subcommand)]
enum TrigCmd {
    /// Triple inner product in `z`.
    Inner3(Triple),
    Cos(Pair),
    Sin(Pair),
    /// Angle parameter of a point on the unit square.
    Alpha {
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
    },
    Pcos(Theta),
    Psin(Theta),
    /// Orthogonal pairing of two vectors (1-based indices).
    Pairing(Pair),
    /// Distance identity of a right-angled triple.
    Pythagoras(Triple),
}

#[derive(Debug, Args)]
struct Triple {
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    y: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
}

#[derive(Debug, Args)]
struct Theta {
    #[arg(long, allow_hyphen_values = true)]
    theta: Option<String>,
}

#[derive(Debug, Args)]
struct ZW {
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    w: Option<String>,
}

#[derive(Debug, Subcommand)]
enum ComplexCmd {
    Times(ZW),
    Plus(ZW),
    Mod(ZW),
    Conj(ZW),
    Polar(ZW),
}

#[derive(Debug, Subcommand)]
enum MaxplusCmd {
    Plus(ZW),
    Times(ZW),
    /// n-ary sum of `--values`.
    Nary {
        #[arg(long, allow_hyphen_values = true)]
        values: Option<String>,
    },
    /// Distance of `--x` and `--y`, comma-separated elements.
    Dist(Pair),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Op {
    Sum,
    Inner,
    Norm,
    Dist,
    Det,
    Cos,
    Sin,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[arg(long, value_enum)]
    op: Op,
    #[command(flatten)]
    pair: Pair,
    #[arg(long, allow_hyphen_values = true)]
    matrix: Option<String>,
}

#[derive(Debug, Subcommand)]
enum PlotCmd {
    /// Hulls of each `--pair "x;y"`.
    Hull {
        #[arg(long, allow_hyphen_values = true)]
        pair: Vec<String>,
    },
    /// Balls around `--center` with each of `--radii`.
    Ball {
        #[arg(long, allow_hyphen_values = true)]
        center: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        radii: Option<String>,
    },
    /// Lines through each `--pair "x;y"`.
    Line {
        #[arg(long, allow_hyphen_values = true)]
        pair: Vec<String>,
    },
    UnitSquare,
    /// `pcos` and `psin` over `[--from, --to]`.
    Pcos {
        #[arg(long, allow_hyphen_values = true, default_value = "-4")]
        from: String,
        #[arg(long, allow_hyphen_values = true, default_value = "4")]
        to: String,
    },
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("results serialize")
}

fn s(v: &Scalar) -> Value {
    Value::String(v.to_string())
}

fn vec_value(v: &Vector) -> Value {
    Value::Array(v.iter().map(s).collect())
}

fn two(fi: &FileInputs, name: &str, arg: &Option<String>) -> Result<(Scalar, Scalar), CliError> {
    match fi.scalars(name, arg)?.as_slice() {
        [a, b] => Ok((a.clone(), b.clone())),
        other => Err(CliError::Usage(format!("--{name} takes two values, got {}", other.len()))),
    }
}

fn pairs(list: &[String]) -> Result<Vec<(Vector, Vector)>, CliError> {
    if list.is_empty() {
        return Err(CliError::Usage("give at least one --pair \"x;y\"".into()));
    }
    list.iter()
        .map(|p| match parse_points(p)?.as_slice() {
            [x, y] => Ok((x.clone(), y.clone())),
            _ => Err(CliError::Usage(format!("--pair {p:?} must hold two points"))),
        })
        .collect()
}

struct Ctx {
    fi: FileInputs,
    p_grid: Vec<u32>,
    tol: f64,
    seed: u64,
    samples: Option<usize>,
}

fn dispatch(cmd: Cmd, cx: &Ctx) -> Result<Out, CliError> {
    let fi = &cx.fi;
    let data = Out::Data;
    Ok(match cmd {
        Cmd::Eval(a) => data(eval(a, fi)?),
        Cmd::Det { matrix } => {
            let m = fi.matrix("matrix", &matrix)?;
            let terms: Vec<Value> = signed_products(&m)?.iter().map(s).collect();
            data(json!({ "det": s(&det_infty(&m)?), "terms": terms }))
        }
        Cmd::Dist(p) => {
            let (x, y) = (fi.vector("x", &p.x)?, fi.vector("y", &p.y)?);
            data(json!({
                "dist": s(&dist_boxplus(&x, &y)?),
                "inner": s(&inner_infty(&x, &y)?),
                "norm_x": s(&norm_infty(&x)),
                "norm_y": s(&norm_infty(&y)),
            }))
        }
        Cmd::Ball { center, alpha, contains } => {
            let b = ball_describe(&fi.vector("center", &center)?, &fi.scalar("alpha", &alpha)?)?;
            let mut v = to_value(&b);
            if let Some(z) = fi.opt("contains", &contains) {
                let z: Vector = z.parse()?;
                v["contains"] = json!(ball_contains(&b, &z)?);
            }
            data(v)
        }
        Cmd::Hull { pair, z, grid } => {
            let (x, y) = (fi.vector("x", &pair.x)?, fi.vector("y", &pair.y)?);
            match fi.opt("z", &z) {
                Some(z) => {
                    let z: Vector = z.parse()?;
                    let found = match fi.opt("grid", &grid) {
                        Some(step) => co_grid_find(&x, &y, &z, &step.parse()?)?,
                        None => co_find(&x, &y, &z)?,
                    };
                    data(json!({
                        "member": found.is_some(),
                        "coefficients": found.map(|c| c.as_array().iter().map(s).collect::<Vec<_>>()),
                    }))
                }
                None => data(hull_samples(&x, &y, cx.samples.unwrap_or(plot::SAMPLES as usize))?),
            }
        }
        Cmd::Line(c) => line(c, fi)?,
        Cmd::Trig(c) => data(trig(c, fi)?),
        Cmd::Complex(c) => data(complex(c, fi)?),
        Cmd::Maxplus(c) => data(maxplus(c, fi)?),
        Cmd::Oracle(a) => data(oracle(a, cx)?),
        Cmd::Suite { name } => return suites(&name, cx),
        Cmd::Plot(c) => Out::Svg(match c {
            PlotCmd::Hull { pair } => plot::hulls(&pairs(&pair)?)?,
            PlotCmd::Line { pair } => plot::lines(&pairs(&pair)?)?,
            PlotCmd::Ball { center, radii } => {
                plot::balls(&fi.vector("center", &center)?, &fi.scalars("radii", &radii)?)?
            }
            PlotCmd::UnitSquare => plot::unit_square(),
            PlotCmd::Pcos { from, to } => plot::trig_graph(&from.parse()?, &to.parse()?)?,
        }),
    })
}

fn eval(a: EvalArgs, fi: &FileInputs) -> Result<Value, CliError> {
    if let Some(l) = fi.opt("nary", &a.nary) {
        return Ok(s(&nary(&l.parse::<Vector>()?)?));
    }
    if a.boxplus.is_some() || (fi.opt("boxplus", &None).is_some() && a.boxminus.is_none()) {
        let (x, y) = two(fi, "boxplus", &a.boxplus)?;
        return Ok(s(&boxplus(&x, &y)));
    }
    if fi.opt("boxminus", &a.boxminus).is_some() {
        let (x, y) = two(fi, "boxminus", &a.boxminus)?;
        return Ok(s(&boxminus(&x, &y)));
    }
    if let Some(l) = fi.opt("smile_minus", &a.smile_minus) {
        return Ok(s(&smile_minus(&l.parse::<Vector>()?)?));
    }
    if let Some(l) = fi.opt("smile_plus", &a.smile_plus) {
        return Ok(s(&smile_plus(&l.parse::<Vector>()?)?));
    }
    if let Some(l) = fi.opt("residual", &a.residual) {
        let t = IndexedTuple::new(l.parse::<Vector>()?.into_coords());
        return Ok(json!(residual_index_set(&t).iter().map(|i| i + 1).collect::<Vec<_>>()));
    }
    if let Some(l) = fi.opt("forms", &a.forms) {
        let [c, x] = parse_points(&l)?.try_into().map_err(|_| CliError::Usage("--forms takes \"a;x\"".into()))?;
        return Ok(json!({
            "lower": s(&lower_form(&c, &x)?),
            "upper": s(&boxplus_core::algebra::upper_form(&c, &x)?),
        }));
    }
    Err(CliError::Usage(
        "eval needs one of --nary, --boxplus, --boxminus, --smile-minus, --smile-plus, --residual, --forms".into(),
    ))
}

fn hull_samples(x: &Vector, y: &Vector, n: usize) -> Result<Value, CliError> {
    let n = n.max(2) as i64;
    let (one, zero) = (Scalar::one(), Scalar::zero());
    let mut rows = Vec::new();
    for k in 0..n {
        let u = Scalar::frac(k, n - 1);
        for c in [
            [one.clone(), zero.clone(), u.clone(), zero.clone()],
            [u.clone(), zero.clone(), one.clone(), zero.clone()],
            [one.clone(), one.clone(), u.clone(), zero.clone()],
            [u.clone(), zero.clone(), one.clone(), one.clone()],
        ] {
            let h = HullCombination::new(c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone())?;
            let p = co_point(x, y, &h)?;
            rows.push(json!({
                "t": s(&c[0]), "r": s(&c[1]), "s": s(&c[2]), "w": s(&c[3]),
                "point": vec_value(&p),
            }));
        }
    }
    Ok(Value::Array(rows))
}

fn line(c: LineCmd, fi: &FileInputs) -> Result<Out, CliError> {
    let v = match c {
        LineCmd::Equation { pair, points } => {
            let pts = match fi.opt("points", &points) {
                Some(p) => parse_points(&p)?,
                None => vec![fi.vector("x", &pair.x)?, fi.vector("y", &pair.y)?],
            };
            let f = hyperplane_form(&pts)?;
            json!({ "coeffs": vec_value(&f.coeffs), "constant": s(&f.constant) })
        }
        LineCmd::Contains { pair, z, grid, bound } => {
            let (x, y, z) = (fi.vector("x", &pair.x)?, fi.vector("y", &pair.y)?, fi.vector("z", &z)?);
            let coeffs = match fi.opt("grid", &grid) {
                Some(step) => {
                    let bound = match fi.opt("bound", &bound) {
                        Some(b) => b.parse()?,
                        None => boxplus_core::lines::default_grid_bound(),
                    };
                    line_grid_search(&x, &y, &z, &step.parse()?, &bound)?
                }
                None => match line_contains_nd(&x, &y, &z)? {
                    boxplus_core::LineMembership::Member(c) => Some(c),
                    boxplus_core::LineMembership::NotFound => None,
                },
            };
            json!({
                "member": coeffs.is_some(),
                "coefficients": coeffs.map(|c| c.as_array().iter().map(s).collect::<Vec<_>>()),
            })
        }
        LineCmd::Parallel { a, b, c, d } => {
            let (a, b) = (fi.vector("a", &a)?, fi.vector("b", &b)?);
            let (c, d) = (fi.vector("c", &c)?, fi.vector("d", &d)?);
            match parallel_normal_form(&a, &b, &c, &d) {
                Ok(f) => json!({
                    "parallel": true,
                    "alpha": s(&f.alpha),
                    "coeffs": vec_value(&f.coeffs),
                    "c": s(&f.c),
                    "d": s(&f.d),
                }),
                Err(Error::NotParallel) => json!({ "parallel": false }),
                Err(e) => return Err(e.into()),
            }
        }
        LineCmd::Halflines { pair, t } => {
            let (x, y) = (fi.vector("x", &pair.x)?, fi.vector("y", &pair.y)?);
            let (h1, h2) = half_lines(&x, &y)?;
            let mut v = json!({
                "offset": vec_value(&h1.offset),
                "forward": vec_value(&h1.direction),
                "backward": vec_value(&h2.direction),
            });
            if let Some(t) = fi.opt("t", &t) {
                let t: Scalar = t.parse()?;
                v["forward_point"] = vec_value(&h1.point(&t)?);
                v["backward_point"] = vec_value(&h2.point(&t)?);
                v["certificate"] = Value::Array(half_line_certificate(&t)?.as_array().iter().map(s).collect());
            }
            v
        }
        LineCmd::Plot { pair } => return Ok(Out::Svg(plot::lines(&pairs(&pair)?)?)),
    };
    Ok(Out::Data(v))
}

fn trig(c: TrigCmd, fi: &FileInputs) -> Result<Value, CliError> {
    let triple = |t: &Triple| -> Result<(Vector, Vector, Vector), CliError> {
        Ok((fi.vector("x", &t.x)?, fi.vector("y", &t.y)?, fi.vector("z", &t.z)?))
    };
    let pair = |p: &Pair| -> Result<(Vector, Vector), CliError> { Ok((fi.vector("x", &p.x)?, fi.vector("y", &p.y)?)) };
    Ok(match c {
        TrigCmd::Inner3(t) => {
            let (x, y, z) = triple(&t)?;
            json!({ "inner3": s(&inner3_limit(&x, &y, &z)?), "right_angled": is_f_right_angled(&x, &y, &z)? })
        }
        TrigCmd::Cos(p) => {
            let (x, y) = pair(&p)?;
            s(&cos_infty(&x, &y)?)
        }
        TrigCmd::Sin(p) => {
            let (x, y) = pair(&p)?;
            s(&sin_infty(&x, &y)?)
        }
        TrigCmd::Alpha { z } => s(alpha(&fi.vector("z", &z)?)?.theta()),
        TrigCmd::Pcos(t) => s(&pcos(&fi.scalar("theta", &t.theta)?)),
        TrigCmd::Psin(t) => s(&psin(&fi.scalar("theta", &t.theta)?)),
        TrigCmd::Pairing(p) => {
            let (x, y) = pair(&p)?;
            let pr = orthogonal_pairing(&x, &y)?;
            json!({
                "pairs": pr.pairs.iter().map(|(i, j)| [i + 1, j + 1]).collect::<Vec<_>>(),
                "rest": pr.rest.map(|i| i + 1),
            })
        }
        TrigCmd::Pythagoras(t) => {
            let (x, y, z) = triple(&t)?;
            json!({
                "holds": pythagoras_check(&x, &y, &z)?,
                "d_xy": s(&dist_boxplus(&x, &y)?),
                "d_xz": s(&dist_boxplus(&x, &z)?),
                "d_yz": s(&dist_boxplus(&y, &z)?),
            })
        }
    })
}

fn complex(c: ComplexCmd, fi: &FileInputs) -> Result<Value, CliError> {
    let z = |a: &ZW| -> Result<BoxComplex, CliError> { Ok(fi.get("z", &a.z)?.parse()?) };
    let w = |a: &ZW| -> Result<BoxComplex, CliError> { Ok(fi.get("w", &a.w)?.parse()?) };
    Ok(match c {
        ComplexCmd::Times(a) => json!(ctimes(&z(&a)?, &w(&a)?).to_string()),
        ComplexCmd::Plus(a) => json!(cplus(&z(&a)?, &w(&a)?).to_string()),
        ComplexCmd::Mod(a) => s(&cmod_infty(&z(&a)?)),
        ComplexCmd::Conj(a) => json!(cconj(&z(&a)?).to_string()),
        ComplexCmd::Polar(a) => {
            let (r, th) = polar(&z(&a)?)?;
            json!({ "modulus": s(&r), "theta": s(th.theta()) })
        }
    })
}

fn maxplus(c: MaxplusCmd, fi: &FileInputs) -> Result<Value, CliError> {
    let one = |name: &str, arg: &Option<String>| -> Result<boxplus_core::MSym, CliError> {
        Ok(fi.get(name, arg)?.parse()?)
    };
    Ok(match c {
        MaxplusCmd::Plus(a) => json!(mp_boxplus(&one("z", &a.z)?, &one("w", &a.w)?).to_string()),
        MaxplusCmd::Times(a) => json!(mp_otimes(&one("z", &a.z)?, &one("w", &a.w)?).to_string()),
        MaxplusCmd::Nary { values } => json!(mp_nary(&fi.msyms("values", &values)?)?.to_string()),
        MaxplusCmd::Dist(p) => {
            let (x, y) = (fi.msyms("x", &p.x)?, fi.msyms("y", &p.y)?);
            json!({ "dist": mp_dist(&x, &y)?.to_string(), "dist_std": mp_dist_std(&x, &y)? })
        }
    })
}

fn oracle(a: OracleArgs, cx: &Ctx) -> Result<Value, CliError> {
    let fi = &cx.fi;
    let x = || fi.vector("x", &a.pair.x);
    let y = || fi.vector("y", &a.pair.y);
    let (grid, tol) = (&cx.p_grid, cx.tol);
    let (report, limit, separated) = match a.op {
        Op::Sum => {
            let x = x()?;
            let l = nary(&x)?;
            (converge(|pp| p_sum(&x, pp).unwrap(), &l, grid, tol), l, filter::sum_ok(&x))
        }
        Op::Inner => {
            let (x, y) = (x()?, y()?);
            let l = inner_infty(&x, &y)?;
            (converge(|pp| p_inner(&x, &y, pp).unwrap(), &l, grid, tol), l, filter::inner_ok(&x, &y))
        }
        Op::Norm => {
            let x = x()?;
            let l = norm_infty(&x);
            (converge(|pp| p_norm(&x, pp), &l, grid, tol), l, filter::norm_ok(&x))
        }
        Op::Dist => {
            let (x, y) = (x()?, y()?);
            let l = dist_boxplus(&x, &y)?;
            (converge(|pp| p_dist(&x, &y, pp).unwrap(), &l, grid, tol), l, filter::dist_ok(&x, &y))
        }
        Op::Det => {
            let m = fi.matrix("matrix", &a.matrix)?;
            let l = det_infty(&m)?;
            (converge(|pp| p_det(&m, pp).unwrap(), &l, grid, tol), l, filter::det_ok(&m))
        }
        Op::Cos => {
            let (x, y) = (x()?, y()?);
            let l = cos_infty(&x, &y)?;
            (converge(|pp| p_cos(&x, &y, pp).unwrap(), &l, grid, tol), l, filter::cos_ok(&x, &y))
        }
        Op::Sin => {
            let (x, y) = (x()?, y()?);
            let l = sin_infty(&x, &y)?;
            (converge(|pp| p_sin(&x, &y, pp).unwrap(), &l, grid, tol), l, filter::sin_ok(&x, &y))
        }
    };
    let mut v = to_value(&report);
    v["limit"] = s(&limit);
    v["separated"] = json!(separated);
    Ok(v)
}

fn suites(name: &str, cx: &Ctx) -> Result<Out, CliError> {
    let names: Vec<&str> = if name == "all" { suite::SUITES.to_vec() } else { vec![name] };
    let settings = suite::Settings {
        seed: cx.seed,
        samples: cx.samples.unwrap_or(1000),
        p_grid: cx.p_grid.clone(),
        tol: cx.tol,
    };
    let mut rows = Vec::new();
    let mut failed = Vec::new();
    for n in names {
        let t = suite::run(n, &settings)
            .ok_or_else(|| CliError::Usage(format!("unknown suite {n:?}; known: all, {}", suite::SUITES.join(", "))))?;
        if t.failed > 0 {
            failed.push(n);
        }
        rows.push(t.to_json(n));
    }
    if failed.is_empty() {
        Ok(Out::Data(Value::Array(rows)))
    } else {
        // The report still goes to stdout; the error object follows on stderr.
        Err(CliError::SuiteFailed(format!(
            "{}\n{}",
            failed.join(", "),
            serde_json::to_string_pretty(&Value::Array(rows)).expect("json values serialize")
        )))
    }
}

/// Replaces every rational string in `v` by its decimal expansion.
fn decimals(v: &mut Value, digits: usize) {
    match v {
        Value::String(t) => {
            if let Ok(q) = t.parse::<Scalar>() {
                *t = q.to_decimal(digits);
            }
        }
        Value::Array(items) => items.iter_mut().for_each(|i| decimals(i, digits)),
        Value::Object(map) => map.values_mut().for_each(|i| decimals(i, digits)),
        _ => {}
    }
}

fn default_format(cmd: &Cmd) -> Format {
    match cmd {
        Cmd::Oracle(_) | Cmd::Suite { .. } => Format::Json,
        Cmd::Plot(_) | Cmd::Line(LineCmd::Plot { .. }) => Format::Svg,
        _ => Format::Text,
    }
}

fn emit(target: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match target {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Usage(format!("cannot write output: {e}"))),
    }
}

fn execute(cli: Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    let format = cli.format.unwrap_or_else(|| default_format(&cli.cmd));
    let p_grid = match &cli.p_grid {
        Some(g) => parse_p_grid(g)?,
        None => DEFAULT_P_GRID.to_vec(),
    };
    let tol = cli.tol.unwrap_or(DEFAULT_TOL);
    if !(tol >= 0.0) {
        return Err(CliError::Usage("--tol must be nonnegative".into()));
    }
    let cx = Ctx {
        fi: FileInputs::load(cli.file.as_deref())?,
        p_grid,
        tol,
        seed: cli.seed,
        samples: cli.samples,
    };
    let result = dispatch(cli.cmd, &cx);
    let out = match result {
        Ok(out) => out,
        Err(CliError::SuiteFailed(d)) => {
            let (names, report) = d.split_once('\n').unwrap_or((&d, ""));
            emit(&cli.out, &format!("{report}\n"), stdout)?;
            return Err(CliError::SuiteFailed(format!("failing suites: {names}")));
        }
        Err(e) => return Err(e),
    };
    let out = match (out, cli.decimals) {
        (Out::Data(mut v), Some(d)) => {
            decimals(&mut v, d);
            Out::Data(v)
        }
        (o, _) => o,
    };
    emit(&cli.out, &render(&out, format)?, stdout)
}

/// Parses `args` (including the program name) and runs one command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let err = CliError::Usage(e.render().to_string().trim().to_string());
            let _ = writeln!(stderr, "{}", err.to_json());
            return err.exit_code();
        }
    };
    match execute(cli, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "{}", e.to_json());
            e.exit_code()
        }
    }
}
