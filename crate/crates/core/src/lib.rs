// SPDX-License-Identifier: Apache-2.0
//! Exact rational arithmetic for the idempotent, non-associative limit
//! addition `⊞` on the reals and the geometry built on it.
//!
//! `a ⊞ b` keeps the operand of larger magnitude (and returns `a` when
//! `a = b`, `0` when `a = −b`). Its n-ary extension `Ϝ` cancels equal and
//! opposite entries before taking the survivor of largest magnitude.

pub mod algebra;
pub mod axioms;
pub mod complex;
pub mod convex;
pub mod error;
pub mod lines;
pub mod maxplus;
pub mod scalar;
mod search;
pub mod trig;
pub mod ultrametric;
pub mod vector;

pub use algebra::{boxminus, boxplus, nary, nary_boxplus, smile_minus, smile_plus, IndexedTuple};
pub use complex::BoxComplex;
pub use convex::HullCombination;
pub use error::{Error, Result};
pub use lines::{LineCoefficients, LineForm, LineMembership};
pub use maxplus::MSym;
pub use scalar::Scalar;
pub use trig::AngleParam;
pub use ultrametric::{BallCoord, BallDescriptor};
pub use vector::{Matrix, Vector};
