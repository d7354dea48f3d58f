//! Exact rational arithmetic and certified interval evaluation.
//!
//! Exact quantities live in `num-bigint`/`num-rational`. Transcendental bound
//! expressions are enclosed in [`RealInterval`]s with dyadic endpoints and
//! compared by [`certified_compare`], which only reports `Equal` when both
//! sides reduce to identical rationals.

pub mod compare;
pub mod dyadic;
pub mod eval;
pub mod exact;
pub mod expr;
pub mod format;
pub mod interval;
pub mod transcend;

use thiserror::Error;

pub use compare::{certified_compare, certified_le, compare_with, CompareError, CompareOptions, Comparison};
pub use dyadic::{Dyadic, Round};
pub use eval::{eval_interval, eval_ln, exact_value};
pub use expr::BoundExpr;
pub use interval::RealInterval;

/// Failure to produce an enclosure.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum EvalError {
    /// The expression is undefined at the point.
    #[error("domain error: {0}")]
    Domain(String),
    /// The enclosure is too wide to proceed at this precision.
    #[error("insufficient precision: {0}")]
    Imprecise(&'static str),
    /// The value's binary exponent is out of range for direct evaluation.
    #[error("value too large for direct evaluation")]
    Overflow,
}
