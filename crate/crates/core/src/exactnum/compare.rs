//! Certified comparison with an escalating precision ladder.

use std::cmp::Ordering;

use serde::Serialize;
use thiserror::Error;

use super::eval::{eval_interval, eval_ln, exact_value};
use super::expr::BoundExpr;
use super::interval::RealInterval;
use super::EvalError;

/// Environment variable that may raise the precision cap (bits).
pub const PRECISION_CAP_ENV: &str = "JB_PRECISION_CAP";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompareOptions {
    pub start_bits: u32,
    pub cap_bits: u32,
}

impl Default for CompareOptions {
    fn default() -> Self {
        CompareOptions {
            start_bits: 128,
            cap_bits: 4096,
        }
    }
}

impl CompareOptions {
    /// Defaults, with the cap raised by `JB_PRECISION_CAP` when set to a larger value.
    pub fn from_env() -> CompareOptions {
        let mut opts = CompareOptions::default();
        if let Some(cap) = std::env::var(PRECISION_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u32>().ok())
        {
            opts.cap_bits = opts.cap_bits.max(cap);
        }
        opts
    }

    /// Precisions tried in order: start, doubling, up to the cap.
    pub fn ladder(&self) -> Vec<u32> {
        let mut out = Vec::new();
        let mut p = self.start_bits.max(16);
        while p < self.cap_bits {
            out.push(p);
            p = p.saturating_mul(2);
        }
        out.push(self.cap_bits);
        out
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CompareError {
    #[error("comparison undecidable at {cap_bits} bits (intervals {left} and {right})")]
    Undecidable {
        cap_bits: u32,
        left: String,
        right: String,
    },
    #[error("expression undefined at the point: {0}")]
    Domain(String),
}

/// How a comparison was settled.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Comparison {
    #[serde(serialize_with = "ser_ordering")]
    pub ordering: Ordering,
    /// Settled through exact rational values.
    pub exact: bool,
    /// Settled by comparing enclosures of the logarithms.
    pub log_domain: bool,
    /// Precision of the deciding evaluation (0 for exact).
    pub precision: u32,
    #[serde(skip)]
    pub left: Option<RealInterval>,
    #[serde(skip)]
    pub right: Option<RealInterval>,
}

fn ser_ordering<S: serde::Serializer>(o: &Ordering, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(match o {
        Ordering::Less => "less",
        Ordering::Equal => "equal",
        Ordering::Greater => "greater",
    })
}

/// Compare `a` and `b` at `point` with default options.
pub fn certified_compare(a: &BoundExpr, b: &BoundExpr, point: u64) -> Result<Ordering, CompareError> {
    compare_with(a, b, point, &CompareOptions::default()).map(|c| c.ordering)
}

/// Full comparison record. `Equal` is only ever produced from exact values.
pub fn compare_with(
    a: &BoundExpr,
    b: &BoundExpr,
    point: u64,
    opts: &CompareOptions,
) -> Result<Comparison, CompareError> {
    if let (Some(x), Some(y)) = (exact_value(a, point), exact_value(b, point)) {
        return Ok(Comparison {
            ordering: x.cmp(&y),
            exact: true,
            log_domain: false,
            precision: 0,
            left: None,
            right: None,
        });
    }
    let mut last: Option<(RealInterval, RealInterval)> = None;
    let mut log_ok = true;
    for prec in opts.ladder() {
        if log_ok {
            match (eval_ln(a, point, prec), eval_ln(b, point, prec)) {
                (Ok(la), Ok(lb)) => {
                    if let Some(o) = la.certified_cmp(&lb) {
                        return Ok(decided(o, true, prec, la, lb));
                    }
                    last = Some((la, lb));
                    continue;
                }
                // A non-positive side has no logarithm; go direct from now on.
                _ => log_ok = false,
            }
        }
        let la = eval_interval(a, point, prec);
        let lb = eval_interval(b, point, prec);
        match (la, lb) {
            (Ok(x), Ok(y)) => {
                if let Some(o) = x.certified_cmp(&y) {
                    return Ok(decided(o, false, prec, x, y));
                }
                last = Some((x, y));
            }
            (Err(EvalError::Domain(m)), _) | (_, Err(EvalError::Domain(m))) => {
                return Err(CompareError::Domain(m));
            }
            _ => {}
        }
    }
    let (left, right) = match last {
        Some((l, r)) => (l.to_string(), r.to_string()),
        None => ("unavailable".into(), "unavailable".into()),
    };
    Err(CompareError::Undecidable {
        cap_bits: opts.cap_bits,
        left,
        right,
    })
}

fn decided(o: Ordering, log_domain: bool, precision: u32, l: RealInterval, r: RealInterval) -> Comparison {
    Comparison {
        ordering: o,
        exact: false,
        log_domain,
        precision,
        left: Some(l),
        right: Some(r),
    }
}

/// `a <= b` certified, or an error.
pub fn certified_le(a: &BoundExpr, b: &BoundExpr, point: u64) -> Result<bool, CompareError> {
    Ok(certified_compare(a, b, point)? != Ordering::Greater)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> BoundExpr {
        let t = BoundExpr::int(2).mul(&BoundExpr::var()).add(&BoundExpr::int(1));
        t.pow(&BoundExpr::int(2).mul(&t.log3()).add(&BoundExpr::int(1)))
    }

    #[test]
    fn equal_only_through_exact_forms() {
        assert_eq!(
            certified_compare(&f(), &BoundExpr::int(59049), 4),
            Ok(Ordering::Equal)
        );
        let c = compare_with(&f(), &BoundExpr::int(59049), 4, &CompareOptions::default()).unwrap();
        assert!(c.exact);
    }

    #[test]
    fn strict_orders() {
        assert_eq!(
            certified_compare(&BoundExpr::int(3600), &f(), 4),
            Ok(Ordering::Less)
        );
        let g11 = BoundExpr::int(11).factorial();
        assert_eq!(certified_compare(&f(), &g11, 9), Ok(Ordering::Greater));
    }

    #[test]
    fn indistinguishable_values_are_undecidable() {
        // sqrt(2)^2 versus 2 has no exact form on the left.
        let a = BoundExpr::int(2).pow(&BoundExpr::frac(1, 2)).powi(2);
        let opts = CompareOptions { start_bits: 64, cap_bits: 256 };
        let r = compare_with(&a, &BoundExpr::int(2), 1, &opts);
        assert!(matches!(r, Err(CompareError::Undecidable { .. })));
    }

    #[test]
    fn ladder_shape() {
        assert_eq!(
            CompareOptions::default().ladder(),
            vec![128, 256, 512, 1024, 2048, 4096]
        );
    }
}
