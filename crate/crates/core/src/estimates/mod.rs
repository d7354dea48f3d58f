//! Closed-form bound functions.
//!
//! Each bound is built as a [`BoundExpr`] so callers can evaluate it as an interval or compare it
//! with [`certified_compare`](crate::exactnum::certified_compare). Open expressions in the
//! variable `n` are exposed through the `*_expr` constructors; [`named_bound`] and the other
//! operations return closed expressions bound to a concrete argument.

mod degrees;
mod extraspecial;
mod lie;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::catalog::{CatalogError, LieFamily};
use crate::exactnum::{eval_interval, BoundExpr, CompareError, CompareOptions};

pub use degrees::{
    alt_min_degree, min_n, min_n_formula, min_n_tilde, sporadic_f, AltRepKind, MinNFormula,
    BETA_PRINTED,
};
pub use extraspecial::{extraspecial_aut_orders, n_bound, ExtraspecialOrders};
pub use lie::{lie_order_upper, out_order_bounds, OutBounds};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EstimateError {
    #[error("unknown bound name: {0}")]
    UnknownName(String),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Compare(#[from] CompareError),
}

/// The named bound functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NamedBound {
    /// `f(n) = (2n+1)^(2 log3(2n+1) + 1)`.
    F,
    /// `f` with the value at 2 replaced by 60.
    FTilde,
    /// `g(n) = Gamma(n+3) = (n+2)!`.
    G,
    /// `s(n) = 2 n^(2 log n + 1)`.
    S,
    /// Envelope exponent `4020 / ((n-20)^2 + 1000)`.
    Envelope,
    CaseBound,
    /// `n^(2 log n + 5)`.
    Residual5,
    /// `2 n^(2 log n + 1)`.
    Residual1,
}

impl NamedBound {
    pub const ALL: [NamedBound; 8] = [
        NamedBound::F,
        NamedBound::FTilde,
        NamedBound::G,
        NamedBound::S,
        NamedBound::Envelope,
        NamedBound::CaseBound,
        NamedBound::Residual5,
        NamedBound::Residual1,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            NamedBound::F => "f",
            NamedBound::FTilde => "f~",
            NamedBound::G => "g",
            NamedBound::S => "s",
            NamedBound::Envelope => "envelope",
            NamedBound::CaseBound => "case-bound",
            NamedBound::Residual5 => "residual-5",
            NamedBound::Residual1 => "residual-1",
        }
    }

    fn min_arg(self) -> u64 {
        match self {
            NamedBound::Envelope | NamedBound::CaseBound | NamedBound::Residual5 => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for NamedBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for NamedBound {
    type Err = EstimateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase();
        let found = match key.as_str() {
            "f" => NamedBound::F,
            "f~" | "ftilde" | "f-tilde" | "f̃" => NamedBound::FTilde,
            "g" => NamedBound::G,
            "s" => NamedBound::S,
            "envelope" | "envelope-exponent" => NamedBound::Envelope,
            "case-bound" | "case" => NamedBound::CaseBound,
            "residual-5" => NamedBound::Residual5,
            "residual-1" => NamedBound::Residual1,
            _ => return Err(EstimateError::UnknownName(s.to_string())),
        };
        Ok(found)
    }
}

fn n() -> BoundExpr {
    BoundExpr::var()
}

fn int(v: i64) -> BoundExpr {
    BoundExpr::int(v)
}

/// `f(n)` as an open expression.
pub fn f_expr() -> BoundExpr {
    let t = int(2).mul(&n()).add(&int(1));
    t.pow(&int(2).mul(&t.log3()).add(&int(1)))
}

/// `g(n) = Gamma(n+3)` as an open expression.
pub fn g_expr() -> BoundExpr {
    n().add(&int(3)).gamma()
}

/// `s(n) = 2 n^(2 log n + 1)` as an open expression.
pub fn s_expr() -> BoundExpr {
    int(2).mul(&n().pow(&int(2).mul(&n().log2()).add(&int(1))))
}

/// `n^(2 log n + 5)` as an open expression.
pub fn residual5_expr() -> BoundExpr {
    n().pow(&int(2).mul(&n().log2()).add(&int(5)))
}

/// `4020 / ((n-20)^2 + 1000)` as an open expression.
pub fn envelope_exponent_expr() -> BoundExpr {
    int(4020).div(&n().sub(&int(20)).powi(2).add(&int(1000)))
}

/// `(n+2)! n^(4020/((n-20)^2+1000))` as an open expression.
pub fn envelope_expr() -> BoundExpr {
    n().add(&int(2)).factorial().mul(&n().pow(&envelope_exponent_expr()))
}

/// `f(n)` at a concrete argument.
pub fn f_at(k: u64) -> BoundExpr {
    f_expr().at(k)
}

/// `f~(n)`: 60 at 2, otherwise `f(n)`.
pub fn f_tilde_at(k: u64) -> BoundExpr {
    if k == 2 {
        int(60)
    } else {
        f_at(k)
    }
}

/// The bound `name` evaluated symbolically at `k`.
pub fn named_bound(name: NamedBound, k: u64) -> Result<BoundExpr, EstimateError> {
    if k < name.min_arg() {
        return Err(EstimateError::OutOfRange(format!("{name} needs n >= {}, got {k}", name.min_arg())));
    }
    Ok(match name {
        NamedBound::F => f_at(k),
        NamedBound::FTilde => f_tilde_at(k),
        NamedBound::G => g_expr().at(k),
        NamedBound::S | NamedBound::Residual1 => s_expr().at(k),
        NamedBound::Envelope => envelope_exponent_expr().at(k),
        NamedBound::CaseBound => case_bound(k)?,
        NamedBound::Residual5 => residual5_expr().at(k),
    })
}

/// Look up a bound by its printed name.
pub fn named_bound_str(name: &str, k: u64) -> Result<BoundExpr, EstimateError> {
    named_bound(name.parse()?, k)
}

/// The shared piecewise bound on `|Aut H|` over the degree `n`.
pub fn case_bound(k: u64) -> Result<BoundExpr, EstimateError> {
    let scaled = |c: &str| BoundExpr::decimal(c).mul(&f_at(k));
    Ok(match k {
        0 | 1 => return Err(EstimateError::OutOfRange(format!("case bound needs n >= 2, got {k}"))),
        2 | 3 | 5 | 7 | 9 | 10 | 11 => int(k as i64).mul(&f_at(k)),
        4 => scaled("4.1"),
        6 => scaled("12.61"),
        8 => scaled("27.69"),
        12 => scaled("231"),
        _ => BoundExpr::int(k).add(&int(2)).factorial(),
    })
}

/// The two residual bounds for quasi-primitive groups.
#[derive(Clone, Debug, PartialEq)]
pub struct ResidualBound {
    /// `n^(2 log n + 5)`, valid for `n >= 2`.
    pub general: BoundExpr,
    /// `2 n^(2 log n + 1)`, present for `n >= 39`.
    pub large_n: Option<BoundExpr>,
}

pub fn quasiprimitive_residual_bound(k: u64) -> Result<ResidualBound, EstimateError> {
    if k < 2 {
        return Err(EstimateError::OutOfRange(format!("residual bound needs n >= 2, got {k}")));
    }
    Ok(ResidualBound {
        general: residual5_expr().at(k),
        large_n: (k >= 39).then(|| s_expr().at(k)),
    })
}

/// Bound on the stabilizer quotient for a group of Lie type in its own characteristic.
pub fn equal_char_stabilizer_bound(family: LieFamily, rank: u32, k: u64) -> Result<BoundExpr, EstimateError> {
    if k < 2 {
        return Err(EstimateError::OutOfRange(format!("degree must be >= 2, got {k}")));
    }
    if family == LieFamily::A && rank == 2 && k == 3 {
        return Ok(int(6));
    }
    Ok(BoundExpr::int(k).mul(&BoundExpr::int(k).log2()))
}

/// Ceiling of a closed expression, refined along the comparison ladder until the enclosure
/// pins it down.
pub(crate) fn certified_ceil(expr: &BoundExpr) -> Result<BigInt, EstimateError> {
    if let Some(v) = crate::exactnum::exact_value(expr, 1) {
        return Ok(crate::exactnum::exact::ceil_rational(&v));
    }
    let opts = CompareOptions::from_env();
    let mut last = String::new();
    for prec in opts.ladder() {
        match eval_interval(expr, 1, prec) {
            Ok(iv) => {
                let (lo, hi) = (iv.lo.ceil(), iv.hi.ceil());
                // ceil is monotone, so equal endpoint ceilings fix the value's ceiling.
                if lo == hi {
                    return Ok(lo);
                }
                last = iv.to_string();
            }
            Err(crate::exactnum::EvalError::Domain(m)) => return Err(CompareError::Domain(m).into()),
            Err(_) => {}
        }
    }
    Err(CompareError::Undecidable {
        cap_bits: opts.cap_bits,
        left: last,
        right: "integer grid".into(),
    }
    .into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::exact::factorial;
    use crate::exactnum::{certified_compare, exact_value};
    use num_rational::BigRational;
    use std::cmp::Ordering;

    #[test]
    fn f_at_six_rounds_to_printed_value() {
        let iv = eval_interval(&named_bound(NamedBound::F, 6).unwrap(), 6, 128).unwrap();
        let (lo, hi) = iv.to_f64_pair();
        assert!((lo - 2_067_423.0).abs() < 1.0 && (hi - 2_067_423.0).abs() < 1.0, "{iv}");
    }

    #[test]
    fn g_is_factorial() {
        let v = exact_value(&named_bound(NamedBound::G, 12).unwrap(), 1).unwrap();
        assert_eq!(v, BigRational::from_integer(factorial(14)));
        assert_eq!(factorial(14), BigInt::from(87_178_291_200u64));
    }

    #[test]
    fn envelope_exponent_at_twenty() {
        let v = exact_value(&named_bound(NamedBound::Envelope, 20).unwrap(), 1).unwrap();
        assert_eq!(v, BigRational::new(4020.into(), 1000.into()));
    }

    #[test]
    fn f_tilde_and_names() {
        assert_eq!(named_bound_str("f~", 2).unwrap(), int(60));
        assert_eq!(
            certified_compare(&named_bound_str("f~", 4).unwrap(), &int(59049), 1),
            Ok(Ordering::Equal)
        );
        assert!(matches!(named_bound_str("h", 3), Err(EstimateError::UnknownName(_))));
        for b in NamedBound::ALL {
            assert_eq!(b.as_str().parse::<NamedBound>().unwrap(), b);
        }
    }

    #[test]
    fn case_bound_branches() {
        let six = case_bound(6).unwrap();
        let direct = BoundExpr::decimal("12.61").mul(&f_at(6));
        assert_eq!(six, direct);
        assert_eq!(exact_value(&case_bound(13).unwrap(), 1), Some(BigRational::from_integer(factorial(15))));
        let iv = eval_interval(&case_bound(2).unwrap(), 1, 64).unwrap();
        let (lo, hi) = iv.to_f64_pair();
        assert!(lo > 1116.0 && hi < 1118.0, "{iv}");
        assert!(case_bound(1).is_err());
    }

    #[test]
    fn residual_components() {
        let r = quasiprimitive_residual_bound(2).unwrap();
        assert_eq!(exact_value(&r.general, 1), Some(BigRational::from_integer(128.into())));
        assert!(r.large_n.is_none());
        assert!(quasiprimitive_residual_bound(39).unwrap().large_n.is_some());
        assert!(quasiprimitive_residual_bound(38).unwrap().large_n.is_none());
    }

    #[test]
    fn stabilizer_bounds() {
        let a2 = equal_char_stabilizer_bound(LieFamily::A, 2, 3).unwrap();
        assert_eq!(exact_value(&a2, 1), Some(BigRational::from_integer(6.into())));
        let a1 = equal_char_stabilizer_bound(LieFamily::A, 1, 4).unwrap();
        assert_eq!(exact_value(&a1, 1), Some(BigRational::from_integer(8.into())));
        let d4 = equal_char_stabilizer_bound(LieFamily::D, 4, 8).unwrap();
        assert_eq!(exact_value(&d4, 1), Some(BigRational::from_integer(24.into())));
    }

    #[test]
    fn ceiling_helper() {
        assert_eq!(certified_ceil(&BoundExpr::frac(7, 2)).unwrap(), BigInt::from(4));
        assert_eq!(certified_ceil(&int(2).log2().add(&int(2).ln())).unwrap(), BigInt::from(2));
    }
}
