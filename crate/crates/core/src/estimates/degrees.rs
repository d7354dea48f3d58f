use std::cmp::Ordering;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::{certified_ceil, f_at, EstimateError};
use crate::catalog::{catalog, group_record, CatalogError, GroupKind, Ta6Row};
use crate::exactnum::exact::is_prime;
use crate::exactnum::{certified_compare, BoundExpr};

/// The rounded exponent constant used for the `min ñ` column.
pub const BETA_PRINTED: &str = "4.32";

fn check_order(order: &BigInt) -> Result<(), EstimateError> {
    if *order < BigInt::from(2) {
        return Err(EstimateError::OutOfRange(format!("order must be >= 2, got {order}")));
    }
    Ok(())
}

/// Smallest `m >= start` with `bound(m) >= order`, for `bound` increasing in `m`.
fn least_reaching(order: &BigInt, start: u64, bound: impl Fn(u64) -> BoundExpr) -> Result<u64, EstimateError> {
    let target = BoundExpr::big(order);
    let reaches = |m: u64| -> Result<bool, EstimateError> {
        Ok(certified_compare(&bound(m), &target, 1)? != Ordering::Less)
    };
    if reaches(start)? {
        return Ok(start);
    }
    // Invariant: bound(lo) < order <= bound(hi).
    let mut lo = start;
    let mut hi = start.max(1) * 2;
    while !reaches(hi)? {
        lo = hi;
        hi *= 2;
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if reaches(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// Smallest `m >= 1` with `f(m) >= order`, by certified search.
pub fn min_n(order: &BigInt) -> Result<u64, EstimateError> {
    check_order(order)?;
    least_reaching(order, 1, f_at)
}

/// `min n` from the closed form, under both discriminant constants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinNFormula {
    /// With discriminant `1 + 8 log3 |H|`, the exact inverse of `f`.
    pub value: u64,
    /// With the printed discriminant `0.5 + 8 log3 |H|`.
    pub printed_variant: u64,
}

fn formula_with(order: &BigInt, c: &str) -> Result<u64, EstimateError> {
    let l = BoundExpr::big(order).log3();
    let disc = BoundExpr::decimal(c).add(&BoundExpr::int(8).mul(&l));
    let x = disc
        .pow(&BoundExpr::frac(1, 2))
        .sub(&BoundExpr::int(1))
        .div(&BoundExpr::int(4));
    let n = BoundExpr::int(3).pow(&x).sub(&BoundExpr::int(1)).div(&BoundExpr::int(2));
    let v = certified_ceil(&n)?;
    Ok(v.to_u64().unwrap_or(u64::MAX).max(1))
}

pub fn min_n_formula(order: &BigInt) -> Result<MinNFormula, EstimateError> {
    check_order(order)?;
    Ok(MinNFormula {
        value: formula_with(order, "1")?,
        printed_variant: formula_with(order, "0.5")?,
    })
}

/// `m^(2 log m + 4.32)`.
pub fn tilde_bound_at(m: u64) -> BoundExpr {
    let me = BoundExpr::int(m);
    me.pow(&BoundExpr::int(2).mul(&me.log2()).add(&BoundExpr::decimal(BETA_PRINTED)))
}

/// Smallest `m >= 2` with `m^(2 log m + 4.32) >= order`.
pub fn min_n_tilde(order: &BigInt) -> Result<u64, EstimateError> {
    check_order(order)?;
    least_reaching(order, 2, tilde_bound_at)
}

/// Kind of representation of an alternating group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AltRepKind {
    Linear,
    /// Projective representations that do not lift to linear ones.
    ProjectiveNonlifting,
}

impl FromStr for AltRepKind {
    type Err = EstimateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "linear" => Ok(AltRepKind::Linear),
            "projective" | "projective-nonlifting" => Ok(AltRepKind::ProjectiveNonlifting),
            other => Err(EstimateError::UnknownName(other.to_string())),
        }
    }
}

/// Printed lower bounds for non-lifting projective degrees, `m = 4..=16`.
const PROJECTIVE_SMALL: [u64; 13] = [2, 2, 3, 3, 8, 8, 8, 16, 16, 16, 32, 32, 128];

/// Lower bound on the degree of a faithful irreducible representation of `Alt_m` in
/// characteristic exponent `p`.
pub fn alt_min_degree(m: u32, p: u64, kind: AltRepKind) -> Result<u64, EstimateError> {
    if m < 4 {
        return Err(EstimateError::OutOfRange(format!("alternating degree {m} below 4")));
    }
    if p != 1 && !is_prime(p) {
        return Err(CatalogError::InvalidCharacteristic(p).into());
    }
    let m64 = m as u64;
    Ok(match kind {
        AltRepKind::ProjectiveNonlifting => {
            if m <= 16 {
                PROJECTIVE_SMALL[(m - 4) as usize]
            } else {
                let s = m.count_ones() as u64;
                1u64.checked_shl(((m64 - s - 1) / 2) as u32)
                    .ok_or_else(|| EstimateError::OutOfRange(format!("degree bound for m={m} exceeds 64 bits")))?
            }
        }
        AltRepKind::Linear => {
            if p == 1 {
                if m == 5 {
                    3
                } else {
                    m64 - 1
                }
            } else if m >= 9 || (p != 2 && m >= 7) {
                if !m64.is_multiple_of(p) {
                    m64 - 1
                } else {
                    m64 - 2
                }
            } else {
                match m {
                    5 => 2,
                    6 => 3,
                    7 | 8 => 4,
                    // Alt4 is not covered by the case rules; its faithful irreducible degree is 3.
                    _ => 3,
                }
            }
        }
    })
}

fn ta6_row(name: &str) -> Option<&'static Ta6Row> {
    catalog()
        .ta6
        .iter()
        .find(|r| group_record(&r.group).is_ok_and(|g| g.name == name))
}

/// The piecewise function `F(G, n)`: thresholds from the TA.6 rows, and `1` up to 3 followed by
/// `f(n)` for the other sporadic groups.
pub fn sporadic_f(group: &str, k: u64) -> Result<BoundExpr, EstimateError> {
    let rec = group_record(group)?;
    if let Some(row) = ta6_row(&rec.name) {
        return Ok(if k < row.a1 {
            BoundExpr::int(1)
        } else if k < row.a2 {
            BoundExpr::big(&(&rec.order * BigInt::from(row.aut_factor)))
        } else {
            f_at(k)
        });
    }
    if rec.kind != GroupKind::Sporadic {
        return Err(CatalogError::UnknownGroup(format!("{group}: no F(G, n) thresholds")).into());
    }
    Ok(if k <= 3 { BoundExpr::int(1) } else { f_at(k) })
}
