use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use super::EstimateError;
use crate::catalog::{catalog, lie_lookup, CatalogError, LieFamily, LieTypeId};
use crate::catalog::groups::is_solvable_exception;
use crate::exactnum::exact::big_pow;
use crate::exactnum::BoundExpr;

/// `ceil(q^e)` for a positive rational exponent `e`.
fn ceil_power(q: u64, e: &BigRational) -> BigInt {
    let num = e.numer().to_u64().unwrap_or(u64::MAX);
    let den = e.denom().to_u32().unwrap_or(1);
    let power = big_pow(&BigInt::from(q), num);
    let root = power.nth_root(den);
    if big_pow(&root, den as u64) == power {
        root
    } else {
        root + BigInt::one()
    }
}

/// `q^e` as an expression, exact when `e` is an integer.
fn power_expr(q: u64, e: &BigRational) -> BoundExpr {
    if e.is_integer() {
        BoundExpr::big(&big_pow(&BigInt::from(q), e.to_integer().to_u64().unwrap_or(0)))
    } else {
        BoundExpr::int(q).pow(&BoundExpr::rat(e.clone()))
    }
}

/// Upper bound `m^d` on the order, rounded up when `m^d` is irrational.
pub fn lie_order_upper(id: &LieTypeId) -> Result<BigInt, EstimateError> {
    let rec = lie_lookup(id)?;
    let e = id.m_exponent(&BigRational::from_integer(rec.d.into()));
    Ok(ceil_power(id.q, &e))
}

/// Outer automorphism bounds for one group of Lie type.
#[derive(Clone, Debug, PartialEq)]
pub struct OutBounds {
    /// The logarithmic bound, or the flat or tabulated value where those apply.
    pub log_bound: BoundExpr,
    /// The strict power bound `|A| < x^2` with `x = (m^b - 1)/2`, or the tabulated `x`.
    pub power_bound: BoundExpr,
    /// `|A|` when the group is tabulated individually.
    pub tabulated: Option<u64>,
    /// `x = (m^b - 1)/2` as used by both bounds.
    pub x: BoundExpr,
}

fn tabulated_row(id: &LieTypeId) -> Option<&'static crate::catalog::OutRow> {
    catalog().out_rows.iter().find(|r| {
        LieTypeId::parse(&r.group).is_ok_and(|g| &g == id)
    })
}

/// Bounds on `|A|`, the outer automorphism group of `id`.
pub fn out_order_bounds(id: &LieTypeId) -> Result<OutBounds, EstimateError> {
    if is_solvable_exception(id) {
        return Err(CatalogError::ExcludedGroup(id.name()).into());
    }
    if let Some(row) = tabulated_row(id) {
        let x = BoundExpr::rat(row.x.clone());
        return Ok(OutBounds {
            log_bound: BoundExpr::int(row.order),
            power_bound: x.powi(2),
            tabulated: Some(row.order),
            x,
        });
    }
    let rec = lie_lookup(id)?;
    let e = id.m_exponent(&rec.b);
    let mb = power_expr(id.q, &e);
    let x = mb.sub(&BoundExpr::int(1)).div(&BoundExpr::int(2));
    let power_bound = x.powi(2);
    let small = ceil_power(id.q, &e) <= BigInt::from(8);
    let log_bound = if small {
        BoundExpr::int(2)
    } else {
        let coeff = if id.family == LieFamily::D && id.rank == 4 && id.q == 2 {
            "4.8"
        } else {
            "3.03"
        };
        BoundExpr::decimal(coeff).mul(&x.log2())
    };
    Ok(OutBounds {
        log_bound,
        power_bound,
        tabulated: None,
        x,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::exact_value;

    fn id(s: &str) -> LieTypeId {
        LieTypeId::parse(s).unwrap()
    }

    #[test]
    fn order_upper_bounds() {
        assert_eq!(lie_order_upper(&id("A1(4)")).unwrap(), BigInt::from(64));
        assert_eq!(lie_order_upper(&id("B2(3)")).unwrap(), BigInt::from(59049));
        assert_eq!(lie_order_upper(&id("E8(2)")).unwrap(), big_pow(&BigInt::from(2), 248));
    }

    #[test]
    fn tabulated_out_orders() {
        let a = out_order_bounds(&id("A1(4)")).unwrap();
        assert_eq!(a.tabulated, Some(2));
        let g = out_order_bounds(&id("G2(2)")).unwrap();
        assert_eq!(g.tabulated, Some(1));
        assert_eq!(
            exact_value(&g.power_bound, 1),
            Some(BigRational::new(49.into(), 4.into()))
        );
    }

    #[test]
    fn d4_in_characteristic_two_uses_larger_constant() {
        let b = out_order_bounds(&id("D4(4)")).unwrap();
        let x = |mb: i64| BoundExpr::int(mb).sub(&BoundExpr::int(1)).div(&BoundExpr::int(2));
        assert_eq!(b.log_bound, BoundExpr::decimal("4.8").mul(&x(1024).log2()));
        let odd = out_order_bounds(&id("D4(3)")).unwrap();
        assert_eq!(odd.log_bound, BoundExpr::decimal("3.03").mul(&x(243).log2()));
    }

    #[test]
    fn excluded_and_flat() {
        assert!(matches!(
            out_order_bounds(&id("A1(2)")),
            Err(EstimateError::Catalog(CatalogError::ExcludedGroup(_)))
        ));
        // A1(8): m^b = 8, not tabulated, flat value 2.
        let b = out_order_bounds(&id("A1(8)")).unwrap();
        assert_eq!(b.log_bound, BoundExpr::int(2));
    }
}
