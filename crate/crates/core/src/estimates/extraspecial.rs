use num_bigint::BigInt;
use num_traits::One;

use super::EstimateError;
use crate::exactnum::exact::{big_pow, is_prime, pow_u64};
use crate::exactnum::BoundExpr;

/// Automorphism data for an extraspecial group of order `q^(1+2a)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtraspecialOrders {
    pub q: u64,
    pub a: u32,
    /// Degree of the faithful irreducible representations, `q^a`.
    pub d: BigInt,
    /// Automorphisms trivial on the center.
    pub aut_c: BigInt,
    pub aut: BigInt,
    /// `N(d, q)`.
    pub n_bound: BoundExpr,
}

/// `|Sp_2a(q)| = q^(a^2) prod_{i=1..a} (q^(2i) - 1)`.
fn symplectic_order(q: u64, a: u32) -> BigInt {
    let qb = BigInt::from(q);
    (1..=a as u64).fold(big_pow(&qb, (a as u64) * (a as u64)), |acc, i| {
        acc * (big_pow(&qb, 2 * i) - BigInt::one())
    })
}

/// `|O^e_2a(q)| = 2 q^(a(a-1)) (q^a - e) prod_{i=1..a-1} (q^(2i) - 1)` for `e = +1, -1`.
fn orthogonal_order(q: u64, a: u32, plus: bool) -> BigInt {
    let qb = BigInt::from(q);
    let a = a as u64;
    let qa = big_pow(&qb, a);
    let middle = if plus { qa - BigInt::one() } else { qa + BigInt::one() };
    (1..a).fold(BigInt::from(2) * big_pow(&qb, a * (a - 1)) * middle, |acc, i| {
        acc * (big_pow(&qb, 2 * i) - BigInt::one())
    })
}

/// `N(d, q)`: `d^(2 log3 d + 3)` for odd `q`, `2 d^(2 log d + 1)` for `q = 2, d > 2`, and 24
/// for `q = 2, d <= 2`.
pub fn n_bound(d: &BigInt, q: u64) -> BoundExpr {
    let de = BoundExpr::big(d);
    if q != 2 {
        de.pow(&BoundExpr::int(2).mul(&de.log3()).add(&BoundExpr::int(3)))
    } else if *d > BigInt::from(2) {
        BoundExpr::int(2).mul(&de.pow(&BoundExpr::int(2).mul(&de.log2()).add(&BoundExpr::int(1))))
    } else {
        BoundExpr::int(24)
    }
}

pub fn extraspecial_aut_orders(q: u64, a: u32) -> Result<ExtraspecialOrders, EstimateError> {
    if !is_prime(q) {
        return Err(EstimateError::NotPrime(q));
    }
    if a == 0 {
        return Err(EstimateError::OutOfRange("a must be positive".into()));
    }
    let inner = pow_u64(q, 2 * a as u64);
    let aut_c = if q == 2 {
        inner * orthogonal_order(2, a, true).max(orthogonal_order(2, a, false))
    } else {
        inner * symplectic_order(q, a)
    };
    let aut = &aut_c * BigInt::from(q - 1);
    let d = pow_u64(q, a as u64);
    Ok(ExtraspecialOrders {
        q,
        a,
        n_bound: n_bound(&d, q),
        d,
        aut_c,
        aut,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::exact_value;
    use num_rational::BigRational;

    fn orders(q: u64, a: u32) -> (u64, u64) {
        let e = extraspecial_aut_orders(q, a).unwrap();
        (e.aut_c.try_into().unwrap(), e.aut.try_into().unwrap())
    }

    #[test]
    fn small_cases() {
        assert_eq!(orders(3, 1), (216, 432));
        assert_eq!(orders(2, 2).0, 1920);
        assert_eq!(orders(7, 1).0, 16464);
        assert_eq!(orders(2, 1), (24, 24));
        assert_eq!(orders(5, 1), (3000, 12000));
    }

    #[test]
    fn n_bound_pieces() {
        let e = extraspecial_aut_orders(2, 1).unwrap();
        assert_eq!(exact_value(&e.n_bound, 1), Some(BigRational::from_integer(24.into())));
        // d = 9: 9^(2*2+3) = 9^7.
        let e = extraspecial_aut_orders(3, 2).unwrap();
        assert_eq!(exact_value(&e.n_bound, 1), Some(BigRational::from_integer(pow_u64(9, 7))));
        assert_eq!(e.d, BigInt::from(9));
    }

    #[test]
    fn rejects_composite() {
        assert_eq!(extraspecial_aut_orders(4, 1), Err(EstimateError::NotPrime(4)));
    }
}
