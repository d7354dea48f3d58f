//! Exact integer helpers: factorials, binomials, perfect powers, integer logs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

/// `n!` by balanced product splitting.
pub fn factorial(n: u64) -> BigInt {
    fn product(lo: u64, hi: u64) -> BigInt {
        if hi < lo {
            return BigInt::one();
        }
        if hi - lo < 16 {
            let mut acc = BigInt::one();
            for k in lo..=hi {
                acc *= k;
            }
            return acc;
        }
        let mid = lo + (hi - lo) / 2;
        product(lo, mid) * product(mid + 1, hi)
    }
    product(2, n)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn big_pow(base: &BigInt, e: u64) -> BigInt {
    Pow::pow(base, e)
}

pub fn pow_u64(base: u64, e: u64) -> BigInt {
    Pow::pow(&BigInt::from(base), e)
}

/// `r^e` for an integer exponent; `None` for `0^negative`.
pub fn rational_powi(r: &BigRational, e: i64) -> Option<BigRational> {
    if e >= 0 {
        let e = e as u64;
        Some(BigRational::new(
            big_pow(r.numer(), e),
            big_pow(r.denom(), e),
        ))
    } else {
        if r.is_zero() {
            return None;
        }
        let e = e.unsigned_abs();
        Some(BigRational::new(
            big_pow(r.denom(), e),
            big_pow(r.numer(), e),
        ))
    }
}

/// Exact `k`-th root of a non-negative integer, if it exists.
pub fn exact_root(v: &BigInt, k: u32) -> Option<BigInt> {
    if v.is_negative() {
        return None;
    }
    if k == 1 {
        return Some(v.clone());
    }
    let r = v.nth_root(k);
    if big_pow(&r, k as u64) == *v {
        Some(r)
    } else {
        None
    }
}

/// If `v = base^k` for some integer `k >= 0`, return `k`.
pub fn exact_log(v: &BigInt, base: u64) -> Option<u64> {
    if !v.is_positive() || base < 2 {
        return None;
    }
    let b = BigInt::from(base);
    let mut k = 0u64;
    let mut cur = v.clone();
    while !cur.is_one() {
        let (q, r) = cur.div_rem(&b);
        if !r.is_zero() {
            return None;
        }
        cur = q;
        k += 1;
    }
    Some(k)
}

/// `log_base` of a positive rational when it is an integer.
pub fn exact_log_rational(r: &BigRational, base: u64) -> Option<i64> {
    if !r.is_positive() {
        return None;
    }
    if r.denom().is_one() {
        exact_log(r.numer(), base).and_then(|k| i64::try_from(k).ok())
    } else if r.numer().is_one() {
        exact_log(r.denom(), base).and_then(|k| i64::try_from(k).ok().map(|k| -k))
    } else {
        None
    }
}

/// Smallest `k` with `base^k >= v` for `v >= 1`.
pub fn ceil_log(v: &BigInt, base: u64) -> u64 {
    let b = BigInt::from(base);
    let mut k = 0;
    let mut p = BigInt::one();
    while &p < v {
        p *= &b;
        k += 1;
    }
    k
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// `ceil(r)` for a rational.
pub fn ceil_rational(r: &BigRational) -> BigInt {
    r.ceil().to_integer()
}

pub fn to_u64(v: &BigInt) -> Option<u64> {
    v.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(14), BigInt::from(87_178_291_200u64));
        assert_eq!(factorial(130).to_string().len(), 220);
    }

    #[test]
    fn roots_and_logs() {
        assert_eq!(exact_root(&BigInt::from(243), 5), Some(BigInt::from(3)));
        assert_eq!(exact_root(&BigInt::from(244), 5), None);
        assert_eq!(exact_log(&BigInt::from(81), 3), Some(4));
        assert_eq!(exact_log(&BigInt::from(80), 3), None);
        let eighth = BigRational::new(1.into(), 8.into());
        assert_eq!(exact_log_rational(&eighth, 2), Some(-3));
        assert_eq!(ceil_log(&BigInt::from(9), 2), 4);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(3, 5), BigInt::zero());
    }
}
