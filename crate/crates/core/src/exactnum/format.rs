//! Decimal renderings of exact and enclosed values.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::dyadic::Dyadic;
use super::exact::big_pow;

fn pow10(k: u64) -> BigInt {
    big_pow(&BigInt::from(10), k)
}

/// `floor(log10 |r|)` for non-zero `r`.
pub fn decimal_exponent(r: &BigRational) -> i64 {
    let r = r.abs();
    assert!(!r.is_zero(), "decimal exponent of zero");
    // Estimate from digit counts, then correct.
    let mut e = r.numer().to_string().len() as i64 - r.denom().to_string().len() as i64;
    loop {
        let p = ten_pow_rational(e);
        if r < p {
            e -= 1;
        } else if r >= p * BigRational::from_integer(BigInt::from(10)) {
            e += 1;
        } else {
            return e;
        }
    }
}

pub fn ten_pow_rational(e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from_integer(pow10(e as u64))
    } else {
        BigRational::new(BigInt::one(), pow10(e.unsigned_abs()))
    }
}

/// Round `|r|` half-up to `sig` significant figures; returns the integer
/// mantissa (with `sig` digits, possibly `10^sig` after carry) and the
/// decimal exponent of its last digit. The sign is carried on the mantissa.
pub fn round_sig(r: &BigRational, sig: u32) -> (BigInt, i64) {
    if r.is_zero() {
        return (BigInt::zero(), 0);
    }
    let e = decimal_exponent(r);
    let last = e - sig as i64 + 1;
    let scaled = r.abs() / ten_pow_rational(last);
    let two = BigInt::from(2);
    let doubled = scaled * BigRational::from_integer(two.clone());
    let m = (doubled.to_integer() + BigInt::one()).div_floor(&two);
    let m = if r.is_negative() { -m } else { m };
    (m, last)
}

/// Scientific rendering with `sig` significant figures, e.g. `1.35e8`.
pub fn sci_rational(r: &BigRational, sig: u32) -> String {
    if r.is_zero() {
        return "0".into();
    }
    let (m, last) = round_sig(r, sig.max(1));
    let neg = m.is_negative();
    let mut digits = m.abs().to_string();
    let exp = last + digits.len() as i64 - 1;
    while digits.len() > 1 && digits.ends_with('0') {
        digits.pop();
    }
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(&digits[..1]);
    if digits.len() > 1 {
        out.push('.');
        out.push_str(&digits[1..]);
    }
    out.push_str(&format!("e{exp}"));
    out
}

pub fn sci_bigint(v: &BigInt, sig: u32) -> String {
    sci_rational(&BigRational::from_integer(v.clone()), sig)
}

/// Scientific rendering of a dyadic; exact for moderate sizes, approximate
/// via logarithms beyond that.
pub fn sci_dyadic(d: &Dyadic, sig: u32) -> String {
    if d.is_zero() {
        return "0".into();
    }
    if d.exponent().unsigned_abs() < 4096 && d.bits() < 8192 {
        return sci_rational(&d.to_rational(), sig);
    }
    let l10 = d.ln_abs_f64() / std::f64::consts::LN_10;
    let e = l10.floor();
    let m = 10f64.powf(l10 - e);
    let sign = if d.is_negative() { "-" } else { "" };
    format!("{sign}{m:.*}e{e}", (sig.saturating_sub(1)) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn exponents() {
        assert_eq!(decimal_exponent(&r(1, 1)), 0);
        assert_eq!(decimal_exponent(&r(999, 1)), 2);
        assert_eq!(decimal_exponent(&r(1000, 1)), 3);
        assert_eq!(decimal_exponent(&r(1, 1000)), -3);
        assert_eq!(decimal_exponent(&r(1, 999)), -3);
    }

    #[test]
    fn significant_rounding() {
        assert_eq!(round_sig(&r(135_895_000, 1), 3), (BigInt::from(136), 6));
        assert_eq!(round_sig(&r(-2_067_423, 1), 2), (BigInt::from(-21), 5));
        assert_eq!(round_sig(&r(995, 1), 2), (BigInt::from(100), 1));
    }

    #[test]
    fn rendering() {
        assert_eq!(sci_rational(&r(135_895_000, 1), 3), "1.36e8");
        assert_eq!(sci_rational(&r(7920, 1), 4), "7.92e3");
        assert_eq!(sci_rational(&r(995, 1), 2), "1e3");
        assert_eq!(sci_bigint(&BigInt::from(-60), 3), "-6e1");
    }
}
