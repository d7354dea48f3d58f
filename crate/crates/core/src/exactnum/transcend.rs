//! Enclosures of ln, exp, atanh, atan, the constants ln 2, ln 3, pi, and ln Gamma
//! at integers. Every series carries an explicit remainder interval.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::dyadic::Dyadic;
use super::exact::{binomial, factorial};
use super::interval::RealInterval;
use super::EvalError;

/// Guard bits added on top of the caller's precision inside series evaluations.
const GUARD: u32 = 40;

/// Largest argument of `ln Gamma(n)` computed through the exact factorial.
pub const EXACT_GAMMA_LIMIT: u64 = 5001;

fn symmetric(radius: Dyadic, precision: u32) -> RealInterval {
    RealInterval::new(radius.neg(), radius, precision)
}

/// Upper bound on `max |x|` over the interval as a power of two exponent:
/// every point satisfies `|x| < 2^top`.
fn magnitude_top(z: &RealInterval) -> Option<i64> {
    let m = z.lo.abs().max(z.hi.abs());
    if m.is_zero() {
        None
    } else {
        Some(m.top())
    }
}

/// `atanh(z)` for intervals with `|z| < 1/2`.
pub fn atanh(z: &RealInterval, wp: u32) -> RealInterval {
    let top = match magnitude_top(z) {
        None => return RealInterval::from_i64(0, wp),
        Some(t) => t,
    };
    assert!(top <= -1, "atanh series needs |z| < 1/2");
    let z = z.with_precision(wp);
    let step = 2 * (-top) as u64;
    let n_terms = wp as u64 / step + 2;
    let z2 = z.mul(&z);
    let mut term = z.clone();
    let mut sum = RealInterval::from_i64(0, wp);
    for k in 0..n_terms {
        let denom = RealInterval::from_i64(2 * k as i64 + 1, wp);
        sum = sum.add(&term.div(&denom).expect("odd denominator"));
        term = term.mul(&z2);
    }
    // Tail: |z|^(2N+1) / ((2N+1)(1 - z^2)) < 2^(top(2N+1) + 1).
    let tail_exp = top * (2 * n_terms as i64 + 1) + 1;
    sum.add(&symmetric(Dyadic::pow2(tail_exp), wp))
}

/// `atan(x)` for intervals with `|x| < 1/2`.
pub fn atan(x: &RealInterval, wp: u32) -> RealInterval {
    let top = match magnitude_top(x) {
        None => return RealInterval::from_i64(0, wp),
        Some(t) => t,
    };
    assert!(top <= -1, "atan series needs |x| < 1/2");
    let x = x.with_precision(wp);
    let step = 2 * (-top) as u64;
    let n_terms = wp as u64 / step + 2;
    let x2 = x.mul(&x);
    let mut term = x.clone();
    let mut sum = RealInterval::from_i64(0, wp);
    for k in 0..n_terms {
        let denom = RealInterval::from_i64(2 * k as i64 + 1, wp);
        let t = term.div(&denom).expect("odd denominator");
        sum = if k % 2 == 0 { sum.add(&t) } else { sum.sub(&t) };
        term = term.mul(&x2);
    }
    let tail_exp = top * (2 * n_terms as i64 + 1);
    sum.add(&symmetric(Dyadic::pow2(tail_exp), wp))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Constant {
    Ln2,
    Ln3,
    Pi,
}

fn constant_cache() -> &'static Mutex<HashMap<(Constant, u32), RealInterval>> {
    static CACHE: OnceLock<Mutex<HashMap<(Constant, u32), RealInterval>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn ratio(p: i64, q: i64, wp: u32) -> RealInterval {
    RealInterval::from_rational(&BigRational::new(BigInt::from(p), BigInt::from(q)), wp)
}

fn compute_constant(c: Constant, precision: u32) -> RealInterval {
    let wp = precision + GUARD;
    let v = match c {
        Constant::Ln2 => atanh(&ratio(1, 3, wp), wp).scale_pow2(1),
        Constant::Ln3 => {
            let ln32 = atanh(&ratio(1, 5, wp), wp).scale_pow2(1);
            ln2(wp).add(&ln32)
        }
        Constant::Pi => {
            let a = atan(&ratio(1, 5, wp), wp).scale_pow2(4);
            let b = atan(&ratio(1, 239, wp), wp).scale_pow2(2);
            a.sub(&b)
        }
    };
    v.with_precision(precision)
}

fn constant(c: Constant, precision: u32) -> RealInterval {
    if let Some(v) = constant_cache()
        .lock()
        .expect("constant cache poisoned")
        .get(&(c, precision))
    {
        return v.clone();
    }
    let v = compute_constant(c, precision);
    constant_cache()
        .lock()
        .expect("constant cache poisoned")
        .insert((c, precision), v.clone());
    v
}

pub fn ln2(precision: u32) -> RealInterval {
    constant(Constant::Ln2, precision)
}

pub fn ln3(precision: u32) -> RealInterval {
    constant(Constant::Ln3, precision)
}

pub fn pi(precision: u32) -> RealInterval {
    constant(Constant::Pi, precision)
}

/// `ln(y)` for a positive dyadic `y`.
pub fn ln_point(y: &Dyadic, precision: u32) -> Result<RealInterval, EvalError> {
    if !y.is_positive() {
        return Err(EvalError::Domain("logarithm of a non-positive value".into()));
    }
    if *y == Dyadic::one() {
        return Ok(RealInterval::from_i64(0, precision));
    }
    // y = y' * 2^k with y' in [3/4, 3/2).
    let mut k = y.top();
    let mut reduced = y.shl(-k);
    if reduced < Dyadic::new(BigInt::from(3), -2) {
        reduced = reduced.shl(1);
        k -= 1;
    }
    let kbits = 64 - k.unsigned_abs().leading_zeros();
    let wp = precision + GUARD + kbits;
    let r = RealInterval::point(reduced, wp);
    let one = RealInterval::from_i64(1, wp);
    let z = r.sub(&one).div(&r.add(&one))?;
    let mut out = atanh(&z, wp).scale_pow2(1);
    if k != 0 {
        out = out.add(&ln2(wp).mul(&RealInterval::from_i64(k, wp)));
    }
    Ok(out.with_precision(precision))
}

/// `exp(x)` for a dyadic `x`.
pub fn exp_point(x: &Dyadic, precision: u32) -> Result<RealInterval, EvalError> {
    if x.is_zero() {
        return Ok(RealInterval::from_i64(1, precision));
    }
    let xf = x.to_f64();
    if xf > 1e9 {
        return Err(EvalError::Overflow);
    }
    if xf < -1e9 {
        // exp(x) < e^(-1e9) < 2^(-1e9).
        return Ok(RealInterval::new(
            Dyadic::zero(),
            Dyadic::pow2(-1_000_000_000),
            precision,
        ));
    }
    let k = (xf / std::f64::consts::LN_2).round() as i64;
    let kbits = 64 - k.unsigned_abs().leading_zeros();
    const SQUARINGS: i64 = 10;
    let wp = precision + GUARD + kbits + SQUARINGS as u32;
    let xr = RealInterval::new(x.clone(), x.clone(), wp);
    let r = xr
        .sub(&ln2(wp).mul(&RealInterval::from_i64(k, wp)))
        .with_precision(wp);
    let s = r.scale_pow2(-SQUARINGS);
    let top = magnitude_top(&s).unwrap_or(-(wp as i64));
    let top = top.min(-1);
    let n_terms = (wp as i64 / (-top)) + 2;
    let mut term = RealInterval::from_i64(1, wp);
    let mut sum = RealInterval::from_i64(1, wp);
    for j in 1..=n_terms {
        term = term.mul(&s).div(&RealInterval::from_i64(j, wp))?;
        sum = sum.add(&term);
    }
    // Tail: 2 |s|^(N+1) / (N+1)! < 2^(top(N+1) + 1).
    let tail_exp = top * (n_terms + 1) + 1;
    let mut e = sum.add(&symmetric(Dyadic::pow2(tail_exp), wp));
    if e.lo.is_negative() {
        e.lo = Dyadic::zero();
    }
    for _ in 0..SQUARINGS {
        e = e.mul(&e);
    }
    Ok(e.scale_pow2(k).with_precision(precision))
}

/// Bernoulli numbers `B_0 ..= B_max` (with `B_1 = -1/2`).
pub fn bernoulli(max: usize) -> Vec<BigRational> {
    static CACHE: OnceLock<Mutex<Vec<BigRational>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(vec![BigRational::one()]));
    let mut b = cache.lock().expect("bernoulli cache poisoned");
    while b.len() <= max {
        let m = b.len() as u64;
        let mut acc = BigRational::zero();
        for (k, bk) in b.iter().enumerate() {
            if bk.is_zero() {
                continue;
            }
            acc += BigRational::from_integer(binomial(m + 1, k as u64)) * bk;
        }
        let next = -acc / BigRational::from_integer(BigInt::from(m + 1));
        b.push(next);
    }
    b[..=max].to_vec()
}

/// `ln Gamma(n)` for a positive integer `n`.
pub fn ln_gamma(n: &BigInt, precision: u32) -> Result<RealInterval, EvalError> {
    if !n.is_positive() {
        return Err(EvalError::Domain("Gamma at a non-positive integer".into()));
    }
    if let Some(small) = n.to_u64() {
        if small <= EXACT_GAMMA_LIMIT {
            return ln_point(&Dyadic::from_int(&factorial(small - 1)), precision);
        }
    }
    let wp = precision + GUARD;
    let nr = BigRational::from_integer(n.clone());
    let ni = RealInterval::from_int(n, wp);
    let ln_n = ni.ln()?;
    let half = RealInterval::from_rational(&BigRational::new(1.into(), 2.into()), wp);
    let two_pi = pi(wp).scale_pow2(1);
    let mut s = ni.sub(&half).mul(&ln_n).sub(&ni).add(&two_pi.ln()?.scale_pow2(-1));
    // Asymptotic tail with exact coefficients; the remainder after K terms is
    // bounded by the magnitude of the first omitted term.
    let b = bernoulli(122);
    let target = BigRational::new(BigInt::one(), BigInt::one() << (wp as usize + 8));
    let mut n_pow = nr.clone();
    let n_sq = &nr * &nr;
    let mut k = 1usize;
    loop {
        let coeff = &b[2 * k]
            / BigRational::from_integer(BigInt::from((2 * k * (2 * k - 1)) as u64));
        let term = coeff / &n_pow;
        s = s.add(&RealInterval::from_rational(&term, wp));
        n_pow = &n_pow * &n_sq;
        let next = (&b[2 * k + 2]
            / BigRational::from_integer(BigInt::from(((2 * k + 2) * (2 * k + 1)) as u64)))
            / &n_pow;
        let rem = next.abs();
        if rem < target || k == 60 {
            let r = RealInterval::from_rational(&rem, wp);
            s = s.add(&symmetric(r.hi, wp));
            break;
        }
        k += 1;
    }
    Ok(s.with_precision(precision))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn contains_f64(iv: &RealInterval, v: f64, tol: f64) -> bool {
        let (lo, hi) = iv.to_f64_pair();
        lo - tol <= v && v <= hi + tol
    }

    #[test]
    fn constants_enclose_known_values() {
        assert!(contains_f64(&ln2(128), std::f64::consts::LN_2, 1e-15));
        assert!(contains_f64(&ln3(128), 3f64.ln(), 1e-15));
        assert!(contains_f64(&pi(128), std::f64::consts::PI, 1e-15));
        assert!(ln2(256).width() < Dyadic::pow2(-250));
    }

    #[test]
    fn exp_of_one() {
        let e = exp_point(&Dyadic::one(), 128).unwrap();
        assert!(contains_f64(&e, std::f64::consts::E, 1e-15));
        assert!(e.width() < Dyadic::pow2(-120));
    }

    #[test]
    fn exp_large_negative_is_tiny() {
        let e = exp_point(&Dyadic::from_i64(-5_000_000_000), 64).unwrap();
        assert_eq!(e.lo, Dyadic::zero());
    }

    #[test]
    fn bernoulli_small_values() {
        let b = bernoulli(12);
        assert_eq!(b[1], BigRational::new((-1).into(), 2.into()));
        assert_eq!(b[2], BigRational::new(1.into(), 6.into()));
        assert_eq!(b[12], BigRational::new((-691).into(), 2730.into()));
        assert!(b[11].is_zero());
    }

    #[test]
    fn stirling_agrees_with_exact_factorial() {
        // Compare the Stirling path just beyond the exact limit with the exact one
        // shifted by ln(n).
        let n = BigInt::from(EXACT_GAMMA_LIMIT + 1);
        let stirling = ln_gamma(&n, 128).unwrap();
        let exact = ln_point(&Dyadic::from_int(&factorial(EXACT_GAMMA_LIMIT)), 128).unwrap();
        assert!(stirling.certified_cmp(&exact).is_none());
        assert!(stirling.width() < Dyadic::pow2(-80));
    }
}
