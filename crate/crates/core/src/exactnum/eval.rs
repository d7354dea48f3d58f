//! Interval, log-domain and exact evaluation of [`BoundExpr`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::dyadic::Dyadic;
use super::exact::{exact_log_rational, exact_root, factorial, rational_powi};
use super::expr::{BoundExpr, Node};
use super::interval::RealInterval;
use super::transcend::{self, EXACT_GAMMA_LIMIT};
use super::EvalError;

/// Extra bits carried internally above the requested precision.
const EVAL_GUARD: u32 = 32;

/// Largest exact power materialised by [`exact_value`], in bits.
const EXACT_POWER_BITS: u64 = 1 << 20;

/// Largest factorial argument materialised by [`exact_value`].
const EXACT_FACTORIAL_LIMIT: u64 = 5000;

/// Enclosure of `expr` at the integer `point`.
pub fn eval_interval(expr: &BoundExpr, point: u64, precision: u32) -> Result<RealInterval, EvalError> {
    let n = BigInt::from(point);
    Ok(eval(expr, &n, precision + EVAL_GUARD)?.with_precision(precision))
}

/// Enclosure of `ln(expr)` at `point`; the value must be positive.
///
/// Works without materialising the value, so it handles quantities such as
/// `Gamma(2^72)` whose binary exponent would not fit a direct evaluation.
pub fn eval_ln(expr: &BoundExpr, point: u64, precision: u32) -> Result<RealInterval, EvalError> {
    let n = BigInt::from(point);
    Ok(ln_of(expr, &n, precision + EVAL_GUARD)?.with_precision(precision))
}

/// Exact value when the expression reduces to rational arithmetic at `point`.
pub fn exact_value(expr: &BoundExpr, point: u64) -> Option<BigRational> {
    exact(expr, &BigInt::from(point))
}

fn exact_integer(expr: &BoundExpr, n: &BigInt) -> Option<BigInt> {
    let v = exact(expr, n)?;
    if v.is_integer() {
        Some(v.to_integer())
    } else {
        None
    }
}

fn exact(expr: &BoundExpr, n: &BigInt) -> Option<BigRational> {
    use Node::*;
    match expr.node() {
        Int(v) => Some(BigRational::from_integer(v.clone())),
        Rat(r) => Some(r.clone()),
        Var => Some(BigRational::from_integer(n.clone())),
        Add(a, b) => Some(exact(a, n)? + exact(b, n)?),
        Sub(a, b) => Some(exact(a, n)? - exact(b, n)?),
        Mul(a, b) => Some(exact(a, n)? * exact(b, n)?),
        Div(a, b) => {
            let d = exact(b, n)?;
            if d.is_zero() {
                return None;
            }
            Some(exact(a, n)? / d)
        }
        PowInt(a, k) => {
            let base = exact(a, n)?;
            let bits = base.numer().bits().max(base.denom().bits());
            if bits.saturating_mul(k.unsigned_abs()) > EXACT_POWER_BITS {
                return None;
            }
            rational_powi(&base, *k)
        }
        Pow(a, b) => {
            let e = exact(b, n)?;
            let base = exact(a, n)?;
            exact_real_power(&base, &e)
        }
        Ln(a) => {
            let v = exact(a, n)?;
            if v.is_one() {
                Some(BigRational::zero())
            } else {
                None
            }
        }
        Log2(a) => exact_log_rational(&exact(a, n)?, 2).map(|k| BigRational::from_integer(k.into())),
        Log3(a) => exact_log_rational(&exact(a, n)?, 3).map(|k| BigRational::from_integer(k.into())),
        Factorial(a) => {
            let k = exact_integer(a, n)?.to_u64()?;
            if k > EXACT_FACTORIAL_LIMIT {
                return None;
            }
            Some(BigRational::from_integer(factorial(k)))
        }
        Gamma(a) => {
            let k = exact_integer(a, n)?.to_u64()?;
            if k == 0 || k > EXACT_FACTORIAL_LIMIT + 1 {
                return None;
            }
            Some(BigRational::from_integer(factorial(k - 1)))
        }
    }
}

/// `base^e` when it is rational: integer exponents, or perfect roots.
fn exact_real_power(base: &BigRational, e: &BigRational) -> Option<BigRational> {
    let q = e.denom().to_u32()?;
    let p = e.numer().to_i64()?;
    if q == 1 {
        let bits = base.numer().bits().max(base.denom().bits());
        if bits.saturating_mul(p.unsigned_abs()) > EXACT_POWER_BITS {
            return None;
        }
        return rational_powi(base, p);
    }
    if base.is_negative() || q > 64 {
        return None;
    }
    if base.is_zero() {
        return if p > 0 { Some(BigRational::zero()) } else { None };
    }
    let rn = exact_root(base.numer(), q)?;
    let rd = exact_root(base.denom(), q)?;
    let root = BigRational::new(rn, rd);
    let bits = root.numer().bits().max(root.denom().bits());
    if bits.saturating_mul(p.unsigned_abs()) > EXACT_POWER_BITS {
        return None;
    }
    rational_powi(&root, p)
}

/// Exact integer value of a small closed exponent, if there is one.
fn integral_exponent(e: &BoundExpr, n: &BigInt) -> Option<i64> {
    if e.size() > 32 {
        return None;
    }
    let v = exact(e, n)?;
    if v.is_integer() {
        v.to_integer().to_i64()
    } else {
        None
    }
}

fn integer_arg(a: &BoundExpr, n: &BigInt, what: &str) -> Result<BigInt, EvalError> {
    exact_integer(a, n).ok_or_else(|| EvalError::Domain(format!("{what} needs an exact integer argument")))
}

fn eval(expr: &BoundExpr, n: &BigInt, wp: u32) -> Result<RealInterval, EvalError> {
    use Node::*;
    match expr.node() {
        Int(v) => Ok(RealInterval::from_int(v, wp)),
        Rat(r) => Ok(RealInterval::from_rational(r, wp)),
        Var => Ok(RealInterval::from_int(n, wp)),
        Add(a, b) => Ok(eval(a, n, wp)?.add(&eval(b, n, wp)?)),
        Sub(a, b) => Ok(eval(a, n, wp)?.sub(&eval(b, n, wp)?)),
        Mul(a, b) => Ok(eval(a, n, wp)?.mul(&eval(b, n, wp)?)),
        Div(a, b) => {
            let d = eval(b, n, wp)?;
            if d.is_point() && d.lo.is_zero() {
                return Err(EvalError::Domain("division by zero".into()));
            }
            eval(a, n, wp)?.div(&d)
        }
        PowInt(a, k) => {
            let base = eval(a, n, wp)?;
            if *k < 0 && base.is_point() && base.lo.is_zero() {
                return Err(EvalError::Domain("zero to a negative power".into()));
            }
            base.powi(*k)
        }
        Pow(a, b) => {
            if let Some(k) = integral_exponent(b, n) {
                return eval(a, n, wp)?.powi(k);
            }
            let base = eval(a, n, wp)?;
            if !base.hi.is_positive() {
                return Err(EvalError::Domain("real power of a non-positive base".into()));
            }
            let e = eval(b, n, wp)?;
            base.pow(&e)
        }
        Ln(a) => ln_of(a, n, wp),
        Log2(a) => ln_of(a, n, wp)?.div(&transcend::ln2(wp)),
        Log3(a) => ln_of(a, n, wp)?.div(&transcend::ln3(wp)),
        Factorial(a) => {
            let k = integer_arg(a, n, "factorial")?;
            if k.is_negative() {
                return Err(EvalError::Domain("factorial of a negative integer".into()));
            }
            gamma_interval(&(k + 1), wp)
        }
        Gamma(a) => {
            let k = integer_arg(a, n, "Gamma")?;
            gamma_interval(&k, wp)
        }
    }
}

fn gamma_interval(k: &BigInt, wp: u32) -> Result<RealInterval, EvalError> {
    if !k.is_positive() {
        return Err(EvalError::Domain("Gamma at a non-positive integer".into()));
    }
    if let Some(small) = k.to_u64() {
        if small <= EXACT_GAMMA_LIMIT {
            return Ok(RealInterval::from_int(&factorial(small - 1), wp));
        }
    }
    transcend::ln_gamma(k, wp)?.exp()
}

/// `ln(value)`, falling back to `ln(eval(value))` where no log-domain rule applies.
fn ln_of(expr: &BoundExpr, n: &BigInt, wp: u32) -> Result<RealInterval, EvalError> {
    match ln_rule(expr, n, wp) {
        Ok(v) => Ok(v),
        Err(EvalError::Domain(msg)) => Err(EvalError::Domain(msg)),
        Err(_) => eval(expr, n, wp)?.ln(),
    }
}

fn ln_rational(r: &BigRational, wp: u32) -> Result<RealInterval, EvalError> {
    if !r.is_positive() {
        return Err(EvalError::Domain("logarithm of a non-positive value".into()));
    }
    let num = transcend::ln_point(&Dyadic::from_int(r.numer()), wp)?;
    if r.denom().is_one() {
        return Ok(num);
    }
    Ok(num.sub(&transcend::ln_point(&Dyadic::from_int(r.denom()), wp)?))
}

fn ln_rule(expr: &BoundExpr, n: &BigInt, wp: u32) -> Result<RealInterval, EvalError> {
    use Node::*;
    match expr.node() {
        Int(v) => ln_rational(&BigRational::from_integer(v.clone()), wp),
        Rat(r) => ln_rational(r, wp),
        Var => ln_rational(&BigRational::from_integer(n.clone()), wp),
        Mul(a, b) => Ok(ln_of(a, n, wp)?.add(&ln_of(b, n, wp)?)),
        Div(a, b) => Ok(ln_of(a, n, wp)?.sub(&ln_of(b, n, wp)?)),
        PowInt(a, k) => {
            let la = ln_of(a, n, wp)?;
            Ok(la.mul(&RealInterval::from_i64(*k, wp)))
        }
        Pow(a, b) => {
            let la = ln_of(a, n, wp)?;
            let e = match integral_exponent(b, n) {
                Some(k) => RealInterval::from_i64(k, wp),
                None => eval(b, n, wp)?,
            };
            Ok(la.mul(&e))
        }
        Add(a, b) => {
            let la = ln_of(a, n, wp)?;
            let lb = ln_of(b, n, wp)?;
            let (big, small) = if la.midpoint() >= lb.midpoint() { (la, lb) } else { (lb, la) };
            // ln(A + B) = ln A + ln(1 + exp(ln B - ln A)).
            let ratio = small.sub(&big).exp()?;
            Ok(big.add(&RealInterval::from_i64(1, wp).add(&ratio).ln()?))
        }
        Sub(a, b) => {
            let la = ln_of(a, n, wp)?;
            let lb = ln_of(b, n, wp)?;
            let diff = lb.sub(&la);
            if !diff.hi.is_negative() {
                return Err(EvalError::Imprecise("difference not certified positive"));
            }
            let ratio = diff.exp()?;
            Ok(la.add(&RealInterval::from_i64(1, wp).sub(&ratio).ln()?))
        }
        Ln(_) | Log2(_) | Log3(_) => eval(expr, n, wp)?.ln(),
        Factorial(a) => {
            let k = integer_arg(a, n, "factorial")?;
            if k.is_negative() {
                return Err(EvalError::Domain("factorial of a negative integer".into()));
            }
            transcend::ln_gamma(&(k + 1), wp)
        }
        Gamma(a) => transcend::ln_gamma(&integer_arg(a, n, "Gamma")?, wp),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> BoundExpr {
        let t = BoundExpr::int(2).mul(&BoundExpr::var()).add(&BoundExpr::int(1));
        t.pow(&BoundExpr::int(2).mul(&t.log3()).add(&BoundExpr::int(1)))
    }

    #[test]
    fn exact_powers_of_three() {
        assert_eq!(exact_value(&f(), 4), Some(BigRational::from_integer(59049.into())));
        assert_eq!(
            exact_value(&f(), 13),
            Some(BigRational::from_integer(10_460_353_203u64.into()))
        );
        assert_eq!(exact_value(&f(), 5), None);
    }

    #[test]
    fn rational_roots() {
        let e = BoundExpr::int(8).pow(&BoundExpr::frac(2, 3));
        assert_eq!(exact_value(&e, 1), Some(BigRational::from_integer(4.into())));
        let e = BoundExpr::int(2).pow(&BoundExpr::frac(1, 2));
        assert_eq!(exact_value(&e, 1), None);
    }

    #[test]
    fn f_of_two_is_in_range() {
        let iv = eval_interval(&f(), 2, 64).unwrap();
        assert!(iv.lo > Dyadic::from_i64(558) && iv.hi < Dyadic::from_i64(559));
    }

    #[test]
    fn log_domain_matches_direct() {
        let e = f().mul(&BoundExpr::var().add(&BoundExpr::int(3)).gamma());
        let direct = eval_interval(&e, 7, 128).unwrap().ln().unwrap();
        let logd = eval_ln(&e, 7, 128).unwrap();
        assert!(direct.certified_cmp(&logd).is_none());
    }

    #[test]
    fn huge_gamma_in_log_domain() {
        let e = BoundExpr::big(&(BigInt::one() << 72u32)).add(&BoundExpr::int(3)).gamma();
        let l = eval_ln(&e, 1, 128).unwrap();
        // ln Gamma(2^72) is about 2^72 (72 ln 2 - 1).
        let approx = 2f64.powi(72) * (72.0 * std::f64::consts::LN_2 - 1.0);
        let (lo, hi) = l.to_f64_pair();
        assert!((lo / approx - 1.0).abs() < 1e-6 && (hi / approx - 1.0).abs() < 1e-6);
    }

    #[test]
    fn domain_errors() {
        let e = BoundExpr::int(0).ln();
        assert!(matches!(eval_interval(&e, 1, 64), Err(EvalError::Domain(_))));
        let e = BoundExpr::int(1).div(&BoundExpr::var().sub(&BoundExpr::int(3)));
        assert!(matches!(eval_interval(&e, 3, 64), Err(EvalError::Domain(_))));
    }
}
