//! Dyadic rationals `m * 2^e` with explicitly rounded operations.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Rounding direction for inexact dyadic operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Round {
    /// Toward negative infinity.
    Down,
    /// Toward positive infinity.
    Up,
}

impl Round {
    pub fn flip(self) -> Round {
        match self {
            Round::Down => Round::Up,
            Round::Up => Round::Down,
        }
    }
}

/// An exact value `mantissa * 2^exponent`, kept with an odd mantissa (or zero).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

pub(crate) fn shr_floor(m: &BigInt, s: u64) -> BigInt {
    if s == 0 {
        return m.clone();
    }
    if m.sign() != Sign::Minus {
        m >> s
    } else {
        let mag = -m;
        let q: BigInt = (mag + ((BigInt::one() << s) - 1)) >> s;
        -q
    }
}

pub(crate) fn shr_ceil(m: &BigInt, s: u64) -> BigInt {
    -shr_floor(&-m, s)
}

pub(crate) fn div_dir(a: &BigInt, b: &BigInt, dir: Round) -> BigInt {
    let (q, r) = a.div_mod_floor(b);
    match dir {
        Round::Down => q,
        Round::Up => {
            if r.is_zero() {
                q
            } else {
                q + 1
            }
        }
    }
}

impl Dyadic {
    pub fn new(mant: BigInt, exp: i64) -> Dyadic {
        if mant.is_zero() {
            return Dyadic::zero();
        }
        let tz = mant.trailing_zeros().unwrap_or(0);
        if tz == 0 {
            Dyadic { mant, exp }
        } else {
            Dyadic {
                mant: mant >> tz,
                exp: exp + tz as i64,
            }
        }
    }

    pub fn zero() -> Dyadic {
        Dyadic {
            mant: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn one() -> Dyadic {
        Dyadic {
            mant: BigInt::one(),
            exp: 0,
        }
    }

    pub fn from_i64(v: i64) -> Dyadic {
        Dyadic::new(BigInt::from(v), 0)
    }

    pub fn from_int(v: &BigInt) -> Dyadic {
        Dyadic::new(v.clone(), 0)
    }

    /// `2^k`.
    pub fn pow2(k: i64) -> Dyadic {
        Dyadic {
            mant: BigInt::one(),
            exp: k,
        }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn sign(&self) -> Sign {
        self.mant.sign()
    }

    pub fn is_positive(&self) -> bool {
        self.mant.sign() == Sign::Plus
    }

    pub fn is_negative(&self) -> bool {
        self.mant.sign() == Sign::Minus
    }

    /// Number of significant bits in the mantissa.
    pub fn bits(&self) -> u64 {
        self.mant.bits()
    }

    /// Position of the leading bit: `|self|` lies in `[2^(top-1), 2^top)`.
    pub fn top(&self) -> i64 {
        self.mant.bits() as i64 + self.exp
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic {
            mant: -&self.mant,
            exp: self.exp,
        }
    }

    pub fn abs(&self) -> Dyadic {
        Dyadic {
            mant: self.mant.abs(),
            exp: self.exp,
        }
    }

    /// Multiply by `2^k` exactly.
    pub fn shl(&self, k: i64) -> Dyadic {
        if self.is_zero() {
            return Dyadic::zero();
        }
        Dyadic {
            mant: self.mant.clone(),
            exp: self.exp + k,
        }
    }

    /// Round to at most `prec` significant bits in the given direction.
    pub fn round(&self, prec: u32, dir: Round) -> Dyadic {
        let bits = self.bits();
        if bits <= prec as u64 {
            return self.clone();
        }
        let s = bits - prec as u64;
        let m = match dir {
            Round::Down => shr_floor(&self.mant, s),
            Round::Up => shr_ceil(&self.mant, s),
        };
        Dyadic::new(m, self.exp + s as i64)
    }

    pub fn add_exact(&self, other: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(other.exp);
        let a = &self.mant << (self.exp - e) as u64;
        let b = &other.mant << (other.exp - e) as u64;
        Dyadic::new(a + b, e)
    }

    /// Rounded sum. Operands of wildly different magnitude are handled without
    /// materialising the exact sum.
    pub fn add(&self, other: &Dyadic, prec: u32, dir: Round) -> Dyadic {
        if self.is_zero() {
            return other.round(prec, dir);
        }
        if other.is_zero() {
            return self.round(prec, dir);
        }
        let (big, small) = if self.top() >= other.top() {
            (self, other)
        } else {
            (other, self)
        };
        let guard = prec as i64 + 8;
        if big.top() - small.top() > guard {
            // `small` is below the rounding unit of `big`; replace it by a
            // same-signed surrogate that keeps the rounding direction honest.
            let low = big.top() - guard;
            let surrogate = match (dir, small.is_positive()) {
                (Round::Down, true) | (Round::Up, false) => Dyadic::zero(),
                (Round::Down, false) => Dyadic::pow2(low).neg(),
                (Round::Up, true) => Dyadic::pow2(low),
            };
            return big.add_exact(&surrogate).round(prec, dir);
        }
        self.add_exact(other).round(prec, dir)
    }

    pub fn sub(&self, other: &Dyadic, prec: u32, dir: Round) -> Dyadic {
        self.add(&other.neg(), prec, dir)
    }

    pub fn mul_exact(&self, other: &Dyadic) -> Dyadic {
        Dyadic::new(&self.mant * &other.mant, self.exp + other.exp)
    }

    pub fn mul(&self, other: &Dyadic, prec: u32, dir: Round) -> Dyadic {
        self.mul_exact(other).round(prec, dir)
    }

    /// Rounded quotient; `other` must be non-zero.
    pub fn div(&self, other: &Dyadic, prec: u32, dir: Round) -> Dyadic {
        assert!(!other.is_zero(), "dyadic division by zero");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let shift = prec as i64 + other.bits() as i64 - self.bits() as i64 + 2;
        let shift = shift.max(0);
        let num = &self.mant << shift as u64;
        let q = div_dir(&num, &other.mant, dir);
        Dyadic::new(q, self.exp - other.exp - shift).round(prec, dir)
    }

    /// Rounded square root of a non-negative value.
    pub fn sqrt(&self, prec: u32, dir: Round) -> Dyadic {
        assert!(!self.is_negative(), "square root of a negative dyadic");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let want = 2 * prec as i64 + 4;
        let mut s = (want - self.bits() as i64).max(0);
        if (self.exp - s).rem_euclid(2) != 0 {
            s += 1;
        }
        let m = &self.mant << s as u64;
        let mut r = m.sqrt();
        if dir == Round::Up && &r * &r != m {
            r += 1;
        }
        Dyadic::new(r, (self.exp - s) / 2).round(prec, dir)
    }

    /// Rounded integer power.
    pub fn powi(&self, k: u32, prec: u32, dir: Round) -> Dyadic {
        // For non-negative bases every intermediate product is monotone in its
        // factors, so rounding each step in `dir` stays on the correct side.
        if self.is_negative() {
            let r = self.abs().powi(k, prec, if k % 2 == 1 { dir.flip() } else { dir });
            return if k % 2 == 1 { r.neg() } else { r };
        }
        let mut result = Dyadic::one();
        let mut base = self.round(prec, dir);
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base, prec, dir);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, prec, dir);
            }
        }
        result
    }

    pub fn from_rational(r: &BigRational, prec: u32, dir: Round) -> Dyadic {
        let n = Dyadic::from_int(r.numer());
        let d = Dyadic::from_int(r.denom());
        n.div(&d, prec, dir)
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.mant << self.exp as u64)
        } else {
            BigRational::new(self.mant.clone(), BigInt::one() << (-self.exp) as u64)
        }
    }

    /// Largest integer not above the value.
    pub fn floor(&self) -> BigInt {
        if self.exp >= 0 {
            &self.mant << self.exp as u64
        } else {
            shr_floor(&self.mant, (-self.exp) as u64)
        }
    }

    /// Smallest integer not below the value.
    pub fn ceil(&self) -> BigInt {
        if self.exp >= 0 {
            &self.mant << self.exp as u64
        } else {
            shr_ceil(&self.mant, (-self.exp) as u64)
        }
    }

    /// Approximate conversion for display and heuristics only.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.bits() as i64;
        let (m, e) = if bits > 60 {
            (shr_floor(&self.mant, (bits - 60) as u64), self.exp + bits - 60)
        } else {
            (self.mant.clone(), self.exp)
        };
        let mf = m.to_f64().unwrap_or(0.0);
        if e > 2000 {
            return if mf > 0.0 { f64::INFINITY } else { f64::NEG_INFINITY };
        }
        if e < -2000 {
            return 0.0;
        }
        mf * 2f64.powi(e as i32)
    }

    /// Natural logarithm of `|self|` as a rough f64, valid far beyond f64 range.
    pub fn ln_abs_f64(&self) -> f64 {
        let bits = self.bits() as i64;
        let (m, e) = if bits > 60 {
            (shr_floor(&self.mant.abs(), (bits - 60) as u64), self.exp + bits - 60)
        } else {
            (self.mant.abs(), self.exp)
        };
        m.to_f64().unwrap_or(1.0).ln() + e as f64 * std::f64::consts::LN_2
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.sign(), other.sign());
        let rank = |s: Sign| match s {
            Sign::Minus => 0,
            Sign::NoSign => 1,
            Sign::Plus => 2,
        };
        if rank(sa) != rank(sb) {
            return rank(sa).cmp(&rank(sb));
        }
        if sa == Sign::NoSign {
            return Ordering::Equal;
        }
        let (ta, tb) = (self.top(), other.top());
        if ta != tb {
            let mag = ta.cmp(&tb);
            return if sa == Sign::Plus { mag } else { mag.reverse() };
        }
        let e = self.exp.min(other.exp);
        let a = &self.mant << (self.exp - e) as u64;
        let b = &other.mant << (other.exp - e) as u64;
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*2^{}", self.mant, self.exp)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::exactnum::format::sci_dyadic(self, 10))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(m: i64, e: i64) -> Dyadic {
        Dyadic::new(BigInt::from(m), e)
    }

    #[test]
    fn normalizes_trailing_zeros() {
        assert_eq!(d(12, 0), d(3, 2));
        assert_eq!(Dyadic::new(BigInt::zero(), 17), Dyadic::zero());
    }

    #[test]
    fn directed_rounding_brackets() {
        let x = d(0b1011011, 0);
        let lo = x.round(3, Round::Down);
        let hi = x.round(3, Round::Up);
        assert!(lo <= x && x <= hi);
        assert_eq!(lo, d(0b101, 4));
        assert_eq!(hi, d(0b110, 4));
        let y = x.neg();
        assert_eq!(y.round(3, Round::Down), hi.neg());
    }

    #[test]
    fn division_brackets_one_third() {
        let third_lo = Dyadic::one().div(&d(3, 0), 64, Round::Down);
        let third_hi = Dyadic::one().div(&d(3, 0), 64, Round::Up);
        let three = d(3, 0);
        assert!(third_lo.mul_exact(&three) < Dyadic::one());
        assert!(third_hi.mul_exact(&three) > Dyadic::one());
    }

    #[test]
    fn sqrt_brackets_two() {
        let lo = d(2, 0).sqrt(80, Round::Down);
        let hi = d(2, 0).sqrt(80, Round::Up);
        assert!(lo.mul_exact(&lo) <= d(2, 0));
        assert!(hi.mul_exact(&hi) >= d(2, 0));
        assert!(hi > lo);
    }

    #[test]
    fn far_apart_addition_keeps_direction() {
        let big = d(1, 1000);
        let tiny = d(1, -1000);
        assert!(big.add(&tiny, 64, Round::Up) > big);
        assert_eq!(big.add(&tiny, 64, Round::Down), big);
        assert!(big.add(&tiny.neg(), 64, Round::Down) < big);
    }

    #[test]
    fn floor_and_ceil() {
        let x = d(-7, -1);
        assert_eq!(x.floor(), BigInt::from(-4));
        assert_eq!(x.ceil(), BigInt::from(-3));
    }
}
