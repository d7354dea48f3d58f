//! Closed intervals with dyadic endpoints and outward rounding.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::dyadic::{Dyadic, Round};
use super::transcend;
use super::EvalError;

/// An interval `[lo, hi]` guaranteed to contain some real value.
///
/// Every operation rounds `lo` down and `hi` up at the interval's working
/// precision, so containment survives any chain of operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealInterval {
    pub lo: Dyadic,
    pub hi: Dyadic,
    pub precision: u32,
}

impl RealInterval {
    pub fn new(lo: Dyadic, hi: Dyadic, precision: u32) -> RealInterval {
        debug_assert!(lo <= hi, "inverted interval {lo:?} > {hi:?}");
        RealInterval { lo, hi, precision }
    }

    pub fn point(d: Dyadic, precision: u32) -> RealInterval {
        RealInterval {
            lo: d.round(precision, Round::Down),
            hi: d.round(precision, Round::Up),
            precision,
        }
    }

    pub fn from_int(v: &BigInt, precision: u32) -> RealInterval {
        RealInterval::point(Dyadic::from_int(v), precision)
    }

    pub fn from_i64(v: i64, precision: u32) -> RealInterval {
        RealInterval::point(Dyadic::from_i64(v), precision)
    }

    pub fn from_rational(r: &BigRational, precision: u32) -> RealInterval {
        RealInterval {
            lo: Dyadic::from_rational(r, precision, Round::Down),
            hi: Dyadic::from_rational(r, precision, Round::Up),
            precision,
        }
    }

    /// Hull of two intervals.
    pub fn hull(&self, other: &RealInterval) -> RealInterval {
        RealInterval {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
            precision: self.precision.max(other.precision),
        }
    }

    pub fn with_precision(&self, precision: u32) -> RealInterval {
        RealInterval {
            lo: self.lo.round(precision, Round::Down),
            hi: self.hi.round(precision, Round::Up),
            precision,
        }
    }

    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo, self.precision, Round::Up)
    }

    pub fn midpoint(&self) -> Dyadic {
        self.lo.add_exact(&self.hi).shl(-1)
    }

    pub fn contains(&self, d: &Dyadic) -> bool {
        &self.lo <= d && d <= &self.hi
    }

    pub fn contains_rational(&self, r: &BigRational) -> bool {
        &self.lo.to_rational() <= r && r <= &self.hi.to_rational()
    }

    /// True when `other` lies inside `self`.
    pub fn encloses(&self, other: &RealInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Certified order of the represented values, if the intervals are disjoint.
    pub fn certified_cmp(&self, other: &RealInterval) -> Option<Ordering> {
        if self.hi < other.lo {
            Some(Ordering::Less)
        } else if self.lo > other.hi {
            Some(Ordering::Greater)
        } else {
            None
        }
    }

    fn prec2(&self, other: &RealInterval) -> u32 {
        self.precision.max(other.precision)
    }

    pub fn neg(&self) -> RealInterval {
        RealInterval {
            lo: self.hi.neg(),
            hi: self.lo.neg(),
            precision: self.precision,
        }
    }

    pub fn add(&self, other: &RealInterval) -> RealInterval {
        let p = self.prec2(other);
        RealInterval {
            lo: self.lo.add(&other.lo, p, Round::Down),
            hi: self.hi.add(&other.hi, p, Round::Up),
            precision: p,
        }
    }

    pub fn sub(&self, other: &RealInterval) -> RealInterval {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RealInterval) -> RealInterval {
        let p = self.prec2(other);
        if !self.lo.is_negative() && !other.lo.is_negative() {
            return RealInterval {
                lo: self.lo.mul(&other.lo, p, Round::Down),
                hi: self.hi.mul(&other.hi, p, Round::Up),
                precision: p,
            };
        }
        let pairs = [
            (&self.lo, &other.lo),
            (&self.lo, &other.hi),
            (&self.hi, &other.lo),
            (&self.hi, &other.hi),
        ];
        let lo = pairs
            .iter()
            .map(|(a, b)| a.mul(b, p, Round::Down))
            .min()
            .expect("four products");
        let hi = pairs
            .iter()
            .map(|(a, b)| a.mul(b, p, Round::Up))
            .max()
            .expect("four products");
        RealInterval { lo, hi, precision: p }
    }

    pub fn scale_pow2(&self, k: i64) -> RealInterval {
        RealInterval {
            lo: self.lo.shl(k),
            hi: self.hi.shl(k),
            precision: self.precision,
        }
    }

    pub fn recip(&self) -> Result<RealInterval, EvalError> {
        if self.contains_zero() {
            return Err(EvalError::Imprecise("division by an interval containing zero"));
        }
        let p = self.precision;
        let one = Dyadic::one();
        Ok(RealInterval {
            lo: one.div(&self.hi, p, Round::Down),
            hi: one.div(&self.lo, p, Round::Up),
            precision: p,
        })
    }

    pub fn div(&self, other: &RealInterval) -> Result<RealInterval, EvalError> {
        if other.contains_zero() {
            return Err(EvalError::Imprecise("division by an interval containing zero"));
        }
        let p = self.prec2(other);
        if !self.lo.is_negative() && other.lo.is_positive() {
            return Ok(RealInterval {
                lo: self.lo.div(&other.hi, p, Round::Down),
                hi: self.hi.div(&other.lo, p, Round::Up),
                precision: p,
            });
        }
        let pairs = [
            (&self.lo, &other.lo),
            (&self.lo, &other.hi),
            (&self.hi, &other.lo),
            (&self.hi, &other.hi),
        ];
        let lo = pairs
            .iter()
            .map(|(a, b)| a.div(b, p, Round::Down))
            .min()
            .expect("four quotients");
        let hi = pairs
            .iter()
            .map(|(a, b)| a.div(b, p, Round::Up))
            .max()
            .expect("four quotients");
        Ok(RealInterval { lo, hi, precision: p })
    }

    /// Integer power; negative exponents go through the reciprocal.
    pub fn powi(&self, k: i64) -> Result<RealInterval, EvalError> {
        if k < 0 {
            return self.powi(-k)?.recip();
        }
        let k32 = u32::try_from(k).map_err(|_| EvalError::Overflow)?;
        let p = self.precision;
        if k32 == 0 {
            return Ok(RealInterval::from_i64(1, p));
        }
        if !self.lo.is_negative() {
            return Ok(RealInterval {
                lo: self.lo.powi(k32, p, Round::Down),
                hi: self.hi.powi(k32, p, Round::Up),
                precision: p,
            });
        }
        if !self.hi.is_positive() {
            let r = self.neg().powi(k)?;
            return Ok(if k32 % 2 == 1 { r.neg() } else { r });
        }
        // Straddles zero.
        if k32 % 2 == 1 {
            Ok(RealInterval {
                lo: self.lo.powi(k32, p, Round::Down),
                hi: self.hi.powi(k32, p, Round::Up),
                precision: p,
            })
        } else {
            let m = self.lo.abs().max(self.hi.abs());
            Ok(RealInterval {
                lo: Dyadic::zero(),
                hi: m.powi(k32, p, Round::Up),
                precision: p,
            })
        }
    }

    pub fn sqrt(&self) -> Result<RealInterval, EvalError> {
        if self.hi.is_negative() {
            return Err(EvalError::Domain("square root of a negative value".into()));
        }
        if self.lo.is_negative() {
            return Err(EvalError::Imprecise("square root of an interval straddling zero"));
        }
        let p = self.precision;
        Ok(RealInterval {
            lo: self.lo.sqrt(p, Round::Down),
            hi: self.hi.sqrt(p, Round::Up),
            precision: p,
        })
    }

    /// Natural logarithm.
    pub fn ln(&self) -> Result<RealInterval, EvalError> {
        if !self.hi.is_positive() {
            return Err(EvalError::Domain("logarithm of a non-positive value".into()));
        }
        if !self.lo.is_positive() {
            return Err(EvalError::Imprecise("logarithm of an interval reaching zero"));
        }
        let p = self.precision;
        let lo = transcend::ln_point(&self.lo, p)?.lo;
        let hi = transcend::ln_point(&self.hi, p)?.hi;
        Ok(RealInterval { lo, hi, precision: p })
    }

    pub fn log2(&self) -> Result<RealInterval, EvalError> {
        let l = self.ln()?;
        l.div(&transcend::ln2(l.precision))
    }

    pub fn log3(&self) -> Result<RealInterval, EvalError> {
        let l = self.ln()?;
        l.div(&transcend::ln3(l.precision))
    }

    pub fn exp(&self) -> Result<RealInterval, EvalError> {
        let p = self.precision;
        let lo = transcend::exp_point(&self.lo, p)?.lo;
        let hi = transcend::exp_point(&self.hi, p)?.hi;
        Ok(RealInterval { lo, hi, precision: p })
    }

    /// `self^e` for a positive base.
    pub fn pow(&self, e: &RealInterval) -> Result<RealInterval, EvalError> {
        e.mul(&self.ln()?).exp()
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.lo.to_f64(), self.hi.to_f64())
    }
}

impl fmt::Display for RealInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_sign_products() {
        let a = RealInterval::new(Dyadic::from_i64(-2), Dyadic::from_i64(3), 64);
        let b = RealInterval::new(Dyadic::from_i64(-5), Dyadic::from_i64(1), 64);
        let c = a.mul(&b);
        assert_eq!(c.lo, Dyadic::from_i64(-15));
        assert_eq!(c.hi, Dyadic::from_i64(10));
    }

    #[test]
    fn even_power_of_straddling_interval() {
        let a = RealInterval::new(Dyadic::from_i64(-3), Dyadic::from_i64(2), 64);
        let c = a.powi(2).unwrap();
        assert_eq!(c.lo, Dyadic::zero());
        assert_eq!(c.hi, Dyadic::from_i64(9));
    }

    #[test]
    fn division_by_zero_interval_is_imprecise() {
        let a = RealInterval::from_i64(1, 64);
        let z = RealInterval::new(Dyadic::from_i64(-1), Dyadic::from_i64(1), 64);
        assert!(matches!(a.div(&z), Err(EvalError::Imprecise(_))));
    }

    #[test]
    fn log_of_power_of_three() {
        let x = RealInterval::from_i64(81, 128);
        let l = x.log3().unwrap();
        assert!(l.contains(&Dyadic::from_i64(4)));
        assert!(l.width() < Dyadic::pow2(-100));
    }

    #[test]
    fn exp_ln_roundtrip() {
        let x = RealInterval::from_i64(7, 128);
        let y = x.ln().unwrap().exp().unwrap();
        assert!(y.contains(&Dyadic::from_i64(7)));
        assert!(y.width() < Dyadic::pow2(-90));
    }
}
