//! Numbers as they appear in printed tables, and how recomputed values agree with them.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::exactnum::expr::parse_decimal;
use crate::exactnum::format::{round_sig, ten_pow_rational};
use crate::exactnum::RealInterval;

/// A printed table cell: its text, its value, and whether it is exact or rounded.
#[derive(Clone, Debug, PartialEq)]
pub struct PrintedNumber {
    pub text: String,
    pub value: BigRational,
    /// Significant figures for rounded cells; `None` for exact integers.
    pub sig: Option<u32>,
}

/// Agreement between a recomputed value and a printed cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Agreement {
    /// Equal (exact cells) or equal after rounding to the printed figures.
    Match,
    /// Off by at most one unit in the last printed place.
    ApproximationConsistent,
    Mismatch,
}

impl Agreement {
    pub fn is_hard_mismatch(self) -> bool {
        self == Agreement::Mismatch
    }
}

impl fmt::Display for Agreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Agreement::Match => "match",
            Agreement::ApproximationConsistent => "approximation-consistent",
            Agreement::Mismatch => "MISMATCH",
        })
    }
}

impl PrintedNumber {
    /// Parse a cell. Accepted forms: `7920`, `20,160`, `9.5e4`, `33e15`, `-1.43`, `~195`
    /// (an integer that rounds an irrational value).
    pub fn parse(text: &str) -> Option<PrintedNumber> {
        let t = text.trim();
        let (approx_int, body) = match t.strip_prefix('~') {
            Some(rest) => (true, rest),
            None => (false, t),
        };
        let body: String = body.chars().filter(|c| *c != ',' && *c != ' ').collect();
        if body.is_empty() {
            return None;
        }
        let (mant, exp) = match body.split_once(['e', 'E']) {
            Some((m, e)) => (m.to_string(), Some(e.parse::<i64>().ok()?)),
            None => (body.clone(), None),
        };
        let value = parse_decimal(&mant)? * ten_pow_rational(exp.unwrap_or(0));
        let is_plain_int = exp.is_none() && !mant.contains('.');
        let sig = if is_plain_int && !approx_int {
            None
        } else {
            let digits: String = mant
                .chars()
                .filter(|c| c.is_ascii_digit())
                .collect::<String>()
                .trim_start_matches('0')
                .to_string();
            Some(digits.len().max(1) as u32)
        };
        Some(PrintedNumber {
            text: t.to_string(),
            value,
            sig,
        })
    }

    pub fn is_exact(&self) -> bool {
        self.sig.is_none()
    }

    /// Decimal exponent of the last printed digit (0 for exact integers).
    fn last_place(&self) -> i64 {
        match self.sig {
            None => 0,
            Some(s) => {
                if self.value.is_zero() {
                    0
                } else {
                    crate::exactnum::format::decimal_exponent(&self.value) - s as i64 + 1
                }
            }
        }
    }

    /// Classify an exactly known value against this cell.
    pub fn classify(&self, v: &BigRational) -> Agreement {
        match self.sig {
            None => {
                if *v == self.value {
                    Agreement::Match
                } else {
                    Agreement::Mismatch
                }
            }
            Some(sig) => {
                if v.is_zero() {
                    return if self.value.is_zero() {
                        Agreement::Match
                    } else {
                        Agreement::Mismatch
                    };
                }
                let last = self.last_place();
                let (m, e) = round_sig(v, sig);
                let rounded = BigRational::from_integer(m) * ten_pow_rational(e);
                if rounded == self.value {
                    return Agreement::Match;
                }
                let ulp = ten_pow_rational(last);
                if (v - &self.value).abs() <= ulp {
                    Agreement::ApproximationConsistent
                } else {
                    Agreement::Mismatch
                }
            }
        }
    }

    /// Classify an enclosed value; `None` when the two endpoints disagree and a
    /// tighter enclosure is needed.
    pub fn classify_interval(&self, iv: &RealInterval) -> Option<Agreement> {
        let (lo_v, hi_v) = (iv.lo.to_rational(), iv.hi.to_rational());
        let lo = self.classify(&lo_v);
        let hi = self.classify(&hi_v);
        if lo != hi {
            return None;
        }
        // Two mismatching ends on opposite sides say nothing about the middle.
        if lo == Agreement::Mismatch && (lo_v < self.value) != (hi_v < self.value) {
            return None;
        }
        // An exact cell can only match a point enclosure.
        if lo == Agreement::Match && self.is_exact() && !iv.is_point() {
            return None;
        }
        // Both ends round to the printed value; values between do too since
        // rounding is monotone. The same holds for the one-ulp band.
        Some(lo)
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        if self.value.is_integer() {
            Some(self.value.to_integer())
        } else {
            None
        }
    }
}

impl fmt::Display for PrintedNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

impl Serialize for PrintedNumber {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn parses_cell_forms() {
        let p = PrintedNumber::parse("9.5e4").unwrap();
        assert_eq!(p.value, int(95000));
        assert_eq!(p.sig, Some(2));
        let p = PrintedNumber::parse("20,160").unwrap();
        assert_eq!(p.value, int(20160));
        assert!(p.is_exact());
        let p = PrintedNumber::parse("33e15").unwrap();
        assert_eq!(p.sig, Some(2));
        let p = PrintedNumber::parse("~195").unwrap();
        assert_eq!(p.sig, Some(3));
        let p = PrintedNumber::parse("-1.43").unwrap();
        assert_eq!(p.value, BigRational::new((-143).into(), 100.into()));
        assert!(PrintedNumber::parse("").is_none());
        assert!(PrintedNumber::parse("G").is_none());
    }

    #[test]
    fn classification() {
        let p = PrintedNumber::parse("4.43e5").unwrap();
        assert_eq!(p.classify(&int(443_520)), Agreement::ApproximationConsistent);
        assert_eq!(p.classify(&int(442_999)), Agreement::Match);
        let p = PrintedNumber::parse("1.28e8").unwrap();
        assert_eq!(p.classify(&int(898_128_000)), Agreement::Mismatch);
        let p = PrintedNumber::parse("7920").unwrap();
        assert_eq!(p.classify(&int(7920)), Agreement::Match);
        assert_eq!(p.classify(&int(7921)), Agreement::Mismatch);
    }
}
