//! Symbolic bound expressions over one positive-integer variable.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Node {
    Int(BigInt),
    Rat(BigRational),
    /// The free variable `n`.
    Var,
    Add(BoundExpr, BoundExpr),
    Sub(BoundExpr, BoundExpr),
    Mul(BoundExpr, BoundExpr),
    Div(BoundExpr, BoundExpr),
    PowInt(BoundExpr, i64),
    /// Real power `base^exponent`; the base must be positive unless the
    /// exponent is an exact integer.
    Pow(BoundExpr, BoundExpr),
    Ln(BoundExpr),
    Log2(BoundExpr),
    Log3(BoundExpr),
    /// `k!` for a non-negative integer `k`.
    Factorial(BoundExpr),
    /// `Gamma(k)` for a positive integer `k`.
    Gamma(BoundExpr),
}

/// Immutable, cheaply clonable expression tree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoundExpr(Arc<Node>);

impl BoundExpr {
    pub fn node(&self) -> &Node {
        &self.0
    }

    fn wrap(n: Node) -> BoundExpr {
        BoundExpr(Arc::new(n))
    }

    pub fn int<T: Into<BigInt>>(v: T) -> BoundExpr {
        BoundExpr::wrap(Node::Int(v.into()))
    }

    pub fn big(v: &BigInt) -> BoundExpr {
        BoundExpr::wrap(Node::Int(v.clone()))
    }

    pub fn rat(r: BigRational) -> BoundExpr {
        if r.denom().is_one() {
            BoundExpr::wrap(Node::Int(r.to_integer()))
        } else {
            BoundExpr::wrap(Node::Rat(r))
        }
    }

    /// `num / den` as an exact rational constant.
    pub fn frac(num: i64, den: i64) -> BoundExpr {
        BoundExpr::rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// A decimal literal such as `"12.61"` as an exact rational.
    pub fn decimal(s: &str) -> BoundExpr {
        BoundExpr::rat(parse_decimal(s).expect("valid decimal literal"))
    }

    pub fn var() -> BoundExpr {
        BoundExpr::wrap(Node::Var)
    }

    pub fn add(&self, o: &BoundExpr) -> BoundExpr {
        BoundExpr::wrap(Node::Add(self.clone(), o.clone()))
    }

    pub fn sub(&self, o: &BoundExpr) -> BoundExpr {
        BoundExpr::wrap(Node::Sub(self.clone(), o.clone()))
    }

    pub fn mul(&self, o: &BoundExpr) -> BoundExpr {
        BoundExpr::wrap(Node::Mul(self.clone(), o.clone()))
    }

    pub fn div(&self, o: &BoundExpr) -> BoundExpr {
        BoundExpr::wrap(Node::Div(self.clone(), o.clone()))
    }

    pub fn powi(&self, k: i64) -> BoundExpr {
        BoundExpr::wrap(Node::PowInt(self.clone(), k))
    }

    pub fn pow(&self, e: &BoundExpr) -> BoundExpr {
        BoundExpr::wrap(Node::Pow(self.clone(), e.clone()))
    }

    pub fn ln(&self) -> BoundExpr {
        BoundExpr::wrap(Node::Ln(self.clone()))
    }

    pub fn log2(&self) -> BoundExpr {
        BoundExpr::wrap(Node::Log2(self.clone()))
    }

    pub fn log3(&self) -> BoundExpr {
        BoundExpr::wrap(Node::Log3(self.clone()))
    }

    pub fn factorial(&self) -> BoundExpr {
        BoundExpr::wrap(Node::Factorial(self.clone()))
    }

    pub fn gamma(&self) -> BoundExpr {
        BoundExpr::wrap(Node::Gamma(self.clone()))
    }

    /// Replace the variable by a concrete expression.
    pub fn substitute(&self, with: &BoundExpr) -> BoundExpr {
        use Node::*;
        match self.node() {
            Int(_) | Rat(_) => self.clone(),
            Var => with.clone(),
            Add(a, b) => a.substitute(with).add(&b.substitute(with)),
            Sub(a, b) => a.substitute(with).sub(&b.substitute(with)),
            Mul(a, b) => a.substitute(with).mul(&b.substitute(with)),
            Div(a, b) => a.substitute(with).div(&b.substitute(with)),
            PowInt(a, k) => a.substitute(with).powi(*k),
            Pow(a, b) => a.substitute(with).pow(&b.substitute(with)),
            Ln(a) => a.substitute(with).ln(),
            Log2(a) => a.substitute(with).log2(),
            Log3(a) => a.substitute(with).log3(),
            Factorial(a) => a.substitute(with).factorial(),
            Gamma(a) => a.substitute(with).gamma(),
        }
    }

    /// The expression with the variable fixed at `n`.
    pub fn at(&self, n: u64) -> BoundExpr {
        self.substitute(&BoundExpr::int(n))
    }

    pub fn is_closed(&self) -> bool {
        use Node::*;
        match self.node() {
            Int(_) | Rat(_) => true,
            Var => false,
            Add(a, b) | Sub(a, b) | Mul(a, b) | Div(a, b) | Pow(a, b) => {
                a.is_closed() && b.is_closed()
            }
            PowInt(a, _) | Ln(a) | Log2(a) | Log3(a) | Factorial(a) | Gamma(a) => a.is_closed(),
        }
    }

    pub fn size(&self) -> usize {
        use Node::*;
        match self.node() {
            Int(_) | Rat(_) | Var => 1,
            Add(a, b) | Sub(a, b) | Mul(a, b) | Div(a, b) | Pow(a, b) => 1 + a.size() + b.size(),
            PowInt(a, _) | Ln(a) | Log2(a) | Log3(a) | Factorial(a) | Gamma(a) => 1 + a.size(),
        }
    }

    fn as_rational(&self) -> Option<BigRational> {
        match self.node() {
            Node::Int(v) => Some(BigRational::from_integer(v.clone())),
            Node::Rat(r) => Some(r.clone()),
            _ => None,
        }
    }

    /// Light normalisation: constant folding of rational arithmetic and the
    /// identities `x*1 = x`, `x+0 = x`, `x^1 = x`.
    pub fn simplify(&self) -> BoundExpr {
        use Node::*;
        let bin = |a: &BoundExpr, b: &BoundExpr| (a.simplify(), b.simplify());
        match self.node() {
            Int(_) | Rat(_) | Var => self.clone(),
            Add(a, b) => {
                let (a, b) = bin(a, b);
                match (a.as_rational(), b.as_rational()) {
                    (Some(x), Some(y)) => BoundExpr::rat(x + y),
                    (Some(x), None) if x.is_zero() => b,
                    (None, Some(y)) if y.is_zero() => a,
                    _ => a.add(&b),
                }
            }
            Sub(a, b) => {
                let (a, b) = bin(a, b);
                match (a.as_rational(), b.as_rational()) {
                    (Some(x), Some(y)) => BoundExpr::rat(x - y),
                    (None, Some(y)) if y.is_zero() => a,
                    _ => a.sub(&b),
                }
            }
            Mul(a, b) => {
                let (a, b) = bin(a, b);
                match (a.as_rational(), b.as_rational()) {
                    (Some(x), Some(y)) => BoundExpr::rat(x * y),
                    (Some(x), None) if x.is_one() => b,
                    (None, Some(y)) if y.is_one() => a,
                    _ => a.mul(&b),
                }
            }
            Div(a, b) => {
                let (a, b) = bin(a, b);
                match (a.as_rational(), b.as_rational()) {
                    (Some(x), Some(y)) if !y.is_zero() => BoundExpr::rat(x / y),
                    (None, Some(y)) if y.is_one() => a,
                    _ => a.div(&b),
                }
            }
            PowInt(a, k) => {
                let a = a.simplify();
                if *k == 1 {
                    a
                } else {
                    a.powi(*k)
                }
            }
            Pow(a, b) => {
                let (a, b) = bin(a, b);
                match b.as_rational() {
                    Some(y) if y.is_one() => a,
                    Some(y) if y.is_integer() && y.numer().bits() < 63 => {
                        let k: i64 = y.to_integer().try_into().expect("fits");
                        a.powi(k)
                    }
                    _ => a.pow(&b),
                }
            }
            Ln(a) => a.simplify().ln(),
            Log2(a) => a.simplify().log2(),
            Log3(a) => a.simplify().log3(),
            Factorial(a) => a.simplify().factorial(),
            Gamma(a) => a.simplify().gamma(),
        }
    }
}

/// Parse a plain decimal such as `-12.61` into an exact rational.
pub fn parse_decimal(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().all(|c| c.is_ascii_digit()) || !frac_part.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let num: BigInt = digits.parse().ok()?;
    let den = num_traits::Pow::pow(&BigInt::from(10), frac_part.len() as u32);
    let r = BigRational::new(num, den);
    Some(if neg { -r } else { r })
}

impl fmt::Debug for BoundExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BoundExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Node::*;
        match self.node() {
            Int(v) => write!(f, "{v}"),
            Rat(r) => write!(f, "({}/{})", r.numer(), r.denom()),
            Var => write!(f, "n"),
            Add(a, b) => write!(f, "({a} + {b})"),
            Sub(a, b) => write!(f, "({a} - {b})"),
            Mul(a, b) => write!(f, "{a}*{b}"),
            Div(a, b) => write!(f, "{a}/{b}"),
            PowInt(a, k) => write!(f, "{a}^{k}"),
            Pow(a, b) => write!(f, "{a}^({b})"),
            Ln(a) => write!(f, "ln({a})"),
            Log2(a) => write!(f, "log2({a})"),
            Log3(a) => write!(f, "log3({a})"),
            Factorial(a) => write!(f, "({a})!"),
            Gamma(a) => write!(f, "Gamma({a})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimals_are_exact() {
        assert_eq!(
            parse_decimal("12.61"),
            Some(BigRational::new(1261.into(), 100.into()))
        );
        assert_eq!(parse_decimal("-0.5"), Some(BigRational::new((-1).into(), 2.into())));
        assert_eq!(parse_decimal("abc"), None);
    }

    #[test]
    fn simplify_folds_constants() {
        let n = BoundExpr::var();
        let e = n.mul(&BoundExpr::int(1)).pow(&BoundExpr::int(2).add(&BoundExpr::int(-1)));
        assert_eq!(e.simplify(), n);
        let c = BoundExpr::frac(1, 2).add(&BoundExpr::frac(1, 2)).simplify();
        assert_eq!(c, BoundExpr::int(1));
    }

    #[test]
    fn substitution_closes() {
        let e = BoundExpr::var().add(&BoundExpr::int(3)).gamma();
        assert!(!e.is_closed());
        assert!(e.at(2).is_closed());
        assert_eq!(e.at(2).to_string(), "Gamma((2 + 3))");
    }
}
