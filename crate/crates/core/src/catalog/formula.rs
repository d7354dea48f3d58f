//! The small expression language of the family table: integers, decimals, the variables
//! `n` (rank), `m` (parameter) and `q` (characteristic), `+ - ^`, `gcd(a,b)`, parentheses
//! and implicit products such as `2n^2+n` or `2(n+1)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::exactnum::exact::rational_powi;
use crate::exactnum::expr::parse_decimal;

/// Variable bindings; `m` is absent when the parameter is not an integer.
#[derive(Clone, Debug)]
pub struct Env {
    pub n: BigInt,
    pub m: Option<BigInt>,
    pub q: BigInt,
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum Tok {
    Num(usize, usize),
    Var(char),
    Gcd,
    Plus,
    Minus,
    Caret,
    Star,
    LParen,
    RParen,
    Comma,
}

fn lex(s: &str) -> Result<Vec<Tok>, String> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i] as char;
        match c {
            ' ' => i += 1,
            '0'..='9' | '.' => {
                let start = i;
                while i < b.len() && (b[i].is_ascii_digit() || b[i] == b'.') {
                    i += 1;
                }
                out.push(Tok::Num(start, i));
            }
            'n' | 'm' | 'q' => {
                out.push(Tok::Var(c));
                i += 1;
            }
            'g' if s[i..].starts_with("gcd") => {
                out.push(Tok::Gcd);
                i += 3;
            }
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '*' => {
                out.push(Tok::Star);
                i += 1;
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1;
            }
            ',' => {
                out.push(Tok::Comma);
                i += 1;
            }
            _ => return Err(format!("unexpected character '{c}' in formula '{s}'")),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<Tok>,
    pos: usize,
    env: &'a Env,
}

impl Parser<'_> {
    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.peek();
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Tok) -> Result<(), String> {
        if self.bump() == Some(t) {
            Ok(())
        } else {
            Err(format!("malformed formula '{}'", self.src))
        }
    }

    fn expr(&mut self) -> Result<BigRational, String> {
        let mut acc = self.term()?;
        while let Some(t) = self.peek() {
            match t {
                Tok::Plus => {
                    self.pos += 1;
                    acc += self.term()?;
                }
                Tok::Minus => {
                    self.pos += 1;
                    acc -= self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<BigRational, String> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc *= self.power()?;
                }
                Some(Tok::Num(..)) | Some(Tok::Var(_)) | Some(Tok::Gcd) | Some(Tok::LParen) => {
                    acc *= self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<BigRational, String> {
        let base = self.atom()?;
        if self.peek() == Some(Tok::Caret) {
            self.pos += 1;
            let e = self.power()?;
            if !e.is_integer() {
                return Err(format!("non-integral exponent in '{}'", self.src));
            }
            let e = e
                .to_integer()
                .to_i64()
                .ok_or_else(|| format!("exponent too large in '{}'", self.src))?;
            return rational_powi(&base, e).ok_or_else(|| format!("zero to a negative power in '{}'", self.src));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<BigRational, String> {
        match self.bump() {
            Some(Tok::Num(a, b)) => {
                parse_decimal(&self.src[a..b]).ok_or_else(|| format!("bad number in '{}'", self.src))
            }
            Some(Tok::Var('n')) => Ok(BigRational::from_integer(self.env.n.clone())),
            Some(Tok::Var('q')) => Ok(BigRational::from_integer(self.env.q.clone())),
            Some(Tok::Var(_)) => self
                .env
                .m
                .clone()
                .map(BigRational::from_integer)
                .ok_or_else(|| format!("'{}' needs an integral parameter m", self.src)),
            Some(Tok::Minus) => Ok(-self.atom()?),
            Some(Tok::LParen) => {
                let v = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(v)
            }
            Some(Tok::Gcd) => {
                self.expect(Tok::LParen)?;
                let a = self.expr()?;
                self.expect(Tok::Comma)?;
                let b = self.expr()?;
                self.expect(Tok::RParen)?;
                if !a.is_integer() || !b.is_integer() {
                    return Err(format!("gcd of non-integers in '{}'", self.src));
                }
                Ok(BigRational::from_integer(a.to_integer().abs().gcd(&b.to_integer().abs())))
            }
            _ => Err(format!("malformed formula '{}'", self.src)),
        }
    }
}

/// Evaluate a formula exactly.
pub fn eval(src: &str, env: &Env) -> Result<BigRational, String> {
    let toks = lex(src)?;
    let mut p = Parser {
        src,
        toks,
        pos: 0,
        env,
    };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(format!("trailing input in formula '{src}'"));
    }
    Ok(v)
}

/// Evaluate a formula that must produce a positive integer.
pub fn eval_positive_int(src: &str, env: &Env) -> Result<BigInt, String> {
    let v = eval(src, env)?;
    if !v.is_integer() || v <= BigRational::zero() {
        return Err(format!("formula '{src}' gave {v}, expected a positive integer"));
    }
    Ok(v.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn env(n: i64, m: i64, q: i64) -> Env {
        Env {
            n: n.into(),
            m: Some(m.into()),
            q: q.into(),
        }
    }

    fn r(s: &str) -> BigRational {
        parse_decimal(s).unwrap()
    }

    #[test]
    fn arithmetic_and_implicit_products() {
        let e = env(3, 5, 5);
        assert_eq!(eval("n^2+2n", &e).unwrap(), r("15"));
        assert_eq!(eval("2(n+1)", &e).unwrap(), r("8"));
        assert_eq!(eval("2n^2-n", &e).unwrap(), r("15"));
        assert_eq!(eval("2n-2.3", &e).unwrap(), r("3.7"));
        assert_eq!(eval("gcd(n+1,m-1)", &e).unwrap(), r("4"));
        assert_eq!(eval("gcd(2,m-1)^2", &e).unwrap(), r("4"));
        assert_eq!(eval("gcd(4,m^n+1)", &e).unwrap(), r("2"));
    }

    #[test]
    fn rejects_bad_input() {
        let e = env(1, 1, 1);
        assert!(eval("2+", &e).is_err());
        assert!(eval("x", &e).is_err());
        assert!(eval("(1", &e).is_err());
        let no_m = Env { m: None, ..e };
        assert!(eval("gcd(2,m-1)", &no_m).is_err());
    }
}
