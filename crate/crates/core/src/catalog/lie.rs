//! Groups of Lie type: identifiers, the family table and equal-characteristic degrees.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize, Serializer};

use super::formula::{self, Env};
use super::{catalog, CatalogError};
use crate::exactnum::exact::{big_pow, exact_log, is_prime};

/// Family symbol of a group of Lie type, twisted families included.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieFamily {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
    TwistedA,
    TwistedB2,
    TwistedD,
    TwistedE6,
    TwistedF4,
    TwistedG2,
    TrialityD4,
}

impl LieFamily {
    pub const ALL: [LieFamily; 16] = [
        LieFamily::A,
        LieFamily::B,
        LieFamily::C,
        LieFamily::D,
        LieFamily::E6,
        LieFamily::E7,
        LieFamily::E8,
        LieFamily::F4,
        LieFamily::G2,
        LieFamily::TwistedA,
        LieFamily::TwistedB2,
        LieFamily::TwistedD,
        LieFamily::TwistedE6,
        LieFamily::TwistedF4,
        LieFamily::TwistedG2,
        LieFamily::TrialityD4,
    ];

    /// ASCII code used in data files and on the command line, e.g. `2A`, `3D4`.
    pub fn code(self) -> &'static str {
        match self {
            LieFamily::A => "A",
            LieFamily::B => "B",
            LieFamily::C => "C",
            LieFamily::D => "D",
            LieFamily::E6 => "E6",
            LieFamily::E7 => "E7",
            LieFamily::E8 => "E8",
            LieFamily::F4 => "F4",
            LieFamily::G2 => "G2",
            LieFamily::TwistedA => "2A",
            LieFamily::TwistedB2 => "2B2",
            LieFamily::TwistedD => "2D",
            LieFamily::TwistedE6 => "2E6",
            LieFamily::TwistedF4 => "2F4",
            LieFamily::TwistedG2 => "2G2",
            LieFamily::TrialityD4 => "3D4",
        }
    }

    /// Accepts ASCII codes and superscript forms such as `²A`.
    pub fn from_code(s: &str) -> Option<LieFamily> {
        let s = s.trim().replace('²', "2").replace('³', "3");
        LieFamily::ALL.into_iter().find(|f| f.code().eq_ignore_ascii_case(&s))
    }

    pub fn twist(self) -> u32 {
        match self {
            LieFamily::TrialityD4 => 3,
            LieFamily::TwistedA
            | LieFamily::TwistedB2
            | LieFamily::TwistedD
            | LieFamily::TwistedE6
            | LieFamily::TwistedF4
            | LieFamily::TwistedG2 => 2,
            _ => 1,
        }
    }

    /// Rank forced by the family symbol, if any.
    pub fn fixed_rank(self) -> Option<u32> {
        match self {
            LieFamily::E6 | LieFamily::TwistedE6 => Some(6),
            LieFamily::E7 => Some(7),
            LieFamily::E8 => Some(8),
            LieFamily::F4 | LieFamily::TwistedF4 | LieFamily::TrialityD4 => Some(4),
            LieFamily::G2 | LieFamily::TwistedB2 | LieFamily::TwistedG2 => Some(2),
            _ => None,
        }
    }

    pub fn min_rank(self) -> u32 {
        match self {
            LieFamily::A => 1,
            LieFamily::B | LieFamily::TwistedA => 2,
            LieFamily::C => 3,
            LieFamily::D | LieFamily::TwistedD => 4,
            f => f.fixed_rank().unwrap_or(1),
        }
    }

    /// The untwisted family whose algebraic group carries the twist.
    pub fn untwisted(self) -> LieFamily {
        match self {
            LieFamily::TwistedA => LieFamily::A,
            LieFamily::TwistedB2 => LieFamily::B,
            LieFamily::TwistedD | LieFamily::TrialityD4 => LieFamily::D,
            LieFamily::TwistedE6 => LieFamily::E6,
            LieFamily::TwistedF4 => LieFamily::F4,
            LieFamily::TwistedG2 => LieFamily::G2,
            f => f,
        }
    }

    /// The Suzuki and Ree families, whose parameter is an odd power of `sqrt q`.
    pub fn is_suzuki_ree(self) -> bool {
        matches!(self, LieFamily::TwistedB2 | LieFamily::TwistedF4 | LieFamily::TwistedG2)
    }

    fn letter(self) -> &'static str {
        match self.untwisted() {
            LieFamily::A => "A",
            LieFamily::B => "B",
            LieFamily::C => "C",
            LieFamily::D => "D",
            LieFamily::E6 | LieFamily::E7 | LieFamily::E8 => "E",
            LieFamily::F4 => "F",
            _ => "G",
        }
    }
}

impl fmt::Display for LieFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl Serialize for LieFamily {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.code())
    }
}

/// A group `cX_a(m^c)` with `m = q^s`, `q` prime and `2s` integral.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieTypeId {
    pub family: LieFamily,
    pub rank: u32,
    pub q: u64,
    pub s: BigRational,
}

impl LieTypeId {
    pub fn new(family: LieFamily, rank: u32, q: u64, s: BigRational) -> Result<LieTypeId, CatalogError> {
        let bad = |why: &str| CatalogError::UnknownFamily(format!("{}{rank} with q={q}, s={s}: {why}", family.code()));
        if !is_prime(q) {
            return Err(bad("q must be prime"));
        }
        if s <= BigRational::zero() {
            return Err(bad("s must be positive"));
        }
        let two_s = &s * BigRational::from_integer(2.into());
        if !two_s.is_integer() {
            return Err(bad("2s must be an integer"));
        }
        if let Some(r) = family.fixed_rank() {
            if rank != r {
                return Err(bad("rank fixed by the family"));
            }
        }
        if rank < family.min_rank() {
            return Err(bad("rank below the family minimum"));
        }
        if family.is_suzuki_ree() {
            let need = if family == LieFamily::TwistedG2 { 3 } else { 2 };
            if q != need {
                return Err(bad("wrong characteristic for the family"));
            }
            if s.is_integer() {
                return Err(bad("m^2 must be an odd power of q"));
            }
        } else if !s.is_integer() {
            return Err(bad("s must be an integer"));
        }
        Ok(LieTypeId { family, rank, q, s })
    }

    /// Build from the field argument `m^c` as written in names such as `2A3(9)`.
    pub fn from_field(family: LieFamily, rank: u32, field: u64) -> Result<LieTypeId, CatalogError> {
        let err = || CatalogError::UnknownFamily(format!("{}{rank}({field}): not a prime power", family.code()));
        let q = smallest_prime_factor(field).ok_or_else(err)?;
        let k = exact_log(&BigInt::from(field), q).ok_or_else(err)?;
        let s = BigRational::new(BigInt::from(k), BigInt::from(family.twist()));
        LieTypeId::new(family, rank, q, s)
    }

    /// Parse `A1(4)`, `2A3(9)`, `²B2(8)`, `E8(2)`, `3D4(8)` and the like.
    pub fn parse(name: &str) -> Result<LieTypeId, CatalogError> {
        let unknown = || CatalogError::UnknownFamily(name.to_string());
        let t = name.trim().replace('²', "2").replace('³', "3");
        let open = t.find('(').ok_or_else(unknown)?;
        let close = t.rfind(')').ok_or_else(unknown)?;
        if close != t.len() - 1 || close < open {
            return Err(unknown());
        }
        let field: u64 = t[open + 1..close].trim().parse().map_err(|_| unknown())?;
        let head = &t[..open];
        let (twist, rest) = match head.chars().next() {
            Some(c @ ('2' | '3')) => (c.to_digit(10).unwrap_or(1), &head[1..]),
            _ => (1, head),
        };
        let mut chars = rest.chars();
        let letter = chars.next().ok_or_else(unknown)?.to_ascii_uppercase();
        let rank: u32 = chars.as_str().parse().map_err(|_| unknown())?;
        let family = LieFamily::ALL
            .into_iter()
            .find(|f| {
                f.twist() == twist
                    && f.letter().starts_with(letter)
                    && f.fixed_rank().is_none_or(|r| r == rank)
            })
            .ok_or_else(unknown)?;
        LieTypeId::from_field(family, rank, field)
    }

    /// The parameter `m` when it is an integer.
    pub fn m(&self) -> Option<BigInt> {
        if self.s.is_integer() {
            Some(big_pow(&BigInt::from(self.q), self.s.to_integer().to_u64()?))
        } else {
            None
        }
    }

    /// The field argument `m^c` written in the group's name.
    pub fn field(&self) -> BigInt {
        let e = &self.s * BigRational::from_integer(self.family.twist().into());
        big_pow(&BigInt::from(self.q), e.to_integer().to_u64().unwrap_or(0))
    }

    /// Canonical ASCII name, e.g. `2A3(9)`.
    pub fn name(&self) -> String {
        let rank = if self.family.fixed_rank().is_some() {
            String::new()
        } else {
            self.rank.to_string()
        };
        format!("{}{}({})", self.family.code(), rank, self.field())
    }

    fn env(&self) -> Env {
        Env {
            n: BigInt::from(self.rank),
            m: self.m(),
            q: BigInt::from(self.q),
        }
    }

    /// `m^x` for rational `x` is `q^(s x)`; returns the exponent `s x`.
    pub fn m_exponent(&self, x: &BigRational) -> BigRational {
        &self.s * x
    }
}

impl fmt::Display for LieTypeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl Serialize for LieTypeId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}

fn smallest_prime_factor(n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return Some(d);
        }
        d += 1;
    }
    Some(n)
}

/// Family data instantiated at a particular group.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LieFamilyRecord {
    pub id: LieTypeId,
    /// Dimension of the ambient algebraic group.
    pub d: u64,
    /// Exponent of the degree estimate `(m^b - 1)/2`.
    #[serde(serialize_with = "ser_rational")]
    pub b: BigRational,
    pub a_g: u64,
    pub a_d: u64,
    /// Upper bound on `c |A_d| |A_g|`.
    pub cap: u64,
    /// The table row the record came from.
    pub row: String,
}

fn ser_rational<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

#[derive(Debug, Deserialize)]
pub(crate) struct FamilyRow {
    family: String,
    twist: u32,
    rank_min: u32,
    rank_max: String,
    q: String,
    m: String,
    parity: String,
    d: String,
    b: String,
    a_g: String,
    a_d: String,
    cap: String,
    row: String,
}

#[derive(Debug, Deserialize)]
pub(crate) struct NaturalRow {
    family: String,
    d: String,
}

fn selector_holds(sel: &str, v: Option<&BigInt>) -> bool {
    let sel = sel.trim();
    if sel == "any" {
        return true;
    }
    let (neg, num) = match sel.strip_prefix('!') {
        Some(rest) => (true, rest),
        None => (false, sel),
    };
    let Ok(k) = num.parse::<i64>() else {
        return false;
    };
    let eq = v == Some(&BigInt::from(k));
    eq != neg
}

impl FamilyRow {
    fn matches(&self, id: &LieTypeId) -> bool {
        if LieFamily::from_code(&self.family) != Some(id.family) || self.twist != id.family.twist() {
            return false;
        }
        let max_ok = self.rank_max == "-" || self.rank_max.parse::<u32>().is_ok_and(|r| id.rank <= r);
        let parity_ok = match self.parity.as_str() {
            "even" => id.rank.is_multiple_of(2),
            "odd" => id.rank % 2 == 1,
            _ => true,
        };
        id.rank >= self.rank_min
            && max_ok
            && parity_ok
            && selector_holds(&self.q, Some(&BigInt::from(id.q)))
            && selector_holds(&self.m, id.m().as_ref())
    }
}

fn small(v: BigInt, what: &str) -> Result<u64, CatalogError> {
    v.to_u64()
        .ok_or_else(|| CatalogError::Data(format!("{what} out of range: {v}")))
}

/// Family record for `id` from the family table.
pub fn lie_lookup(id: &LieTypeId) -> Result<LieFamilyRecord, CatalogError> {
    let row = catalog()
        .family_rows
        .iter()
        .find(|r| r.matches(id))
        .ok_or_else(|| CatalogError::UnknownFamily(format!("{id}: no family row applies")))?;
    let env = id.env();
    let int = |src: &str, what: &str| -> Result<u64, CatalogError> {
        small(formula::eval_positive_int(src, &env).map_err(CatalogError::Data)?, what)
    };
    let b = formula::eval(&row.b, &env).map_err(CatalogError::Data)?;
    Ok(LieFamilyRecord {
        id: id.clone(),
        d: int(&row.d, "d")?,
        b,
        a_g: int(&row.a_g, "a_g")?,
        a_d: int(&row.a_d, "a_d")?,
        cap: int(&row.cap, "cap")?,
        row: row.row.clone(),
    })
}

/// Degree of the smallest natural module, used as the equal-characteristic estimate.
pub fn natural_degree(id: &LieTypeId) -> Result<u64, CatalogError> {
    natural_degree_of(id.family, id.rank)
}

pub(crate) fn natural_degree_of(family: LieFamily, rank: u32) -> Result<u64, CatalogError> {
    let base = family.untwisted();
    let row = catalog()
        .natural_rows
        .iter()
        .find(|r| LieFamily::from_code(&r.family) == Some(base))
        .ok_or_else(|| CatalogError::UnknownFamily(format!("no natural degree for {}", base.code())))?;
    let env = Env {
        n: BigInt::from(rank),
        m: None,
        q: BigInt::one(),
    };
    small(formula::eval_positive_int(&row.d, &env).map_err(CatalogError::Data)?, "natural degree")
}

/// `ceil((m^b - 1)/2)`, computed exactly as the least `k` with `m^b <= 2k + 1`.
pub fn ls_degree(rec: &LieFamilyRecord) -> BigInt {
    let e = rec.id.m_exponent(&rec.b);
    let num = e.numer().to_u64().unwrap_or(u64::MAX);
    let den = e.denom().to_u32().unwrap_or(1);
    let power = big_pow(&BigInt::from(rec.id.q), num);
    let root = power.nth_root(den);
    let exact = big_pow(&root, den as u64) == power;
    let two = BigInt::from(2);
    if exact {
        // (r - 1)/2 rounded up.
        root.div_floor(&two)
    } else {
        // m^b lies strictly between root and root + 1.
        (root + BigInt::one()).div_floor(&two)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(s: &str) -> LieTypeId {
        LieTypeId::parse(s).unwrap()
    }

    #[test]
    fn parsing_names() {
        let g = id("2A3(9)");
        assert_eq!((g.family, g.rank, g.q), (LieFamily::TwistedA, 3, 3));
        assert_eq!(g.m(), Some(BigInt::from(3)));
        let g = id("²B2(8)");
        assert_eq!(g.s, BigRational::new(3.into(), 2.into()));
        assert_eq!(g.m(), None);
        assert_eq!(g.name(), "2B2(8)");
        assert_eq!(id("E8(2)").rank, 8);
        assert_eq!(id("3D4(8)").s, BigRational::one());
        assert!(LieTypeId::parse("2B2(4)").is_err());
        assert!(LieTypeId::parse("A1(6)").is_err());
        assert!(LieTypeId::parse("C2(3)").is_err());
        assert!(LieTypeId::parse("Q1(3)").is_err());
    }

    #[test]
    fn family_rows() {
        let r = lie_lookup(&id("A1(4)")).unwrap();
        assert_eq!((r.d, r.b.clone(), r.cap), (3, BigRational::one(), 2));
        let r = lie_lookup(&id("E8(2)")).unwrap();
        assert_eq!((r.d, r.cap), (248, 1));
        assert_eq!(r.b, BigRational::from_integer(29.into()));
        let r = lie_lookup(&id("2A4(16)")).unwrap();
        assert_eq!((r.d, r.a_d), (24, 5));
        let r = lie_lookup(&id("D5(3)")).unwrap();
        assert_eq!(r.a_d, 2);
        let r = lie_lookup(&id("D6(3)")).unwrap();
        assert_eq!(r.a_d, 4);
        let r = lie_lookup(&id("C3(2)")).unwrap();
        assert_eq!(r.b, BigRational::new(37.into(), 10.into()));
        assert!(lie_lookup(&id("B2(2)")).is_err());
    }

    #[test]
    fn natural_and_ls_degrees() {
        assert_eq!(natural_degree(&id("A3(2)")).unwrap(), 4);
        assert_eq!(natural_degree(&id("2E6(4)")).unwrap(), 27);
        assert_eq!(natural_degree(&id("E8(3)")).unwrap(), 240);
        let r = lie_lookup(&id("A1(11)")).unwrap();
        assert_eq!(ls_degree(&r), BigInt::from(5));
        let r = lie_lookup(&id("B2(4)")).unwrap();
        assert_eq!(ls_degree(&r), BigInt::from(16));
        let r = lie_lookup(&id("2B2(32)")).unwrap();
        assert_eq!(ls_degree(&r), BigInt::from(91));
    }
}
