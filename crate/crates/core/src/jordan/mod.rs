//! Degree tables for finite linear groups.
//!
//! [`irreducible_table`] bounds the image of an irreducible group of degree `n` by the maximum of
//! `(n+2)!` and the block products `t_r^m m!` with `r m = n`. [`closure_table`] then allows
//! reducible groups by closing the table under `B(m1 + m2) >= B(m1) B(m2)`. Each entry carries
//! the exponent `alpha` that makes `(n+2)! n^(4 alpha)` an upper bound.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::catalog::catalog;
use crate::estimates::envelope_expr;
use crate::exactnum::exact::{big_pow, factorial, is_prime, pow_u64};
use crate::exactnum::{BoundExpr, CompareOptions};
use crate::verifier::report::{check_le, CheckPoint, CheckReport, Status};

/// Largest degree covered by the tables of the irreducible search.
pub const IRREDUCIBLE_MAX: u64 = 63;
/// Largest degree swept by the closure.
pub const CLOSURE_MAX: u64 = 126;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum JordanError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("out of range: {0}")]
    OutOfRange(String),
}

/// Ceiling on the image of a primitive block of size `r`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PrimitiveCeiling {
    pub r: u64,
    /// The printed ceiling read as an exact integer.
    #[serde(serialize_with = "ser_big")]
    pub t_r: BigInt,
    /// Exact automorphism order behind the ceiling, when it is one.
    #[serde(serialize_with = "ser_opt_big")]
    pub exact: Option<BigInt>,
    pub printed_m_r: u64,
}

fn ser_big<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn ser_opt_big<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(b) => s.serialize_str(&b.to_string()),
        None => s.serialize_none(),
    }
}

/// The ceilings `t_2, ..., t_12` as printed.
pub fn primitive_ceilings() -> Vec<PrimitiveCeiling> {
    catalog()
        .primitive
        .iter()
        .map(|row| PrimitiveCeiling {
            r: row.r,
            t_r: row
                .t_r
                .as_integer()
                .unwrap_or_else(|| panic!("printed ceiling t_{} is not an integer", row.r)),
            exact: row.exact.clone(),
            printed_m_r: row.m_r,
        })
        .collect()
}

/// The ceilings with each printed value replaced by its exact order where one is recorded.
pub fn exact_ceilings() -> Vec<PrimitiveCeiling> {
    primitive_ceilings()
        .into_iter()
        .map(|mut c| {
            if let Some(e) = &c.exact {
                c.t_r = e.clone();
            }
            c
        })
        .collect()
}

/// `F(m, r, t) = t^m m! / (r m + 2)!`.
pub fn ratio_f(m: u64, r: u64, t: &BigInt) -> BigRational {
    BigRational::new(big_pow(t, m) * factorial(m), factorial(r * m + 2))
}

/// Result of the stabilization search for one block size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StableM {
    /// Largest `m` with `F(m, r, t) >= 1`, or 0 when there is none.
    pub m_star: u64,
    /// The step ratio `F(m+1)/F(m)` is below 1 from `m_star` on and decreases over the checked
    /// range, so `F < 1` for every larger `m`.
    pub certificate: bool,
    /// Last `m` examined by the certificate.
    pub checked_to: u64,
}

/// `F(m+1)/F(m) = t (m+1) / ((rm+3)(rm+4)...(rm+r+2))`.
fn step_ratio(m: u64, r: u64, t: &BigInt) -> BigRational {
    let den = (3..=r + 2).fold(BigInt::one(), |acc, j| acc * BigInt::from(r * m + j));
    BigRational::new(t * BigInt::from(m + 1), den)
}

/// Extra steps over which the step ratio is confirmed to decrease.
const CERTIFICATE_SPAN: u64 = 200;

pub fn stable_m(r: u64, t: &BigInt) -> StableM {
    let one = BigRational::one();
    let mut m_star = 0;
    let mut m = 1;
    let mut f = ratio_f(1, r, t);
    // F rises while the step ratio is at least 1 and falls afterwards; stop once both the value
    // and the step ratio are below 1.
    loop {
        let step = step_ratio(m, r, t);
        if f >= one {
            m_star = m;
        } else if step < one {
            break;
        }
        f *= step;
        m += 1;
    }
    let start = m_star.max(1);
    let mut certificate = step_ratio(m_star, r, t) < one || m_star == 0 && f < one;
    let mut prev = step_ratio(start, r, t);
    let end = start + CERTIFICATE_SPAN;
    for k in start + 1..=end {
        let cur = step_ratio(k, r, t);
        if cur >= prev {
            certificate = false;
            break;
        }
        prev = cur;
    }
    StableM {
        m_star,
        certificate,
        checked_to: end,
    }
}

/// An exponent rounded up to two decimals, stored in hundredths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Alpha(pub u32);

impl Alpha {
    pub fn hundredths(self) -> u32 {
        self.0
    }

    pub fn as_rational(self) -> BigRational {
        BigRational::new(self.0.into(), 100.into())
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{:02}", self.0 / 100, self.0 % 100)
    }
}

impl Serialize for Alpha {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `log_n(bound / (n+2)!) / 4` rounded up to two decimals.
///
/// The smallest `k` with `(bound/(n+2)!)^25 <= n^k` is found in exact arithmetic, so no
/// rounding question is ever left to an enclosure.
pub fn alpha_of(n: u64, bound: &BigInt) -> Result<Alpha, JordanError> {
    if n < 2 {
        return Err(JordanError::OutOfRange(format!("alpha needs n >= 2, got {n}")));
    }
    let base = factorial(n + 2);
    if *bound < base {
        return Err(JordanError::OutOfRange(format!("bound below ({n}+2)!")));
    }
    let ratio = BigRational::new(bound.clone(), base);
    if ratio.is_one() {
        return Ok(Alpha(0));
    }
    let num = big_pow(ratio.numer(), 25);
    let den = big_pow(ratio.denom(), 25);
    let fits = |k: u64| num <= &den * pow_u64(n, k);
    let guess = ratio.to_f64().map_or(0.0, |r| 25.0 * r.ln() / (n as f64).ln());
    let mut k = (guess.floor() as i64 - 2).max(0) as u64;
    while k > 0 && fits(k - 1) {
        k -= 1;
    }
    while !fits(k) {
        k += 1;
    }
    let k = u32::try_from(k).map_err(|_| JordanError::OutOfRange("alpha too large".into()))?;
    Ok(Alpha(k))
}

/// Where a table entry's bound comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Provenance {
    Factorial,
    Primitive { r: u64, m: u64 },
    Product { m1: u64, m2: u64 },
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Factorial => f.write_str("(n+2)!"),
            Provenance::Primitive { r, m } => write!(f, "r={r}, m={m}"),
            Provenance::Product { m1, m2 } => write!(f, "B({m1}) B({m2})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundEntry {
    pub n: u64,
    #[serde(serialize_with = "ser_big")]
    pub bound: BigInt,
    pub provenance: Provenance,
    pub alpha: Alpha,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundTable {
    pub entries: BTreeMap<u64, BoundEntry>,
    /// Sweeps performed by the closure until nothing changed (0 for the irreducible table).
    pub sweeps: u32,
}

impl BoundTable {
    pub fn get(&self, n: u64) -> Option<&BoundEntry> {
        self.entries.get(&n)
    }

    pub fn max_n(&self) -> u64 {
        self.entries.keys().next_back().copied().unwrap_or(0)
    }

    fn bound(&self, n: u64) -> BigInt {
        self.entries
            .get(&n)
            .map(|e| e.bound.clone())
            .unwrap_or_else(|| factorial(n + 2))
    }
}

fn entry(n: u64, bound: BigInt, provenance: Provenance) -> BoundEntry {
    let alpha = alpha_of(n, &bound).expect("table bounds dominate (n+2)!");
    BoundEntry {
        n,
        bound,
        provenance,
        alpha,
    }
}

/// Irreducible bounds from explicit ceilings.
pub fn irreducible_table_with(n_max: u64, ceilings: &[PrimitiveCeiling]) -> BoundTable {
    let entries = (2..=n_max)
        .into_par_iter()
        .map(|n| {
            let mut best = factorial(n + 2);
            let mut prov = Provenance::Factorial;
            for c in ceilings.iter().filter(|c| n % c.r == 0) {
                let m = n / c.r;
                let cand = big_pow(&c.t_r, m) * factorial(m);
                if cand > best {
                    best = cand;
                    prov = Provenance::Primitive { r: c.r, m };
                }
            }
            (n, entry(n, best, prov))
        })
        .collect();
    BoundTable { entries, sweeps: 0 }
}

/// Irreducible bounds for `2 <= n <= n_max` from the printed ceilings.
pub fn irreducible_table(n_max: u64) -> BoundTable {
    irreducible_table_with(n_max, &primitive_ceilings())
}

/// Least fixed point of `B(n) <- max(B(n), B(m1) B(m2))` over `m1 + m2 = n`, `m1, m2 >= 2`.
/// Degrees beyond the base table start from `(n+2)!`.
pub fn closure_table(base: &BoundTable, n_max: u64) -> BoundTable {
    let mut bounds: BTreeMap<u64, (BigInt, Provenance)> = (2..=n_max)
        .map(|n| {
            let prov = base.get(n).map_or(Provenance::Factorial, |e| e.provenance);
            (n, (base.bound(n), prov))
        })
        .collect();
    let mut sweeps = 0;
    loop {
        sweeps += 1;
        let mut changed = false;
        for n in 4..=n_max {
            let best = (2..=n / 2)
                .into_par_iter()
                .map(|m1| {
                    let m2 = n - m1;
                    (&bounds[&m1].0 * &bounds[&m2].0, m1, m2)
                })
                .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
            if let Some((v, m1, m2)) = best {
                if v > bounds[&n].0 {
                    bounds.insert(n, (v, Provenance::Product { m1, m2 }));
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let entries = bounds
        .into_iter()
        .map(|(n, (b, p))| (n, entry(n, b, p)))
        .collect();
    BoundTable { entries, sweeps }
}

/// The printed-ceiling irreducible table and its closure, built once.
pub fn default_tables() -> &'static (BoundTable, BoundTable) {
    static TABLES: OnceLock<(BoundTable, BoundTable)> = OnceLock::new();
    TABLES.get_or_init(|| {
        let irr = irreducible_table(IRREDUCIBLE_MAX);
        let all = closure_table(&irr, CLOSURE_MAX);
        (irr, all)
    })
}

/// Which groups a bound covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupClass {
    Irreducible,
    General,
}

impl std::str::FromStr for GroupClass {
    type Err = JordanError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "irreducible" | "irr" => Ok(GroupClass::Irreducible),
            "general" | "all" => Ok(GroupClass::General),
            other => Err(JordanError::OutOfRange(format!("unknown class '{other}'"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JordanBound {
    pub n: u64,
    pub class: GroupClass,
    #[serde(serialize_with = "ser_big")]
    pub bound: BigInt,
    pub alpha: Alpha,
    pub provenance: Provenance,
}

/// Bound on `|G/L|` for a finite subgroup of `GL_n` in the given class.
pub fn jordan_bound(n: u64, class: GroupClass) -> Result<JordanBound, JordanError> {
    if n < 2 {
        return Err(JordanError::OutOfRange(format!("degree must be >= 2, got {n}")));
    }
    if n > IRREDUCIBLE_MAX {
        return Ok(JordanBound {
            n,
            class,
            bound: factorial(n + 2),
            alpha: Alpha(0),
            provenance: Provenance::Factorial,
        });
    }
    let (irr, all) = default_tables();
    let table = match class {
        GroupClass::Irreducible => irr,
        GroupClass::General => all,
    };
    let e = table.get(n).expect("tables cover 2..=63");
    Ok(JordanBound {
        n,
        class,
        bound: e.bound.clone(),
        alpha: e.alpha,
        provenance: e.provenance,
    })
}

/// `p^(3a)` times `n^4 (n+2)!` for `n <= 63`, or times `(n+2)!` beyond.
pub fn brauer_feit_bound(p: u64, a: u64, n: u64) -> Result<BigInt, JordanError> {
    if !is_prime(p) {
        return Err(JordanError::NotPrime(p));
    }
    if n < 2 {
        return Err(JordanError::OutOfRange(format!("degree must be >= 2, got {n}")));
    }
    let mut b = pow_u64(p, 3 * a) * factorial(n + 2);
    if n <= IRREDUCIBLE_MAX {
        b *= pow_u64(n, 4);
    }
    Ok(b)
}

/// Certify `B(n) <= (n+2)! n^(4020/((n-20)^2+1000))` and `B(n) <= n^4 (n+2)!` for every
/// `2 <= n <= 63` in the table.
pub fn envelope_check(table: &BoundTable) -> CheckReport {
    let opts = CompareOptions::from_env();
    let env = envelope_expr();
    let ns: Vec<u64> = table.entries.keys().copied().filter(|&n| n <= IRREDUCIBLE_MAX).collect();
    let points: Vec<CheckPoint> = ns
        .par_iter()
        .flat_map_iter(|&n| {
            let b = &table.entries[&n].bound;
            let be = BoundExpr::big(b);
            let envelope = check_le(format!("n={n} envelope"), &be, &env.at(n), &opts);
            let cap = factorial(n + 2) * pow_u64(n, 4);
            let quartic = if *b <= cap {
                CheckPoint::new(format!("n={n} n^4 (n+2)!"), Status::Pass)
            } else {
                CheckPoint::new(format!("n={n} n^4 (n+2)!"), Status::Fail).values(b.to_string(), cap.to_string())
            };
            [envelope, quartic]
        })
        .collect();
    CheckReport::new("envelope", format!("n = 2..{}", ns.last().copied().unwrap_or(2)), points)
}

/// Differences between the printed-ceiling tables and tables built from exact orders.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Sensitivity {
    /// `(r, m_star printed ceiling, m_star exact order)` where they differ.
    pub m_star_changes: Vec<(u64, u64, u64)>,
    /// `(n, class, alpha printed ceiling, alpha exact order)` where they differ.
    pub alpha_changes: Vec<(u64, GroupClass, Alpha, Alpha)>,
}

/// Rerun the search with exact automorphism orders in place of the printed ceilings.
pub fn sensitivity() -> Sensitivity {
    let printed = primitive_ceilings();
    let exact = exact_ceilings();
    let m_star_changes = printed
        .iter()
        .zip(&exact)
        .filter_map(|(p, e)| {
            let (a, b) = (stable_m(p.r, &p.t_r).m_star, stable_m(e.r, &e.t_r).m_star);
            (a != b).then_some((p.r, a, b))
        })
        .collect();
    let (irr, all) = default_tables();
    let irr_e = irreducible_table_with(IRREDUCIBLE_MAX, &exact);
    let all_e = closure_table(&irr_e, CLOSURE_MAX);
    let mut alpha_changes = Vec::new();
    for (class, a, b) in [(GroupClass::Irreducible, irr, &irr_e), (GroupClass::General, all, &all_e)] {
        for n in 2..=IRREDUCIBLE_MAX {
            let (x, y) = (a.entries[&n].alpha, b.entries[&n].alpha);
            if x != y {
                alpha_changes.push((n, class, x, y));
            }
        }
    }
    Sensitivity {
        m_star_changes,
        alpha_changes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(v: u64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn ratio_examples() {
        let r = ratio_f(1, 12, &t(900_000_000_000));
        assert_eq!(r, BigRational::new(t(900_000_000_000), factorial(14)));
        assert!(r > BigRational::from_integer(t(10)));
        assert!(ratio_f(2, 12, &t(900_000_000_000)) < BigRational::one());
        assert_eq!(ratio_f(1, 2, &t(60)), BigRational::new(t(5), t(2)));
    }

    #[test]
    fn stable_m_examples() {
        assert_eq!(stable_m(2, &t(60)).m_star, 30);
        assert_eq!(stable_m(12, &t(900_000_000_000)).m_star, 1);
        let s = stable_m(3, &t(2520));
        assert_eq!(s.m_star, 21);
        assert!(s.certificate);
        assert!(ratio_f(21, 3, &t(2520)) >= BigRational::one());
        assert!(ratio_f(22, 3, &t(2520)) < BigRational::one());
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha_of(2, &t(60)).unwrap(), Alpha(34));
        assert_eq!(alpha_of(5, &t(51840)).unwrap(), Alpha(37));
        let b = big_pow(&t(2520), 6) * factorial(6);
        assert_eq!(alpha_of(18, &b).unwrap(), Alpha(98));
        assert_eq!(alpha_of(7, &factorial(9)).unwrap(), Alpha(0));
        assert_eq!(Alpha(4).to_string(), "0.04");
    }

    #[test]
    fn irreducible_rows() {
        let irr = irreducible_table(20);
        assert_eq!(irr.get(2).unwrap().bound, t(60));
        assert_eq!(irr.get(2).unwrap().provenance, Provenance::Primitive { r: 2, m: 1 });
        assert_eq!(irr.get(5).unwrap().bound, t(51840));
        assert_eq!(irr.get(13).unwrap().bound, factorial(15));
        assert_eq!(irr.get(13).unwrap().alpha, Alpha(0));
    }

    #[test]
    fn closure_rows() {
        let (irr, all) = default_tables();
        assert_eq!(all.get(5).unwrap().bound, t(151_200));
        assert_eq!(all.get(5).unwrap().alpha, Alpha(53));
        let want = t(2520) * t(51840) * t(51840) * t(2);
        assert_eq!(all.get(11).unwrap().bound, want);
        assert_eq!(all.get(11).unwrap().alpha, Alpha(81));
        for n in [59, 61, 62] {
            assert_eq!(all.get(n).unwrap().bound, factorial(n + 2));
        }
        for n in 2..=63 {
            assert!(all.get(n).unwrap().bound >= irr.get(n).unwrap().bound);
        }
    }

    #[test]
    fn top_level_bounds() {
        let b = jordan_bound(63, GroupClass::General).unwrap();
        assert_eq!(b.alpha, Alpha(4));
        let b = jordan_bound(64, GroupClass::General).unwrap();
        assert_eq!(b.bound, factorial(66));
        assert_eq!(b.alpha, Alpha(0));
        let b = jordan_bound(4, GroupClass::Irreducible).unwrap();
        assert_eq!(b.bound, t(51840));
        assert_eq!(b.alpha, Alpha(78));
    }

    #[test]
    fn brauer_feit_examples() {
        assert_eq!(brauer_feit_bound(2, 3, 4).unwrap(), t(94_371_840));
        assert_eq!(brauer_feit_bound(5, 0, 64).unwrap(), factorial(66));
        assert_eq!(brauer_feit_bound(3, 1, 2).unwrap(), t(10368));
        assert_eq!(brauer_feit_bound(4, 1, 2), Err(JordanError::NotPrime(4)));
    }
}
