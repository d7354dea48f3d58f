//! Records for sporadic groups and the small groups of Lie type with exceptional behaviour,
//! and the minimal projective degree estimates built on them.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::lie::{lie_lookup, ls_degree, natural_degree, LieTypeId};
use super::printed::PrintedNumber;
use super::{catalog, CatalogError};
use crate::exactnum::exact::is_prime;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupKind {
    Sporadic,
    AlternatingExceptional,
    LieSmall,
}

/// Characteristics to which a degree estimate applies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CharCondition {
    Any,
    /// Every characteristic exponent except the listed primes.
    Except(Vec<u64>),
    /// Only the given characteristic.
    Only(u64),
}

impl CharCondition {
    pub fn holds(&self, p: u64) -> bool {
        match self {
            CharCondition::Any => true,
            CharCondition::Except(ps) => !ps.contains(&p),
            CharCondition::Only(q) => *q == p,
        }
    }

    fn parse(list: &str) -> Result<CharCondition, CatalogError> {
        let list = list.trim();
        if list.is_empty() || list == "-" {
            return Ok(CharCondition::Any);
        }
        let ps = list
            .split(',')
            .map(|p| p.trim().parse::<u64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| CatalogError::Data(format!("bad prime list '{list}'")))?;
        Ok(CharCondition::Except(ps))
    }
}

/// A per-characteristic degree estimate with its origin.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CharException {
    pub condition: CharCondition,
    pub degree: u64,
    pub source: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SimpleGroupRecord {
    pub name: String,
    pub aliases: Vec<String>,
    pub kind: GroupKind,
    /// Exact order (modulo the center for the Lie rows).
    #[serde(serialize_with = "ser_big")]
    pub order: BigInt,
    pub paper_order: PrintedNumber,
    pub schur_multiplier: String,
    pub out_order: u64,
    /// Outer automorphism group as printed, when the table describes it.
    pub out_printed: Option<String>,
    pub a1: Option<u64>,
    pub a2: Option<u64>,
    pub min_n_tilde: Option<u64>,
    pub char_exceptions: Vec<CharException>,
    /// Tabulated rows naming the same abstract group.
    pub isomorphic: Vec<String>,
    /// Defining characteristics of the group and the rows isomorphic to it.
    pub defining_characteristics: Vec<u64>,
    /// Source table.
    pub table: &'static str,
    pub note: String,
}

fn ser_big<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl SimpleGroupRecord {
    /// `|Aut G| = |Out G| |G|`.
    pub fn aut_order(&self) -> BigInt {
        &self.order * self.out_order
    }

    fn answers_to(&self, key: &str) -> bool {
        normalize(&self.name) == key || self.aliases.iter().any(|a| normalize(a) == key)
    }
}

/// Canonical lookup key: ASCII superscripts, `.` for the centered dot, no spaces, lower case.
pub(crate) fn normalize(name: &str) -> String {
    name.trim()
        .replace('²', "2")
        .replace('³', "3")
        .replace('·', ".")
        .replace('′', "'")
        .replace(['_', ' '], "")
        .to_ascii_lowercase()
}

#[derive(Debug, Deserialize)]
pub(crate) struct SporadicRow {
    name: String,
    aliases: Option<String>,
    order: String,
    printed_order: String,
    min_n: u64,
    min_n_tilde: u64,
    schur: String,
    out: u64,
    a1: String,
    note: Option<String>,
}

#[derive(Debug, Deserialize)]
pub(crate) struct SubgroupRow {
    group: String,
    subgroup: String,
    estimate: String,
    excluded_p: String,
    #[allow(dead_code)]
    note: Option<String>,
}

#[derive(Debug, Deserialize)]
pub(crate) struct SmallLieRow {
    name: String,
    iso: Option<String>,
    order: String,
    printed_order: String,
    min_n: u64,
    ls: u64,
    ls_excluded_p: Option<String>,
    ls_note: Option<String>,
    adjusted_printed: String,
    adjusted: u64,
    col7_printed: String,
    col7: u64,
    #[allow(dead_code)]
    col7_excluded_p: Option<String>,
    out_printed: String,
    out: u64,
    schur: String,
    q: u64,
    natural_degree: u64,
    kind: String,
}

fn parse_order(s: &str) -> Result<BigInt, CatalogError> {
    s.parse::<BigInt>()
        .map_err(|_| CatalogError::Data(format!("bad order '{s}'")))
}

fn printed(s: &str) -> Result<PrintedNumber, CatalogError> {
    PrintedNumber::parse(s).ok_or_else(|| CatalogError::Data(format!("bad printed number '{s}'")))
}

fn split_list(s: &Option<String>) -> Vec<String> {
    s.as_deref()
        .unwrap_or("")
        .split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(String::from)
        .collect()
}

pub(crate) fn build_records(
    sporadic: &[SporadicRow],
    subgroups: &[SubgroupRow],
    small: &[SmallLieRow],
) -> Result<Vec<SimpleGroupRecord>, CatalogError> {
    let mut out = Vec::new();
    for r in sporadic {
        let mut char_exceptions = Vec::new();
        for s in subgroups.iter().filter(|s| s.group == r.name) {
            if s.estimate == "-" {
                continue;
            }
            let degree = s
                .estimate
                .parse()
                .map_err(|_| CatalogError::Data(format!("bad estimate for {}", r.name)))?;
            char_exceptions.push(CharException {
                condition: CharCondition::parse(&s.excluded_p)?,
                degree,
                source: format!("subgroup {}", s.subgroup),
            });
        }
        let a1 = if r.a1 == "-" {
            None
        } else {
            Some(
                r.a1.parse()
                    .map_err(|_| CatalogError::Data(format!("bad a1 for {}", r.name)))?,
            )
        };
        out.push(SimpleGroupRecord {
            name: r.name.clone(),
            aliases: split_list(&r.aliases),
            kind: GroupKind::Sporadic,
            order: parse_order(&r.order)?,
            paper_order: printed(&r.printed_order)?,
            schur_multiplier: r.schur.clone(),
            out_order: r.out,
            out_printed: None,
            a1,
            a2: Some(r.min_n),
            min_n_tilde: Some(r.min_n_tilde),
            char_exceptions,
            isomorphic: Vec::new(),
            defining_characteristics: Vec::new(),
            table: "T7.2",
            note: r.note.clone().unwrap_or_default(),
        });
    }
    for r in small {
        let iso = split_list(&r.iso);
        // Defining characteristics of this row and every isomorphic Lie row.
        let mut chars = vec![r.q];
        for other in small.iter().filter(|o| iso.contains(&o.name)) {
            if !chars.contains(&other.q) {
                chars.push(other.q);
            }
        }
        chars.sort_unstable();
        let ls_cond = CharCondition::parse(r.ls_excluded_p.as_deref().unwrap_or(""))?;
        let mut char_exceptions = vec![
            CharException {
                condition: ls_cond.clone(),
                degree: r.ls,
                source: "LS estimate".into(),
            },
            CharException {
                condition: if iso.is_empty() {
                    ls_cond.clone()
                } else {
                    CharCondition::Any
                },
                degree: r.adjusted,
                source: format!("adjusted estimate {}", r.adjusted_printed),
            },
            CharException {
                condition: CharCondition::Except(chars.clone()),
                degree: r.col7,
                source: format!("non-Lie-p-type estimate {}", r.col7_printed),
            },
        ];
        if iso.is_empty() {
            char_exceptions.push(CharException {
                condition: CharCondition::Only(r.q),
                degree: r.natural_degree,
                source: "natural module".into(),
            });
        }
        let kind = match r.kind.as_str() {
            "alternating" => GroupKind::AlternatingExceptional,
            _ => GroupKind::LieSmall,
        };
        let mut aliases: Vec<String> = iso
            .iter()
            .filter(|a| a.starts_with("Alt"))
            .cloned()
            .collect();
        aliases.extend(derived_aliases(&r.name));
        out.push(SimpleGroupRecord {
            name: r.name.clone(),
            aliases,
            kind,
            order: parse_order(&r.order)?,
            paper_order: printed(&r.printed_order)?,
            schur_multiplier: r.schur.clone(),
            out_order: r.out,
            out_printed: Some(r.out_printed.clone()),
            a1: Some(r.adjusted),
            a2: Some(r.min_n),
            min_n_tilde: None,
            char_exceptions,
            isomorphic: iso.iter().filter(|a| !a.starts_with("Alt")).cloned().collect(),
            defining_characteristics: chars,
            table: "T6.3",
            note: r.ls_note.clone().map(|n| format!("LS footnote {n}")).unwrap_or_default(),
        });
    }
    Ok(out)
}

/// Aliases for the derived-group rows: `DB2(2)` is also `B2(2)'` and so on.
fn derived_aliases(name: &str) -> Vec<String> {
    if let Some(inner) = name.strip_prefix("D(").and_then(|s| s.strip_suffix(')')) {
        vec![format!("{inner}'")]
    } else if let Some(inner) = name.strip_prefix('D') {
        if inner.starts_with(['B', 'G']) {
            vec![format!("{inner}'")]
        } else {
            Vec::new()
        }
    } else {
        Vec::new()
    }
}

/// Look up a sporadic group or a tabulated small group of Lie type.
pub fn group_record(name: &str) -> Result<SimpleGroupRecord, CatalogError> {
    find_record(name)
        .cloned()
        .ok_or_else(|| CatalogError::UnknownGroup(name.to_string()))
}

pub(crate) fn find_record(name: &str) -> Option<&'static SimpleGroupRecord> {
    let key = normalize(name);
    catalog().groups.iter().find(|g| g.answers_to(&key))
}

/// Every tabulated record, sporadic groups first.
pub fn all_records() -> &'static [SimpleGroupRecord] {
    &catalog().groups
}

/// Groups of Lie type that are not simple and are handled through their derived group.
fn derived_redirect(id: &LieTypeId) -> Option<&'static str> {
    match id.name().as_str() {
        "B2(2)" => Some("DB2(2)"),
        "G2(2)" => Some("DG2(2)"),
        "2G2(3)" => Some("D(2G2(3))"),
        "2F4(2)" => Some("D(2F4(2))"),
        _ => None,
    }
}

fn check_characteristic(p: u64) -> Result<(), CatalogError> {
    if p == 1 || is_prime(p) {
        Ok(())
    } else {
        Err(CatalogError::InvalidCharacteristic(p))
    }
}

/// Whether the group belongs to the solvable exceptions.
pub fn is_solvable_exception(id: &LieTypeId) -> bool {
    catalog()
        .lists
        .iter()
        .any(|(list, g)| list == "solvable" && *g == id.name())
}

/// Lower bound on the degree of a faithful irreducible projective representation of the
/// named group in characteristic exponent `p` (1 for characteristic 0).
pub fn minimal_projective_degree_bound(group: &str, p: u64) -> Result<u64, CatalogError> {
    check_characteristic(p)?;
    if let Some(rec) = find_record(group) {
        return Ok(record_bound(rec, p));
    }
    match LieTypeId::parse(group) {
        Ok(id) => minimal_projective_degree_bound_lie(&id, p),
        Err(_) => Err(CatalogError::UnknownGroup(group.to_string())),
    }
}

/// As [`minimal_projective_degree_bound`] for a group given by its Lie-type identifier.
pub fn minimal_projective_degree_bound_lie(id: &LieTypeId, p: u64) -> Result<u64, CatalogError> {
    check_characteristic(p)?;
    if is_solvable_exception(id) {
        return Err(CatalogError::ExcludedGroup(id.name()));
    }
    let tabulated = derived_redirect(id).map(String::from).unwrap_or_else(|| id.name());
    if let Some(rec) = find_record(&tabulated) {
        return Ok(record_bound(rec, p));
    }
    if p == id.q {
        return natural_degree(id);
    }
    let rec = lie_lookup(id)?;
    ls_degree(&rec)
        .to_u64()
        .ok_or_else(|| CatalogError::Data(format!("degree estimate for {id} exceeds u64")))
}

/// Largest estimate valid in characteristic `p`, over the row and its isomorphic rows.
fn record_bound(rec: &SimpleGroupRecord, p: u64) -> u64 {
    let mut best = single_record_bound(rec, p);
    for other in &rec.isomorphic {
        if let Some(o) = find_record(other) {
            best = best.max(single_record_bound(o, p));
        }
    }
    best
}

fn single_record_bound(rec: &SimpleGroupRecord, p: u64) -> u64 {
    let mut best = match rec.kind {
        // A blank adjusted estimate still leaves the small-degree fallback of 6.
        GroupKind::Sporadic => rec.a1.unwrap_or(6),
        _ => 1,
    };
    for e in &rec.char_exceptions {
        if e.condition.holds(p) {
            best = best.max(e.degree);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sporadic_records() {
        let m11 = group_record("M11").unwrap();
        assert_eq!(m11.order, BigInt::from(7920));
        assert_eq!(m11.schur_multiplier, "1");
        assert_eq!(m11.a2, Some(4));
        let suz = group_record("Suz").unwrap();
        assert_eq!((suz.a1, suz.a2), (Some(12), Some(18)));
        assert_eq!(suz.aut_order(), BigInt::from(2) * &suz.order);
        assert_eq!(group_record("Co1").unwrap().name, ".1");
        assert_eq!(group_record("·1").unwrap().name, ".1");
        assert_eq!(group_record("fi24'").unwrap().name, "DM(24)");
        assert!(matches!(group_record("M13"), Err(CatalogError::UnknownGroup(_))));
    }

    #[test]
    fn small_lie_records() {
        let u = group_record("²A3(9)").unwrap();
        assert_eq!(u.order, BigInt::from(3_265_920));
        assert_eq!(u.out_order, 8);
        assert_eq!(group_record("Alt6").unwrap().name, "A1(9)");
        assert_eq!(group_record("B2(2)'").unwrap().name, "DB2(2)");
        assert_eq!(group_record("2F4(2)'").unwrap().name, "D(2F4(2))");
        assert_eq!(group_record("DB2(2)").unwrap().defining_characteristics, vec![2, 3]);
    }

    #[test]
    fn projective_degrees() {
        for p in [1, 3, 5, 7] {
            assert_eq!(minimal_projective_degree_bound("A1(8)", p).unwrap(), 7, "p={p}");
        }
        assert_eq!(minimal_projective_degree_bound("A1(8)", 2).unwrap(), 2);
        for p in [1, 2, 5] {
            assert_eq!(minimal_projective_degree_bound("B2(3)", p).unwrap(), 4);
        }
        // Alt6 has a 3-dimensional projective representation in characteristic 2.
        assert_eq!(minimal_projective_degree_bound("Alt6", 2).unwrap(), 3);
        assert_eq!(minimal_projective_degree_bound("DB2(2)", 2).unwrap(), 3);
        assert_eq!(minimal_projective_degree_bound("Alt6", 3).unwrap(), 2);
        assert_eq!(minimal_projective_degree_bound("2E6(4)", 2).unwrap(), 27);
        assert_eq!(minimal_projective_degree_bound("2E6(4)", 3).unwrap(), 1500);
        assert_eq!(minimal_projective_degree_bound("A1(11)", 2).unwrap(), 5);
        assert_eq!(minimal_projective_degree_bound("A1(11)", 11).unwrap(), 2);
        assert_eq!(minimal_projective_degree_bound("G2(2)", 3).unwrap(), 3);
        assert_eq!(minimal_projective_degree_bound("Ly", 1).unwrap(), 120);
        assert_eq!(minimal_projective_degree_bound("M(22)", 3).unwrap(), 6);
        assert!(matches!(
            minimal_projective_degree_bound("A1(3)", 2),
            Err(CatalogError::ExcludedGroup(_))
        ));
        assert!(matches!(
            minimal_projective_degree_bound("M11", 4),
            Err(CatalogError::InvalidCharacteristic(4))
        ));
    }
}
