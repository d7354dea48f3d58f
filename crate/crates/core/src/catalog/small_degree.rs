//! Centrally simple linear groups of degree 2 to 5.

use serde::{Deserialize, Serialize};

use super::{catalog, CatalogError};
use crate::exactnum::exact::is_prime;

/// Characteristics in which an entry occurs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CharClass {
    /// Almost every characteristic, subject to the row condition.
    AnyP,
    /// Only the given characteristic.
    SporadicP(u64),
    /// Groups of Lie p-type; absent in characteristic 0.
    LieType,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmallDegreeEntry {
    pub degree: u32,
    pub class: CharClass,
    /// Group with its central-extension prefix, e.g. `2.Alt5`.
    pub group: String,
    /// Condition as printed (`-` for none).
    pub condition: String,
}

#[derive(Debug, Deserialize)]
pub(crate) struct SmallDegreeRow {
    n: u32,
    class: String,
    group: String,
    condition: String,
}

fn condition_value(cond: &str, op: &str) -> Option<Vec<u64>> {
    let rest = cond.strip_prefix("p")?.strip_prefix(op)?;
    rest.split(',').map(|v| v.trim().parse().ok()).collect()
}

impl SmallDegreeEntry {
    /// Whether the entry occurs in characteristic exponent `p`.
    pub fn admits(&self, p: u64) -> bool {
        match self.class {
            CharClass::SporadicP(q) => return p == q,
            CharClass::LieType if p == 1 => return false,
            _ => {}
        }
        let c = self.condition.as_str();
        if c == "-" || c.starts_with('a') {
            return true;
        }
        if let Some(v) = condition_value(c, "!=") {
            return !v.contains(&p);
        }
        if let Some(v) = condition_value(c, ">=") {
            return p >= v[0];
        }
        if let Some(v) = condition_value(c, ">") {
            return p > v[0];
        }
        if let Some(v) = condition_value(c, "=") {
            return p == v[0];
        }
        false
    }
}

pub(crate) fn build_entries(rows: &[SmallDegreeRow]) -> Result<Vec<SmallDegreeEntry>, CatalogError> {
    rows.iter()
        .map(|r| {
            let class = match r.class.as_str() {
                "any" => CharClass::AnyP,
                "lie" => CharClass::LieType,
                "sporadic" => {
                    let p = condition_value(&r.condition, "=")
                        .and_then(|v| v.first().copied())
                        .ok_or_else(|| CatalogError::Data(format!("sporadic row {} lacks p=", r.group)))?;
                    CharClass::SporadicP(p)
                }
                other => return Err(CatalogError::Data(format!("unknown class '{other}'"))),
            };
            Ok(SmallDegreeEntry {
                degree: r.n,
                class,
                group: r.group.clone(),
                condition: r.condition.clone(),
            })
        })
        .collect()
}

/// Entries of degree `n` occurring in characteristic exponent `p` (1 for characteristic 0).
pub fn small_degree_groups(n: u32, p: u64) -> Result<Vec<SmallDegreeEntry>, CatalogError> {
    if !(2..=5).contains(&n) {
        return Err(CatalogError::OutOfRange(format!("degree {n} outside 2..5")));
    }
    if p != 1 && !is_prime(p) {
        return Err(CatalogError::InvalidCharacteristic(p));
    }
    Ok(catalog()
        .small_degree
        .iter()
        .filter(|e| e.degree == n && e.admits(p))
        .cloned()
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: u32, p: u64) -> Vec<String> {
        small_degree_groups(n, p).unwrap().into_iter().map(|e| e.group).collect()
    }

    #[test]
    fn characteristic_zero_degree_two() {
        assert_eq!(names(2, 1), vec!["2.Alt5"]);
    }

    #[test]
    fn sporadic_characteristics() {
        assert!(names(3, 5).contains(&"3.Alt7".to_string()));
        assert!(!names(3, 7).contains(&"3.Alt7".to_string()));
        assert!(names(5, 3).contains(&"M11".to_string()));
        assert!(!names(5, 1).contains(&"M11".to_string()));
    }

    #[test]
    fn conditions() {
        assert!(!names(4, 5).contains(&"Alt5".to_string()));
        assert!(names(4, 7).contains(&"A1(p^a)".to_string()));
        assert!(!names(4, 3).contains(&"A1(p^a)".to_string()));
        assert!(!names(5, 3).contains(&"Alt6".to_string()));
        assert!(names(4, 2).contains(&"2B2(2^(2a+1))".to_string()));
    }

    #[test]
    fn degree_range() {
        assert!(matches!(small_degree_groups(6, 1), Err(CatalogError::OutOfRange(_))));
        assert!(matches!(small_degree_groups(1, 1), Err(CatalogError::OutOfRange(_))));
    }
}
