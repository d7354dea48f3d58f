//! Lemma checks, table regeneration and constant checks.
//!
//! Every entry point returns a [`CheckReport`]. Mismatches and undecidable comparisons are
//! report content; only unknown identifiers and malformed ranges are errors.

use std::ops::RangeInclusive;

use thiserror::Error;

use crate::catalog::CatalogError;
use crate::estimates::EstimateError;
use crate::exactnum::CompareError;
use crate::jordan::JordanError;

mod constants;
mod lemmas;
pub mod report;
mod tables;

pub use constants::{check_constant, CONSTANT_IDS};
pub use lemmas::{verify_lemma, verify_lemma_with, LEMMA_IDS};
pub use report::{reports_json, reports_junit, CheckPoint, CheckReport, Status, Summary};
pub use tables::{regenerate_table, TABLE_IDS};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum VerifyError {
    #[error("unknown lemma '{0}'")]
    UnknownLemma(String),
    #[error("unknown table '{0}'")]
    UnknownTable(String),
    #[error("unknown constant '{0}'")]
    UnknownConstant(String),
    #[error("bad range: {0}")]
    BadRange(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Estimate(#[from] EstimateError),
    #[error(transparent)]
    Jordan(#[from] JordanError),
    #[error(transparent)]
    Compare(#[from] CompareError),
}

/// Parse `a..b` or `a..=b` (both inclusive) or a single integer.
pub fn parse_range(s: &str) -> Result<RangeInclusive<u64>, VerifyError> {
    let bad = || VerifyError::BadRange(s.to_string());
    let t = s.trim();
    let (lo, hi) = match t.split_once("..") {
        Some((a, b)) => (a.trim(), b.trim().trim_start_matches('=')),
        None => (t, t),
    };
    let lo: u64 = lo.parse().map_err(|_| bad())?;
    let hi: u64 = hi.parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

/// Every lemma report on its default domain, in [`LEMMA_IDS`] order.
pub fn verify_all() -> Vec<CheckReport> {
    LEMMA_IDS
        .iter()
        .map(|id| verify_lemma(id).expect("listed lemma ids are known"))
        .collect()
}

/// Every table report, in [`TABLE_IDS`] order.
pub fn regenerate_all() -> Vec<CheckReport> {
    TABLE_IDS
        .iter()
        .map(|id| regenerate_table(id).expect("listed table ids are known"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..64").unwrap(), 2..=64);
        assert_eq!(parse_range("3..=5").unwrap(), 3..=5);
        assert_eq!(parse_range("7").unwrap(), 7..=7);
        assert!(parse_range("9..3").is_err());
        assert!(parse_range("x").is_err());
    }
}
