//! Printed numeric tables kept for regeneration and diffing.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::printed::PrintedNumber;
use super::CatalogError;
use crate::exactnum::expr::parse_decimal;

fn printed(s: &str) -> Result<PrintedNumber, CatalogError> {
    PrintedNumber::parse(s).ok_or_else(|| CatalogError::Data(format!("bad printed number '{s}'")))
}

/// Thresholds and printed cells for one group of the F(G, n) table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Ta6Row {
    pub group: String,
    pub a1: u64,
    pub a2: u64,
    pub order_printed: PrintedNumber,
    /// `|Aut G| / |G|`.
    pub aut_factor: u64,
    pub f2a1: PrintedNumber,
    pub f3a1: PrintedNumber,
    pub r3: PrintedNumber,
    pub c1: PrintedNumber,
    pub c2: PrintedNumber,
    pub aut24: PrintedNumber,
    pub fa1: PrintedNumber,
}

#[derive(Debug, Deserialize)]
pub(crate) struct Ta6Raw {
    group: String,
    a1: u64,
    a2: u64,
    order_printed: String,
    aut_factor: u64,
    f2a1: String,
    f3a1: String,
    r3: String,
    c1: String,
    c2: String,
    aut24: String,
    fa1: String,
}

impl Ta6Raw {
    pub(crate) fn build(&self) -> Result<Ta6Row, CatalogError> {
        Ok(Ta6Row {
            group: self.group.clone(),
            a1: self.a1,
            a2: self.a2,
            order_printed: printed(&self.order_printed)?,
            aut_factor: self.aut_factor,
            f2a1: printed(&self.f2a1)?,
            f3a1: printed(&self.f3a1)?,
            r3: printed(&self.r3)?,
            c1: printed(&self.c1)?,
            c2: printed(&self.c2)?,
            aut24: printed(&self.aut24)?,
            fa1: printed(&self.fa1)?,
        })
    }
}

/// A group whose outer automorphism part is tabulated directly.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OutRow {
    pub group: String,
    /// The part as printed (`A_f`, `A_d`, `A_g`, `B_g`, `{1}`).
    pub part: String,
    pub order: u64,
    #[serde(serialize_with = "ser_rational")]
    pub x: BigRational,
}

#[derive(Debug, Deserialize)]
pub(crate) struct OutRaw {
    group: String,
    part: String,
    order: u64,
    x: String,
}

impl OutRaw {
    pub(crate) fn build(&self) -> Result<OutRow, CatalogError> {
        Ok(OutRow {
            group: self.group.clone(),
            part: self.part.clone(),
            order: self.order,
            x: parse_decimal(&self.x).ok_or_else(|| CatalogError::Data(format!("bad x '{}'", self.x)))?,
        })
    }
}

fn ser_rational<S: serde::Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// One column of the extraspecial normalizer table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtraspecialRow {
    pub n: u64,
    pub q: u64,
    pub a: u32,
    pub aut_c: PrintedNumber,
    pub aut: PrintedNumber,
    pub bound: PrintedNumber,
}

#[derive(Debug, Deserialize)]
pub(crate) struct ExtraspecialRaw {
    n: u64,
    q: u64,
    a: u32,
    aut_c: String,
    aut: String,
    bound: String,
}

impl ExtraspecialRaw {
    pub(crate) fn build(&self) -> Result<ExtraspecialRow, CatalogError> {
        Ok(ExtraspecialRow {
            n: self.n,
            q: self.q,
            a: self.a,
            aut_c: printed(&self.aut_c)?,
            aut: printed(&self.aut)?,
            bound: printed(&self.bound)?,
        })
    }
}

/// Printed alpha exponents for one degree.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlphaRow {
    pub n: u64,
    pub alpha_irr: PrintedNumber,
    pub alpha_all: PrintedNumber,
}

#[derive(Debug, Deserialize)]
pub(crate) struct AlphaRaw {
    n: u64,
    alpha_irr: String,
    alpha_all: String,
}

impl AlphaRaw {
    pub(crate) fn build(&self) -> Result<AlphaRow, CatalogError> {
        Ok(AlphaRow {
            n: self.n,
            alpha_irr: printed(&self.alpha_irr)?,
            alpha_all: printed(&self.alpha_all)?,
        })
    }
}

/// Printed ceiling `t_r`, printed `m_r`, and the exact order behind the ceiling.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PrimitiveRow {
    pub r: u64,
    pub t_r: PrintedNumber,
    pub m_r: u64,
    /// Exact automorphism order, or `None` when the ceiling is `r f(r)` itself.
    #[serde(serialize_with = "ser_opt_big")]
    pub exact: Option<BigInt>,
    pub source: String,
}

fn ser_opt_big<S: serde::Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(b) => s.serialize_str(&b.to_string()),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Deserialize)]
pub(crate) struct PrimitiveRaw {
    r: u64,
    t_r: String,
    m_r: u64,
    exact: String,
    source: String,
}

impl PrimitiveRaw {
    pub(crate) fn build(&self) -> Result<PrimitiveRow, CatalogError> {
        let exact = if self.exact == "rf(r)" {
            None
        } else {
            Some(
                self.exact
                    .parse()
                    .map_err(|_| CatalogError::Data(format!("bad exact order '{}'", self.exact)))?,
            )
        };
        Ok(PrimitiveRow {
            r: self.r,
            t_r: printed(&self.t_r)?,
            m_r: self.m_r,
            exact,
            source: self.source.clone(),
        })
    }
}

#[derive(Debug, Deserialize)]
pub(crate) struct ListRaw {
    pub(crate) list: String,
    pub(crate) group: String,
}
