//! Embedded group data: the family table for groups of Lie type, sporadic and small exceptional
//! groups, the small-degree list, and the printed numeric tables used for regeneration.
//!
//! Every table is a tab-separated file under `data/` compiled into the library. Each file starts
//! with `# table:` and `# version:` lines naming the printed table it transcribes.

pub mod formula;
pub mod groups;
pub mod lie;
pub mod printed;
pub mod small_degree;
pub mod tables;

use std::sync::OnceLock;

use serde::de::DeserializeOwned;
use serde::Serialize;
use thiserror::Error;

pub use groups::{
    all_records, group_record, minimal_projective_degree_bound, minimal_projective_degree_bound_lie,
    CharCondition, CharException, GroupKind, SimpleGroupRecord,
};
pub use lie::{lie_lookup, ls_degree, natural_degree, LieFamily, LieFamilyRecord, LieTypeId};
pub use printed::{Agreement, PrintedNumber};
pub use small_degree::{small_degree_groups, CharClass, SmallDegreeEntry};
pub use tables::{AlphaRow, ExtraspecialRow, OutRow, PrimitiveRow, Ta6Row};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CatalogError {
    #[error("unknown or malformed Lie family: {0}")]
    UnknownFamily(String),
    #[error("unknown group: {0}")]
    UnknownGroup(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("group excluded from the simple-group bounds: {0}")]
    ExcludedGroup(String),
    #[error("not a characteristic exponent (1 or a prime): {0}")]
    InvalidCharacteristic(u64),
    #[error("unknown table: {0}")]
    UnknownTable(String),
    #[error("catalog data error: {0}")]
    Data(String),
}

/// One embedded resource file.
#[derive(Clone, Debug, Serialize)]
pub struct TableInfo {
    pub file: &'static str,
    /// Printed table the file transcribes, from its `# table:` line.
    pub table: String,
    pub version: u32,
    #[serde(skip)]
    pub text: &'static str,
}

macro_rules! data_file {
    ($name:literal) => {
        ($name, include_str!(concat!("../../data/", $name, ".tsv")))
    };
}

const FILES: [(&str, &str); 12] = [
    data_file!("t4_4_lie_families"),
    data_file!("t5_1_natural_degree"),
    data_file!("t2_7_small_degree"),
    data_file!("t6_3_small_lie"),
    data_file!("t7_2_sporadic"),
    data_file!("t7_2_subgroups"),
    data_file!("ta_6_thresholds"),
    data_file!("t4_5_4_out"),
    data_file!("c8_2_extraspecial"),
    data_file!("t12_1_alpha"),
    data_file!("t12_2_primitive"),
    data_file!("exceptions"),
];

/// All catalog data, parsed once.
#[derive(Debug)]
pub struct Catalog {
    pub(crate) family_rows: Vec<lie::FamilyRow>,
    pub(crate) natural_rows: Vec<lie::NaturalRow>,
    pub(crate) groups: Vec<SimpleGroupRecord>,
    pub(crate) small_degree: Vec<SmallDegreeEntry>,
    pub(crate) lists: Vec<(String, String)>,
    pub ta6: Vec<Ta6Row>,
    pub out_rows: Vec<OutRow>,
    pub extraspecial: Vec<ExtraspecialRow>,
    pub alpha: Vec<AlphaRow>,
    pub primitive: Vec<PrimitiveRow>,
    pub tables: Vec<TableInfo>,
}

fn text(file: &str) -> &'static str {
    FILES
        .iter()
        .find(|(n, _)| *n == file)
        .map(|(_, t)| *t)
        .unwrap_or("")
}

fn reader(text: &str) -> csv::Reader<&[u8]> {
    csv::ReaderBuilder::new()
        .delimiter(b'\t')
        .comment(Some(b'#'))
        .quoting(false)
        .from_reader(text.as_bytes())
}

fn rows<T: DeserializeOwned>(file: &str) -> Result<Vec<T>, CatalogError> {
    reader(text(file))
        .deserialize()
        .enumerate()
        .map(|(i, r)| r.map_err(|e| CatalogError::Data(format!("{file}.tsv record {}: {e}", i + 1))))
        .collect()
}

fn header_value(text: &str, key: &str) -> Option<String> {
    text.lines()
        .take_while(|l| l.starts_with('#'))
        .find_map(|l| l.strip_prefix('#')?.trim().strip_prefix(key).map(|v| v.trim().to_string()))
}

fn table_info(file: &'static str, text: &'static str) -> Result<TableInfo, CatalogError> {
    let table = header_value(text, "table:").ok_or_else(|| CatalogError::Data(format!("{file}.tsv lacks a table line")))?;
    let version = header_value(text, "version:")
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| CatalogError::Data(format!("{file}.tsv lacks a version line")))?;
    Ok(TableInfo {
        file,
        table,
        version,
        text,
    })
}

impl Catalog {
    /// Parse every embedded table.
    pub fn load() -> Result<Catalog, CatalogError> {
        let tables = FILES
            .iter()
            .map(|(f, t)| table_info(f, t))
            .collect::<Result<Vec<_>, _>>()?;
        let sporadic: Vec<groups::SporadicRow> = rows("t7_2_sporadic")?;
        let subgroups: Vec<groups::SubgroupRow> = rows("t7_2_subgroups")?;
        let small: Vec<groups::SmallLieRow> = rows("t6_3_small_lie")?;
        let small_rows: Vec<small_degree::SmallDegreeRow> = rows("t2_7_small_degree")?;
        let lists: Vec<tables::ListRaw> = rows("exceptions")?;
        Ok(Catalog {
            family_rows: rows("t4_4_lie_families")?,
            natural_rows: rows("t5_1_natural_degree")?,
            groups: groups::build_records(&sporadic, &subgroups, &small)?,
            small_degree: small_degree::build_entries(&small_rows)?,
            lists: lists.into_iter().map(|l| (l.list, l.group)).collect(),
            ta6: rows::<tables::Ta6Raw>("ta_6_thresholds")?
                .iter()
                .map(|r| r.build())
                .collect::<Result<_, _>>()?,
            out_rows: rows::<tables::OutRaw>("t4_5_4_out")?
                .iter()
                .map(|r| r.build())
                .collect::<Result<_, _>>()?,
            extraspecial: rows::<tables::ExtraspecialRaw>("c8_2_extraspecial")?
                .iter()
                .map(|r| r.build())
                .collect::<Result<_, _>>()?,
            alpha: rows::<tables::AlphaRaw>("t12_1_alpha")?
                .iter()
                .map(|r| r.build())
                .collect::<Result<_, _>>()?,
            primitive: rows::<tables::PrimitiveRaw>("t12_2_primitive")?
                .iter()
                .map(|r| r.build())
                .collect::<Result<_, _>>()?,
            tables,
        })
    }

    /// Members of a named group list (`solvable`, `two_characteristics`, `ls_exceptions`).
    pub fn list(&self, name: &str) -> Vec<&str> {
        self.lists
            .iter()
            .filter(|(l, _)| l == name)
            .map(|(_, g)| g.as_str())
            .collect()
    }
}

/// The shared catalog. The embedded data is checked by the test suite, so a parse failure
/// here is a build defect.
pub fn catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(|| Catalog::load().unwrap_or_else(|e| panic!("embedded catalog data is invalid: {e}")))
}

fn find_table(id: &str) -> Result<&'static TableInfo, CatalogError> {
    let key = id.trim().to_ascii_lowercase();
    catalog()
        .tables
        .iter()
        .find(|t| t.file == key || t.table.to_ascii_lowercase() == key)
        .ok_or_else(|| CatalogError::UnknownTable(id.to_string()))
}

/// One resource table as JSON records keyed by column name.
pub fn dump_json(id: &str) -> Result<serde_json::Value, CatalogError> {
    let t = find_table(id)?;
    Ok(table_json(t))
}

fn table_json(t: &TableInfo) -> serde_json::Value {
    let mut rdr = reader(t.text);
    let headers = rdr.headers().cloned().unwrap_or_default();
    let records: Vec<serde_json::Value> = rdr
        .records()
        .filter_map(Result::ok)
        .map(|rec| {
            let obj: serde_json::Map<String, serde_json::Value> = headers
                .iter()
                .zip(rec.iter())
                .map(|(h, v)| (h.to_string(), serde_json::Value::String(v.to_string())))
                .collect();
            serde_json::Value::Object(obj)
        })
        .collect();
    serde_json::json!({
        "file": t.file,
        "table": t.table,
        "version": t.version,
        "records": records,
    })
}

/// Every resource table as JSON.
pub fn dump_all_json() -> serde_json::Value {
    serde_json::Value::Array(catalog().tables.iter().map(table_json).collect())
}

/// One resource table as CSV.
pub fn dump_csv(id: &str) -> Result<String, CatalogError> {
    let t = find_table(id)?;
    let mut rdr = reader(t.text);
    let mut w = csv::Writer::from_writer(Vec::new());
    let headers = rdr.headers().cloned().map_err(|e| CatalogError::Data(e.to_string()))?;
    w.write_record(&headers).map_err(|e| CatalogError::Data(e.to_string()))?;
    for rec in rdr.records() {
        let rec = rec.map_err(|e| CatalogError::Data(e.to_string()))?;
        w.write_record(&rec).map_err(|e| CatalogError::Data(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| CatalogError::Data(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CatalogError::Data(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_tables_load() {
        let c = Catalog::load().unwrap();
        assert_eq!(c.tables.len(), FILES.len());
        assert_eq!(c.groups.iter().filter(|g| g.kind == GroupKind::Sporadic).count(), 26);
        assert_eq!(c.groups.len(), 26 + 22);
        assert_eq!(c.alpha.len(), 62);
        assert_eq!(c.primitive.len(), 11);
        assert_eq!(c.ta6.len(), 5);
        assert_eq!(c.extraspecial.len(), 12);
        assert_eq!(c.list("solvable").len(), 4);
    }

    #[test]
    fn table_headers() {
        let t = find_table("T4.4").unwrap();
        assert_eq!(t.file, "t4_4_lie_families");
        assert_eq!(t.version, 1);
        assert!(find_table("T99").is_err());
    }

    #[test]
    fn dumps() {
        let j = dump_json("T12.2").unwrap();
        assert_eq!(j["records"].as_array().unwrap().len(), 11);
        assert_eq!(j["records"][0]["t_r"], "60");
        let csv = dump_csv("t12_2_primitive").unwrap();
        assert!(csv.starts_with("r,t_r,m_r,exact,source\n2,60,30,60,Alt5\n"));
        assert_eq!(dump_all_json().as_array().unwrap().len(), FILES.len());
    }
}
