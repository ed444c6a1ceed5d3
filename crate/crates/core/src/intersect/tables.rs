//! Transcribed answer tables keyed by group pair and decomposition types.
//!
//! The data lives in `tables.txt` (same format accepted from an external file
//! by the CLI) and is parsed on demand; the test suite checks row counts and
//! block sums per table against the source.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::factor::DecompType;
use crate::forms::GaloisLabel;

/// Relation reported by a table row, from the first input's point of view.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowRelation {
    Equal,
    /// L_a properly contains L_a'.
    Contains,
    /// L_a is properly contained in L_a'.
    Contained,
    /// Proper nontrivial intersection (neither field contains the other).
    Proper,
    /// Intersection is Q.
    Trivial,
}

#[derive(Clone, Debug)]
pub struct TableRow {
    pub table: u8,
    pub row_id: String,
    pub group_a: GaloisLabel,
    pub group_b: GaloisLabel,
    pub joint_order: u32,
    pub joint_index: u32,
    pub dt_r: DecompType,
    pub dt_r1: Option<DecompType>,
    pub degree: u32,
    pub relation: RowRelation,
}

pub const TABLE_DATA: &str = include_str!("tables.txt");

fn parse_label(s: &str) -> Result<GaloisLabel> {
    Ok(match s {
        "S4" => GaloisLabel::S4,
        "A4" => GaloisLabel::A4,
        "D4" => GaloisLabel::D4,
        "C4" => GaloisLabel::C4,
        "V4" => GaloisLabel::V4,
        "S3" => GaloisLabel::S3,
        "C3" => GaloisLabel::C3,
        _ => return Err(Error::Parse(alloc::format!("bad group label `{s}`"))),
    })
}

fn parse_dt(s: &str) -> Result<DecompType> {
    let parts: core::result::Result<Vec<usize>, _> =
        s.split(',').map(|p| p.trim().parse::<usize>()).collect();
    Ok(DecompType::new(parts.map_err(|_| {
        Error::Parse(alloc::format!("bad decomposition type `{s}`"))
    })?))
}

/// Parse rows in the documented line format.
pub fn parse_rows(data: &str) -> Result<Vec<TableRow>> {
    let mut out = Vec::new();
    for line in data.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 10 {
            return Err(Error::Parse(alloc::format!(
                "expected 10 fields, got {}: `{line}`",
                fields.len()
            )));
        }
        let relation = match fields[9] {
            "equal" => RowRelation::Equal,
            "contains" => RowRelation::Contains,
            "contained" => RowRelation::Contained,
            "proper" => RowRelation::Proper,
            "trivial" => RowRelation::Trivial,
            other => return Err(Error::Parse(alloc::format!("bad relation `{other}`"))),
        };
        out.push(TableRow {
            table: fields[0]
                .parse()
                .map_err(|_| Error::Parse("bad table number".to_string()))?,
            row_id: fields[1].to_string(),
            group_a: parse_label(fields[2])?,
            group_b: parse_label(fields[3])?,
            joint_order: fields[4]
                .parse()
                .map_err(|_| Error::Parse("bad joint order".to_string()))?,
            joint_index: fields[5]
                .parse()
                .map_err(|_| Error::Parse("bad joint index".to_string()))?,
            dt_r: parse_dt(fields[6])?,
            dt_r1: if fields[7] == "-" {
                None
            } else {
                Some(parse_dt(fields[7])?)
            },
            degree: fields[8]
                .parse()
                .map_err(|_| Error::Parse("bad degree".to_string()))?,
            relation,
        });
    }
    Ok(out)
}

/// The built-in tables.
pub fn rows() -> Vec<TableRow> {
    parse_rows(TABLE_DATA).expect("embedded table data parses")
}
