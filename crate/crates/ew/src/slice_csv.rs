//! Slice grids as CSV, one row per node.

use std::io::{Read, Write};

use ew_core::simplex::{SliceGrid, SlicePoint};

pub const FIXED_COLUMNS: [&str; 7] = [
    "alpha",
    "beta",
    "is_state",
    "min_eig",
    "is_ppt",
    "min_ppt_eig",
    "in_enclosure",
];

#[derive(Debug, thiserror::Error)]
pub enum CsvError {
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("bad header: {0}")]
    Header(String),
    #[error("row {row}: {msg}")]
    Row { row: usize, msg: String },
}

/// Twelve significant digits.
pub fn fmt12(x: f64) -> String {
    format!("{x:.11e}")
}

fn flag(b: bool) -> &'static str {
    if b {
        "1"
    } else {
        "0"
    }
}

pub fn header(witness_names: &[String]) -> Vec<String> {
    FIXED_COLUMNS
        .iter()
        .map(|s| s.to_string())
        .chain(witness_names.iter().cloned())
        .collect()
}

pub fn write_slice_csv<W: Write>(grid: &SliceGrid, out: W) -> Result<(), CsvError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header(&grid.witness_names))?;
    for p in &grid.points {
        let mut row = vec![
            fmt12(p.alpha),
            fmt12(p.beta),
            flag(p.is_state).to_string(),
            fmt12(p.min_eig),
            flag(p.is_ppt).to_string(),
            fmt12(p.min_ppt_eig),
            flag(p.in_enclosure).to_string(),
        ];
        row.extend(p.witness_values.iter().map(|&v| fmt12(v)));
        w.write_record(&row)?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

#[derive(Clone, Debug)]
pub struct SliceTable {
    pub witness_names: Vec<String>,
    pub points: Vec<SlicePoint>,
}

pub fn read_slice_csv<R: Read>(input: R) -> Result<SliceTable, CsvError> {
    let mut r = csv::Reader::from_reader(input);
    let head: Vec<String> = r.headers()?.iter().map(str::to_string).collect();
    if head.len() < FIXED_COLUMNS.len() || head[..FIXED_COLUMNS.len()] != FIXED_COLUMNS {
        return Err(CsvError::Header(head.join(",")));
    }
    let witness_names = head[FIXED_COLUMNS.len()..].to_vec();
    let mut points = Vec::new();
    for (i, rec) in r.records().enumerate() {
        let rec = rec?;
        let bad = |msg: String| CsvError::Row { row: i + 1, msg };
        if rec.len() != head.len() {
            return Err(bad(format!("{} fields, expected {}", rec.len(), head.len())));
        }
        let num = |k: usize| rec[k].parse::<f64>().map_err(|e| bad(format!("{}: {e}", head[k])));
        let bit = |k: usize| match &rec[k] {
            "1" => Ok(true),
            "0" => Ok(false),
            other => Err(bad(format!("{}: `{other}` is not 0/1", head[k]))),
        };
        points.push(SlicePoint {
            alpha: num(0)?,
            beta: num(1)?,
            is_state: bit(2)?,
            min_eig: num(3)?,
            is_ppt: bit(4)?,
            min_ppt_eig: num(5)?,
            in_enclosure: bit(6)?,
            witness_values: (FIXED_COLUMNS.len()..head.len()).map(num).collect::<Result<_, _>>()?,
        });
    }
    Ok(SliceTable { witness_names, points })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_digits() {
        assert_eq!(fmt12(-0.4), "-4.00000000000e-1");
        assert_eq!(fmt12(1.0 / 3.0).parse::<f64>().unwrap(), 0.333333333333);
    }

    #[test]
    fn rejects_foreign_header() {
        let s = "a,b\n1,2\n";
        assert!(matches!(read_slice_csv(s.as_bytes()), Err(CsvError::Header(_))));
    }
}
