//! Flat sample tables and their CSV and OBJ encodings.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use sc_core::natural::CurveSamples;

use crate::{usage, CliError};

/// Column names, in file order.
pub const HEADER: [&str; 15] = [
    "s", "x", "y", "z", "Tx", "Ty", "Tz", "N1x", "N1y", "N1z", "N2x", "N2y", "N2z", "kappa", "tau",
];

pub const S: usize = 0;
pub const KAPPA: usize = 13;
pub const TAU: usize = 14;

/// One row per grid node; `None` marks a quantity that is not available.
pub type Row = [Option<f64>; 15];

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Table {
    pub rows: Vec<Row>,
}

impl Table {
    pub fn from_samples(samples: &CurveSamples, kappa: &[f64], tau: &[f64]) -> Self {
        let rows = (0..samples.len())
            .map(|i| {
                let mut row: Row = [None; 15];
                row[S] = Some(samples.s_grid[i]);
                for (j, v) in samples.points[i].to_array().into_iter().enumerate() {
                    row[1 + j] = Some(v);
                }
                if let Some(frames) = &samples.frames {
                    for (a, axis) in frames[i].axes().into_iter().enumerate() {
                        for (j, v) in axis.to_array().into_iter().enumerate() {
                            row[4 + 3 * a + j] = Some(v);
                        }
                    }
                }
                row[KAPPA] = kappa.get(i).copied();
                row[TAU] = tau.get(i).copied();
                row
            })
            .collect();
        Table { rows }
    }

    pub fn column(&self, index: usize) -> Option<Vec<f64>> {
        self.rows.iter().map(|r| r[index]).collect()
    }
}

/// Full-precision decimal form; parses back to the same `f64`.
pub fn format_value(v: f64) -> String {
    format!("{v:.16e}")
}

fn io_error(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn csv_error(path: &Path) -> impl FnOnce(csv::Error) -> CliError + '_ {
    move |source| CliError::Csv {
        path: path.to_path_buf(),
        source,
    }
}

pub fn write_csv(path: &Path, table: &Table) -> Result<(), CliError> {
    let mut w = csv::Writer::from_path(path).map_err(csv_error(path))?;
    w.write_record(HEADER).map_err(csv_error(path))?;
    for row in &table.rows {
        w.write_record(row.iter().map(|v| v.map(format_value).unwrap_or_default()))
            .map_err(csv_error(path))?;
    }
    w.flush().map_err(io_error(path))
}

/// Reads a CSV whose header names a subset of [`HEADER`] in any order.
pub fn read_csv(path: &Path) -> Result<Table, CliError> {
    let mut r = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(csv_error(path))?;
    let header = r.headers().map_err(csv_error(path))?.clone();
    let mut index = Vec::with_capacity(header.len());
    for name in header.iter() {
        let j = HEADER
            .iter()
            .position(|h| *h == name)
            .ok_or_else(|| usage(format!("{}: unknown column '{name}'", path.display())))?;
        index.push(j);
    }
    if !index.contains(&S) {
        return Err(usage(format!("{}: missing column 's'", path.display())));
    }
    let mut rows = Vec::new();
    for (line, record) in r.records().enumerate() {
        let record = record.map_err(csv_error(path))?;
        let mut row: Row = [None; 15];
        for (field, &j) in record.iter().zip(&index) {
            if !field.is_empty() {
                let v = field.parse::<f64>().map_err(|_| {
                    usage(format!("{}: row {}: '{field}' is not a number", path.display(), line + 1))
                })?;
                row[j] = Some(v);
            }
        }
        rows.push(row);
    }
    Ok(Table { rows })
}

/// Polyline: one `v` record per row with a position and one `l` chain.
pub fn write_obj(path: &Path, table: &Table) -> Result<(), CliError> {
    let points: Vec<[f64; 3]> = table
        .rows
        .iter()
        .filter_map(|r| Some([r[1]?, r[2]?, r[3]?]))
        .collect();
    if points.len() < 2 {
        return Err(usage(format!("{}: fewer than two positions to export", path.display())));
    }
    let file = File::create(path).map_err(io_error(path))?;
    let mut w = BufWriter::new(file);
    let result = (|| -> std::io::Result<()> {
        writeln!(w, "# space curve, {} vertices", points.len())?;
        for p in &points {
            writeln!(w, "v {} {} {}", format_value(p[0]), format_value(p[1]), format_value(p[2]))?;
        }
        write!(w, "l")?;
        for i in 1..=points.len() {
            write!(w, " {i}")?;
        }
        writeln!(w)?;
        w.flush()
    })();
    result.map_err(io_error(path))
}

/// `base` with `.ext` appended (not substituted).
pub fn with_suffix(base: &Path, ext: &str) -> PathBuf {
    let mut s = base.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}
