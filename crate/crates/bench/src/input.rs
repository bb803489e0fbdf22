//! Reading node and sample data from CSV files.
//!
//! Files may start with a header line; a first row whose leading cell is not
//! a number is taken to be one. Lines starting with `#` are ignored.

use std::fs::File;
use std::path::Path;

use crate::error::{BenchError, Result};

fn read_rows(path: &Path, columns: usize) -> Result<Vec<Vec<f64>>> {
    let file = File::open(path).map_err(|source| BenchError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(file);
    let bad = |message: String| BenchError::Input {
        path: path.to_path_buf(),
        message,
    };

    let mut rows = Vec::new();
    for (line, record) in reader.records().enumerate() {
        let record = record.map_err(|source| BenchError::Csv {
            path: path.to_path_buf(),
            source,
        })?;
        if line == 0 && record.get(0).is_some_and(|c| c.parse::<f64>().is_err()) {
            continue;
        }
        if record.len() < columns {
            return Err(bad(format!(
                "row {} has {} column(s), expected {columns}",
                line + 1,
                record.len()
            )));
        }
        let row = (0..columns)
            .map(|i| {
                record[i].parse::<f64>().map_err(|_| {
                    bad(format!(
                        "row {}: {:?} is not a number",
                        line + 1,
                        &record[i]
                    ))
                })
            })
            .collect::<Result<Vec<f64>>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(bad("no data rows".into()));
    }
    Ok(rows)
}

/// `(x, f)` pairs from the first two columns.
pub fn read_samples(path: &Path) -> Result<(Vec<f64>, Vec<f64>)> {
    Ok(read_rows(path, 2)?
        .into_iter()
        .map(|r| (r[0], r[1]))
        .unzip())
}

/// Node abscissas from the first column.
pub fn read_nodes(path: &Path) -> Result<Vec<f64>> {
    Ok(read_rows(path, 1)?.into_iter().map(|r| r[0]).collect())
}
