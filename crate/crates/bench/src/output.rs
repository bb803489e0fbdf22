//! CSV emission and plain-text tables.
//!
//! Reals are written in scientific notation with 6 significant digits, so
//! output is byte-identical across reruns on one platform.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use rth_quasi::AbsErrorRow;

use crate::error::{BenchError, Result};
use crate::experiments::{ErrorRecord, PointwiseRow, RateRow};

/// A row type with a fixed CSV schema.
pub trait CsvRecord {
    const HEADER: &'static [&'static str];
    /// Comment line written before the header, if any.
    const PREAMBLE: Option<&'static str> = None;
    fn fields(&self) -> Vec<String>;
}

/// Six significant digits, scientific notation.
pub fn sci(v: f64) -> String {
    format!("{v:.5e}")
}

fn sci_opt(v: Option<f64>) -> String {
    v.map(sci).unwrap_or_default()
}

impl CsvRecord for ErrorRecord {
    const HEADER: &'static [&'static str] = &["kernel", "fn", "h", "c", "m", "linf_error"];

    fn fields(&self) -> Vec<String> {
        vec![
            self.kernel.to_string(),
            self.function.to_string(),
            sci(self.h),
            sci(self.c),
            self.m.to_string(),
            sci(self.linf_error),
        ]
    }
}

impl CsvRecord for RateRow {
    const HEADER: &'static [&'static str] = &["h", "linf_error", "r_h"];

    fn fields(&self) -> Vec<String> {
        vec![sci(self.h), sci(self.linf_error), sci_opt(self.r_h)]
    }
}

impl CsvRecord for PointwiseRow {
    const HEADER: &'static [&'static str] = &["x", "f", "Lf", "abs_err", "rel_err"];
    const PREAMBLE: Option<&'static str> =
        Some("# rel_err = |Lf - f| / max|f|, max over the evaluation points");

    fn fields(&self) -> Vec<String> {
        vec![
            sci(self.x),
            sci(self.f),
            sci(self.lf),
            sci(self.abs_err),
            sci(self.rel_err),
        ]
    }
}

impl CsvRecord for AbsErrorRow {
    const HEADER: &'static [&'static str] = &["n", "kernel", "c", "linf_error", "r_c"];

    fn fields(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.family.to_string(),
            sci(self.c),
            sci(self.linf_error),
            sci_opt(self.rate_rc),
        ]
    }
}

/// Writes header and rows to any writer.
pub fn write_csv<R: CsvRecord, W: Write>(
    records: &[R],
    out: W,
) -> std::result::Result<(), csv::Error> {
    let mut out = out;
    if let Some(line) = R::PREAMBLE {
        writeln!(out, "{line}")?;
    }
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(R::HEADER)?;
    for r in records {
        w.write_record(r.fields())?;
    }
    w.flush()?;
    Ok(())
}

/// Writes `records` to `path` as UTF-8 CSV with a header line.
pub fn emit_csv<R: CsvRecord>(records: &[R], path: &Path) -> Result<()> {
    if records.is_empty() {
        return Err(BenchError::Config(format!(
            "nothing to write to {}",
            path.display()
        )));
    }
    let file = File::create(path).map_err(|source| BenchError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut buf = BufWriter::new(file);
    write_csv(records, &mut buf).map_err(|source| BenchError::Csv {
        path: path.to_path_buf(),
        source,
    })?;
    buf.flush().map_err(|source| BenchError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Right-aligned plain-text table with the CSV header as column titles.
pub fn write_table<R: CsvRecord, W: Write>(records: &[R], mut out: W) -> io::Result<()> {
    let rows: Vec<Vec<String>> = records.iter().map(|r| r.fields()).collect();
    let widths: Vec<usize> = R::HEADER
        .iter()
        .enumerate()
        .map(|(i, h)| {
            rows.iter()
                .map(|r| r[i].len())
                .chain([h.len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    writeln!(out, "{}", line(R::HEADER.to_vec()))?;
    for r in &rows {
        writeln!(out, "{}", line(r.iter().map(String::as_str).collect()))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_significant_digits() {
        assert_eq!(sci(7.2e-7), "7.20000e-7");
        assert_eq!(sci(1.0), "1.00000e0");
        assert_eq!(sci(-0.0123456789), "-1.23457e-2");
    }

    #[test]
    fn empty_rate_cell() {
        let rows = [
            RateRow {
                h: 0.2,
                linf_error: 1e-3,
                r_h: None,
                reliable: true,
            },
            RateRow {
                h: 0.1,
                linf_error: 2.5e-4,
                r_h: Some(2.0),
                reliable: true,
            },
        ];
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "h,linf_error,r_h\n2.00000e-1,1.00000e-3,\n1.00000e-1,2.50000e-4,2.00000e0\n"
        );
    }

    #[test]
    fn table_has_header_and_rows() {
        let rows = [RateRow {
            h: 0.2,
            linf_error: 1e-3,
            r_h: None,
            reliable: true,
        }];
        let mut buf = Vec::new();
        write_table(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 2);
        assert!(text.lines().next().unwrap().contains("linf_error"));
    }
}
