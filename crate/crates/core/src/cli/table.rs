//! CSV helpers: header row, comma separated, LF endings, floats with 17
//! significant digits so values survive a text round trip bit-for-bit.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};

pub(crate) fn format_float(v: f64) -> String {
    format!("{v:.16e}")
}

/// Rows of optional numbers; `None` becomes an empty cell.
pub(crate) struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub(crate) fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Self {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub(crate) fn push(&mut self, row: impl IntoIterator<Item = Option<f64>>) {
        let row: Vec<String> = row
            .into_iter()
            .map(|v| v.map(format_float).unwrap_or_default())
            .collect();
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub(crate) fn push_raw(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub(crate) fn write(&self, path: &Path) -> Result<()> {
        let file = BufWriter::new(File::create(path)?);
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(file);
        w.write_record(&self.header).map_err(csv_error)?;
        for row in &self.rows {
            w.write_record(row).map_err(csv_error)?;
        }
        let mut inner = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
        inner.flush()?;
        Ok(())
    }
}

fn csv_error(e: csv::Error) -> Error {
    let line = e.position().map(|p| p.line()).unwrap_or(0);
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Io(io),
        other => Error::Csv {
            line,
            message: format!("{other:?}"),
        },
    }
}

/// A parsed CSV: header names and numeric columns.
pub(crate) struct NumericCsv {
    pub header: Vec<String>,
    pub rows: Vec<Vec<f64>>,
    pub lines: Vec<u64>,
}

impl NumericCsv {
    pub(crate) fn parse(data: &[u8]) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(true)
            .trim(csv::Trim::All)
            .from_reader(data);
        let header: Vec<String> = reader
            .headers()
            .map_err(csv_error)?
            .iter()
            .map(str::to_owned)
            .collect();
        let mut rows = Vec::new();
        let mut lines = Vec::new();
        for record in reader.records() {
            let record = record.map_err(csv_error)?;
            let line = record.position().map(|p| p.line()).unwrap_or(0);
            let row = record
                .iter()
                .enumerate()
                .map(|(i, cell)| {
                    cell.parse::<f64>().map_err(|_| Error::Csv {
                        line,
                        message: format!(
                            "column {:?}: {cell:?} is not a number",
                            header.get(i).map(String::as_str).unwrap_or("?")
                        ),
                    })
                })
                .collect::<Result<Vec<f64>>>()?;
            rows.push(row);
            lines.push(line);
        }
        Ok(Self {
            header,
            rows,
            lines,
        })
    }

    pub(crate) fn column(&self, name: &str) -> Option<usize> {
        self.header.iter().position(|h| h == name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_format_round_trips() {
        for v in [0.1, 1.0 / 3.0, -2.5e-300, 12345.678901234567, 0.0] {
            let s = format_float(v);
            assert_eq!(s.parse::<f64>().unwrap().to_bits(), v.to_bits());
        }
        assert_eq!(format_float(0.5), "5.0000000000000000e-1");
    }

    #[test]
    fn parse_reports_line() {
        let err = NumericCsv::parse(b"t,g\n0,1\n0.5,x\n").err().unwrap();
        match err {
            Error::Csv { line, .. } => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        let ok = NumericCsv::parse(b"t, g\n0, 1\n1, 2\n").unwrap();
        assert_eq!(ok.column("g"), Some(1));
        assert_eq!(ok.rows, vec![vec![0.0, 1.0], vec![1.0, 2.0]]);
    }
}
