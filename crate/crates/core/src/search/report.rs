//! JSON Lines and CSV report writers and readers.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use super::{ScanRecord, SearchError};
use crate::qpoly::QPolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Jsonl,
    Csv,
}

pub fn write_jsonl<W: Write>(mut out: W, records: &[ScanRecord]) -> Result<(), SearchError> {
    for r in records {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_jsonl<R: BufRead>(input: R) -> Result<Vec<ScanRecord>, SearchError> {
    let mut records = Vec::new();
    for line in input.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        records.push(serde_json::from_str(&line)?);
    }
    Ok(records)
}

#[derive(Serialize, Deserialize)]
struct CsvRow {
    descriptor: String,
    low: usize,
    coeffs: String,
    unimodal: bool,
    strictly_unimodal: bool,
    symmetric: bool,
    zero: bool,
}

impl From<&ScanRecord> for CsvRow {
    fn from(r: &ScanRecord) -> Self {
        let low = r.polynomial.low_degree().unwrap_or(0);
        let coeffs = r
            .polynomial
            .support_window()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(";");
        Self {
            descriptor: r.input_descriptor.clone(),
            low,
            coeffs,
            unimodal: r.unimodal,
            strictly_unimodal: r.strictly_unimodal,
            symmetric: r.symmetric,
            zero: r.zero,
        }
    }
}

pub fn write_csv<W: Write>(out: W, records: &[ScanRecord]) -> Result<(), SearchError> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(CsvRow::from(r))?;
    }
    w.flush()?;
    Ok(())
}

/// Reads a CSV report back. The factored form is recomputed from the
/// polynomial, and the stored verdict columns are kept as written so that
/// [`ScanRecord::is_consistent`] can audit them.
pub fn read_csv<R: std::io::Read>(input: R) -> Result<Vec<ScanRecord>, SearchError> {
    let mut rdr = csv::Reader::from_reader(input);
    let mut records = Vec::new();
    for row in rdr.deserialize() {
        let row: CsvRow = row?;
        let window = if row.coeffs.is_empty() {
            QPolynomial::zero()
        } else {
            QPolynomial::parse_coeff_list(&row.coeffs.replace(';', ","))
                .map_err(|e| SearchError::Report(format!("{}: {e}", row.descriptor)))?
        };
        let mut record = ScanRecord::new(row.descriptor, window.shift(row.low));
        record.unimodal = row.unimodal;
        record.strictly_unimodal = row.strictly_unimodal;
        record.symmetric = row.symmetric;
        record.zero = row.zero;
        records.push(record);
    }
    Ok(records)
}

pub fn write_report<W: Write>(
    out: W,
    records: &[ScanRecord],
    format: ReportFormat,
) -> Result<(), SearchError> {
    match format {
        ReportFormat::Jsonl => write_jsonl(out, records),
        ReportFormat::Csv => write_csv(out, records),
    }
}
