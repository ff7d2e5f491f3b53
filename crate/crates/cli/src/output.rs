//! Report rendering: CSV with 17 significant digits, JSON with
//! shortest round-trip floats and a fixed key order.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use clap::ValueEnum;
use ptdarboux::verify::{CheckResult, VerificationReport};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

pub const REPORT_HEADER: [&str; 7] = [
    "name",
    "computed",
    "reference",
    "abs_dev",
    "rel_dev",
    "tolerance",
    "passed",
];

/// `d.dddddddddddddddde±x`, i.e. 17 significant digits.
pub fn sci17(value: f64) -> String {
    if value == 0.0 {
        // Collapse −0 so boundary rows read as plain zeros.
        format!("{:.16e}", 0.0)
    } else if value.is_finite() {
        format!("{value:.16e}")
    } else {
        value.to_string()
    }
}

fn csv_string(header: &[&str], rows: impl Iterator<Item = Vec<String>>) -> csv::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn check_row(c: &CheckResult) -> Vec<String> {
    vec![
        c.name.clone(),
        sci17(c.computed),
        sci17(c.reference),
        sci17(c.abs_dev),
        sci17(c.rel_dev),
        sci17(c.tolerance),
        c.passed.to_string(),
    ]
}

pub fn render_report(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Csv => csv_string(&REPORT_HEADER, report.checks.iter().map(check_row))
            .expect("writing CSV to memory"),
        Format::Json => to_json(report),
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

/// One sample of `tabulate`.
#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub x: f64,
    pub chi: f64,
    pub psi: f64,
    pub difference: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Table {
    pub alpha: f64,
    pub n: u32,
    pub k: u32,
    pub rows: Vec<TableRow>,
}

pub fn render_table(table: &Table, format: Format) -> String {
    match format {
        Format::Csv => csv_string(
            &["x", "chi", "psi", "difference"],
            table
                .rows
                .iter()
                .map(|r| vec![sci17(r.x), sci17(r.chi), sci17(r.psi), sci17(r.difference)]),
        )
        .expect("writing CSV to memory"),
        Format::Json => to_json(table),
    }
}

/// Writes to `path`, or stdout when absent.
pub fn emit(text: &str, path: Option<&Path>) -> io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ptdarboux::verify::Parameters;

    #[test]
    fn seventeen_digits() {
        assert_eq!(sci17(0.1), "1.0000000000000001e-1");
        assert_eq!(sci17(-16.0), "-1.6000000000000000e1");
        assert_eq!(sci17(f64::NAN), "NaN");
        assert_eq!(sci17(0.1).parse::<f64>().unwrap(), 0.1);
    }

    #[test]
    fn csv_header_and_quoting() {
        let report = VerificationReport::new(
            Parameters { alpha: 1.0, n_max: 0, k_max: 2, quad_order: 4, panels: 1, grid_points: 100 },
            vec![CheckResult::new("gram[2][3]", 1e-17, 0.0, 1e-10)],
        );
        let csv = render_report(&report, Format::Csv);
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "name,computed,reference,abs_dev,rel_dev,tolerance,passed");
        assert!(lines.next().unwrap().starts_with("gram[2][3],1.0000000000000001e-17,"));
    }
}
