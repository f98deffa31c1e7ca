//! Report rows and their CSV / JSON encodings.

use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::args::Format;
use crate::CliError;

pub const HEADER: [&str; 10] = [
    "scenario",
    "p",
    "t",
    "t_r",
    "eta_a",
    "eta_b",
    "v_sim",
    "v_formula",
    "abs_err",
    "success_prob",
];

/// One line of output. Settings that do not apply to a scenario are empty.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub scenario: String,
    pub p: Option<f64>,
    pub t: Option<f64>,
    pub t_r: Option<f64>,
    pub eta_a: Option<f64>,
    pub eta_b: Option<f64>,
    pub v_sim: f64,
    pub v_formula: f64,
    pub abs_err: f64,
    pub success_prob: Option<f64>,
}

impl Row {
    /// Row with every number rounded to nine significant digits.
    pub fn rounded(&self) -> Row {
        let r = |x: f64| round_sig(x);
        Row {
            scenario: self.scenario.clone(),
            p: self.p.map(r),
            t: self.t.map(r),
            t_r: self.t_r.map(r),
            eta_a: self.eta_a.map(r),
            eta_b: self.eta_b.map(r),
            v_sim: r(self.v_sim),
            v_formula: r(self.v_formula),
            abs_err: r(self.abs_err),
            success_prob: self.success_prob.map(r),
        }
    }
}

pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.8e}").parse().unwrap_or(x)
}

/// Nine significant digits, exponent form only for very small or large
/// magnitudes.
pub fn format_number(x: f64) -> String {
    let x = round_sig(x);
    if x != 0.0 && (x.abs() < 1e-4 || x.abs() >= 1e9) {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}

fn cell(x: Option<f64>) -> String {
    x.map(format_number).unwrap_or_default()
}

pub fn write_csv<W: Write>(rows: &[Row], out: W) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(HEADER)?;
    for row in rows {
        w.write_record([
            row.scenario.clone(),
            cell(row.p),
            cell(row.t),
            cell(row.t_r),
            cell(row.eta_a),
            cell(row.eta_b),
            format_number(row.v_sim),
            format_number(row.v_formula),
            format_number(row.abs_err),
            cell(row.success_prob),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<W: Write>(rows: &[Row], mut out: W) -> std::io::Result<()> {
    let rounded: Vec<Row> = rows.iter().map(Row::rounded).collect();
    serde_json::to_writer_pretty(&mut out, &rounded)?;
    writeln!(out)
}

pub fn read_csv<R: std::io::Read>(input: R) -> Result<Vec<Row>, csv::Error> {
    csv::Reader::from_reader(input).deserialize().collect()
}

pub fn read_json<R: std::io::Read>(input: R) -> serde_json::Result<Vec<Row>> {
    serde_json::from_reader(input)
}

/// Writes `rows` to `path`, or stdout when `path` is `None`.
pub fn emit_report(rows: &[Row], format: Format, path: Option<&Path>) -> Result<(), CliError> {
    if rows.is_empty() {
        return Err(CliError::invalid("refusing to write an empty report"));
    }
    let target = path.map_or_else(|| "stdout".to_string(), |p| p.display().to_string());
    let sink: Box<dyn Write> = match path {
        Some(p) => Box::new(std::io::BufWriter::new(
            std::fs::File::create(p).map_err(|e| CliError::io(format!("creating {target}"), e))?,
        )),
        None => Box::new(std::io::stdout().lock()),
    };
    let io_err = |e: std::io::Error| CliError::io(format!("writing {target}"), e);
    match format {
        Format::Csv => write_csv(rows, sink).map_err(|e| match e.into_kind() {
            csv::ErrorKind::Io(e) => io_err(e),
            other => CliError::invalid(format!("{other:?}")),
        }),
        Format::Json => write_json(rows, sink).map_err(io_err),
    }
}
