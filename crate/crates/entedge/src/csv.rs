//! CSV encodings of sweep, comparison and per-region threshold rows.
//!
//! Fields never contain commas, so no quoting is needed. Lines end in `\n`
//! and the last data row is the last line.

use std::fmt::{self, Write};

use entedge_core::sweep::SweepRow;
use entedge_core::threshold::ThresholdReport;

use crate::bench::{CompareRow, Variant};

pub const SWEEP_HEADER: &str = "init_t,final_t,iterations,converged,degenerate";
pub const COMPARE_HEADER: &str =
    "seed,variant,total_iterations,total_pixel_visits,wall_time_micros,thresholds";
pub const REPORT_HEADER: &str =
    "region,init_t,final_t,iterations,pixel_visits,converged,degenerate";

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(SWEEP_HEADER);
    for r in rows {
        write!(
            out,
            "\n{},{},{},{},{}",
            r.init_t, r.final_t, r.iterations, r.converged, r.degenerate
        )
        .unwrap();
    }
    out.push('\n');
    out
}

pub fn compare_csv(rows: &[CompareRow]) -> String {
    let mut out = String::from(COMPARE_HEADER);
    for r in rows {
        let thresholds: Vec<String> = r.final_thresholds.iter().map(u8::to_string).collect();
        write!(
            out,
            "\n{},{},{},{},{},{}",
            r.seed,
            r.variant,
            r.total_iterations,
            r.total_pixel_visits,
            r.wall_time_micros,
            thresholds.join(";")
        )
        .unwrap();
    }
    out.push('\n');
    out
}

/// Per-region reports of one pipeline run, row-major region index first.
pub fn report_csv(reports: &[ThresholdReport]) -> String {
    let mut out = String::from(REPORT_HEADER);
    for (i, r) in reports.iter().enumerate() {
        write!(
            out,
            "\n{i},{},{},{},{},{},{}",
            r.init_t, r.final_t, r.iterations, r.pixel_visits, r.converged, r.degenerate
        )
        .unwrap();
    }
    out.push('\n');
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsvError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for CsvError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for CsvError {}

fn records<'a>(
    text: &'a str,
    header: &str,
    arity: usize,
) -> Result<Vec<(usize, Vec<&'a str>)>, CsvError> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h == header => {}
        _ => {
            return Err(CsvError {
                line: 1,
                message: format!("expected header `{header}`"),
            })
        }
    }
    lines
        .map(|(i, line)| {
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != arity {
                return Err(CsvError {
                    line: i + 1,
                    message: format!("expected {arity} fields"),
                });
            }
            Ok((i + 1, fields))
        })
        .collect()
}

fn field<T: std::str::FromStr>(line: usize, s: &str) -> Result<T, CsvError> {
    s.parse().map_err(|_| CsvError {
        line,
        message: format!("bad field `{s}`"),
    })
}

pub fn parse_sweep_csv(text: &str) -> Result<Vec<SweepRow>, CsvError> {
    records(text, SWEEP_HEADER, 5)?
        .into_iter()
        .map(|(line, f)| {
            Ok(SweepRow {
                init_t: field(line, f[0])?,
                final_t: field(line, f[1])?,
                iterations: field(line, f[2])?,
                converged: field(line, f[3])?,
                degenerate: field(line, f[4])?,
            })
        })
        .collect()
}

pub fn parse_compare_csv(text: &str) -> Result<Vec<CompareRow>, CsvError> {
    records(text, COMPARE_HEADER, 6)?
        .into_iter()
        .map(|(line, f)| {
            let variant = match f[1] {
                "baseline" => Variant::Baseline,
                "proposed" => Variant::Proposed,
                other => {
                    return Err(CsvError {
                        line,
                        message: format!("unknown variant `{other}`"),
                    })
                }
            };
            let final_thresholds = if f[5].is_empty() {
                Vec::new()
            } else {
                f[5].split(';')
                    .map(|t| field(line, t))
                    .collect::<Result<_, _>>()?
            };
            Ok(CompareRow {
                seed: field(line, f[0])?,
                variant,
                total_iterations: field(line, f[2])?,
                total_pixel_visits: field(line, f[3])?,
                wall_time_micros: field(line, f[4])?,
                final_thresholds,
            })
        })
        .collect()
}
