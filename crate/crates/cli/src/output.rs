//! Tables and CSV files.
//!
//! Number formats, fixed so reruns are byte-identical:
//!
//! * every real in a CSV/TSV file is written `{:.16e}` (17 significant
//!   digits, scientific), which reads back to the same `f64`;
//! * comparison-table cells round mean and std to integers and the success rate to
//!   a whole percent.
//!
//! Rounding is half-to-even on the exact binary value. Files are UTF-8 with
//! LF line endings and a header row.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use firefly_core::{Algorithm, RunRecord, SummaryRow};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Tsv,
    Pretty,
}

impl Format {
    /// Delimiter for files written in this format; pretty output still writes CSV files.
    pub fn delimiter(self) -> u8 {
        match self {
            Format::Tsv => b'\t',
            _ => b',',
        }
    }

    pub fn extension(self) -> &'static str {
        match self {
            Format::Tsv => "tsv",
            _ => "csv",
        }
    }
}

pub fn exact(x: f64) -> String {
    format!("{x:.16e}")
}

/// `"M ± S (P%)"`, or `"— (P%)"` when no run succeeded.
pub fn table_cell(row: &SummaryRow) -> String {
    let pct = format!("{:.0}%", row.success_rate * 100.0);
    match (row.mean_evaluations, row.std_evaluations) {
        (Some(m), Some(s)) => format!("{m:.0} ± {s:.0} ({pct})"),
        _ => format!("— ({pct})"),
    }
}

fn label(row: &SummaryRow) -> String {
    format!("{} (d={})", row.objective, row.dim)
}

/// Comparison-table layout: one line per function, one column per algorithm.
pub fn emit_table(rows: &[SummaryRow], format: Format) -> String {
    let mut algorithms: Vec<Algorithm> = Vec::new();
    let mut functions: Vec<String> = Vec::new();
    let mut cells: BTreeMap<(String, Algorithm), String> = BTreeMap::new();
    for row in rows {
        if !algorithms.contains(&row.algorithm) {
            algorithms.push(row.algorithm);
        }
        let name = label(row);
        if !functions.contains(&name) {
            functions.push(name.clone());
        }
        cells.insert((name, row.algorithm), table_cell(row));
    }

    let mut grid = vec![std::iter::once("Functions/Algorithms".to_string())
        .chain(algorithms.iter().map(|a| a.to_string()))
        .collect::<Vec<_>>()];
    for f in &functions {
        let mut line = vec![f.clone()];
        line.extend(algorithms.iter().map(|a| cells.get(&(f.clone(), *a)).cloned().unwrap_or_default()));
        grid.push(line);
    }

    match format {
        Format::Pretty => {
            let width = |c: usize| grid.iter().map(|l| l[c].chars().count()).max().unwrap_or(0);
            let widths: Vec<usize> = (0..grid[0].len()).map(width).collect();
            let mut out = String::new();
            for (i, line) in grid.iter().enumerate() {
                let padded: Vec<String> = line
                    .iter()
                    .zip(&widths)
                    .map(|(cell, w)| format!("{cell}{}", " ".repeat(w - cell.chars().count())))
                    .collect();
                out.push_str(padded.join("  ").trim_end());
                out.push('\n');
                if i == 0 {
                    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
                    out.push_str(&rule.join("  "));
                    out.push('\n');
                }
            }
            out
        }
        _ => write_records(format.delimiter(), &grid),
    }
}

fn write_records(delimiter: u8, records: &[Vec<String>]) -> String {
    let mut w =
        csv::WriterBuilder::new().delimiter(delimiter).terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    for r in records {
        w.write_record(r).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("fields are UTF-8")
}

fn read_records(text: &str, delimiter: u8, header: &[&str]) -> Result<Vec<csv::StringRecord>, CliError> {
    let mut r = csv::ReaderBuilder::new().delimiter(delimiter).flexible(true).from_reader(text.as_bytes());
    let got = r.headers().map_err(csv_error)?.clone();
    let expected_prefix = got.iter().take(header.len()).collect::<Vec<_>>();
    if expected_prefix != header {
        return Err(CliError::Parse(format!(
            "unexpected header `{}`; expected `{}`",
            got.iter().collect::<Vec<_>>().join(","),
            header.join(",")
        )));
    }
    r.records().map(|rec| rec.map_err(csv_error)).collect()
}

fn csv_error(e: csv::Error) -> CliError {
    CliError::Parse(e.to_string())
}

fn field<T: FromStr>(rec: &csv::StringRecord, i: usize, name: &str) -> Result<T, CliError> {
    let raw = rec.get(i).ok_or_else(|| CliError::Parse(format!("missing column `{name}`")))?;
    raw.parse().map_err(|_| CliError::Parse(format!("bad {name} `{raw}`")))
}

fn optional_real(rec: &csv::StringRecord, i: usize, name: &str) -> Result<Option<f64>, CliError> {
    match rec.get(i) {
        Some("") => Ok(None),
        _ => field(rec, i, name).map(Some),
    }
}

pub const SUMMARY_HEADER: [&str; 8] =
    ["algorithm", "objective", "dim", "runs", "successes", "success_rate", "mean_evaluations", "std_evaluations"];

/// Summary rows; mean and std are empty when no run succeeded.
pub fn write_summary(rows: &[SummaryRow], delimiter: u8) -> String {
    let mut records = vec![SUMMARY_HEADER.iter().map(|s| s.to_string()).collect::<Vec<_>>()];
    for r in rows {
        records.push(vec![
            r.algorithm.to_string(),
            r.objective.clone(),
            r.dim.to_string(),
            r.runs.to_string(),
            r.successes.to_string(),
            exact(r.success_rate),
            r.mean_evaluations.map(exact).unwrap_or_default(),
            r.std_evaluations.map(exact).unwrap_or_default(),
        ]);
    }
    write_records(delimiter, &records)
}

pub fn read_summary(text: &str, delimiter: u8) -> Result<Vec<SummaryRow>, CliError> {
    read_records(text, delimiter, &SUMMARY_HEADER)?
        .iter()
        .map(|rec| {
            Ok(SummaryRow {
                algorithm: field::<String>(rec, 0, "algorithm")?.parse().map_err(CliError::Core)?,
                objective: field(rec, 1, "objective")?,
                dim: field(rec, 2, "dim")?,
                runs: field(rec, 3, "runs")?,
                successes: field(rec, 4, "successes")?,
                success_rate: field(rec, 5, "success_rate")?,
                mean_evaluations: optional_real(rec, 6, "mean_evaluations")?,
                std_evaluations: optional_real(rec, 7, "std_evaluations")?,
            })
        })
        .collect()
}

/// One line of `runs.csv`: a [`RunRecord`] without its trace.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRow {
    pub algorithm: Algorithm,
    pub objective: String,
    pub seed: u64,
    pub evaluations_used: u64,
    pub generations: usize,
    pub best_value: f64,
    pub success: bool,
    pub best_point: Vec<f64>,
}

impl From<&RunRecord> for RunRow {
    fn from(r: &RunRecord) -> Self {
        Self {
            algorithm: r.algorithm,
            objective: r.objective_name.clone(),
            seed: r.seed,
            evaluations_used: r.evaluations_used,
            generations: r.generations(),
            best_value: r.best_value,
            success: r.success,
            best_point: r.best_point.clone(),
        }
    }
}

pub const RUNS_HEADER: [&str; 8] =
    ["algorithm", "objective", "seed", "evaluations_used", "generations", "best_value", "success", "best_point"];

/// Per-run rows; `best_point` is a space-separated coordinate list.
pub fn write_runs(rows: &[RunRow], delimiter: u8) -> String {
    let mut records = vec![RUNS_HEADER.iter().map(|s| s.to_string()).collect::<Vec<_>>()];
    for r in rows {
        records.push(vec![
            r.algorithm.to_string(),
            r.objective.clone(),
            r.seed.to_string(),
            r.evaluations_used.to_string(),
            r.generations.to_string(),
            exact(r.best_value),
            r.success.to_string(),
            r.best_point.iter().map(|x| exact(*x)).collect::<Vec<_>>().join(" "),
        ]);
    }
    write_records(delimiter, &records)
}

pub fn read_runs(text: &str, delimiter: u8) -> Result<Vec<RunRow>, CliError> {
    read_records(text, delimiter, &RUNS_HEADER)?
        .iter()
        .map(|rec| {
            let point: String = field(rec, 7, "best_point")?;
            Ok(RunRow {
                algorithm: field::<String>(rec, 0, "algorithm")?.parse().map_err(CliError::Core)?,
                objective: field(rec, 1, "objective")?,
                seed: field(rec, 2, "seed")?,
                evaluations_used: field(rec, 3, "evaluations_used")?,
                generations: field(rec, 4, "generations")?,
                best_value: field(rec, 5, "best_value")?,
                success: field(rec, 6, "success")?,
                best_point: point
                    .split_whitespace()
                    .map(|x| x.parse().map_err(|_| CliError::Parse(format!("bad coordinate `{x}`"))))
                    .collect::<Result<_, _>>()?,
            })
        })
        .collect()
}

/// One agent at one generation.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceRow {
    pub generation: usize,
    pub agent_id: usize,
    pub position: Vec<f64>,
    pub value: f64,
}

/// Columns `generation, agent_id, x1..xd, f`.
pub fn write_trace(rows: &[TraceRow], delimiter: u8) -> String {
    let dim = rows.first().map_or(0, |r| r.position.len());
    let mut header = vec!["generation".to_string(), "agent_id".to_string()];
    header.extend((1..=dim).map(|k| format!("x{k}")));
    header.push("f".into());
    let mut records = vec![header];
    for r in rows {
        let mut rec = vec![r.generation.to_string(), r.agent_id.to_string()];
        rec.extend(r.position.iter().map(|x| exact(*x)));
        rec.push(exact(r.value));
        records.push(rec);
    }
    write_records(delimiter, &records)
}

pub fn read_trace(text: &str, delimiter: u8) -> Result<Vec<TraceRow>, CliError> {
    read_records(text, delimiter, &["generation", "agent_id"])?
        .iter()
        .map(|rec| {
            let n = rec.len();
            if n < 4 {
                return Err(CliError::Parse(format!("trace row has {n} fields, need at least 4")));
            }
            Ok(TraceRow {
                generation: field(rec, 0, "generation")?,
                agent_id: field(rec, 1, "agent_id")?,
                position: (2..n - 1).map(|k| field(rec, k, "coordinate")).collect::<Result<_, _>>()?,
                value: field(rec, n - 1, "f")?,
            })
        })
        .collect()
}

/// `run` output: one `key value` line per field, or a one-row `runs` file.
pub fn emit_run(row: &RunRow, format: Format) -> String {
    match format {
        Format::Pretty => {
            let mut out = String::new();
            let point: Vec<String> = row.best_point.iter().map(|x| exact(*x)).collect();
            let fields = [
                ("algorithm", row.algorithm.to_string()),
                ("objective", row.objective.clone()),
                ("dim", row.best_point.len().to_string()),
                ("seed", row.seed.to_string()),
                ("evaluations", row.evaluations_used.to_string()),
                ("generations", row.generations.to_string()),
                ("best_value", exact(row.best_value)),
                ("success", row.success.to_string()),
                ("best_point", point.join(" ")),
            ];
            for (k, v) in fields {
                let _ = writeln!(out, "{k:<12} {v}");
            }
            out
        }
        _ => write_runs(std::slice::from_ref(row), format.delimiter()),
    }
}
