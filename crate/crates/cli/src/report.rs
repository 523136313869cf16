//! Aggregated result tables from a directory of run records.

use std::fs;
use std::path::Path;

use gnbg_core::harness::{aggregate, ResultRow, ResultTable, RunRecord};

use crate::error::{CliError, Result};
use crate::run_file;

pub const CSV_COLUMNS: [&str; 8] = [
    "instance_id",
    "optimizer",
    "runs",
    "mean_error",
    "median_error",
    "std_error",
    "solve_rate",
    "mean_evals_to_solve",
];

/// Reads every `*.json` run record directly inside `dir`, in file-name order.
pub fn load_records(dir: &Path) -> Result<Vec<RunRecord>> {
    let mut paths = Vec::new();
    for entry in fs::read_dir(dir).map_err(|e| CliError::io(dir, e))? {
        let path = entry.map_err(|e| CliError::io(dir, e))?.path();
        if path.is_file() && path.extension().is_some_and(|x| x == "json") {
            paths.push(path);
        }
    }
    if paths.is_empty() {
        return Err(CliError::Argument(format!("no run records in {}", dir.display())));
    }
    paths.sort();
    paths.iter().map(|p| run_file::read(p)).collect()
}

pub fn table_for_dir(dir: &Path) -> Result<ResultTable> {
    Ok(aggregate(&load_records(dir)?)?)
}

fn fields(row: &ResultRow) -> [String; 8] {
    [
        row.instance_id.to_string(),
        row.optimizer.clone(),
        row.runs.to_string(),
        format!("{:e}", row.mean_error),
        format!("{:e}", row.median_error),
        format!("{:e}", row.std_error),
        row.solve_rate.to_string(),
        row.mean_evals_to_solve.map(|v| v.to_string()).unwrap_or_default(),
    ]
}

pub fn to_csv(table: &ResultTable) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_COLUMNS).expect("writing to memory");
    for row in &table.rows {
        w.write_record(fields(row)).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flushing to memory")).expect("fields are UTF-8")
}

/// Fixed-width text table with right-aligned columns.
pub fn to_table(table: &ResultTable) -> String {
    let body: Vec<[String; 8]> = table.rows.iter().map(fields).collect();
    let mut widths = CSV_COLUMNS.map(str::len);
    for row in &body {
        for (w, f) in widths.iter_mut().zip(row) {
            *w = (*w).max(f.len());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &[&str]| {
        let padded: Vec<String> =
            cells.iter().zip(widths).map(|(c, w)| format!("{c:>w$}")).collect();
        out.push_str(padded.join("  ").trim_end());
        out.push('\n');
    };
    line(&CSV_COLUMNS);
    for row in &body {
        line(&row.each_ref().map(String::as_str));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> ResultTable {
        ResultTable {
            rows: vec![
                ResultRow {
                    instance_id: 1,
                    optimizer: "es".into(),
                    runs: 2,
                    mean_error: 1.5e-9,
                    median_error: 1.5e-9,
                    std_error: 0.0,
                    solve_rate: 1.0,
                    mean_evals_to_solve: Some(1200.5),
                },
                ResultRow {
                    instance_id: 4,
                    optimizer: "random".into(),
                    runs: 2,
                    mean_error: 3.25e4,
                    median_error: 3.25e4,
                    std_error: 10.0,
                    solve_rate: 0.0,
                    mean_evals_to_solve: None,
                },
            ],
        }
    }

    #[test]
    fn csv_has_fixed_columns_and_blank_for_unsolved() {
        let csv = to_csv(&table());
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], CSV_COLUMNS.join(","));
        assert_eq!(lines[1], "1,es,2,1.5e-9,1.5e-9,0e0,1,1200.5");
        assert_eq!(lines[2], "4,random,2,3.25e4,3.25e4,1e1,0,");
    }

    #[test]
    fn plain_table_aligns_columns() {
        let text = to_table(&table());
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[0].starts_with("instance_id"));
        assert_eq!(lines[0].find("optimizer").unwrap() + 9, lines[1].find("es").unwrap() + 2);
    }

    #[test]
    fn empty_directory_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        let err = table_for_dir(dir.path()).unwrap_err().to_string();
        assert!(err.contains("no run records"), "{err}");
    }
}
