//! The `gnbg-run/1` text format, one run record per file.

use std::fs;
use std::path::Path;

use gnbg_core::harness::{RunRecord, Termination};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};
use crate::json;

pub const RUN_SCHEMA: &str = "gnbg-run/1";

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RunDoc {
    schema: String,
    instance_id: u32,
    optimizer: String,
    run_seed: u64,
    max_evals: usize,
    solve_threshold: f64,
    evals_used: usize,
    sigma_min: f64,
    /// `null` when no point was evaluated.
    best_value: Option<f64>,
    final_error: Option<f64>,
    solved: bool,
    termination: String,
    trajectory: Vec<(usize, f64)>,
}

fn finite(v: f64) -> Option<f64> {
    v.is_finite().then_some(v)
}

pub fn to_string(record: &RunRecord) -> String {
    json::to_string(&RunDoc {
        schema: RUN_SCHEMA.into(),
        instance_id: record.instance_id,
        optimizer: record.optimizer.clone(),
        run_seed: record.run_seed,
        max_evals: record.max_evals,
        solve_threshold: record.solve_threshold,
        evals_used: record.evals_used,
        sigma_min: record.sigma_min,
        best_value: finite(record.best_value),
        final_error: finite(record.final_error),
        solved: record.solved,
        termination: record.termination.as_str().into(),
        trajectory: record.trajectory.clone(),
    })
}

pub fn from_str(text: &str, origin: &Path) -> Result<RunRecord> {
    let doc: RunDoc = json::from_str(text).map_err(|m| CliError::parse(origin, m))?;
    if doc.schema != RUN_SCHEMA {
        return Err(CliError::parse(
            origin,
            format!("unsupported schema {:?}, expected {RUN_SCHEMA:?}", doc.schema),
        ));
    }
    let termination = Termination::parse(&doc.termination).ok_or_else(|| {
        CliError::parse(origin, format!("field `termination`: unknown value {:?}", doc.termination))
    })?;
    Ok(RunRecord {
        instance_id: doc.instance_id,
        optimizer: doc.optimizer,
        run_seed: doc.run_seed,
        max_evals: doc.max_evals,
        solve_threshold: doc.solve_threshold,
        evals_used: doc.evals_used,
        sigma_min: doc.sigma_min,
        best_value: doc.best_value.unwrap_or(f64::INFINITY),
        final_error: doc.final_error.unwrap_or(f64::INFINITY),
        solved: doc.solved,
        termination,
        trajectory: doc.trajectory,
    })
}

/// Writes through a temporary sibling and a rename, so an interrupted write
/// never leaves a truncated record under the final name.
pub fn write(record: &RunRecord, path: &Path) -> Result<()> {
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, to_string(record)).map_err(|e| CliError::io(&tmp, e))?;
    fs::rename(&tmp, path).map_err(|e| CliError::io(path, e))
}

pub fn read(path: &Path) -> Result<RunRecord> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    from_str(&text, path)
}
