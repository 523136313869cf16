use alloc::{collections::BTreeMap, string::String, vec::Vec};

use super::RunRecord;
use crate::error::{Error, Result};

/// Aggregate over the runs of one optimizer on one instance.
#[derive(Debug, Clone, PartialEq)]
pub struct ResultRow {
    pub instance_id: u32,
    pub optimizer: String,
    pub runs: usize,
    pub mean_error: f64,
    pub median_error: f64,
    /// Sample standard deviation (divisor `n − 1`); 0 for a single run.
    pub std_error: f64,
    pub solve_rate: f64,
    /// Mean `evals_used` over solved runs; `None` when no run solved.
    pub mean_evals_to_solve: Option<f64>,
}

/// Rows sorted by `(instance_id, optimizer)`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ResultTable {
    pub rows: Vec<ResultRow>,
}

/// Groups records by `(instance_id, optimizer)` and summarizes each group.
pub fn aggregate(records: &[RunRecord]) -> Result<ResultTable> {
    if records.is_empty() {
        return Err(Error::Argument("cannot aggregate an empty set of run records".into()));
    }
    let mut groups: BTreeMap<(u32, &str), Vec<&RunRecord>> = BTreeMap::new();
    for r in records {
        groups.entry((r.instance_id, r.optimizer.as_str())).or_default().push(r);
    }
    let rows = groups
        .into_iter()
        .map(|((instance_id, optimizer), group)| summarize(instance_id, optimizer, &group))
        .collect();
    Ok(ResultTable { rows })
}

fn summarize(instance_id: u32, optimizer: &str, group: &[&RunRecord]) -> ResultRow {
    let n = group.len();
    let mut errors: Vec<f64> = group.iter().map(|r| r.final_error).collect();
    let mean = errors.iter().sum::<f64>() / n as f64;
    let std = if n > 1 {
        libm::sqrt(errors.iter().map(|e| (e - mean) * (e - mean)).sum::<f64>() / (n - 1) as f64)
    } else {
        0.0
    };
    errors.sort_by(f64::total_cmp);
    let median = if n % 2 == 1 {
        errors[n / 2]
    } else {
        0.5 * (errors[n / 2 - 1] + errors[n / 2])
    };
    let solved: Vec<usize> = group.iter().filter(|r| r.solved).map(|r| r.evals_used).collect();
    ResultRow {
        instance_id,
        optimizer: optimizer.into(),
        runs: n,
        mean_error: mean,
        median_error: median,
        std_error: std,
        solve_rate: solved.len() as f64 / n as f64,
        mean_evals_to_solve: (!solved.is_empty())
            .then(|| solved.iter().sum::<usize>() as f64 / solved.len() as f64),
    }
}
