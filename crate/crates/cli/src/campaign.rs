//! Benchmark campaigns: many (instance, optimizer, run) jobs written to a
//! directory of run records, resumable across invocations.

use std::fs;
use std::path::{Path, PathBuf};

use gnbg_core::harness::{optimizer_by_name, run, Budget, OPTIMIZER_NAMES};
use gnbg_core::{make_instance, Instance, SUITE_SIZE};
use rayon::prelude::*;

use crate::error::{CliError, Result};
use crate::run_file;

#[derive(Debug, Clone)]
pub struct Campaign {
    pub ids: Vec<u32>,
    pub optimizer: String,
    pub runs: usize,
    pub budget: Budget,
    /// Run `r` uses seed `base_seed + r`.
    pub base_seed: u64,
    /// Seed used to build every instance.
    pub instance_seed: u64,
    pub out_dir: PathBuf,
    pub jobs: usize,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub written: usize,
    pub skipped: usize,
}

pub fn record_name(id: u32, optimizer: &str, run: usize) -> String {
    format!("f{id:02}-{optimizer}-r{run:03}.json")
}

/// Parses `all`, a single id, a range `a-b`, or a comma-separated mix.
pub fn parse_ids(text: &str) -> Result<Vec<u32>> {
    let bad = |part: &str| CliError::Argument(format!("cannot parse id list entry {part:?}"));
    let mut ids = Vec::new();
    for part in text.split(',').map(str::trim) {
        if part == "all" {
            ids.extend(1..=SUITE_SIZE);
        } else if let Some((a, b)) = part.split_once('-') {
            let a: u32 = a.trim().parse().map_err(|_| bad(part))?;
            let b: u32 = b.trim().parse().map_err(|_| bad(part))?;
            if a > b {
                return Err(bad(part));
            }
            ids.extend(a..=b);
        } else {
            ids.push(part.parse().map_err(|_| bad(part))?);
        }
    }
    ids.sort_unstable();
    ids.dedup();
    for &id in &ids {
        if !(1..=SUITE_SIZE).contains(&id) {
            return Err(CliError::Argument(format!("id out of range: {id} (expected 1..={SUITE_SIZE})")));
        }
    }
    Ok(ids)
}

pub fn check_optimizer(name: &str) -> Result<()> {
    if optimizer_by_name(name).is_none() {
        return Err(CliError::Argument(format!(
            "unknown optimizer {name:?}; available: {}",
            OPTIMIZER_NAMES.join(", ")
        )));
    }
    Ok(())
}

/// A record counts as complete when it parses and was produced by the same job.
fn is_complete(path: &Path, c: &Campaign, id: u32, run_seed: u64) -> bool {
    match run_file::read(path) {
        Ok(r) => {
            r.instance_id == id
                && r.optimizer == c.optimizer
                && r.run_seed == run_seed
                && r.max_evals == c.budget.max_evals()
                && r.solve_threshold.to_bits() == c.budget.solve_threshold().to_bits()
        }
        Err(_) => false,
    }
}

fn execute(c: &Campaign, inst: &Instance, run_index: usize) -> Result<bool> {
    let path = c.out_dir.join(record_name(inst.instance_id, &c.optimizer, run_index));
    let run_seed = c.base_seed.wrapping_add(run_index as u64);
    if is_complete(&path, c, inst.instance_id, run_seed) {
        return Ok(false);
    }
    let mut optimizer = optimizer_by_name(&c.optimizer).expect("optimizer checked up front");
    let record = run(optimizer.as_mut(), inst, c.budget, run_seed)?;
    run_file::write(&record, &path)?;
    Ok(true)
}

pub fn execute_campaign(c: &Campaign) -> Result<Summary> {
    check_optimizer(&c.optimizer)?;
    fs::create_dir_all(&c.out_dir).map_err(|e| CliError::io(&c.out_dir, e))?;
    let instances: Vec<Instance> =
        c.ids.iter().map(|&id| make_instance(id, c.instance_seed)).collect::<gnbg_core::Result<_>>()?;
    let jobs: Vec<(&Instance, usize)> =
        instances.iter().flat_map(|inst| (0..c.runs).map(move |r| (inst, r))).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(c.jobs.max(1))
        .build()
        .map_err(|e| CliError::Argument(format!("cannot start worker pool: {e}")))?;
    let outcomes: Vec<Result<bool>> =
        pool.install(|| jobs.par_iter().map(|&(inst, r)| execute(c, inst, r)).collect());
    let mut summary = Summary::default();
    for outcome in outcomes {
        if outcome? {
            summary.written += 1;
        } else {
            summary.skipped += 1;
        }
    }
    Ok(summary)
}
