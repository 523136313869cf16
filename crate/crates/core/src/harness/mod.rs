//! Budgeted ask/tell driver for black-box optimizers.
//!
//! The harness owns the evaluation loop: it clamps every candidate into the
//! box, evaluates it, tracks the best-so-far error against the instance's known
//! optimum, and stops on budget exhaustion, on solve, or when the optimizer
//! returns an empty batch.

mod coordinate;
mod de;
mod es;
mod random;
mod stats;

use alloc::{boxed::Box, format, string::String, vec::Vec};

pub use coordinate::CoordinateSearch;
pub use de::DifferentialEvolution;
pub use es::OnePlusOneEs;
pub use random::RandomSearch;
pub use stats::{aggregate, ResultRow, ResultTable};

use crate::component::Instance;
use crate::error::{Error, Result};
use crate::rng::GnbgRng;

/// ChaCha stream used by optimizer runs, so a run seed equal to an instance
/// seed does not replay the draws that built the instance.
pub const RUN_STREAM: u64 = 1;

pub const DEFAULT_MAX_EVALS: usize = 500_000;
pub const DEFAULT_SOLVE_THRESHOLD: f64 = 1e-8;

/// Evaluation budget and success criterion of a run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Budget {
    max_evals: usize,
    solve_threshold: f64,
}

impl Budget {
    pub fn new(max_evals: usize, solve_threshold: f64) -> Result<Self> {
        if max_evals == 0 {
            return Err(Error::Argument("max_evals must be at least 1".into()));
        }
        if !(solve_threshold > 0.0 && solve_threshold.is_finite()) {
            return Err(Error::Argument(format!(
                "solve threshold must be positive, got {solve_threshold}"
            )));
        }
        Ok(Self { max_evals, solve_threshold })
    }

    pub fn max_evals(&self) -> usize {
        self.max_evals
    }

    pub fn solve_threshold(&self) -> f64 {
        self.solve_threshold
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self { max_evals: DEFAULT_MAX_EVALS, solve_threshold: DEFAULT_SOLVE_THRESHOLD }
    }
}

/// What an optimizer may see when proposing candidates.
#[derive(Debug, Clone, Copy)]
pub struct History<'a> {
    pub lower: &'a [f64],
    pub upper: &'a [f64],
    pub evals_used: usize,
    /// Evaluations left; batches longer than this are truncated and the run ends.
    pub remaining: usize,
    pub best_value: f64,
    pub best_point: Option<&'a [f64]>,
}

impl History<'_> {
    pub fn dim(&self) -> usize {
        self.lower.len()
    }
}

/// A black-box optimizer driven by [`run`].
pub trait Optimizer {
    fn name(&self) -> &str;

    /// Proposes a batch of candidates. An empty batch ends the run.
    fn ask(&mut self, rng: &mut GnbgRng, history: &History<'_>) -> Vec<Vec<f64>>;

    /// Receives the evaluated candidates, after clamping, with their values.
    ///
    /// `points` may be a prefix of the last batch when the run stopped early.
    fn tell(&mut self, points: &[Vec<f64>], values: &[f64]);
}

/// Names accepted by [`optimizer_by_name`].
pub const OPTIMIZER_NAMES: [&str; 4] = ["random", "es", "de", "coord"];

/// Fresh optimizer state for a registered name.
pub fn optimizer_by_name(name: &str) -> Option<Box<dyn Optimizer + Send>> {
    Some(match name {
        "random" => Box::new(RandomSearch),
        "es" => Box::new(OnePlusOneEs::default()),
        "de" => Box::new(DifferentialEvolution::default()),
        "coord" => Box::new(CoordinateSearch::default()),
        _ => return None,
    })
}

/// Why a run stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    Solved,
    BudgetExhausted,
    /// The optimizer asked for more evaluations than were left; the batch was cut.
    BudgetExceeded,
    /// The optimizer returned an empty batch.
    OptimizerStopped,
}

impl Termination {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Solved => "solved",
            Self::BudgetExhausted => "budget-exhausted",
            Self::BudgetExceeded => "budget-exceeded",
            Self::OptimizerStopped => "optimizer-stopped",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [Self::Solved, Self::BudgetExhausted, Self::BudgetExceeded, Self::OptimizerStopped]
            .into_iter()
            .find(|t| t.as_str() == s)
    }
}

/// Outcome of one optimizer run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub instance_id: u32,
    pub optimizer: String,
    pub run_seed: u64,
    pub max_evals: usize,
    pub solve_threshold: f64,
    pub evals_used: usize,
    pub sigma_min: f64,
    pub best_value: f64,
    /// `best_value − sigma_min`.
    pub final_error: f64,
    pub solved: bool,
    pub termination: Termination,
    /// `(evaluation count, best-so-far error)` at each checkpoint.
    pub trajectory: Vec<(usize, f64)>,
}

/// True for the 1-2-5 checkpoint series 1, 2, 5, 10, 20, 50, ...
pub fn is_checkpoint(evals: usize) -> bool {
    if evals == 0 {
        return false;
    }
    let mut n = evals;
    while n.is_multiple_of(10) {
        n /= 10;
    }
    matches!(n, 1 | 2 | 5)
}

/// Runs `optimizer` on `inst` until the budget is spent or the run is solved.
///
/// Candidates of the wrong length or with non-finite coordinates abort the run
/// with an error; nothing of that batch is evaluated.
pub fn run(
    optimizer: &mut dyn Optimizer,
    inst: &Instance,
    budget: Budget,
    run_seed: u64,
) -> Result<RunRecord> {
    let mut rng = GnbgRng::with_stream(run_seed, RUN_STREAM);
    let sigma_min = inst.sigma_min();
    let mut evals = 0usize;
    let mut best_value = f64::INFINITY;
    let mut best_point: Option<Vec<f64>> = None;
    let mut trajectory = Vec::new();
    let mut solved = false;

    let termination = loop {
        if evals >= budget.max_evals {
            break Termination::BudgetExhausted;
        }
        let history = History {
            lower: &inst.lower,
            upper: &inst.upper,
            evals_used: evals,
            remaining: budget.max_evals - evals,
            best_value,
            best_point: best_point.as_deref(),
        };
        let mut batch = optimizer.ask(&mut rng, &history);
        if batch.is_empty() {
            break Termination::OptimizerStopped;
        }
        for (candidate, point) in batch.iter().enumerate() {
            if point.len() != inst.dim {
                return Err(Error::Shape(format!(
                    "candidate {candidate} has {} coordinates, instance expects {}",
                    point.len(),
                    inst.dim
                )));
            }
            if let Some(index) = point.iter().position(|v| !v.is_finite()) {
                return Err(Error::NonFiniteCandidate { candidate, index });
            }
        }
        let overflow = batch.len() > budget.max_evals - evals;
        batch.truncate(budget.max_evals - evals);

        let mut values = Vec::with_capacity(batch.len());
        for point in batch.iter_mut() {
            inst.clamp(point);
            let (value, _) = inst.evaluate_unchecked(point);
            evals += 1;
            values.push(value);
            if value < best_value {
                best_value = value;
                best_point = Some(point.clone());
            }
            let error = best_value - sigma_min;
            if is_checkpoint(evals) {
                trajectory.push((evals, error));
            }
            if error < budget.solve_threshold {
                solved = true;
                break;
            }
        }
        batch.truncate(values.len());
        optimizer.tell(&batch, &values);

        if solved {
            break Termination::Solved;
        }
        if overflow {
            break Termination::BudgetExceeded;
        }
    };

    let final_error = best_value - sigma_min;
    if evals > 0 && trajectory.last().map(|&(e, _)| e) != Some(evals) {
        trajectory.push((evals, final_error));
    }
    Ok(RunRecord {
        instance_id: inst.instance_id,
        optimizer: optimizer.name().into(),
        run_seed,
        max_evals: budget.max_evals,
        solve_threshold: budget.solve_threshold,
        evals_used: evals,
        sigma_min,
        best_value,
        final_error,
        solved,
        termination,
        trajectory,
    })
}

/// Uniform point in the box, one coordinate draw per dimension in order.
pub(crate) fn uniform_point(rng: &mut GnbgRng, history: &History<'_>) -> Vec<f64> {
    history
        .lower
        .iter()
        .zip(history.upper)
        .map(|(&l, &u)| rng.closed_uniform(l, u))
        .collect()
}
