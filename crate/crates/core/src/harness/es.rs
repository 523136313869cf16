use alloc::{vec, vec::Vec};

use rand_distr::{Distribution, StandardNormal};

use super::{uniform_point, History, Optimizer};
use crate::rng::GnbgRng;

/// Step-size factor after an improving child.
pub const STEP_INCREASE: f64 = 1.5;
/// Step-size factor after a non-improving child: `STEP_INCREASE^(-1/4)`, which
/// leaves the step unchanged at a success rate of one in five.
pub const STEP_DECREASE: f64 = 0.903_602_003_609_844_9;

/// (1+1) evolution strategy with the one-fifth success rule.
///
/// The first ask samples the parent uniformly. Every later ask mutates the
/// parent by `step · (u − l) ⊙ N(0, I)`. A child at least as good as the
/// parent replaces it; strictly better children grow the step by
/// [`STEP_INCREASE`], all others shrink it by [`STEP_DECREASE`], so four
/// failures undo one success.
#[derive(Debug, Clone)]
pub struct OnePlusOneEs {
    pub step: f64,
    parent: Option<(Vec<f64>, f64)>,
}

impl OnePlusOneEs {
    /// `initial_step` is relative to the box width of each coordinate.
    pub fn new(initial_step: f64) -> Self {
        Self { step: initial_step, parent: None }
    }

    pub fn parent(&self) -> Option<(&[f64], f64)> {
        self.parent.as_ref().map(|(x, f)| (x.as_slice(), *f))
    }
}

impl Default for OnePlusOneEs {
    fn default() -> Self {
        Self::new(0.2)
    }
}

impl Optimizer for OnePlusOneEs {
    fn name(&self) -> &str {
        "es"
    }

    fn ask(&mut self, rng: &mut GnbgRng, history: &History<'_>) -> Vec<Vec<f64>> {
        let Some((parent, _)) = &self.parent else {
            return vec![uniform_point(rng, history)];
        };
        let child = parent
            .iter()
            .zip(history.lower.iter().zip(history.upper))
            .map(|(&x, (&l, &u))| {
                let z: f64 = StandardNormal.sample(rng);
                x + self.step * (u - l) * z
            })
            .collect();
        vec![child]
    }

    fn tell(&mut self, points: &[Vec<f64>], values: &[f64]) {
        let (Some(point), Some(&value)) = (points.first(), values.first()) else {
            return;
        };
        match &mut self.parent {
            None => self.parent = Some((point.clone(), value)),
            Some((parent, parent_value)) => {
                if value < *parent_value {
                    self.step *= STEP_INCREASE;
                } else {
                    self.step *= STEP_DECREASE;
                }
                if value <= *parent_value {
                    parent.clone_from(point);
                    *parent_value = value;
                }
            }
        }
    }
}
