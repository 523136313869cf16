use alloc::{vec, vec::Vec};

use super::{uniform_point, History, Optimizer};
use crate::rng::GnbgRng;

/// Uniform random sampling of the box, one point per ask.
#[derive(Debug, Clone, Copy, Default)]
pub struct RandomSearch;

impl Optimizer for RandomSearch {
    fn name(&self) -> &str {
        "random"
    }

    fn ask(&mut self, rng: &mut GnbgRng, history: &History<'_>) -> Vec<Vec<f64>> {
        vec![uniform_point(rng, history)]
    }

    fn tell(&mut self, _points: &[Vec<f64>], _values: &[f64]) {}
}
