use alloc::vec::Vec;

use rand::Rng;

use super::{uniform_point, History, Optimizer};
use crate::rng::GnbgRng;

/// Classic DE/rand/1/bin with synchronous generations.
///
/// The first ask samples the whole population uniformly. Each later ask builds
/// one trial per target `i`, drawing in this order: distinct donors `r1`,
/// `r2`, `r3` (all different from `i`, by rejection over `0..pop`), the forced
/// crossover coordinate `j_rand`, then one uniform `u_j` per coordinate. Trial
/// coordinate `j` is `x[r1][j] + F·(x[r2][j] − x[r3][j])` when `u_j < CR` or
/// `j == j_rand`, otherwise the target's. A trial replaces its target when it
/// is no worse.
#[derive(Debug, Clone)]
pub struct DifferentialEvolution {
    pub pop_size: usize,
    pub f: f64,
    pub cr: f64,
    population: Vec<Vec<f64>>,
    fitness: Vec<f64>,
}

impl DifferentialEvolution {
    /// `pop_size` must be at least 4 for rand/1 donors to exist.
    pub fn new(pop_size: usize, f: f64, cr: f64) -> Self {
        assert!(pop_size >= 4, "DE/rand/1 needs at least four members");
        Self { pop_size, f, cr, population: Vec::new(), fitness: Vec::new() }
    }

    pub fn population(&self) -> &[Vec<f64>] {
        &self.population
    }

    pub fn fitness(&self) -> &[f64] {
        &self.fitness
    }

    fn trial(&self, i: usize, rng: &mut GnbgRng) -> Vec<f64> {
        let n = self.population.len();
        let pick = |rng: &mut GnbgRng, taken: &[usize]| loop {
            let r = rng.index(n);
            if !taken.contains(&r) {
                break r;
            }
        };
        let r1 = pick(rng, &[i]);
        let r2 = pick(rng, &[i, r1]);
        let r3 = pick(rng, &[i, r1, r2]);
        let target = &self.population[i];
        let d = target.len();
        let j_rand = rng.index(d);
        (0..d)
            .map(|j| {
                let u: f64 = rng.random();
                if u < self.cr || j == j_rand {
                    self.population[r1][j]
                        + self.f * (self.population[r2][j] - self.population[r3][j])
                } else {
                    target[j]
                }
            })
            .collect()
    }
}

impl Default for DifferentialEvolution {
    fn default() -> Self {
        Self::new(50, 0.5, 0.9)
    }
}

impl Optimizer for DifferentialEvolution {
    fn name(&self) -> &str {
        "de"
    }

    fn ask(&mut self, rng: &mut GnbgRng, history: &History<'_>) -> Vec<Vec<f64>> {
        if self.population.len() < self.pop_size {
            let missing = self.pop_size - self.population.len();
            return (0..missing.min(history.remaining))
                .map(|_| uniform_point(rng, history))
                .collect();
        }
        (0..self.pop_size.min(history.remaining))
            .map(|i| self.trial(i, rng))
            .collect()
    }

    fn tell(&mut self, points: &[Vec<f64>], values: &[f64]) {
        if self.population.len() < self.pop_size {
            self.population.extend_from_slice(points);
            self.fitness.extend_from_slice(values);
            return;
        }
        for (i, (p, &v)) in points.iter().zip(values).enumerate() {
            if v <= self.fitness[i] {
                self.population[i].clone_from(p);
                self.fitness[i] = v;
            }
        }
    }
}
