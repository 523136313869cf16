use alloc::{vec, vec::Vec};

use super::{History, Optimizer};
use crate::rng::GnbgRng;

/// `(√5 − 1) / 2`
const INV_PHI: f64 = 0.618_033_988_749_894_9;

#[derive(Debug, Clone, Copy, PartialEq)]
enum Probe {
    Start,
    Left,
    Right,
}

/// Cyclic coordinate search with a golden-section line search per coordinate.
///
/// Starts at the box center and sweeps the coordinates in order. Each line
/// search brackets the full coordinate range and shrinks it `iterations`
/// times with the other coordinates held fixed; the best of the two final
/// probes and the incumbent is kept. Uses no random draws. Returns an empty
/// batch once all sweeps are done.
#[derive(Debug, Clone)]
pub struct CoordinateSearch {
    pub sweeps: usize,
    pub iterations: usize,
    lower: Vec<f64>,
    upper: Vec<f64>,
    x: Vec<f64>,
    fx: f64,
    sweep: usize,
    coord: usize,
    shrinks: usize,
    bracket_open: bool,
    // Bracket [a, b] with interior probes c < d as (position, value).
    a: f64,
    b: f64,
    c: (f64, f64),
    d: (f64, f64),
    pending: Probe,
}

impl CoordinateSearch {
    pub fn new(sweeps: usize, iterations: usize) -> Self {
        Self {
            sweeps,
            iterations,
            lower: Vec::new(),
            upper: Vec::new(),
            x: Vec::new(),
            fx: f64::INFINITY,
            sweep: 0,
            coord: 0,
            shrinks: 0,
            bracket_open: false,
            a: 0.0,
            b: 0.0,
            c: (0.0, f64::NAN),
            d: (0.0, f64::NAN),
            pending: Probe::Start,
        }
    }

    /// Evaluations one full search uses on a `dim`-dimensional box.
    pub fn evaluations(&self, dim: usize) -> usize {
        1 + self.sweeps * dim * (self.iterations + 2)
    }

    pub fn incumbent(&self) -> (&[f64], f64) {
        (&self.x, self.fx)
    }

    fn probe(&mut self, which: Probe, v: f64) -> Vec<Vec<f64>> {
        self.pending = which;
        let mut p = self.x.clone();
        p[self.coord] = v;
        vec![p]
    }

    fn open_bracket(&mut self) {
        self.a = self.lower[self.coord];
        self.b = self.upper[self.coord];
        let w = self.b - self.a;
        self.c = (self.b - INV_PHI * w, f64::NAN);
        self.d = (self.a + INV_PHI * w, f64::NAN);
        self.shrinks = 0;
        self.bracket_open = true;
    }

    fn close_bracket(&mut self) {
        for (v, f) in [self.c, self.d] {
            if f < self.fx {
                self.fx = f;
                self.x[self.coord] = v;
            }
        }
        self.bracket_open = false;
        self.coord += 1;
        if self.coord == self.x.len() {
            self.coord = 0;
            self.sweep += 1;
        }
    }
}

impl Default for CoordinateSearch {
    fn default() -> Self {
        Self::new(3, 60)
    }
}

impl Optimizer for CoordinateSearch {
    fn name(&self) -> &str {
        "coord"
    }

    fn ask(&mut self, _rng: &mut GnbgRng, history: &History<'_>) -> Vec<Vec<f64>> {
        if self.x.is_empty() {
            self.lower = history.lower.to_vec();
            self.upper = history.upper.to_vec();
            self.x = self.lower.iter().zip(&self.upper).map(|(l, u)| 0.5 * (l + u)).collect();
            self.pending = Probe::Start;
            return vec![self.x.clone()];
        }
        loop {
            if self.sweep >= self.sweeps {
                return Vec::new();
            }
            if !self.bracket_open {
                self.open_bracket();
            }
            if self.c.1.is_nan() {
                return self.probe(Probe::Left, self.c.0);
            }
            if self.d.1.is_nan() {
                return self.probe(Probe::Right, self.d.0);
            }
            if self.shrinks == self.iterations {
                self.close_bracket();
                continue;
            }
            self.shrinks += 1;
            return if self.c.1 < self.d.1 {
                self.b = self.d.0;
                self.d = self.c;
                self.c = (self.b - INV_PHI * (self.b - self.a), f64::NAN);
                self.probe(Probe::Left, self.c.0)
            } else {
                self.a = self.c.0;
                self.c = self.d;
                self.d = (self.a + INV_PHI * (self.b - self.a), f64::NAN);
                self.probe(Probe::Right, self.d.0)
            };
        }
    }

    fn tell(&mut self, points: &[Vec<f64>], values: &[f64]) {
        let (Some(point), Some(&value)) = (points.first(), values.first()) else {
            return;
        };
        match self.pending {
            Probe::Start => {
                self.x.clone_from(point);
                self.fx = value;
            }
            Probe::Left => self.c.1 = value,
            Probe::Right => self.d.1 = value,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::{run, Budget, Termination};
    use crate::component::{Component, Instance};

    #[test]
    fn finds_separable_minimum_in_one_sweep() {
        let mut c = Component::sphere(vec![3.0, -7.0, 42.0], -1.0);
        c.h_diag = vec![1.0, 100.0, 0.5];
        let inst = Instance::new(vec![-100.0; 3], vec![100.0; 3], vec![c], 0, 0).unwrap();
        let mut opt = CoordinateSearch::new(1, 60);
        let rec = run(&mut opt, &inst, Budget::new(10_000, 1e-30).unwrap(), 0).unwrap();
        assert_eq!(rec.termination, Termination::OptimizerStopped);
        assert_eq!(rec.evals_used, CoordinateSearch::new(1, 60).evaluations(3));
        assert!(rec.final_error < 1e-12, "{}", rec.final_error);
        let (x, _) = opt.incumbent();
        for (xi, mi) in x.iter().zip([3.0, -7.0, 42.0]) {
            assert!((xi - mi).abs() < 1e-5);
        }
    }
}
