//! Sampling of rotation-angle matrices for the supported interaction structures.

use alloc::{format, vec::Vec};
use core::f64::consts::PI;

use rand::seq::SliceRandom;

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::rng::GnbgRng;

/// Default angle interval `(−π, π)`.
pub const FULL_TURN: (f64, f64) = (-PI, PI);

/// How the strictly upper-triangular angle matrix of a component is generated.
#[derive(Debug, Clone, PartialEq)]
pub enum ThetaSpec {
    /// No rotation: fully separable.
    Identity,
    /// Every pair `(p, q)` gets a nonzero angle drawn from `range`.
    FullRandom { range: (f64, f64) },
    /// Only neighbouring pairs `(i, i + 1)` interact.
    Chain { range: (f64, f64) },
    /// Indices are shuffled and split into `angles.len()` disjoint groups of
    /// near-equal size; every pair inside group `g` gets `angles[g]`, pairs
    /// across groups stay zero.
    Grouped { angles: Vec<f64> },
    /// Each pair is made to interact with probability `gate_prob`; only then is
    /// an angle drawn from `range`.
    GatedRandom { gate_prob: f64, range: (f64, f64) },
    /// Explicit `(p, q, angle)` triples, zero-based with `p < q`.
    Fixed { angles: Vec<(usize, usize, f64)> },
}

impl ThetaSpec {
    pub fn validate(&self, dim: usize) -> Result<()> {
        let check_range = |(a, b): (f64, f64)| {
            if a < b && a.is_finite() && b.is_finite() {
                Ok(())
            } else {
                Err(Error::Argument(format!("angle range ({a}, {b}) is empty")))
            }
        };
        match self {
            Self::Identity => Ok(()),
            Self::FullRandom { range } | Self::Chain { range } => check_range(*range),
            Self::GatedRandom { gate_prob, range } => {
                if !(0.0..=1.0).contains(gate_prob) {
                    return Err(Error::Argument(format!(
                        "gate probability {gate_prob} is outside [0, 1]"
                    )));
                }
                check_range(*range)
            }
            Self::Grouped { angles } => {
                if angles.is_empty() || angles.iter().any(|a| !a.is_finite()) {
                    Err(Error::Argument("grouped spec needs finite group angles".into()))
                } else {
                    Ok(())
                }
            }
            Self::Fixed { angles } => {
                for &(p, q, a) in angles {
                    if !(p < q && q < dim) || !a.is_finite() {
                        return Err(Error::Argument(format!(
                            "fixed angle ({p}, {q}, {a}) is not a valid pair for dimension {dim}"
                        )));
                    }
                }
                Ok(())
            }
        }
    }
}

/// Draws an angle matrix. Entries are visited row-major over `p < q`.
///
/// Random angles are drawn from the open range and redrawn if exactly zero,
/// so an entry the structure marks as interacting is always nonzero.
pub fn sample_theta(spec: &ThetaSpec, dim: usize, rng: &mut GnbgRng) -> Result<SquareMatrix> {
    spec.validate(dim)?;
    let mut theta = SquareMatrix::zeros(dim);
    match spec {
        ThetaSpec::Identity => {}
        ThetaSpec::FullRandom { range } => {
            for p in 0..dim {
                for q in p + 1..dim {
                    theta[(p, q)] = nonzero_angle(rng, *range);
                }
            }
        }
        ThetaSpec::Chain { range } => {
            for p in 0..dim.saturating_sub(1) {
                theta[(p, p + 1)] = nonzero_angle(rng, *range);
            }
        }
        ThetaSpec::GatedRandom { gate_prob, range } => {
            for p in 0..dim {
                for q in p + 1..dim {
                    let u: f64 = rand::Rng::random(rng);
                    if u < *gate_prob {
                        theta[(p, q)] = nonzero_angle(rng, *range);
                    }
                }
            }
        }
        ThetaSpec::Grouped { angles } => {
            for (group, angle) in partition(dim, angles.len(), rng).iter().zip(angles) {
                for (i, &a) in group.iter().enumerate() {
                    for &b in &group[i + 1..] {
                        theta[(a.min(b), a.max(b))] = *angle;
                    }
                }
            }
        }
        ThetaSpec::Fixed { angles } => {
            for &(p, q, a) in angles {
                theta[(p, q)] = a;
            }
        }
    }
    Ok(theta)
}

/// Random split of `0..dim` into `groups` disjoint sets; the first
/// `dim % groups` sets receive one extra index.
pub fn partition(dim: usize, groups: usize, rng: &mut GnbgRng) -> Vec<Vec<usize>> {
    let mut idx: Vec<usize> = (0..dim).collect();
    idx.shuffle(rng);
    let base = dim / groups;
    let extra = dim % groups;
    let mut out = Vec::with_capacity(groups);
    let mut start = 0;
    for g in 0..groups {
        let len = base + usize::from(g < extra);
        let mut group = idx[start..start + len].to_vec();
        group.sort_unstable();
        out.push(group);
        start += len;
    }
    out
}

fn nonzero_angle(rng: &mut GnbgRng, (a, b): (f64, f64)) -> f64 {
    loop {
        let v = rng.open_uniform(a, b);
        if v != 0.0 {
            return v;
        }
    }
}
