//! Sampling of the scaling diagonal `H`.

use alloc::{boxed::Box, format, vec, vec::Vec};

use rand::seq::SliceRandom;
use rand_distr::{Beta, Distribution};

use crate::error::{Error, Result};
use crate::rng::GnbgRng;

/// Generation rule for the principal diagonal of `H`.
#[derive(Debug, Clone, PartialEq)]
pub enum HStyle {
    /// All ones.
    Unit,
    /// Every entry equal to the given value.
    Constant(f64),
    /// Independent draws from the open interval `(a, b)`.
    Uniform(f64, f64),
    /// `dim` linearly spaced values from `a` to `b` inclusive, shuffled.
    LinspacePermute(f64, f64),
    /// Two distinct random indices carry `first` and `second`; the remaining
    /// entries come from `fill`.
    PinnedPair { first: f64, second: f64, fill: Box<HStyle> },
    /// `a + (b − a)·X` with `X ~ Beta(alpha, beta)`, restricted to the open
    /// interval `(a, b)`.
    BetaHeavyTail { alpha: f64, beta: f64, a: f64, b: f64 },
}

fn check_range(a: f64, b: f64) -> Result<()> {
    if a.is_finite() && b.is_finite() && 0.0 < a && a < b {
        Ok(())
    } else {
        Err(Error::Argument(format!("scaling range ({a}, {b}) must satisfy 0 < a < b")))
    }
}

/// Draws a positive diagonal of length `dim`.
pub fn sample_h_diag(style: &HStyle, dim: usize, rng: &mut GnbgRng) -> Result<Vec<f64>> {
    match style {
        HStyle::Unit => Ok(vec![1.0; dim]),
        HStyle::Constant(v) => {
            if !(v.is_finite() && *v > 0.0) {
                return Err(Error::Argument(format!("constant scaling {v} must be positive")));
            }
            Ok(vec![*v; dim])
        }
        HStyle::Uniform(a, b) => {
            check_range(*a, *b)?;
            Ok((0..dim).map(|_| rng.open_uniform(*a, *b)).collect())
        }
        HStyle::LinspacePermute(a, b) => {
            check_range(*a, *b)?;
            if dim < 2 {
                return Err(Error::Argument("linspace scaling needs dim >= 2".into()));
            }
            let step = (b - a) / (dim - 1) as f64;
            let mut h: Vec<f64> = (0..dim).map(|i| a + step * i as f64).collect();
            h[dim - 1] = *b;
            h.shuffle(rng);
            Ok(h)
        }
        HStyle::PinnedPair { first, second, fill } => {
            if dim < 2 {
                return Err(Error::Argument("pinning two values needs dim >= 2".into()));
            }
            if !(*first > 0.0 && *second > 0.0 && first.is_finite() && second.is_finite()) {
                return Err(Error::Argument("pinned scaling values must be positive".into()));
            }
            let i = rng.index(dim);
            let mut j = rng.index(dim - 1);
            if j >= i {
                j += 1;
            }
            let mut h = sample_h_diag(fill, dim, rng)?;
            h[i] = *first;
            h[j] = *second;
            Ok(h)
        }
        HStyle::BetaHeavyTail { alpha, beta, a, b } => {
            check_range(*a, *b)?;
            let dist = Beta::new(*alpha, *beta)
                .map_err(|e| Error::Argument(format!("beta({alpha}, {beta}): {e}")))?;
            Ok((0..dim)
                .map(|_| loop {
                    let v = a + (b - a) * dist.sample(rng);
                    if v > *a && v < *b {
                        break v;
                    }
                })
                .collect())
        }
    }
}
