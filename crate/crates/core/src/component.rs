//! Components, instances, and evaluation of the composite objective.

use alloc::{format, vec, vec::Vec};

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::rotation::build_rotation;
use crate::transform::transform_raw;

/// Largest admissible `max |RᵀR − I|` for a component rotation.
pub const ORTHOGONALITY_TOL: f64 = 1e-10;

/// One basin of attraction.
#[derive(Debug, Clone, PartialEq)]
pub struct Component {
    /// Location of the component minimum.
    pub center: Vec<f64>,
    /// Value at the center; the component never goes below it.
    pub floor: f64,
    /// Principal diagonal of the scaling matrix `H`.
    pub h_diag: Vec<f64>,
    pub rotation: SquareMatrix,
    /// Strictly upper-triangular rotation angles, in radians.
    pub theta: SquareMatrix,
    /// Basin exponent: below 0.5 sub-linear, 0.5 linear, above super-linear.
    pub lambda: f64,
    pub mu: [f64; 2],
    pub omega: [f64; 4],
}

impl Component {
    /// Unrotated unit sphere centered at `center` with minimum `floor`.
    pub fn sphere(center: Vec<f64>, floor: f64) -> Self {
        let d = center.len();
        Self {
            center,
            floor,
            h_diag: vec![1.0; d],
            rotation: SquareMatrix::identity(d),
            theta: SquareMatrix::zeros(d),
            lambda: 1.0,
            mu: [0.0; 2],
            omega: [0.0; 4],
        }
    }

    /// Replaces the angle matrix and rebuilds the rotation from it.
    pub fn with_theta(mut self, theta: SquareMatrix) -> Result<Self> {
        self.rotation = build_rotation(&theta)?;
        self.theta = theta;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.center.len()
    }

    /// Checks every type invariant; loaders call this on untrusted data.
    pub fn validate(&self) -> Result<()> {
        let d = self.dim();
        if d == 0 {
            return Err(Error::Validation("component has dimension 0".into()));
        }
        if self.h_diag.len() != d || self.rotation.dim() != d || self.theta.dim() != d {
            return Err(Error::Shape(format!(
                "component fields disagree on dimension: center {d}, h_diag {}, rotation {}, theta {}",
                self.h_diag.len(),
                self.rotation.dim(),
                self.theta.dim()
            )));
        }
        let finite = self
            .center
            .iter()
            .chain(&self.h_diag)
            .chain(self.rotation.as_slice())
            .chain(self.theta.as_slice())
            .chain(&self.mu)
            .chain(&self.omega)
            .chain([&self.floor, &self.lambda])
            .all(|v| v.is_finite());
        if !finite {
            return Err(Error::Validation("component contains non-finite values".into()));
        }
        if let Some((i, h)) = self.h_diag.iter().enumerate().find(|(_, &h)| h <= 0.0) {
            return Err(Error::Validation(format!("h_diag[{i}] = {h} is not positive")));
        }
        if self.lambda <= 0.0 {
            return Err(Error::Validation(format!("lambda = {} is not positive", self.lambda)));
        }
        if !self.theta.is_strictly_upper() {
            return Err(Error::Validation(
                "theta has nonzero entries on or below the diagonal".into(),
            ));
        }
        let err = self.rotation.orthogonality_error();
        if err > ORTHOGONALITY_TOL {
            return Err(Error::Validation(format!(
                "rotation is not orthogonal: max |RᵀR - I| = {err:e}"
            )));
        }
        Ok(())
    }

    /// Evaluates the component without checking the input length.
    ///
    /// The rotated offset is formed row by row and consumed immediately, so no
    /// buffer is allocated.
    #[inline]
    pub(crate) fn value_unchecked(&self, x: &[f64]) -> f64 {
        let mut quad = 0.0;
        for (i, row) in self.rotation.rows().enumerate() {
            let y: f64 = row
                .iter()
                .zip(x.iter().zip(&self.center))
                .map(|(r, (xi, mi))| r * (xi - mi))
                .sum();
            let t = transform_raw(y, self.mu, self.omega);
            quad += self.h_diag[i] * t * t;
        }
        self.floor + if quad > 0.0 { libm::pow(quad, self.lambda) } else { 0.0 }
    }
}

/// `σ + (T(R(x − m))ᵀ H T(R(x − m)))^λ` for one component.
pub fn eval_component(x: &[f64], c: &Component) -> Result<f64> {
    if x.len() != c.dim() {
        return Err(Error::Shape(format!(
            "point has {} coordinates, component expects {}",
            x.len(),
            c.dim()
        )));
    }
    check_finite(x)?;
    Ok(c.value_unchecked(x))
}

/// `max(h) / min(h)`.
pub fn condition_number(c: &Component) -> f64 {
    let (lo, hi) = c
        .h_diag
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &h| (lo.min(h), hi.max(h)));
    hi / lo
}

fn check_finite(x: &[f64]) -> Result<()> {
    match x.iter().position(|v| !v.is_finite()) {
        Some(index) => Err(Error::Domain { index, value: x[index] }),
        None => Ok(()),
    }
}

/// A complete box-constrained problem.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub dim: usize,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    pub components: Vec<Component>,
    /// Suite id in `1..=24`, or 0 for a custom instance.
    pub instance_id: u32,
    pub seed: u64,
}

impl Instance {
    pub fn new(
        lower: Vec<f64>,
        upper: Vec<f64>,
        components: Vec<Component>,
        instance_id: u32,
        seed: u64,
    ) -> Result<Self> {
        let inst = Self { dim: lower.len(), lower, upper, components, instance_id, seed };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(Error::Validation("instance has dimension 0".into()));
        }
        if self.lower.len() != self.dim || self.upper.len() != self.dim {
            return Err(Error::Shape(format!(
                "bounds have lengths {} and {}, expected {}",
                self.lower.len(),
                self.upper.len(),
                self.dim
            )));
        }
        for (i, (l, u)) in self.lower.iter().zip(&self.upper).enumerate() {
            if !(l.is_finite() && u.is_finite() && l < u) {
                return Err(Error::Validation(format!(
                    "bounds for dimension {i} are not an interval: lower {l}, upper {u}"
                )));
            }
        }
        if self.components.is_empty() {
            return Err(Error::Validation("instance has no components".into()));
        }
        if self.instance_id > 24 {
            return Err(Error::Validation(format!(
                "instance id {} is neither a suite id nor 0",
                self.instance_id
            )));
        }
        for (k, c) in self.components.iter().enumerate() {
            if c.dim() != self.dim {
                return Err(Error::Shape(format!(
                    "component {k} has dimension {}, instance has {}",
                    c.dim(),
                    self.dim
                )));
            }
            c.validate()
                .map_err(|e| Error::Validation(format!("component {k}: {e}")))?;
        }
        Ok(())
    }

    /// Index of the component with the lowest floor (lowest index on ties).
    pub fn optimum_component(&self) -> usize {
        let mut best = 0;
        for (k, c) in self.components.iter().enumerate().skip(1) {
            if c.floor < self.components[best].floor {
                best = k;
            }
        }
        best
    }

    /// The global optimum value.
    pub fn sigma_min(&self) -> f64 {
        self.components[self.optimum_component()].floor
    }

    /// The global optimum location.
    pub fn optimum(&self) -> &[f64] {
        &self.components[self.optimum_component()].center
    }

    /// Objective value and the lowest-index component attaining it.
    ///
    /// Points outside the box are evaluated too; constraint handling belongs to
    /// the caller.
    pub fn evaluate(&self, x: &[f64]) -> Result<(f64, usize)> {
        if x.len() != self.dim {
            return Err(Error::Shape(format!(
                "point dimension is {}, instance dimension is {}",
                x.len(),
                self.dim
            )));
        }
        check_finite(x)?;
        Ok(self.evaluate_unchecked(x))
    }

    #[inline]
    pub(crate) fn evaluate_unchecked(&self, x: &[f64]) -> (f64, usize) {
        let mut best = (f64::INFINITY, 0);
        for (k, c) in self.components.iter().enumerate() {
            let v = c.value_unchecked(x);
            if v < best.0 {
                best = (v, k);
            }
        }
        best
    }

    /// Projects `x` onto the box in place.
    pub fn clamp(&self, x: &mut [f64]) {
        for ((v, l), u) in x.iter_mut().zip(&self.lower).zip(&self.upper) {
            *v = v.clamp(*l, *u);
        }
    }
}
