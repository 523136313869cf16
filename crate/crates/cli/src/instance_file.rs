//! The `gnbg-instance/1` text format.

use std::fs;
use std::path::Path;

use gnbg_core::{Component, Instance, SquareMatrix};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};
use crate::json;

pub const INSTANCE_SCHEMA: &str = "gnbg-instance/1";

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceDoc {
    schema: String,
    instance_id: u32,
    seed: u64,
    dim: usize,
    lower: Vec<f64>,
    upper: Vec<f64>,
    components: Vec<ComponentDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComponentDoc {
    floor: f64,
    center: Vec<f64>,
    h_diag: Vec<f64>,
    lambda: f64,
    mu: [f64; 2],
    omega: [f64; 4],
    theta: Vec<Vec<f64>>,
    rotation: Vec<Vec<f64>>,
}

fn rows(m: &SquareMatrix) -> Vec<Vec<f64>> {
    m.rows().map(<[f64]>::to_vec).collect()
}

impl From<&Instance> for InstanceDoc {
    fn from(inst: &Instance) -> Self {
        Self {
            schema: INSTANCE_SCHEMA.into(),
            instance_id: inst.instance_id,
            seed: inst.seed,
            dim: inst.dim,
            lower: inst.lower.clone(),
            upper: inst.upper.clone(),
            components: inst
                .components
                .iter()
                .map(|c| ComponentDoc {
                    floor: c.floor,
                    center: c.center.clone(),
                    h_diag: c.h_diag.clone(),
                    lambda: c.lambda,
                    mu: c.mu,
                    omega: c.omega,
                    theta: rows(&c.theta),
                    rotation: rows(&c.rotation),
                })
                .collect(),
        }
    }
}

impl InstanceDoc {
    fn into_instance(self) -> gnbg_core::Result<Instance> {
        if self.schema != INSTANCE_SCHEMA {
            return Err(gnbg_core::Error::Validation(format!(
                "unsupported schema {:?}, expected {INSTANCE_SCHEMA:?}",
                self.schema
            )));
        }
        if self.lower.len() != self.dim {
            return Err(gnbg_core::Error::Shape(format!(
                "dim is {} but lower has {} entries",
                self.dim,
                self.lower.len()
            )));
        }
        let mut components = Vec::with_capacity(self.components.len());
        for c in self.components {
            components.push(Component {
                center: c.center,
                floor: c.floor,
                h_diag: c.h_diag,
                rotation: SquareMatrix::from_rows(&c.rotation)?,
                theta: SquareMatrix::from_rows(&c.theta)?,
                lambda: c.lambda,
                mu: c.mu,
                omega: c.omega,
            });
        }
        Instance::new(self.lower, self.upper, components, self.instance_id, self.seed)
    }
}

/// Renders `inst` as a `gnbg-instance/1` document.
pub fn to_string(inst: &Instance) -> String {
    json::to_string(&InstanceDoc::from(inst))
}

/// Parses and validates a `gnbg-instance/1` document. `origin` names the
/// source in error messages.
pub fn from_str(text: &str, origin: &Path) -> Result<Instance> {
    let doc: InstanceDoc = json::from_str(text).map_err(|m| CliError::parse(origin, m))?;
    doc.into_instance()
        .map_err(|source| CliError::Invalid { path: origin.into(), source })
}

pub fn write(inst: &Instance, path: &Path) -> Result<()> {
    fs::write(path, to_string(inst)).map_err(|e| CliError::io(path, e))
}

pub fn read(path: &Path) -> Result<Instance> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    from_str(&text, path)
}
