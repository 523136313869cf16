//! Two-dimensional landscape slices as plain-text matrices.
//!
//! The first line is a header `# gnbg-grid/1 key=value ...`; each following
//! line holds one node of the first active axis, with one value per node of
//! the second active axis.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use gnbg_core::Instance;

use crate::error::{CliError, Result};

pub const GRID_SCHEMA: &str = "gnbg-grid/1";

#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    /// Active dimensions, row axis first.
    pub dims: (usize, usize),
    pub resolution: usize,
    /// Values of the remaining coordinates; defaults to the global optimum.
    pub fixed: Option<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    pub instance_id: u32,
    pub seed: u64,
    pub figure_mode: bool,
    pub dims: (usize, usize),
    pub x_nodes: Vec<f64>,
    pub y_nodes: Vec<f64>,
    /// Full-length point whose active coordinates are overwritten per node.
    pub base: Vec<f64>,
    /// `values[i][j]` is the objective at `(x_nodes[i], y_nodes[j])`.
    pub values: Vec<Vec<f64>>,
}

impl Grid {
    pub fn point(&self, i: usize, j: usize) -> Vec<f64> {
        let mut x = self.base.clone();
        x[self.dims.0] = self.x_nodes[i];
        x[self.dims.1] = self.y_nodes[j];
        x
    }
}

/// `n` evenly spaced nodes from `lo` to `hi`, the last one exactly `hi`.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let step = (hi - lo) / (n - 1) as f64;
    let mut nodes: Vec<f64> = (0..n).map(|i| lo + step * i as f64).collect();
    nodes[n - 1] = hi;
    nodes
}

pub fn compute(inst: &Instance, spec: &GridSpec, figure_mode: bool) -> Result<Grid> {
    let (a, b) = spec.dims;
    if a == b || a >= inst.dim || b >= inst.dim {
        return Err(CliError::Argument(format!(
            "active dims must be distinct and below {}, got {a} and {b}",
            inst.dim
        )));
    }
    if spec.resolution < 2 {
        return Err(CliError::Argument(format!(
            "resolution must be at least 2, got {}",
            spec.resolution
        )));
    }
    let base = match &spec.fixed {
        Some(v) if v.len() != inst.dim => {
            return Err(CliError::Argument(format!(
                "fixed point has {} coordinates, instance expects {}",
                v.len(),
                inst.dim
            )))
        }
        Some(v) => v.clone(),
        None => inst.optimum().to_vec(),
    };
    let mut grid = Grid {
        instance_id: inst.instance_id,
        seed: inst.seed,
        figure_mode,
        dims: spec.dims,
        x_nodes: linspace(inst.lower[a], inst.upper[a], spec.resolution),
        y_nodes: linspace(inst.lower[b], inst.upper[b], spec.resolution),
        base,
        values: Vec::with_capacity(spec.resolution),
    };
    for i in 0..spec.resolution {
        let mut row = Vec::with_capacity(spec.resolution);
        for j in 0..spec.resolution {
            row.push(inst.evaluate(&grid.point(i, j))?.0);
        }
        grid.values.push(row);
    }
    Ok(grid)
}

fn join(values: &[f64], sep: &str) -> String {
    values.iter().map(|v| format!("{v:.16e}")).collect::<Vec<_>>().join(sep)
}

pub fn to_string(grid: &Grid) -> String {
    let n = grid.x_nodes.len();
    let mut out = format!(
        "# {GRID_SCHEMA} id={} seed={} figure_mode={} dims={},{} resolution={} \
         x_range={} y_range={} fixed={}\n",
        grid.instance_id,
        grid.seed,
        grid.figure_mode,
        grid.dims.0,
        grid.dims.1,
        n,
        join(&[grid.x_nodes[0], grid.x_nodes[n - 1]], ","),
        join(&[grid.y_nodes[0], grid.y_nodes[n - 1]], ","),
        join(&grid.base, ","),
    );
    for row in &grid.values {
        let _ = writeln!(out, "{}", join(row, " "));
    }
    out
}

fn parse_floats(s: &str, sep: char) -> std::result::Result<Vec<f64>, String> {
    s.split(sep)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<f64>().map_err(|e| format!("bad number {t:?}: {e}")))
        .collect()
}

fn parse_text(text: &str) -> std::result::Result<Grid, String> {
    let mut lines = text.lines();
    let header = lines.next().ok_or("empty file")?;
    let rest = header
        .strip_prefix(&format!("# {GRID_SCHEMA} "))
        .ok_or_else(|| format!("line 1: expected header starting with `# {GRID_SCHEMA}`"))?;
    let meta: BTreeMap<&str, &str> = rest
        .split_whitespace()
        .map(|kv| kv.split_once('=').ok_or_else(|| format!("line 1: malformed entry {kv:?}")))
        .collect::<std::result::Result<_, _>>()?;
    let get = |k: &str| meta.get(k).copied().ok_or_else(|| format!("line 1: missing `{k}`"));
    let num = |k: &str| -> std::result::Result<u64, String> {
        get(k)?.parse().map_err(|e| format!("line 1: `{k}`: {e}"))
    };
    let dims = parse_floats(get("dims")?, ',')?;
    let x_range = parse_floats(get("x_range")?, ',')?;
    let y_range = parse_floats(get("y_range")?, ',')?;
    if dims.len() != 2 || x_range.len() != 2 || y_range.len() != 2 {
        return Err("line 1: `dims`, `x_range` and `y_range` need two entries".into());
    }
    let n = num("resolution")? as usize;
    if n < 2 {
        return Err("line 1: resolution below 2".into());
    }
    let mut values = Vec::with_capacity(n);
    for (k, line) in lines.enumerate() {
        let row = parse_floats(line, ' ').map_err(|e| format!("line {}: {e}", k + 2))?;
        if row.len() != n {
            return Err(format!("line {}: expected {n} values, found {}", k + 2, row.len()));
        }
        values.push(row);
    }
    if values.len() != n {
        return Err(format!("expected {n} rows, found {}", values.len()));
    }
    Ok(Grid {
        instance_id: num("id")? as u32,
        seed: num("seed")?,
        figure_mode: get("figure_mode")?.parse().map_err(|e| format!("line 1: `figure_mode`: {e}"))?,
        dims: (dims[0] as usize, dims[1] as usize),
        x_nodes: linspace(x_range[0], x_range[1], n),
        y_nodes: linspace(y_range[0], y_range[1], n),
        base: parse_floats(get("fixed")?, ',')?,
        values,
    })
}

pub fn from_str(text: &str, origin: &Path) -> Result<Grid> {
    parse_text(text).map_err(|m| CliError::parse(origin, m))
}

pub fn write(grid: &Grid, path: &Path) -> Result<()> {
    fs::write(path, to_string(grid)).map_err(|e| CliError::io(path, e))
}

pub fn read(path: &Path) -> Result<Grid> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    from_str(&text, path)
}
