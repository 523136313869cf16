//! File formats, campaigns, reports, and landscape grids on top of `gnbg-core`.

pub mod campaign;
pub mod error;
pub mod grid;
mod json;
pub mod instance_file;
pub mod report;
pub mod run_file;

pub use error::{CliError, Result};
