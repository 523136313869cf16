//! Core of the generalized numerical benchmark generator.
//!
//! A landscape is the pointwise minimum over a set of parametric components,
//! each a rotated, stretched, and non-linearly perturbed bowl:
//!
//! ```text
//! f(x) = min_k { σ_k + ( T_k(R_k (x - m_k))ᵀ H_k T_k(R_k (x - m_k)) )^λ_k }
//! ```
//!
//! The crate is `no_std` (it needs `alloc`). File formats, the command line,
//! and thread pools live in the companion `gnbg` crate.
//!
//! Indices are zero-based throughout, for dimensions and components alike.

#![no_std]

extern crate alloc;

pub mod characteristics;
pub mod component;
pub mod error;
pub mod harness;
pub mod hdiag;
pub mod matrix;
pub mod rng;
pub mod rotation;
pub mod suite;
pub mod theta;
pub mod transform;

pub use component::{condition_number, eval_component, Component, Instance};
pub use error::{Error, Result};
pub use hdiag::{sample_h_diag, HStyle};
pub use matrix::SquareMatrix;
pub use rng::GnbgRng;
pub use rotation::build_rotation;
pub use suite::{figure_mode_instance, make_instance, make_instance_with_dim, SUITE_DIM, SUITE_SIZE};
pub use theta::{sample_theta, ThetaSpec};
pub use transform::{transform_scalar, transform_vector};
