//! Effective models and operator-norm homogenization-rate certificates for
//! periodic nonlocal convolution operators.
//!
//! The library discretizes the periodic fibre operators of a nonlocal
//! convolution-type generator on the unit cell, solves for the stationary
//! density of the adjoint periodic operator, computes the effective drift and
//! diffusion matrix through cell problems, and certifies the first-order
//! operator-norm convergence rate of the resolvent approximation by a
//! fibre-wise sweep over the dual cell.

pub mod error;
pub mod grid;
pub mod kernel;
pub mod numeric;

pub use error::{Error, Result};
