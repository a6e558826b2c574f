//! Battery state-of-health estimation from cycling data.
//!
//! The model is a two-parameter equivalent circuit (open-circuit voltage
//! source plus series resistance) whose parameters evolve on a slow aging
//! timescale. Inverse capacity is a Gaussian process over aging time,
//! resistance a Gaussian process over operating point (SOC, current) and
//! aging time. Both are realized as linear state-space models so that a
//! single extended Kalman filter co-estimates SOC together with the GP
//! states in linear time, accumulating the negative log marginal
//! likelihood for hyperparameter optimization.
//!
//! Module map:
//! - [`kernels`]: Wiener-velocity and Matern-3/2 covariance functions.
//! - [`ssm`]: state-space realizations, Kronecker assembly, batch-GP oracle.
//! - [`ecm`]: OCV curve, terminal voltage, Coulomb counting.
//! - [`segment`]: discharge segment container.
//! - [`estimator`]: joint EKF co-estimation, RTS smoothing, prediction.
//! - [`hyperopt`]: bounded quasi-Newton NLML minimization.
//! - [`dva`]: differential-voltage analytics and degradation modes.
//! - [`baseline`]: random-walk dual-estimation benchmark.
//!
//! The crate is `no_std` (with `alloc`); all IO lives in the companion
//! CLI crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod baseline;
pub mod dva;
pub mod ecm;
pub mod estimator;
pub mod hyperopt;
pub mod kernels;
pub mod segment;
pub mod ssm;

mod error;

pub use error::{Error, Result};
