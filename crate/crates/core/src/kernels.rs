//! Covariance functions for the aging and operating-condition dimensions.
//!
//! Aging time uses a Wiener-velocity kernel (integrated Brownian motion):
//! non-stationary, so extrapolation keeps the last trend instead of
//! reverting to the mean. The operating point `(z, |I|)` uses a Matern-3/2
//! kernel with separate lengthscales per axis. The full spatio-temporal
//! kernel is the product of the two.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use nalgebra::DMatrix;
use num_traits::Float;

use crate::{Error, Result};

/// Relative diagonal jitter added to Matern grid covariances before any
/// factorization. Scaled by the kernel variance.
pub const MATERN_JITTER: f64 = 1e-8;

const SQRT3: f64 = 1.732_050_807_568_877_2;

/// Operating point of the cell: SOC in [0, 1] and current magnitude in
/// amperes. Distances on the current axis use absolute current, matching
/// how the operating grid discretizes the applied current range.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatingPoint {
    pub soc: f64,
    pub current: f64,
}

impl OperatingPoint {
    pub fn new(soc: f64, current: f64) -> Self {
        Self { soc, current }
    }
}

/// Matern-3/2 kernel over operating points.
///
/// `variance` applies to the normalized resistance deviation, so it is
/// dimensionless; the lengthscales carry the units of their axes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaternSpec {
    pub variance: f64,
    pub lengthscale_soc: f64,
    pub lengthscale_current: f64,
}

impl MaternSpec {
    pub fn new(variance: f64, lengthscale_soc: f64, lengthscale_current: f64) -> Result<Self> {
        let spec = Self {
            variance,
            lengthscale_soc,
            lengthscale_current,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("variance", self.variance),
            ("lengthscale_soc", self.lengthscale_soc),
            ("lengthscale_current", self.lengthscale_current),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::Invalid(format!(
                    "MaternSpec.{name} must be finite and positive, got {v}"
                )));
            }
        }
        Ok(())
    }

    /// Scaled distance between two operating points.
    fn distance(&self, a: &OperatingPoint, b: &OperatingPoint) -> f64 {
        let dz = (a.soc - b.soc) / self.lengthscale_soc;
        let di = (a.current - b.current) / self.lengthscale_current;
        (dz * dz + di * di).sqrt()
    }
}

/// Wiener-velocity kernel over aging time (days).
///
/// The state-space realization has dimension two (value and derivative)
/// and white-noise spectral density equal to `variance`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WienerVelocitySpec {
    pub variance: f64,
}

impl WienerVelocitySpec {
    /// State dimension of the realization: value and time-derivative.
    pub const STATE_DIM: usize = 2;

    pub fn new(variance: f64) -> Result<Self> {
        if !(variance.is_finite() && variance > 0.0) {
            return Err(Error::Invalid(format!(
                "WienerVelocitySpec.variance must be finite and positive, got {variance}"
            )));
        }
        Ok(Self { variance })
    }

    /// White-noise spectral density driving the realization.
    pub fn spectral_density(&self) -> f64 {
        self.variance
    }
}

/// Matern-3/2 covariance between two operating points:
/// `variance * (1 + sqrt(3) d) exp(-sqrt(3) d)`.
pub fn matern32_cov(s: &OperatingPoint, s_prime: &OperatingPoint, spec: &MaternSpec) -> Result<f64> {
    spec.validate()?;
    if !(s.soc.is_finite() && s.current.is_finite() && s_prime.soc.is_finite() && s_prime.current.is_finite()) {
        return Err(Error::Invalid(String::from("non-finite operating point")));
    }
    Ok(matern32_unchecked(s, s_prime, spec))
}

#[inline]
pub(crate) fn matern32_unchecked(s: &OperatingPoint, s_prime: &OperatingPoint, spec: &MaternSpec) -> f64 {
    let d = spec.distance(s, s_prime);
    spec.variance * (1.0 + SQRT3 * d) * (-SQRT3 * d).exp()
}

/// Derivative of the Matern-3/2 covariance with respect to the SOC of the
/// first argument. Continuous everywhere, including at zero distance.
#[inline]
pub(crate) fn matern32_dsoc_unchecked(s: &OperatingPoint, s_prime: &OperatingPoint, spec: &MaternSpec) -> f64 {
    // dk/dz = -3 sigma^2 exp(-sqrt(3) d) (z - z') / l_z^2; the 1/d factors cancel.
    let d = spec.distance(s, s_prime);
    -3.0 * spec.variance
        * (-SQRT3 * d).exp()
        * (s.soc - s_prime.soc)
        / (spec.lengthscale_soc * spec.lengthscale_soc)
}

/// Wiener-velocity covariance between two aging times (days):
/// `variance * (min^3/3 + |a - b| min^2/2)`.
pub fn wv_cov(age_a: f64, age_b: f64, variance: f64) -> Result<f64> {
    if !(age_a.is_finite() && age_b.is_finite()) || age_a < 0.0 || age_b < 0.0 {
        return Err(Error::Invalid(format!(
            "wv_cov requires finite non-negative ages, got ({age_a}, {age_b})"
        )));
    }
    if !(variance.is_finite() && variance > 0.0) {
        return Err(Error::Invalid(format!("wv_cov variance must be positive, got {variance}")));
    }
    let lo = age_a.min(age_b);
    let gap = (age_a - age_b).abs();
    Ok(variance * (lo * lo * lo / 3.0 + gap * lo * lo / 2.0))
}

/// Dense Matern covariance matrix over an operating grid, without jitter.
pub fn matern_grid_cov(grid: &[OperatingPoint], spec: &MaternSpec) -> Result<DMatrix<f64>> {
    spec.validate()?;
    if grid.is_empty() {
        return Err(Error::Invalid(String::from("operating grid must be nonempty")));
    }
    for (i, p) in grid.iter().enumerate() {
        if !(p.soc.is_finite() && p.current.is_finite()) {
            return Err(Error::Invalid(format!("grid point {i} is non-finite")));
        }
        for (j, q) in grid.iter().enumerate().skip(i + 1) {
            if p == q {
                return Err(Error::Invalid(format!(
                    "duplicate grid points at indices {i} and {j}: ({}, {})",
                    p.soc, p.current
                )));
            }
        }
    }
    let n = grid.len();
    let mut k = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = matern32_unchecked(&grid[i], &grid[j], spec);
            k[(i, j)] = v;
            k[(j, i)] = v;
        }
    }
    Ok(k)
}

/// Matern grid covariance with diagonal jitter, ready for factorization.
pub fn jittered_matern_grid_cov(grid: &[OperatingPoint], spec: &MaternSpec) -> Result<DMatrix<f64>> {
    let mut k = matern_grid_cov(grid, spec)?;
    let eps = MATERN_JITTER * spec.variance;
    for i in 0..k.nrows() {
        k[(i, i)] += eps;
    }
    Ok(k)
}

/// Kernel vector between a grid and a single query point.
pub(crate) fn matern_cross_cov(grid: &[OperatingPoint], s: &OperatingPoint, spec: &MaternSpec) -> nalgebra::DVector<f64> {
    nalgebra::DVector::from_iterator(grid.len(), grid.iter().map(|g| matern32_unchecked(g, s, spec)))
}
