//! Test functions and density profiles on rescaled coordinates.
//!
//! [`Profile`] is a closed-form evaluator used both for compactly supported
//! test functions (bumps) and for initial density profiles (cosine modes).
//! [`GridProfile`] is the sampled form the spectral solvers operate on.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Closed-form scalar field on `R^d`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case", deny_unknown_fields)]
pub enum Profile {
    /// Constant field.
    Constant { value: f64 },
    /// Smooth compactly supported bump
    /// `height * exp(1 - 1/(1 - |x-center|^2/radius^2))` inside the ball of
    /// `radius` around `center`, zero outside. Lipschitz with constant
    /// bounded by `2 * height / radius`.
    Bump {
        center: Vec<f64>,
        radius: f64,
        height: f64,
    },
    /// `base + amplitude * cos(2 pi (mode . x) / period)`; periodic with the
    /// given period along every axis.
    CosineMode {
        mode: Vec<i64>,
        period: f64,
        base: f64,
        amplitude: f64,
    },
    /// Gaussian `mass * (2 pi sigma^2)^{-d/2} exp(-|x-center|^2 / 2 sigma^2)`.
    Gaussian {
        center: Vec<f64>,
        sigma: f64,
        mass: f64,
    },
}

impl Profile {
    /// Standard bump of unit height centered at the origin.
    pub fn bump(d: usize, radius: f64, height: f64) -> Self {
        Profile::Bump {
            center: vec![0.0; d],
            radius,
            height,
        }
    }

    /// Single cosine mode `base + amplitude cos(2 pi m x_axis / period)`.
    pub fn cosine_axis(d: usize, axis: usize, m: i64, period: f64, base: f64, amplitude: f64) -> Self {
        let mut mode = vec![0i64; d];
        mode[axis] = m;
        Profile::CosineMode {
            mode,
            period,
            base,
            amplitude,
        }
    }

    pub fn dim_hint(&self) -> Option<usize> {
        match self {
            Profile::Constant { .. } => None,
            Profile::Bump { center, .. } => Some(center.len()),
            Profile::CosineMode { mode, .. } => Some(mode.len()),
            Profile::Gaussian { center, .. } => Some(center.len()),
        }
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        match self {
            Profile::Constant { value } => *value,
            Profile::Bump {
                center,
                radius,
                height,
            } => {
                let r2: f64 = x
                    .iter()
                    .zip(center)
                    .map(|(xi, ci)| (xi - ci) * (xi - ci))
                    .sum();
                let s2 = r2 / (radius * radius);
                if s2 >= 1.0 {
                    0.0
                } else {
                    height * (1.0 - 1.0 / (1.0 - s2)).exp()
                }
            }
            Profile::CosineMode {
                mode,
                period,
                base,
                amplitude,
            } => {
                let phase: f64 = x
                    .iter()
                    .zip(mode)
                    .map(|(xi, &mi)| xi * mi as f64)
                    .sum::<f64>()
                    * 2.0
                    * PI
                    / period;
                base + amplitude * phase.cos()
            }
            Profile::Gaussian {
                center,
                sigma,
                mass,
            } => {
                let d = x.len();
                let r2: f64 = x
                    .iter()
                    .zip(center)
                    .map(|(xi, ci)| (xi - ci) * (xi - ci))
                    .sum();
                mass * (-(r2) / (2.0 * sigma * sigma)).exp()
                    / (2.0 * PI * sigma * sigma).powf(d as f64 / 2.0)
            }
        }
    }

    pub fn sup_norm(&self) -> f64 {
        match self {
            Profile::Constant { value } => value.abs(),
            Profile::Bump { height, .. } => height.abs(),
            Profile::CosineMode {
                base, amplitude, ..
            } => base.abs() + amplitude.abs(),
            Profile::Gaussian { sigma, mass, center } => {
                mass.abs() / (2.0 * PI * sigma * sigma).powf(center.len() as f64 / 2.0)
            }
        }
    }

    /// Radius of a ball around the origin containing the support, if compact.
    /// `Constant { 0 }` has empty support; nonzero constants, cosine modes and
    /// Gaussians are unbounded (`None`).
    pub fn support_radius(&self) -> Option<f64> {
        match self {
            Profile::Constant { value } => {
                if *value == 0.0 {
                    Some(0.0)
                } else {
                    None
                }
            }
            Profile::Bump { center, radius, .. } => {
                let c: f64 = center.iter().map(|c| c * c).sum::<f64>().sqrt();
                Some(c + radius)
            }
            _ => None,
        }
    }

    /// Whether the profile is periodic with the given period along each axis.
    pub fn is_periodic_with(&self, period: f64) -> bool {
        match self {
            Profile::Constant { .. } => true,
            Profile::CosineMode { period: p, .. } => (p - period).abs() < 1e-12 * period,
            _ => false,
        }
    }

    /// Minimum grid points per axis for faithful sampling on a period-`p`
    /// grid: Nyquist for cosine modes, feature resolution for the rest.
    pub fn min_grid_points(&self, period: f64) -> usize {
        match self {
            Profile::Constant { .. } => 2,
            Profile::CosineMode { mode, .. } => {
                let m = mode.iter().map(|m| m.unsigned_abs()).max().unwrap_or(0) as usize;
                (2 * m + 2).max(2)
            }
            Profile::Bump { radius, .. } => {
                // at least 8 points across the bump
                ((8.0 * period / radius).ceil() as usize).max(2)
            }
            Profile::Gaussian { sigma, .. } => ((6.0 * period / sigma).ceil() as usize).max(2),
        }
    }
}

/// Scalar field sampled on a periodic grid: `m` points per axis over a cube
/// of physical side `period`, grid points at the centered representatives
/// `j * period / m` for `j` in `(-m/2, m/2]`, coordinate 0 fastest.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridProfile {
    pub d: usize,
    pub m: usize,
    pub period: f64,
    pub values: Vec<f64>,
}

impl GridProfile {
    pub fn new(d: usize, m: usize, period: f64, values: Vec<f64>) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidParameter("grid needs m >= 2".into()));
        }
        if values.len() != m.pow(d as u32) {
            return Err(Error::InvalidParameter(format!(
                "grid value count {} != m^d = {}",
                values.len(),
                m.pow(d as u32)
            )));
        }
        Ok(GridProfile {
            d,
            m,
            period,
            values,
        })
    }

    /// Sample a closed-form profile on the grid. Errors if the grid fails the
    /// profile's resolution requirement.
    pub fn sample(profile: &Profile, d: usize, m: usize, period: f64) -> Result<Self> {
        let required = profile.min_grid_points(period);
        if m < required {
            return Err(Error::GridTooCoarse { m, required });
        }
        let count = m.pow(d as u32);
        let h = period / m as f64;
        let half = (m / 2) as i64;
        let mut values = vec![0.0; count];
        let mut coords = vec![0i64; d];
        for (ix, v) in values.iter_mut().enumerate() {
            let mut rest = ix;
            for c in coords.iter_mut() {
                *c = (rest % m) as i64;
                rest /= m;
            }
            let x: Vec<f64> = coords
                .iter()
                .map(|&c| {
                    let cc = if c > half { c - m as i64 } else { c };
                    cc as f64 * h
                })
                .collect();
            *v = profile.eval(&x);
        }
        GridProfile::new(d, m, period, values)
    }

    /// Physical position of a flat grid index (centered representative).
    pub fn position(&self, ix: usize) -> Vec<f64> {
        let h = self.period / self.m as f64;
        let half = (self.m / 2) as i64;
        let mut rest = ix;
        let mut out = Vec::with_capacity(self.d);
        for _ in 0..self.d {
            let c = (rest % self.m) as i64;
            rest /= self.m;
            let cc = if c > half { c - self.m as i64 } else { c };
            out.push(cc as f64 * h);
        }
        out
    }

    /// Riemann integral `h^d * sum(values)` over one period.
    pub fn integral(&self) -> f64 {
        let h = self.period / self.m as f64;
        crate::exec::neumaier_sum(&self.values) * h.powi(self.d as i32)
    }

    /// Riemann integral of `f(x) * rho(x)` over one period.
    pub fn integral_against<F: FnMut(&[f64]) -> f64>(&self, mut f: F) -> f64 {
        let h = self.period / self.m as f64;
        let s = crate::exec::neumaier_sum_fn(self.values.len(), |ix| {
            f(&self.position(ix)) * self.values[ix]
        });
        s * h.powi(self.d as i32)
    }

    pub fn min(&self) -> f64 {
        self.values.iter().cloned().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.values.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
    }
}
