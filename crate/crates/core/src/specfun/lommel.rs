use serde::{Deserialize, Serialize};

use super::bessel::{scaled_bessel, BesselOrder};
use crate::diff::FiniteDiff;
use crate::error::{finite, Error, Result};

/// Parameters of the Lommel equation
/// `v'' + ((1−2α)/ξ) v' + ((βγ ξ^(γ−1))² + (α² − ν²γ²)/ξ²) v = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LommelParams {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub nu: f64,
}

impl LommelParams {
    pub fn new(alpha: f64, beta: f64, gamma: f64, nu: f64) -> Self {
        Self { alpha, beta, gamma, nu }
    }

    /// The solution `ξ^α J_ν(β ξ^γ)` that stays finite at the origin.
    pub fn regular_solution(&self) -> Result<impl Fn(f64) -> f64> {
        let order = BesselOrder::new(self.nu)?;
        if self.alpha + self.gamma * self.nu < 0.0 {
            return Err(Error::Regularity {
                sum: self.alpha + self.gamma * self.nu,
            });
        }
        if self.gamma <= 0.0 || self.beta <= 0.0 {
            return Err(Error::Input("regular solution needs β > 0 and γ > 0".into()));
        }
        let p = *self;
        // ξ^α J_ν(βξ^γ) = β^(−α/γ) · t^(α/γ) J_ν(t) with t = βξ^γ
        Ok(move |xi: f64| {
            let t = p.beta * xi.powf(p.gamma);
            let power = p.alpha / p.gamma;
            p.beta.powf(-power) * scaled_bessel(order, power, t).unwrap_or(f64::NAN)
        })
    }
}

/// Absolute residual of the Lommel equation for `solution` at `xi`.
pub fn lommel_residual<F: Fn(f64) -> f64>(params: &LommelParams, solution: F, xi: f64, fd: &FiniteDiff) -> Result<f64> {
    finite("xi", xi)?;
    if xi < fd.exclusion() {
        return Err(Error::SingularPoint {
            coordinate: "xi",
            value: xi,
            margin: fd.exclusion(),
        });
    }
    let LommelParams { alpha, beta, gamma, nu } = *params;
    let v = solution(xi);
    let dv = fd.first(&solution, xi);
    let d2v = fd.second(&solution, xi);
    let k = beta * gamma * xi.powf(gamma - 1.0);
    let coeff = k * k + (alpha * alpha - nu * nu * gamma * gamma) / (xi * xi);
    Ok((d2v + (1.0 - 2.0 * alpha) / xi * dv + coeff * v).abs())
}
