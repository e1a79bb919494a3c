//! Central finite differences for scalar functions of one variable.

use serde::{Deserialize, Serialize};

/// Stencil width for central differences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stencil {
    /// Second-order accurate, 3 points.
    Three,
    /// Fourth-order accurate, 5 points.
    Five,
    /// Three-point estimates at `h` and `h/2` combined by Richardson
    /// extrapolation.
    Richardson,
}

/// Step and stencil used by every numerical operator in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FiniteDiff {
    pub step: f64,
    pub stencil: Stencil,
}

impl Default for FiniteDiff {
    fn default() -> Self {
        Self {
            step: 1e-5,
            stencil: Stencil::Three,
        }
    }
}

impl FiniteDiff {
    pub fn new(step: f64, stencil: Stencil) -> Self {
        Self { step, stencil }
    }

    /// Five-point stencil at `h = 1e-3`; the setting used for second-order
    /// operators, where a three-point stencil at small `h` loses too many
    /// digits to cancellation.
    pub fn high_order() -> Self {
        Self {
            step: 1e-3,
            stencil: Stencil::Five,
        }
    }

    /// Distance from a singular locus below which operators refuse to
    /// evaluate.
    pub fn exclusion(&self) -> f64 {
        10.0 * self.step
    }

    pub fn first<F: Fn(f64) -> f64>(&self, f: F, x: f64) -> f64 {
        let h = self.step;
        match self.stencil {
            Stencil::Three => (f(x + h) - f(x - h)) / (2.0 * h),
            Stencil::Five => (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h),
            Stencil::Richardson => {
                let d1 = (f(x + h) - f(x - h)) / (2.0 * h);
                let h2 = 0.5 * h;
                let d2 = (f(x + h2) - f(x - h2)) / (2.0 * h2);
                (4.0 * d2 - d1) / 3.0
            }
        }
    }

    pub fn second<F: Fn(f64) -> f64>(&self, f: F, x: f64) -> f64 {
        let h = self.step;
        match self.stencil {
            Stencil::Three => (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h),
            Stencil::Five => {
                (-f(x - 2.0 * h) + 16.0 * f(x - h) - 30.0 * f(x) + 16.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h * h)
            }
            Stencil::Richardson => {
                let fx = f(x);
                let d1 = (f(x + h) - 2.0 * fx + f(x - h)) / (h * h);
                let h2 = 0.5 * h;
                let d2 = (f(x + h2) - 2.0 * fx + f(x - h2)) / (h2 * h2);
                (4.0 * d2 - d1) / 3.0
            }
        }
    }
}
