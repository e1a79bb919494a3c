//! Bessel functions of the first kind for real order `ν > -1` and real
//! argument.
//!
//! Three evaluators cover the half line:
//!
//! * the ascending series, used while `x ≤ 2` or `x² ≤ 4(ν+1)` so that the
//!   terms never grow by more than a small factor;
//! * Steed's method (continued fractions CF1 and CF2 normalized by the
//!   Wronskian) for the intermediate band;
//! * the Hankel asymptotic expansion once `x` is large compared to `ν²`.
//!
//! Neighbouring evaluators are cross-checked in the tests over their overlap
//! bands.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::gamma::recip_gamma;
use crate::error::{finite, Error, Result};

const SERIES_EPS: f64 = 1e-17;
const CF_EPS: f64 = 1e-16;
const CF_MAX_ITER: usize = 100_000;
const TINY: f64 = 1e-300;

/// A Bessel order `ν` with `ν > -1`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct BesselOrder(f64);

impl BesselOrder {
    pub fn new(nu: f64) -> Result<Self> {
        finite("nu", nu)?;
        if nu <= -1.0 {
            return Err(Error::Input(format!("Bessel order must exceed -1, got {nu}")));
        }
        Ok(Self(nu))
    }

    /// Integer orders are always valid.
    pub fn integer(n: u32) -> Self {
        Self(n as f64)
    }

    pub fn nu(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for BesselOrder {
    type Error = Error;
    fn try_from(nu: f64) -> Result<Self> {
        Self::new(nu)
    }
}

impl From<BesselOrder> for f64 {
    fn from(o: BesselOrder) -> f64 {
        o.0
    }
}

/// `J_ν(x)` for `x ≥ 0`.
///
/// Negative arguments are only meaningful through [`scaled_bessel`], where
/// the prefactor fixes the branch.
pub fn bessel_j(order: BesselOrder, x: f64) -> Result<f64> {
    finite("x", x)?;
    if x < 0.0 {
        return Err(Error::Domain(format!(
            "bessel_j takes x >= 0 (got {x}); use scaled_bessel for parity extension"
        )));
    }
    let nu = order.nu();
    if x == 0.0 && nu < 0.0 {
        return Err(Error::Domain(format!("J_{nu}(0) diverges for negative order")));
    }
    Ok(j_nonneg(nu, x))
}

/// `J'_ν(x) = (ν/x) J_ν(x) − J_{ν+1}(x)` for `x > 0`.
pub fn bessel_j_derivative(order: BesselOrder, x: f64) -> Result<f64> {
    finite("x", x)?;
    if x <= 0.0 {
        return Err(Error::Domain(format!("derivative evaluated at x = {x} <= 0")));
    }
    let nu = order.nu();
    Ok(j_derivative_unchecked(nu, x))
}

pub(crate) fn j_derivative_unchecked(nu: f64, x: f64) -> f64 {
    nu / x * j_nonneg(nu, x) - j_nonneg(nu + 1.0, x)
}

/// `x^power · J_ν(x)` through the factored form `x^(power+ν) · g(x²)`.
///
/// The origin is an ordinary point whenever `power + ν ≥ 0`. For negative `x`
/// the value is continued analytically, which requires `power + ν` to be an
/// integer; the result then carries the sign `(−1)^(power+ν)`.
pub fn scaled_bessel(order: BesselOrder, power: f64, x: f64) -> Result<f64> {
    finite("power", power)?;
    finite("x", x)?;
    let nu = order.nu();
    let total = power + nu;
    let rounded = total.round();
    let is_integer = (total - rounded).abs() <= 1e-12;
    if total < 0.0 && !(is_integer && rounded == 0.0) {
        return Err(Error::Regularity { sum: total });
    }
    let total = if is_integer { rounded } else { total };
    if x < 0.0 && !is_integer {
        return Err(Error::Domain(format!(
            "x^{power} J_{nu}(x) has no real continuation to x = {x}: power + order = {total} is not an integer"
        )));
    }

    let ax = x.abs();
    let magnitude = if ax == 0.0 {
        if total == 0.0 {
            (-nu * std::f64::consts::LN_2).exp() * recip_gamma(nu + 1.0)
        } else {
            0.0
        }
    } else if use_series(nu, ax) {
        let prefactor = if total == 0.0 { 1.0 } else { ax.powf(total) };
        prefactor * (-nu * std::f64::consts::LN_2).exp() * reduced_series(nu, ax)
    } else {
        ax.powf(power) * j_nonneg(nu, ax)
    };

    if x < 0.0 && (rounded as i64) % 2 != 0 {
        Ok(-magnitude)
    } else {
        Ok(magnitude)
    }
}

fn use_series(nu: f64, x: f64) -> bool {
    x <= 2.0 || x * x <= 4.0 * (nu + 1.0)
}

fn use_hankel(nu: f64, x: f64) -> bool {
    x >= 25.0 + 0.5 * nu * nu
}

/// Evaluator dispatch; `x ≥ 0`, `ν > -1`, and `x > 0` when `ν < 0`.
pub(crate) fn j_nonneg(nu: f64, x: f64) -> f64 {
    if x == 0.0 {
        return if nu == 0.0 { 1.0 } else { 0.0 };
    }
    if use_series(nu, x) {
        return j_series(nu, x);
    }
    if use_hankel(nu, x) {
        if let Some(v) = j_hankel(nu, x) {
            return v;
        }
    }
    j_steed(nu, x)
}

/// `Σ_k (−1)^k (x²/4)^k / (k! Γ(k+ν+1))`, so that `J_ν(x) = (x/2)^ν · S`.
fn reduced_series(nu: f64, x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = recip_gamma(nu + 1.0);
    let mut sum = term;
    for k in 1..500 {
        let kf = k as f64;
        term *= -q / (kf * (kf + nu));
        sum += term;
        if term.abs() <= SERIES_EPS * sum.abs() {
            break;
        }
    }
    sum
}

pub(crate) fn j_series(nu: f64, x: f64) -> f64 {
    let prefactor = if nu == 0.0 { 1.0 } else { (0.5 * x).powf(nu) };
    prefactor * reduced_series(nu, x)
}

/// Hankel expansion `√(2/πx) (P cos χ − Q sin χ)`; `None` when the series
/// starts diverging before reaching double precision.
pub(crate) fn j_hankel(nu: f64, x: f64) -> Option<f64> {
    let four_nu2 = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0_f64;
    let mut converged = false;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        let next = term * (four_nu2 - odd * odd) / (k as f64 * 8.0 * x);
        if next.abs() > term.abs() && k > 2 {
            break;
        }
        term = next;
        match k % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
        if term.abs() < 1e-17 {
            converged = true;
            break;
        }
    }
    if !converged {
        return None;
    }
    let chi = x - (0.5 * nu + 0.25) * PI;
    Some((2.0 / (PI * x)).sqrt() * (p * chi.cos() - q * chi.sin()))
}

/// Steed's method: CF1 gives `J'_ν/J_ν` and the sign of `J_ν`, downward
/// recurrence carries the ratio to `μ = ν − nl`, and CF2 together with the
/// Wronskian `2/(πx)` fixes the absolute scale.
pub(crate) fn j_steed(nu: f64, x: f64) -> f64 {
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;
    let nl = (nu - x + 1.5).floor().max(0.0) as usize;
    let mu = nu - nl as f64;

    // CF1
    let mut sign = 1.0;
    let mut h = nu * xi;
    if h.abs() < TINY {
        h = TINY;
    }
    let mut b = xi2 * nu;
    let mut d = 0.0;
    let mut c = h;
    for _ in 0..CF_MAX_ITER {
        b += xi2;
        d = b - d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = b - 1.0 / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let del = c * d;
        h *= del;
        if d < 0.0 {
            sign = -sign;
        }
        if (del - 1.0).abs() < CF_EPS {
            break;
        }
    }

    // Downward recurrence from ν to μ with an arbitrary scale.
    let start = sign * 1e-200;
    let mut jl = start;
    let mut jpl = h * jl;
    let mut fact = nu * xi;
    for _ in 0..nl {
        let jtemp = fact * jl + jpl;
        fact -= xi;
        jpl = fact * jtemp - jl;
        jl = jtemp;
    }
    if jl == 0.0 {
        jl = f64::EPSILON;
    }
    let f = jpl / jl;

    // CF2: p + iq = (J' + iY') / (J + iY) at order μ.
    let (p, q) = cf2(mu, x);
    let gamma = (p - f) / q;
    let w = xi2 / PI;
    let jmu = (w / ((p - f) * gamma + q)).sqrt().copysign(jl);
    start * (jmu / jl)
}

fn cf2(mu: f64, x: f64) -> (f64, f64) {
    let xi = 1.0 / x;
    let mut a = 0.25 - mu * mu;
    let mut p = -0.5 * xi;
    let mut q = 1.0;
    let br = 2.0 * x;
    let mut bi = 2.0;
    let mut fact = a * xi / (p * p + q * q);
    let mut cr = br + q * fact;
    let mut ci = bi + p * fact;
    let mut den = br * br + bi * bi;
    let mut dr = br / den;
    let mut di = -bi / den;
    let mut dlr = cr * dr - ci * di;
    let mut dli = cr * di + ci * dr;
    let mut temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    for i in 2..CF_MAX_ITER {
        a += 2.0 * (i - 1) as f64;
        bi += 2.0;
        dr = a * dr + br;
        di = a * di + bi;
        if dr.abs() + di.abs() < TINY {
            dr = TINY;
        }
        fact = a / (cr * cr + ci * ci);
        cr = br + cr * fact;
        ci = bi - ci * fact;
        if cr.abs() + ci.abs() < TINY {
            cr = TINY;
        }
        den = dr * dr + di * di;
        dr /= den;
        di /= -den;
        dlr = cr * dr - ci * di;
        dli = cr * di + ci * dr;
        temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        if (dlr - 1.0).abs() + dli.abs() < CF_EPS {
            break;
        }
    }
    (p, q)
}
