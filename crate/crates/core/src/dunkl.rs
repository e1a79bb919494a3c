//! Dunkl parameters, the reflections `R₁, R₂, R₃`, the Dunkl derivative
//! `Dᵢ = ∂ᵢ + (μᵢ/xᵢ)(1 − Rᵢ)` and the separated cylindrical operators
//! `A_ρ`, `B_φ`, `C_z`.
//!
//! Everything acts numerically on function handles. Points closer than
//! [`FiniteDiff::exclusion`] to the locus where an operator has a `1/xᵢ`
//! (or `1/cos φ`, `1/sin φ`) coefficient are refused.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use serde::{Deserialize, Serialize};

use crate::diff::FiniteDiff;
use crate::error::{finite, Error, Result};

/// The Dunkl parameters `(μ₁, μ₂, μ₃)`, each greater than `−1/2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DunklParams {
    mu1: f64,
    mu2: f64,
    mu3: f64,
}

impl DunklParams {
    pub fn new(mu1: f64, mu2: f64, mu3: f64) -> Result<Self> {
        for (name, mu) in [("mu1", mu1), ("mu2", mu2), ("mu3", mu3)] {
            finite(name, mu)?;
            if mu <= -0.5 {
                return Err(Error::Input(format!("{name} must exceed -1/2, got {mu}")));
            }
        }
        Ok(Self { mu1, mu2, mu3 })
    }

    /// Parameters for the parity-quantized family: `μ₁ + μ₂ = M`,
    /// `μ₃ = m + 1/2`, with `μ₁` choosing the split of `M`.
    pub fn quantized(mu1: f64, m_sum: u32, m: u32) -> Result<Self> {
        Self::new(mu1, m_sum as f64 - mu1, m as f64 + 0.5)
    }

    pub fn mu1(&self) -> f64 {
        self.mu1
    }

    pub fn mu2(&self) -> f64 {
        self.mu2
    }

    pub fn mu3(&self) -> f64 {
        self.mu3
    }

    pub fn mu(&self, axis: Axis) -> f64 {
        match axis {
            Axis::X => self.mu1,
            Axis::Y => self.mu2,
            Axis::Z => self.mu3,
        }
    }

    /// `M = μ₁ + μ₂`.
    pub fn planar_sum(&self) -> f64 {
        self.mu1 + self.mu2
    }

    /// `(M, m)` when `μ₁ + μ₂` and `μ₃ − 1/2` are nonnegative integers, the
    /// condition under which every separated solution has definite parity.
    pub fn parity_quantized(&self) -> Option<(u32, u32)> {
        let m_sum = as_nonneg_integer(self.planar_sum())?;
        let m = as_nonneg_integer(self.mu3 - 0.5)?;
        Some((m_sum, m))
    }

    pub fn is_parity_quantized(&self) -> bool {
        self.parity_quantized().is_some()
    }
}

fn as_nonneg_integer(x: f64) -> Option<u32> {
    let r = x.round();
    if (x - r).abs() <= 1e-12 && r >= 0.0 {
        Some(r as u32)
    } else {
        None
    }
}

/// A point in Cartesian coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CartPoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// A point in cylindrical coordinates with `ρ ≥ 0` and `φ ∈ [0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CylPoint {
    pub rho: f64,
    pub phi: f64,
    pub z: f64,
}

impl CartPoint {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn coord(&self, axis: Axis) -> f64 {
        match axis {
            Axis::X => self.x,
            Axis::Y => self.y,
            Axis::Z => self.z,
        }
    }

    pub fn with_coord(mut self, axis: Axis, value: f64) -> Self {
        match axis {
            Axis::X => self.x = value,
            Axis::Y => self.y = value,
            Axis::Z => self.z = value,
        }
        self
    }
}

impl CylPoint {
    pub fn new(rho: f64, phi: f64, z: f64) -> Self {
        Self {
            rho,
            phi: wrap_angle(phi),
            z,
        }
    }
}

/// Maps any angle into `[0, 2π)`.
pub fn wrap_angle(phi: f64) -> f64 {
    let w = phi.rem_euclid(TAU);
    if w >= TAU {
        0.0
    } else {
        w
    }
}

impl From<CylPoint> for CartPoint {
    fn from(p: CylPoint) -> Self {
        let (s, c) = p.phi.sin_cos();
        CartPoint::new(p.rho * c, p.rho * s, p.z)
    }
}

impl From<CartPoint> for CylPoint {
    fn from(p: CartPoint) -> Self {
        CylPoint::new(p.x.hypot(p.y), p.y.atan2(p.x), p.z)
    }
}

/// Coordinate axis carrying a Dunkl parameter and a reflection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn reflect_point(self, p: CartPoint) -> CartPoint {
        p.with_coord(self, -p.coord(self))
    }

    /// The same reflection seen in cylindrical coordinates:
    /// `R₁: φ → π − φ`, `R₂: φ → −φ`, `R₃: z → −z`.
    pub fn reflect_cyl(self, p: CylPoint) -> CylPoint {
        match self {
            Axis::X => CylPoint::new(p.rho, PI - p.phi, p.z),
            Axis::Y => CylPoint::new(p.rho, -p.phi, p.z),
            Axis::Z => CylPoint::new(p.rho, p.phi, -p.z),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        }
    }
}

/// `(Rᵢ f)(p) = f(Rᵢ p)`.
pub fn reflect<F: Fn(CartPoint) -> f64>(axis: Axis, f: F, p: CartPoint) -> f64 {
    f(axis.reflect_point(p))
}

/// `∂f/∂xᵢ` at `p`.
pub fn partial<F: Fn(CartPoint) -> f64>(axis: Axis, f: F, p: CartPoint, fd: &FiniteDiff) -> f64 {
    fd.first(|t| f(p.with_coord(axis, t)), p.coord(axis))
}

fn check_off_plane(axis: Axis, p: CartPoint, margin: f64) -> Result<()> {
    let c = p.coord(axis);
    if c.abs() < margin {
        return Err(Error::SingularPoint {
            coordinate: axis.name(),
            value: c,
            margin,
        });
    }
    Ok(())
}

pub(crate) fn dunkl_derivative_raw<F: Fn(CartPoint) -> f64>(
    axis: Axis,
    params: &DunklParams,
    f: &F,
    p: CartPoint,
    fd: &FiniteDiff,
) -> f64 {
    let xi = p.coord(axis);
    partial(axis, f, p, fd) + params.mu(axis) / xi * (f(p) - f(axis.reflect_point(p)))
}

/// `Dᵢ f(p) = ∂ᵢ f(p) + (μᵢ/xᵢ)(f(p) − f(Rᵢ p))`.
pub fn dunkl_derivative<F: Fn(CartPoint) -> f64>(
    axis: Axis,
    params: &DunklParams,
    f: F,
    p: CartPoint,
    fd: &FiniteDiff,
) -> Result<f64> {
    check_off_plane(axis, p, fd.exclusion())?;
    Ok(dunkl_derivative_raw(axis, params, &f, p, fd))
}

/// The Dunkl Laplacian `∇²_D f = Σᵢ Dᵢ² f`.
pub fn dunkl_laplacian<F: Fn(CartPoint) -> f64>(
    params: &DunklParams,
    f: F,
    p: CartPoint,
    fd: &FiniteDiff,
) -> Result<f64> {
    let margin = fd.exclusion() + 2.0 * fd.step;
    let mut total = 0.0;
    for axis in Axis::ALL {
        check_off_plane(axis, p, margin)?;
        let inner = |q: CartPoint| dunkl_derivative_raw(axis, params, &f, q, fd);
        total += dunkl_derivative_raw(axis, params, &inner, p, fd);
    }
    Ok(total)
}

/// `C_z f = −½ (f'' + (2μ₃/z) f' − (μ₃/z²)(f(z) − f(−z)))`.
pub fn apply_cz<F: Fn(f64) -> f64>(params: &DunklParams, f: F, z: f64, fd: &FiniteDiff) -> Result<f64> {
    finite("z", z)?;
    if z.abs() < fd.exclusion() {
        return Err(Error::SingularPoint {
            coordinate: "z",
            value: z,
            margin: fd.exclusion(),
        });
    }
    let mu3 = params.mu3;
    let d1 = fd.first(&f, z);
    let d2 = fd.second(&f, z);
    Ok(-0.5 * (d2 + 2.0 * mu3 / z * d1 - mu3 / (z * z) * (f(z) - f(-z))))
}

/// `A_ρ f = −½ (f'' + ((1 + 2μ₁ + 2μ₂)/ρ) f')`.
pub fn apply_arho<F: Fn(f64) -> f64>(params: &DunklParams, f: F, rho: f64, fd: &FiniteDiff) -> Result<f64> {
    finite("rho", rho)?;
    if rho < fd.exclusion() {
        return Err(Error::SingularPoint {
            coordinate: "rho",
            value: rho,
            margin: fd.exclusion(),
        });
    }
    let d1 = fd.first(&f, rho);
    let d2 = fd.second(&f, rho);
    Ok(-0.5 * (d2 + (1.0 + 2.0 * params.planar_sum()) / rho * d1))
}

/// Distance from `phi` to the nearest multiple of `π/2`.
pub fn distance_to_axes(phi: f64) -> f64 {
    let r = phi.rem_euclid(FRAC_PI_2);
    r.min(FRAC_PI_2 - r)
}

pub(crate) fn check_angle(phi: f64, margin: f64) -> Result<()> {
    finite("phi", phi)?;
    if distance_to_axes(phi) < margin {
        return Err(Error::SingularPoint {
            coordinate: "phi",
            value: phi,
            margin,
        });
    }
    Ok(())
}

pub(crate) fn apply_bphi_raw<F: Fn(f64) -> f64>(params: &DunklParams, f: &F, phi: f64, fd: &FiniteDiff) -> f64 {
    let (s, c) = phi.sin_cos();
    let d1 = fd.first(f, phi);
    let d2 = fd.second(f, phi);
    let v = f(phi);
    -0.5 * d2
        + (params.mu1 * s / c - params.mu2 * c / s) * d1
        + params.mu1 * (v - f(PI - phi)) / (2.0 * c * c)
        + params.mu2 * (v - f(-phi)) / (2.0 * s * s)
}

/// `B_φ f = −½ f'' + (μ₁ tan φ − μ₂ cot φ) f' + μ₁(1−R₁)f/(2cos²φ) + μ₂(1−R₂)f/(2sin²φ)`,
/// with `R₁: φ → π − φ` and `R₂: φ → −φ`.
pub fn apply_bphi<F: Fn(f64) -> f64>(params: &DunklParams, f: F, phi: f64, fd: &FiniteDiff) -> Result<f64> {
    check_angle(phi, fd.exclusion())?;
    Ok(apply_bphi_raw(params, &f, phi, fd))
}

/// `−(x D₂ − y D₁)² f`, the square of `L_z = −i(x D₂ − y D₁)`.
pub fn lz_squared<F: Fn(CartPoint) -> f64>(params: &DunklParams, f: F, p: CartPoint, fd: &FiniteDiff) -> Result<f64> {
    let margin = fd.exclusion() + 2.0 * fd.step;
    check_off_plane(Axis::X, p, margin)?;
    check_off_plane(Axis::Y, p, margin)?;
    let rot = |g: &dyn Fn(CartPoint) -> f64, q: CartPoint| {
        q.x * dunkl_derivative_raw(Axis::Y, params, &g, q, fd) - q.y * dunkl_derivative_raw(Axis::X, params, &g, q, fd)
    };
    let once = |q: CartPoint| rot(&f, q);
    Ok(-rot(&once, p))
}

/// `|[xᵢ, Dᵢ] f + (1 + 2μᵢ Rᵢ) f|` at `p`.
///
/// On functions even in `xᵢ` this coincides with `[xᵢ, Dᵢ] = −(1 + 2μᵢ) Rᵢ`;
/// on odd functions only the form with `Rᵢ` inside the bracket holds.
pub fn xd_commutator_residual<F: Fn(CartPoint) -> f64>(
    axis: Axis,
    params: &DunklParams,
    f: F,
    p: CartPoint,
    fd: &FiniteDiff,
) -> Result<f64> {
    check_off_plane(axis, p, fd.exclusion())?;
    let xf = |q: CartPoint| q.coord(axis) * f(q);
    let commutator =
        p.coord(axis) * dunkl_derivative_raw(axis, params, &f, p, fd) - dunkl_derivative_raw(axis, params, &xf, p, fd);
    Ok((commutator + f(p) + 2.0 * params.mu(axis) * reflect(axis, &f, p)).abs())
}

/// `|[Dᵢ, Dⱼ] f|` at `p`.
pub fn dd_commutator_residual<F: Fn(CartPoint) -> f64>(
    a: Axis,
    b: Axis,
    params: &DunklParams,
    f: F,
    p: CartPoint,
    fd: &FiniteDiff,
) -> Result<f64> {
    let margin = fd.exclusion() + 2.0 * fd.step;
    check_off_plane(a, p, margin)?;
    check_off_plane(b, p, margin)?;
    let db = |q: CartPoint| dunkl_derivative_raw(b, params, &f, q, fd);
    let da = |q: CartPoint| dunkl_derivative_raw(a, params, &f, q, fd);
    let ab = dunkl_derivative_raw(a, params, &db, p, fd);
    let ba = dunkl_derivative_raw(b, params, &da, p, fd);
    Ok((ab - ba).abs())
}

/// The reflection-algebra relations checked numerically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Identity {
    /// `Rᵢ² = 1`
    Involution(Axis),
    /// `∂ᵢ Rᵢ = −Rᵢ ∂ᵢ`
    PartialAnticommutes(Axis),
    /// `Rᵢ xᵢ = −xᵢ Rᵢ`
    CoordinateAnticommutes(Axis),
    /// `Rᵢ Dᵢ = −Dᵢ Rᵢ`
    DunklAnticommutes(Axis),
    /// `Rᵢ Rⱼ = Rⱼ Rᵢ`
    ReflectionsCommute(Axis, Axis),
    /// `∂ᵢ Rⱼ = Rⱼ ∂ᵢ`, `i ≠ j`
    PartialCommutes(Axis, Axis),
    /// `Rᵢ Dⱼ = Dⱼ Rᵢ`, `i ≠ j`
    DunklCommutes(Axis, Axis),
    /// `[Dᵢ, Dⱼ] = 0`
    DunklDerivativesCommute(Axis, Axis),
    /// `[xᵢ, Dᵢ] = −(1 + 2μᵢ Rᵢ)`
    CoordinateCommutator(Axis),
}

impl Identity {
    /// Every relation over every axis or ordered pair of distinct axes.
    pub fn all() -> Vec<Identity> {
        let mut out = Vec::new();
        for a in Axis::ALL {
            out.push(Identity::Involution(a));
            out.push(Identity::PartialAnticommutes(a));
            out.push(Identity::CoordinateAnticommutes(a));
            out.push(Identity::DunklAnticommutes(a));
            out.push(Identity::CoordinateCommutator(a));
        }
        for a in Axis::ALL {
            for b in Axis::ALL {
                if a < b {
                    out.push(Identity::ReflectionsCommute(a, b));
                    out.push(Identity::PartialCommutes(a, b));
                    out.push(Identity::PartialCommutes(b, a));
                    out.push(Identity::DunklCommutes(a, b));
                    out.push(Identity::DunklCommutes(b, a));
                    out.push(Identity::DunklDerivativesCommute(a, b));
                }
            }
        }
        out
    }

    pub fn label(&self) -> String {
        match self {
            Identity::Involution(a) => format!("R{0}R{0}=1", a.name()),
            Identity::PartialAnticommutes(a) => format!("d{0}R{0}=-R{0}d{0}", a.name()),
            Identity::CoordinateAnticommutes(a) => format!("R{0}{0}=-{0}R{0}", a.name()),
            Identity::DunklAnticommutes(a) => format!("R{0}D{0}=-D{0}R{0}", a.name()),
            Identity::ReflectionsCommute(a, b) => format!("R{}R{}=R{}R{}", a.name(), b.name(), b.name(), a.name()),
            Identity::PartialCommutes(a, b) => format!("d{}R{}=R{}d{}", a.name(), b.name(), b.name(), a.name()),
            Identity::DunklCommutes(a, b) => format!("R{}D{}=D{}R{}", a.name(), b.name(), b.name(), a.name()),
            Identity::DunklDerivativesCommute(a, b) => format!("[D{},D{}]=0", a.name(), b.name()),
            Identity::CoordinateCommutator(a) => format!("[{0},D{0}]=-(1+2mu R{0})", a.name()),
        }
    }

    /// Whether the check nests two derivatives (looser tolerance class).
    pub fn is_second_order(&self) -> bool {
        matches!(self, Identity::DunklDerivativesCommute(..))
    }

    /// Absolute residual of the relation applied to `f` at `p`.
    pub fn residual<F: Fn(CartPoint) -> f64>(
        &self,
        params: &DunklParams,
        f: F,
        p: CartPoint,
        fd: &FiniteDiff,
    ) -> Result<f64> {
        let r = |axis: Axis, g: &dyn Fn(CartPoint) -> f64, q: CartPoint| g(axis.reflect_point(q));
        match *self {
            Identity::Involution(a) => {
                let rf = |q: CartPoint| r(a, &f, q);
                Ok((r(a, &rf, p) - f(p)).abs())
            }
            Identity::PartialAnticommutes(a) => {
                let rf = |q: CartPoint| r(a, &f, q);
                let df = |q: CartPoint| partial(a, &f, q, fd);
                Ok((partial(a, rf, p, fd) + r(a, &df, p)).abs())
            }
            Identity::CoordinateAnticommutes(a) => {
                let xf = |q: CartPoint| q.coord(a) * f(q);
                Ok((r(a, &xf, p) + p.coord(a) * r(a, &f, p)).abs())
            }
            Identity::DunklAnticommutes(a) => {
                check_off_plane(a, p, fd.exclusion())?;
                let rf = |q: CartPoint| r(a, &f, q);
                let df = |q: CartPoint| dunkl_derivative_raw(a, params, &f, q, fd);
                Ok((r(a, &df, p) + dunkl_derivative_raw(a, params, &rf, p, fd)).abs())
            }
            Identity::ReflectionsCommute(a, b) => {
                let ra = |q: CartPoint| r(a, &f, q);
                let rb = |q: CartPoint| r(b, &f, q);
                Ok((r(a, &rb, p) - r(b, &ra, p)).abs())
            }
            Identity::PartialCommutes(a, b) => {
                let rb = |q: CartPoint| r(b, &f, q);
                let da = |q: CartPoint| partial(a, &f, q, fd);
                Ok((partial(a, rb, p, fd) - r(b, &da, p)).abs())
            }
            Identity::DunklCommutes(a, b) => {
                check_off_plane(b, p, fd.exclusion())?;
                let ra = |q: CartPoint| r(a, &f, q);
                let db = |q: CartPoint| dunkl_derivative_raw(b, params, &f, q, fd);
                Ok((r(a, &db, p) - dunkl_derivative_raw(b, params, &ra, p, fd)).abs())
            }
            Identity::DunklDerivativesCommute(a, b) => dd_commutator_residual(a, b, params, f, p, fd),
            Identity::CoordinateCommutator(a) => xd_commutator_residual(a, params, f, p, fd),
        }
    }
}

/// Version of the fixed test-function battery; bump when the list changes.
pub const BATTERY_VERSION: u32 = 1;

/// A named scalar test function on `ℝ³`.
#[derive(Clone, Copy)]
pub struct TestFunction {
    pub name: &'static str,
    pub f: fn(CartPoint) -> f64,
}

impl std::fmt::Debug for TestFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TestFunction").field("name", &self.name).finish()
    }
}

/// Monomials up to degree four and Gaussian-type functions.
pub fn test_battery() -> Vec<TestFunction> {
    vec![
        TestFunction { name: "1", f: |_| 1.0 },
        TestFunction { name: "x", f: |p| p.x },
        TestFunction { name: "y", f: |p| p.y },
        TestFunction { name: "z", f: |p| p.z },
        TestFunction {
            name: "x^2",
            f: |p| p.x * p.x,
        },
        TestFunction {
            name: "xy",
            f: |p| p.x * p.y,
        },
        TestFunction {
            name: "x^2y",
            f: |p| p.x * p.x * p.y,
        },
        TestFunction {
            name: "xyz",
            f: |p| p.x * p.y * p.z,
        },
        TestFunction {
            name: "x^3y",
            f: |p| p.x.powi(3) * p.y,
        },
        TestFunction {
            name: "x^2y^2",
            f: |p| p.x * p.x * p.y * p.y,
        },
        TestFunction {
            name: "yz^3",
            f: |p| p.y * p.z.powi(3),
        },
        TestFunction {
            name: "x^4",
            f: |p| p.x.powi(4),
        },
        TestFunction {
            name: "exp(-r^2)",
            f: |p| (-(p.x * p.x + p.y * p.y + p.z * p.z)).exp(),
        },
        TestFunction {
            name: "x exp(-r^2)",
            f: |p| p.x * (-(p.x * p.x + p.y * p.y + p.z * p.z)).exp(),
        },
        TestFunction {
            name: "(x+y^2+z^3) exp(-r^2/2)",
            f: |p| (p.x + p.y * p.y + p.z.powi(3)) * (-0.5 * (p.x * p.x + p.y * p.y + p.z * p.z)).exp(),
        },
    ]
}
