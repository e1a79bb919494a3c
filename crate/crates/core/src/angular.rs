//! Angular eigenfunctions of `B_φ`.
//!
//! For reflection eigenvalues `(r₁, r₂) = (1 − 2e₁, 1 − 2e₂)` the
//! eigenfunctions are
//!
//! ```text
//! Φ_ℓ^(e₁,e₂)(φ) = η cos^e₁ φ sin^e₂ φ P_k^(μ₁−1/2+e₁, μ₂−1/2+e₂)(−cos 2φ),   k = ℓ − (e₁+e₂)/2
//! ```
//!
//! with eigenvalue `s²/2`, `s² = 4ℓ(ℓ + μ₁ + μ₂)`. `ℓ` is carried as the
//! integer `2ℓ` so that sector bookkeeping never touches floating point.
//!
//! The normalization follows from Jacobi orthogonality under the weight
//! `|cos φ|^(2μ₁) |sin φ|^(2μ₂)` on `[0, 2π)`:
//!
//! ```text
//! η² = ((2ℓ+μ₁+μ₂)/2) · k! · Γ(ℓ+μ₁+μ₂+(e₁+e₂)/2) / (Γ(ℓ+μ₁+(1+e₁−e₂)/2) Γ(ℓ+μ₂+(1+e₂−e₁)/2))
//! ```
//!
//! [`linear_eta`] is the variant with the linear factor `k` in place of
//! `k!`; the two agree for `k ∈ {1, 2}` only.

use std::f64::consts::{FRAC_PI_4, PI};

use serde::{Deserialize, Serialize};

use crate::diff::FiniteDiff;
use crate::dunkl::{apply_bphi_raw, check_angle, lz_squared, CartPoint, DunklParams};
use crate::error::{Error, Result};
use crate::parity::Parity;
use crate::quadrature::{graded_rule, integrate_graded};
use crate::specfun::{effective_jacobi_degree, jacobi_unchecked, log_gamma};

/// Reflection sector `(e₁, e₂)` of the `x`–`y` plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AngularSector {
    e1: u8,
    e2: u8,
}

/// Which values `ℓ` runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EllSeries {
    /// `ℓ = 0, 1, 2, …`
    Integer,
    /// `ℓ = 1/2, 3/2, 5/2, …`
    HalfOdd,
}

impl AngularSector {
    /// Table order: `(0,0), (1,1), (0,1), (1,0)`.
    pub const ALL: [AngularSector; 4] = [
        AngularSector { e1: 0, e2: 0 },
        AngularSector { e1: 1, e2: 1 },
        AngularSector { e1: 0, e2: 1 },
        AngularSector { e1: 1, e2: 0 },
    ];

    pub fn new(e1: u8, e2: u8) -> Result<Self> {
        if e1 > 1 || e2 > 1 {
            return Err(Error::Input(format!("sector indices must be 0 or 1, got ({e1},{e2})")));
        }
        Ok(Self { e1, e2 })
    }

    pub fn from_parities(r1: Parity, r2: Parity) -> Self {
        let e = |r: Parity| if r == Parity::Even { 0 } else { 1 };
        Self { e1: e(r1), e2: e(r2) }
    }

    pub fn e1(&self) -> u8 {
        self.e1
    }

    pub fn e2(&self) -> u8 {
        self.e2
    }

    pub fn r1(&self) -> Parity {
        if self.e1 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn r2(&self) -> Parity {
        if self.e2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn product(&self) -> Parity {
        self.r1() * self.r2()
    }

    pub fn ell_series(&self) -> EllSeries {
        match self.product() {
            Parity::Even => EllSeries::Integer,
            Parity::Odd => EllSeries::HalfOdd,
        }
    }

    /// Smallest `2ℓ` with a nonnegative Jacobi degree.
    pub fn lowest_twoell(&self) -> u32 {
        (self.e1 + self.e2) as u32
    }
}

/// One row of the sector classification.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SectorClass {
    pub sector: AngularSector,
    pub r1: Parity,
    pub r2: Parity,
    pub product: Parity,
    pub ell: EllSeries,
    pub lowest_twoell: u32,
}

/// The four reflection sectors with their parities and `ℓ` ranges.
pub fn classify_sectors() -> [SectorClass; 4] {
    AngularSector::ALL.map(|sector| SectorClass {
        sector,
        r1: sector.r1(),
        r2: sector.r2(),
        product: sector.product(),
        ell: sector.ell_series(),
        lowest_twoell: sector.lowest_twoell(),
    })
}

/// An angular mode `(sector, 2ℓ)` whose Jacobi degree is a nonnegative
/// integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AngularMode {
    sector: AngularSector,
    twoell: u32,
}

impl AngularMode {
    pub fn new(sector: AngularSector, twoell: u32) -> Result<Self> {
        effective_jacobi_degree(twoell, sector.e1, sector.e2)?;
        Ok(Self { sector, twoell })
    }

    /// The mode of Jacobi degree `k` in `sector`.
    pub fn with_degree(sector: AngularSector, k: u32) -> Self {
        Self {
            sector,
            twoell: 2 * k + sector.lowest_twoell(),
        }
    }

    pub fn sector(&self) -> AngularSector {
        self.sector
    }

    pub fn twoell(&self) -> u32 {
        self.twoell
    }

    pub fn ell(&self) -> f64 {
        0.5 * self.twoell as f64
    }

    /// `k = ℓ − (e₁+e₂)/2`.
    pub fn degree(&self) -> u32 {
        (self.twoell - self.sector.lowest_twoell()) / 2
    }

    fn jacobi_params(&self, params: &DunklParams) -> (f64, f64) {
        (
            params.mu1() - 0.5 + self.sector.e1 as f64,
            params.mu2() - 0.5 + self.sector.e2 as f64,
        )
    }
}

/// `s² = 4ℓ(ℓ + μ₁ + μ₂)`, written as `2ℓ (2ℓ + 2(μ₁+μ₂))`.
pub fn s_squared(params: &DunklParams, twoell: u32) -> f64 {
    let t = twoell as f64;
    t * (t + 2.0 * params.planar_sum())
}

/// Normalization constant `η` (positive), evaluated in log space.
pub fn eta(params: &DunklParams, mode: &AngularMode) -> Result<f64> {
    let ell = mode.ell();
    let m_sum = params.planar_sum();
    let (e1, e2) = (mode.sector.e1 as f64, mode.sector.e2 as f64);
    let k = mode.degree() as f64;
    // (2ℓ+M)/2 · Γ(ℓ+M+(e₁+e₂)/2) → Γ(M+1)/2 at ℓ = 0, where both factors
    // may be singular separately.
    let lead = if mode.twoell == 0 {
        log_gamma(m_sum + 1.0)? - std::f64::consts::LN_2
    } else {
        (0.5 * (2.0 * ell + m_sum)).ln() + log_gamma(ell + m_sum + 0.5 * (e1 + e2))?
    };
    let log_eta_sq = lead + log_gamma(k + 1.0)?
        - log_gamma(ell + params.mu1() + 0.5 * (1.0 + e1 - e2))?
        - log_gamma(ell + params.mu2() + 0.5 * (1.0 + e2 - e1))?;
    Ok((0.5 * log_eta_sq).exp())
}

/// The normalization with the linear factor `(ℓ − (e₁+e₂)/2)` under the
/// square root. Its radicand vanishes on the lowest mode of every sector,
/// which is reported rather than returned as zero.
pub fn linear_eta(params: &DunklParams, mode: &AngularMode) -> Result<f64> {
    let ell = mode.ell();
    let m_sum = params.planar_sum();
    let (e1, e2) = (mode.sector.e1 as f64, mode.sector.e2 as f64);
    let radicand = 0.5 * (2.0 * ell + m_sum) * (ell - 0.5 * (e1 + e2));
    if radicand <= 0.0 {
        return Err(Error::NormalizationUndefined {
            twoell: mode.twoell,
            e1: mode.sector.e1,
            e2: mode.sector.e2,
            radicand,
        });
    }
    let log_ratio = log_gamma(ell + m_sum + 0.5 * (e1 + e2))?
        - log_gamma(ell + params.mu1() + 0.5 * (1.0 + e1 - e2))?
        - log_gamma(ell + params.mu2() + 0.5 * (1.0 + e2 - e1))?;
    Ok((0.5 * (radicand.ln() + log_ratio)).exp())
}

/// `Φ` without its normalization constant.
fn phi_shape(params: &DunklParams, mode: &AngularMode, phi: f64) -> f64 {
    let (s, c) = phi.sin_cos();
    shape_cs(params, mode, c, s)
}

fn shape_cs(params: &DunklParams, mode: &AngularMode, c: f64, s: f64) -> f64 {
    let (a, b) = mode.jacobi_params(params);
    let mut v = jacobi_unchecked(mode.degree(), a, b, s * s - c * c);
    if mode.sector.e1 == 1 {
        v *= c;
    }
    if mode.sector.e2 == 1 {
        v *= s;
    }
    v
}

/// A normalized angular eigenfunction with its constant precomputed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularEigenfunction {
    params: DunklParams,
    mode: AngularMode,
    eta: f64,
}

impl AngularEigenfunction {
    pub fn new(params: &DunklParams, mode: AngularMode) -> Result<Self> {
        Ok(Self {
            params: *params,
            mode,
            eta: eta(params, &mode)?,
        })
    }

    pub fn mode(&self) -> AngularMode {
        self.mode
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    /// `s²/2`, the eigenvalue of `B_φ`.
    pub fn eigenvalue(&self) -> f64 {
        0.5 * s_squared(&self.params, self.mode.twoell)
    }

    pub fn value(&self, phi: f64) -> f64 {
        self.eta * phi_shape(&self.params, &self.mode, phi)
    }
}

/// `Φ_ℓ^(e₁,e₂)(φ)`.
pub fn phi_eigenfunction(params: &DunklParams, mode: &AngularMode, phi: f64) -> Result<f64> {
    Ok(eta(params, mode)? * phi_shape(params, mode, phi))
}

/// Tolerance handed to the quadrature for overlap integrals.
pub const OVERLAP_QUADRATURE_TOL: f64 = 1e-13;

/// Integrates `f(cos φ, sin φ)` against the weight over `[0, 2π)`. The
/// circle is cut into eighths, each parametrized by its distance `u` from
/// the nearest axis so that `cos φ`, `sin φ` keep full relative precision
/// where the weight is singular.
fn weighted_integral<F: Fn(f64, f64) -> f64>(params: &DunklParams, f: F) -> Result<f64> {
    let (two_mu1, two_mu2) = (2.0 * params.mu1(), 2.0 * params.mu2());
    let weighted = |c: f64, s: f64| f(c, s) * c.abs().powf(two_mu1) * s.abs().powf(two_mu2);
    let mut total = 0.0;
    for quarter in 0..4u8 {
        // (cos, sin) of quarter·π/2 + θ from (cos θ, sin θ).
        let rotate = move |c: f64, s: f64| match quarter {
            0 => (c, s),
            1 => (-s, c),
            2 => (-c, -s),
            _ => (s, -c),
        };
        let rising = |u: f64| {
            let (c, s) = rotate(u.cos(), u.sin());
            weighted(c, s)
        };
        // θ = π/2 − u
        let falling = |u: f64| {
            let (c, s) = rotate(u.sin(), u.cos());
            weighted(c, s)
        };
        total += integrate_graded(rising, 0.0, FRAC_PI_4, OVERLAP_QUADRATURE_TOL)?.value;
        total += integrate_graded(falling, 0.0, FRAC_PI_4, OVERLAP_QUADRATURE_TOL)?.value;
    }
    Ok(total)
}

/// `∫₀^{2π} Φ_a Φ_b |cos φ|^(2μ₁) |sin φ|^(2μ₂) dφ`.
pub fn angular_overlap(params: &DunklParams, a: &AngularMode, b: &AngularMode) -> Result<f64> {
    let fa = AngularEigenfunction::new(params, *a)?;
    let fb = AngularEigenfunction::new(params, *b)?;
    weighted_integral(params, |c, s| {
        fa.eta * fb.eta * shape_cs(params, a, c, s) * shape_cs(params, b, c, s)
    })
}

/// `(cos φ, sin φ, weight)` triples of a composite rule on the circle, built
/// from eighths as in [`weighted_integral`].
fn circle_rule(points: usize, levels: u32) -> Vec<(f64, f64, f64)> {
    let (nodes, weights) = graded_rule(0.0, FRAC_PI_4, points, levels);
    let mut out = Vec::with_capacity(8 * nodes.len());
    for quarter in 0..4u8 {
        let rotate = |c: f64, s: f64| match quarter {
            0 => (c, s),
            1 => (-s, c),
            2 => (-c, -s),
            _ => (s, -c),
        };
        for (&u, &w) in nodes.iter().zip(&weights) {
            let (su, cu) = u.sin_cos();
            let (c, s) = rotate(cu, su);
            out.push((c, s, w));
            let (c, s) = rotate(su, cu);
            out.push((c, s, w));
        }
    }
    out
}

/// Overlap matrix of the first `count` modes of a sector.
#[derive(Debug, Clone, PartialEq)]
pub struct OverlapMatrix {
    pub modes: Vec<AngularMode>,
    pub values: Vec<Vec<f64>>,
    /// Largest entry change between two rule resolutions.
    pub error_estimate: f64,
}

impl OverlapMatrix {
    /// `max |O − I|` entrywise.
    pub fn identity_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (i, row) in self.values.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let want = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((v - want).abs());
            }
        }
        worst
    }
}

/// `⟨Φ_i, Φ_j⟩` for the modes of degree `0..count` in `sector`, with every
/// mode evaluated once per quadrature node.
pub fn overlap_matrix(params: &DunklParams, sector: AngularSector, count: u32) -> Result<OverlapMatrix> {
    let modes: Vec<AngularMode> = (0..count).map(|k| AngularMode::with_degree(sector, k)).collect();
    let etas = modes.iter().map(|m| eta(params, m)).collect::<Result<Vec<_>>>()?;
    let (two_mu1, two_mu2) = (2.0 * params.mu1(), 2.0 * params.mu2());
    let assemble = |rule: &[(f64, f64, f64)]| {
        let n = modes.len();
        let mut acc = vec![vec![0.0; n]; n];
        let mut vals = vec![0.0; n];
        for &(c, s, w) in rule {
            let weight = w * c.abs().powf(two_mu1) * s.abs().powf(two_mu2);
            for (v, (mode, e)) in vals.iter_mut().zip(modes.iter().zip(&etas)) {
                *v = e * shape_cs(params, mode, c, s);
            }
            for i in 0..n {
                for j in i..n {
                    acc[i][j] += weight * vals[i] * vals[j];
                }
            }
        }
        #[allow(clippy::needless_range_loop)]
        for i in 0..n {
            for j in 0..i {
                acc[i][j] = acc[j][i];
            }
        }
        acc
    };
    // The innermost panel of width ~0.2^L carries a share ~0.2^(L(1+2μ)) of a
    // |u|^(2μ) endpoint; pick L so that this falls below the target.
    let exponent = 1.0 + 2.0 * params.mu1().min(params.mu2()).min(0.0);
    let levels = |digits: f64| ((digits / (5f64.log10() * exponent)).ceil() as u32 + 4).min(420);
    let coarse = assemble(&circle_rule(40, levels(13.0)));
    let values = assemble(&circle_rule(56, levels(16.0)));
    let error_estimate = coarse
        .iter()
        .flatten()
        .zip(values.iter().flatten())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    Ok(OverlapMatrix {
        modes,
        values,
        error_estimate,
    })
}

/// Normalization obtained by quadrature instead of the closed form.
pub fn numerical_eta(params: &DunklParams, mode: &AngularMode) -> Result<f64> {
    let norm = weighted_integral(params, |c, s| shape_cs(params, mode, c, s).powi(2))?;
    Ok(1.0 / norm.sqrt())
}

/// `|B_φ Φ − (s²/2) Φ|` at `phi`.
pub fn bphi_residual(params: &DunklParams, mode: &AngularMode, phi: f64, fd: &FiniteDiff) -> Result<f64> {
    check_angle(phi, fd.exclusion())?;
    let f = AngularEigenfunction::new(params, *mode)?;
    let applied = apply_bphi_raw(params, &|p: f64| f.value(p), phi, fd);
    Ok((applied - f.eigenvalue() * f.value(phi)).abs())
}

/// `|L_z² Φ − (2 B_φ Φ + 2μ₁μ₂ (Φ − R₁R₂ Φ))|` at `phi`, with `L_z²`
/// evaluated from Cartesian Dunkl derivatives on the unit circle.
pub fn lz_identity_residual(params: &DunklParams, mode: &AngularMode, phi: f64, fd: &FiniteDiff) -> Result<f64> {
    let margin = fd.exclusion() + 2.0 * fd.step;
    check_angle(phi, margin)?;
    let f = AngularEigenfunction::new(params, *mode)?;
    let planar = |p: CartPoint| f.value(p.y.atan2(p.x));
    let (s, c) = phi.sin_cos();
    let lz2 = lz_squared(params, planar, CartPoint::new(c, s, 0.0), fd)?;
    let bphi = apply_bphi_raw(params, &|p: f64| f.value(p), phi, fd);
    // R₁R₂: φ → π + φ
    let rhs = 2.0 * bphi + 2.0 * params.mu1() * params.mu2() * (f.value(phi) - f.value(phi + PI));
    Ok((lz2 - rhs).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(a: f64, b: f64) -> DunklParams {
        DunklParams::new(a, b, 0.5).unwrap()
    }

    #[test]
    fn table_of_sectors() {
        let rows = classify_sectors();
        assert_eq!(rows[0].sector, AngularSector::new(0, 0).unwrap());
        assert_eq!((rows[0].r1, rows[0].r2), (Parity::Even, Parity::Even));
        assert_eq!(rows[0].ell, EllSeries::Integer);
        let row10 = rows
            .iter()
            .find(|r| r.sector == AngularSector::new(1, 0).unwrap())
            .unwrap();
        assert_eq!((row10.r1, row10.r2), (Parity::Odd, Parity::Even));
        assert_eq!(row10.ell, EllSeries::HalfOdd);
        let products: Vec<i8> = rows.iter().map(|r| r.product.sign()).collect();
        assert_eq!(products, vec![1, 1, -1, -1]);
    }

    #[test]
    fn mode_validation() {
        let s11 = AngularSector::new(1, 1).unwrap();
        assert!(AngularMode::new(s11, 0).is_err());
        assert!(AngularMode::new(s11, 2).is_ok());
        let s01 = AngularSector::new(0, 1).unwrap();
        assert!(AngularMode::new(s01, 2).is_err());
        assert_eq!(AngularMode::new(s01, 5).unwrap().degree(), 2);
        assert_eq!(AngularMode::with_degree(s11, 3).twoell(), 8);
    }

    #[test]
    fn s_squared_examples() {
        assert_eq!(s_squared(&params(0.4, 0.2), 0), 0.0);
        assert_eq!(s_squared(&params(1.0, 1.0), 2), 12.0);
        assert!((s_squared(&params(0.3, 0.7), 1) - 3.0).abs() < 1e-15);
        assert_eq!(s_squared(&params(0.3, 1.1), 5), s_squared(&params(1.1, 0.3), 5));
    }

    #[test]
    fn eta_matches_quadrature() {
        for &(m1, m2) in &[(0.0, 0.0), (0.3, 1.2), (1.7, 0.45), (-0.3, 0.8)] {
            let p = params(m1, m2);
            for sector in AngularSector::ALL {
                for k in 0..5 {
                    let mode = AngularMode::with_degree(sector, k);
                    let closed = eta(&p, &mode).unwrap();
                    let numeric = numerical_eta(&p, &mode).unwrap();
                    assert!(closed > 0.0);
                    assert!(
                        ((closed - numeric) / numeric).abs() < 1e-9,
                        "{m1},{m2} {sector:?} k={k}: {closed} vs {numeric}"
                    );
                }
            }
        }
    }

    #[test]
    fn eta_free_cosine_mode() {
        // μ = 0, sector (0,0), ℓ = 1: Φ ∝ P₁^(−½,−½)(−cos 2φ) ∝ cos 2φ, so η·P
        // must equal ±cos(2φ)/√π.
        let p = params(0.0, 0.0);
        let mode = AngularMode::new(AngularSector::new(0, 0).unwrap(), 2).unwrap();
        let v = phi_eigenfunction(&p, &mode, 0.3).unwrap();
        assert!((v.abs() - (0.6f64).cos() / PI.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn linear_normalization_agrees_only_for_degrees_one_and_two() {
        let p = params(0.6, 0.9);
        for sector in AngularSector::ALL {
            let lowest = AngularMode::with_degree(sector, 0);
            assert!(matches!(
                linear_eta(&p, &lowest),
                Err(Error::NormalizationUndefined { .. })
            ));
            for k in 1..=2 {
                let mode = AngularMode::with_degree(sector, k);
                let a = linear_eta(&p, &mode).unwrap();
                let b = eta(&p, &mode).unwrap();
                assert!(((a - b) / b).abs() < 1e-13);
            }
            let mode = AngularMode::with_degree(sector, 3);
            let ratio = eta(&p, &mode).unwrap() / linear_eta(&p, &mode).unwrap();
            assert!((ratio - 2f64.sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn ground_mode_is_constant() {
        let p = params(0.7, 0.2);
        let mode = AngularMode::new(AngularSector::new(0, 0).unwrap(), 0).unwrap();
        let a = phi_eigenfunction(&p, &mode, 0.3).unwrap();
        let b = phi_eigenfunction(&p, &mode, 2.9).unwrap();
        assert!((a - b).abs() < 1e-15);
    }

    #[test]
    fn reflection_parities() {
        let p = params(0.55, 1.35);
        for sector in AngularSector::ALL {
            let f = AngularEigenfunction::new(&p, AngularMode::with_degree(sector, 2)).unwrap();
            for i in 0..50 {
                let phi = 0.123 + i as f64 * 0.1237;
                let v = f.value(phi);
                let r1 = f.value(PI - phi);
                let r2 = f.value(-phi);
                assert!((r1 - sector.r1().factor() * v).abs() <= 1e-12 * v.abs().max(1e-3));
                assert!((r2 - sector.r2().factor() * v).abs() <= 1e-12 * v.abs().max(1e-3));
            }
        }
    }

    #[test]
    fn bphi_eigenvalue() {
        let fd = FiniteDiff::high_order();
        let p = params(0.8, 1.4);
        for sector in AngularSector::ALL {
            for k in 0..4 {
                let mode = AngularMode::with_degree(sector, k);
                for &phi in &[0.3, 1.1, 2.0, 4.0, 5.5] {
                    let r = bphi_residual(&p, &mode, phi, &fd).unwrap();
                    assert!(r < 1e-6, "{sector:?} k={k} phi={phi}: {r}");
                }
            }
        }
    }

    #[test]
    fn overlaps() {
        let p = params(0.35, 1.6);
        let a = AngularMode::with_degree(AngularSector::new(0, 1).unwrap(), 1);
        let b = AngularMode::with_degree(AngularSector::new(0, 1).unwrap(), 3);
        let c = AngularMode::with_degree(AngularSector::new(1, 1).unwrap(), 1);
        assert!((angular_overlap(&p, &a, &a).unwrap() - 1.0).abs() < 1e-8);
        assert!(angular_overlap(&p, &a, &b).unwrap().abs() < 1e-8);
        assert!(angular_overlap(&p, &a, &c).unwrap().abs() < 1e-8);
    }

    #[test]
    fn overlap_matrices_are_identity() {
        for &(m1, m2) in &[(0.35, 1.6), (1.9, 0.05), (-0.4, 0.0)] {
            let p = params(m1, m2);
            for sector in AngularSector::ALL {
                let o = overlap_matrix(&p, sector, 8).unwrap();
                assert!(
                    o.identity_defect() < 1e-8,
                    "{m1},{m2} {sector:?}: {}",
                    o.identity_defect()
                );
                assert!(o.error_estimate < 1e-10);
            }
        }
    }

    #[test]
    fn lz_identity() {
        let fd = FiniteDiff::high_order();
        for &(m1, m2) in &[(0.0, 0.0), (0.4, 1.3), (1.1, 0.25)] {
            let p = params(m1, m2);
            for sector in AngularSector::ALL {
                for k in 0..3 {
                    let mode = AngularMode::with_degree(sector, k);
                    let r = lz_identity_residual(&p, &mode, 0.9, &fd).unwrap();
                    assert!(r < 1e-5, "{m1},{m2} {sector:?} k={k}: {r}");
                }
            }
        }
    }
}
