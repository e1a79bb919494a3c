//! Axial and radial factors of the separated eigenfunctions.
//!
//! Axial: `ψ⁺(z) = z^(−m) J_m(κz)`, `ψ⁻(z) = z^(−m) J_(m+1)(κz)` with
//! `m = μ₃ − 1/2` and `κ = ω/H` (finite height) or `κ = k` (infinite height).
//! Radial: `R(ρ) = ρ^(−M) J_N(Ωρ/R_c)` with `M = μ₁ + μ₂`, `N = 2ℓ + M`.
//!
//! Samplers go through [`scaled_bessel`], so `z = 0` and `ρ = 0` are
//! ordinary points and negative arguments carry the parity sign.

use serde::{Deserialize, Serialize};

use crate::diff::FiniteDiff;
use crate::dunkl::{apply_arho, apply_cz, DunklParams};
use crate::error::{finite, Error, Result};
use crate::parity::Parity;
use crate::quadrature::integrate_graded;
use crate::specfun::{bessel_zero, scaled_bessel, BesselOrder};

/// Tolerance used by the optional numerical normalization.
pub const NORMALIZATION_TOL: f64 = 1e-12;

/// Axial extent of the cylinder.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Height {
    /// `−H ≤ z ≤ H` with hard walls.
    Finite { h_half: f64 },
    /// Free motion along `z`.
    Infinite,
}

/// A cylinder of radius `R_c` with finite or infinite height.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CylinderGeometry {
    r_c: f64,
    height: Height,
}

fn positive(name: &str, x: f64) -> Result<f64> {
    finite(name, x)?;
    if x <= 0.0 {
        return Err(Error::Input(format!("{name} must be positive, got {x}")));
    }
    Ok(x)
}

impl CylinderGeometry {
    pub fn finite(r_c: f64, h_half: f64) -> Result<Self> {
        Ok(Self {
            r_c: positive("R_c", r_c)?,
            height: Height::Finite {
                h_half: positive("H", h_half)?,
            },
        })
    }

    pub fn infinite(r_c: f64) -> Result<Self> {
        Ok(Self {
            r_c: positive("R_c", r_c)?,
            height: Height::Infinite,
        })
    }

    pub fn r_c(&self) -> f64 {
        self.r_c
    }

    pub fn height(&self) -> Height {
        self.height
    }

    /// `H`, or `None` for infinite height.
    pub fn h_half(&self) -> Option<f64> {
        match self.height {
            Height::Finite { h_half } => Some(h_half),
            Height::Infinite => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.h_half().is_some()
    }

    fn require_finite(&self) -> Result<f64> {
        self.h_half()
            .ok_or_else(|| Error::Input("finite-height geometry required".into()))
    }
}

/// Quantum number of an axial state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AxialIndex {
    /// Zero index `n′` (finite height).
    NPrime(u32),
    /// Wavenumber `k > 0` (infinite height).
    Wavenumber(f64),
}

/// Axial factor `ψ±` with its energy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AxialState {
    parity: Parity,
    m: f64,
    index: AxialIndex,
    kappa: f64,
    energy: f64,
    norm: f64,
}

impl AxialState {
    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// `m = μ₃ − 1/2`.
    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn mu3(&self) -> f64 {
        self.m + 0.5
    }

    pub fn index(&self) -> AxialIndex {
        self.index
    }

    /// Scale `κ` in `J(κz)`.
    pub fn wavenumber(&self) -> f64 {
        self.kappa
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    /// Multiplicative constant, 1 unless [`AxialState::normalized`] was applied.
    pub fn norm(&self) -> f64 {
        self.norm
    }

    fn order(&self) -> f64 {
        match self.parity {
            Parity::Even => self.m,
            Parity::Odd => self.m + 1.0,
        }
    }

    pub fn value(&self, z: f64) -> f64 {
        let order = BesselOrder::new(self.order()).expect("validated at construction");
        let scaled = scaled_bessel(order, -self.m, self.kappa * z).unwrap_or(f64::NAN);
        self.norm * self.kappa.powf(self.m) * scaled
    }

    /// Rescales so that `∫_{−H}^{H} ψ² |z|^(2μ₃) dz = 1`.
    pub fn normalized(self, geom: &CylinderGeometry) -> Result<Self> {
        let h = geom.require_finite()?;
        let unit = Self { norm: 1.0, ..self };
        let weight = 2.0 * self.mu3();
        let half = integrate_graded(|z| unit.value(z).powi(2) * z.powf(weight), 0.0, h, NORMALIZATION_TOL)?;
        Ok(Self {
            norm: 1.0 / (2.0 * half.value).sqrt(),
            ..self
        })
    }

    /// `|C_z ψ − ε ψ|` at `z`.
    pub fn residual(&self, z: f64, fd: &FiniteDiff) -> Result<f64> {
        let params = DunklParams::new(0.0, 0.0, self.mu3())?;
        let applied = apply_cz(&params, |t| self.value(t), z, fd)?;
        Ok((applied - self.energy * self.value(z)).abs())
    }
}

fn check_m(m: f64) -> Result<f64> {
    finite("m", m)?;
    if m <= -1.0 {
        return Err(Error::Input(format!("m = mu3 - 1/2 must exceed -1, got {m}")));
    }
    Ok(m)
}

fn finite_axial(geom: &CylinderGeometry, parity: Parity, m: f64, n_prime: u32) -> Result<AxialState> {
    let h = geom.require_finite()?;
    let m = check_m(m)?;
    let order = match parity {
        Parity::Even => m,
        Parity::Odd => m + 1.0,
    };
    let omega = bessel_zero(BesselOrder::new(order)?, n_prime)?.value;
    let kappa = omega / h;
    Ok(AxialState {
        parity,
        m,
        index: AxialIndex::NPrime(n_prime),
        kappa,
        energy: omega * omega / (2.0 * h * h),
        norm: 1.0,
    })
}

/// `ψ⁺(z) = z^(−m) J_m(ω_(m,n′) z/H)`, energy `ω²_(m,n′)/(2H²)`.
pub fn axial_even(geom: &CylinderGeometry, m: u32, n_prime: u32) -> Result<AxialState> {
    finite_axial(geom, Parity::Even, m as f64, n_prime)
}

/// `ψ⁻(z) = z^(−m) J_(m+1)(ω_(m+1,n′) z/H)`, energy `ω²_(m+1,n′)/(2H²)`.
pub fn axial_odd(geom: &CylinderGeometry, m: u32, n_prime: u32) -> Result<AxialState> {
    finite_axial(geom, Parity::Odd, m as f64, n_prime)
}

/// Finite-height axial state of either parity.
pub fn axial_state(geom: &CylinderGeometry, parity: Parity, m: u32, n_prime: u32) -> Result<AxialState> {
    finite_axial(geom, parity, m as f64, n_prime)
}

/// Finite-height axial state for an arbitrary `μ₃ > −1/2`.
pub fn axial_unquantized(geom: &CylinderGeometry, parity: Parity, mu3: f64, n_prime: u32) -> Result<AxialState> {
    finite_axial(geom, parity, mu3 - 0.5, n_prime)
}

fn free_axial(parity: Parity, m: f64, k: f64) -> Result<AxialState> {
    let m = check_m(m)?;
    let k = positive("k", k)?;
    Ok(AxialState {
        parity,
        m,
        index: AxialIndex::Wavenumber(k),
        kappa: k,
        energy: 0.5 * k * k,
        norm: 1.0,
    })
}

/// Infinite-height axial state with wavenumber `k > 0`, energy `k²/2`.
pub fn axial_free(parity: Parity, m: u32, k: f64) -> Result<AxialState> {
    free_axial(parity, m as f64, k)
}

/// Infinite-height axial state for an arbitrary `μ₃ > −1/2`.
pub fn axial_free_unquantized(parity: Parity, mu3: f64, k: f64) -> Result<AxialState> {
    free_axial(parity, mu3 - 0.5, k)
}

/// Radial factor `R(ρ) = ρ^(−M) J_N(Ω_(N,n) ρ/R_c)` with its energy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadialState {
    twoell: u32,
    n_cap: f64,
    m_cap: f64,
    n: u32,
    kappa: f64,
    energy: f64,
    norm: f64,
}

impl RadialState {
    pub fn twoell(&self) -> u32 {
        self.twoell
    }

    /// `N = 2ℓ + M`.
    pub fn n_cap(&self) -> f64 {
        self.n_cap
    }

    /// `M = μ₁ + μ₂`.
    pub fn m_cap(&self) -> f64 {
        self.m_cap
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `Ω_(N,n)/R_c`.
    pub fn wavenumber(&self) -> f64 {
        self.kappa
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    pub fn norm(&self) -> f64 {
        self.norm
    }

    /// Parity `(−1)^(N−M)` of the continuation to `ρ < 0`.
    pub fn extended_parity(&self) -> Parity {
        Parity::of_power(self.twoell as i64)
    }

    /// `s² = N² − M² = 4ℓ(ℓ + M)`.
    pub fn s_squared(&self) -> f64 {
        let t = self.twoell as f64;
        t * (t + 2.0 * self.m_cap)
    }

    pub fn value(&self, rho: f64) -> f64 {
        let order = BesselOrder::new(self.n_cap).expect("validated at construction");
        let scaled = scaled_bessel(order, -self.m_cap, self.kappa * rho).unwrap_or(f64::NAN);
        self.norm * self.kappa.powf(self.m_cap) * scaled
    }

    /// Rescales so that `∫₀^(R_c) R² ρ^(1+2M) dρ = 1`.
    pub fn normalized(self, geom: &CylinderGeometry) -> Result<Self> {
        let unit = Self { norm: 1.0, ..self };
        let weight = 1.0 + 2.0 * self.m_cap;
        let q = integrate_graded(
            |r| unit.value(r).powi(2) * r.powf(weight),
            0.0,
            geom.r_c(),
            NORMALIZATION_TOL,
        )?;
        Ok(Self {
            norm: 1.0 / q.value.sqrt(),
            ..self
        })
    }

    /// `|(A_ρ + s²/(2ρ²)) R − ε_ρ R|` at `rho`.
    pub fn residual(&self, rho: f64, fd: &FiniteDiff) -> Result<f64> {
        let half = 0.5 * self.m_cap;
        let params = DunklParams::new(half, half, 0.5)?;
        let r = self.value(rho);
        let applied = apply_arho(&params, |t| self.value(t), rho, fd)? + self.s_squared() / (2.0 * rho * rho) * r;
        Ok((applied - self.energy * r).abs())
    }
}

fn build_radial(geom: &CylinderGeometry, twoell: u32, m_cap: f64, n: u32) -> Result<RadialState> {
    finite("M", m_cap)?;
    if m_cap <= -1.0 {
        return Err(Error::Input(format!("M = mu1 + mu2 must exceed -1, got {m_cap}")));
    }
    let n_cap = twoell as f64 + m_cap;
    let omega = bessel_zero(BesselOrder::new(n_cap)?, n)?.value;
    let kappa = omega / geom.r_c();
    Ok(RadialState {
        twoell,
        n_cap,
        m_cap,
        n,
        kappa,
        energy: 0.5 * kappa * kappa,
        norm: 1.0,
    })
}

/// Radial state of the parity-quantized family from the reflection product
/// `r₁r₂`, `2ℓ` and the Dunkl parameters (`μ₁ + μ₂` must be a nonnegative
/// integer).
pub fn radial_state(
    geom: &CylinderGeometry,
    product: Parity,
    twoell: u32,
    params: &DunklParams,
    n: u32,
) -> Result<RadialState> {
    let m_sum = params.planar_sum();
    let m_cap = m_sum.round();
    if (m_sum - m_cap).abs() > 1e-12 || m_cap < 0.0 {
        return Err(Error::Classification(format!(
            "mu1 + mu2 = {m_sum} is not a nonnegative integer"
        )));
    }
    if Parity::of_power(twoell as i64) != product {
        return Err(Error::Classification(format!(
            "2l = {twoell} is inconsistent with r1 r2 = {product}"
        )));
    }
    build_radial(geom, twoell, m_cap, n)
}

/// Radial state from the composite indices `N ≥ M`.
pub fn radial_from_indices(geom: &CylinderGeometry, n_cap: u32, m_cap: u32, n: u32) -> Result<RadialState> {
    if n_cap < m_cap {
        return Err(Error::Regularity {
            sum: n_cap as f64 - m_cap as f64,
        });
    }
    build_radial(geom, n_cap - m_cap, m_cap as f64, n)
}

/// Radial state for arbitrary `μ₁ + μ₂ > −1`.
pub fn radial_unquantized(geom: &CylinderGeometry, twoell: u32, params: &DunklParams, n: u32) -> Result<RadialState> {
    build_radial(geom, twoell, params.planar_sum(), n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn geom() -> CylinderGeometry {
        CylinderGeometry::finite(10.0, 15.0).unwrap()
    }

    /// Bisection on the plain power series of `J_ν`.
    fn zero_oracle(nu: f64, lo: f64, hi: f64) -> f64 {
        let j = |x: f64| {
            let mut term = (0.5 * x).powf(nu) / libm::tgamma(nu + 1.0);
            let mut sum = term;
            for k in 1..200 {
                let k = k as f64;
                term *= -(0.25 * x * x) / (k * (k + nu));
                sum += term;
            }
            sum
        };
        let (mut a, mut b) = (lo, hi);
        let fa = j(a);
        for _ in 0..200 {
            let m = 0.5 * (a + b);
            if (j(m) < 0.0) == (fa < 0.0) {
                a = m;
            } else {
                b = m;
            }
        }
        0.5 * (a + b)
    }

    #[test]
    fn geometry_validation() {
        assert!(CylinderGeometry::finite(0.0, 1.0).is_err());
        assert!(CylinderGeometry::finite(1.0, -1.0).is_err());
        assert!(CylinderGeometry::infinite(f64::NAN).is_err());
        assert_eq!(CylinderGeometry::infinite(2.0).unwrap().h_half(), None);
    }

    #[test]
    fn axial_energies() {
        let w01 = zero_oracle(0.0, 2.0, 3.0);
        let w11 = zero_oracle(1.0, 3.0, 4.0);
        let even = axial_even(&geom(), 0, 1).unwrap();
        let odd = axial_odd(&geom(), 0, 1).unwrap();
        assert!((even.energy() - w01 * w01 / 450.0).abs() < 1e-14);
        assert!((odd.energy() - w11 * w11 / 450.0).abs() < 1e-14);
        assert!((even.energy() - 0.012_851_524_362_104).abs() < 1e-14);
        assert!((odd.energy() - 0.032_626_601_426_942).abs() < 1e-14);
    }

    #[test]
    fn axial_boundary_and_parity() {
        let g = geom();
        for m in 0..=5 {
            for np in 1..=5 {
                for parity in [Parity::Even, Parity::Odd] {
                    let s = axial_state(&g, parity, m, np).unwrap();
                    assert!(s.value(15.0).abs() <= 1e-10);
                    assert!(s.value(-15.0).abs() <= 1e-10);
                    for i in 0..50 {
                        let z = 0.29 * i as f64 + 0.013;
                        let (a, b) = (s.value(z), s.value(-z));
                        assert!((b - parity.factor() * a).abs() <= 1e-12 * a.abs().max(1e-300));
                    }
                }
            }
        }
        assert_eq!(axial_odd(&g, 2, 1).unwrap().value(0.0), 0.0);
        assert!(axial_even(&g, 2, 1).unwrap().value(0.0) > 0.0);
    }

    #[test]
    fn axial_residuals() {
        let fd = FiniteDiff::high_order();
        let g = geom();
        for m in 0..=5 {
            for np in 1..=3 {
                for parity in [Parity::Even, Parity::Odd] {
                    let s = axial_state(&g, parity, m, np).unwrap();
                    for i in 1..=20 {
                        let z = -15.0 + 30.0 * i as f64 / 21.0;
                        let r = s.residual(z, &fd).unwrap();
                        assert!(r < 1e-5, "m={m} n'={np} {parity:?} z={z}: {r}");
                    }
                }
            }
        }
    }

    #[test]
    fn interlacing() {
        let g = geom();
        for m in 0..=5 {
            for np in 1..=5 {
                let e = axial_even(&g, m, np).unwrap().energy();
                let o = axial_odd(&g, m, np).unwrap().energy();
                let e_next = axial_even(&g, m, np + 1).unwrap().energy();
                assert!(e < o && o < e_next);
            }
        }
    }

    #[test]
    fn free_axial() {
        let s = axial_free(Parity::Even, 0, 1.0).unwrap();
        assert_eq!(s.energy(), 0.5);
        assert!(s.value(zero_oracle(0.0, 2.0, 3.0)).abs() < 1e-9);
        assert!(axial_free(Parity::Odd, 1, 0.0).is_err());
        assert!(axial_free(Parity::Odd, 1, -1.0).is_err());
        let g = geom();
        for m in 0..4 {
            let fin = axial_even(&g, m, 2).unwrap();
            let free = axial_free(Parity::Even, m, fin.wavenumber()).unwrap();
            for i in 0..40 {
                let z = -15.0 + 0.75 * i as f64;
                assert_eq!(fin.value(z), free.value(z));
            }
        }
    }

    #[test]
    fn unquantized_axial() {
        let g = geom();
        let s = axial_unquantized(&g, Parity::Even, 0.2, 1).unwrap();
        assert!((s.m() + 0.3).abs() < 1e-15);
        let w = zero_oracle(-0.3, 1.0, 3.0);
        assert!((s.energy() - w * w / 450.0).abs() < 1e-13);
        assert!((s.value(-3.0) - s.value(3.0)).abs() < 1e-14);
        let fd = FiniteDiff::high_order();
        assert!(s.residual(4.0, &fd).unwrap() < 1e-6);
    }

    #[test]
    fn radial_energy_and_boundary() {
        let g = geom();
        let w11 = zero_oracle(1.0, 3.0, 4.0);
        let params = DunklParams::new(0.3, -0.3, 0.5).unwrap();
        let r = radial_state(&g, Parity::Odd, 1, &params, 1).unwrap();
        assert_eq!(r.n_cap(), 1.0);
        assert!((r.energy() - w11 * w11 / 200.0).abs() < 1e-14);
        assert!((r.energy() - 0.073_409_853_210_619).abs() < 1e-14);
        assert!(r.value(10.0).abs() < 1e-10);
        let ground = radial_from_indices(&g, 0, 0, 1).unwrap();
        assert_eq!(ground.value(0.0), 1.0);
    }

    #[test]
    fn radial_errors() {
        let g = geom();
        let params = DunklParams::new(0.5, 0.5, 0.5).unwrap();
        assert!(matches!(
            radial_state(&g, Parity::Odd, 2, &params, 1),
            Err(Error::Classification(_))
        ));
        let frac = DunklParams::new(0.3, 0.5, 0.5).unwrap();
        assert!(matches!(
            radial_state(&g, Parity::Even, 2, &frac, 1),
            Err(Error::Classification(_))
        ));
        assert!(matches!(
            radial_from_indices(&g, 1, 2, 1),
            Err(Error::Regularity { .. })
        ));
        assert!(radial_unquantized(&g, 2, &frac, 1).is_ok());
    }

    #[test]
    fn radial_residuals_and_parity() {
        let fd = FiniteDiff::high_order();
        let g = geom();
        for big_m in 0..=5u32 {
            for big_n in big_m..=5 {
                for n in 1..=3 {
                    let r = radial_from_indices(&g, big_n, big_m, n).unwrap();
                    assert!(r.value(10.0).abs() < 1e-10);
                    for i in 1..=20 {
                        let rho = 10.0 * i as f64 / 21.0;
                        let res = r.residual(rho, &fd).unwrap();
                        assert!(res < 1e-5, "N={big_n} M={big_m} n={n} rho={rho}: {res}");
                        let (a, b) = (r.value(rho), r.value(-rho));
                        let sign = r.extended_parity().factor();
                        assert!((b - sign * a).abs() <= 1e-12 * a.abs().max(1e-300));
                    }
                }
            }
        }
    }

    #[test]
    fn monotone_in_index() {
        let g = geom();
        for big_n in 0..5 {
            let e: Vec<f64> = (1..=6)
                .map(|n| radial_from_indices(&g, big_n, 0, n).unwrap().energy())
                .collect();
            assert!(e.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn normalization() {
        let g = geom();
        let s = axial_odd(&g, 1, 2).unwrap().normalized(&g).unwrap();
        let w = 2.0 * s.mu3();
        let q = integrate_graded(|z| s.value(z).powi(2) * z.powf(w), 0.0, 15.0, 1e-12).unwrap();
        assert!((2.0 * q.value - 1.0).abs() < 1e-9);
        let r = radial_from_indices(&g, 3, 1, 2).unwrap().normalized(&g).unwrap();
        let q = integrate_graded(|x| r.value(x).powi(2) * x.powi(3), 0.0, 10.0, 1e-12).unwrap();
        assert!((q.value - 1.0).abs() < 1e-9);
        let inf = CylinderGeometry::infinite(10.0).unwrap();
        assert!(axial_free(Parity::Even, 0, 1.0).unwrap().normalized(&inf).is_err());
    }
}
