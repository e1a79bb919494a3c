//! Total energies and full wavefunctions for the eight reflection classes
//! `(r₁, r₂, r₃)`.
//!
//! Each class belongs to one row of the classification; a row pairs
//! `(r₁, r₂, r₃)` with `(−r₁, −r₂, r₃)` and fixes the parities of `N` and
//! `M`:
//!
//! | classes                       | `N`  | `M`  | `ℓ`      |
//! |-------------------------------|------|------|----------|
//! | `(1,1,1)`, `(−1,−1,1)`        | even | even | integer  |
//! | `(1,1,−1)`, `(−1,−1,−1)`      | odd  | odd  | integer  |
//! | `(1,−1,1)`, `(−1,1,1)`        | even | odd  | half-odd |
//! | `(1,−1,−1)`, `(−1,1,−1)`      | odd  | even | half-odd |
//!
//! In every row `m = 0, 1, 2, …` and `N ≥ M`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::angular::{AngularEigenfunction, AngularMode, AngularSector};
use crate::diff::FiniteDiff;
use crate::dunkl::{apply_arho, apply_bphi, apply_cz, dunkl_laplacian, CartPoint, CylPoint, DunklParams};
use crate::error::{Error, Result};
use crate::parity::Parity;
use crate::states::{
    axial_free, axial_state, radial_from_indices, AxialIndex, AxialState, CylinderGeometry, RadialState,
};

/// Reflection eigenvalues `(r₁, r₂, r₃)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ParityTriple {
    pub r1: Parity,
    pub r2: Parity,
    pub r3: Parity,
}

/// One row of the classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassRow {
    /// 1-based row number.
    pub row: u8,
    pub n_parity: Parity,
    pub m_parity: Parity,
    /// Parity of `2ℓ`: even for integer `ℓ`.
    pub twoell_parity: Parity,
}

impl ParityTriple {
    pub const fn new(r1: Parity, r2: Parity, r3: Parity) -> Self {
        Self { r1, r2, r3 }
    }

    pub fn from_signs(r1: i64, r2: i64, r3: i64) -> Result<Self> {
        Ok(Self::new(
            Parity::from_sign(r1)?,
            Parity::from_sign(r2)?,
            Parity::from_sign(r3)?,
        ))
    }

    /// All eight classes in row order.
    pub fn all() -> [ParityTriple; 8] {
        use Parity::{Even as P, Odd as O};
        [
            Self::new(P, P, P),
            Self::new(O, O, P),
            Self::new(P, P, O),
            Self::new(O, O, O),
            Self::new(P, O, P),
            Self::new(O, P, P),
            Self::new(P, O, O),
            Self::new(O, P, O),
        ]
    }

    /// `(−r₁, −r₂, r₃)`.
    pub fn partner(&self) -> Self {
        Self::new(self.r1 * Parity::Odd, self.r2 * Parity::Odd, self.r3)
    }

    pub fn sector(&self) -> AngularSector {
        AngularSector::from_parities(self.r1, self.r2)
    }

    pub fn row(&self) -> ClassRow {
        use Parity::{Even, Odd};
        let (row, n_parity, m_parity) = match (self.r1 * self.r2, self.r3) {
            (Even, Even) => (1, Even, Even),
            (Even, Odd) => (2, Odd, Odd),
            (Odd, Even) => (3, Even, Odd),
            (Odd, Odd) => (4, Odd, Even),
        };
        ClassRow {
            row,
            n_parity,
            m_parity,
            twoell_parity: self.r1 * self.r2,
        }
    }
}

impl fmt::Display for ParityTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.r1, self.r2, self.r3)
    }
}

/// Quantum numbers of a state. `N`, `M` and `2ℓ` are stored separately so
/// that inconsistent combinations can be reported rather than unrepresentable.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StateLabel {
    pub parity: ParityTriple,
    pub twoell: u32,
    pub n_cap: u32,
    pub m_cap: u32,
    pub m: u32,
    pub n: u32,
    pub axial: AxialIndex,
}

impl StateLabel {
    /// Label with `2ℓ = N − M`, finite height.
    pub fn finite(parity: ParityTriple, n_cap: u32, m_cap: u32, m: u32, n: u32, n_prime: u32) -> Self {
        Self {
            parity,
            twoell: n_cap.saturating_sub(m_cap),
            n_cap,
            m_cap,
            m,
            n,
            axial: AxialIndex::NPrime(n_prime),
        }
    }

    /// Label with `2ℓ = N − M`, infinite height.
    pub fn infinite(parity: ParityTriple, n_cap: u32, m_cap: u32, m: u32, n: u32, k: f64) -> Self {
        Self {
            axial: AxialIndex::Wavenumber(k),
            ..Self::finite(parity, n_cap, m_cap, m, n, 1)
        }
    }

    /// Total order used for tie-breaking.
    pub fn cmp_lex(&self, other: &Self) -> Ordering {
        let key = |l: &Self| (l.parity, l.twoell, l.n_cap, l.m_cap, l.m, l.n);
        key(self)
            .cmp(&key(other))
            .then_with(|| match (self.axial, other.axial) {
                (AxialIndex::NPrime(a), AxialIndex::NPrime(b)) => a.cmp(&b),
                (AxialIndex::Wavenumber(a), AxialIndex::Wavenumber(b)) => a.total_cmp(&b),
                (AxialIndex::NPrime(_), AxialIndex::Wavenumber(_)) => Ordering::Less,
                (AxialIndex::Wavenumber(_), AxialIndex::NPrime(_)) => Ordering::Greater,
            })
    }

    /// Whether an angular eigenfunction exists for `(r₁, r₂, 2ℓ)`. Fails only
    /// for sector `(1,1)` at `ℓ = 0`, which the classification still lists.
    pub fn has_angular_mode(&self) -> bool {
        AngularMode::new(self.parity.sector(), self.twoell).is_ok()
    }
}

/// Outcome of [`admissible`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Admissibility {
    pub violations: Vec<String>,
}

impl Admissibility {
    pub fn is_admissible(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if self.violations.is_empty() {
            Ok(())
        } else {
            Err(Error::Inadmissible(self.violations))
        }
    }
}

fn parity_name(p: Parity) -> &'static str {
    match p {
        Parity::Even => "even",
        Parity::Odd => "odd",
    }
}

/// Checks a label against the row of its parity class.
pub fn admissible(label: &StateLabel) -> Admissibility {
    let row = label.parity.row();
    let mut violations = Vec::new();
    let class = label.parity;
    if Parity::of_power(label.n_cap as i64) != row.n_parity {
        violations.push(format!(
            "class {class} requires {} N, got N = {}",
            parity_name(row.n_parity),
            label.n_cap
        ));
    }
    if Parity::of_power(label.m_cap as i64) != row.m_parity {
        violations.push(format!(
            "class {class} requires {} M, got M = {}",
            parity_name(row.m_parity),
            label.m_cap
        ));
    }
    if Parity::of_power(label.twoell as i64) != row.twoell_parity {
        let want = match row.twoell_parity {
            Parity::Even => "integer",
            Parity::Odd => "half-odd",
        };
        violations.push(format!("class {class} requires {want} l, got 2l = {}", label.twoell));
    }
    if label.n_cap < label.m_cap {
        violations.push(format!("N = {} is below M = {}", label.n_cap, label.m_cap));
    } else if label.n_cap - label.m_cap != label.twoell {
        violations.push(format!(
            "N - M = {} differs from 2l = {}",
            label.n_cap - label.m_cap,
            label.twoell
        ));
    }
    if label.n == 0 {
        violations.push("radial index n starts at 1".into());
    }
    match label.axial {
        AxialIndex::NPrime(0) => violations.push("axial index n' starts at 1".into()),
        AxialIndex::Wavenumber(k) if !(k > 0.0 && k.is_finite()) => {
            violations.push(format!("wavenumber must be positive, got {k}"))
        }
        _ => {}
    }
    Admissibility { violations }
}

/// Energy of a labelled state split into radial and axial parts.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnergyLevel {
    pub label: StateLabel,
    pub e_radial: f64,
    pub e_axial: f64,
    pub e_total: f64,
}

fn factors(geom: &CylinderGeometry, label: &StateLabel) -> Result<(RadialState, AxialState)> {
    admissible(label).into_result()?;
    let radial = radial_from_indices(geom, label.n_cap, label.m_cap, label.n)?;
    let axial = match (label.axial, geom.is_finite()) {
        (AxialIndex::NPrime(np), true) => axial_state(geom, label.parity.r3, label.m, np)?,
        (AxialIndex::Wavenumber(k), false) => axial_free(label.parity.r3, label.m, k)?,
        (AxialIndex::NPrime(_), false) => {
            return Err(Error::Inadmissible(vec![
                "infinite geometry needs a wavenumber, not n'".into(),
            ]))
        }
        (AxialIndex::Wavenumber(_), true) => {
            return Err(Error::Inadmissible(vec![
                "finite geometry needs n', not a wavenumber".into()
            ]))
        }
    };
    Ok((radial, axial))
}

/// `ε = Ω²_(N,n)/(2R_c²) + ε_z` for an admissible label.
pub fn total_energy(geom: &CylinderGeometry, label: &StateLabel) -> Result<EnergyLevel> {
    let (radial, axial) = factors(geom, label)?;
    let (e_radial, e_axial) = (radial.energy(), axial.energy());
    Ok(EnergyLevel {
        label: *label,
        e_radial,
        e_axial,
        e_total: e_radial + e_axial,
    })
}

/// `Θ(ρ, z) = R(ρ) ψ(z)` for an admissible label.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Wavefunction {
    label: StateLabel,
    radial: RadialState,
    axial: AxialState,
}

pub fn full_wavefunction(geom: &CylinderGeometry, label: &StateLabel) -> Result<Wavefunction> {
    let (radial, axial) = factors(geom, label)?;
    Ok(Wavefunction {
        label: *label,
        radial,
        axial,
    })
}

impl Wavefunction {
    pub fn label(&self) -> &StateLabel {
        &self.label
    }

    pub fn radial(&self) -> &RadialState {
        &self.radial
    }

    pub fn axial(&self) -> &AxialState {
        &self.axial
    }

    pub fn energy(&self) -> f64 {
        self.radial.energy() + self.axial.energy()
    }

    pub fn theta(&self, rho: f64, z: f64) -> f64 {
        self.radial.value(rho) * self.axial.value(z)
    }

    /// Attaches the angular factor; `μ₂ = M − μ₁`, `μ₃ = m + 1/2`.
    pub fn with_angular(&self, mu1: f64) -> Result<Wavefunction3d> {
        let params = DunklParams::quantized(mu1, self.label.m_cap, self.label.m)?;
        let mode = AngularMode::new(self.label.parity.sector(), self.label.twoell)?;
        Ok(Wavefunction3d {
            theta: *self,
            params,
            angular: AngularEigenfunction::new(&params, mode)?,
        })
    }
}

/// `R(ρ) Φ(φ) ψ(z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Wavefunction3d {
    theta: Wavefunction,
    params: DunklParams,
    angular: AngularEigenfunction,
}

impl Wavefunction3d {
    pub fn params(&self) -> &DunklParams {
        &self.params
    }

    pub fn energy(&self) -> f64 {
        self.theta.energy()
    }

    pub fn value(&self, p: CylPoint) -> f64 {
        self.theta.theta(p.rho, p.z) * self.angular.value(p.phi)
    }

    pub fn value_cart(&self, p: CartPoint) -> f64 {
        let rho = p.x.hypot(p.y);
        self.theta.theta(rho, p.z) * self.angular.value(p.y.atan2(p.x))
    }

    /// `|(A_ρ + B_φ/ρ² + C_z)Ψ − εΨ|`.
    pub fn cylindrical_residual(&self, p: CylPoint, fd: &FiniteDiff) -> Result<f64> {
        let (rho, phi, z) = (p.rho, p.phi, p.z);
        let at = |r: f64, a: f64, h: f64| self.value(CylPoint { rho: r, phi: a, z: h });
        let a = apply_arho(&self.params, |r| at(r, phi, z), rho, fd)?;
        let b = apply_bphi(&self.params, |a| at(rho, a, z), phi, fd)? / (rho * rho);
        let c = apply_cz(&self.params, |h| at(rho, phi, h), z, fd)?;
        Ok((a + b + c - self.energy() * at(rho, phi, z)).abs())
    }

    /// `|−½ Σᵢ Dᵢ² Ψ − εΨ|` with Cartesian Dunkl derivatives.
    pub fn cartesian_residual(&self, p: CartPoint, fd: &FiniteDiff) -> Result<f64> {
        let lap = dunkl_laplacian(&self.params, |q| self.value_cart(q), p, fd)?;
        Ok((-0.5 * lap - self.energy() * self.value_cart(p)).abs())
    }
}

/// Upper bounds for [`enumerate_levels`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub max_n_cap: u32,
    pub max_m: u32,
    pub max_n: u32,
    pub max_n_prime: u32,
}

impl Bounds {
    pub fn validate(&self) -> Result<()> {
        if self.max_n == 0 || self.max_n_prime == 0 {
            return Err(Error::Input("index bounds n and n' must be at least 1".into()));
        }
        Ok(())
    }
}

/// Ascending by `e_total`, ties broken by [`StateLabel::cmp_lex`].
pub fn sort_levels(levels: &mut [EnergyLevel]) {
    levels.sort_by(|a, b| a.e_total.total_cmp(&b.e_total).then_with(|| a.label.cmp_lex(&b.label)));
}

/// Every admissible level of the selected classes within `bounds`
/// (`N ≤ max_n_cap`, `m ≤ max_m`, `n ≤ max_n`, `n′ ≤ max_n_prime`), sorted.
/// For infinite height `k_grid` replaces `n′`.
pub fn enumerate_levels(
    geom: &CylinderGeometry,
    classes: &[ParityTriple],
    bounds: &Bounds,
    k_grid: &[f64],
) -> Result<Vec<EnergyLevel>> {
    bounds.validate()?;
    if !geom.is_finite() && k_grid.is_empty() {
        return Err(Error::Input("infinite geometry needs a non-empty k grid".into()));
    }
    let mut levels = Vec::new();
    for &class in classes {
        let row = class.row();
        for m_cap in 0..=bounds.max_n_cap {
            if Parity::of_power(m_cap as i64) != row.m_parity {
                continue;
            }
            for n_cap in m_cap..=bounds.max_n_cap {
                if Parity::of_power(n_cap as i64) != row.n_parity {
                    continue;
                }
                for m in 0..=bounds.max_m {
                    for n in 1..=bounds.max_n {
                        if geom.is_finite() {
                            for np in 1..=bounds.max_n_prime {
                                let label = StateLabel::finite(class, n_cap, m_cap, m, n, np);
                                levels.push(total_energy(geom, &label)?);
                            }
                        } else {
                            for &k in k_grid {
                                let label = StateLabel::infinite(class, n_cap, m_cap, m, n, k);
                                levels.push(total_energy(geom, &label)?);
                            }
                        }
                    }
                }
            }
        }
    }
    sort_levels(&mut levels);
    Ok(levels)
}

/// Relative width of a degeneracy group.
pub const DEGENERACY_TOL: f64 = 1e-12;

/// Groups consecutive levels (of a sorted list) whose energies differ from
/// the group's first by less than `1e-12 · max(1, ε)`.
pub fn degeneracies(levels: &[EnergyLevel]) -> Vec<Vec<EnergyLevel>> {
    let mut groups: Vec<Vec<EnergyLevel>> = Vec::new();
    for level in levels {
        match groups.last_mut() {
            Some(g) if (level.e_total - g[0].e_total).abs() < DEGENERACY_TOL * g[0].e_total.abs().max(1.0) => {
                g.push(*level)
            }
            _ => groups.push(vec![*level]),
        }
    }
    groups
}

/// Data sets behind the energy and wavefunction figures.
pub mod figures {
    use serde::Serialize;

    use super::*;
    use crate::states::{axial_even, axial_odd};

    pub const R_C: f64 = 10.0;
    pub const H: f64 = 15.0;
    pub const ORDERS: [u32; 3] = [1, 3, 5];
    pub const MAX_INDEX: u32 = 5;

    /// `(N, M, n)` for the radial curves, panels (a) and (b).
    pub const RADIAL_EVEN: [(u32, u32, u32); 3] = [(2, 0, 5), (4, 2, 4), (6, 2, 3)];
    pub const RADIAL_ODD: [(u32, u32, u32); 3] = [(1, 0, 1), (3, 2, 3), (5, 4, 5)];
    /// `(m, n′)` for the axial curves, panels (a) and (b).
    pub const AXIAL_EVEN: [(u32, u32); 3] = [(2, 2), (3, 3), (4, 4)];
    pub const AXIAL_ODD: [(u32, u32); 3] = [(1, 3), (2, 4), (4, 5)];

    /// One point of an energy series.
    #[derive(Debug, Clone, Copy, PartialEq, Serialize)]
    pub struct EnergyPoint {
        /// `N` (radial) or `m` (axial).
        pub order: u32,
        /// `n` or `n′`.
        pub index: u32,
        pub energy: f64,
    }

    /// `ε_ρ` for `N ∈ {1,3,5}`, `n = 1..5`, `R_c = 10`. Ordered by `(N, n)`.
    pub fn radial_energies(r_c: f64) -> Result<Vec<EnergyPoint>> {
        let geom = CylinderGeometry::finite(r_c, 1.0)?;
        let mut out = Vec::new();
        for big_n in ORDERS {
            for n in 1..=MAX_INDEX {
                // The radial energy depends on N only; M = 0 or 1 keeps N ≥ M.
                let state = radial_from_indices(&geom, big_n, big_n % 2, n)?;
                out.push(EnergyPoint {
                    order: big_n,
                    index: n,
                    energy: state.energy(),
                });
            }
        }
        Ok(out)
    }

    /// `ε_z±` for `m ∈ {1,3,5}`, `n′ = 1..5`, `H = 15`. Ordered by `(m, n′)`.
    pub fn axial_energies(h: f64, parity: Parity) -> Result<Vec<EnergyPoint>> {
        let geom = CylinderGeometry::finite(1.0, h)?;
        let mut out = Vec::new();
        for m in ORDERS {
            for np in 1..=MAX_INDEX {
                out.push(EnergyPoint {
                    order: m,
                    index: np,
                    energy: axial_state(&geom, parity, m, np)?.energy(),
                });
            }
        }
        Ok(out)
    }

    /// A sampled curve.
    #[derive(Debug, Clone, PartialEq, Serialize)]
    pub struct Curve {
        pub name: String,
        pub points: Vec<(f64, f64)>,
    }

    fn grid(a: f64, b: f64, count: usize) -> impl Iterator<Item = f64> {
        let step = (b - a) / (count - 1) as f64;
        (0..count).map(move |i| if i + 1 == count { b } else { a + step * i as f64 })
    }

    /// `R(ρ)` on `[0, R_c]` for the given `(N, M, n)`.
    pub fn radial_curve(r_c: f64, (big_n, big_m, n): (u32, u32, u32), samples: usize) -> Result<Curve> {
        let geom = CylinderGeometry::finite(r_c, 1.0)?;
        let state = radial_from_indices(&geom, big_n, big_m, n)?;
        Ok(Curve {
            name: format!("radial_N{big_n}_M{big_m}_n{n}"),
            points: grid(0.0, r_c, samples.max(2)).map(|r| (r, state.value(r))).collect(),
        })
    }

    /// `ψ±(z)` on `[−H, H]` for the given `(m, n′)`.
    pub fn axial_curve(h: f64, parity: Parity, (m, np): (u32, u32), samples: usize) -> Result<Curve> {
        let geom = CylinderGeometry::finite(1.0, h)?;
        let (state, tag) = match parity {
            Parity::Even => (axial_even(&geom, m, np)?, "even"),
            Parity::Odd => (axial_odd(&geom, m, np)?, "odd"),
        };
        Ok(Curve {
            name: format!("axial_{tag}_m{m}_np{np}"),
            points: grid(-h, h, samples.max(2)).map(|z| (z, state.value(z))).collect(),
        })
    }
}
