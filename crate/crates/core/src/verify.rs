//! Named numerical checks grouped into suites, with seeded sampling and
//! JSON-lines / table reporting.
//!
//! Each check evaluates one invariant over a parameter grid and reports the
//! largest residual seen. A check passes iff that residual is at most its
//! tolerance; a check whose evaluation errors is reported as failed with the
//! error message attached.

use std::f64::consts::{PI, TAU};
use std::fmt::Write as _;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::angular::{
    bphi_residual, classify_sectors, eta, lz_identity_residual, numerical_eta, overlap_matrix, s_squared,
    AngularEigenfunction, AngularMode, AngularSector, EllSeries,
};
use crate::diff::FiniteDiff;
use crate::dunkl::{
    apply_bphi, distance_to_axes, lz_squared, test_battery, Axis, CartPoint, CylPoint, DunklParams, Identity,
    BATTERY_VERSION,
};
use crate::error::{Error, Result};
use crate::parity::Parity;
use crate::specfun::{bessel_zero, bessel_zeros, scaled_bessel, BesselOrder};
use crate::spectrum::{
    admissible, enumerate_levels, figures, full_wavefunction, total_energy, Bounds, ParityTriple, StateLabel,
};
use crate::states::{axial_free, axial_state, radial_from_indices, CylinderGeometry};

/// The available suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Algebra,
    Angular,
    Axial,
    Radial,
    Full,
    Figures,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Algebra,
        Suite::Angular,
        Suite::Axial,
        Suite::Radial,
        Suite::Full,
        Suite::Figures,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Angular => "angular",
            Suite::Axial => "axial",
            Suite::Radial => "radial",
            Suite::Full => "full",
            Suite::Figures => "figures",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown suite '{s}'")))
    }
}

/// Tolerances used by every check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Tolerances {
    /// Relations involving one finite-difference derivative.
    pub first_order: f64,
    /// Relations nesting two derivatives.
    pub second_order: f64,
    /// Eigenvalue residuals of `B_φ`, `C_z`, the radial equation and the
    /// full Hamiltonian.
    pub eigen_residual: f64,
    pub orthonormality: f64,
    /// Closed-form normalization against quadrature, relative.
    pub normalization: f64,
    /// Reflection and parity relations, relative.
    pub parity: f64,
    /// Sign law of `x^p J_ν(x)` at negative argument, relative.
    pub parity_law: f64,
    /// `|ψ(±H)|`, `|R(R_c)|`.
    pub boundary: f64,
    /// `e_total = e_radial + e_axial`, relative.
    pub energy_identity: f64,
    /// Counting checks (classification, ordering): number of violations.
    pub exact: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            first_order: 1e-7,
            second_order: 1e-5,
            eigen_residual: 1e-5,
            orthonormality: 1e-8,
            normalization: 1e-9,
            parity: 1e-12,
            parity_law: 1e-13,
            boundary: 1e-10,
            energy_identity: 1e-15,
            exact: 0.0,
        }
    }
}

impl Tolerances {
    pub const KEYS: [&'static str; 10] = [
        "first_order",
        "second_order",
        "eigen_residual",
        "orthonormality",
        "normalization",
        "parity",
        "parity_law",
        "boundary",
        "energy_identity",
        "exact",
    ];

    fn slot(&mut self, key: &str) -> Option<&mut f64> {
        Some(match key {
            "first_order" => &mut self.first_order,
            "second_order" => &mut self.second_order,
            "eigen_residual" => &mut self.eigen_residual,
            "orthonormality" => &mut self.orthonormality,
            "normalization" => &mut self.normalization,
            "parity" => &mut self.parity,
            "parity_law" => &mut self.parity_law,
            "boundary" => &mut self.boundary,
            "energy_identity" => &mut self.energy_identity,
            "exact" => &mut self.exact,
            _ => return None,
        })
    }

    /// Sets one tolerance by key; `finite_difference` sets the three
    /// finite-difference classes at once.
    pub fn set(&mut self, key: &str, value: f64) -> Result<()> {
        if !(value >= 0.0 && value.is_finite()) {
            return Err(Error::Config(format!(
                "tolerance {key} must be a finite nonnegative number"
            )));
        }
        if key == "finite_difference" {
            self.first_order = value;
            self.second_order = value;
            self.eigen_residual = value;
            return Ok(());
        }
        *self
            .slot(key)
            .ok_or_else(|| Error::Config(format!("unknown tolerance '{key}'")))? = value;
        Ok(())
    }
}

/// Inputs of a verification run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct VerifyConfig {
    pub r_c: f64,
    pub h: f64,
    pub seed: u64,
    /// Interior sample points per state.
    pub points: usize,
    /// Random points per battery function.
    pub battery_points: usize,
    /// Random `(μ₁, μ₂)` draws in `(0, 2)` for angular checks.
    pub mu_draws: usize,
    /// Largest `2ℓ` for angular eigenvalue checks.
    pub max_twoell: u32,
    /// Modes per sector in the overlap matrix.
    pub overlap_modes: u32,
    /// Largest `m` and `N` for axial/radial residuals.
    pub max_order: u32,
    /// Largest `n`, `n′` for residuals.
    pub max_index: u32,
    /// Largest `N`, `M`, `m` for the exhaustive classification check.
    pub max_class_index: u32,
    pub tolerances: Tolerances,
    pub fd: FiniteDiff,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            r_c: 10.0,
            h: 15.0,
            seed: 2024,
            points: 20,
            battery_points: 50,
            mu_draws: 3,
            max_twoell: 12,
            overlap_modes: 8,
            max_order: 5,
            max_index: 3,
            max_class_index: 6,
            tolerances: Tolerances::default(),
            fd: FiniteDiff::high_order(),
        }
    }
}

impl VerifyConfig {
    pub fn geometry(&self) -> Result<CylinderGeometry> {
        CylinderGeometry::finite(self.r_c, self.h).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn validate(&self) -> Result<()> {
        self.geometry()?;
        if self.points == 0 || self.battery_points == 0 || self.mu_draws == 0 {
            return Err(Error::Config("sample counts must be at least 1".into()));
        }
        if self.max_index == 0 || self.overlap_modes == 0 {
            return Err(Error::Config("index bounds must be at least 1".into()));
        }
        if !(self.fd.step > 0.0 && self.fd.step.is_finite()) {
            return Err(Error::Config("finite-difference step must be positive".into()));
        }
        Ok(())
    }
}

/// Outcome of one check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub suite: Suite,
    pub name: String,
    pub params: Value,
    pub max_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub points: usize,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Largest residual and number of evaluations.
#[derive(Debug, Clone, Copy, Default)]
struct Acc {
    max: f64,
    points: usize,
}

impl Acc {
    fn push(&mut self, r: f64) {
        self.points += 1;
        // NaN poisons the maximum.
        if r.is_nan() || self.max.is_nan() {
            self.max = f64::NAN;
        } else {
            self.max = self.max.max(r);
        }
    }

    fn count(&mut self, violated: bool) {
        self.push(if violated { 1.0 } else { 0.0 });
    }
}

type Runner = fn(&VerifyConfig, &mut ChaCha8Rng) -> Result<(Acc, Value)>;

struct Check {
    id: &'static str,
    suite: Suite,
    name: &'static str,
    tolerance: fn(&Tolerances) -> f64,
    run: Runner,
}

/// Per-check stream so that results do not depend on which other checks ran.
fn check_rng(seed: u64, id: &str) -> ChaCha8Rng {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in id.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

fn checks() -> Vec<Check> {
    macro_rules! check {
        ($id:literal, $suite:ident, $name:literal, $tol:ident, $run:expr) => {
            Check {
                id: $id,
                suite: Suite::$suite,
                name: $name,
                tolerance: |t| t.$tol,
                run: $run,
            }
        };
    }
    vec![
        check!("algebra.involution", Algebra, "R_i^2 = 1", first_order, |c, r| {
            identity_check(c, r, |i| matches!(i, Identity::Involution(_)))
        }),
        check!(
            "algebra.partial-anticommutes",
            Algebra,
            "d_i R_i = -R_i d_i",
            first_order,
            |c, r| identity_check(c, r, |i| matches!(i, Identity::PartialAnticommutes(_)))
        ),
        check!(
            "algebra.coordinate-anticommutes",
            Algebra,
            "R_i x_i = -x_i R_i",
            first_order,
            |c, r| identity_check(c, r, |i| matches!(i, Identity::CoordinateAnticommutes(_)))
        ),
        check!(
            "algebra.dunkl-anticommutes",
            Algebra,
            "R_i D_i = -D_i R_i",
            first_order,
            |c, r| identity_check(c, r, |i| matches!(i, Identity::DunklAnticommutes(_)))
        ),
        check!(
            "algebra.reflections-commute",
            Algebra,
            "R_i R_j = R_j R_i",
            first_order,
            |c, r| identity_check(c, r, |i| matches!(i, Identity::ReflectionsCommute(..)))
        ),
        check!(
            "algebra.partial-commutes",
            Algebra,
            "d_i R_j = R_j d_i",
            first_order,
            |c, r| identity_check(c, r, |i| matches!(i, Identity::PartialCommutes(..)))
        ),
        check!(
            "algebra.dunkl-commutes",
            Algebra,
            "R_i D_j = D_j R_i",
            first_order,
            |c, r| identity_check(c, r, |i| matches!(i, Identity::DunklCommutes(..)))
        ),
        check!(
            "algebra.dunkl-derivatives-commute",
            Algebra,
            "[D_i, D_j] = 0",
            second_order,
            |c, r| identity_check(c, r, |i| matches!(i, Identity::DunklDerivativesCommute(..)))
        ),
        check!(
            "algebra.coordinate-commutator",
            Algebra,
            "[x_i, D_i] = -(1 + 2 mu_i R_i)",
            first_order,
            |c, r| identity_check(c, r, |i| matches!(i, Identity::CoordinateCommutator(_)))
        ),
        check!(
            "algebra.lz-squared",
            Algebra,
            "L_z^2 = 2 B_phi + 2 mu1 mu2 (1 - R1 R2) on the battery",
            second_order,
            lz_battery
        ),
        check!(
            "algebra.separation",
            Algebra,
            "(A_rho + B_phi/rho^2 + C_z) Psi = E Psi for product states",
            eigen_residual,
            separation
        ),
        check!(
            "angular.sector-table",
            Angular,
            "sector parities and l ranges",
            exact,
            sector_table
        ),
        check!(
            "angular.eigenvalue",
            Angular,
            "B_phi Phi = (s^2/2) Phi",
            eigen_residual,
            angular_eigenvalue
        ),
        check!(
            "angular.reflection-parity",
            Angular,
            "Phi(pi - phi) = r1 Phi, Phi(-phi) = r2 Phi",
            parity,
            angular_parity
        ),
        check!(
            "angular.orthonormality",
            Angular,
            "overlap matrix is the identity",
            orthonormality,
            angular_orthonormality
        ),
        check!(
            "angular.normalization",
            Angular,
            "closed-form eta matches quadrature",
            normalization,
            angular_normalization
        ),
        check!(
            "angular.s-squared-symmetry",
            Angular,
            "s^2 invariant under mu1 <-> mu2",
            exact,
            angular_symmetry
        ),
        check!(
            "angular.lz-identity",
            Angular,
            "L_z^2 Phi = 2 B_phi Phi + 2 mu1 mu2 (Phi - R1 R2 Phi)",
            second_order,
            angular_lz
        ),
        check!(
            "axial.parity-law",
            Axial,
            "x^p J_nu(x) at -x carries (-1)^(p+nu)",
            parity_law,
            parity_law
        ),
        check!("axial.boundary", Axial, "psi(+-H) = 0", boundary, axial_boundary),
        check!(
            "axial.residual",
            Axial,
            "C_z psi = eps_z psi",
            eigen_residual,
            axial_residual
        ),
        check!("axial.parity", Axial, "psi(-z) = +-psi(z)", parity, axial_parity),
        check!(
            "axial.monotonicity",
            Axial,
            "energies increase with n'",
            exact,
            axial_monotonic
        ),
        check!(
            "axial.interlacing",
            Axial,
            "eps+_{m,n'} < eps-_{m,n'} < eps+_{m,n'+1}",
            exact,
            axial_interlacing
        ),
        check!(
            "axial.infinite-limit",
            Axial,
            "free state with k = omega/H equals the finite even state",
            exact,
            axial_infinite_limit
        ),
        check!("radial.boundary", Radial, "R(R_c) = 0", boundary, radial_boundary),
        check!(
            "radial.residual",
            Radial,
            "(A_rho + s^2/(2 rho^2)) R = eps_rho R",
            eigen_residual,
            radial_residual
        ),
        check!(
            "radial.parity",
            Radial,
            "R(-rho) = (-1)^(N-M) R(rho)",
            parity,
            radial_parity
        ),
        check!(
            "radial.monotonicity",
            Radial,
            "energies increase with n",
            exact,
            radial_monotonic
        ),
        check!(
            "full.admissibility",
            Full,
            "classification of all eight classes",
            exact,
            full_admissibility
        ),
        check!(
            "full.energy-identity",
            Full,
            "e_total = e_radial + e_axial",
            energy_identity,
            full_energy_identity
        ),
        check!(
            "full.worked-example",
            Full,
            "(1,-1,-1), N=1, M=0, m=0, n=n'=1 energy",
            energy_identity,
            full_worked_example
        ),
        check!(
            "full.ordering",
            Full,
            "enumeration is admissible, sorted and reproducible",
            exact,
            full_ordering
        ),
        check!(
            "full.pairing",
            Full,
            "(r1,r2,r3) and (-r1,-r2,r3) share spectra",
            exact,
            full_pairing
        ),
        check!(
            "full.wavefunction-parity",
            Full,
            "Theta and Psi carry (r1, r2, r3)",
            parity,
            full_parity
        ),
        check!(
            "full.boundary",
            Full,
            "Theta vanishes on the walls",
            boundary,
            full_boundary
        ),
        check!(
            "full.hamiltonian",
            Full,
            "cylindrical Hamiltonian residual",
            eigen_residual,
            full_hamiltonian
        ),
        check!(
            "full.hamiltonian-cartesian",
            Full,
            "-1/2 sum D_i^2 residual",
            eigen_residual,
            full_hamiltonian_cartesian
        ),
        check!(
            "figures.radial-energies",
            Figures,
            "radial series: 15 values, increasing in n",
            exact,
            figures_radial
        ),
        check!(
            "figures.axial-energies",
            Figures,
            "axial series: 15 values per branch, increasing, interlaced",
            exact,
            figures_axial
        ),
        check!(
            "figures.curves",
            Figures,
            "sampled curves vanish on the walls",
            boundary,
            figures_curves
        ),
    ]
}

/// Ids of every check in `suite`, in run order.
pub fn check_ids(suite: Suite) -> Vec<&'static str> {
    checks()
        .into_iter()
        .filter(|c| c.suite == suite)
        .map(|c| c.id)
        .collect()
}

/// Runs one suite. Configuration errors are returned; failing checks are
/// reported.
pub fn run_suite(suite: Suite, config: &VerifyConfig) -> Result<Vec<CheckReport>> {
    config.validate()?;
    let selected: Vec<Check> = checks().into_iter().filter(|c| c.suite == suite).collect();
    let reports = std::thread::scope(|s| {
        let handles: Vec<_> = selected
            .iter()
            .map(|check| s.spawn(move || execute(check, config)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("check thread panicked"))
            .collect::<Vec<_>>()
    });
    Ok(reports)
}

/// Runs every suite in order.
pub fn run_all(config: &VerifyConfig) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for suite in Suite::ALL {
        out.extend(run_suite(suite, config)?);
    }
    Ok(out)
}

fn execute(check: &Check, config: &VerifyConfig) -> CheckReport {
    let tolerance = (check.tolerance)(&config.tolerances);
    let mut rng = check_rng(config.seed, check.id);
    let (acc, params, error) = match (check.run)(config, &mut rng) {
        Ok((acc, params)) => (acc, params, None),
        Err(e) => (
            Acc {
                max: f64::NAN,
                points: 0,
            },
            Value::Null,
            Some(e.to_string()),
        ),
    };
    CheckReport {
        id: check.id.to_string(),
        suite: check.suite,
        name: check.name.to_string(),
        params,
        max_residual: acc.max,
        tolerance,
        passed: error.is_none() && acc.max <= tolerance,
        points: acc.points,
        seed: config.seed,
        error,
    }
}

/// One JSON object per line.
pub fn to_jsonl(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&serde_json::to_string(r).expect("reports serialize"));
        out.push('\n');
    }
    out
}

/// Fixed-width table with one row per check and a final tally.
pub fn summary_table(reports: &[CheckReport]) -> String {
    let width = reports.iter().map(|r| r.id.len()).max().unwrap_or(2).max(2);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<width$}  {:>6}  {:>12}  {:>9}  {:>7}",
        "id", "status", "max_residual", "tolerance", "points"
    );
    for r in reports {
        let status = if r.passed { "pass" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{:<width$}  {:>6}  {:>12.3e}  {:>9.1e}  {:>7}",
            r.id, status, r.max_residual, r.tolerance, r.points
        );
    }
    let passed = reports.iter().filter(|r| r.passed).count();
    let _ = writeln!(out, "{passed}/{} checks passed", reports.len());
    out
}

/// `true` iff every report passed.
pub fn all_passed(reports: &[CheckReport]) -> bool {
    reports.iter().all(|r| r.passed)
}

// ---- sampling helpers ----

fn random_mu(rng: &mut ChaCha8Rng) -> f64 {
    rng.gen_range(0.0..2.0)
}

/// A point with every coordinate at least `0.2` away from its plane.
fn random_cart(rng: &mut ChaCha8Rng) -> CartPoint {
    let mut c = || {
        let v: f64 = rng.gen_range(0.2..1.5);
        if rng.gen_bool(0.5) {
            -v
        } else {
            v
        }
    };
    CartPoint::new(c(), c(), c())
}

/// An angle at least `margin` from every axis.
fn random_angle(rng: &mut ChaCha8Rng, margin: f64) -> f64 {
    loop {
        let phi = rng.gen_range(0.0..TAU);
        if distance_to_axes(phi) >= margin {
            return phi;
        }
    }
}

fn angle_margin(fd: &FiniteDiff) -> f64 {
    (fd.exclusion() + 2.0 * fd.step).max(0.05)
}

fn interior(rng: &mut ChaCha8Rng, lo: f64, hi: f64, avoid_zero: f64) -> f64 {
    loop {
        let v = rng.gen_range(lo..hi);
        if v.abs() >= avoid_zero {
            return v;
        }
    }
}

fn relative(a: f64, b: f64, floor: f64) -> f64 {
    (a - b).abs() / a.abs().max(floor)
}

// ---- algebra ----

fn identity_check(c: &VerifyConfig, rng: &mut ChaCha8Rng, select: fn(&Identity) -> bool) -> Result<(Acc, Value)> {
    let params = DunklParams::new(random_mu(rng), random_mu(rng), random_mu(rng))?;
    let identities: Vec<Identity> = Identity::all().into_iter().filter(select).collect();
    let mut acc = Acc::default();
    for tf in test_battery() {
        for _ in 0..c.battery_points {
            let p = random_cart(rng);
            for id in &identities {
                acc.push(id.residual(&params, tf.f, p, &c.fd)?);
            }
        }
    }
    let labels: Vec<String> = identities.iter().map(Identity::label).collect();
    Ok((
        acc,
        json!({"mu": [params.mu1(), params.mu2(), params.mu3()], "identities": labels, "battery_version": BATTERY_VERSION}),
    ))
}

fn lz_battery(c: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<(Acc, Value)> {
    let params = DunklParams::new(random_mu(rng), random_mu(rng), 0.5)?;
    let margin = angle_margin(&c.fd);
    let mut acc = Acc::default();
    for tf in test_battery() {
        for _ in 0..c.battery_points {
            let rho = rng.gen_range(0.5..1.5);
            let phi = random_angle(rng, margin);
            let z = rng.gen_range(-1.0..1.0);
            let at = |a: f64| (tf.f)(CartPoint::from(CylPoint::new(rho, a, z)));
            let lhs = lz_squared(&params, tf.f, CartPoint::from(CylPoint::new(rho, phi, z)), &c.fd)?;
            let b = apply_bphi(&params, at, phi, &c.fd)?;
            let rhs = 2.0 * b + 2.0 * params.mu1() * params.mu2() * (at(phi) - at(phi + PI));
            acc.push((lhs - rhs).abs());
        }
    }
    Ok((
        acc,
        json!({"mu": [params.mu1(), params.mu2()], "battery_version": BATTERY_VERSION}),
    ))
}

fn separation(c: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<(Acc, Value)> {
    let geom = c.geometry()?;
    let mut acc = Acc::default();
    let mut labels = Vec::new();
    for class in ParityTriple::all() {
        let row = class.row();
        let m_cap = if row.m_parity == Parity::Even { 0 } else { 1 };
        let twoell = class.sector().lowest_twoell() + 2;
        let label = StateLabel::finite(class, m_cap + twoell, m_cap, rng.gen_range(0..3), 1, 1);
        if admissible(&label).is_admissible() {
            labels.push(label);
        }
    }
    let margin = angle_margin(&c.fd);
    for label in &labels {
        let psi = full_wavefunction(&geom, label)?.with_angular(rng.gen_range(0.0..=label.m_cap as f64))?;
        for _ in 0..c.points {
            let p = CylPoint::new(
                rng.gen_range(0.3..c.r_c - 0.3),
                random_angle(rng, margin),
                interior(rng, -c.h + 0.3, c.h - 0.3, 0.3),
            );
            acc.push(psi.cylindrical_residual(p, &c.fd)?);
        }
    }
    Ok((acc, json!({"states": labels.len()})))
}

// ---- angular ----

fn sector_table(_: &VerifyConfig, _: &mut ChaCha8Rng) -> Result<(Acc, Value)> {
    let mut acc = Acc::default();
    // (e1, e2) -> (r1, r2, integer l?, lowest 2l)
    let expected = [
        ((0, 0), (1, 1, true, 0)),
        ((1, 1), (-1, -1, true, 2)),
        ((0, 1), (1, -1, false, 1)),
        ((1, 0), (-1, 1, false, 1)),
    ];
    for row in classify_sectors() {
        let want = expected
            .iter()
            .find(|(e, _)| *e == (row.sector.e1(), row.sector.e2()))
            .map(|(_, w)| *w);
        let got = (
            row.r1.sign(),
            row.r2.sign(),
            row.ell == EllSeries::Integer,
            row.lowest_twoell,
        );
        acc.count(want != Some(got));
        for twoell in 0..8 {
            let valid = AngularMode::new(row.sector, twoell).is_ok();
            let want_valid = twoell >= row.lowest_twoell && (twoell - row.lowest_twoell) % 2 == 0;
            acc.count(valid != want_valid);
        }
    }
    Ok((acc, json!({"sectors": 4})))
}

fn angular_eigenvalue(c: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<(Acc, Value)> {
    let margin = angle_margin(&c.fd);
    let mut acc = Acc::default();
    let mut mus = Vec::new();
    for _ in 0..c.mu_draws {
        let params = DunklParams::new(random_mu(rng), random_mu(rng), 0.5)?;
        mus.push([params.mu1(), params.mu2()]);
        for sector in AngularSector::ALL {
            let mut twoell = sector.lowest_twoell();
            while twoell <= c.max_twoell {
                let mode = AngularMode::new(sector, twoell)?;
                for _ in 0..c.points {
                    acc.push(bphi_residual(&params, &mode, random_angle(rng, margin), &c.fd)?);
                }
                twoell += 2;
            }
        }
    }
    Ok((acc, json!({"mu": mus, "max_twoell": c.max_twoell})))
}

fn angular_parity(c: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<(Acc, Value)> {
    let params = DunklParams::new(random_mu(rng), random_mu(rng), 0.5)?;
    let mut acc = Acc::default();
    for sector in AngularSector::ALL {
        for k in 0..c.overlap_modes {
            let f = AngularEigenfunction::new(&params, AngularMode::with_degree(sector, k))?;
            for _ in 0..c.points {
                let phi = rng.gen_range(0.0..TAU);
                let v = f.value(phi);
                acc.push(relative(v, sector.r1().factor() * f.value(PI - phi), 1e-3));
                acc.push(relative(v, sector.r2().factor() * f.value(-phi), 1e-3));
            }
        }
    }
    Ok((acc, json!({"mu": [params.mu1(), params.mu2()], "relative_floor": 1e-3})))
}

fn angular_orthonormality(c: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<(Acc, Value)> {
    let mut acc = Acc::default();
    let mut mus = Vec::new();
    for _ in 0..c.mu_draws {
        let params = DunklParams::new(random_mu(rng), random_mu(rng), 0.5)?;
        mus.push([params.mu1(), params.mu2()]);
        for sector in AngularSector::ALL {
            let o = overlap_matrix(&params, sector, c.overlap_modes)?;
            for (i, row) in o.values.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    acc.push((v - if i == j { 1.0 } else { 0.0 }).abs());
                }
            }
        }
    }
    Ok((acc, json!({"mu": mus, "modes": c.overlap_modes})))
}

fn angular_normalization(c: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<(Acc, Value)> {
    let params = DunklParams::new(random_mu(rng), random_mu(rng), 0.5)?;
    let mut acc = Acc::default();
    for sector in AngularSector::ALL {
        for k in 0..c.overlap_modes.min(4) {
            let mode = AngularMode::with_degree(sector, k);
            let numeric = numerical_eta(&params, &mode)?;
            acc.push(relative(numeric, eta(&params, &mode)?, 0.0));
        }
    }
    Ok((acc, json!({"mu": [params.mu1(), params.mu2()]})))
}

fn angular_symmetry(c: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<(Acc, Value)> {
    let mut acc = Acc::default();
    for _ in 0..c.points {
        let (a, b) = (random_mu(rng), random_mu(rng));
        let p = DunklParams::new(a, b, 0.5)?;
        let q = DunklParams::new(b, a, 0.5)?;
        for twoell in 0..=c.max_twoell {
            acc.push((s_squared(&p, twoell) - s_squared(&q, twoell)).abs());
        }
    }
    Ok((acc, json!({"max_twoell": c.max_twoell})))
}

fn angular_lz(c: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<(Acc, Value)> {
    let params = DunklParams::new(random_mu(rng), random_mu(rng), 0.5)?;
    let margin = angle_margin(&c.fd);
    let mut acc = Acc::default();
    for sector in AngularSector::ALL {
        for k in 0..3 {
            let mode = AngularMode::with_degree(sector, k);
            for _ in 0..c.points {
                acc.push(lz_identity_residual(&params, &mode, random_angle(rng, margin), &c.fd)?);
            }
        }
    }
    Ok((acc, json!({"mu": [params.mu1(), params.mu2()]})))
}

// ---- axial ----

fn parity_law(c: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<(Acc, Value)> {
    let mut acc = Acc::default();
    for nu in 0..=c.max_class_index {
        for q in -(nu as i64)..=4 {
            let order = BesselOrder::integer(nu);
            for _ in 0..c.points {
                let x = rng.gen_range(0.0..20.0);
                let plus = scaled_bessel(order, q as f64, x)?;
                let minus = scaled_bessel(order, q as f64, -x)?;
                let sign = Parity::of_power(q + nu as i64).factor();
                acc.push(relative(plus, sign * minus, f64::MIN_POSITIVE));
            }
        }
    }
    Ok((acc, json!({"max_order": c.max_class_index})))
}

fn axial_boundary(c: &VerifyConfig, _: &mut ChaCha8Rng) -> Result<(Acc, Value)> {
    let geom = c.geometry()?;
    let mut acc = Acc::default();
    for m in 0..=c.max_order {
        for np in 1..=c.max_index {
            for parity in [Parity::Even, Parity::Odd] {
                let s = axial_state(&geom, parity, m, np)?;
                acc.push(s.value(c.h).abs());
                acc.push(s.value(-c.h).abs());
            }
        }
    }
    Ok((acc, json!({"max_m": c.max_order, "max_n_prime": c.max_index})))
}

fn axial_residual(c: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<(Acc, Value)> {
    let geom = c.geometry()?;
    let mut acc = Acc::default();
    let avoid = c.fd.exclusion() + 2.0 * c.fd.step;
    for m in 0..=c.max_order {
        for np in 1..=c.max_index {
            for parity in [Parity::Even, Parity::Odd] {
                let s = axial_state(&geom, parity, m, np)?;
                for _ in 0..c.points {
                    acc.push(s.residual(interior(rng, -c.h, c.h, avoid), &c.fd)?);
                }
            }
        }
    }
    Ok((acc, json!({"max_m": c.max_order, "max_n_prime": c.max_index})))
}

fn axial_parity(c: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<(Acc, Value)> {
    let geom = c.geometry()?;
    let mut acc = Acc::default();
    for m in 0..=c.max_class_index {
        for np in 1..=c.max_index {
            for parity in [Parity::Even, Parity::Odd] {
                let s = axial_state(&geom, parity, m, np)?;
                for _ in 0..c.points {
                    let z = rng.gen_range(0.0..c.h);
                    acc.push(relative(s.value(z), parity.factor() * s.value(-z), f64::MIN_POSITIVE));
                }
            }
        }
    }
    Ok((acc, json!({"max_m": c.max_class_index})))
}

fn axial_monotonic(c: &VerifyConfig, _: &mut ChaCha8Rng) -> Result<(Acc, Value)> {
    let geom = c.geometry()?;
    let mut acc = Acc::default();
    for m in 0..=c.max_order {
        for parity in [Parity::Even, Parity::Odd] {
            let e = (1..=5)
                .map(|np| axial_state(&geom, parity, m, np).map(|s| s.energy()))
                .collect::<Result<Vec<_>>>()?;
            for w in e.windows(2) {
                acc.count(w[0] >= w[1]);
            }
        }
    }
    Ok((acc, json!({"max_m": c.max_order, "max_n_prime": 5})))
}

fn axial_interlacing(c: &VerifyConfig, _: &mut ChaCha8Rng) -> Result<(Acc, Value)> {
    let geom = c.geometry()?;
    let mut acc = Acc::default();
    for m in 0..=c.max_order {
        for np in 1..=5 {
            let e = axial_state(&geom, Parity::Even, m, np)?.energy();
            let o = axial_state(&geom, Parity::Odd, m, np)?.energy();
            let next = axial_state(&geom, Parity::Even, m, np + 1)?.energy();
            acc.count(!(e < o && o < next));
        }
        // The underlying zeros interlace as well.
        let a = bessel_zeros(BesselOrder::integer(m), 11)?;
        let b = bessel_zeros(BesselOrder::integer(m + 1), 10)?;
        for n in 0..10 {
            acc.count(!(a[n].value < b[n].value && b[n].value < a[n + 1].value));
        }
    }
    Ok((acc, json!({"max_m": c.max_order, "max_n_prime": 5})))
}

fn axial_infinite_limit(c: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<(Acc, Value)> {
    let geom = c.geometry()?;
    let mut acc = Acc::default();
    for m in 0..=c.max_order {
        for np in 1..=c.max_index {
            let fin = axial_state(&geom, Parity::Even, m, np)?;
            let free = axial_free(Parity::Even, m, fin.wavenumber())?;
            for _ in 0..c.points {
                let z = rng.gen_range(-c.h..c.h);
                acc.count(fin.value(z) != free.value(z));
            }
        }
    }
    Ok((acc, json!({"max_m": c.max_order})))
}

// ---- radial ----

fn radial_states(c: &VerifyConfig, max_cap: u32) -> Result<Vec<crate::states::RadialState>> {
    let geom = c.geometry()?;
    let mut out = Vec::new();
    for m_cap in 0..=max_cap {
        for n_cap in m_cap..=max_cap {
            for n in 1..=c.max_index {
                out.push(radial_from_indices(&geom, n_cap, m_cap, n)?);
            }
        }
    }
    Ok(out)
}

fn radial_boundary(c: &VerifyConfig, _: &mut ChaCha8Rng) -> Result<(Acc, Value)> {
    let mut acc = Acc::default();
    for s in radial_states(c, c.max_order)? {
        acc.push(s.value(c.r_c).abs());
    }
    Ok((acc, json!({"max_N": c.max_order, "max_n": c.max_index})))
}

fn radial_residual(c: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<(Acc, Value)> {
    let mut acc = Acc::default();
    let lo = c.fd.exclusion() + 2.0 * c.fd.step;
    for s in radial_states(c, c.max_order)? {
        for _ in 0..c.points {
            acc.push(s.residual(rng.gen_range(lo..c.r_c), &c.fd)?);
        }
    }
    Ok((acc, json!({"max_N": c.max_order, "max_n": c.max_index})))
}

fn radial_parity(c: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<(Acc, Value)> {
    let mut acc = Acc::default();
    for s in radial_states(c, c.max_class_index)? {
        for _ in 0..c.points {
            let rho = rng.gen_range(0.0..c.r_c);
            acc.push(relative(
                s.value(rho),
                s.extended_parity().factor() * s.value(-rho),
                f64::MIN_POSITIVE,
            ));
        }
    }
    Ok((acc, json!({"max_N": c.max_class_index})))
}

fn radial_monotonic(c: &VerifyConfig, _: &mut ChaCha8Rng) -> Result<(Acc, Value)> {
    let geom = c.geometry()?;
    let mut acc = Acc::default();
    for n_cap in 0..=c.max_order {
        let e = (1..=5)
            .map(|n| radial_from_indices(&geom, n_cap, 0, n).map(|s| s.energy()))
            .collect::<Result<Vec<_>>>()?;
        for w in e.windows(2) {
            acc.count(w[0] >= w[1]);
        }
    }
    Ok((acc, json!({"max_N": c.max_order, "max_n": 5})))
}

// ---- full ----

/// The classification restated as an explicit table: class signs and the
/// required parities (0 even, 1 odd) of `N`, `M`, `2ℓ`.
type ClassSpec = ((i64, i64, i64), (u32, u32, u32));

const CLASS_TABLE: [ClassSpec; 8] = [
    ((1, 1, 1), (0, 0, 0)),
    ((-1, -1, 1), (0, 0, 0)),
    ((1, 1, -1), (1, 1, 0)),
    ((-1, -1, -1), (1, 1, 0)),
    ((1, -1, 1), (0, 1, 1)),
    ((-1, 1, 1), (0, 1, 1)),
    ((1, -1, -1), (1, 0, 1)),
    ((-1, 1, -1), (1, 0, 1)),
];

fn full_admissibility(c: &VerifyConfig, _: &mut ChaCha8Rng) -> Result<(Acc, Value)> {
    let mut acc = Acc::default();
    let top = c.max_class_index;
    for ((r1, r2, r3), (np, mp, tp)) in CLASS_TABLE {
        let class = ParityTriple::from_signs(r1, r2, r3)?;
        for n_cap in 0..=top {
            for m_cap in 0..=top {
                for twoell in 0..=top {
                    for m in 0..=top {
                        let label = StateLabel {
                            twoell,
                            ..StateLabel::finite(class, n_cap, m_cap, m, 1, 1)
                        };
                        let want = n_cap % 2 == np
                            && m_cap % 2 == mp
                            && twoell % 2 == tp
                            && n_cap >= m_cap
                            && n_cap - m_cap == twoell;
                        acc.count(admissible(&label).is_admissible() != want);
                    }
                }
            }
        }
    }
    Ok((acc, json!({"max_index": top, "classes": 8})))
}

fn small_bounds(c: &VerifyConfig) -> Bounds {
    Bounds {
        max_n_cap: c.max_order,
        max_m: 2,
        max_n: c.max_index,
        max_n_prime: c.max_index,
    }
}

fn full_energy_identity(c: &VerifyConfig, _: &mut ChaCha8Rng) -> Result<(Acc, Value)> {
    let geom = c.geometry()?;
    let levels = enumerate_levels(&geom, &ParityTriple::all(), &small_bounds(c), &[])?;
    let mut acc = Acc::default();
    for l in &levels {
        let again = total_energy(&geom, &l.label)?;
        acc.push(relative(l.e_radial + l.e_axial, again.e_total, f64::MIN_POSITIVE));
    }
    Ok((acc, json!({"levels": levels.len()})))
}

fn full_worked_example(c: &VerifyConfig, _: &mut ChaCha8Rng) -> Result<(Acc, Value)> {
    let geom = c.geometry()?;
    let label = StateLabel::finite(ParityTriple::from_signs(1, -1, -1)?, 1, 0, 0, 1, 1);
    let level = total_energy(&geom, &label)?;
    let w = bessel_zero(BesselOrder::integer(1), 1)?.value;
    let want = w * w / (2.0 * c.r_c * c.r_c) + w * w / (2.0 * c.h * c.h);
    let mut acc = Acc::default();
    acc.push(relative(want, level.e_total, f64::MIN_POSITIVE));
    Ok((acc, json!({"r_c": c.r_c, "h": c.h, "e_total": level.e_total})))
}

fn full_ordering(c: &VerifyConfig, _: &mut ChaCha8Rng) -> Result<(Acc, Value)> {
    let geom = c.geometry()?;
    let a = enumerate_levels(&geom, &ParityTriple::all(), &small_bounds(c), &[])?;
    let b = enumerate_levels(&geom, &ParityTriple::all(), &small_bounds(c), &[])?;
    let mut acc = Acc::default();
    acc.count(a != b);
    for l in &a {
        acc.count(!admissible(&l.label).is_admissible());
    }
    for w in a.windows(2) {
        let ordered =
            w[0].e_total < w[1].e_total || (w[0].e_total == w[1].e_total && w[0].label.cmp_lex(&w[1].label).is_lt());
        acc.count(!ordered);
    }
    Ok((acc, json!({"levels": a.len()})))
}

fn full_pairing(c: &VerifyConfig, _: &mut ChaCha8Rng) -> Result<(Acc, Value)> {
    let geom = c.geometry()?;
    let mut acc = Acc::default();
    for class in ParityTriple::all() {
        let a = enumerate_levels(&geom, &[class], &small_bounds(c), &[])?;
        let b = enumerate_levels(&geom, &[class.partner()], &small_bounds(c), &[])?;
        acc.count(a.len() != b.len());
        for (x, y) in a.iter().zip(&b) {
            let same = (x.label.n_cap, x.label.m_cap, x.label.m, x.label.n, x.label.axial)
                == (y.label.n_cap, y.label.m_cap, y.label.m, y.label.n, y.label.axial);
            acc.count(!same || x.e_total != y.e_total);
        }
    }
    Ok((acc, json!({"classes": 8})))
}

/// One admissible label with an angular mode per class.
fn sample_labels(rng: &mut ChaCha8Rng) -> Result<Vec<StateLabel>> {
    let mut out = Vec::new();
    for class in ParityTriple::all() {
        let row = class.row();
        let m_cap = if row.m_parity == Parity::Even { 0 } else { 1 } + 2 * rng.gen_range(0..2);
        let twoell = class.sector().lowest_twoell() + 2 * rng.gen_range(0..2);
        let label = StateLabel::finite(
            class,
            m_cap + twoell,
            m_cap,
            rng.gen_range(0..3),
            rng.gen_range(1..3),
            rng.gen_range(1..3),
        );
        admissible(&label).into_result()?;
        out.push(label);
    }
    Ok(out)
}

fn full_parity(c: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<(Acc, Value)> {
    let geom = c.geometry()?;
    let mut acc = Acc::default();
    for label in sample_labels(rng)? {
        let theta = full_wavefunction(&geom, &label)?;
        let mu1 = rng.gen_range(0.0..=label.m_cap as f64);
        let full = theta.with_angular(mu1)?;
        for _ in 0..c.points {
            let (rho, phi, z) = (
                rng.gen_range(0.0..c.r_c),
                rng.gen_range(0.0..TAU),
                rng.gen_range(-c.h..c.h),
            );
            let v = theta.theta(rho, z);
            acc.push(relative(
                v,
                label.parity.r3.factor() * theta.theta(rho, -z),
                f64::MIN_POSITIVE,
            ));
            let p = CartPoint::from(CylPoint::new(rho, phi, z));
            let w = full.value_cart(p);
            for (axis, r) in [
                (Axis::X, label.parity.r1),
                (Axis::Y, label.parity.r2),
                (Axis::Z, label.parity.r3),
            ] {
                acc.push(relative(w, r.factor() * full.value_cart(axis.reflect_point(p)), 1e-3));
            }
        }
    }
    Ok((acc, json!({"classes": 8, "relative_floor_3d": 1e-3})))
}

fn full_boundary(c: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<(Acc, Value)> {
    let geom = c.geometry()?;
    let mut acc = Acc::default();
    for label in sample_labels(rng)? {
        let theta = full_wavefunction(&geom, &label)?;
        for _ in 0..c.points {
            acc.push(theta.theta(c.r_c, rng.gen_range(-c.h..c.h)).abs());
            let rho = rng.gen_range(0.0..c.r_c);
            acc.push(theta.theta(rho, c.h).abs());
            acc.push(theta.theta(rho, -c.h).abs());
        }
    }
    Ok((acc, json!({"classes": 8})))
}

fn hamiltonian_states(c: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<Vec<crate::spectrum::Wavefunction3d>> {
    let geom = c.geometry()?;
    let example = StateLabel::finite(ParityTriple::from_signs(1, -1, -1)?, 1, 0, 0, 1, 1);
    let mut labels = vec![example];
    labels.extend(sample_labels(rng)?);
    labels
        .iter()
        .map(|l| {
            let mu1 = rng.gen_range(0.0..=l.m_cap as f64);
            full_wavefunction(&geom, l)?.with_angular(mu1)
        })
        .collect()
}

fn full_hamiltonian(c: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<(Acc, Value)> {
    let margin = angle_margin(&c.fd);
    let mut acc = Acc::default();
    let states = hamiltonian_states(c, rng)?;
    for psi in &states {
        for _ in 0..c.points {
            let p = CylPoint::new(
                rng.gen_range(0.3..c.r_c - 0.3),
                random_angle(rng, margin),
                interior(rng, -c.h + 0.3, c.h - 0.3, 0.3),
            );
            acc.push(psi.cylindrical_residual(p, &c.fd)?);
        }
    }
    Ok((
        acc,
        json!({"states": states.len(), "includes": "(1,-1,-1) N=1 M=0 m=0 n=1 n'=1"}),
    ))
}

fn full_hamiltonian_cartesian(c: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<(Acc, Value)> {
    let mut acc = Acc::default();
    let states = hamiltonian_states(c, rng)?;
    let limit = 0.9 * c.r_c / std::f64::consts::SQRT_2;
    for psi in &states {
        for _ in 0..c.points {
            let p = CartPoint::new(
                interior(rng, -limit, limit, 0.3),
                interior(rng, -limit, limit, 0.3),
                interior(rng, -c.h + 0.3, c.h - 0.3, 0.3),
            );
            acc.push(psi.cartesian_residual(p, &c.fd)?);
        }
    }
    Ok((acc, json!({"states": states.len()})))
}

// ---- figures ----

fn figures_radial(c: &VerifyConfig, _: &mut ChaCha8Rng) -> Result<(Acc, Value)> {
    let pts = figures::radial_energies(c.r_c)?;
    let mut acc = Acc::default();
    acc.count(pts.len() != 15);
    for w in pts.windows(2) {
        if w[0].order == w[1].order {
            acc.count(w[0].energy >= w[1].energy);
        }
    }
    Ok((acc, json!({"r_c": c.r_c})))
}

fn figures_axial(c: &VerifyConfig, _: &mut ChaCha8Rng) -> Result<(Acc, Value)> {
    let even = figures::axial_energies(c.h, Parity::Even)?;
    let odd = figures::axial_energies(c.h, Parity::Odd)?;
    let mut acc = Acc::default();
    acc.count(even.len() != 15 || odd.len() != 15);
    for series in [&even, &odd] {
        for w in series.windows(2) {
            if w[0].order == w[1].order {
                acc.count(w[0].energy >= w[1].energy);
            }
        }
    }
    for (i, (e, o)) in even.iter().zip(&odd).enumerate() {
        acc.count(e.energy >= o.energy);
        if let Some(next) = even.get(i + 1).filter(|n| n.order == e.order) {
            acc.count(o.energy >= next.energy);
        }
    }
    Ok((acc, json!({"h": c.h})))
}

fn figures_curves(c: &VerifyConfig, _: &mut ChaCha8Rng) -> Result<(Acc, Value)> {
    let mut acc = Acc::default();
    for spec in figures::RADIAL_EVEN.iter().chain(&figures::RADIAL_ODD) {
        let curve = figures::radial_curve(c.r_c, *spec, 500)?;
        acc.push(curve.points.last().map_or(f64::NAN, |p| p.1.abs()));
    }
    for (parity, specs) in [(Parity::Even, &figures::AXIAL_EVEN), (Parity::Odd, &figures::AXIAL_ODD)] {
        for spec in specs.iter() {
            let curve = figures::axial_curve(c.h, parity, *spec, 500)?;
            acc.push(curve.points.first().map_or(f64::NAN, |p| p.1.abs()));
            acc.push(curve.points.last().map_or(f64::NAN, |p| p.1.abs()));
        }
    }
    Ok((acc, json!({"samples": 500})))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_prefixed() {
        let all = checks();
        let mut ids: Vec<&str> = all.iter().map(|c| c.id).collect();
        for c in &all {
            assert!(c.id.starts_with(c.suite.name()));
        }
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), all.len());
    }

    #[test]
    fn tolerance_overrides() {
        let mut t = Tolerances::default();
        t.set("finite_difference", 1e-16).unwrap();
        assert_eq!(t.second_order, 1e-16);
        assert!(t.set("nope", 1.0).is_err());
        assert!(t.set("parity", -1.0).is_err());
    }

    #[test]
    fn bad_geometry_is_a_config_error() {
        let config = VerifyConfig {
            r_c: 0.0,
            ..VerifyConfig::default()
        };
        assert!(matches!(run_suite(Suite::Axial, &config), Err(Error::Config(_))));
    }

    #[test]
    fn default_config_passes() {
        let reports = run_all(&VerifyConfig::default()).unwrap();
        let table = summary_table(&reports);
        println!("{table}");
        assert!(all_passed(&reports), "{table}");
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
    }
}
