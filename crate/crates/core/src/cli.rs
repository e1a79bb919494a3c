//! Command-line front end.
//!
//! Every subcommand reads its settings from flags and, optionally, a TOML
//! file given with `--config`; flags win. Output is deterministic: numbers
//! are written with 17 significant digits and nothing depends on the clock.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::angular::{eta, linear_eta, s_squared, AngularEigenfunction, AngularMode, AngularSector};
use crate::dunkl::DunklParams;
use crate::error::{Error, Result};
use crate::parity::Parity;
use crate::specfun::{bessel_zeros, BesselOrder};
use crate::spectrum::{
    admissible, enumerate_levels, figures, full_wavefunction, Bounds, EnergyLevel, ParityTriple, StateLabel,
};
use crate::states::{AxialIndex, CylinderGeometry};
use crate::verify::{self, Suite, VerifyConfig};

/// Exit status for a successful run.
pub const EXIT_OK: i32 = 0;
/// Exit status when verification checks fail.
pub const EXIT_CHECKS_FAILED: i32 = 1;
/// Exit status for invalid flags, configuration or input.
pub const EXIT_USAGE: i32 = 2;
/// Exit status for numerical failures (non-converged quadrature and similar).
pub const EXIT_COMPUTATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "dunkl-cyl",
    version,
    about = "Spectra and eigenfunctions of the a Dunkl free particle in a cylindrical well"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Positive zeros of J_nu.
    Zeros(ZerosArgs),
    /// Energy levels of the selected parity classes.
    Spectrum(SpectrumArgs),
    /// Sample a radial, axial or angular factor of a labelled state.
    Wavefunction(WavefunctionArgs),
    /// Angular eigenvalue, normalization and samples for one mode.
    Angular(AngularArgs),
    /// Run the verification suites; exit 0 iff every check passes.
    Verify(VerifyArgs),
    /// Write every energy and wavefunction data set behind the figures.
    ExportFigures(ExportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// Settings shared by most subcommands.
#[derive(Debug, Clone, Args, Default)]
pub struct Common {
    /// TOML file with default settings; flags override it.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Cylinder radius R_c.
    #[arg(long = "r-c", allow_negative_numbers = true)]
    pub r_c: Option<f64>,
    /// Half-height H (full height 2H).
    #[arg(long, allow_negative_numbers = true)]
    pub h: Option<f64>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Also write the output to this file.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Keys accepted in a `--config` file.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FileConfig {
    pub r_c: Option<f64>,
    pub h: Option<f64>,
    pub infinite: Option<bool>,
    pub classes: Option<Vec<String>>,
    pub max_n_cap: Option<u32>,
    pub max_m: Option<u32>,
    pub max_n: Option<u32>,
    pub max_n_prime: Option<u32>,
    pub k_grid: Option<Vec<f64>>,
    pub format: Option<Format>,
    pub output: Option<PathBuf>,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    pub suites: Option<Vec<String>>,
    pub tolerances: Option<BTreeMap<String, f64>>,
    pub out_dir: Option<PathBuf>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
    }
}

impl Common {
    fn file(&self) -> Result<FileConfig> {
        match &self.config {
            Some(path) => FileConfig::load(path),
            None => Ok(FileConfig::default()),
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct ZerosArgs {
    /// Bessel order, > -1.
    #[arg(long, allow_negative_numbers = true)]
    pub nu: f64,
    #[arg(long, default_value_t = 5)]
    pub count: u32,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub common: Common,
    /// Infinite height; requires --k-grid.
    #[arg(long)]
    pub infinite: bool,
    /// Parity class "r1,r2,r3" (repeatable) or "all".
    #[arg(long = "class", allow_hyphen_values = true)]
    pub classes: Vec<String>,
    /// Largest N (and M).
    #[arg(long)]
    pub max_n_cap: Option<u32>,
    #[arg(long)]
    pub max_m: Option<u32>,
    #[arg(long)]
    pub max_n: Option<u32>,
    #[arg(long)]
    pub max_n_prime: Option<u32>,
    /// Comma-separated wavenumbers for infinite height.
    #[arg(long, value_delimiter = ',')]
    pub k_grid: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Component {
    Radial,
    Axial,
    Angular,
}

#[derive(Debug, Clone, Args)]
pub struct WavefunctionArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum)]
    pub component: Component,
    /// Parity class "r1,r2,r3".
    #[arg(long = "class", allow_hyphen_values = true)]
    pub class: String,
    #[arg(long = "n-cap")]
    pub n_cap: u32,
    #[arg(long = "m-cap")]
    pub m_cap: u32,
    #[arg(long, default_value_t = 0)]
    pub m: u32,
    #[arg(long, default_value_t = 1)]
    pub n: u32,
    #[arg(long = "n-prime", default_value_t = 1)]
    pub n_prime: u32,
    /// mu1 for the angular factor (mu2 = M - mu1).
    #[arg(long, allow_negative_numbers = true)]
    pub mu1: Option<f64>,
    #[arg(long)]
    pub samples: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct AngularArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub mu1: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub mu2: f64,
    #[arg(long)]
    pub e1: u8,
    #[arg(long)]
    pub e2: u8,
    /// 2l.
    #[arg(long)]
    pub twoell: u32,
    /// Sample Phi on [0, 2pi) instead of printing the summary row.
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: Common,
    /// Suite to run (repeatable); default all.
    #[arg(long = "suite")]
    pub suites: Vec<String>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Tolerance override "key=value" (repeatable). Keys: first_order,
    /// second_order, eigen_residual, orthonormality, normalization, parity,
    /// parity_law, boundary, energy_identity, exact, finite_difference.
    #[arg(long = "tolerance")]
    pub tolerances: Vec<String>,
}

#[derive(Debug, Clone, Args)]
pub struct ExportArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long = "out-dir")]
    pub out_dir: Option<PathBuf>,
    /// Points per wavefunction curve.
    #[arg(long)]
    pub samples: Option<usize>,
}

/// A value with 17 significant digits.
pub fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn csv_line(out: &mut String, fields: &[String]) {
    out.push_str(&fields.join(","));
    out.push('\n');
}

fn emit(text: &str, output: Option<&Path>, stdout: &mut String) -> Result<()> {
    if let Some(path) = output {
        fs::write(path, text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
    }
    stdout.push_str(text);
    Ok(())
}

/// Parses `"r1,r2,r3"`.
pub fn parse_class(s: &str) -> Result<ParityTriple> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(Error::Input(format!("parity class must be r1,r2,r3, got '{s}'")));
    }
    let sign = |p: &str| {
        p.parse::<i64>()
            .map_err(|_| Error::Input(format!("parity must be 1 or -1, got '{p}'")))
    };
    ParityTriple::from_signs(sign(parts[0])?, sign(parts[1])?, sign(parts[2])?)
}

fn parse_classes(list: &[String]) -> Result<Vec<ParityTriple>> {
    if list.is_empty() || list.iter().any(|s| s == "all") {
        return Ok(ParityTriple::all().to_vec());
    }
    list.iter().map(|s| parse_class(s)).collect()
}

fn geometry(r_c: f64, h: f64, infinite: bool) -> Result<CylinderGeometry> {
    if infinite {
        CylinderGeometry::infinite(r_c)
    } else {
        CylinderGeometry::finite(r_c, h)
    }
}

/// Runs a parsed command, returning the text for stdout and the exit code.
pub fn execute(cli: Cli) -> Result<(String, i32)> {
    let mut out = String::new();
    let code = match cli.command {
        Command::Zeros(a) => zeros(a, &mut out)?,
        Command::Spectrum(a) => spectrum(a, &mut out)?,
        Command::Wavefunction(a) => wavefunction(a, &mut out)?,
        Command::Angular(a) => angular(a, &mut out)?,
        Command::Verify(a) => verify_cmd(a, &mut out)?,
        Command::ExportFigures(a) => export(a, &mut out)?,
    };
    Ok((out, code))
}

/// Exit status for an error raised while running a command.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Quadrature { .. } => EXIT_COMPUTATION,
        _ => EXIT_USAGE,
    }
}

fn zeros(a: ZerosArgs, out: &mut String) -> Result<i32> {
    let order = BesselOrder::new(a.nu)?;
    if a.count == 0 {
        return Err(Error::Input("count must be at least 1".into()));
    }
    let zs = bessel_zeros(order, a.count)?;
    let text = match a.format {
        Format::Csv => {
            let mut s = String::new();
            csv_line(
                &mut s,
                &["order", "index", "value", "bracket_lo", "bracket_hi"].map(String::from),
            );
            for z in &zs {
                csv_line(
                    &mut s,
                    &[
                        num(a.nu),
                        z.index.to_string(),
                        num(z.value),
                        num(z.bracket.0),
                        num(z.bracket.1),
                    ],
                );
            }
            s
        }
        Format::Json => json_doc(&json!({ "order": a.nu, "zeros": zs })),
    };
    emit(&text, a.output.as_deref(), out)?;
    Ok(EXIT_OK)
}

fn json_doc(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

/// Column order of spectrum CSV files.
pub const SPECTRUM_COLUMNS: [&str; 12] = [
    "r1",
    "r2",
    "r3",
    "twoell",
    "N",
    "M",
    "m",
    "n",
    "n_prime|k",
    "e_radial",
    "e_axial",
    "e_total",
];

/// Renders levels as CSV.
pub fn spectrum_csv(levels: &[EnergyLevel]) -> String {
    let mut s = String::new();
    csv_line(&mut s, &SPECTRUM_COLUMNS.map(String::from));
    for l in levels {
        let p = l.label.parity;
        let axial = match l.label.axial {
            AxialIndex::NPrime(np) => np.to_string(),
            AxialIndex::Wavenumber(k) => num(k),
        };
        csv_line(
            &mut s,
            &[
                p.r1.sign().to_string(),
                p.r2.sign().to_string(),
                p.r3.sign().to_string(),
                l.label.twoell.to_string(),
                l.label.n_cap.to_string(),
                l.label.m_cap.to_string(),
                l.label.m.to_string(),
                l.label.n.to_string(),
                axial,
                num(l.e_radial),
                num(l.e_axial),
                num(l.e_total),
            ],
        );
    }
    s
}

fn spectrum(a: SpectrumArgs, out: &mut String) -> Result<i32> {
    let file = a.common.file()?;
    let infinite = a.infinite || file.infinite.unwrap_or(false);
    let r_c = a.common.r_c.or(file.r_c).unwrap_or(figures::R_C);
    let h = a.common.h.or(file.h).unwrap_or(figures::H);
    let geom = geometry(r_c, h, infinite)?;
    let classes = if a.classes.is_empty() {
        parse_classes(&file.classes.unwrap_or_default())?
    } else {
        parse_classes(&a.classes)?
    };
    let bounds = Bounds {
        max_n_cap: a.max_n_cap.or(file.max_n_cap).unwrap_or(5),
        max_m: a.max_m.or(file.max_m).unwrap_or(2),
        max_n: a.max_n.or(file.max_n).unwrap_or(3),
        max_n_prime: a.max_n_prime.or(file.max_n_prime).unwrap_or(3),
    };
    let k_grid = if a.k_grid.is_empty() {
        file.k_grid.unwrap_or_default()
    } else {
        a.k_grid
    };
    let levels = enumerate_levels(&geom, &classes, &bounds, &k_grid)?;
    let text = match a.common.format.or(file.format).unwrap_or_default() {
        Format::Csv => spectrum_csv(&levels),
        Format::Json => json_doc(&json!({ "geometry": geom, "bounds": bounds, "levels": levels })),
    };
    emit(&text, a.common.output.as_deref().or(file.output.as_deref()), out)?;
    Ok(EXIT_OK)
}

fn grid(a: f64, b: f64, count: usize, include_end: bool) -> Vec<f64> {
    let count = count.max(2);
    let div = if include_end { count - 1 } else { count } as f64;
    (0..count)
        .map(|i| {
            if include_end && i + 1 == count {
                b
            } else {
                a + (b - a) * i as f64 / div
            }
        })
        .collect()
}

fn pairs_output(name: &str, points: &[(f64, f64)], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut s = String::new();
            csv_line(&mut s, &[name.to_string(), "value".to_string()]);
            for (x, v) in points {
                csv_line(&mut s, &[num(*x), num(*v)]);
            }
            s
        }
        Format::Json => json_doc(&json!({ "coordinate": name, "points": points })),
    }
}

fn wavefunction(a: WavefunctionArgs, out: &mut String) -> Result<i32> {
    let file = a.common.file()?;
    let r_c = a.common.r_c.or(file.r_c).unwrap_or(figures::R_C);
    let h = a.common.h.or(file.h).unwrap_or(figures::H);
    let geom = CylinderGeometry::finite(r_c, h)?;
    let label = StateLabel::finite(parse_class(&a.class)?, a.n_cap, a.m_cap, a.m, a.n, a.n_prime);
    if a.n_cap < a.m_cap {
        return Err(Error::Inadmissible(admissible(&label).violations));
    }
    admissible(&label).into_result()?;
    let psi = full_wavefunction(&geom, &label)?;
    let samples = a.samples.or(file.samples).unwrap_or(500);
    let format = a.common.format.or(file.format).unwrap_or_default();
    let text = match a.component {
        Component::Radial => {
            let pts: Vec<_> = grid(0.0, r_c, samples, true)
                .into_iter()
                .map(|r| (r, psi.radial().value(r)))
                .collect();
            pairs_output("rho", &pts, format)
        }
        Component::Axial => {
            let pts: Vec<_> = grid(-h, h, samples, true)
                .into_iter()
                .map(|z| (z, psi.axial().value(z)))
                .collect();
            pairs_output("z", &pts, format)
        }
        Component::Angular => {
            let mu1 = a
                .mu1
                .ok_or_else(|| Error::Input("--mu1 is required for the angular component".into()))?;
            let full = psi.with_angular(mu1)?;
            let mode = AngularMode::new(label.parity.sector(), label.twoell)?;
            let f = AngularEigenfunction::new(full.params(), mode)?;
            let pts: Vec<_> = grid(0.0, std::f64::consts::TAU, samples, false)
                .into_iter()
                .map(|p| (p, f.value(p)))
                .collect();
            pairs_output("phi", &pts, format)
        }
    };
    emit(&text, a.common.output.as_deref().or(file.output.as_deref()), out)?;
    Ok(EXIT_OK)
}

fn angular(a: AngularArgs, out: &mut String) -> Result<i32> {
    let params = DunklParams::new(a.mu1, a.mu2, 0.5)?;
    let sector = AngularSector::new(a.e1, a.e2)?;
    let mode = AngularMode::new(sector, a.twoell)?;
    let text = match a.samples {
        Some(n) => {
            let f = AngularEigenfunction::new(&params, mode)?;
            let pts: Vec<_> = grid(0.0, std::f64::consts::TAU, n, false)
                .into_iter()
                .map(|p| (p, f.value(p)))
                .collect();
            pairs_output("phi", &pts, a.format)
        }
        None => {
            let s2 = s_squared(&params, a.twoell);
            let e = eta(&params, &mode)?;
            let linear = linear_eta(&params, &mode).ok();
            match a.format {
                Format::Csv => {
                    let mut s = String::new();
                    csv_line(
                        &mut s,
                        &[
                            "e1",
                            "e2",
                            "twoell",
                            "k",
                            "s_squared",
                            "eigenvalue",
                            "eta",
                            "linear_eta",
                        ]
                        .map(String::from),
                    );
                    csv_line(
                        &mut s,
                        &[
                            a.e1.to_string(),
                            a.e2.to_string(),
                            a.twoell.to_string(),
                            mode.degree().to_string(),
                            num(s2),
                            num(0.5 * s2),
                            num(e),
                            linear.map_or_else(|| "undefined".to_string(), num),
                        ],
                    );
                    s
                }
                Format::Json => json_doc(&json!({
                    "e1": a.e1, "e2": a.e2, "twoell": a.twoell, "k": mode.degree(),
                    "s_squared": s2, "eigenvalue": 0.5 * s2, "eta": e, "linear_eta": linear,
                })),
            }
        }
    };
    emit(&text, a.output.as_deref(), out)?;
    Ok(EXIT_OK)
}

fn verify_cmd(a: VerifyArgs, out: &mut String) -> Result<i32> {
    let file = a.common.file()?;
    let mut config = VerifyConfig::default();
    config.r_c = a.common.r_c.or(file.r_c).unwrap_or(config.r_c);
    config.h = a.common.h.or(file.h).unwrap_or(config.h);
    config.seed = a.seed.or(file.seed).unwrap_or(config.seed);
    for (k, v) in file.tolerances.iter().flatten() {
        config.tolerances.set(k, *v)?;
    }
    for spec in &a.tolerances {
        let (k, v) = spec
            .split_once('=')
            .ok_or_else(|| Error::Config(format!("tolerance must be key=value, got '{spec}'")))?;
        let v: f64 = v
            .trim()
            .parse()
            .map_err(|_| Error::Config(format!("tolerance value '{v}' is not a number")))?;
        config.tolerances.set(k.trim(), v)?;
    }
    config.validate()?;
    let names = if a.suites.is_empty() {
        file.suites.unwrap_or_default()
    } else {
        a.suites
    };
    let suites: Vec<Suite> = if names.is_empty() || names.iter().any(|s| s == "all") {
        Suite::ALL.to_vec()
    } else {
        names.iter().map(|s| s.parse()).collect::<Result<_>>()?
    };
    let mut reports = Vec::new();
    for suite in suites {
        reports.extend(verify::run_suite(suite, &config)?);
    }
    let jsonl = verify::to_jsonl(&reports);
    if let Some(path) = a.common.output.as_deref().or(file.output.as_deref()) {
        fs::write(path, &jsonl).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
    }
    match a.common.format.or(file.format).unwrap_or_default() {
        Format::Csv => out.push_str(&verify::summary_table(&reports)),
        Format::Json => out.push_str(&jsonl),
    }
    Ok(if verify::all_passed(&reports) {
        EXIT_OK
    } else {
        EXIT_CHECKS_FAILED
    })
}

/// File names written by `export-figures`.
pub const FIGURE_FILES: [&str; 7] = [
    "fig2a_radial_energies",
    "fig2b_axial_energies_odd",
    "fig2b_axial_energies_even",
    "fig3a_radial_even",
    "fig3b_radial_odd",
    "fig4a_axial_even",
    "fig4b_axial_odd",
];

fn energy_table(points: &[figures::EnergyPoint], order: &str, index: &str, format: Format) -> String {
    match format {
        Format::Csv => {
            let mut s = String::new();
            csv_line(&mut s, &[order.to_string(), index.to_string(), "energy".to_string()]);
            for p in points {
                csv_line(&mut s, &[p.order.to_string(), p.index.to_string(), num(p.energy)]);
            }
            s
        }
        Format::Json => json_doc(&json!({ "order": order, "index": index, "points": points })),
    }
}

/// Curves sharing one abscissa, one column each.
fn curve_table(coordinate: &str, curves: &[figures::Curve], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut s = String::new();
            let mut header = vec![coordinate.to_string()];
            header.extend(curves.iter().map(|c| c.name.clone()));
            csv_line(&mut s, &header);
            for i in 0..curves[0].points.len() {
                let mut row = vec![num(curves[0].points[i].0)];
                row.extend(curves.iter().map(|c| num(c.points[i].1)));
                csv_line(&mut s, &row);
            }
            s
        }
        Format::Json => json_doc(&json!({ "coordinate": coordinate, "curves": curves })),
    }
}

fn export(a: ExportArgs, out: &mut String) -> Result<i32> {
    let file = a.common.file()?;
    let r_c = a.common.r_c.or(file.r_c).unwrap_or(figures::R_C);
    let h = a.common.h.or(file.h).unwrap_or(figures::H);
    CylinderGeometry::finite(r_c, h)?;
    let dir = a
        .out_dir
        .or(file.out_dir)
        .ok_or_else(|| Error::Input("--out-dir is required".into()))?;
    let samples = a.samples.or(file.samples).unwrap_or(500);
    if samples < 2 {
        return Err(Error::Input("at least 2 samples per curve".into()));
    }
    let format = a.common.format.or(file.format).unwrap_or_default();
    fs::create_dir_all(&dir).map_err(|e| Error::Config(format!("{}: {e}", dir.display())))?;

    let radial_curves = |specs: &[(u32, u32, u32)]| -> Result<Vec<figures::Curve>> {
        specs.iter().map(|s| figures::radial_curve(r_c, *s, samples)).collect()
    };
    let axial_curves = |parity: Parity, specs: &[(u32, u32)]| -> Result<Vec<figures::Curve>> {
        specs
            .iter()
            .map(|s| figures::axial_curve(h, parity, *s, samples))
            .collect()
    };
    let contents = [
        energy_table(&figures::radial_energies(r_c)?, "N", "n", format),
        energy_table(&figures::axial_energies(h, Parity::Odd)?, "m", "n_prime", format),
        energy_table(&figures::axial_energies(h, Parity::Even)?, "m", "n_prime", format),
        curve_table("rho", &radial_curves(&figures::RADIAL_EVEN)?, format),
        curve_table("rho", &radial_curves(&figures::RADIAL_ODD)?, format),
        curve_table("z", &axial_curves(Parity::Even, &figures::AXIAL_EVEN)?, format),
        curve_table("z", &axial_curves(Parity::Odd, &figures::AXIAL_ODD)?, format),
    ];
    let ext = match format {
        Format::Csv => "csv",
        Format::Json => "json",
    };
    for (name, text) in FIGURE_FILES.iter().zip(&contents) {
        let path = dir.join(format!("{name}.{ext}"));
        fs::write(&path, text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        let _ = writeln!(out, "{}", path.display());
    }
    Ok(EXIT_OK)
}
