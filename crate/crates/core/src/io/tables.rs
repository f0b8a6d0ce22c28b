//! Reference comparison tables rerun against stored targets.

use std::fmt;

use rayon::prelude::*;
use serde::Deserialize;

use crate::elements::Kinematics;
use crate::error::{Error, Result};
use crate::model::{build_model, DEFAULT_N_EL};
use crate::presets;
use crate::reference::{self, ReferenceResponse};
use crate::solver::{run_history, LoadHistory, RunOptions, SolverConfig, TimeGrid};

pub const TABLE_NAMES: [&str; 3] = ["formulations", "validation", "temperature"];

const FIXTURE: &str = include_str!("../../fixtures/reference_values.toml");

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TemperatureTargets {
    pub tolerance: f64,
    pub load_N_per_m: f64,
    pub duration_s: f64,
    pub temperatures_C: Vec<f64>,
    pub vk_nu_deflection_mm: Vec<f64>,
    pub vk_nu_midspan_stress_MPa: Vec<f64>,
    pub lin_nu_deflection_mm: Vec<f64>,
    pub lin_nu_midspan_stress_MPa: Vec<f64>,
    pub fs_elastic_deflection_mm: Vec<f64>,
    pub fs_elastic_midspan_stress_MPa: Vec<f64>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormulationTargets {
    pub tolerance: f64,
    pub fs_vs_vk_deflection_tolerance: f64,
    pub fs_vs_vk_stress_tolerance: f64,
    pub temperature_C: f64,
    pub duration_s: f64,
    pub loads_N_per_m: Vec<f64>,
    pub vk_deflection_mm: Vec<f64>,
    pub fs_deflection_mm: Vec<f64>,
    pub vk_max_stress_MPa: Vec<f64>,
    pub fs_max_stress_MPa: Vec<f64>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ValidationTargets {
    pub tolerance: f64,
    pub duration_s: f64,
    pub beams: Vec<String>,
    pub vk_nu_deflection_mm: Vec<f64>,
    pub vk_nu_midspan_stress_MPa: Vec<f64>,
    pub monolithic_deflection_mm: Vec<f64>,
    pub layered_deflection_mm: Vec<f64>,
}

/// Contents of the checked-in fixtures file.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReferenceValues {
    pub temperature: TemperatureTargets,
    pub formulations: FormulationTargets,
    pub validation: ValidationTargets,
}

pub fn reference_values() -> ReferenceValues {
    toml::from_str(FIXTURE).expect("fixture file is well formed")
}

/// One compared quantity.
#[derive(Debug, Clone, PartialEq)]
pub struct TableLine {
    pub label: String,
    pub unit: &'static str,
    pub computed: f64,
    /// Stored target, or the companion computed value for agreement checks.
    pub target: f64,
    pub rel_error: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl TableLine {
    pub fn new(label: impl Into<String>, unit: &'static str, computed: f64, target: f64, tolerance: f64) -> Self {
        let rel_error = (computed - target) / target;
        Self {
            label: label.into(),
            unit,
            computed,
            target,
            rel_error,
            tolerance,
            pass: rel_error.abs() <= tolerance,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableReport {
    pub name: String,
    pub lines: Vec<TableLine>,
}

impl TableReport {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.pass)
    }

    pub fn line(&self, label: &str) -> Option<&TableLine> {
        self.lines.iter().find(|l| l.label == label)
    }
}

impl fmt::Display for TableReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.lines.iter().map(|l| l.label.len()).max().unwrap_or(0).max(8);
        writeln!(f, "table: {}", self.name)?;
        writeln!(
            f,
            "{:<width$}  {:>12}  {:>12}  {:>9}  {:>7}  {:<4}  result",
            "quantity", "computed", "target", "rel.err", "tol", "unit"
        )?;
        for l in &self.lines {
            writeln!(
                f,
                "{:<width$}  {:>12.5}  {:>12.5}  {:>8.3}%  {:>6.2}%  {:<4}  {}",
                l.label,
                l.computed,
                l.target,
                100.0 * l.rel_error,
                100.0 * l.tolerance,
                l.unit,
                if l.pass { "PASS" } else { "FAIL" }
            )?;
        }
        let failed = self.lines.iter().filter(|l| !l.pass).count();
        write!(f, "{} of {} within tolerance", self.lines.len() - failed, self.lines.len())
    }
}

/// Final-time response of a geometry-I style viscoelastic run.
fn viscoelastic_final(
    geometry: &crate::model::LaminateGeometry,
    q: f64,
    temperature: f64,
    duration: f64,
    kinematics: Kinematics,
    n_el: usize,
) -> Result<ReferenceResponse> {
    let materials = presets::materials(presets::constant_poisson());
    let model = build_model(geometry, &materials, n_el)?;
    let grid = TimeGrid::standard(duration)?;
    let options = RunOptions {
        kinematics,
        temperature,
        solver: SolverConfig::default(),
    };
    let rows = run_history(&model, &LoadHistory::ramp_and_hold(q), &grid, &options)?;
    Ok(rows.last().expect("grid has steps").into())
}

const MM: f64 = 1e3;
const MPA: f64 = 1e-6;

fn temperature_table(t: &TemperatureTargets, n_el: usize) -> Result<Vec<TableLine>> {
    let g = presets::geometry_i();
    let jobs: Vec<(usize, u8)> = (0..t.temperatures_C.len()).flat_map(|i| [(i, 0), (i, 1), (i, 2)]).collect();
    let results: Vec<ReferenceResponse> = jobs
        .par_iter()
        .map(|&(i, kind)| {
            let temp = t.temperatures_C[i];
            match kind {
                0 => viscoelastic_final(&g, t.load_N_per_m, temp, t.duration_s, Kinematics::VonKarman, n_el),
                1 => viscoelastic_final(&g, t.load_N_per_m, temp, t.duration_s, Kinematics::Linear, n_el),
                _ => reference::elastic_secant(
                    &g,
                    &presets::materials(presets::constant_poisson()),
                    t.load_N_per_m,
                    t.duration_s,
                    temp,
                    n_el,
                    Kinematics::Reissner,
                ),
            }
        })
        .collect::<Result<_>>()?;
    let mut lines = Vec::new();
    for (i, temp) in t.temperatures_C.iter().enumerate() {
        let [vk, lin, el] = [results[3 * i], results[3 * i + 1], results[3 * i + 2]];
        let tol = t.tolerance;
        lines.push(TableLine::new(format!("VK_nu w @ {temp} C"), "mm", vk.deflection * MM, t.vk_nu_deflection_mm[i], tol));
        lines.push(TableLine::new(format!("VK_nu sigma @ {temp} C"), "MPa", vk.midspan_stress * MPA, t.vk_nu_midspan_stress_MPa[i], tol));
        lines.push(TableLine::new(format!("LIN_nu w @ {temp} C"), "mm", lin.deflection * MM, t.lin_nu_deflection_mm[i], tol));
        lines.push(TableLine::new(format!("LIN_nu sigma @ {temp} C"), "MPa", lin.midspan_stress * MPA, t.lin_nu_midspan_stress_MPa[i], tol));
        lines.push(TableLine::new(format!("FS_EL w @ {temp} C"), "mm", el.deflection * MM, t.fs_elastic_deflection_mm[i], tol));
        lines.push(TableLine::new(format!("FS_EL sigma @ {temp} C"), "MPa", el.midspan_stress * MPA, t.fs_elastic_midspan_stress_MPa[i], tol));
    }
    Ok(lines)
}

fn formulations_table(t: &FormulationTargets, n_el: usize) -> Result<Vec<TableLine>> {
    let g = presets::geometry_i();
    let jobs: Vec<(usize, Kinematics)> = (0..t.loads_N_per_m.len())
        .flat_map(|i| [(i, Kinematics::VonKarman), (i, Kinematics::Reissner)])
        .collect();
    let results: Vec<ReferenceResponse> = jobs
        .par_iter()
        .map(|&(i, kin)| viscoelastic_final(&g, t.loads_N_per_m[i], t.temperature_C, t.duration_s, kin, n_el))
        .collect::<Result<_>>()?;
    let mut lines = Vec::new();
    for (i, q) in t.loads_N_per_m.iter().enumerate() {
        let (vk, fs) = (results[2 * i], results[2 * i + 1]);
        let tol = t.tolerance;
        lines.push(TableLine::new(format!("VK w @ {q} N/m"), "mm", vk.deflection * MM, t.vk_deflection_mm[i], tol));
        lines.push(TableLine::new(format!("FS w @ {q} N/m"), "mm", fs.deflection * MM, t.fs_deflection_mm[i], tol));
        lines.push(TableLine::new(format!("VK sigma @ {q} N/m"), "MPa", vk.max_stress * MPA, t.vk_max_stress_MPa[i], tol));
        lines.push(TableLine::new(format!("FS sigma @ {q} N/m"), "MPa", fs.max_stress * MPA, t.fs_max_stress_MPa[i], tol));
        lines.push(TableLine::new(
            format!("FS vs VK w @ {q} N/m"),
            "mm",
            fs.deflection * MM,
            vk.deflection * MM,
            t.fs_vs_vk_deflection_tolerance,
        ));
        lines.push(TableLine::new(
            format!("FS vs VK sigma @ {q} N/m"),
            "MPa",
            fs.max_stress * MPA,
            vk.max_stress * MPA,
            t.fs_vs_vk_stress_tolerance,
        ));
    }
    Ok(lines)
}

fn validation_table(t: &ValidationTargets, n_el: usize) -> Result<Vec<TableLine>> {
    let beams = presets::validation_beams();
    if t.beams.len() != beams.len() {
        return Err(Error::config("validation.beams", "fixture and presets disagree on the beam list"));
    }
    let mats = presets::materials(presets::constant_poisson());
    let jobs: Vec<(usize, u8)> = (0..beams.len()).flat_map(|i| [(i, 0), (i, 1), (i, 2)]).collect();
    let results: Vec<ReferenceResponse> = jobs
        .par_iter()
        .map(|&(i, kind)| {
            let b = &beams[i];
            match kind {
                0 => viscoelastic_final(&b.geometry, b.load, b.temperature, t.duration_s, Kinematics::VonKarman, n_el),
                1 => reference::monolithic_limit(&b.geometry, &mats, b.load, n_el, Kinematics::VonKarman),
                _ => reference::layered_limit(&b.geometry, &mats, b.load, n_el, Kinematics::VonKarman),
            }
        })
        .collect::<Result<_>>()?;
    let mut lines = Vec::new();
    for (i, name) in t.beams.iter().enumerate() {
        let [vk, mon, lay] = [results[3 * i], results[3 * i + 1], results[3 * i + 2]];
        let tol = t.tolerance;
        lines.push(TableLine::new(format!("{name} VK_nu w"), "mm", vk.deflection * MM, t.vk_nu_deflection_mm[i], tol));
        lines.push(TableLine::new(format!("{name} VK_nu sigma"), "MPa", vk.midspan_stress * MPA, t.vk_nu_midspan_stress_MPa[i], tol));
        lines.push(TableLine::new(format!("{name} monolithic w"), "mm", mon.deflection * MM, t.monolithic_deflection_mm[i], tol));
        lines.push(TableLine::new(format!("{name} layered w"), "mm", lay.deflection * MM, t.layered_deflection_mm[i], tol));
    }
    Ok(lines)
}

/// Runs the scenario matrix behind `name` with the default mesh.
pub fn reproduce_table(name: &str) -> Result<TableReport> {
    reproduce_table_with(name, DEFAULT_N_EL)
}

pub fn reproduce_table_with(name: &str, n_el: usize) -> Result<TableReport> {
    let values = reference_values();
    let lines = match name {
        "temperature" => temperature_table(&values.temperature, n_el)?,
        "formulations" => formulations_table(&values.formulations, n_el)?,
        "validation" => validation_table(&values.validation, n_el)?,
        other => return Err(Error::UnknownTable(other.to_string())),
    };
    Ok(TableReport {
        name: name.to_string(),
        lines,
    })
}
