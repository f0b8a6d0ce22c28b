//! Limiting and simplified models: monolithic and layered elastic limits, the
//! elastic secant model and the geometrically linear variant.

use serde::{Deserialize, Serialize};

use crate::elements::Kinematics;
use crate::error::{Error, Result};
use crate::material::{ConstitutiveClosure, PronyChain, SectionProperties, GLASS_SHEAR_FACTOR};
use crate::model::{build_model, LaminateGeometry, LaminateModel, Layer, LayerKind, Materials};
use crate::solver::{run_history, GridSegment, LoadHistory, ResultRow, RunOptions, SolverConfig, TimeGrid};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ReferenceKind {
    MonolithicLimit,
    LayeredLimit,
    /// Elastic interlayer with the relaxation modulus reached after `duration` [s] at `temperature` [°C].
    ElasticSecant { duration: f64, temperature: f64 },
    GeometricallyLinear { closure: ConstitutiveClosure },
}

/// Final response of a reference solve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReferenceResponse {
    /// Deflection at the reporting point [m].
    pub deflection: f64,
    /// Largest tensile glass stress at the reporting point [Pa].
    pub midspan_stress: f64,
    /// Largest tensile glass stress anywhere [Pa].
    pub max_stress: f64,
}

impl From<&ResultRow> for ReferenceResponse {
    fn from(r: &ResultRow) -> Self {
        Self {
            deflection: r.midspan_deflection,
            midspan_stress: r.midspan_stress,
            max_stress: r.max_stress,
        }
    }
}

/// Single glass layer as thick as the whole laminate.
pub fn monolithic_model(geometry: &LaminateGeometry, materials: &Materials, n_el: usize) -> Result<LaminateModel> {
    geometry.validate()?;
    let h = geometry.total_thickness();
    let layer = Layer {
        kind: LayerKind::Glass(materials.glass),
        section: SectionProperties::glass(geometry.width, h),
        fiber: 0.5 * h,
    };
    LaminateModel::new(geometry.span, geometry.support, vec![layer], materials.clone(), n_el)
}

/// Glass plies acting independently: one section with the summed area,
/// shear area and inertia of the plies, stresses read at the thickest ply.
pub fn layered_model(geometry: &LaminateGeometry, materials: &Materials, n_el: usize) -> Result<LaminateModel> {
    geometry.validate()?;
    let plies = [geometry.thickness[0], geometry.thickness[2]];
    let b = geometry.width;
    let area: f64 = plies.iter().map(|h| b * h).sum();
    let section = SectionProperties {
        area,
        shear_area: GLASS_SHEAR_FACTOR * area,
        inertia: plies.iter().map(|h| b * h.powi(3) / 12.0).sum(),
        thickness: plies.iter().sum(),
        width: b,
    };
    let layer = Layer {
        kind: LayerKind::Glass(materials.glass),
        section,
        fiber: 0.5 * plies.iter().fold(0.0f64, |m, &h| m.max(h)),
    };
    LaminateModel::new(geometry.span, geometry.support, vec![layer], materials.clone(), n_el)
}

/// Materials with the interlayer frozen at its relaxation modulus after `duration`.
pub fn secant_materials(materials: &Materials, duration: f64, temperature: f64) -> Result<Materials> {
    if !(duration > 0.0) {
        return Err(Error::argument("duration", format!("must be positive, got {duration}")));
    }
    let inter = &materials.interlayer;
    let adjusted = inter.wlf.adjusted_time(duration, temperature)?;
    let g = inter.chain.relaxation_modulus(adjusted)?;
    let mut out = materials.clone();
    out.interlayer.chain = PronyChain::elastic(g)?;
    Ok(out)
}

/// Elastic solve under `q` applied in `steps` equal increments.
fn elastic_solve(model: &LaminateModel, q: f64, kinematics: Kinematics, temperature: f64, steps: usize) -> Result<ReferenceResponse> {
    let load = LoadHistory::new(vec![(0.0, 0.0), (1.0, q)])?;
    let grid = TimeGrid::from_segments(&[GridSegment { end: 1.0, steps }])?;
    let options = RunOptions {
        kinematics,
        temperature,
        solver: SolverConfig::default(),
    };
    let rows = run_history(model, &load, &grid, &options)?;
    Ok(rows.last().unwrap().into())
}

fn load_steps(kinematics: Kinematics) -> usize {
    if kinematics == Kinematics::Linear {
        1
    } else {
        10
    }
}

pub fn monolithic_limit(
    geometry: &LaminateGeometry,
    materials: &Materials,
    q: f64,
    n_el: usize,
    kinematics: Kinematics,
) -> Result<ReferenceResponse> {
    let model = monolithic_model(geometry, materials, n_el)?;
    elastic_solve(&model, q, kinematics, materials.interlayer.wlf.t0, load_steps(kinematics))
}

pub fn layered_limit(
    geometry: &LaminateGeometry,
    materials: &Materials,
    q: f64,
    n_el: usize,
    kinematics: Kinematics,
) -> Result<ReferenceResponse> {
    let model = layered_model(geometry, materials, n_el)?;
    elastic_solve(&model, q, kinematics, materials.interlayer.wlf.t0, load_steps(kinematics))
}

/// Elastic laminate whose interlayer has the modulus reached after `duration` at `temperature`.
pub fn elastic_secant(
    geometry: &LaminateGeometry,
    materials: &Materials,
    q: f64,
    duration: f64,
    temperature: f64,
    n_el: usize,
    kinematics: Kinematics,
) -> Result<ReferenceResponse> {
    let mats = secant_materials(materials, duration, temperature)?;
    let model = build_model(geometry, &mats, n_el)?;
    elastic_solve(&model, q, kinematics, temperature, load_steps(kinematics))
}

/// The viscoelastic history with geometrically linear kernels.
pub fn linear_variant(
    model: &LaminateModel,
    load: &LoadHistory,
    grid: &TimeGrid,
    temperature: f64,
    solver: SolverConfig,
) -> Result<Vec<ResultRow>> {
    let options = RunOptions {
        kinematics: Kinematics::Linear,
        temperature,
        solver,
    };
    run_history(model, load, grid, &options)
}

/// Final response of any reference model under the uniform load `q`.
pub fn evaluate(
    kind: ReferenceKind,
    geometry: &LaminateGeometry,
    materials: &Materials,
    q: f64,
    n_el: usize,
    kinematics: Kinematics,
) -> Result<ReferenceResponse> {
    match kind {
        ReferenceKind::MonolithicLimit => monolithic_limit(geometry, materials, q, n_el, kinematics),
        ReferenceKind::LayeredLimit => layered_limit(geometry, materials, q, n_el, kinematics),
        ReferenceKind::ElasticSecant { duration, temperature } => {
            elastic_secant(geometry, materials, q, duration, temperature, n_el, kinematics)
        }
        ReferenceKind::GeometricallyLinear { closure } => {
            let mut mats = materials.clone();
            mats.interlayer.closure = closure;
            let model = build_model(geometry, &mats, n_el)?;
            let grid = TimeGrid::standard(1e5)?;
            let rows = linear_variant(
                &model,
                &LoadHistory::ramp_and_hold(q),
                &grid,
                mats.interlayer.wlf.t0,
                SolverConfig::default(),
            )?;
            Ok(rows.last().unwrap().into())
        }
    }
}
