//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Every function returns a flat `Float64Array` of interleaved pairs so the
//! page can plot without any marshalling layer.

use glasslam::elements::Kinematics;
use glasslam::model::build_model;
use glasslam::presets;
use glasslam::solver::{LoadHistory, RunOptions, Simulation, SolverConfig, TimeGrid};
use wasm_bindgen::prelude::*;

fn js_err(e: glasslam::Error) -> JsError {
    JsError::new(&e.to_string())
}

fn kinematics(name: &str) -> Result<Kinematics, JsError> {
    match name {
        "lin" => Ok(Kinematics::Linear),
        "vk" => Ok(Kinematics::VonKarman),
        "fs" => Ok(Kinematics::Reissner),
        other => Err(JsError::new(&format!("unknown kinematics `{other}` (lin, vk, fs)"))),
    }
}

/// PVB shear relaxation modulus [Pa] at `temperature` [°C], sampled log-uniformly
/// in true time between 1e-6 s and 1e8 s: `[t0, G0, t1, G1, ...]`.
#[wasm_bindgen]
pub fn relaxation_curve(temperature: f64, n_points: usize) -> Result<Vec<f64>, JsError> {
    let chain = presets::pvb_chain();
    let wlf = presets::pvb_wlf();
    let n = n_points.max(2);
    let mut out = Vec::with_capacity(2 * n);
    for i in 0..n {
        let t = 10f64.powf(-6.0 + 14.0 * i as f64 / (n - 1) as f64);
        let g = chain
            .relaxation_modulus(wlf.adjusted_time(t, temperature).map_err(js_err)?)
            .map_err(js_err)?;
        out.extend([t, g]);
    }
    Ok(out)
}

fn simulate(
    q: f64,
    temperature: f64,
    kin: &str,
    n_el: usize,
    end_time: f64,
) -> Result<(Vec<(f64, f64)>, Vec<(f64, f64)>), JsError> {
    let model = build_model(
        &presets::geometry_i(),
        &presets::materials(presets::constant_poisson()),
        n_el,
    )
    .map_err(js_err)?;
    let grid = TimeGrid::standard(end_time).map_err(js_err)?;
    let options = RunOptions {
        kinematics: kinematics(kin)?,
        temperature,
        solver: SolverConfig::default(),
    };
    let mut history = Vec::new();
    let mut sim = Simulation::new(&model, LoadHistory::ramp_and_hold(q), options).map_err(js_err)?;
    for &t in &grid.times()[1..] {
        let row = sim.step_to(t).map_err(js_err)?;
        history.push((t, row.midspan_deflection));
    }
    let shape = model.deflected_shape(&sim.state().d);
    Ok((history, shape))
}

/// Midspan deflection [m] of the clamped 3 m demo beam under a load `q` [N/m]
/// applied at t = 0 and held until 1e5 s: `[t0, w0, t1, w1, ...]`.
#[wasm_bindgen]
pub fn deflection_history(q: f64, temperature: f64, kin: &str, n_el: usize) -> Result<Vec<f64>, JsError> {
    let (history, _) = simulate(q, temperature, kin, n_el, 1e5)?;
    Ok(history.into_iter().flat_map(|(t, w)| [t, w]).collect())
}

/// Deflected shape `[x0, w0, x1, w1, ...]` [m] of the same beam at `time` [s].
#[wasm_bindgen]
pub fn deflected_shape(q: f64, temperature: f64, kin: &str, n_el: usize, time: f64) -> Result<Vec<f64>, JsError> {
    if !(time > 1e-5) {
        return Err(JsError::new("time must exceed the 1e-5 s load ramp"));
    }
    let (_, shape) = simulate(q, temperature, kin, n_el, time)?;
    Ok(shape.into_iter().flat_map(|(x, w)| [x, w]).collect())
}
