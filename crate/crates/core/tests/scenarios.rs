//! End-to-end behaviour of the solver, reference models and scenario driver.

use glasslam::elements::Kinematics;
use glasslam::io::{parse_config, run_scenario};
use glasslam::material::PronyChain;
use glasslam::model::{build_model, LaminateModel};
use glasslam::presets;
use glasslam::reference;
use glasslam::solver::{
    newton_solve_step, run_history, GridSegment, LoadHistory, ReducedLayout, RunOptions, SolverConfig, SystemState,
    TimeGrid,
};
use nalgebra::DVector;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn options(kinematics: Kinematics, temperature: f64) -> RunOptions {
    RunOptions {
        kinematics,
        temperature,
        solver: SolverConfig::default(),
    }
}

fn geometry_i(bulk: bool, n_el: usize) -> LaminateModel {
    let closure = if bulk { presets::constant_bulk() } else { presets::constant_poisson() };
    build_model(&presets::geometry_i(), &presets::materials(closure), n_el).unwrap()
}

#[test]
fn preset_scenario_reaches_the_hold_deflection() {
    let cfg = parse_config("[geometry]\npreset = \"geometry-I\"\n").unwrap();
    let rows = run_scenario(&cfg).unwrap();
    let w = rows.last().unwrap().midspan_deflection;
    assert!((w - 6.838e-3).abs() <= 0.01 * 6.838e-3, "{w}");
    for pair in rows.windows(2) {
        assert!(pair[1].time > pair[0].time);
    }
}

#[test]
fn zero_load_history_gives_zero_response() {
    let cfg = parse_config(
        "[geometry]\npreset = \"geometry-I\"\n[load]\nintensity_N_per_m = 0.0\n[solver]\nn_el = 50\nkinematics = \"fs\"\n",
    )
    .unwrap();
    for r in run_scenario(&cfg).unwrap() {
        assert_eq!(r.midspan_deflection, 0.0);
        assert_eq!(r.max_stress, 0.0);
        assert!(r.glass_stress.iter().all(|&s| s == 0.0));
        assert_eq!((r.interlayer.normal, r.interlayer.shear, r.interlayer.moment), (0.0, 0.0, 0.0));
    }
}

#[test]
fn finite_strain_bulk_matches_von_karman_poisson() {
    let base = "[geometry]\npreset = \"geometry-I\"\n";
    let a = run_scenario(&parse_config(&format!("{base}[material]\nclosure = \"k\"\n[solver]\nkinematics = \"fs\"\n")).unwrap()).unwrap();
    let b = run_scenario(&parse_config(base).unwrap()).unwrap();
    for (x, y) in a.iter().zip(&b) {
        let d = (x.midspan_deflection - y.midspan_deflection).abs() / y.midspan_deflection;
        assert!(d <= 1e-3, "t = {}: {d:e}", x.time);
    }
}

/// Drives the steps by hand to see every Newton residual.
fn residual_traces(model: &LaminateModel, kin: Kinematics, q: f64, temperature: f64) -> Vec<Vec<f64>> {
    let layout = ReducedLayout::new(model);
    let grid = TimeGrid::standard(1e5).unwrap();
    let load = LoadHistory::ramp_and_hold(q);
    let shift = model.materials.interlayer.wlf.shift_factor(temperature).unwrap();
    let mut state = SystemState::initial(model);
    let mut traces = Vec::new();
    for (step, &t) in grid.times()[1..].iter().enumerate() {
        let ctx = model.step_context(kin, (t - state.time) / shift, &state.history).unwrap();
        let f_ext = model.external_load(load.intensity(t));
        let sol = newton_solve_step(model, &layout, &state.d, &f_ext, &ctx, &SolverConfig::default(), step + 1).unwrap();
        traces.push(sol.residuals.iter().map(|r| r.eta1).collect());
        state = SystemState {
            time: t,
            history: model.advance_history(&sol.d, &ctx, &state.history),
            d: sol.d,
            lambda: sol.lambda,
        };
    }
    traces
}

#[test]
fn newton_converges_superlinearly() {
    let model = geometry_i(false, 500);
    for (kin, q) in [(Kinematics::VonKarman, 10.0), (Kinematics::Reissner, 10.0), (Kinematics::VonKarman, 5000.0)] {
        for (step, trace) in residual_traces(&model, kin, q, 25.0).iter().enumerate() {
            for pair in trace.windows(2) {
                if pair[0] < 1e-2 {
                    assert!(pair[1] <= pair[0] / 10.0, "{kin:?} q = {q}, step {}: {trace:?}", step + 1);
                }
            }
        }
    }
}

#[test]
fn constraint_jacobian_has_full_row_rank() {
    let model = geometry_i(false, 6);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let d = DVector::from_fn(model.n_dofs(), |i, _| match i % 3 {
            2 => rng.gen_range(-1.5..1.5),
            _ => rng.gen_range(-0.1..0.1),
        });
        for kin in Kinematics::ALL {
            let (_, jac) = model.constraints.compatibility(&d, kin);
            let svd = jac.to_dense().svd(false, false);
            let s = &svd.singular_values;
            let rank = s.iter().filter(|&&v| v > 1e-10 * s.max()).count();
            assert_eq!(rank, model.constraints.len(), "{kin:?}");
        }
    }
}

#[test]
fn history_enters_forces_affinely() {
    let model = geometry_i(true, 8);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let n = model.n_dofs();
    let d = DVector::from_fn(n, |_, _| rng.gen_range(-1e-3..1e-3));
    let d_prev = DVector::from_fn(n, |_, _| rng.gen_range(-1e-3..1e-3));
    let zero = model.initial_history();
    let ctx0 = model.step_context(Kinematics::VonKarman, 0.1, &zero).unwrap();
    let once = model.advance_history(&d_prev, &ctx0, &zero);
    let twice: Vec<Vec<_>> = once
        .iter()
        .map(|layer| {
            layer
                .iter()
                .map(|h| glasslam::model::ElementHistory {
                    state: h.state.scaled(2.0),
                    strains: glasslam::material::GeneralizedStrains {
                        eps0: 2.0 * h.strains.eps0,
                        kappa: 2.0 * h.strains.kappa,
                        gamma: 2.0 * h.strains.gamma,
                    },
                })
                .collect()
        })
        .collect();
    for kin in Kinematics::ALL {
        let f = |hist: &[Vec<glasslam::model::ElementHistory>]| {
            model.internal_forces(&d, &model.step_context(kin, 3.0, hist).unwrap())
        };
        let (f0, f1, f2) = (f(&zero), f(&once), f(&twice));
        let lhs = &f2 - &f1;
        let rhs = &f1 - &f0;
        assert!((&lhs - &rhs).norm() <= 1e-9 * rhs.norm().max(f0.norm()), "{kin:?}");
    }
}

#[test]
fn linear_kinematics_overestimate_the_clamped_beam() {
    let model = geometry_i(false, 500);
    let grid = TimeGrid::standard(1e5).unwrap();
    let load = LoadHistory::ramp_and_hold(10.0);
    let lin = run_history(&model, &load, &grid, &options(Kinematics::Linear, 25.0)).unwrap();
    let vk = run_history(&model, &load, &grid, &options(Kinematics::VonKarman, 25.0)).unwrap();
    let ratio = lin.last().unwrap().midspan_deflection / vk.last().unwrap().midspan_deflection;
    assert!((1.5..=4.0).contains(&ratio), "{ratio}");
}

#[test]
fn secant_model_of_an_elastic_interlayer_is_the_viscoelastic_solution() {
    let g = presets::geometry_i();
    let mut mats = presets::materials(presets::constant_poisson());
    mats.interlayer.chain = PronyChain::elastic(1e6).unwrap();
    let model = build_model(&g, &mats, 200).unwrap();
    // just above the round-off floor of the residual for this beam
    let tight = SolverConfig {
        eps1: 5e-7,
        eps2: 1e-10,
        ..SolverConfig::default()
    };
    let rows = run_history(
        &model,
        &LoadHistory::ramp_and_hold(10.0),
        &TimeGrid::standard(1e5).unwrap(),
        &RunOptions {
            kinematics: Kinematics::Reissner,
            temperature: 25.0,
            solver: tight,
        },
    )
    .unwrap();
    let visco = rows.last().unwrap();
    let secant = reference::elastic_secant(&g, &mats, 10.0, 1e5, 25.0, 200, Kinematics::Reissner).unwrap();
    assert!((secant.deflection - visco.midspan_deflection).abs() <= 1e-6 * visco.midspan_deflection);
    assert!((secant.max_stress - visco.max_stress).abs() <= 1e-6 * visco.max_stress);
}

#[test]
fn short_duration_secant_matches_instantaneous_response() {
    let g = presets::geometry_i();
    let mats = presets::materials(presets::constant_poisson());
    let model = build_model(&g, &mats, 200).unwrap();
    let ramp = 1e-12;
    let load = LoadHistory::new(vec![(0.0, 0.0), (ramp, 10.0)]).unwrap();
    let grid = TimeGrid::from_segments(&[GridSegment { end: ramp, steps: 10 }]).unwrap();
    let rows = run_history(&model, &load, &grid, &options(Kinematics::Reissner, 25.0)).unwrap();
    let visco = rows.last().unwrap().midspan_deflection;
    let secant = reference::elastic_secant(&g, &mats, 10.0, ramp, 25.0, 200, Kinematics::Reissner).unwrap();
    assert!((secant.deflection - visco).abs() <= 0.01 * visco, "{} vs {visco}", secant.deflection);
}

#[test]
fn secant_at_high_temperature_equals_the_relaxed_laminate() {
    let g = presets::geometry_i();
    let mats = presets::materials(presets::constant_poisson());
    let secant = reference::elastic_secant(&g, &mats, 10.0, 1e5, 25.0, 500, Kinematics::Reissner).unwrap();
    assert!((secant.deflection - 6.857e-3).abs() <= 0.01 * 6.857e-3);
    let hot = reference::elastic_secant(&g, &mats, 10.0, 1e5, 50.0, 500, Kinematics::Reissner).unwrap();
    assert!((hot.deflection - 6.863e-3).abs() <= 0.01 * 6.863e-3);
}

#[test]
fn monolithic_limit_adds_the_shear_term_to_bending() {
    let b = presets::validation_beams()[0];
    let mats = presets::materials(presets::constant_poisson());
    let mono = reference::monolithic_limit(&b.geometry, &mats, b.load, 500, Kinematics::Linear).unwrap();
    let h = b.geometry.total_thickness();
    let (l, w) = (b.geometry.span, b.geometry.width);
    let glass = mats.glass;
    let bending = 5.0 * b.load * l.powi(4) / (384.0 * glass.young * w * h.powi(3) / 12.0);
    assert!((bending - 0.4375e-3).abs() <= 1e-3 * 0.4375e-3, "{bending}");
    let shear = b.load * l * l / (8.0 * glass.shear() * 5.0 / 6.0 * w * h);
    assert!((mono.deflection - bending - shear).abs() <= 2e-3 * mono.deflection);
}

#[test]
fn limits_of_a_single_ply_coincide() {
    // both limits collapse onto the same section when the interlayer is vanishingly thin
    let mut g = presets::geometry_ii();
    g.thickness = [6e-3, 1e-9, 6e-3];
    let mats = presets::materials(presets::constant_poisson());
    let mono = reference::monolithic_limit(&g, &mats, 10.0, 100, Kinematics::Linear).unwrap();
    let lay = reference::layered_limit(&g, &mats, 10.0, 100, Kinematics::Linear).unwrap();
    // a monolithic section has four times the inertia of two separate plies of half its depth
    assert!((lay.deflection / mono.deflection - 4.0).abs() < 0.05, "{}", lay.deflection / mono.deflection);
}
