//! Acceptance criteria. Every test prints one PASS/FAIL line per checked
//! quantity followed by a summary line for the criterion, then asserts.
//!
//! Tolerances are pinned here; targets come from the checked-in fixture.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use glasslam::elements::{self, ElementVector, HistoryOffsets, Kinematics, SectionStiffness};
use glasslam::io::tables::reference_values;
use glasslam::material::{
    effective_step_moduli, update_state, ConstitutiveClosure, GeneralizedStrains, MaxwellUnit, PronyChain,
    SectionProperties, SectionState,
};
use glasslam::model::{build_model, LaminateGeometry, LaminateModel};
use glasslam::presets::{self, ValidationBeam};
use glasslam::reference;
use glasslam::solver::{run_history, LoadHistory, ResultRow, RunOptions, SolverConfig, TimeGrid};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOL_TEMPERATURE: f64 = 0.01;
const TOL_VALIDATION: f64 = 0.015;
const TOL_FORMULATION_ABS: f64 = 0.01;
const TOL_FS_VK_DEFLECTION: f64 = 0.001;
const TOL_FS_VK_STRESS: f64 = 0.02;
const TOL_CLOSURE: f64 = 0.001;
const TOL_JACOBIAN: f64 = 1e-5;
const TOL_GRADIENT: f64 = 1e-6;
const TOL_EXACT: f64 = 1e-10;
const TOL_SEMIGROUP: f64 = 1e-12;
const TOL_TIME_HALVING: f64 = 0.001;
const TOL_MESH: f64 = 0.002;
const TOL_DETERMINATE: f64 = 0.001;
const EPS: f64 = 1e-5;
const RANDOM_STATES: usize = 100;

const N_EL: usize = 500;
const HOLD: f64 = 1e5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Structure {
    GeometryI,
    GeometryII,
    Beam(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Variant {
    Laminate,
    Monolithic,
    Layered,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct Scenario {
    structure: Structure,
    variant: Variant,
    q_bits: u64,
    temp_bits: u64,
    kinematics: Kinematics,
    bulk: bool,
    n_el: usize,
    refine: usize,
}

impl Scenario {
    fn new(structure: Structure, q: f64, temperature: f64, kinematics: Kinematics, bulk: bool) -> Self {
        Self {
            structure,
            variant: Variant::Laminate,
            q_bits: q.to_bits(),
            temp_bits: temperature.to_bits(),
            kinematics,
            bulk,
            n_el: N_EL,
            refine: 1,
        }
    }

    fn beam(i: usize, kinematics: Kinematics, bulk: bool) -> Self {
        let b = beams()[i];
        Self::new(Structure::Beam(i), b.load, b.temperature, kinematics, bulk)
    }

    fn with(self, f: impl FnOnce(&mut Self)) -> Self {
        let mut s = self;
        f(&mut s);
        s
    }

    fn geometry(&self) -> LaminateGeometry {
        match self.structure {
            Structure::GeometryI => presets::geometry_i(),
            Structure::GeometryII => presets::geometry_ii(),
            Structure::Beam(i) => beams()[i].geometry,
        }
    }

    fn end_time(&self) -> f64 {
        match self.structure {
            Structure::Beam(_) => presets::VALIDATION_DURATION,
            _ => HOLD,
        }
    }

    fn model(&self) -> LaminateModel {
        let closure = if self.bulk { presets::constant_bulk() } else { presets::constant_poisson() };
        let mats = presets::materials(closure);
        let g = self.geometry();
        match self.variant {
            Variant::Laminate => build_model(&g, &mats, self.n_el),
            Variant::Monolithic => reference::monolithic_model(&g, &mats, self.n_el),
            Variant::Layered => reference::layered_model(&g, &mats, self.n_el),
        }
        .unwrap()
    }

    fn compute(&self) -> Vec<ResultRow> {
        let grid = TimeGrid::standard(self.end_time()).unwrap().refined(self.refine);
        let options = RunOptions {
            kinematics: self.kinematics,
            temperature: f64::from_bits(self.temp_bits),
            solver: SolverConfig::default(),
        };
        let load = LoadHistory::ramp_and_hold(f64::from_bits(self.q_bits));
        run_history(&self.model(), &load, &grid, &options).unwrap()
    }
}

fn beams() -> [ValidationBeam; 3] {
    presets::validation_beams()
}

type Cache = Mutex<HashMap<Scenario, Arc<OnceLock<Arc<Vec<ResultRow>>>>>>;

/// Each scenario is computed once per test binary, whichever test asks first.
fn run(s: Scenario) -> Arc<Vec<ResultRow>> {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let slot = CACHE
        .get_or_init(Default::default)
        .lock()
        .unwrap()
        .entry(s)
        .or_default()
        .clone();
    slot.get_or_init(|| Arc::new(s.compute())).clone()
}

fn last(s: Scenario) -> ResultRow {
    run(s).last().unwrap().clone()
}

struct Report {
    name: &'static str,
    ok: bool,
    checks: usize,
}

impl Report {
    fn new(name: &'static str) -> Self {
        Self { name, ok: true, checks: 0 }
    }

    fn check(&mut self, label: &str, pass: bool, detail: String) {
        self.checks += 1;
        self.ok &= pass;
        println!("  [{}] {label}: {detail}", if pass { "PASS" } else { "FAIL" });
    }

    /// Relative comparison against a stored or companion value.
    fn rel(&mut self, label: &str, computed: f64, target: f64, tol: f64) {
        let err = (computed - target) / target;
        self.check(
            label,
            err.abs() <= tol,
            format!("{computed:.6} vs {target:.6} ({:+.4}%, tol {:.2}%)", 100.0 * err, 100.0 * tol),
        );
    }

    fn bound(&mut self, label: &str, value: f64, tol: f64) {
        self.check(label, value <= tol, format!("{value:.3e} (tol {tol:.0e})"));
    }

    fn finish(self) {
        println!(
            "{} {}: {} checks",
            if self.ok { "PASS" } else { "FAIL" },
            self.name,
            self.checks
        );
        assert!(self.ok, "{} failed", self.name);
    }
}

fn max_rel_diff(a: &[ResultRow], b: &[ResultRow], f: impl Fn(&ResultRow) -> f64) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| ((f(x) - f(y)) / f(y)).abs())
        .fold(0.0, f64::max)
}

fn temperature_scenarios() -> Vec<(f64, Kinematics, Scenario)> {
    let t = reference_values().temperature;
    let mut out = Vec::new();
    for &temp in &t.temperatures_C {
        for kin in [Kinematics::VonKarman, Kinematics::Linear] {
            out.push((temp, kin, Scenario::new(Structure::GeometryI, t.load_N_per_m, temp, kin, false)));
        }
    }
    out
}

fn formulation_scenario(q: f64, kin: Kinematics, bulk: bool) -> Scenario {
    let f = reference_values().formulations;
    Scenario::new(Structure::GeometryI, q, f.temperature_C, kin, bulk)
}

#[test]
fn criterion_1_temperature_table() {
    let t = reference_values().temperature;
    let mut r = Report::new("criterion 1 (clamped beam at 0/25/50 C)");
    for (i, &temp) in t.temperatures_C.iter().enumerate() {
        let vk = last(Scenario::new(Structure::GeometryI, t.load_N_per_m, temp, Kinematics::VonKarman, false));
        let lin = last(Scenario::new(Structure::GeometryI, t.load_N_per_m, temp, Kinematics::Linear, false));
        r.rel(&format!("VK_nu w [mm] @ {temp} C"), vk.midspan_deflection * 1e3, t.vk_nu_deflection_mm[i], TOL_TEMPERATURE);
        r.rel(&format!("VK_nu sigma [MPa] @ {temp} C"), vk.midspan_stress * 1e-6, t.vk_nu_midspan_stress_MPa[i], TOL_TEMPERATURE);
        r.rel(&format!("LIN_nu w [mm] @ {temp} C"), lin.midspan_deflection * 1e3, t.lin_nu_deflection_mm[i], TOL_TEMPERATURE);
        r.rel(&format!("LIN_nu sigma [MPa] @ {temp} C"), lin.midspan_stress * 1e-6, t.lin_nu_midspan_stress_MPa[i], TOL_TEMPERATURE);
    }
    r.finish();
}

#[test]
fn criterion_2_validation_beams() {
    let v = reference_values().validation;
    let mats = presets::materials(presets::constant_poisson());
    let mut r = Report::new("criterion 2 (laboratory beams after 10 h)");
    for (i, b) in beams().iter().enumerate() {
        let name = &v.beams[i];
        let vk = last(Scenario::beam(i, Kinematics::VonKarman, false));
        r.rel(&format!("{name} VK_nu w [mm]"), vk.midspan_deflection * 1e3, v.vk_nu_deflection_mm[i], TOL_VALIDATION);
        r.rel(&format!("{name} VK_nu sigma [MPa]"), vk.midspan_stress * 1e-6, v.vk_nu_midspan_stress_MPa[i], TOL_VALIDATION);
        let mon = reference::monolithic_limit(&b.geometry, &mats, b.load, N_EL, Kinematics::VonKarman).unwrap();
        let lay = reference::layered_limit(&b.geometry, &mats, b.load, N_EL, Kinematics::VonKarman).unwrap();
        r.rel(&format!("{name} monolithic w [mm]"), mon.deflection * 1e3, v.monolithic_deflection_mm[i], TOL_VALIDATION);
        r.rel(&format!("{name} layered w [mm]"), lay.deflection * 1e3, v.layered_deflection_mm[i], TOL_VALIDATION);
    }
    r.finish();
}

#[test]
fn criterion_3_formulations_under_load_scaling() {
    let f = reference_values().formulations;
    let mut r = Report::new("criterion 3 (VK and FS at 50/500/5000 N/m)");
    for (i, &q) in f.loads_N_per_m.iter().enumerate() {
        let vk = last(formulation_scenario(q, Kinematics::VonKarman, false));
        r.rel(&format!("VK w [mm] @ {q} N/m"), vk.midspan_deflection * 1e3, f.vk_deflection_mm[i], TOL_FORMULATION_ABS);
    }
    let q = *f.loads_N_per_m.last().unwrap();
    let vk = last(formulation_scenario(q, Kinematics::VonKarman, false));
    let fs = last(formulation_scenario(q, Kinematics::Reissner, false));
    r.rel(&format!("FS vs VK w [mm] @ {q} N/m"), fs.midspan_deflection * 1e3, vk.midspan_deflection * 1e3, TOL_FS_VK_DEFLECTION);
    r.rel(&format!("FS vs VK max sigma [MPa] @ {q} N/m"), fs.max_stress * 1e-6, vk.max_stress * 1e-6, TOL_FS_VK_STRESS);
    r.finish();
}

#[test]
fn criterion_4_closure_agreement() {
    let mut r = Report::new("criterion 4 (constant bulk vs constant Poisson, all output times)");
    let mut pairs: Vec<(String, Scenario, bool)> = Vec::new();
    for (temp, kin, s) in temperature_scenarios() {
        pairs.push((format!("{} @ {temp} C", kin.label()), s, false));
    }
    for i in 0..beams().len() {
        pairs.push((format!("beam {}", reference_values().validation.beams[i]), Scenario::beam(i, Kinematics::VonKarman, false), false));
    }
    for &q in &reference_values().formulations.loads_N_per_m {
        for kin in [Kinematics::VonKarman, Kinematics::Reissner] {
            pairs.push((format!("{} @ {q} N/m", kin.label()), formulation_scenario(q, kin, false), true));
        }
    }
    for (label, nu, global_stress) in pairs {
        let k = nu.with(|s| s.bulk = true);
        let (a, b) = (run(k), run(nu));
        r.rel(&format!("{label} max |dw|/w"), 1.0 + max_rel_diff(&a, &b, |x| x.midspan_deflection), 1.0, TOL_CLOSURE);
        let stress = |x: &ResultRow| if global_stress { x.max_stress } else { x.midspan_stress };
        r.rel(&format!("{label} max |dsigma|/sigma"), 1.0 + max_rel_diff(&a, &b, stress), 1.0, TOL_CLOSURE);
    }
    r.finish();
}

fn fd_step(i: usize, l: f64) -> f64 {
    if i % 3 == 2 {
        1e-6
    } else {
        1e-6 * l
    }
}

#[test]
fn criterion_5a_finite_difference_consistency() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a);
    let mut r = Report::new("criterion 5a (finite-difference consistency)");
    let mut worst_k = [0.0f64; 3];
    let mut worst_g = [0.0f64; 3];
    for _ in 0..RANDOM_STATES {
        let l = rng.gen_range(1e-3..0.5);
        let d = ElementVector::from_fn(|i, _| match i % 3 {
            0 => rng.gen_range(-1e-3..1e-3),
            1 => rng.gen_range(-0.05..0.05),
            _ => rng.gen_range(-0.6..0.6),
        });
        let s = SectionStiffness {
            ea: rng.gen_range(1e3..1e8),
            gas: rng.gen_range(1e2..1e8),
            ei: rng.gen_range(1e-3..1e2),
        };
        let o = HistoryOffsets {
            normal: rng.gen_range(-1e3..1e3),
            shear: rng.gen_range(-1e3..1e3),
            moment: rng.gen_range(-1e3..1e3),
        };
        let elastic = HistoryOffsets::default();
        for (ki, kin) in Kinematics::ALL.into_iter().enumerate() {
            let k = elements::tangent_stiffness(kin, &d, l, &s, &o);
            let mut fd = k * 0.0;
            let mut grad = ElementVector::zeros();
            for j in 0..6 {
                let h = fd_step(j, l);
                let (mut p, mut m) = (d, d);
                p[j] += h;
                m[j] -= h;
                fd.set_column(
                    j,
                    &((elements::internal_forces(kin, &p, l, &s, &o) - elements::internal_forces(kin, &m, l, &s, &o)) / (2.0 * h)),
                );
                grad[j] = (elements::element_energy(kin, &p, l, &s, &elastic) - elements::element_energy(kin, &m, l, &s, &elastic))
                    / (2.0 * h);
            }
            worst_k[ki] = worst_k[ki].max((k - fd).norm() / k.norm());
            let f = elements::internal_forces(kin, &d, l, &s, &elastic);
            worst_g[ki] = worst_g[ki].max((f - grad).norm() / f.norm());
        }
    }
    for (ki, kin) in Kinematics::ALL.into_iter().enumerate() {
        r.bound(&format!("{} element tangent vs force Jacobian, {RANDOM_STATES} states", kin.label()), worst_k[ki], TOL_JACOBIAN);
        r.bound(&format!("{} element forces vs energy gradient, {RANDOM_STATES} states", kin.label()), worst_g[ki], TOL_GRADIENT);
    }

    // assembled tangent including the multiplier curvature
    let model = build_model(&presets::geometry_i(), &presets::materials(presets::constant_poisson()), 4).unwrap();
    let n = model.n_dofs();
    let scale = |i: usize| [1e-4, 2e-2, 0.3][i % 3];
    let mut worst = [0.0f64; 3];
    for _ in 0..RANDOM_STATES {
        let d_prev = nalgebra::DVector::from_fn(n, |i, _| rng.gen_range(-1.0..1.0) * scale(i));
        let ctx0 = model.step_context(Kinematics::VonKarman, 1.0, &model.initial_history()).unwrap();
        let history = model.advance_history(&d_prev, &ctx0, &model.initial_history());
        let d = nalgebra::DVector::from_fn(n, |i, _| rng.gen_range(-1.0..1.0) * scale(i));
        let lambda = nalgebra::DVector::from_fn(model.constraints.len(), |_, _| rng.gen_range(-1e3..1e3));
        let dt = 10f64.powf(rng.gen_range(-4.0..6.0));
        for (ki, kin) in Kinematics::ALL.into_iter().enumerate() {
            let ctx = model.step_context(kin, dt, &history).unwrap();
            let residual = |x: &nalgebra::DVector<f64>| {
                let (_, jac) = model.constraints.compatibility(x, kin);
                model.internal_forces(x, &ctx) + jac.tr_mul_vec(&lambda)
            };
            let mut k = model.assemble(&d, &ctx).k;
            model.constraints.add_multiplier_stiffness(&d, &lambda, kin, &mut k);
            let k = k.to_dense();
            let mut fd = nalgebra::DMatrix::zeros(n, n);
            let l = model.mesh.element_length(0);
            for j in 0..n {
                let h = fd_step(j, l);
                let (mut p, mut m) = (d.clone(), d.clone());
                p[j] += h;
                m[j] -= h;
                fd.set_column(j, &((residual(&p) - residual(&m)) / (2.0 * h)));
            }
            worst[ki] = worst[ki].max((&k - &fd).norm() / k.norm());
        }
    }
    for (ki, kin) in Kinematics::ALL.into_iter().enumerate() {
        r.bound(&format!("{} global tangent vs residual Jacobian, {RANDOM_STATES} states", kin.label()), worst[ki], TOL_JACOBIAN);
    }
    r.finish();
}

/// `int_0^t exp(-(t-s)/theta) de(s)` for piecewise-linear `e`.
fn convolution(times: &[f64], values: &[f64], upto: usize, theta: f64) -> f64 {
    let t = times[upto];
    (1..=upto)
        .map(|i| {
            let (a, b) = (times[i - 1], times[i]);
            let rate = (values[i] - values[i - 1]) / (b - a);
            -rate * theta * (-(t - b) / theta).exp() * (-(b - a) / theta).exp_m1()
        })
        .sum()
}

#[test]
fn criterion_5b_viscoelastic_exactness() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5b);
    let mut r = Report::new("criterion 5b (incremental update vs convolution)");
    let nu = 0.49;
    let poisson = ConstitutiveClosure::ConstantPoisson { poisson: nu };
    let bulk = ConstitutiveClosure::ConstantBulk { bulk_modulus: 2e9 };
    let props = SectionProperties::interlayer(0.15, 0.76e-3);
    let (mut worst_exact, mut worst_split) = (0.0f64, 0.0f64);
    for case in 0..RANDOM_STATES {
        let n_units = rng.gen_range(1..7);
        let chain = PronyChain::new(
            rng.gen_range(1e3..1e6),
            (0..n_units)
                .map(|_| MaxwellUnit {
                    modulus: rng.gen_range(1e4..1e8),
                    relaxation_time: 10f64.powf(rng.gen_range(-4.0..4.0)),
                })
                .collect(),
        )
        .unwrap();
        let closure = if case % 2 == 0 { poisson } else { bulk };
        let n_seg = rng.gen_range(1..12);
        let mut times = vec![0.0];
        let mut e = vec![[0.0; 3]];
        for _ in 0..n_seg {
            times.push(times.last().unwrap() + 10f64.powf(rng.gen_range(-5.0..3.0)));
            e.push([0, 1, 2].map(|_| rng.gen_range(-1e-3..1e-3)));
        }
        let mut state = SectionState::zero(chain.len());
        let mut got = vec![state.forces];
        for i in 1..times.len() {
            let eff = effective_step_moduli(times[i] - times[i - 1], &chain, &closure).unwrap();
            let d = GeneralizedStrains {
                eps0: e[i][0] - e[i - 1][0],
                kappa: e[i][1] - e[i - 1][1],
                gamma: e[i][2] - e[i - 1][2],
            };
            state = update_state(&d, &state, &props, &eff, &closure);
            got.push(state.forces);
        }
        let young = |g: f64| 2.0 * (1.0 + nu) * g;
        // normal and bending are exact under constant Poisson; shear under both closures
        let comps: &[usize] = if case % 2 == 0 { &[0, 1, 2] } else { &[2] };
        for &k in comps {
            let series: Vec<f64> = e.iter().map(|v| v[k]).collect();
            let exact: Vec<f64> = (0..times.len())
                .map(|i| {
                    let (factor, modulus): (f64, &dyn Fn(f64) -> f64) = match k {
                        0 => (props.area, &young),
                        1 => (props.inertia, &young),
                        _ => (props.shear_area, &|g| g),
                    };
                    factor
                        * (modulus(chain.g_inf()) * series[i]
                            + chain
                                .units()
                                .iter()
                                .map(|u| modulus(u.modulus) * convolution(&times, &series, i, u.relaxation_time))
                                .sum::<f64>())
                })
                .collect();
            let scale = exact.iter().fold(f64::MIN_POSITIVE, |m, v| m.max(v.abs()));
            for (i, f) in got.iter().enumerate() {
                let v = [f.normal, f.moment, f.shear][k];
                worst_exact = worst_exact.max((v - exact[i]).abs() / scale);
            }
        }
        // one step against two half steps from the reached state
        let dt = 10f64.powf(rng.gen_range(-3.0..3.0));
        let de = [0, 1, 2].map(|_| rng.gen_range(-1e-3..1e-3));
        let full = GeneralizedStrains { eps0: de[0], kappa: de[1], gamma: de[2] };
        let half = GeneralizedStrains { eps0: de[0] / 2.0, kappa: de[1] / 2.0, gamma: de[2] / 2.0 };
        let one = update_state(&full, &state, &props, &effective_step_moduli(dt, &chain, &closure).unwrap(), &closure);
        let eff_h = effective_step_moduli(dt / 2.0, &chain, &closure).unwrap();
        let two = update_state(&half, &update_state(&half, &state, &props, &eff_h, &closure), &props, &eff_h, &closure);
        let e0 = young(chain.g0());
        let checks = [
            (one.forces.normal, two.forces.normal, state.forces.normal, e0 * props.area * de[0]),
            (one.forces.moment, two.forces.moment, state.forces.moment, e0 * props.inertia * de[1]),
            (one.forces.shear, two.forces.shear, state.forces.shear, chain.g0() * props.shear_area * de[2]),
        ];
        for &k in comps {
            let (a, b, s0, inc) = checks[k];
            let scale = a.abs().max(s0.abs()).max(inc.abs()).max(f64::MIN_POSITIVE);
            worst_split = worst_split.max((a - b).abs() / scale);
        }
    }
    r.bound(&format!("exactness on {RANDOM_STATES} piecewise-linear histories"), worst_exact, TOL_EXACT);
    r.bound(&format!("step-splitting identity on {RANDOM_STATES} states"), worst_split, TOL_SEMIGROUP);
    r.finish();
}

#[test]
fn criterion_5c_limit_ordering() {
    let mut r = Report::new("criterion 5c (monolithic <= laminated <= layered at every output time)");
    let mut scenarios: Vec<(String, Scenario)> = temperature_scenarios()
        .into_iter()
        .map(|(t, kin, s)| (format!("{} @ {t} C", kin.label()), s))
        .collect();
    for i in 0..beams().len() {
        scenarios.push((format!("beam {}", reference_values().validation.beams[i]), Scenario::beam(i, Kinematics::VonKarman, false)));
    }
    for (label, s) in scenarios {
        let lam = run(s);
        let mon = run(s.with(|x| x.variant = Variant::Monolithic));
        let lay = run(s.with(|x| x.variant = Variant::Layered));
        let violations = lam
            .iter()
            .zip(mon.iter().zip(lay.iter()))
            .filter(|(l, (m, y))| !(m.midspan_deflection <= l.midspan_deflection && l.midspan_deflection <= y.midspan_deflection))
            .count();
        let f = lam.last().unwrap();
        r.check(
            &label,
            violations == 0,
            format!(
                "{violations} of {} times out of order; final {:.4} <= {:.4} <= {:.4} mm",
                lam.len(),
                mon.last().unwrap().midspan_deflection * 1e3,
                f.midspan_deflection * 1e3,
                lay.last().unwrap().midspan_deflection * 1e3
            ),
        );
    }
    r.finish();
}

#[test]
fn criterion_5d_convergence_contract() {
    let mut r = Report::new("criterion 5d (residuals, time-step halving, mesh refinement)");
    for (temp, kin, s) in temperature_scenarios() {
        let label = format!("{} @ {temp} C", kin.label());
        let rows = run(s);
        let worst = rows.iter().map(|x| x.eta1.max(x.eta2)).fold(0.0, f64::max);
        r.bound(&format!("{label} max(eta1, eta2) over {} steps", rows.len()), worst, EPS);
        let base = rows.last().unwrap();
        let halved = last(s.with(|x| x.refine = 2));
        r.rel(&format!("{label} w, halved steps"), halved.midspan_deflection, base.midspan_deflection, TOL_TIME_HALVING);
        r.rel(&format!("{label} sigma, halved steps"), halved.midspan_stress, base.midspan_stress, TOL_TIME_HALVING);
        let fine = last(s.with(|x| x.n_el = 2 * N_EL));
        r.rel(&format!("{label} w, 1000 elements"), fine.midspan_deflection, base.midspan_deflection, TOL_MESH);
        r.rel(&format!("{label} sigma, 1000 elements"), fine.midspan_stress, base.midspan_stress, TOL_MESH);
    }
    r.finish();
}

#[test]
fn criterion_5e_determinate_identity() {
    let mut r = Report::new("criterion 5e (simply supported beam, LIN vs VK)");
    let t = reference_values().temperature;
    for &temp in &t.temperatures_C {
        let vk = run(Scenario::new(Structure::GeometryII, t.load_N_per_m, temp, Kinematics::VonKarman, false));
        let lin = run(Scenario::new(Structure::GeometryII, t.load_N_per_m, temp, Kinematics::Linear, false));
        let d = max_rel_diff(&lin, &vk, |x| x.midspan_deflection);
        r.bound(&format!("max over {} times of |w_LIN - w_VK|/w_VK @ {temp} C", vk.len()), d, TOL_DETERMINATE);
    }
    r.finish();
}

#[test]
fn criterion_6_exclusions() {
    println!("  [EXCLUDED] 2D continuum reference solutions: external solver, not reproduced");
    println!("  [EXCLUDED] experimental measurements: physical tests, not reproduced");
    println!("PASS criterion 6: only the beam-model and limit targets are compared");
}
