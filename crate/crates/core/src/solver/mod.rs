//! Constrained Newton iteration and incremental time stepping.

mod kkt;
mod time;

use nalgebra::DVector;
use serde::{Deserialize, Serialize};

pub use kkt::{kkt_solve, kkt_solve_ordered};
pub use time::{GridSegment, LoadHistory, TimeGrid, JUMP_RAMP};

use crate::elements::Kinematics;
use crate::error::{Error, ResidualPair, Result};
use crate::linalg::TripletMatrix;
use crate::model::{ElementHistory, InterlayerExtremes, LaminateModel, StepContext};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    /// Tolerance on the normalized equilibrium residual.
    pub eps1: f64,
    /// Tolerance on the normalized compatibility residual.
    pub eps2: f64,
    pub max_newton_iters: usize,
    /// Divergence is declared when `eta1` exceeds its running minimum by this factor.
    pub divergence_factor: f64,
    /// Relative pivot threshold of the factorization.
    pub pivot_tol: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            eps1: 1e-5,
            eps2: 1e-5,
            max_newton_iters: 50,
            divergence_factor: 1e3,
            pivot_tol: 1e-13,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.eps1 > 0.0) {
            return Err(Error::config("solver.eps1", "must be positive"));
        }
        if !(self.eps2 > 0.0) {
            return Err(Error::config("solver.eps2", "must be positive"));
        }
        if self.max_newton_iters == 0 {
            return Err(Error::config("solver.max_newton_iters", "must be at least 1"));
        }
        Ok(())
    }
}

/// Free dofs and active constraint rows, with their band ordering.
#[derive(Debug, Clone)]
pub struct ReducedLayout {
    free: Vec<usize>,
    reduced: Vec<Option<usize>>,
    rows: Vec<usize>,
    position: Vec<usize>,
}

impl ReducedLayout {
    /// Unknowns are ordered node by node: the free dofs of every layer, then
    /// the active rows of that node. This keeps the bandwidth independent of
    /// the number of elements.
    pub fn new(model: &LaminateModel) -> Self {
        let free: Vec<usize> = (0..model.n_dofs()).filter(|&i| !model.fixed[i]).collect();
        let mut reduced = vec![None; model.n_dofs()];
        for (k, &i) in free.iter().enumerate() {
            reduced[i] = Some(k);
        }
        let rows = model.active_rows();
        let n = free.len();
        let mut by_node: Vec<Vec<usize>> = vec![Vec::new(); model.mesh.n_nodes()];
        for (k, &i) in free.iter().enumerate() {
            by_node[model.dofs.decode(i).1].push(k);
        }
        for (k, &r) in rows.iter().enumerate() {
            by_node[model.constraints.decode(r).1].push(n + k);
        }
        let mut position = vec![0; n + rows.len()];
        for (p, &u) in by_node.iter().flatten().enumerate() {
            position[u] = p;
        }
        Self {
            free,
            reduced,
            rows,
            position,
        }
    }

    pub fn n_free(&self) -> usize {
        self.free.len()
    }

    pub fn active_rows(&self) -> &[usize] {
        &self.rows
    }
}

/// Converged state at the end of a step.
#[derive(Debug, Clone)]
pub struct SystemState {
    /// True time [s].
    pub time: f64,
    pub d: DVector<f64>,
    /// Multipliers of all constraint rows; zero on inactive rows.
    pub lambda: DVector<f64>,
    pub history: Vec<Vec<ElementHistory>>,
}

impl SystemState {
    pub fn initial(model: &LaminateModel) -> Self {
        Self {
            time: 0.0,
            d: DVector::zeros(model.n_dofs()),
            lambda: DVector::zeros(model.constraints.len()),
            history: model.initial_history(),
        }
    }
}

/// Result of one Newton solve.
#[derive(Debug, Clone)]
pub struct StepSolution {
    pub d: DVector<f64>,
    pub lambda: DVector<f64>,
    /// Number of linear solves performed.
    pub iterations: usize,
    /// Residuals before every linear solve and at convergence.
    pub residuals: Vec<ResidualPair>,
}

/// Newton iteration on the saddle-point problem of one step, starting from
/// the displacements of the previous step and zero multipliers.
pub fn newton_solve_step(
    model: &LaminateModel,
    layout: &ReducedLayout,
    d_n: &DVector<f64>,
    f_ext: &DVector<f64>,
    ctx: &StepContext,
    config: &SolverConfig,
    step: usize,
) -> Result<StepSolution> {
    let kin = ctx.kinematics;
    let n_free = layout.n_free();
    let m = layout.rows.len();
    let load_norm = f_ext.norm().max(1.0);
    let h_min = model.min_thickness();
    let mut d = d_n.clone();
    let mut lambda = DVector::zeros(model.constraints.len());
    let mut residuals = Vec::new();
    let mut best = f64::INFINITY;

    for iteration in 0.. {
        let forces = model.assemble(&d, ctx);
        let (c_full, jac) = model.constraints.compatibility(&d, kin);
        let r_full = &forces.f_int - f_ext + jac.tr_mul_vec(&lambda);
        let eta1 = layout.free.iter().map(|&i| r_full[i].powi(2)).sum::<f64>().sqrt() / load_norm;
        let eta2 = layout.rows.iter().map(|&r| c_full[r].powi(2)).sum::<f64>().sqrt() / h_min;
        residuals.push(ResidualPair { eta1, eta2 });
        if eta1 <= config.eps1 && eta2 <= config.eps2 {
            return Ok(StepSolution {
                d,
                lambda,
                iterations: iteration,
                residuals,
            });
        }
        // The residual at the start point belongs to the previous equilibrium;
        // growth is judged from the first Newton iterate on.
        if iteration >= 1 {
            best = best.min(eta1);
        }
        let diverging = eta1 > config.divergence_factor * best;
        if iteration >= config.max_newton_iters || diverging || !eta1.is_finite() || !eta2.is_finite() {
            return Err(Error::NonConvergence {
                step,
                history: residuals,
            });
        }

        let mut k_full = forces.k;
        model.constraints.add_multiplier_stiffness(&d, &lambda, kin, &mut k_full);
        let mut k_red = TripletMatrix::new(n_free, n_free);
        k_red.entries.reserve(k_full.entries.len());
        for &(r, c, v) in &k_full.entries {
            if let (Some(a), Some(b)) = (layout.reduced[r], layout.reduced[c]) {
                k_red.push(a, b, v);
            }
        }
        let mut row_of = vec![None; model.constraints.len()];
        for (k, &r) in layout.rows.iter().enumerate() {
            row_of[r] = Some(k);
        }
        let mut c_red = TripletMatrix::new(m, n_free);
        for &(r, c, v) in &jac.entries {
            if let (Some(a), Some(b)) = (row_of[r], layout.reduced[c]) {
                c_red.push(a, b, v);
            }
        }
        let r_f = DVector::from_fn(n_free, |k, _| forces.f_int[layout.free[k]] - f_ext[layout.free[k]]);
        let r_c = DVector::from_fn(m, |k, _| c_full[layout.rows[k]]);
        let (dd, lam) = kkt_solve_ordered(&k_red, &c_red, &r_f, &r_c, &layout.position, config.pivot_tol)?;
        for (k, &i) in layout.free.iter().enumerate() {
            d[i] += dd[k];
        }
        lambda.fill(0.0);
        for (k, &r) in layout.rows.iter().enumerate() {
            lambda[r] = lam[k];
        }
    }
    unreachable!()
}

/// Summary of one accepted step.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRow {
    pub step: usize,
    /// True time [s].
    pub time: f64,
    /// Time on the reference-temperature clock [s].
    pub adjusted_time: f64,
    /// Load intensity [N/m].
    pub load: f64,
    /// Deflection at the reporting point [m].
    pub midspan_deflection: f64,
    /// Largest tensile glass stress at the reporting point [Pa].
    pub midspan_stress: f64,
    /// Largest tensile glass stress anywhere [Pa].
    pub max_stress: f64,
    /// Largest tensile stress of every glass layer, top to bottom [Pa].
    pub glass_stress: Vec<f64>,
    pub interlayer: InterlayerExtremes,
    pub eta1: f64,
    pub eta2: f64,
    pub iterations: usize,
}

/// Kinematics, temperature and solver settings of a run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RunOptions {
    pub kinematics: Kinematics,
    /// Temperature [°C].
    pub temperature: f64,
    pub solver: SolverConfig,
}

/// Stepwise driver that owns the evolving state of one model.
pub struct Simulation<'a> {
    model: &'a LaminateModel,
    options: RunOptions,
    load: LoadHistory,
    shift: f64,
    layout: ReducedLayout,
    state: SystemState,
    steps: usize,
}

impl<'a> Simulation<'a> {
    pub fn new(model: &'a LaminateModel, load: LoadHistory, options: RunOptions) -> Result<Self> {
        options.solver.validate()?;
        let shift = model.materials.interlayer.wlf.shift_factor(options.temperature)?;
        Ok(Self {
            model,
            options,
            load,
            shift,
            layout: ReducedLayout::new(model),
            state: SystemState::initial(model),
            steps: 0,
        })
    }

    pub fn state(&self) -> &SystemState {
        &self.state
    }

    pub fn shift_factor(&self) -> f64 {
        self.shift
    }

    /// Advances to true time `t` in one step.
    pub fn step_to(&mut self, t: f64) -> Result<ResultRow> {
        let dt = t - self.state.time;
        if !(dt > 0.0) {
            return Err(Error::argument("t", format!("time must increase, got {t:e} after {:e}", self.state.time)));
        }
        let step = self.steps + 1;
        let model = self.model;
        let ctx = model.step_context(self.options.kinematics, dt / self.shift, &self.state.history)?;
        let q = self.load.intensity(t);
        let f_ext = model.external_load(q);
        let sol = newton_solve_step(model, &self.layout, &self.state.d, &f_ext, &ctx, &self.options.solver, step)?;
        let history = model.advance_history(&sol.d, &ctx, &self.state.history);
        self.state = SystemState {
            time: t,
            d: sol.d,
            lambda: sol.lambda,
            history,
        };
        self.steps = step;
        let last = *sol.residuals.last().unwrap();
        Ok(self.summary(q, last, sol.iterations))
    }

    fn summary(&self, q: f64, res: ResidualPair, iterations: usize) -> ResultRow {
        let model = self.model;
        let kin = self.options.kinematics;
        let stresses = model.glass_stresses(&self.state.d, kin);
        ResultRow {
            step: self.steps,
            time: self.state.time,
            adjusted_time: self.state.time / self.shift,
            load: q,
            midspan_deflection: model.midspan_deflection(&self.state.d),
            midspan_stress: model.midspan_stress(&stresses),
            max_stress: LaminateModel::max_stress(&stresses),
            glass_stress: stresses
                .iter()
                .map(|s| s.top.iter().chain(&s.bottom).fold(f64::NEG_INFINITY, |m, &v| m.max(v)))
                .collect(),
            interlayer: LaminateModel::interlayer_extremes(&self.state.history),
            eta1: res.eta1,
            eta2: res.eta2,
            iterations,
        }
    }
}

/// Runs the whole grid and returns one row per step.
pub fn run_history(
    model: &LaminateModel,
    load: &LoadHistory,
    grid: &TimeGrid,
    options: &RunOptions,
) -> Result<Vec<ResultRow>> {
    grid.check_breakpoints(load)?;
    let mut sim = Simulation::new(model, load.clone(), *options)?;
    grid.times()[1..].iter().map(|&t| sim.step_to(t)).collect()
}
