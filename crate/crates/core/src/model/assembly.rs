use nalgebra::DVector;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{LaminateModel, LayerKind};
use crate::elements::{self, ElementMatrix, ElementVector, HistoryOffsets, Kinematics, SectionStiffness};
use crate::error::Result;
use crate::linalg::TripletMatrix;
use crate::material::{
    effective_step_moduli, relaxation_force_increments, update_state, EffectiveModuli, GeneralizedStrains,
    SectionState,
};

/// Interlayer history of one element at the start of a step.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ElementHistory {
    pub state: SectionState,
    /// Generalized strains the forces in `state` belong to.
    pub strains: GeneralizedStrains,
}

impl ElementHistory {
    pub fn zero(units: usize) -> Self {
        Self {
            state: SectionState::zero(units),
            strains: GeneralizedStrains::default(),
        }
    }
}

/// Section law of one layer during a step.
#[derive(Debug, Clone)]
pub struct LayerStep {
    pub stiffness: SectionStiffness,
    /// Per-element offsets; empty for glass layers.
    pub offsets: Vec<HistoryOffsets>,
}

/// Everything the assembly needs besides the displacements.
#[derive(Debug, Clone)]
pub struct StepContext {
    pub kinematics: Kinematics,
    pub layers: Vec<LayerStep>,
    pub moduli: EffectiveModuli,
}

impl StepContext {
    fn offsets(&self, layer: usize, e: usize) -> HistoryOffsets {
        self.layers[layer].offsets.get(e).copied().unwrap_or_default()
    }
}

/// Internal force vector with its tangent.
#[derive(Debug, Clone)]
pub struct GlobalForces {
    pub f_int: DVector<f64>,
    pub k: TripletMatrix,
}

impl LaminateModel {
    /// Section laws for a step of adjusted length `dt` starting from `history`.
    pub fn step_context(&self, kinematics: Kinematics, dt: f64, history: &[Vec<ElementHistory>]) -> Result<StepContext> {
        let inter = &self.materials.interlayer;
        let moduli = effective_step_moduli(dt, &inter.chain, &inter.closure)?;
        let layers = self
            .layers
            .iter()
            .zip(history)
            .map(|(layer, hist)| match layer.kind {
                LayerKind::Glass(g) => LayerStep {
                    stiffness: SectionStiffness::glass(&g, &layer.section),
                    offsets: Vec::new(),
                },
                LayerKind::Interlayer => {
                    let stiffness = SectionStiffness::interlayer(&moduli, &layer.section);
                    let offsets = hist
                        .iter()
                        .map(|h| {
                            let relax =
                                relaxation_force_increments(&h.state, &layer.section, &moduli, &inter.closure);
                            HistoryOffsets {
                                normal: h.state.forces.normal + relax.normal - stiffness.ea * h.strains.eps0,
                                shear: h.state.forces.shear + relax.shear - stiffness.gas * h.strains.gamma,
                                moment: h.state.forces.moment + relax.moment - stiffness.ei * h.strains.kappa,
                            }
                        })
                        .collect();
                    LayerStep { stiffness, offsets }
                }
            })
            .collect();
        Ok(StepContext {
            kinematics,
            layers,
            moduli,
        })
    }

    fn element_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.layers.len())
            .flat_map(|l| (0..self.mesh.n_el()).map(move |e| (l, e)))
            .collect()
    }

    /// Global internal forces and tangent. Layers are uncoupled here.
    pub fn assemble(&self, d: &DVector<f64>, ctx: &StepContext) -> GlobalForces {
        let local: Vec<(usize, usize, ElementVector, ElementMatrix)> = self
            .element_pairs()
            .into_par_iter()
            .map(|(l, e)| {
                let de = self.element_dofs(d, l, e);
                let (f, k) = elements::forces_and_tangent(
                    ctx.kinematics,
                    &de,
                    self.mesh.element_length(e),
                    &ctx.layers[l].stiffness,
                    &ctx.offsets(l, e),
                );
                (l, e, f, k)
            })
            .collect();
        let n = self.n_dofs();
        let mut f_int = DVector::zeros(n);
        let mut k = TripletMatrix::new(n, n);
        k.entries.reserve(36 * local.len());
        for (l, e, fe, ke) in local {
            let idx = self.dofs.element(l, e);
            for i in 0..6 {
                f_int[idx[i]] += fe[i];
                for j in 0..6 {
                    k.push(idx[i], idx[j], ke[(i, j)]);
                }
            }
        }
        GlobalForces { f_int, k }
    }

    pub fn internal_forces(&self, d: &DVector<f64>, ctx: &StepContext) -> DVector<f64> {
        let mut f = DVector::zeros(self.n_dofs());
        for (l, e) in self.element_pairs() {
            let de = self.element_dofs(d, l, e);
            let fe = elements::internal_forces(
                ctx.kinematics,
                &de,
                self.mesh.element_length(e),
                &ctx.layers[l].stiffness,
                &ctx.offsets(l, e),
            );
            for (i, &g) in self.dofs.element(l, e).iter().enumerate() {
                f[g] += fe[i];
            }
        }
        f
    }

    /// Stored energy plus history work; its gradient is [`LaminateModel::internal_forces`].
    pub fn energy(&self, d: &DVector<f64>, ctx: &StepContext) -> f64 {
        self.element_pairs()
            .into_iter()
            .map(|(l, e)| {
                elements::element_energy(
                    ctx.kinematics,
                    &self.element_dofs(d, l, e),
                    self.mesh.element_length(e),
                    &ctx.layers[l].stiffness,
                    &ctx.offsets(l, e),
                )
            })
            .sum()
    }

    /// Interlayer histories after accepting displacements `d` at the end of the step.
    pub fn advance_history(
        &self,
        d: &DVector<f64>,
        ctx: &StepContext,
        history: &[Vec<ElementHistory>],
    ) -> Vec<Vec<ElementHistory>> {
        let closure = &self.materials.interlayer.closure;
        self.layers
            .iter()
            .zip(history)
            .enumerate()
            .map(|(l, (layer, hist))| {
                hist.par_iter()
                    .enumerate()
                    .map(|(e, h)| {
                        let strains =
                            elements::strains(ctx.kinematics, &self.element_dofs(d, l, e), self.mesh.element_length(e));
                        let state = update_state(&(strains - h.strains), &h.state, &layer.section, &ctx.moduli, closure);
                        ElementHistory { state, strains }
                    })
                    .collect()
            })
            .collect()
    }
}
