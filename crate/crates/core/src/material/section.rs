//! Cross-section level incremental viscoelasticity of the interlayer.
//!
//! For a layer whose normal strain is affine and shear strain constant over the
//! depth, the stresses carried by every Maxwell unit stay affine-constant as
//! well. Each unit is therefore tracked by three numbers: the normal stress at
//! the centroid, its gradient through the depth, and the shear stress.
//! Under the constant-bulk closure these are deviatoric stresses, under the
//! constant-Poisson closure they are total stresses.

use serde::{Deserialize, Serialize};

use super::closure::{ConstitutiveClosure, EffectiveModuli};

/// Shear correction applied to glass plies (parabolic shear profile).
pub const GLASS_SHEAR_FACTOR: f64 = 5.0 / 6.0;

/// Axial strain, pseudo-curvature and transverse shear of a layer axis.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct GeneralizedStrains {
    pub eps0: f64,
    pub kappa: f64,
    pub gamma: f64,
}

impl std::ops::Sub for GeneralizedStrains {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self {
            eps0: self.eps0 - rhs.eps0,
            kappa: self.kappa - rhs.kappa,
            gamma: self.gamma - rhs.gamma,
        }
    }
}

/// Rectangular cross-section of one layer.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SectionProperties {
    pub area: f64,
    pub shear_area: f64,
    pub inertia: f64,
    pub thickness: f64,
    pub width: f64,
}

impl SectionProperties {
    pub fn rectangular(width: f64, thickness: f64, shear_factor: f64) -> Self {
        let area = width * thickness;
        Self {
            area,
            shear_area: shear_factor * area,
            inertia: width * thickness.powi(3) / 12.0,
            thickness,
            width,
        }
    }

    pub fn glass(width: f64, thickness: f64) -> Self {
        Self::rectangular(width, thickness, GLASS_SHEAR_FACTOR)
    }

    /// The foil carries constant shear, so its shear area is the full area.
    pub fn interlayer(width: f64, thickness: f64) -> Self {
        Self::rectangular(width, thickness, 1.0)
    }
}

/// Normal force [N], shear force [N] and bending moment [N m].
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct SectionForces {
    pub normal: f64,
    pub shear: f64,
    pub moment: f64,
}

impl std::ops::Add for SectionForces {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self {
            normal: self.normal + rhs.normal,
            shear: self.shear + rhs.shear,
            moment: self.moment + rhs.moment,
        }
    }
}

/// Stress distribution carried by one Maxwell unit over the section.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct UnitStress {
    /// Normal stress at the layer axis [Pa].
    pub normal: f64,
    /// Through-depth gradient of the normal stress [Pa/m].
    pub moment: f64,
    /// Shear stress [Pa].
    pub shear: f64,
}

/// History of one interlayer section at the start of a time step.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SectionState {
    pub forces: SectionForces,
    pub units: Vec<UnitStress>,
}

impl SectionState {
    /// Virgin state: no forces and unstressed units.
    pub fn zero(units: usize) -> Self {
        Self {
            forces: SectionForces::default(),
            units: vec![UnitStress::default(); units],
        }
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            forces: SectionForces {
                normal: self.forces.normal * factor,
                shear: self.forces.shear * factor,
                moment: self.forces.moment * factor,
            },
            units: self
                .units
                .iter()
                .map(|u| UnitStress {
                    normal: u.normal * factor,
                    moment: u.moment * factor,
                    shear: u.shear * factor,
                })
                .collect(),
        }
    }
}

/// Factor on relaxation stresses when integrating them into forces.
fn normal_relaxation_factor(eff: &EffectiveModuli, closure: &ConstitutiveClosure) -> f64 {
    match closure {
        ConstitutiveClosure::ConstantBulk { .. } => 1.0 + eff.poisson,
        ConstitutiveClosure::ConstantPoisson { .. } => 1.0,
    }
}

/// Per-unit relaxation of the stored stresses under a frozen strain.
fn unit_relaxations<'a>(state: &'a SectionState, eff: &'a EffectiveModuli) -> impl Iterator<Item = UnitStress> + 'a {
    state
        .units
        .iter()
        .zip(&eff.unit_decay)
        .map(|(u, &decay)| UnitStress {
            normal: -u.normal * decay,
            moment: -u.moment * decay,
            shear: -u.shear * decay,
        })
}

fn summed_relaxation(state: &SectionState, eff: &EffectiveModuli) -> UnitStress {
    unit_relaxations(state, eff).fold(UnitStress::default(), |acc, r| UnitStress {
        normal: acc.normal + r.normal,
        moment: acc.moment + r.moment,
        shear: acc.shear + r.shear,
    })
}

/// Force increments produced by relaxation alone over the step.
pub fn relaxation_force_increments(
    state: &SectionState,
    props: &SectionProperties,
    eff: &EffectiveModuli,
    closure: &ConstitutiveClosure,
) -> SectionForces {
    debug_assert_eq!(state.units.len(), eff.unit_decay.len());
    let sum = summed_relaxation(state, eff);
    let factor = normal_relaxation_factor(eff, closure);
    SectionForces {
        normal: factor * props.area * sum.normal,
        shear: props.shear_area * sum.shear,
        moment: factor * props.inertia * sum.moment,
    }
}

/// Total force increments for the given increments of generalized strains.
pub fn section_force_increments(
    dstrains: &GeneralizedStrains,
    state: &SectionState,
    props: &SectionProperties,
    eff: &EffectiveModuli,
    closure: &ConstitutiveClosure,
) -> SectionForces {
    let relax = relaxation_force_increments(state, props, eff, closure);
    SectionForces {
        normal: eff.young * props.area * dstrains.eps0 + relax.normal,
        shear: eff.shear * props.shear_area * dstrains.gamma + relax.shear,
        moment: eff.young * props.inertia * dstrains.kappa + relax.moment,
    }
}

/// Advance the section history over one step with converged strain increments.
pub fn update_state(
    dstrains: &GeneralizedStrains,
    state: &SectionState,
    props: &SectionProperties,
    eff: &EffectiveModuli,
    closure: &ConstitutiveClosure,
) -> SectionState {
    let forces = state.forces + section_force_increments(dstrains, state, props, eff, closure);
    let sum = summed_relaxation(state, eff);
    let units = state
        .units
        .iter()
        .zip(unit_relaxations(state, eff))
        .zip(&eff.unit_shear)
        .map(|((old, relax), &g_p)| {
            let (d_normal, d_moment) = match *closure {
                ConstitutiveClosure::ConstantBulk { bulk_modulus } => {
                    let stiff = 4.0 / 3.0 * (1.0 + eff.poisson) * g_p;
                    let coupling = 2.0 / 9.0 * g_p * (1.0 + eff.poisson) / bulk_modulus;
                    (
                        stiff * dstrains.eps0 + relax.normal - coupling * sum.normal,
                        stiff * dstrains.kappa + relax.moment - coupling * sum.moment,
                    )
                }
                ConstitutiveClosure::ConstantPoisson { poisson } => {
                    let stiff = 2.0 * (1.0 + poisson) * g_p;
                    (
                        stiff * dstrains.eps0 + relax.normal,
                        stiff * dstrains.kappa + relax.moment,
                    )
                }
            };
            UnitStress {
                normal: old.normal + d_normal,
                moment: old.moment + d_moment,
                shear: old.shear + g_p * dstrains.gamma + relax.shear,
            }
        })
        .collect();
    SectionState { forces, units }
}
