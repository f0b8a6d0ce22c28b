//! Viscoelastic interlayer and elastic glass material laws.

mod closure;
mod prony;
mod section;
mod wlf;

pub use closure::{averaged_decay, decay, effective_step_moduli, ConstitutiveClosure, EffectiveModuli};
pub use prony::{relaxation_modulus, MaxwellUnit, PronyChain};
pub use section::{
    relaxation_force_increments, section_force_increments, update_state, GeneralizedStrains,
    SectionForces, SectionProperties, SectionState, UnitStress, GLASS_SHEAR_FACTOR,
};
pub use wlf::{shift_factor, WlfParams};

/// Isotropic linear-elastic glass.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct GlassMaterial {
    /// Young modulus [Pa].
    pub young: f64,
    pub poisson: f64,
}

impl GlassMaterial {
    pub fn shear(&self) -> f64 {
        self.young / (2.0 * (1.0 + self.poisson))
    }
}
