//! Volumetric closures of the interlayer and the effective moduli of one time step.

use serde::{Deserialize, Serialize};

use super::prony::PronyChain;
use crate::error::{Error, Result};

/// Assumption on the bulk response of the interlayer.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum ConstitutiveClosure {
    /// Time-independent bulk modulus `K` [Pa].
    ConstantBulk { bulk_modulus: f64 },
    /// Time-independent Poisson ratio.
    ConstantPoisson { poisson: f64 },
}

impl ConstitutiveClosure {
    pub fn validate(&self) -> Result<()> {
        match *self {
            Self::ConstantBulk { bulk_modulus } if !(bulk_modulus > 0.0) => Err(Error::argument(
                "bulk_modulus",
                format!("must be positive, got {bulk_modulus}"),
            )),
            Self::ConstantPoisson { poisson } if !(0.0..0.5).contains(&poisson) => Err(
                Error::argument("poisson", format!("must lie in [0, 0.5), got {poisson}")),
            ),
            _ => Ok(()),
        }
    }

    /// Young modulus and Poisson ratio that go with shear modulus `g`.
    pub fn young_and_poisson(&self, g: f64) -> (f64, f64) {
        match *self {
            Self::ConstantBulk { bulk_modulus: k } => (
                9.0 * k * g / (g + 3.0 * k),
                (3.0 * k - 2.0 * g) / (2.0 * (3.0 * k + g)),
            ),
            Self::ConstantPoisson { poisson } => (2.0 * (1.0 + poisson) * g, poisson),
        }
    }
}

/// Interval-averaged moduli of the chain over one adjusted time step.
#[derive(Debug, Clone, PartialEq)]
pub struct EffectiveModuli {
    /// Adjusted time step [s].
    pub dt: f64,
    pub shear: f64,
    pub young: f64,
    pub poisson: f64,
    /// Per-unit effective moduli `G_p (theta_p/dt)(1 - exp(-dt/theta_p))`.
    pub unit_shear: Vec<f64>,
    /// Per-unit relaxed fraction `1 - exp(-dt/theta_p)`.
    pub unit_decay: Vec<f64>,
}

/// `(1 - exp(-x)) / x`, accurate for tiny and huge `x`.
pub fn averaged_decay(x: f64) -> f64 {
    if x < 1e-8 {
        1.0 - x / 2.0 + x * x / 6.0
    } else {
        -(-x).exp_m1() / x
    }
}

/// `1 - exp(-x)` without cancellation.
pub fn decay(x: f64) -> f64 {
    -(-x).exp_m1()
}

pub fn effective_step_moduli(
    dt: f64,
    chain: &PronyChain,
    closure: &ConstitutiveClosure,
) -> Result<EffectiveModuli> {
    if !(dt > 0.0) || !dt.is_finite() {
        return Err(Error::argument("dt", format!("time step must be positive, got {dt}")));
    }
    let unit_shear: Vec<f64> = chain
        .units()
        .iter()
        .map(|u| u.modulus * averaged_decay(dt / u.relaxation_time))
        .collect();
    let unit_decay = chain
        .units()
        .iter()
        .map(|u| decay(dt / u.relaxation_time))
        .collect();
    let shear = chain.g_inf() + unit_shear.iter().sum::<f64>();
    let (young, poisson) = closure.young_and_poisson(shear);
    Ok(EffectiveModuli {
        dt,
        shear,
        young,
        poisson,
        unit_shear,
        unit_decay,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use approx::assert_relative_eq;

    #[test]
    fn small_and_large_step_limits() {
        let chain = presets::pvb_chain();
        let closure = ConstitutiveClosure::ConstantPoisson { poisson: 0.49 };
        let theta_min = chain.units()[0].relaxation_time;
        let theta_max = chain.units().last().unwrap().relaxation_time;
        let short = effective_step_moduli(theta_min * 1e-6, &chain, &closure).unwrap();
        assert_relative_eq!(short.shear, chain.g0(), max_relative = 1e-4);
        let long = effective_step_moduli(theta_max * 1e6, &chain, &closure).unwrap();
        assert_relative_eq!(long.shear, chain.g_inf(), max_relative = 1e-4);
    }

    #[test]
    fn constant_bulk_young_and_poisson() {
        let closure = ConstitutiveClosure::ConstantBulk { bulk_modulus: 2.0e9 };
        let (e, nu) = closure.young_and_poisson(0.424_75e9);
        assert_relative_eq!(e, 1.1899e9, max_relative = 1e-4);
        assert_relative_eq!(nu, 0.4008, max_relative = 1e-4);
    }

    #[test]
    fn constant_poisson_young() {
        let closure = ConstitutiveClosure::ConstantPoisson { poisson: 0.49 };
        let (e, nu) = closure.young_and_poisson(1.0e6);
        assert_relative_eq!(e, 2.98e6, max_relative = 1e-15);
        assert_eq!(nu, 0.49);
    }

    #[test]
    fn averaged_decay_is_continuous_at_the_switch() {
        let below = averaged_decay(0.999_999e-8);
        let above = averaged_decay(1.000_001e-8);
        assert_relative_eq!(below, above, max_relative = 1e-14);
        assert_eq!(averaged_decay(0.0), 1.0);
        assert_relative_eq!(averaged_decay(1e3), 1e-3, max_relative = 1e-12);
    }

    #[test]
    fn rejects_nonpositive_step() {
        let chain = presets::pvb_chain();
        let closure = ConstitutiveClosure::ConstantPoisson { poisson: 0.49 };
        assert!(effective_step_moduli(0.0, &chain, &closure).is_err());
        assert!(effective_step_moduli(-1.0, &chain, &closure).is_err());
    }

    #[test]
    fn closure_validation() {
        assert!(ConstitutiveClosure::ConstantPoisson { poisson: 0.5 }.validate().is_err());
        assert!(ConstitutiveClosure::ConstantBulk { bulk_modulus: 0.0 }.validate().is_err());
        assert!(ConstitutiveClosure::ConstantPoisson { poisson: 0.0 }.validate().is_ok());
    }

    #[test]
    fn effective_shear_is_bounded_and_monotone() {
        let chain = presets::pvb_chain();
        let closure = ConstitutiveClosure::ConstantBulk { bulk_modulus: 2.0e9 };
        let mut prev = f64::INFINITY;
        for k in 0..160 {
            let dt = 10f64.powf(-10.0 + 0.125 * k as f64);
            let eff = effective_step_moduli(dt, &chain, &closure).unwrap();
            assert!(eff.shear >= chain.g_inf() && eff.shear <= chain.g0());
            assert!(eff.shear <= prev);
            prev = eff.shear;
        }
    }
}
