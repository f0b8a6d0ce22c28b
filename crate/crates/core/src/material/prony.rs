//! Generalized Maxwell chain with a Dirichlet-Prony relaxation spectrum.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One Maxwell unit: spring modulus [Pa] and relaxation time [s].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MaxwellUnit {
    pub modulus: f64,
    pub relaxation_time: f64,
}

/// Shear relaxation spectrum `G(t) = G_inf + sum_p G_p exp(-t / theta_p)`.
///
/// Units are kept sorted by strictly increasing relaxation time.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PronyChain {
    g_inf: f64,
    units: Vec<MaxwellUnit>,
}

impl PronyChain {
    pub fn new(g_inf: f64, mut units: Vec<MaxwellUnit>) -> Result<Self> {
        if !(g_inf > 0.0) || !g_inf.is_finite() {
            return Err(Error::argument("g_inf", format!("must be positive, got {g_inf}")));
        }
        for (p, u) in units.iter().enumerate() {
            if !(u.modulus > 0.0) || !u.modulus.is_finite() {
                return Err(Error::argument(
                    "units",
                    format!("unit {p} has non-positive modulus {}", u.modulus),
                ));
            }
            if !(u.relaxation_time > 0.0) || !u.relaxation_time.is_finite() {
                return Err(Error::argument(
                    "units",
                    format!("unit {p} has non-positive relaxation time {}", u.relaxation_time),
                ));
            }
        }
        units.sort_by(|a, b| a.relaxation_time.total_cmp(&b.relaxation_time));
        if units
            .windows(2)
            .any(|w| w[0].relaxation_time == w[1].relaxation_time)
        {
            return Err(Error::argument("units", "relaxation times must be distinct"));
        }
        Ok(Self { g_inf, units })
    }

    /// A chain without Maxwell units, i.e. an elastic solid with shear modulus `g`.
    pub fn elastic(g: f64) -> Result<Self> {
        Self::new(g, Vec::new())
    }

    pub fn g_inf(&self) -> f64 {
        self.g_inf
    }

    pub fn units(&self) -> &[MaxwellUnit] {
        &self.units
    }

    pub fn len(&self) -> usize {
        self.units.len()
    }

    pub fn is_empty(&self) -> bool {
        self.units.is_empty()
    }

    /// Instantaneous modulus `G_0 = G_inf + sum_p G_p`.
    pub fn g0(&self) -> f64 {
        self.g_inf + self.units.iter().map(|u| u.modulus).sum::<f64>()
    }

    pub fn relaxation_modulus(&self, t: f64) -> Result<f64> {
        relaxation_modulus(t, self)
    }

    /// The same spectrum with every modulus multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        Self::new(
            self.g_inf * factor,
            self.units
                .iter()
                .map(|u| MaxwellUnit {
                    modulus: u.modulus * factor,
                    relaxation_time: u.relaxation_time,
                })
                .collect(),
        )
    }
}

/// Shear relaxation modulus at adjusted time `t >= 0`.
pub fn relaxation_modulus(t: f64, chain: &PronyChain) -> Result<f64> {
    if !(t >= 0.0) {
        return Err(Error::argument("t", format!("time must be non-negative, got {t}")));
    }
    Ok(chain.g_inf
        + chain
            .units
            .iter()
            .map(|u| u.modulus * (-t / u.relaxation_time).exp())
            .sum::<f64>())
}
