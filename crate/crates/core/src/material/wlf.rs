//! Time-temperature superposition through the Williams-Landel-Ferry shift.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// WLF constants. Temperatures in °C.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WlfParams {
    pub c1: f64,
    pub c2: f64,
    pub t0: f64,
}

impl WlfParams {
    pub fn new(c1: f64, c2: f64, t0: f64) -> Result<Self> {
        if !c1.is_finite() || !t0.is_finite() {
            return Err(Error::argument("wlf", "C1 and T0 must be finite"));
        }
        if !(c2 > 0.0) || !c2.is_finite() {
            return Err(Error::argument("wlf.c2", format!("must be positive, got {c2}")));
        }
        Ok(Self { c1, c2, t0 })
    }

    /// Shift factor `a_T` at `temperature`; adjusted time is `t_true / a_T`.
    pub fn shift_factor(&self, temperature: f64) -> Result<f64> {
        shift_factor(temperature, self)
    }

    pub fn adjusted_time(&self, true_time: f64, temperature: f64) -> Result<f64> {
        Ok(true_time / self.shift_factor(temperature)?)
    }
}

/// `a_T = 10^(-C1 (T - T0) / (C2 + T - T0))`.
pub fn shift_factor(temperature: f64, wlf: &WlfParams) -> Result<f64> {
    let dt = temperature - wlf.t0;
    let denominator = wlf.c2 + dt;
    if !(denominator > 0.0) {
        return Err(Error::WlfDomain {
            temperature,
            denominator,
        });
    }
    Ok(10f64.powf(-wlf.c1 * dt / denominator))
}
