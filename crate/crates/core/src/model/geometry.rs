use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Support arrangement of the beam.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Support {
    /// All dofs of every layer clamped at both ends.
    FixedEnd,
    /// Transverse restraint at both ends, axial restraint of the core at mid-span.
    SimplySupported,
    /// As simply supported, with an extra transverse support at `span1` from the left end.
    TwoSpanContinuous { span1: f64 },
}

/// Three-layer glass/interlayer/glass beam. Layer 1 is on top, layer 2 is the interlayer.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LaminateGeometry {
    /// Total length [m].
    pub span: f64,
    /// Width [m].
    pub width: f64,
    /// Layer thicknesses, top to bottom [m].
    pub thickness: [f64; 3],
    pub support: Support,
}

impl LaminateGeometry {
    pub fn validate(&self) -> Result<()> {
        let positive = |field: &str, v: f64| {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(Error::config(field, format!("must be positive, got {v}")))
            }
        };
        positive("geometry.span_m", self.span)?;
        positive("geometry.width_m", self.width)?;
        for (i, &h) in self.thickness.iter().enumerate() {
            let name = ["geometry.h1_m", "geometry.h2_m", "geometry.h3_m"][i];
            positive(name, h)?;
        }
        if let Support::TwoSpanContinuous { span1 } = self.support {
            positive("geometry.span1_m", span1)?;
            if span1 >= self.span {
                return Err(Error::config(
                    "geometry.span1_m",
                    format!("interior support at {span1} m lies outside the {} m beam", self.span),
                ));
            }
        }
        Ok(())
    }

    pub fn total_thickness(&self) -> f64 {
        self.thickness.iter().sum()
    }

    /// Where the deflection is reported: mid-span, or mid-span of the first span.
    pub fn midspan(&self) -> f64 {
        match self.support {
            Support::TwoSpanContinuous { span1 } => 0.5 * span1,
            _ => 0.5 * self.span,
        }
    }
}
