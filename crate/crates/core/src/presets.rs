//! Material data and standard configurations.

use crate::material::{ConstitutiveClosure, GlassMaterial, MaxwellUnit, PronyChain, WlfParams};

/// Relaxation times [s] of the PVB chain at the reference temperature.
const PVB_THETA: [f64; 13] = [
    2.3660e-7, 2.2643e-6, 2.1667e-5, 2.0733e-4, 1.9839e-3, 1.8984e-2, 1.8165e-1, 1.7382e0,
    1.6633e1, 1.5916e2, 1.5230e3, 1.4573e4, 1.3945e5,
];

/// Unit moduli [GPa].
const PVB_G: [f64; 13] = [
    9.9482e-2, 9.0802e-2, 7.4140e-2, 5.0772e-2, 5.7856e-2, 2.9055e-2, 1.7601e-2, 3.0802e-3,
    1.2001e-3, 1.1523e-4, 1.8237e-4, 4.1645e-5, 2.2405e-4,
];

const PVB_G_INF: f64 = 1.9454e-4;
const GPA: f64 = 1.0e9;

/// Shear relaxation spectrum of PVB, moduli in Pa.
pub fn pvb_chain() -> PronyChain {
    let units = PVB_THETA
        .iter()
        .zip(PVB_G)
        .map(|(&relaxation_time, g)| MaxwellUnit {
            modulus: g * GPA,
            relaxation_time,
        })
        .collect();
    PronyChain::new(PVB_G_INF * GPA, units).expect("PVB chain data is valid")
}

pub fn pvb_wlf() -> WlfParams {
    WlfParams {
        c1: 12.6,
        c2: 74.46,
        t0: 20.0,
    }
}

pub const PVB_BULK_MODULUS: f64 = 2.0e9;
pub const PVB_POISSON: f64 = 0.49;

pub fn constant_bulk() -> ConstitutiveClosure {
    ConstitutiveClosure::ConstantBulk {
        bulk_modulus: PVB_BULK_MODULUS,
    }
}

pub fn constant_poisson() -> ConstitutiveClosure {
    ConstitutiveClosure::ConstantPoisson {
        poisson: PVB_POISSON,
    }
}

pub fn glass() -> GlassMaterial {
    GlassMaterial {
        young: 72.0e9,
        poisson: 0.23,
    }
}

use crate::model::{InterlayerMaterial, LaminateGeometry, Materials, Support};

pub fn pvb(closure: ConstitutiveClosure) -> InterlayerMaterial {
    InterlayerMaterial {
        chain: pvb_chain(),
        wlf: pvb_wlf(),
        closure,
    }
}

/// Glass with a PVB interlayer.
pub fn materials(closure: ConstitutiveClosure) -> Materials {
    Materials {
        glass: glass(),
        interlayer: pvb(closure),
    }
}

/// Clamped 3 m strip, 3/0.76/3 mm.
pub fn geometry_i() -> LaminateGeometry {
    LaminateGeometry {
        span: 3.0,
        width: 0.15,
        thickness: [3e-3, 0.76e-3, 3e-3],
        support: Support::FixedEnd,
    }
}

/// Simply supported 3 m strip, 6/0.76/6 mm.
pub fn geometry_ii() -> LaminateGeometry {
    LaminateGeometry {
        span: 3.0,
        width: 0.15,
        thickness: [6e-3, 0.76e-3, 6e-3],
        support: Support::SimplySupported,
    }
}

/// A laboratory beam: geometry, uniform load [N/m] and temperature [°C].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidationBeam {
    pub name: &'static str,
    pub geometry: LaminateGeometry,
    pub load: f64,
    pub temperature: f64,
}

/// The three tested beams, loaded for 10 hours.
pub fn validation_beams() -> [ValidationBeam; 3] {
    [
        ValidationBeam {
            name: "4/0.38/8",
            geometry: LaminateGeometry {
                span: 1.0,
                width: 0.1,
                thickness: [4e-3, 0.38e-3, 8e-3],
                support: Support::SimplySupported,
            },
            load: 38.25,
            temperature: 17.4,
        },
        ValidationBeam {
            name: "4/0.76/8",
            geometry: LaminateGeometry {
                span: 1.0,
                width: 0.1,
                thickness: [4e-3, 0.76e-3, 8e-3],
                support: Support::SimplySupported,
            },
            load: 38.25,
            temperature: 18.3,
        },
        ValidationBeam {
            name: "4/0.38/4 two-span",
            geometry: LaminateGeometry {
                span: 1.4,
                width: 0.1,
                thickness: [4e-3, 0.38e-3, 4e-3],
                support: Support::TwoSpanContinuous { span1: 0.7 },
            },
            load: 94.22,
            temperature: 17.8,
        },
    ]
}

/// Duration of the laboratory tests [s].
pub const VALIDATION_DURATION: f64 = 10.0 * 3600.0;
