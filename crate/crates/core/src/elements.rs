//! Two-node beam elements with one-point quadrature.
//!
//! Element dofs are ordered `(u1, w1, phi1, u2, w2, phi2)`. Both `z` and `w`
//! point downwards. Every formulation is written in terms of the generalized
//! strains, their gradients and Hessians with respect to the element dofs, so
//! that forces, tangent and energy share one code path:
//!
//! ```text
//! S_k = D_k e_k + delta_k
//! f   = L sum_k S_k grad e_k
//! K   = L sum_k (D_k grad e_k grad e_k^T + S_k hess e_k)
//! Pi  = L sum_k (D_k e_k^2 / 2 + delta_k e_k)
//! ```

use nalgebra::{SMatrix, SVector};
use serde::{Deserialize, Serialize};

use crate::material::{EffectiveModuli, GeneralizedStrains, GlassMaterial, SectionForces, SectionProperties};

pub type ElementVector = SVector<f64, 6>;
pub type ElementMatrix = SMatrix<f64, 6, 6>;

/// Offsets added to the section forces from the interlayer history.
pub type HistoryOffsets = SectionForces;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kinematics {
    /// Small displacements and rotations.
    Linear,
    /// Moderate rotations, quadratic membrane term.
    VonKarman,
    /// Finite-strain Reissner beam with exact rotations.
    Reissner,
}

impl Kinematics {
    pub const ALL: [Kinematics; 3] = [Kinematics::Linear, Kinematics::VonKarman, Kinematics::Reissner];

    pub fn label(self) -> &'static str {
        match self {
            Kinematics::Linear => "LIN",
            Kinematics::VonKarman => "VK",
            Kinematics::Reissner => "FS",
        }
    }
}

/// Section rigidities: axial `EA`, shear `G As` and bending `EI`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SectionStiffness {
    pub ea: f64,
    pub gas: f64,
    pub ei: f64,
}

impl SectionStiffness {
    pub fn new(young: f64, shear: f64, props: &SectionProperties) -> Self {
        Self {
            ea: young * props.area,
            gas: shear * props.shear_area,
            ei: young * props.inertia,
        }
    }

    pub fn glass(glass: &GlassMaterial, props: &SectionProperties) -> Self {
        Self::new(glass.young, glass.shear(), props)
    }

    pub fn interlayer(eff: &EffectiveModuli, props: &SectionProperties) -> Self {
        Self::new(eff.young, eff.shear, props)
    }

    /// Section forces `D e + delta`.
    pub fn forces(&self, e: &GeneralizedStrains, offsets: &HistoryOffsets) -> SectionForces {
        SectionForces {
            normal: self.ea * e.eps0 + offsets.normal,
            shear: self.gas * e.gamma + offsets.shear,
            moment: self.ei * e.kappa + offsets.moment,
        }
    }
}

const U1: usize = 0;
const W1: usize = 1;
const P1: usize = 2;
const U2: usize = 3;
const W2: usize = 4;
const P2: usize = 5;

/// Strains with first and second derivatives, in the order (eps0, gamma, kappa).
struct StrainJet {
    values: [f64; 3],
    grads: [ElementVector; 3],
    hessians: [Option<ElementMatrix>; 3],
}

fn symmetric_add(m: &mut ElementMatrix, i: usize, j: usize, v: f64) {
    m[(i, j)] += v;
    if i != j {
        m[(j, i)] += v;
    }
}

fn curvature_grad(length: f64) -> ElementVector {
    let mut g = ElementVector::zeros();
    g[P1] = -1.0 / length;
    g[P2] = 1.0 / length;
    g
}

fn strain_jet(kin: Kinematics, d: &ElementVector, length: f64) -> StrainJet {
    let du = d[U2] - d[U1];
    let dw = d[W2] - d[W1];
    let b = dw / length;
    let beta = 0.5 * (d[P1] + d[P2]);
    let kappa = (d[P2] - d[P1]) / length;
    let inv = 1.0 / length;

    match kin {
        Kinematics::Linear | Kinematics::VonKarman => {
            let mut g_eps = ElementVector::zeros();
            g_eps[U1] = -inv;
            g_eps[U2] = inv;
            let mut eps0 = du * inv;
            let mut h_eps = None;
            if kin == Kinematics::VonKarman {
                eps0 += 0.5 * b * b;
                g_eps[W1] = -b * inv;
                g_eps[W2] = b * inv;
                let mut h = ElementMatrix::zeros();
                let c = inv * inv;
                h[(W1, W1)] = c;
                h[(W2, W2)] = c;
                h[(W1, W2)] = -c;
                h[(W2, W1)] = -c;
                h_eps = Some(h);
            }
            let mut g_gam = ElementVector::zeros();
            g_gam[W1] = -inv;
            g_gam[W2] = inv;
            g_gam[P1] = 0.5;
            g_gam[P2] = 0.5;
            StrainJet {
                values: [eps0, beta + b, kappa],
                grads: [g_eps, g_gam, curvature_grad(length)],
                hessians: [h_eps, None, None],
            }
        }
        Kinematics::Reissner => {
            let a = 1.0 + du * inv;
            let (s, c) = beta.sin_cos();
            let eps0 = c * a - s * b - 1.0;
            let gamma = s * a + c * b;

            let mut g_eps = ElementVector::zeros();
            g_eps[U1] = -c * inv;
            g_eps[U2] = c * inv;
            g_eps[W1] = s * inv;
            g_eps[W2] = -s * inv;
            g_eps[P1] = -0.5 * gamma;
            g_eps[P2] = -0.5 * gamma;

            let mut g_gam = ElementVector::zeros();
            g_gam[U1] = -s * inv;
            g_gam[U2] = s * inv;
            g_gam[W1] = -c * inv;
            g_gam[W2] = c * inv;
            g_gam[P1] = 0.5 * (eps0 + 1.0);
            g_gam[P2] = 0.5 * (eps0 + 1.0);

            let mut h_eps = ElementMatrix::zeros();
            let mut h_gam = ElementMatrix::zeros();
            let half = 0.5 * inv;
            for p in [P1, P2] {
                symmetric_add(&mut h_eps, U1, p, s * half);
                symmetric_add(&mut h_eps, U2, p, -s * half);
                symmetric_add(&mut h_eps, W1, p, c * half);
                symmetric_add(&mut h_eps, W2, p, -c * half);

                symmetric_add(&mut h_gam, U1, p, -c * half);
                symmetric_add(&mut h_gam, U2, p, c * half);
                symmetric_add(&mut h_gam, W1, p, s * half);
                symmetric_add(&mut h_gam, W2, p, -s * half);
            }
            for p in [P1, P2] {
                for q in [P1, P2] {
                    h_eps[(p, q)] = -0.25 * (eps0 + 1.0);
                    h_gam[(p, q)] = -0.25 * gamma;
                }
            }
            StrainJet {
                values: [eps0, gamma, kappa],
                grads: [g_eps, g_gam, curvature_grad(length)],
                hessians: [Some(h_eps), Some(h_gam), None],
            }
        }
    }
}

fn rigidities(stiff: &SectionStiffness) -> [f64; 3] {
    [stiff.ea, stiff.gas, stiff.ei]
}

fn offsets_array(o: &HistoryOffsets) -> [f64; 3] {
    [o.normal, o.shear, o.moment]
}

/// Generalized strains at the element midpoint.
pub fn strains(kin: Kinematics, d: &ElementVector, length: f64) -> GeneralizedStrains {
    let v = strain_jet(kin, d, length).values;
    GeneralizedStrains {
        eps0: v[0],
        gamma: v[1],
        kappa: v[2],
    }
}

/// Internal force vector including the history offsets.
pub fn internal_forces(
    kin: Kinematics,
    d: &ElementVector,
    length: f64,
    stiff: &SectionStiffness,
    offsets: &HistoryOffsets,
) -> ElementVector {
    let jet = strain_jet(kin, d, length);
    let dk = rigidities(stiff);
    let delta = offsets_array(offsets);
    let mut f = ElementVector::zeros();
    for k in 0..3 {
        f += (dk[k] * jet.values[k] + delta[k]) * jet.grads[k];
    }
    f * length
}

/// Part of the internal forces produced by the history offsets alone.
pub fn history_forces(kin: Kinematics, d: &ElementVector, length: f64, offsets: &HistoryOffsets) -> ElementVector {
    let jet = strain_jet(kin, d, length);
    let delta = offsets_array(offsets);
    let mut f = ElementVector::zeros();
    for k in 0..3 {
        f += delta[k] * jet.grads[k];
    }
    f * length
}

/// Consistent tangent of [`internal_forces`].
pub fn tangent_stiffness(
    kin: Kinematics,
    d: &ElementVector,
    length: f64,
    stiff: &SectionStiffness,
    offsets: &HistoryOffsets,
) -> ElementMatrix {
    let jet = strain_jet(kin, d, length);
    let dk = rigidities(stiff);
    let delta = offsets_array(offsets);
    let mut m = ElementMatrix::zeros();
    for k in 0..3 {
        let g = &jet.grads[k];
        m += dk[k] * g * g.transpose();
        if let Some(h) = &jet.hessians[k] {
            m += (dk[k] * jet.values[k] + delta[k]) * h;
        }
    }
    m * length
}

/// Forces and tangent in one pass.
pub fn forces_and_tangent(
    kin: Kinematics,
    d: &ElementVector,
    length: f64,
    stiff: &SectionStiffness,
    offsets: &HistoryOffsets,
) -> (ElementVector, ElementMatrix) {
    let jet = strain_jet(kin, d, length);
    let dk = rigidities(stiff);
    let delta = offsets_array(offsets);
    let mut f = ElementVector::zeros();
    let mut m = ElementMatrix::zeros();
    for k in 0..3 {
        let g = &jet.grads[k];
        let sk = dk[k] * jet.values[k] + delta[k];
        f += sk * g;
        m += dk[k] * g * g.transpose();
        if let Some(h) = &jet.hessians[k] {
            m += sk * h;
        }
    }
    (f * length, m * length)
}

/// Stored energy plus the work of the history offsets.
pub fn element_energy(
    kin: Kinematics,
    d: &ElementVector,
    length: f64,
    stiff: &SectionStiffness,
    offsets: &HistoryOffsets,
) -> f64 {
    let v = strain_jet(kin, d, length).values;
    let dk = rigidities(stiff);
    let delta = offsets_array(offsets);
    length * (0..3).map(|k| 0.5 * dk[k] * v[k] * v[k] + delta[k] * v[k]).sum::<f64>()
}
