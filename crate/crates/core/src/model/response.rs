use nalgebra::DVector;
use serde::{Deserialize, Serialize};

use super::{Component, ElementHistory, LaminateModel, LayerKind};
use crate::elements::{self, Kinematics};

/// Nodal normal stresses at the outer fibres of one glass layer [Pa].
#[derive(Debug, Clone, PartialEq)]
pub struct GlassStress {
    pub layer: usize,
    pub top: Vec<f64>,
    pub bottom: Vec<f64>,
}

/// Largest absolute interlayer section forces over all elements.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct InterlayerExtremes {
    pub normal: f64,
    pub shear: f64,
    pub moment: f64,
}

/// Continuous piecewise-linear field closest in the L2 sense to the
/// element-wise constant values `v` on elements of the given lengths.
pub fn l2_projection(lengths: &[f64], v: &[f64]) -> Vec<f64> {
    let n = lengths.len() + 1;
    let mut diag = vec![0.0; n];
    let mut off = vec![0.0; n - 1];
    let mut rhs = vec![0.0; n];
    for (e, (&h, &s)) in lengths.iter().zip(v).enumerate() {
        diag[e] += h / 3.0;
        diag[e + 1] += h / 3.0;
        off[e] = h / 6.0;
        rhs[e] += 0.5 * h * s;
        rhs[e + 1] += 0.5 * h * s;
    }
    // Thomas algorithm on the symmetric tridiagonal mass matrix
    for i in 1..n {
        let m = off[i - 1] / diag[i - 1];
        diag[i] -= m * off[i - 1];
        rhs[i] -= m * rhs[i - 1];
    }
    let mut x = vec![0.0; n];
    x[n - 1] = rhs[n - 1] / diag[n - 1];
    for i in (0..n - 1).rev() {
        x[i] = (rhs[i] - off[i] * x[i + 1]) / diag[i];
    }
    x
}

impl LaminateModel {
    fn interpolate(&self, nodal: impl Fn(usize) -> f64, x: f64) -> f64 {
        let (e, xi) = self.mesh.locate(x);
        (1.0 - xi) * nodal(e) + xi * nodal(e + 1)
    }

    /// Transverse displacement of the core layer at the reporting point [m].
    pub fn midspan_deflection(&self, d: &DVector<f64>) -> f64 {
        let core = self.core_layer();
        self.interpolate(|n| d[self.dofs.index(core, n, Component::W)], self.midspan)
    }

    /// Deflected shape of the core layer: `(x, w)` at every node.
    pub fn deflected_shape(&self, d: &DVector<f64>) -> Vec<(f64, f64)> {
        let core = self.core_layer();
        self.mesh
            .x()
            .iter()
            .enumerate()
            .map(|(n, &x)| (x, d[self.dofs.index(core, n, Component::W)]))
            .collect()
    }

    /// Fibre stresses `E (eps0 + kappa z)`, smoothed by projecting the
    /// element values onto a continuous piecewise-linear field.
    pub fn glass_stresses(&self, d: &DVector<f64>, kin: Kinematics) -> Vec<GlassStress> {
        let n_el = self.mesh.n_el();
        self.layers
            .iter()
            .enumerate()
            .filter_map(|(l, layer)| match layer.kind {
                LayerKind::Glass(g) => Some((l, layer, g)),
                LayerKind::Interlayer => None,
            })
            .map(|(l, layer, g)| {
                let element: Vec<(f64, f64)> = (0..n_el)
                    .map(|e| {
                        let s = elements::strains(kin, &self.element_dofs(d, l, e), self.mesh.element_length(e));
                        (
                            g.young * (s.eps0 - s.kappa * layer.fiber),
                            g.young * (s.eps0 + s.kappa * layer.fiber),
                        )
                    })
                    .collect();
                let lengths: Vec<f64> = (0..n_el).map(|e| self.mesh.element_length(e)).collect();
                let top: Vec<f64> = element.iter().map(|p| p.0).collect();
                let bottom: Vec<f64> = element.iter().map(|p| p.1).collect();
                GlassStress {
                    layer: l,
                    top: l2_projection(&lengths, &top),
                    bottom: l2_projection(&lengths, &bottom),
                }
            })
            .collect()
    }

    /// Largest tensile glass stress at the reporting point [Pa].
    pub fn midspan_stress(&self, stresses: &[GlassStress]) -> f64 {
        stresses
            .iter()
            .flat_map(|s| {
                [
                    self.interpolate(|n| s.top[n], self.midspan),
                    self.interpolate(|n| s.bottom[n], self.midspan),
                ]
            })
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Largest tensile glass stress anywhere [Pa].
    pub fn max_stress(stresses: &[GlassStress]) -> f64 {
        stresses
            .iter()
            .flat_map(|s| s.top.iter().chain(&s.bottom))
            .fold(f64::NEG_INFINITY, |m, &v| m.max(v))
    }

    pub fn interlayer_extremes(history: &[Vec<ElementHistory>]) -> InterlayerExtremes {
        history.iter().flatten().fold(InterlayerExtremes::default(), |m, h| InterlayerExtremes {
            normal: m.normal.max(h.state.forces.normal.abs()),
            shear: m.shear.max(h.state.forces.shear.abs()),
            moment: m.moment.max(h.state.forces.moment.abs()),
        })
    }
}
