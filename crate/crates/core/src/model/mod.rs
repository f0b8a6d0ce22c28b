//! Layerwise structural model: mesh, dof numbering, supports, constraints,
//! loads and global assembly.

mod assembly;
mod constraints;
mod geometry;
mod mesh;
mod response;

use serde::{Deserialize, Serialize};

pub use assembly::{ElementHistory, GlobalForces, LayerStep, StepContext};
pub use constraints::{ConstraintSet, RowKind};
pub use geometry::{LaminateGeometry, Support};
pub use mesh::{Component, DofMap, Mesh};
pub use response::{GlassStress, InterlayerExtremes};

use nalgebra::DVector;

use crate::error::{Error, Result};
use crate::material::{ConstitutiveClosure, GlassMaterial, PronyChain, SectionProperties, WlfParams};

/// Viscoelastic interlayer description.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InterlayerMaterial {
    pub chain: PronyChain,
    pub wlf: WlfParams,
    pub closure: ConstitutiveClosure,
}

/// Glass and interlayer data of a laminate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Materials {
    pub glass: GlassMaterial,
    pub interlayer: InterlayerMaterial,
}

impl Materials {
    pub fn validate(&self) -> Result<()> {
        if !(self.glass.young > 0.0) {
            return Err(Error::config("material.glass_young_Pa", "must be positive"));
        }
        if !(-1.0 < self.glass.poisson && self.glass.poisson < 0.5) {
            return Err(Error::config("material.glass_poisson", "must lie in (-1, 0.5)"));
        }
        self.interlayer
            .closure
            .validate()
            .map_err(|e| Error::config("material.closure", e.to_string()))
    }
}

/// Constitutive behaviour of one layer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LayerKind {
    Glass(GlassMaterial),
    Interlayer,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Layer {
    pub kind: LayerKind,
    pub section: SectionProperties,
    /// Distance from the axis to the fibre where stresses are reported [m].
    pub fiber: f64,
}

/// A discretized laminate ready for assembly.
#[derive(Debug, Clone)]
pub struct LaminateModel {
    pub mesh: Mesh,
    pub dofs: DofMap,
    pub layers: Vec<Layer>,
    pub constraints: ConstraintSet,
    pub materials: Materials,
    /// `true` for every prescribed (zero) dof.
    pub fixed: Vec<bool>,
    /// Layer carrying the distributed load.
    pub load_layer: usize,
    /// Where the deflection is reported [m].
    pub midspan: f64,
}

/// Default number of elements per layer.
pub const DEFAULT_N_EL: usize = 500;

/// Builds the three-layer model of `geometry`.
pub fn build_model(geometry: &LaminateGeometry, materials: &Materials, n_el: usize) -> Result<LaminateModel> {
    geometry.validate()?;
    materials.validate()?;
    let b = geometry.width;
    let [h1, h2, h3] = geometry.thickness;
    let layers = vec![
        Layer {
            kind: LayerKind::Glass(materials.glass),
            section: SectionProperties::glass(b, h1),
            fiber: 0.5 * h1,
        },
        Layer {
            kind: LayerKind::Interlayer,
            section: SectionProperties::interlayer(b, h2),
            fiber: 0.5 * h2,
        },
        Layer {
            kind: LayerKind::Glass(materials.glass),
            section: SectionProperties::glass(b, h3),
            fiber: 0.5 * h3,
        },
    ];
    LaminateModel::new(geometry.span, geometry.support, layers, materials.clone(), n_el)
}

impl LaminateModel {
    /// Generic constructor; layers are listed top to bottom.
    pub fn new(span: f64, support: Support, layers: Vec<Layer>, materials: Materials, n_el: usize) -> Result<Self> {
        if layers.is_empty() {
            return Err(Error::config("geometry", "at least one layer is required"));
        }
        let breakpoints: Vec<f64> = match support {
            Support::TwoSpanContinuous { span1 } => vec![span1],
            _ => Vec::new(),
        };
        let mesh = Mesh::with_breakpoints(span, n_el, &breakpoints)?;
        let dofs = DofMap {
            n_layers: layers.len(),
            n_nodes: mesh.n_nodes(),
        };
        let thickness: Vec<f64> = layers.iter().map(|l| l.section.thickness).collect();
        let constraints = ConstraintSet::new(dofs, &thickness);
        let midspan = match support {
            Support::TwoSpanContinuous { span1 } => 0.5 * span1,
            _ => 0.5 * span,
        };
        let mut model = Self {
            mesh,
            dofs,
            layers,
            constraints,
            materials,
            fixed: vec![false; dofs.len()],
            load_layer: 0,
            midspan,
        };
        model.apply_supports(support);
        Ok(model)
    }

    fn fix(&mut self, layer: usize, node: usize, comp: Component) {
        let i = self.dofs.index(layer, node, comp);
        self.fixed[i] = true;
    }

    fn apply_supports(&mut self, support: Support) {
        let n_layers = self.layers.len();
        let last = self.mesh.n_nodes() - 1;
        let core = n_layers / 2;
        let centre = self.mesh.nearest_node(0.5 * self.mesh.span());
        match support {
            Support::FixedEnd => {
                for l in 0..n_layers {
                    for node in [0, last] {
                        for c in [Component::U, Component::W, Component::Phi] {
                            self.fix(l, node, c);
                        }
                    }
                }
            }
            Support::SimplySupported | Support::TwoSpanContinuous { .. } => {
                let mut nodes = vec![0, last];
                if let Support::TwoSpanContinuous { span1 } = support {
                    nodes.push(self.mesh.nearest_node(span1));
                }
                for l in 0..n_layers {
                    for &node in &nodes {
                        self.fix(l, node, Component::W);
                    }
                }
                self.fix(core, centre, Component::U);
            }
        }
    }

    pub fn n_dofs(&self) -> usize {
        self.dofs.len()
    }

    /// Index of the layer whose deflection is reported.
    pub fn core_layer(&self) -> usize {
        self.layers.len() / 2
    }

    pub fn min_thickness(&self) -> f64 {
        self.layers
            .iter()
            .map(|l| l.section.thickness)
            .fold(f64::INFINITY, f64::min)
    }

    /// Constraint rows that restrict at least one free translation.
    ///
    /// A vertical row whose two `w` dofs are both prescribed is redundant; the
    /// same holds for an axial row with all of its dofs prescribed.
    pub fn active_rows(&self) -> Vec<usize> {
        (0..self.constraints.len())
            .filter(|&r| {
                let dofs = self.constraints.row_dofs(r);
                match self.constraints.decode(r).2 {
                    RowKind::Vertical => !(self.fixed[dofs[0]] && self.fixed[dofs[1]]),
                    RowKind::Axial => !dofs.iter().all(|&d| self.fixed[d]),
                }
            })
            .collect()
    }

    /// Lumped nodal forces of a uniform transverse load `q` [N/m] on the load layer.
    pub fn external_load(&self, q: f64) -> DVector<f64> {
        let mut f = DVector::zeros(self.n_dofs());
        if q == 0.0 {
            return f;
        }
        for e in 0..self.mesh.n_el() {
            let half = 0.5 * q * self.mesh.element_length(e);
            f[self.dofs.index(self.load_layer, e, Component::W)] += half;
            f[self.dofs.index(self.load_layer, e + 1, Component::W)] += half;
        }
        f
    }

    /// Layer dofs of element `e` gathered from the global vector.
    pub fn element_dofs(&self, d: &DVector<f64>, layer: usize, e: usize) -> crate::elements::ElementVector {
        let idx = self.dofs.element(layer, e);
        crate::elements::ElementVector::from_fn(|i, _| d[idx[i]])
    }

    /// Virgin history of every element of every interlayer.
    pub fn initial_history(&self) -> Vec<Vec<ElementHistory>> {
        let units = self.materials.interlayer.chain.len();
        self.layers
            .iter()
            .map(|l| match l.kind {
                LayerKind::Glass(_) => Vec::new(),
                LayerKind::Interlayer => vec![ElementHistory::zero(units); self.mesh.n_el()],
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;

    #[test]
    fn geometry_one_counts() {
        let m = build_model(&presets::geometry_i(), &presets::materials(presets::constant_poisson()), 500).unwrap();
        assert_eq!(m.n_dofs(), 4509);
        assert_eq!(m.constraints.len(), 2004);
        assert_eq!(m.mesh.n_nodes() * m.layers.len(), 1503);
    }

    #[test]
    fn single_element_is_rejected() {
        let err = build_model(&presets::geometry_i(), &presets::materials(presets::constant_poisson()), 1);
        assert!(err.is_err());
    }

    #[test]
    fn shear_areas_follow_layer_kind() {
        let m = build_model(&presets::geometry_i(), &presets::materials(presets::constant_poisson()), 4).unwrap();
        let glass = &m.layers[0].section;
        let core = &m.layers[1].section;
        assert!((glass.shear_area - 5.0 / 6.0 * glass.area).abs() < 1e-18);
        assert_eq!(core.shear_area, core.area);
    }

    #[test]
    fn simply_supported_restraints() {
        let m = build_model(&presets::geometry_ii(), &presets::materials(presets::constant_poisson()), 10).unwrap();
        let fixed: Vec<_> = (0..m.n_dofs()).filter(|&i| m.fixed[i]).map(|i| m.dofs.decode(i)).collect();
        assert_eq!(fixed.len(), 7);
        assert!(fixed.contains(&(1, 5, Component::U)));
        for l in 0..3 {
            assert!(fixed.contains(&(l, 0, Component::W)));
            assert!(fixed.contains(&(l, 10, Component::W)));
        }
        // vertical rows at both supports are redundant
        assert_eq!(m.active_rows().len(), m.constraints.len() - 4);
    }

    #[test]
    fn fixed_end_drops_all_end_rows() {
        let m = build_model(&presets::geometry_i(), &presets::materials(presets::constant_poisson()), 10).unwrap();
        assert_eq!(m.fixed.iter().filter(|&&f| f).count(), 18);
        assert_eq!(m.active_rows().len(), m.constraints.len() - 8);
    }

    #[test]
    fn lumped_load() {
        let m = build_model(&presets::geometry_i(), &presets::materials(presets::constant_poisson()), 2).unwrap();
        let f = m.external_load(10.0);
        assert_eq!(f.sum(), 30.0);
        let w = |n| f[m.dofs.index(0, n, Component::W)];
        assert_eq!((w(0), w(1), w(2)), (7.5, 15.0, 7.5));
        assert_eq!(m.external_load(0.0).norm(), 0.0);
    }
}
