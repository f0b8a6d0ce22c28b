//! Perfect-adhesion compatibility between neighbouring layers.

use nalgebra::DVector;

use super::mesh::{Component, DofMap};
use crate::elements::Kinematics;
use crate::linalg::TripletMatrix;

/// Which displacement the row ties together.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowKind {
    Axial = 0,
    Vertical = 1,
}

/// Two rows per interface and node; row index `(interface * n_nodes + node) * 2 + kind`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstraintSet {
    dofs: DofMap,
    half_depth: Vec<f64>,
}

impl ConstraintSet {
    pub fn new(dofs: DofMap, thickness: &[f64]) -> Self {
        assert_eq!(thickness.len(), dofs.n_layers);
        Self {
            dofs,
            half_depth: thickness.iter().map(|h| 0.5 * h).collect(),
        }
    }

    pub fn n_interfaces(&self) -> usize {
        self.dofs.n_layers.saturating_sub(1)
    }

    pub fn len(&self) -> usize {
        2 * self.n_interfaces() * self.dofs.n_nodes
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn row(&self, interface: usize, node: usize, kind: RowKind) -> usize {
        (interface * self.dofs.n_nodes + node) * 2 + kind as usize
    }

    /// `(interface, node, kind)` of a row.
    pub fn decode(&self, row: usize) -> (usize, usize, RowKind) {
        let kind = if row % 2 == 0 { RowKind::Axial } else { RowKind::Vertical };
        let pair = row / 2;
        (pair / self.dofs.n_nodes, pair % self.dofs.n_nodes, kind)
    }

    /// Dofs a row depends on: the translation of each layer, then both rotations.
    pub fn row_dofs(&self, row: usize) -> [usize; 4] {
        let (i, n, kind) = self.decode(row);
        let comp = match kind {
            RowKind::Axial => Component::U,
            RowKind::Vertical => Component::W,
        };
        [
            self.dofs.index(i, n, comp),
            self.dofs.index(i + 1, n, comp),
            self.dofs.index(i, n, Component::Phi),
            self.dofs.index(i + 1, n, Component::Phi),
        ]
    }

    /// Value, gradient and second derivative (rotations only) of one row.
    /// Gradient and curvature are ordered as [`ConstraintSet::row_dofs`].
    fn evaluate(&self, d: &DVector<f64>, row: usize, kin: Kinematics) -> (f64, [f64; 4], [f64; 2]) {
        let (i, _, kind) = self.decode(row);
        let [ta, tb, pa, pb] = self.row_dofs(row);
        let (ha, hb) = (self.half_depth[i], self.half_depth[i + 1]);
        let (phi_a, phi_b) = (d[pa], d[pb]);
        let dt = d[ta] - d[tb];
        match (kin, kind) {
            (Kinematics::Reissner, RowKind::Axial) => {
                let (sa, ca) = phi_a.sin_cos();
                let (sb, cb) = phi_b.sin_cos();
                (
                    dt + ha * sa + hb * sb,
                    [1.0, -1.0, ha * ca, hb * cb],
                    [-ha * sa, -hb * sb],
                )
            }
            (Kinematics::Reissner, RowKind::Vertical) => {
                let (sa, ca) = phi_a.sin_cos();
                let (sb, cb) = phi_b.sin_cos();
                (
                    dt + ha * (ca - 1.0) + hb * (cb - 1.0),
                    [1.0, -1.0, -ha * sa, -hb * sb],
                    [-ha * ca, -hb * cb],
                )
            }
            (_, RowKind::Axial) => (dt + ha * phi_a + hb * phi_b, [1.0, -1.0, ha, hb], [0.0; 2]),
            (_, RowKind::Vertical) => (dt, [1.0, -1.0, 0.0, 0.0], [0.0; 2]),
        }
    }

    pub fn residual(&self, d: &DVector<f64>, kin: Kinematics) -> DVector<f64> {
        DVector::from_fn(self.len(), |r, _| self.evaluate(d, r, kin).0)
    }

    /// Residual and its exact Jacobian.
    pub fn compatibility(&self, d: &DVector<f64>, kin: Kinematics) -> (DVector<f64>, TripletMatrix) {
        let mut c = DVector::zeros(self.len());
        let mut jac = TripletMatrix::new(self.len(), self.dofs.len());
        for r in 0..self.len() {
            let (value, grad, _) = self.evaluate(d, r, kin);
            c[r] = value;
            for (dof, g) in self.row_dofs(r).into_iter().zip(grad) {
                if g != 0.0 {
                    jac.push(r, dof, g);
                }
            }
        }
        (c, jac)
    }

    /// Adds `sum_r lambda_r * hess c_r` to `k`; only the finite-rotation rows are curved.
    pub fn add_multiplier_stiffness(
        &self,
        d: &DVector<f64>,
        lambda: &DVector<f64>,
        kin: Kinematics,
        k: &mut TripletMatrix,
    ) {
        if kin != Kinematics::Reissner {
            return;
        }
        for r in 0..self.len() {
            if lambda[r] == 0.0 {
                continue;
            }
            let (_, _, curv) = self.evaluate(d, r, kin);
            let dofs = self.row_dofs(r);
            k.push(dofs[2], dofs[2], lambda[r] * curv[0]);
            k.push(dofs[3], dofs[3], lambda[r] * curv[1]);
        }
    }
}
