use crate::error::{Error, Result};

/// Shared one-dimensional grid of all layers.
#[derive(Debug, Clone, PartialEq)]
pub struct Mesh {
    x: Vec<f64>,
}

impl Mesh {
    /// Uniform mesh of `n_el` elements over `[0, span]`.
    pub fn uniform(span: f64, n_el: usize) -> Result<Self> {
        Self::with_breakpoints(span, n_el, &[])
    }

    /// Piecewise-uniform mesh with a node at every interior breakpoint.
    /// Elements are shared between segments in proportion to their length.
    pub fn with_breakpoints(span: f64, n_el: usize, breakpoints: &[f64]) -> Result<Self> {
        if n_el < 2 {
            return Err(Error::config(
                "solver.n_el",
                format!("at least 2 elements per layer are required, got {n_el}"),
            ));
        }
        let mut ends: Vec<f64> = breakpoints.to_vec();
        ends.push(span);
        let mut x = vec![0.0];
        let mut start = 0.0;
        let mut used = 0usize;
        for (s, &end) in ends.iter().enumerate() {
            let remaining_segments = ends.len() - s - 1;
            let n = if remaining_segments == 0 {
                n_el - used
            } else {
                (((end - start) / span * n_el as f64).round() as usize)
                    .clamp(1, n_el - used - remaining_segments)
            };
            for k in 1..=n {
                x.push(if k == n { end } else { start + (end - start) * k as f64 / n as f64 });
            }
            used += n;
            start = end;
        }
        Ok(Self { x })
    }

    pub fn n_el(&self) -> usize {
        self.x.len() - 1
    }

    pub fn n_nodes(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self) -> &[f64] {
        &self.x
    }

    pub fn element_length(&self, e: usize) -> f64 {
        self.x[e + 1] - self.x[e]
    }

    pub fn span(&self) -> f64 {
        *self.x.last().unwrap()
    }

    /// Node closest to `x`.
    pub fn nearest_node(&self, x: f64) -> usize {
        let mut best = 0;
        for (i, &xi) in self.x.iter().enumerate() {
            if (xi - x).abs() < (self.x[best] - x).abs() {
                best = i;
            }
        }
        best
    }

    /// Element containing `x` and the local coordinate in `[0, 1]`.
    pub fn locate(&self, x: f64) -> (usize, f64) {
        let e = match self.x.partition_point(|&xi| xi <= x) {
            0 => 0,
            p => (p - 1).min(self.n_el() - 1),
        };
        (e, ((x - self.x[e]) / self.element_length(e)).clamp(0.0, 1.0))
    }
}

/// Displacement component at a node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Component {
    U = 0,
    W = 1,
    Phi = 2,
}

/// Global numbering of `(layer, node, component)`, layer-major then node-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DofMap {
    pub n_layers: usize,
    pub n_nodes: usize,
}

impl DofMap {
    pub fn index(&self, layer: usize, node: usize, comp: Component) -> usize {
        (layer * self.n_nodes + node) * 3 + comp as usize
    }

    pub fn len(&self) -> usize {
        3 * self.n_layers * self.n_nodes
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Inverse of [`DofMap::index`].
    pub fn decode(&self, dof: usize) -> (usize, usize, Component) {
        let comp = match dof % 3 {
            0 => Component::U,
            1 => Component::W,
            _ => Component::Phi,
        };
        let ln = dof / 3;
        (ln / self.n_nodes, ln % self.n_nodes, comp)
    }

    /// Global indices of the six dofs of element `e` in layer `layer`.
    pub fn element(&self, layer: usize, e: usize) -> [usize; 6] {
        let a = self.index(layer, e, Component::U);
        [a, a + 1, a + 2, a + 3, a + 4, a + 5]
    }
}
