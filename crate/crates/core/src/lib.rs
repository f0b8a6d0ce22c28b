//! Finite-element analysis of laminated glass beams with a viscoelastic interlayer.

pub mod elements;
pub mod io;
pub mod error;
pub mod linalg;
pub mod model;
pub mod material;
pub mod presets;
pub mod reference;
pub mod solver;

pub use error::{Error, Result};
