//! Direct solution of the saddle-point system `[K C^T; C 0] [dd; lambda] = -[r_f; r_c]`.

use nalgebra::DVector;

use crate::error::{Error, Result};
use crate::linalg::{BandMatrix, TripletMatrix};

/// Solves the KKT system with the unknowns in their natural order
/// (all displacements, then all multipliers).
pub fn kkt_solve(
    k: &TripletMatrix,
    c: &TripletMatrix,
    r_f: &DVector<f64>,
    r_c: &DVector<f64>,
    pivot_tol: f64,
) -> Result<(DVector<f64>, DVector<f64>)> {
    let order: Vec<usize> = (0..k.n_rows + c.n_rows).collect();
    kkt_solve_ordered(k, c, r_f, r_c, &order, pivot_tol)
}

/// As [`kkt_solve`], with `position[i]` the place of unknown `i` in the band
/// ordering (displacements first, then multipliers).
///
/// The matrix is symmetrically equilibrated before factorization: every
/// displacement is scaled by `|K_ii|^(-1/2)` and every constraint row to unit
/// maximum.
pub fn kkt_solve_ordered(
    k: &TripletMatrix,
    c: &TripletMatrix,
    r_f: &DVector<f64>,
    r_c: &DVector<f64>,
    position: &[usize],
    pivot_tol: f64,
) -> Result<(DVector<f64>, DVector<f64>)> {
    let n = k.n_rows;
    let m = c.n_rows;
    assert_eq!(k.n_cols, n);
    assert_eq!(c.n_cols, n);
    assert_eq!(position.len(), n + m);

    let mut diag = vec![0.0; n];
    for &(r, col, v) in &k.entries {
        if r == col {
            diag[r] += v;
        }
    }
    let sd: Vec<f64> = diag
        .iter()
        .map(|&v| if v.abs() > 0.0 { 1.0 / v.abs().sqrt() } else { 1.0 })
        .collect();
    let mut row_max = vec![0.0f64; m];
    for &(r, col, v) in &c.entries {
        row_max[r] = row_max[r].max((v * sd[col]).abs());
    }
    let sc: Vec<f64> = row_max.iter().map(|&v| if v > 0.0 { 1.0 / v } else { 1.0 }).collect();

    let mut bw = 0usize;
    let span = |a: usize, b: usize| position[a].abs_diff(position[b]);
    for &(r, col, _) in &k.entries {
        bw = bw.max(span(r, col));
    }
    for &(r, col, _) in &c.entries {
        bw = bw.max(span(n + r, col));
    }

    let mut band = BandMatrix::zeros(n + m, bw, bw);
    for &(r, col, v) in &k.entries {
        band.add(position[r], position[col], v * sd[r] * sd[col]);
    }
    for &(r, col, v) in &c.entries {
        let s = v * sc[r] * sd[col];
        band.add(position[n + r], position[col], s);
        band.add(position[col], position[n + r], s);
    }

    let mut rhs = vec![0.0; n + m];
    for i in 0..n {
        rhs[position[i]] = -r_f[i] * sd[i];
    }
    for r in 0..m {
        rhs[position[n + r]] = -r_c[r] * sc[r];
    }
    let lu = band.factor(pivot_tol).map_err(|e| match e {
        Error::Singular { pivot, value } => Error::Singular {
            pivot: position.iter().position(|&p| p == pivot).unwrap_or(pivot),
            value,
        },
        other => other,
    })?;
    lu.solve_in_place(&mut rhs);
    let dd = DVector::from_fn(n, |i, _| rhs[position[i]] * sd[i]);
    let lambda = DVector::from_fn(m, |r, _| rhs[position[n + r]] * sc[r]);
    Ok((dd, lambda))
}
