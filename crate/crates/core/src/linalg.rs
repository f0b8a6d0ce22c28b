//! Coordinate-format assembly and a banded LU factorization.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Sparse matrix as a list of `(row, col, value)` triplets; duplicates add up.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct TripletMatrix {
    pub n_rows: usize,
    pub n_cols: usize,
    pub entries: Vec<(usize, usize, f64)>,
}

impl TripletMatrix {
    pub fn new(n_rows: usize, n_cols: usize) -> Self {
        Self {
            n_rows,
            n_cols,
            entries: Vec::new(),
        }
    }

    pub fn push(&mut self, row: usize, col: usize, value: f64) {
        debug_assert!(row < self.n_rows && col < self.n_cols);
        self.entries.push((row, col, value));
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(self.n_rows, self.n_cols);
        for &(r, c, v) in &self.entries {
            m[(r, c)] += v;
        }
        m
    }

    pub fn mul_vec(&self, x: &DVector<f64>) -> DVector<f64> {
        let mut y = DVector::zeros(self.n_rows);
        for &(r, c, v) in &self.entries {
            y[r] += v * x[c];
        }
        y
    }

    /// `A^T x`.
    pub fn tr_mul_vec(&self, x: &DVector<f64>) -> DVector<f64> {
        let mut y = DVector::zeros(self.n_cols);
        for &(r, c, v) in &self.entries {
            y[c] += v * x[r];
        }
        y
    }
}

/// General band matrix with `kl` sub- and `ku` super-diagonals, stored with
/// room for the fill-in of partial pivoting.
#[derive(Debug, Clone)]
pub struct BandMatrix {
    n: usize,
    kl: usize,
    ku: usize,
    ab: Vec<f64>,
}

impl BandMatrix {
    pub fn zeros(n: usize, kl: usize, ku: usize) -> Self {
        Self {
            n,
            kl,
            ku,
            ab: vec![0.0; (2 * kl + ku + 1) * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    fn ldab(&self) -> usize {
        2 * self.kl + self.ku + 1
    }

    fn slot(&self, row: usize, col: usize) -> usize {
        (self.kl + self.ku + row - col) + col * self.ldab()
    }

    pub fn add(&mut self, row: usize, col: usize, value: f64) {
        assert!(
            row <= col + self.kl && col <= row + self.ku,
            "entry ({row}, {col}) lies outside the band"
        );
        let s = self.slot(row, col);
        self.ab[s] += value;
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        if row > col + self.kl || col > row + self.ku {
            0.0
        } else {
            self.ab[self.slot(row, col)]
        }
    }

    /// LU with partial pivoting. A pivot of magnitude at most `pivot_tol`
    /// times the largest entry is reported as singular.
    pub fn factor(mut self, pivot_tol: f64) -> Result<BandLu> {
        let n = self.n;
        let kl = self.kl;
        let kv = self.kl + self.ku;
        let ld = self.ldab();
        let scale = self.ab.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let threshold = pivot_tol * scale;
        let mut ipiv = vec![0usize; n];
        let mut ju = 0usize;
        let ab = &mut self.ab;
        for j in 0..n {
            let km = kl.min(n - 1 - j);
            let col = j * ld;
            let mut jp = 0;
            let mut best = ab[col + kv].abs();
            for p in 1..=km {
                let v = ab[col + kv + p].abs();
                if v > best {
                    best = v;
                    jp = p;
                }
            }
            ipiv[j] = j + jp;
            if !(best > threshold) {
                return Err(Error::Singular {
                    pivot: j,
                    value: ab[col + kv + jp],
                });
            }
            ju = ju.max((j + self.ku + jp).min(n - 1));
            if jp != 0 {
                for c in j..=ju {
                    let a = kv + j - c + c * ld;
                    let b = kv + j + jp - c + c * ld;
                    ab.swap(a, b);
                }
            }
            let inv = 1.0 / ab[col + kv];
            for p in 1..=km {
                ab[col + kv + p] *= inv;
            }
            for c in j + 1..=ju {
                let t = ab[kv + j - c + c * ld];
                if t != 0.0 {
                    for p in 1..=km {
                        let l = ab[col + kv + p];
                        ab[kv + j + p - c + c * ld] -= l * t;
                    }
                }
            }
        }
        Ok(BandLu { lu: self, ipiv })
    }
}

/// Factors of a [`BandMatrix`].
#[derive(Debug, Clone)]
pub struct BandLu {
    lu: BandMatrix,
    ipiv: Vec<usize>,
}

impl BandLu {
    /// Overwrites `b` with the solution of `A x = b`.
    pub fn solve_in_place(&self, b: &mut [f64]) {
        let n = self.lu.n;
        assert_eq!(b.len(), n);
        let kl = self.lu.kl;
        let kv = self.lu.kl + self.lu.ku;
        let ld = self.lu.ldab();
        let ab = &self.lu.ab;
        for j in 0..n {
            b.swap(j, self.ipiv[j]);
            let bj = b[j];
            if bj != 0.0 {
                for p in 1..=kl.min(n - 1 - j) {
                    b[j + p] -= ab[kv + p + j * ld] * bj;
                }
            }
        }
        for j in (0..n).rev() {
            b[j] /= ab[kv + j * ld];
            let bj = b[j];
            if bj != 0.0 {
                for i in j.saturating_sub(kv)..j {
                    b[i] -= ab[kv + i - j + j * ld] * bj;
                }
            }
        }
    }
}
