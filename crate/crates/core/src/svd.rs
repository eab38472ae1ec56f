//! Singular value decomposition via one-sided Jacobi.
//!
//! Rotations act on column pairs until all columns are mutually orthogonal;
//! singular values are then the column norms. This keeps tiny singular
//! values accurate, which matters for the rank decisions downstream.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::CoreError;
use crate::matrix::{inner, vec_norm, ComplexMatrix, Scalar};

const MAX_SWEEPS: usize = 60;
const ORTHO_TOL: f64 = 1e-15;

/// Decomposition `A = V D W†` with unitary `V`, `W` and non-increasing
/// singular values on the diagonal of `D`.
#[derive(Debug, Clone)]
pub struct SvdResult {
    /// Unitary left factor, `rows x rows`.
    pub left: ComplexMatrix,
    /// Non-increasing singular values, `min(rows, cols)` of them.
    pub singulars: Vec<f64>,
    /// Unitary right factor, `cols x cols`.
    pub right: ComplexMatrix,
}

impl SvdResult {
    /// Rebuilds `V D W†`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.left.rows();
        let m = self.right.rows();
        let mut d = ComplexMatrix::zeros(n, m);
        for (i, &s) in self.singulars.iter().enumerate() {
            d[(i, i)] = Scalar::new(s, 0.0);
        }
        self.left
            .mul(&d)
            .and_then(|x| x.mul(&self.right.dagger()))
            .unwrap_or_else(|_| ComplexMatrix::zeros(n, m))
    }

    /// Number of singular values above `tol` relative to the largest one.
    pub fn rank(&self, tol: f64) -> usize {
        let top = self.singulars.first().copied().unwrap_or(0.0);
        self.singulars.iter().filter(|&&s| s > tol * top).count()
    }
}

/// Singular value decomposition of a general complex matrix.
pub fn svd(a: &ComplexMatrix) -> Result<SvdResult, CoreError> {
    let n = a.rows();
    let m = a.cols();
    let mut cols: Vec<Vec<Scalar>> = (0..m).map(|j| a.col(j)).collect();
    let mut w = ComplexMatrix::identity(m);
    let scale2: f64 = cols.iter().map(|c| c.iter().map(|z| z.norm_sqr()).sum::<f64>()).sum();
    let scale2 = scale2.max(f64::MIN_POSITIVE);

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..m {
            for q in p + 1..m {
                let alpha: f64 = cols[p].iter().map(|z| z.norm_sqr()).sum();
                let gamma: f64 = cols[q].iter().map(|z| z.norm_sqr()).sum();
                let beta = inner(&cols[p], &cols[q]);
                let beta_mag = beta.norm();
                if beta_mag <= ORTHO_TOL * (alpha * gamma).sqrt().max(ORTHO_TOL * scale2) {
                    continue;
                }
                rotated = true;
                let phase = beta / beta_mag;
                let theta = (gamma - alpha) / (2.0 * beta_mag);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (theta * theta + 1.0).sqrt())
                } else {
                    -1.0 / (-theta + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let se = phase.conj() * s;
                let ce = phase.conj() * c;
                for i in 0..n {
                    let aip = cols[p][i];
                    let aiq = cols[q][i];
                    cols[p][i] = aip * c - aiq * se;
                    cols[q][i] = aip * s + aiq * ce;
                }
                for i in 0..m {
                    let wip = w[(i, p)];
                    let wiq = w[(i, q)];
                    w[(i, p)] = wip * c - wiq * se;
                    w[(i, q)] = wip * s + wiq * ce;
                }
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(CoreError::NoConvergence);
    }

    let norms: Vec<f64> = cols.iter().map(|c| vec_norm(c)).collect();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&i, &j| norms[j].total_cmp(&norms[i]));

    let singulars: Vec<f64> = order.iter().take(n.min(m)).map(|&j| norms[j]).collect();
    let right = ComplexMatrix::from_fn(m, m, |i, j| w[(i, order[j])]);

    let sigma_max = singulars.first().copied().unwrap_or(0.0);
    let cutoff = 1e-13 * sigma_max;
    let mut v_cols: Vec<Vec<Scalar>> = Vec::with_capacity(n);
    for k in 0..n.min(m) {
        if norms[order[k]] > cutoff && norms[order[k]] > 0.0 {
            let inv = 1.0 / norms[order[k]];
            v_cols.push(cols[order[k]].iter().map(|&z| z * inv).collect());
        } else {
            break;
        }
    }
    complete_orthonormal(&mut v_cols, n);
    let left = ComplexMatrix::from_fn(n, n, |i, j| v_cols[j][i]);

    Ok(SvdResult {
        left,
        singulars,
        right,
    })
}

/// Extends a set of orthonormal columns to a full orthonormal basis of
/// dimension `n`, deterministically, by Gram-Schmidt over the canonical
/// basis (two passes for stability).
pub(crate) fn complete_orthonormal(cols: &mut Vec<Vec<Scalar>>, n: usize) {
    let mut cand = 0;
    while cols.len() < n && cand < n {
        let mut v: Vec<Scalar> = (0..n)
            .map(|i| Scalar::new(if i == cand { 1.0 } else { 0.0 }, 0.0))
            .collect();
        for _ in 0..2 {
            for u in cols.iter() {
                let proj = inner(u, &v);
                for i in 0..n {
                    v[i] -= proj * u[i];
                }
            }
        }
        let norm = vec_norm(&v);
        if norm > 1e-8 {
            let inv = 1.0 / norm;
            cols.push(v.iter().map(|&z| z * inv).collect());
        }
        cand += 1;
    }
    debug_assert_eq!(cols.len(), n);
}
