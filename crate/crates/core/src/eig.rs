//! Hermitian eigendecomposition via cyclic complex Jacobi rotations.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::CoreError;
use crate::matrix::{ComplexMatrix, Scalar};

const MAX_SWEEPS: usize = 100;
const CONVERGENCE: f64 = 1e-15;

/// Spectral decomposition of a Hermitian matrix.
///
/// `values` are real and non-increasing; the columns of `vectors` are the
/// matching orthonormal eigenvectors.
#[derive(Debug, Clone)]
pub struct EigResult {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl EigResult {
    /// Rebuilds `V diag(values) V†`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.values.len();
        let d = ComplexMatrix::diag(
            &self
                .values
                .iter()
                .map(|&v| Scalar::new(v, 0.0))
                .collect::<Vec<_>>(),
        );
        self.vectors
            .mul(&d)
            .and_then(|m| m.mul(&self.vectors.dagger()))
            .unwrap_or_else(|_| ComplexMatrix::zeros(n, n))
    }
}

/// Eigendecomposition of a Hermitian matrix.
///
/// Rejects input whose anti-Hermitian part exceeds `1e-10` relative to its
/// Frobenius norm. Eigenvalues come out sorted non-increasing, ties keeping
/// their pre-sort order.
pub fn eigh(a: &ComplexMatrix) -> Result<EigResult, CoreError> {
    if !a.is_hermitian(1e-10) {
        return Err(CoreError::NotHermitian);
    }
    let n = a.rows();
    // Work on the exactly Hermitian part so rotations stay consistent.
    let mut h = ComplexMatrix::from_fn(n, n, |i, j| (a[(i, j)] + a[(j, i)].conj()) * 0.5);
    let mut v = ComplexMatrix::identity(n);
    let scale = h.frobenius_norm().max(f64::MIN_POSITIVE);

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let mut off2 = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                off2 += h[(p, q)].norm_sqr();
            }
        }
        if (2.0 * off2).sqrt() <= CONVERGENCE * scale {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let beta = h[(p, q)];
                let beta_mag = beta.norm();
                if beta_mag <= CONVERGENCE * scale / (n as f64) {
                    continue;
                }
                let phase = beta / beta_mag;
                let alpha = h[(p, p)].re;
                let gamma = h[(q, q)].re;
                let theta = (gamma - alpha) / (2.0 * beta_mag);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (theta * theta + 1.0).sqrt())
                } else {
                    -1.0 / (-theta + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                apply_rotation(&mut h, &mut v, p, q, c, s, phase);
            }
        }
    }
    if !converged {
        // Final check after the last sweep.
        let mut off2 = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                off2 += h[(p, q)].norm_sqr();
            }
        }
        if (2.0 * off2).sqrt() > CONVERGENCE * scale * 100.0 {
            return Err(CoreError::NoConvergence);
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| h[(i, i)].re).collect();
    order.sort_by(|&i, &j| diag[j].total_cmp(&diag[i]));
    let values = order.iter().map(|&i| diag[i]).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    Ok(EigResult { values, vectors })
}

/// Similarity update `H <- U† H U`, `V <- V U` for the unitary plane
/// rotation acting on rows/columns `p`, `q`:
///
/// ```text
/// U[p][p] = c      U[p][q] = s * 1
/// U[q][p] = -s e*  U[q][q] = c e*     (e = beta / |beta|)
/// ```
fn apply_rotation(
    h: &mut ComplexMatrix,
    v: &mut ComplexMatrix,
    p: usize,
    q: usize,
    c: f64,
    s: f64,
    phase: Scalar,
) {
    let n = h.rows();
    let e_conj = phase.conj();
    let e = phase;
    // Column update: A <- A U.
    for i in 0..n {
        let aip = h[(i, p)];
        let aiq = h[(i, q)];
        h[(i, p)] = aip * c - aiq * (s * e_conj);
        h[(i, q)] = aip * s + aiq * (c * e_conj);
    }
    // Row update: A <- U† A.
    for j in 0..n {
        let apj = h[(p, j)];
        let aqj = h[(q, j)];
        h[(p, j)] = apj * c - aqj * (s * e);
        h[(q, j)] = apj * s + aqj * (c * e);
    }
    for i in 0..n {
        let vip = v[(i, p)];
        let viq = v[(i, q)];
        v[(i, p)] = vip * c - viq * (s * e_conj);
        v[(i, q)] = vip * s + viq * (c * e_conj);
    }
}

/// PSD test and numerical rank of a Hermitian matrix.
///
/// A matrix counts as PSD when its smallest eigenvalue is at least
/// `-tol * ||a||_F`; the rank counts eigenvalues above `tol * ||a||_F`.
pub fn psd_rank(a: &ComplexMatrix, tol: f64) -> Result<(bool, usize), CoreError> {
    let eig = eigh(a)?;
    let scale = a.frobenius_norm();
    let threshold = tol * scale;
    let min = eig.values.last().copied().unwrap_or(0.0);
    let is_psd = min >= -threshold;
    let rank = eig.values.iter().filter(|&&l| l.abs() > threshold).count();
    Ok((is_psd, rank))
}
