//! Cholesky factorization of PSD matrices with zero-extension, density
//! matrix validation and purification.
//!
//! The zero-extended factorization `Ch0` handles rank-deficient PSD input
//! by zeroing every column whose pivot vanishes; it agrees with the limit
//! of the classical factorization of `A + eps I` as `eps -> 0`.

#[allow(unused_imports)]
use num_traits::Float;

use crate::bipartite::{BipartiteState, Side};
use crate::eig::psd_rank;
use crate::error::CoreError;
use crate::matrix::{ComplexMatrix, Scalar};

/// Relative pivot threshold below which a column is treated as zero.
pub const PIVOT_TOL: f64 = 1e-12;

/// Lower triangular factor `L` with `A = L L†`.
///
/// For the zero-extended factorization, columns whose pivot vanished are
/// identically zero, which makes the factor unique.
#[derive(Debug, Clone, PartialEq)]
pub struct LowerTriangular {
    matrix: ComplexMatrix,
}

impl LowerTriangular {
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// Rebuilds `L L†`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let l = &self.matrix;
        l.mul(&l.dagger()).expect("square factor")
    }

    /// Indices of the non-zero columns; their count is the rank of the
    /// factored matrix.
    pub fn active_columns(&self) -> alloc::vec::Vec<usize> {
        let n = self.matrix.rows();
        (0..n)
            .filter(|&j| (0..n).any(|i| self.matrix[(i, j)].norm() > 0.0))
            .collect()
    }
}

/// Validated density matrix: Hermitian, PSD and unit trace.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    rank: usize,
}

impl DensityMatrix {
    /// Checks all three defining properties at tolerance `tol` and stores
    /// the numerical rank.
    pub fn new(matrix: ComplexMatrix, tol: f64) -> Result<Self, CoreError> {
        if matrix.rows() != matrix.cols() {
            return Err(CoreError::ShapeMismatch {
                expected: (matrix.rows(), matrix.rows()),
                found: (matrix.rows(), matrix.cols()),
            });
        }
        if !matrix.is_hermitian(tol) {
            return Err(CoreError::NotHermitian);
        }
        let trace = matrix.trace();
        if (trace.re - 1.0).abs() > tol || trace.im.abs() > tol {
            return Err(CoreError::NotUnitTrace { trace: trace.re });
        }
        let (is_psd, rank) = psd_rank(&matrix, tol)?;
        if !is_psd {
            return Err(CoreError::NotPositiveSemidefinite);
        }
        Ok(Self { matrix, rank })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

/// Classical Cholesky factorization of a Hermitian positive definite
/// matrix; fails with `NotPositiveDefinite` when any pivot drops below
/// `PIVOT_TOL` relative to the largest diagonal entry.
pub fn cholesky_spd(a: &ComplexMatrix) -> Result<LowerTriangular, CoreError> {
    factor(a, false)
}

/// Zero-extended Cholesky factorization of a Hermitian PSD matrix.
///
/// When a pivot falls below the relative threshold the whole column of
/// the factor is set to zero and elimination continues. The input must be
/// PSD for the result to satisfy `A = L L†`.
pub fn cholesky_psd0(a: &ComplexMatrix) -> Result<LowerTriangular, CoreError> {
    factor(a, true)
}

fn factor(a: &ComplexMatrix, zero_extend: bool) -> Result<LowerTriangular, CoreError> {
    let n = a.rows();
    if n != a.cols() {
        return Err(CoreError::ShapeMismatch {
            expected: (n, n),
            found: (n, a.cols()),
        });
    }
    if !a.is_hermitian(1e-10) {
        return Err(CoreError::NotHermitian);
    }
    let max_diag = (0..n).map(|i| a[(i, i)].re).fold(0.0_f64, f64::max);
    let threshold = PIVOT_TOL * max_diag.max(f64::MIN_POSITIVE);
    let mut l = ComplexMatrix::zeros(n, n);
    for j in 0..n {
        let mut d = a[(j, j)].re;
        for k in 0..j {
            d -= l[(j, k)].norm_sqr();
        }
        if d <= threshold {
            if !zero_extend {
                return Err(CoreError::NotPositiveDefinite);
            }
            if d < -threshold * 1e3 {
                return Err(CoreError::NotPositiveSemidefinite);
            }
            // Column stays zero; off-diagonal mass below this pivot is
            // negligible for PSD input.
            continue;
        }
        let pivot = d.sqrt();
        l[(j, j)] = Scalar::new(pivot, 0.0);
        let inv = 1.0 / pivot;
        for i in j + 1..n {
            let mut s = a[(i, j)];
            for k in 0..j {
                s -= l[(i, k)] * l[(j, k)].conj();
            }
            l[(i, j)] = s * inv;
        }
    }
    Ok(LowerTriangular { matrix: l })
}

/// Purification of a density matrix as a bipartite pure state.
#[derive(Debug, Clone)]
pub struct PurificationResult {
    /// Normalized state in `d x d` whose right Gram operator equals the
    /// input density matrix.
    pub state: BipartiteState,
    /// The zero-extended Cholesky factor the state was built from.
    pub factor: LowerTriangular,
    /// Rank of the input, which is also the Schmidt rank of the state.
    pub rank: usize,
}

/// Purifies a density matrix on a `d`-dimensional system into a pure
/// state of the `d x d` bipartite system.
///
/// For the right map the coefficient matrix is the entrywise conjugate of
/// the zero-extended Cholesky factor, which makes the right Gram operator
/// of the state reproduce the input exactly; the left map transposes it,
/// landing the input on the left Gram operator instead.
pub fn purify(rho: &DensityMatrix, side: Side) -> Result<PurificationResult, CoreError> {
    let factor = cholesky_psd0(rho.matrix())?;
    let coeffs = match side {
        Side::Right => factor.matrix().conj(),
        Side::Left => factor.matrix().dagger(),
    };
    let state = BipartiteState::new(coeffs, false)?;
    Ok(PurificationResult {
        state,
        factor,
        rank: rho.rank(),
    })
}

/// Projector onto a pure state, with entries `conj(ψ_i) ψ_j` to match the
/// matrix element convention used by the reduced density routines.
pub fn pure_projector(psi: &[Scalar]) -> ComplexMatrix {
    ComplexMatrix::from_fn(psi.len(), psi.len(), |i, j| psi[i].conj() * psi[j])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipartite::Side;
    use alloc::vec;

    fn c(re: f64, im: f64) -> Scalar {
        Scalar::new(re, im)
    }

    #[test]
    fn spd_factorization_round_trip() {
        let a = ComplexMatrix::new(
            2,
            2,
            vec![c(2.0, 0.0), c(0.5, 0.5), c(0.5, -0.5), c(1.0, 0.0)],
        )
        .unwrap();
        let l = cholesky_spd(&a).unwrap();
        let residual = l.reconstruct().sub(&a).unwrap().frobenius_norm();
        assert!(residual < 1e-14);
        assert!(l.matrix()[(0, 1)].norm() == 0.0);
    }

    #[test]
    fn spd_rejects_singular() {
        let a = ComplexMatrix::from_real(2, 2, &[1.0, 1.0, 1.0, 1.0]).unwrap();
        assert_eq!(cholesky_spd(&a).unwrap_err(), CoreError::NotPositiveDefinite);
    }

    #[test]
    fn psd0_zero_column_rule() {
        // Rank-1 PSD matrix: second column of the factor must vanish.
        let a = ComplexMatrix::from_real(2, 2, &[1.0, 1.0, 1.0, 1.0]).unwrap();
        let l = cholesky_psd0(&a).unwrap();
        assert!((l.matrix()[(0, 0)] - c(1.0, 0.0)).norm() < 1e-14);
        assert!((l.matrix()[(1, 0)] - c(1.0, 0.0)).norm() < 1e-14);
        assert!(l.matrix()[(1, 1)].norm() == 0.0);
        assert_eq!(l.active_columns(), vec![0]);
        let residual = l.reconstruct().sub(&a).unwrap().frobenius_norm();
        assert!(residual < 1e-13);
    }

    #[test]
    fn psd0_matches_regularized_limit() {
        let a = ComplexMatrix::new(
            3,
            3,
            vec![
                c(1.0, 0.0),
                c(1.0, 0.0),
                c(0.0, 0.0),
                c(1.0, 0.0),
                c(1.0, 0.0),
                c(0.0, 0.0),
                c(0.0, 0.0),
                c(0.0, 0.0),
                c(2.0, 0.0),
            ],
        )
        .unwrap();
        let l0 = cholesky_psd0(&a).unwrap();
        let eps = 1e-9;
        let reg = a.add(&ComplexMatrix::identity(3).scale(c(eps, 0.0))).unwrap();
        let l_eps = cholesky_spd(&reg).unwrap();
        let diff = l0
            .matrix()
            .sub(l_eps.matrix())
            .unwrap()
            .frobenius_norm();
        assert!(diff < 1e-4);
    }

    #[test]
    fn density_matrix_validation() {
        let good = ComplexMatrix::from_real(2, 2, &[0.5, 0.0, 0.0, 0.5]).unwrap();
        let rho = DensityMatrix::new(good, 1e-10).unwrap();
        assert_eq!(rho.rank(), 2);

        let bad_trace = ComplexMatrix::from_real(2, 2, &[1.0, 0.0, 0.0, 1.0]).unwrap();
        assert!(matches!(
            DensityMatrix::new(bad_trace, 1e-10).unwrap_err(),
            CoreError::NotUnitTrace { .. }
        ));

        let not_psd = ComplexMatrix::from_real(2, 2, &[1.5, 0.0, 0.0, -0.5]).unwrap();
        assert_eq!(
            DensityMatrix::new(not_psd, 1e-10).unwrap_err(),
            CoreError::NotPositiveSemidefinite
        );

        let not_herm = ComplexMatrix::new(
            2,
            2,
            vec![c(0.5, 0.0), c(0.1, 0.0), c(0.2, 0.0), c(0.5, 0.0)],
        )
        .unwrap();
        assert_eq!(
            DensityMatrix::new(not_herm, 1e-10).unwrap_err(),
            CoreError::NotHermitian
        );
    }

    #[test]
    fn purification_reproduces_density() {
        let rho = DensityMatrix::new(
            ComplexMatrix::new(
                2,
                2,
                vec![c(0.7, 0.0), c(0.1, 0.2), c(0.1, -0.2), c(0.3, 0.0)],
            )
            .unwrap(),
            1e-10,
        )
        .unwrap();
        let p = purify(&rho, Side::Right).unwrap();
        let gram = p.state.gram_operator(Side::Right);
        let residual = gram.sub(rho.matrix()).unwrap().frobenius_norm();
        assert!(residual < 1e-12);
        assert!((p.state.norm() - 1.0).abs() < 1e-12);

        let p = purify(&rho, Side::Left).unwrap();
        let gram = p.state.gram_operator(Side::Left);
        assert!(gram.sub(rho.matrix()).unwrap().frobenius_norm() < 1e-12);
    }

    #[test]
    fn purification_of_pure_projector_is_separable() {
        let psi = vec![c(0.6, 0.0), c(0.0, 0.8)];
        let rho = DensityMatrix::new(pure_projector(&psi), 1e-10).unwrap();
        assert_eq!(rho.rank(), 1);
        let p = purify(&rho, Side::Right).unwrap();
        assert_eq!(p.state.schmidt_rank(1e-10).unwrap(), 1);
        assert!(p.state.is_separable(1e-10).unwrap());
    }

    #[test]
    fn purification_of_mixed_state_rank() {
        let rho = DensityMatrix::new(
            ComplexMatrix::from_real(3, 3, &[0.5, 0.0, 0.0, 0.0, 0.5, 0.0, 0.0, 0.0, 0.0])
                .unwrap(),
            1e-10,
        )
        .unwrap();
        let p = purify(&rho, Side::Right).unwrap();
        assert_eq!(p.rank, 2);
        assert_eq!(p.state.schmidt_rank(1e-10).unwrap(), 2);
        let gram = p.state.gram_operator(Side::Right);
        assert!(gram.sub(rho.matrix()).unwrap().frobenius_norm() < 1e-12);
    }
}
