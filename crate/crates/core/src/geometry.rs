//! Geometric entanglement quantities: parallelepiped volumes of frames,
//! the gramian-volume map, maximal-entanglement detection and behavior
//! under local contractions.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::bipartite::{BipartiteState, Side};
use crate::error::CoreError;
use crate::frames::{gram_matrix, gramian, independent_subset, Frame};
use crate::matrix::ComplexMatrix;
use crate::svd::svd;

/// Summary of the entanglement geometry of a normalized state.
#[derive(Debug, Clone, PartialEq)]
pub struct GeometryReport {
    /// Stratum of the Schmidt foliation the state lives on.
    pub schmidt_rank: usize,
    /// Euclidean volume of the parallelepiped spanned by the right frame.
    pub volume_right: f64,
    /// Gramian volume, in `[0, 1]`; zero exactly on the separable stratum.
    pub gvol: f64,
    /// Entanglement entropy in nats.
    pub entropy: f64,
    /// Whether the reduced state on the smaller factor is maximally mixed.
    pub max_entangled: bool,
}

/// Euclidean volume of the parallelepiped spanned by a frame: the square
/// root of its gramian.
pub fn parallelepiped_volume(f: &Frame) -> f64 {
    gramian(f).max(0.0).sqrt()
}

/// Gramian volume of a normalized state.
///
/// Zero on the separable stratum; on the rank-`k` stratum it equals the
/// `k`-th root of the determinant of the Kronecker product of the reduced
/// `k x k` Gram matrices, computed here as the product of the fourth
/// powers of the non-negligible Schmidt coefficients.
pub fn gvol(psi: &BipartiteState, tol: f64) -> Result<f64, CoreError> {
    let norm = psi.norm();
    if (norm - 1.0).abs() > 1e-10 {
        return Err(CoreError::NotNormalized { norm });
    }
    let schmidt = psi.schmidt(tol)?;
    if schmidt.rank <= 1 {
        return Ok(0.0);
    }
    Ok(schmidt
        .coefficients
        .iter()
        .take(schmidt.rank)
        .map(|&s| s.powi(4))
        .product())
}

/// Independent oracle for [`gvol`] built from subframe gramians.
///
/// The rank `k` comes from pivoted elimination on the side frames, never
/// from an eigensolver. A single choice of `k` independent subframe
/// vectors does not determine the gramians of the reduced Schmidt-basis
/// Grams, but the sum over all `k x k` principal minors of each side Gram
/// does (Cauchy-Binet): that sum equals the product of the non-zero Gram
/// eigenvalues, so the product of the two minor sums equals gvol.
pub fn gvol_subframe_oracle(psi: &BipartiteState, tol: f64) -> Result<f64, CoreError> {
    let norm = psi.norm();
    if (norm - 1.0).abs() > 1e-10 {
        return Err(CoreError::NotNormalized { norm });
    }
    let right = psi.side_frame(Side::Right);
    let left = psi.side_frame(Side::Left);
    let k = independent_subset(&right, tol).len();
    if k != independent_subset(&left, tol).len() {
        // Both side frames span spaces of the same dimension.
        return Err(CoreError::NoConvergence);
    }
    if k <= 1 {
        return Ok(0.0);
    }
    let sum_right = principal_minor_sum(&gram_matrix(&right).matrix, k)?;
    let sum_left = principal_minor_sum(&gram_matrix(&left).matrix, k)?;
    Ok(sum_right * sum_left)
}

/// Sum of all `k x k` principal minors of a Hermitian matrix, by direct
/// LU determinants of the sub-blocks.
fn principal_minor_sum(a: &ComplexMatrix, k: usize) -> Result<f64, CoreError> {
    let n = a.rows();
    let mut total = 0.0;
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        let block = ComplexMatrix::from_fn(k, k, |i, j| a[(subset[i], subset[j])]);
        total += block.det()?.re;
        // Next k-combination of {0, .., n-1} in lexicographic order.
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(total);
            }
            i -= 1;
            if subset[i] < n - (k - i) {
                subset[i] += 1;
                for j in i + 1..k {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Maximal-entanglement test: the right Gram operator equals `I / d1`.
///
/// Requires `d1 <= d2`; orient wider states with
/// [`BipartiteState::swap_factors`] first.
pub fn is_maximally_entangled(psi: &BipartiteState, tol: f64) -> Result<bool, CoreError> {
    let norm = psi.norm();
    if (norm - 1.0).abs() > 1e-10 {
        return Err(CoreError::NotNormalized { norm });
    }
    let (d1, d2) = (psi.d1(), psi.d2());
    if d1 > d2 {
        return Err(CoreError::ShapeMismatch {
            expected: (d1, d1),
            found: (d1, d2),
        });
    }
    let target = ComplexMatrix::identity(d1).scale(crate::matrix::Scalar::new(1.0 / d1 as f64, 0.0));
    let diff = psi
        .gram_operator(Side::Right)
        .sub(&target)?
        .frobenius_norm();
    Ok(diff <= tol)
}

/// Right-frame parallelepiped volume before and after the local map
/// `1 ⊗ t`; `t` must be a contraction up to a small tolerance.
pub fn contraction_probe(
    psi: &BipartiteState,
    t: &ComplexMatrix,
) -> Result<(f64, f64), CoreError> {
    if t.rows() != psi.d2() || t.cols() != psi.d2() {
        return Err(CoreError::ShapeMismatch {
            expected: (psi.d2(), psi.d2()),
            found: (t.rows(), t.cols()),
        });
    }
    let op_norm = svd(t)?.singulars.first().copied().unwrap_or(0.0);
    if op_norm > 1.0 + 1e-10 {
        return Err(CoreError::NotContraction { norm: op_norm });
    }
    let frame = psi.side_frame(Side::Right);
    let before = parallelepiped_volume(&frame);
    let mapped: Vec<_> = (0..frame.len())
        .map(|i| t.mul_vec(frame.vector(i)))
        .collect::<Result<_, _>>()?;
    let after = parallelepiped_volume(&Frame::new(psi.d2(), mapped)?);
    Ok((before, after))
}

/// Full geometry summary of a normalized state. Wider-than-tall states
/// are reoriented internally for the maximal-entanglement test; every
/// reported quantity is invariant under that swap.
pub fn geometry_report(psi: &BipartiteState, tol: f64) -> Result<GeometryReport, CoreError> {
    let schmidt_rank = psi.schmidt_rank(tol)?;
    let volume_right = parallelepiped_volume(&psi.side_frame(Side::Right));
    let g = gvol(psi, tol)?;
    let entropy = psi.entanglement_entropy()?;
    let oriented = if psi.d1() <= psi.d2() {
        psi.clone()
    } else {
        psi.swap_factors()
    };
    let max_entangled = is_maximally_entangled(&oriented, 1e-8)?;
    Ok(GeometryReport {
        schmidt_rank,
        volume_right,
        gvol: g,
        entropy,
        max_entangled,
    })
}
