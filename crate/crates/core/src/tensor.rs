//! Kronecker products, column stacking and 1-based index maps between
//! local pairs (i, j) and the flat global index of the product space.

use alloc::vec::Vec;

use crate::error::CoreError;
use crate::matrix::{ComplexMatrix, ComplexVector, Scalar};

/// Kronecker product `a ⊗ b` with the usual block layout: block (i, j)
/// equals `a[(i, j)] * b`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (ar, ac) = (a.rows(), a.cols());
    let (br, bc) = (b.rows(), b.cols());
    ComplexMatrix::from_fn(ar * br, ac * bc, |i, j| {
        a[(i / br, j / bc)] * b[(i % br, j % bc)]
    })
}

/// Kronecker product of two vectors in the flat ordering compatible with
/// [`pair_to_flat`].
pub fn kron_vec(a: &[Scalar], b: &[Scalar]) -> ComplexVector {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for &x in a {
        for &y in b {
            out.push(x * y);
        }
    }
    out
}

/// Column stacking: `vec(A) = (a_11, ..., a_n1, ..., a_1m, ..., a_nm)`.
pub fn vec_op(a: &ComplexMatrix) -> ComplexVector {
    let mut out = Vec::with_capacity(a.rows() * a.cols());
    for j in 0..a.cols() {
        for i in 0..a.rows() {
            out.push(a[(i, j)]);
        }
    }
    out
}

/// Hilbert-Schmidt inner product `tr(a† b)`.
///
/// Agrees with the flat inner product of `vec(a)` and `vec(b)`.
pub fn hs_inner(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<Scalar, CoreError> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(CoreError::ShapeMismatch {
            expected: (a.rows(), a.cols()),
            found: (b.rows(), b.cols()),
        });
    }
    Ok(a.entries()
        .iter()
        .zip(b.entries())
        .map(|(x, y)| x.conj() * y)
        .sum())
}

/// Maps the 1-based local pair (i, j) to the 1-based flat index
/// `(i - 1) * d2 + j` of the product space.
pub fn pair_to_flat(i: usize, j: usize, d1: usize, d2: usize) -> Result<usize, CoreError> {
    if i < 1 || i > d1 {
        return Err(CoreError::IndexOutOfRange { index: i, len: d1 });
    }
    if j < 1 || j > d2 {
        return Err(CoreError::IndexOutOfRange { index: j, len: d2 });
    }
    Ok((i - 1) * d2 + j)
}

/// Inverse of [`pair_to_flat`]: decomposes the 1-based flat index into its
/// unique 1-based local pair.
pub fn flat_to_pair(alpha: usize, d1: usize, d2: usize) -> Result<(usize, usize), CoreError> {
    if alpha < 1 || alpha > d1 * d2 {
        return Err(CoreError::IndexOutOfRange {
            index: alpha,
            len: d1 * d2,
        });
    }
    let i = (alpha - 1) / d2 + 1;
    let j = (alpha - 1) % d2 + 1;
    Ok((i, j))
}
