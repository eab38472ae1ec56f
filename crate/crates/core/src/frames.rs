//! Frames of vectors, their Gram and relative Gram matrices, gramians and
//! unitary alignment of frames with equal Gram matrices.
//!
//! The scalar product is conjugate-linear in the first argument, so the
//! Gram matrix of a frame equals `C† C` where `C` stacks the frame vectors
//! as columns.

use alloc::vec::Vec;


use crate::eig::psd_rank;
use crate::error::CoreError;
use crate::matrix::{inner, vec_norm, ComplexMatrix, ComplexVector, Scalar};
use crate::svd::complete_orthonormal;

/// Cap for the permutation-sum wedge oracle; beyond this the factorial
/// cost is no longer a test-time affair.
pub const WEDGE_CAP: usize = 8;

/// Ordered finite list of vectors in a complex Euclidean space. Vectors
/// need not be independent, normalized or spanning.
#[derive(Debug, Clone, PartialEq)]
pub struct Frame {
    ambient_dim: usize,
    vectors: Vec<ComplexVector>,
}

impl Frame {
    pub fn new(ambient_dim: usize, vectors: Vec<ComplexVector>) -> Result<Self, CoreError> {
        if vectors.is_empty() {
            return Err(CoreError::IndexOutOfRange { index: 0, len: 0 });
        }
        for v in &vectors {
            if v.len() != ambient_dim {
                return Err(CoreError::ShapeMismatch {
                    expected: (ambient_dim, 1),
                    found: (v.len(), 1),
                });
            }
            if v.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
                return Err(CoreError::NonFinite);
            }
        }
        Ok(Self {
            ambient_dim,
            vectors,
        })
    }

    /// Canonical basis of dimension `d` as a frame.
    pub fn canonical(d: usize) -> Self {
        let vectors = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| Scalar::new(if i == j { 1.0 } else { 0.0 }, 0.0))
                    .collect()
            })
            .collect();
        Self {
            ambient_dim: d,
            vectors,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[ComplexVector] {
        &self.vectors
    }

    pub fn vector(&self, i: usize) -> &ComplexVector {
        &self.vectors[i]
    }

    /// Frame with the vector at 0-based position `i` removed.
    pub fn without(&self, i: usize) -> Result<Frame, CoreError> {
        if i >= self.len() || self.len() < 2 {
            return Err(CoreError::IndexOutOfRange {
                index: i + 1,
                len: self.len(),
            });
        }
        let vectors = self
            .vectors
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, v)| v.clone())
            .collect();
        Ok(Frame {
            ambient_dim: self.ambient_dim,
            vectors,
        })
    }

    /// Matrix whose columns are the frame vectors.
    pub fn as_columns(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.ambient_dim, self.len(), |i, j| self.vectors[j][i])
    }

    /// Numerical rank of the frame at relative tolerance `tol`.
    pub fn rank(&self, tol: f64) -> usize {
        match crate::svd::svd(&self.as_columns()) {
            Ok(s) => s.rank(tol),
            Err(_) => 0,
        }
    }
}

/// Gram matrix of a frame: Hermitian, positive semi-definite, singular
/// exactly when the frame vectors are linearly dependent.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix {
    pub matrix: ComplexMatrix,
    pub source_len: usize,
}

/// Cross Gram matrix of two equal-length frames.
#[derive(Debug, Clone, PartialEq)]
pub struct RelativeGram {
    pub matrix: ComplexMatrix,
}

/// Gram matrix with entry `(i, j) = <f_i, f_j>`.
pub fn gram_matrix(f: &Frame) -> GramMatrix {
    let k = f.len();
    let matrix = ComplexMatrix::from_fn(k, k, |i, j| inner(f.vector(i), f.vector(j)));
    GramMatrix {
        matrix,
        source_len: k,
    }
}

/// Frame operator `C C†` (the Gram matrix's mirror on the ambient space);
/// shares its nonzero spectrum with the Gram matrix and transforms by
/// congruence under linear maps of the ambient space.
pub fn frame_operator(f: &Frame) -> ComplexMatrix {
    let c = f.as_columns();
    c.mul(&c.dagger()).expect("square by construction")
}

/// Relative Gram matrix with entry `(i, j) = <f_i, g_j>`.
///
/// Reduces to [`gram_matrix`] when both frames coincide, and satisfies
/// `relative_gram(f, g)† == relative_gram(g, f)`.
pub fn relative_gram(f: &Frame, g: &Frame) -> Result<RelativeGram, CoreError> {
    if f.len() != g.len() || f.ambient_dim() != g.ambient_dim() {
        return Err(CoreError::ShapeMismatch {
            expected: (f.ambient_dim(), f.len()),
            found: (g.ambient_dim(), g.len()),
        });
    }
    let k = f.len();
    let matrix = ComplexMatrix::from_fn(k, k, |i, j| inner(f.vector(i), g.vector(j)));
    Ok(RelativeGram { matrix })
}

/// Determinant of the Gram matrix, clamped to `>= 0`.
///
/// Its square root is the Euclidean volume of the parallelepiped spanned
/// by the frame.
pub fn gramian(f: &Frame) -> f64 {
    let g = gram_matrix(f);
    let det = g.matrix.det().expect("gram matrix is square");
    // The determinant of a PSD matrix is real and bounded by the product
    // of the diagonal (Hadamard). Values within rounding noise of that
    // scale are degenerate frames; clamp them to zero so square roots do
    // not amplify the noise.
    let hadamard: f64 = (0..f.len())
        .map(|i| g.matrix[(i, i)].re.max(0.0))
        .product();
    if det.re <= 1e-12 * hadamard {
        return 0.0;
    }
    det.re
}

/// Euclidean distance from vector `i` (0-based) to the span of the other
/// frame vectors, computed by orthogonal projection.
pub fn height(f: &Frame, i: usize) -> Result<f64, CoreError> {
    if f.len() < 2 || i >= f.len() {
        return Err(CoreError::IndexOutOfRange {
            index: i + 1,
            len: f.len(),
        });
    }
    let rest = f.without(i)?;
    let basis = orthonormal_spanning_set(&rest, 1e-12);
    let mut v = f.vector(i).clone();
    for _ in 0..2 {
        for u in &basis {
            let proj = inner(u, &v);
            for (x, y) in v.iter_mut().zip(u) {
                *x -= proj * y;
            }
        }
    }
    Ok(vec_norm(&v))
}

/// Image frame `{ a f_1, ..., a f_k }` under a square matrix on the
/// ambient space.
pub fn transform_frame(a: &ComplexMatrix, f: &Frame) -> Result<Frame, CoreError> {
    if a.rows() != f.ambient_dim() || a.cols() != f.ambient_dim() {
        return Err(CoreError::ShapeMismatch {
            expected: (f.ambient_dim(), f.ambient_dim()),
            found: (a.rows(), a.cols()),
        });
    }
    let vectors = f
        .vectors()
        .iter()
        .map(|v| a.mul_vec(v))
        .collect::<Result<Vec<_>, _>>()?;
    Frame::new(f.ambient_dim(), vectors)
}

/// Inner product of the wedge products `f_1 ∧ ... ∧ f_k` and
/// `g_1 ∧ ... ∧ g_k`, by the Leibniz sum over permutations of products of
/// pairwise inner products.
///
/// Serves as an independent oracle for `det(relative_gram(f, g))`; the
/// value is zero whenever `k` exceeds the ambient dimension.
pub fn wedge_inner_bruteforce(f: &Frame, g: &Frame) -> Result<Scalar, CoreError> {
    if f.len() != g.len() || f.ambient_dim() != g.ambient_dim() {
        return Err(CoreError::ShapeMismatch {
            expected: (f.ambient_dim(), f.len()),
            found: (g.ambient_dim(), g.len()),
        });
    }
    let k = f.len();
    if k > WEDGE_CAP {
        return Err(CoreError::FrameTooLong {
            len: k,
            cap: WEDGE_CAP,
        });
    }
    // Pairwise inner products <f_i, g_j>.
    let ip = ComplexMatrix::from_fn(k, k, |i, j| inner(f.vector(i), g.vector(j)));
    let mut total = Scalar::new(0.0, 0.0);
    let mut perm: Vec<usize> = (0..k).collect();
    permute_sum(&mut perm, 0, 1.0, &ip, &mut total);
    Ok(total)
}

fn permute_sum(
    perm: &mut Vec<usize>,
    depth: usize,
    sign: f64,
    ip: &ComplexMatrix,
    total: &mut Scalar,
) {
    let k = perm.len();
    if depth == k {
        let mut prod = Scalar::new(sign, 0.0);
        for (i, &j) in perm.iter().enumerate() {
            prod *= ip[(i, j)];
        }
        *total += prod;
        return;
    }
    for swap in depth..k {
        perm.swap(depth, swap);
        let s = if swap == depth { sign } else { -sign };
        permute_sum(perm, depth + 1, s, ip, total);
        perm.swap(depth, swap);
    }
}

/// Unitary `U` with `U f1_i ≈ f2_i` for frames with equal Gram matrices.
///
/// A spanning subset of `f1` is orthonormalized by pivoted Gram-Schmidt;
/// the identical linear combinations applied to `f2` give a matching
/// orthonormal set because the Gram matrices agree. Both sets are extended
/// to full bases over the canonical vectors, which makes the completion on
/// the orthogonal complement deterministic (and yields `U = I` for
/// `f1 == f2`).
pub fn align_frames(f1: &Frame, f2: &Frame, tol: f64) -> Result<ComplexMatrix, CoreError> {
    if f1.len() != f2.len() || f1.ambient_dim() != f2.ambient_dim() {
        return Err(CoreError::ShapeMismatch {
            expected: (f1.ambient_dim(), f1.len()),
            found: (f2.ambient_dim(), f2.len()),
        });
    }
    let g1 = gram_matrix(f1);
    let g2 = gram_matrix(f2);
    let distance = g1
        .matrix
        .sub(&g2.matrix)
        .expect("equal shapes")
        .frobenius_norm();
    let scale = g1.matrix.frobenius_norm().max(1.0);
    if distance > tol * scale {
        return Err(CoreError::GramMismatch { distance });
    }

    let d = f1.ambient_dim();
    // Pivoted Gram-Schmidt on f1, mirroring every operation on f2.
    let mut q1: Vec<ComplexVector> = Vec::new();
    let mut q2: Vec<ComplexVector> = Vec::new();
    let mut residual: Vec<ComplexVector> = f1.vectors().to_vec();
    let mut residual2: Vec<ComplexVector> = f2.vectors().to_vec();
    let mut used = alloc::vec![false; f1.len()];
    let frame_scale = f1
        .vectors()
        .iter()
        .map(|v| vec_norm(v))
        .fold(0.0_f64, f64::max)
        .max(f64::MIN_POSITIVE);
    loop {
        // Largest remaining residual first.
        let mut best = None;
        let mut best_norm = 0.0;
        for (i, r) in residual.iter().enumerate() {
            if used[i] {
                continue;
            }
            let n = vec_norm(r);
            if n > best_norm {
                best_norm = n;
                best = Some(i);
            }
        }
        let Some(i) = best else { break };
        if best_norm <= 1e-12 * frame_scale {
            break;
        }
        used[i] = true;
        let inv = 1.0 / best_norm;
        let u1: ComplexVector = residual[i].iter().map(|&z| z * inv).collect();
        // Mirror the normalization on the second frame with the same
        // scalar; equal Grams keep the mirrored set orthonormal.
        let inv2 = 1.0 / vec_norm(&residual2[i]).max(f64::MIN_POSITIVE);
        let u2: ComplexVector = residual2[i].iter().map(|&z| z * inv2).collect();
        for j in 0..residual.len() {
            if used[j] {
                continue;
            }
            let proj = inner(&u1, &residual[j]);
            for (x, y) in residual[j].iter_mut().zip(&u1) {
                *x -= proj * y;
            }
            for (x, y) in residual2[j].iter_mut().zip(&u2) {
                *x -= proj * y;
            }
        }
        q1.push(u1);
        q2.push(u2);
        if q1.len() == d {
            break;
        }
    }

    complete_orthonormal(&mut q1, d);
    complete_orthonormal(&mut q2, d);

    // U = sum_t q2_t q1_t†.
    let mut u = ComplexMatrix::zeros(d, d);
    for (a, b) in q1.iter().zip(&q2) {
        for i in 0..d {
            for j in 0..d {
                u[(i, j)] += b[i] * a[j].conj();
            }
        }
    }
    Ok(u)
}

/// Orthonormal basis of the span of a frame via pivoted Gram-Schmidt with
/// re-orthogonalization.
pub(crate) fn orthonormal_spanning_set(f: &Frame, rel_tol: f64) -> Vec<ComplexVector> {
    let mut basis: Vec<ComplexVector> = Vec::new();
    let mut residual: Vec<ComplexVector> = f.vectors().to_vec();
    let scale = residual
        .iter()
        .map(|v| vec_norm(v))
        .fold(0.0_f64, f64::max)
        .max(f64::MIN_POSITIVE);
    let mut used = alloc::vec![false; residual.len()];
    loop {
        let mut best = None;
        let mut best_norm = 0.0;
        for (i, r) in residual.iter().enumerate() {
            if !used[i] {
                let n = vec_norm(r);
                if n > best_norm {
                    best_norm = n;
                    best = Some(i);
                }
            }
        }
        let Some(i) = best else { break };
        if best_norm <= rel_tol * scale {
            break;
        }
        used[i] = true;
        let inv = 1.0 / best_norm;
        let u: ComplexVector = residual[i].iter().map(|&z| z * inv).collect();
        for j in 0..residual.len() {
            if used[j] {
                continue;
            }
            let proj = inner(&u, &residual[j]);
            for (x, y) in residual[j].iter_mut().zip(&u) {
                *x -= proj * y;
            }
        }
        basis.push(u);
        if basis.len() == f.ambient_dim() {
            break;
        }
    }
    basis
}

/// Indices (0-based) of a maximal linearly independent subset of the
/// frame, picked by pivoted Gram-Schmidt with largest-residual-first
/// pivoting.
pub fn independent_subset(f: &Frame, rel_tol: f64) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut residual: Vec<ComplexVector> = f.vectors().to_vec();
    let scale = residual
        .iter()
        .map(|v| vec_norm(v))
        .fold(0.0_f64, f64::max)
        .max(f64::MIN_POSITIVE);
    let mut used = alloc::vec![false; residual.len()];
    loop {
        let mut best = None;
        let mut best_norm = 0.0;
        for (i, r) in residual.iter().enumerate() {
            if !used[i] {
                let n = vec_norm(r);
                if n > best_norm {
                    best_norm = n;
                    best = Some(i);
                }
            }
        }
        let Some(i) = best else { break };
        if best_norm <= rel_tol * scale {
            break;
        }
        used[i] = true;
        let inv = 1.0 / best_norm;
        let u: ComplexVector = residual[i].iter().map(|&z| z * inv).collect();
        for j in 0..residual.len() {
            if used[j] {
                continue;
            }
            let proj = inner(&u, &residual[j]);
            for (x, y) in residual[j].iter_mut().zip(&u) {
                *x -= proj * y;
            }
        }
        chosen.push(i);
    }
    chosen.sort_unstable();
    chosen
}

/// Convenience: PSD verdict of a Gram matrix (always true up to numerics).
pub fn gram_is_psd(g: &GramMatrix, tol: f64) -> bool {
    psd_rank(&g.matrix, tol).map(|(ok, _)| ok).unwrap_or(false)
}
