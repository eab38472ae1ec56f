//! Shared deterministic generators for the integration tests.

#![allow(dead_code)]

use gramq_core::{ComplexMatrix, ComplexVector, Frame, Scalar};
use rand_core::{RngCore, SeedableRng};

pub type Rng = rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> Rng {
    Rng::seed_from_u64(seed)
}

/// Uniform in [-1, 1).
pub fn uniform(rng: &mut Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (2.0 / (1u64 << 53) as f64) - 1.0
}

pub fn rand_scalar(rng: &mut Rng) -> Scalar {
    Scalar::new(uniform(rng), uniform(rng))
}

pub fn rand_matrix(rng: &mut Rng, rows: usize, cols: usize) -> ComplexMatrix {
    let entries: Vec<Scalar> = (0..rows * cols).map(|_| rand_scalar(rng)).collect();
    ComplexMatrix::new(rows, cols, entries).unwrap()
}

pub fn rand_vector(rng: &mut Rng, dim: usize) -> ComplexVector {
    (0..dim).map(|_| rand_scalar(rng)).collect()
}

pub fn rand_unit_vector(rng: &mut Rng, dim: usize) -> ComplexVector {
    loop {
        let v = rand_vector(rng, dim);
        let n = gramq_core::matrix::vec_norm(&v);
        if n > 1e-3 {
            return v.iter().map(|&z| z / n).collect();
        }
    }
}

pub fn rand_frame(rng: &mut Rng, k: usize, d: usize) -> Frame {
    Frame::new(d, (0..k).map(|_| rand_vector(rng, d)).collect()).unwrap()
}

/// Haar-like random unitary from the left factor of an SVD of a random
/// matrix.
pub fn rand_unitary(rng: &mut Rng, n: usize) -> ComplexMatrix {
    loop {
        let m = rand_matrix(rng, n, n);
        if let Ok(dec) = gramq_core::svd(&m) {
            if dec.singulars.last().copied().unwrap_or(0.0) > 1e-6 {
                return dec.left;
            }
        }
    }
}

/// Random special unitary: a unitary with its first column rotated so the
/// determinant becomes exactly real positive, hence 1.
pub fn rand_special_unitary(rng: &mut Rng, n: usize) -> ComplexMatrix {
    let u = rand_unitary(rng, n);
    let det = u.det().unwrap();
    let phase = det / det.norm();
    ComplexMatrix::from_fn(n, n, |i, j| {
        if j == 0 {
            u[(i, 0)] * phase.conj()
        } else {
            u[(i, j)]
        }
    })
}

/// Random density matrix of the given rank: columns of a random `d x r`
/// matrix, symmetrized and trace-normalized.
pub fn rand_density(rng: &mut Rng, d: usize, r: usize) -> ComplexMatrix {
    let m = rand_matrix(rng, d, r);
    let a = m.mul(&m.dagger()).unwrap();
    // Kill rounding asymmetry so the Hermitian check is exact.
    let h = ComplexMatrix::from_fn(d, d, |i, j| (a[(i, j)] + a[(j, i)].conj()) * 0.5);
    let t = h.trace().re;
    h.scale(Scalar::new(1.0 / t, 0.0))
}

/// Random contraction: random matrix scaled just below unit operator norm.
pub fn rand_contraction(rng: &mut Rng, n: usize) -> ComplexMatrix {
    let m = rand_matrix(rng, n, n);
    let top = gramq_core::svd(&m).unwrap().singulars[0].max(1e-12);
    let factor = (0.2 + 0.8 * (uniform(rng) * 0.5 + 0.5)) / top;
    m.scale(Scalar::new(factor, 0.0))
}
