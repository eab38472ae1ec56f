//! Bipartite pure states, their side frames and Gram operators, Schmidt
//! data, separability and local operations.
//!
//! A state in the product of two qudit spaces is stored as its `d1 x d2`
//! coefficient matrix. The rows form the right frame, the columns the left
//! frame, and the Gram matrices of those frames coincide with the reduced
//! density matrices of the state.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;
use rand_core::{RngCore, SeedableRng};

use crate::eig::eigh;
use crate::error::CoreError;
use crate::frames::{align_frames, gram_matrix, Frame};
use crate::matrix::{ComplexMatrix, ComplexVector, Scalar};
use crate::svd::svd;
use crate::tensor::{kron, pair_to_flat};
use crate::DEFAULT_TOL;

/// Which factor of the tensor product an operation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Right,
    Left,
}

/// Pure state of a `d1 x d2` bipartite system, stored by coefficients
/// `c[i][j] = <e_i ⊗ f_j, Ψ>`.
#[derive(Debug, Clone, PartialEq)]
pub struct BipartiteState {
    d1: usize,
    d2: usize,
    coeffs: ComplexMatrix,
}

/// Right, left and full Gram operators of a state.
///
/// Both side operators are Hermitian PSD with trace `||Ψ||²`; the full
/// operator is their Kronecker product, with trace `||Ψ||⁴`.
#[derive(Debug, Clone)]
pub struct GramOperators {
    pub right: ComplexMatrix,
    pub left: ComplexMatrix,
    pub full: ComplexMatrix,
}

/// Schmidt decomposition `Ψ = Σ s_i ē_i ⊗ f̄_i`.
#[derive(Debug, Clone)]
pub struct SchmidtDecomposition {
    /// Non-negative, non-increasing; their squares are the eigenvalues of
    /// the right Gram operator.
    pub coefficients: Vec<f64>,
    /// Orthonormal vectors in the first factor.
    pub left_vectors: Vec<ComplexVector>,
    /// Orthonormal vectors in the second factor.
    pub right_vectors: Vec<ComplexVector>,
    /// Count of coefficients above tolerance.
    pub rank: usize,
}

impl BipartiteState {
    /// Builds a state from its coefficient matrix. The all-zero matrix is
    /// rejected; with `normalize` the coefficients are scaled to unit norm.
    pub fn new(coeffs: ComplexMatrix, normalize: bool) -> Result<Self, CoreError> {
        let norm = coeffs.frobenius_norm();
        if norm == 0.0 {
            return Err(CoreError::ZeroState);
        }
        let coeffs = if normalize {
            coeffs.scale(Scalar::new(1.0 / norm, 0.0))
        } else {
            coeffs
        };
        Ok(Self {
            d1: coeffs.rows(),
            d2: coeffs.cols(),
            coeffs,
        })
    }

    /// Builds a state from the flat coefficient list in the ordering
    /// `alpha = (i - 1) d2 + j`.
    pub fn from_flat(
        d1: usize,
        d2: usize,
        flat: &[Scalar],
        normalize: bool,
    ) -> Result<Self, CoreError> {
        let coeffs = ComplexMatrix::new(d1, d2, flat.to_vec())?;
        Self::new(coeffs, normalize)
    }

    pub fn d1(&self) -> usize {
        self.d1
    }

    pub fn d2(&self) -> usize {
        self.d2
    }

    pub fn coeffs(&self) -> &ComplexMatrix {
        &self.coeffs
    }

    pub fn norm(&self) -> f64 {
        self.coeffs.frobenius_norm()
    }

    fn require_normalized(&self, tol: f64) -> Result<(), CoreError> {
        let norm = self.norm();
        if (norm - 1.0).abs() > tol {
            return Err(CoreError::NotNormalized { norm });
        }
        Ok(())
    }

    /// State with the two factors swapped; the coefficient matrix is
    /// transposed and the roles of the side frames exchange.
    pub fn swap_factors(&self) -> Self {
        Self {
            d1: self.d2,
            d2: self.d1,
            coeffs: self.coeffs.transpose(),
        }
    }

    /// Coefficients as the flat vector of the product space.
    pub fn flat_vector(&self) -> ComplexVector {
        let mut out = Vec::with_capacity(self.d1 * self.d2);
        for i in 0..self.d1 {
            out.extend_from_slice(self.coeffs.row(i));
        }
        out
    }

    /// Right frame: the rows of the coefficient matrix, `d1` vectors in
    /// the second factor. Left frame: the columns, `d2` vectors in the
    /// first factor.
    pub fn side_frame(&self, side: Side) -> Frame {
        let vectors: Vec<ComplexVector> = match side {
            Side::Right => (0..self.d1).map(|i| self.coeffs.row(i).to_vec()).collect(),
            Side::Left => (0..self.d2).map(|j| self.coeffs.col(j)).collect(),
        };
        let dim = match side {
            Side::Right => self.d2,
            Side::Left => self.d1,
        };
        Frame::new(dim, vectors).expect("state coefficients are finite and non-empty")
    }

    /// Gram matrix of the chosen side frame.
    pub fn gram_operator(&self, side: Side) -> ComplexMatrix {
        gram_matrix(&self.side_frame(side)).matrix
    }

    /// Kronecker product of the right and left Gram operators.
    pub fn full_gram(&self) -> ComplexMatrix {
        kron(&self.gram_operator(Side::Right), &self.gram_operator(Side::Left))
    }

    pub fn gram_operators(&self) -> GramOperators {
        let right = self.gram_operator(Side::Right);
        let left = self.gram_operator(Side::Left);
        let full = kron(&right, &left);
        GramOperators { right, left, full }
    }

    /// Reduced density matrix by explicit partial trace of the projector
    /// onto the state; an independent route to the same matrix as
    /// [`Self::gram_operator`].
    ///
    /// Matrix elements follow the Gram-side indexing: entry `(i, j)` is
    /// `<e_j, ρ e_i>`, which is the transpose of the ket-bra layout and
    /// leaves spectrum, trace and entropy untouched.
    pub fn reduced_density(&self, side: Side) -> Result<ComplexMatrix, CoreError> {
        self.require_normalized(1e-10)?;
        let flat = self.flat_vector();
        let n = flat.len();
        // Projector with entries P[(a, b)] = conj(ψ_a) ψ_b.
        let projector = ComplexMatrix::from_fn(n, n, |a, b| flat[a].conj() * flat[b]);
        let (d1, d2) = (self.d1, self.d2);
        let rho = match side {
            Side::Right => ComplexMatrix::from_fn(d1, d1, |i, ip| {
                (0..d2)
                    .map(|j| projector[(i * d2 + j, ip * d2 + j)])
                    .sum()
            }),
            Side::Left => ComplexMatrix::from_fn(d2, d2, |j, jp| {
                (0..d1)
                    .map(|i| projector[(i * d2 + j, i * d2 + jp)])
                    .sum()
            }),
        };
        Ok(rho)
    }

    /// Schmidt decomposition via the SVD of the coefficient matrix.
    ///
    /// Phases are fixed by making the first non-negligible component of
    /// each left vector real positive; the right vector absorbs the
    /// remainder, so outputs are reproducible.
    pub fn schmidt(&self, tol: f64) -> Result<SchmidtDecomposition, CoreError> {
        let dec = svd(&self.coeffs)?;
        let k = dec.singulars.len();
        let mut left_vectors = Vec::with_capacity(k);
        let mut right_vectors = Vec::with_capacity(k);
        for t in 0..k {
            let mut l = dec.left.col(t);
            let mut r: ComplexVector = dec.right.col(t).iter().map(|z| z.conj()).collect();
            if let Some(first) = l.iter().find(|z| z.norm() > 1e-12) {
                let phase = first / first.norm();
                let phase_conj = phase.conj();
                for z in l.iter_mut() {
                    *z *= phase_conj;
                }
                for z in r.iter_mut() {
                    *z *= phase;
                }
            }
            left_vectors.push(l);
            right_vectors.push(r);
        }
        let top = dec.singulars.first().copied().unwrap_or(0.0);
        let rank = dec.singulars.iter().filter(|&&s| s > tol * top).count();
        Ok(SchmidtDecomposition {
            coefficients: dec.singulars,
            left_vectors,
            right_vectors,
            rank,
        })
    }

    /// Schmidt rank at tolerance `tol` (relative to the top coefficient).
    pub fn schmidt_rank(&self, tol: f64) -> Result<usize, CoreError> {
        Ok(self.schmidt(tol)?.rank)
    }

    /// Product-factor witnesses `(𝔠, 𝔡)` when the state is separable.
    ///
    /// For a separable state the right Gram operator factors as `𝔠† 𝔠`
    /// (rank-1) and the left one as `𝔡† 𝔡`.
    pub fn separability_witness(
        &self,
        tol: f64,
    ) -> Result<Option<(ComplexVector, ComplexVector)>, CoreError> {
        let schmidt = self.schmidt(tol)?;
        if schmidt.rank != 1 {
            return Ok(None);
        }
        let s = schmidt.coefficients[0];
        let c: ComplexVector = schmidt.left_vectors[0].iter().map(|&z| z * s).collect();
        let d: ComplexVector = schmidt.right_vectors[0].iter().map(|&z| z * s).collect();
        Ok(Some((c, d)))
    }

    /// True when the Schmidt rank is 1.
    pub fn is_separable(&self, tol: f64) -> Result<bool, CoreError> {
        Ok(self.separability_witness(tol)?.is_some())
    }

    /// Applies the local map `u1 ⊗ u2`; `None` stands for the identity on
    /// that factor. At the coefficient level this is `u1 · c · u2ᵀ`,
    /// which matches the action of `kron(u1, u2)` on the flat vector.
    pub fn apply_local(
        &self,
        u1: Option<&ComplexMatrix>,
        u2: Option<&ComplexMatrix>,
    ) -> Result<Self, CoreError> {
        if let Some(u) = u1 {
            if u.rows() != self.d1 || u.cols() != self.d1 {
                return Err(CoreError::ShapeMismatch {
                    expected: (self.d1, self.d1),
                    found: (u.rows(), u.cols()),
                });
            }
        }
        if let Some(u) = u2 {
            if u.rows() != self.d2 || u.cols() != self.d2 {
                return Err(CoreError::ShapeMismatch {
                    expected: (self.d2, self.d2),
                    found: (u.rows(), u.cols()),
                });
            }
        }
        let mut c = self.coeffs.clone();
        if let Some(u) = u1 {
            c = u.mul(&c)?;
        }
        if let Some(u) = u2 {
            c = c.mul(&u.transpose())?;
        }
        // A general linear map can annihilate the state.
        Self::new(c, false)
    }

    /// Entanglement entropy `-Σ μ ln μ` over the spectrum of the right
    /// Gram operator, in nats.
    pub fn entanglement_entropy(&self) -> Result<f64, CoreError> {
        self.require_normalized(1e-10)?;
        let eig = eigh(&self.gram_operator(Side::Right))?;
        let h: f64 = eig
            .values
            .iter()
            .filter(|&&mu| mu > 1e-15)
            .map(|&mu| -mu * mu.ln())
            .sum();
        // a pure product state gives an empty sum; avoid returning -0.0
        Ok(h + 0.0)
    }
}

/// Local unitary `U` relating two states with equal Gram operators on the
/// chosen side: for `Side::Right`, `(1 ⊗ U) ψ2 ≈ ψ1`; for `Side::Left`,
/// `(U ⊗ 1) ψ2 ≈ ψ1`.
///
/// Uniqueness only holds in the full-rank case; for rank-deficient states
/// the deterministic completion picks one valid unitary.
pub fn state_from_equal_grams(
    psi1: &BipartiteState,
    psi2: &BipartiteState,
    side: Side,
    tol: f64,
) -> Result<ComplexMatrix, CoreError> {
    let f1 = psi2.side_frame(side);
    let f2 = psi1.side_frame(side);
    align_frames(&f1, &f2, tol)
}

/// Deterministic pseudo-random normalized state with i.i.d. standard
/// complex Gaussian coefficients.
pub fn random_state(d1: usize, d2: usize, seed: u64) -> Result<BipartiteState, CoreError> {
    if d1 == 0 || d2 == 0 {
        return Err(CoreError::ShapeMismatch {
            expected: (1, 1),
            found: (d1, d2),
        });
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let entries: Vec<Scalar> = (0..d1 * d2)
        .map(|_| {
            let (x, y) = gaussian_pair(&mut rng);
            Scalar::new(x, y)
        })
        .collect();
    let coeffs = ComplexMatrix::new(d1, d2, entries)?;
    BipartiteState::new(coeffs, true)
}

/// Box-Muller transform over 53-bit uniforms.
fn gaussian_pair(rng: &mut impl RngCore) -> (f64, f64) {
    let u1 = loop {
        let x = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
        if x > 0.0 {
            break x;
        }
    };
    let u2 = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
    let r = (-2.0 * u1.ln()).sqrt();
    let theta = 2.0 * core::f64::consts::PI * u2;
    (r * theta.cos(), r * theta.sin())
}

/// Flat index of `e_i ⊗ f_j` (1-based), re-exported here for callers
/// assembling product states by hand.
pub fn product_index(i: usize, j: usize, d1: usize, d2: usize) -> Result<usize, CoreError> {
    pair_to_flat(i, j, d1, d2)
}

/// Convenience: the maximally entangled state `(1/√d) Σ e_i ⊗ f_i` in
/// `d x d`.
pub fn maximally_entangled(d: usize) -> BipartiteState {
    let inv = 1.0 / (d as f64).sqrt();
    let coeffs = ComplexMatrix::from_fn(d, d, |i, j| {
        Scalar::new(if i == j { inv } else { 0.0 }, 0.0)
    });
    BipartiteState::new(coeffs, false).expect("nonzero by construction")
}

/// Default Schmidt-rank tolerance, shared with the geometry module.
pub fn default_rank_tol() -> f64 {
    DEFAULT_TOL
}
