//! Dense complex linear algebra and Gram-matrix entanglement analysis for
//! bipartite qudit pure states.
//!
//! The crate is organised around the coefficient matrix of a bipartite pure
//! state. Its row and column frames carry Gram matrices that coincide with
//! the reduced density matrices of the state, which makes Schmidt data,
//! separability, entanglement entropy and the gramian-volume invariant all
//! computable from one object. A zero-extended Cholesky factorization turns
//! any density matrix back into a pure state on the doubled space.
//!
//! Everything is `no_std` + `alloc`; all operations are pure functions over
//! immutable values.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bipartite;
pub mod cholesky;
pub mod error;
pub mod frames;
pub mod geometry;
pub mod matrix;
pub mod svd;
pub mod tensor;

mod eig;

pub use bipartite::{BipartiteState, GramOperators, SchmidtDecomposition, Side};
pub use cholesky::{DensityMatrix, LowerTriangular, PurificationResult};
pub use eig::{eigh, psd_rank, EigResult};
pub use error::CoreError;
pub use frames::{Frame, GramMatrix, RelativeGram};
pub use geometry::GeometryReport;
pub use matrix::{ComplexMatrix, ComplexVector, Scalar};
pub use svd::{svd, SvdResult};

/// Default relative tolerance for rank decisions and PSD checks.
pub const DEFAULT_TOL: f64 = 1e-10;
