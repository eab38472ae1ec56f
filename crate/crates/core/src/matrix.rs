//! Dense complex matrices and vectors.
//!
//! Storage is row-major. Indexing through `Index<(usize, usize)>` is 0-based;
//! the 1-based index maps that mirror textbook formulas live in
//! [`crate::tensor`].

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::CoreError;

/// Double-precision complex scalar used throughout the crate.
pub type Scalar = Complex64;

/// Column vector over [`Scalar`].
pub type ComplexVector = Vec<Scalar>;

/// Inner product of two vectors, conjugate-linear in the first argument.
///
/// This convention is fixed once here and every Gram-type construction in
/// the crate follows it.
pub fn inner(a: &[Scalar], b: &[Scalar]) -> Scalar {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Euclidean norm of a vector.
pub fn vec_norm(a: &[Scalar]) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

/// Dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl ComplexMatrix {
    /// Builds a matrix from row-major entries, rejecting NaN/Inf.
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self, CoreError> {
        if entries.len() != rows * cols {
            return Err(CoreError::ShapeMismatch {
                expected: (rows, cols),
                found: (entries.len(), 1),
            });
        }
        if entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(CoreError::NonFinite);
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Scalar::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    /// Builds a matrix from real row-major entries.
    pub fn from_real(rows: usize, cols: usize, entries: &[f64]) -> Result<Self, CoreError> {
        Self::new(
            rows,
            cols,
            entries.iter().map(|&x| Scalar::new(x, 0.0)).collect(),
        )
    }

    pub fn diag(values: &[Scalar]) -> Self {
        let n = values.len();
        let mut m = Self::zeros(n, n);
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> ComplexVector {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn conj(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|z| z.conj()).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn add(&self, other: &Self) -> Result<Self, CoreError> {
        self.check_same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, CoreError> {
        self.check_same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, s: Scalar) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|z| z * s).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, CoreError> {
        if self.cols != other.rows {
            return Err(CoreError::ShapeMismatch {
                expected: (self.cols, other.rows),
                found: (other.rows, other.cols),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == Scalar::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Scalar]) -> Result<ComplexVector, CoreError> {
        if self.cols != v.len() {
            return Err(CoreError::ShapeMismatch {
                expected: (self.cols, 1),
                found: (v.len(), 1),
            });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, x)| a * x).sum())
            .collect())
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        if !self.is_square() {
            return false;
        }
        let scale = self.frobenius_norm().max(1.0);
        let mut diff2 = 0.0;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let d = self[(i, j)] - self[(j, i)].conj();
                diff2 += d.norm_sqr();
            }
        }
        diff2.sqrt() <= tol * scale
    }

    /// Determinant via LU factorization with partial pivoting.
    pub fn det(&self) -> Result<Scalar, CoreError> {
        if !self.is_square() {
            return Err(CoreError::ShapeMismatch {
                expected: (self.rows, self.rows),
                found: (self.rows, self.cols),
            });
        }
        let n = self.rows;
        let mut lu = self.clone();
        let mut det = Scalar::new(1.0, 0.0);
        for k in 0..n {
            let (pivot_row, pivot_mag) = (k..n)
                .map(|i| (i, lu[(i, k)].norm()))
                .max_by(|a, b| a.1.total_cmp(&b.1))
                .unwrap();
            if pivot_mag == 0.0 {
                return Ok(Scalar::new(0.0, 0.0));
            }
            if pivot_row != k {
                for j in 0..n {
                    let tmp = lu[(k, j)];
                    lu[(k, j)] = lu[(pivot_row, j)];
                    lu[(pivot_row, j)] = tmp;
                }
                det = -det;
            }
            let pivot = lu[(k, k)];
            det *= pivot;
            for i in k + 1..n {
                let factor = lu[(i, k)] / pivot;
                lu[(i, k)] = factor;
                for j in k + 1..n {
                    let sub = factor * lu[(k, j)];
                    lu[(i, j)] -= sub;
                }
            }
        }
        Ok(det)
    }

    /// Inverse via Gauss-Jordan elimination with partial pivoting.
    pub fn inverse(&self) -> Result<Self, CoreError> {
        if !self.is_square() {
            return Err(CoreError::ShapeMismatch {
                expected: (self.rows, self.rows),
                found: (self.rows, self.cols),
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for k in 0..n {
            let (pivot_row, pivot_mag) = (k..n)
                .map(|i| (i, a[(i, k)].norm()))
                .max_by(|x, y| x.1.total_cmp(&y.1))
                .unwrap();
            if pivot_mag == 0.0 {
                return Err(CoreError::NotPositiveDefinite);
            }
            if pivot_row != k {
                for j in 0..n {
                    let t = a[(k, j)];
                    a[(k, j)] = a[(pivot_row, j)];
                    a[(pivot_row, j)] = t;
                    let t = inv[(k, j)];
                    inv[(k, j)] = inv[(pivot_row, j)];
                    inv[(pivot_row, j)] = t;
                }
            }
            let pivot = a[(k, k)];
            for j in 0..n {
                a[(k, j)] /= pivot;
                inv[(k, j)] /= pivot;
            }
            for i in 0..n {
                if i == k {
                    continue;
                }
                let factor = a[(i, k)];
                if factor == Scalar::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    let s = factor * a[(k, j)];
                    a[(i, j)] -= s;
                    let s = factor * inv[(k, j)];
                    inv[(i, j)] -= s;
                }
            }
        }
        Ok(inv)
    }

    fn check_same_shape(&self, other: &Self) -> Result<(), CoreError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(CoreError::ShapeMismatch {
                expected: (self.rows, self.cols),
                found: (other.rows, other.cols),
            });
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Scalar;

    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.entries[i * self.cols + j]
    }
}
