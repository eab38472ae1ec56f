//! On-disk JSON formats for states and density matrices.
//!
//! Complex numbers are stored as `[re, im]` pairs. State coefficients are
//! flat in the order `alpha = (i - 1) * d2 + j`; density matrices are
//! row-major.

use gramq_core::{BipartiteState, ComplexMatrix, DensityMatrix, Scalar};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StateFile {
    pub d1: usize,
    pub d2: usize,
    pub coeffs: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DensityFile {
    pub d: usize,
    pub matrix: Vec<[f64; 2]>,
}

impl StateFile {
    pub fn from_state(state: &BipartiteState) -> Self {
        Self {
            d1: state.d1(),
            d2: state.d2(),
            coeffs: state
                .flat_vector()
                .iter()
                .map(|z| [z.re, z.im])
                .collect(),
        }
    }

    pub fn to_state(&self, normalize: bool) -> Result<BipartiteState, CliError> {
        if self.d1 == 0 || self.d2 == 0 {
            return Err(CliError::Input(format!(
                "dimensions must be positive, found d1 = {}, d2 = {}",
                self.d1, self.d2
            )));
        }
        let expected = self.d1 * self.d2;
        if self.coeffs.len() != expected {
            return Err(CliError::Input(format!(
                "coeffs: expected d1*d2 = {} entries, found {}",
                expected,
                self.coeffs.len()
            )));
        }
        for (idx, pair) in self.coeffs.iter().enumerate() {
            if !pair[0].is_finite() || !pair[1].is_finite() {
                return Err(CliError::Input(format!(
                    "coeffs[{idx}]: entries must be finite"
                )));
            }
        }
        let flat: Vec<Scalar> = self
            .coeffs
            .iter()
            .map(|p| Scalar::new(p[0], p[1]))
            .collect();
        BipartiteState::from_flat(self.d1, self.d2, &flat, normalize)
            .map_err(|e| CliError::Input(format!("coeffs: {e}")))
    }
}

impl DensityFile {
    pub fn to_density(&self, tol: f64) -> Result<DensityMatrix, CliError> {
        if self.d == 0 {
            return Err(CliError::Input("d: dimension must be positive".into()));
        }
        let expected = self.d * self.d;
        if self.matrix.len() != expected {
            return Err(CliError::Input(format!(
                "matrix: expected d*d = {} entries, found {}",
                expected,
                self.matrix.len()
            )));
        }
        for (idx, pair) in self.matrix.iter().enumerate() {
            if !pair[0].is_finite() || !pair[1].is_finite() {
                return Err(CliError::Input(format!(
                    "matrix[{idx}]: entries must be finite"
                )));
            }
        }
        let entries: Vec<Scalar> = self
            .matrix
            .iter()
            .map(|p| Scalar::new(p[0], p[1]))
            .collect();
        let m = ComplexMatrix::new(self.d, self.d, entries)
            .map_err(|e| CliError::Input(format!("matrix: {e}")))?;
        DensityMatrix::new(m, tol).map_err(|e| CliError::Input(format!("matrix: {e}")))
    }
}

pub fn read_state(path: &std::path::Path, normalize: bool) -> Result<BipartiteState, CliError> {
    let raw = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let file: StateFile = serde_json::from_str(&raw)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    file.to_state(normalize)
}

pub fn read_density(path: &std::path::Path, tol: f64) -> Result<DensityMatrix, CliError> {
    let raw = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let file: DensityFile = serde_json::from_str(&raw)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    file.to_density(tol)
}

pub fn write_state(path: &std::path::Path, state: &BipartiteState) -> Result<(), CliError> {
    let file = StateFile::from_state(state);
    let mut out = serde_json::to_string_pretty(&file)
        .map_err(|e| CliError::Input(format!("serialization: {e}")))?;
    out.push('\n');
    std::fs::write(path, out).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}
