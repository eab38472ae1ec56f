//! Analysis report assembly and deterministic formatting.

use gramq_core::geometry::{geometry_report, gvol};
use gramq_core::{BipartiteState, ComplexMatrix, Side};
use serde::Serialize;

use crate::CliError;

#[derive(Debug, Serialize)]
pub struct Report {
    pub d1: usize,
    pub d2: usize,
    pub norm: f64,
    pub schmidt_coefficients: Vec<f64>,
    pub schmidt_rank: usize,
    pub entropy_nats: f64,
    pub entropy_bits: f64,
    pub gvol: f64,
    pub separable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_left: Option<Vec<[f64; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_right: Option<Vec<[f64; 2]>>,
    pub max_entangled: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gram_right: Option<Vec<Vec<[f64; 2]>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gram_left: Option<Vec<Vec<[f64; 2]>>>,
}

fn matrix_rows(m: &ComplexMatrix) -> Vec<Vec<[f64; 2]>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|z| [z.re, z.im]).collect())
        .collect()
}

/// Builds the full report for a normalized state. `original_norm` is the
/// norm of the raw input before any normalization.
pub fn build_report(
    state: &BipartiteState,
    original_norm: f64,
    tol: f64,
    emit_gram: bool,
) -> Result<Report, CliError> {
    let geo = geometry_report(state, tol).map_err(CliError::math)?;
    let schmidt = state.schmidt(tol).map_err(CliError::math)?;
    let witness = state.separability_witness(tol).map_err(CliError::math)?;
    let g = gvol(state, tol).map_err(CliError::math)?;
    let (witness_left, witness_right) = match witness {
        Some((c, d)) => (
            Some(c.iter().map(|z| [z.re, z.im]).collect()),
            Some(d.iter().map(|z| [z.re, z.im]).collect()),
        ),
        None => (None, None),
    };
    let separable = witness_left.is_some();
    Ok(Report {
        d1: state.d1(),
        d2: state.d2(),
        norm: original_norm,
        schmidt_coefficients: schmidt.coefficients,
        schmidt_rank: schmidt.rank,
        entropy_nats: geo.entropy,
        entropy_bits: geo.entropy / core::f64::consts::LN_2,
        gvol: g,
        separable,
        witness_left,
        witness_right,
        max_entangled: geo.max_entangled,
        gram_right: emit_gram.then(|| matrix_rows(&state.gram_operator(Side::Right))),
        gram_left: emit_gram.then(|| matrix_rows(&state.gram_operator(Side::Left))),
    })
}

/// Fixed-precision scientific notation with `precision` significant
/// digits; reproducible across runs and platforms.
pub fn fmt_real(x: f64, precision: usize) -> String {
    if x == 0.0 {
        return "0".into();
    }
    format!("{:.*e}", precision.saturating_sub(1), x)
}

pub fn fmt_complex(re: f64, im: f64, precision: usize) -> String {
    format!("({}, {})", fmt_real(re, precision), fmt_real(im, precision))
}

fn fmt_matrix(rows: &[Vec<[f64; 2]>], precision: usize, indent: &str) -> String {
    rows.iter()
        .map(|row| {
            let cells: Vec<String> = row
                .iter()
                .map(|p| fmt_complex(p[0], p[1], precision))
                .collect();
            format!("{indent}{}", cells.join(" "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

impl Report {
    pub fn to_text(&self, precision: usize) -> String {
        let mut lines = Vec::new();
        lines.push(format!("state: {} x {}", self.d1, self.d2));
        lines.push(format!("norm: {}", fmt_real(self.norm, precision)));
        let coeffs: Vec<String> = self
            .schmidt_coefficients
            .iter()
            .map(|&s| fmt_real(s, precision))
            .collect();
        lines.push(format!("schmidt coefficients: {}", coeffs.join(" ")));
        lines.push(format!("schmidt rank: {}", self.schmidt_rank));
        lines.push(format!(
            "entropy (nats): {}",
            fmt_real(self.entropy_nats, precision)
        ));
        lines.push(format!(
            "entropy (bits): {}",
            fmt_real(self.entropy_bits, precision)
        ));
        lines.push(format!("gvol: {}", fmt_real(self.gvol, precision)));
        lines.push(format!("separable: {}", self.separable));
        if let (Some(wl), Some(wr)) = (&self.witness_left, &self.witness_right) {
            let left: Vec<String> = wl
                .iter()
                .map(|p| fmt_complex(p[0], p[1], precision))
                .collect();
            let right: Vec<String> = wr
                .iter()
                .map(|p| fmt_complex(p[0], p[1], precision))
                .collect();
            lines.push(format!("witness first factor: {}", left.join(" ")));
            lines.push(format!("witness second factor: {}", right.join(" ")));
        }
        lines.push(format!("max entangled: {}", self.max_entangled));
        if let Some(g) = &self.gram_right {
            lines.push("gram right:".into());
            lines.push(fmt_matrix(g, precision, "  "));
        }
        if let Some(g) = &self.gram_left {
            lines.push("gram left:".into());
            lines.push(fmt_matrix(g, precision, "  "));
        }
        lines.join("\n") + "\n"
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }
}
