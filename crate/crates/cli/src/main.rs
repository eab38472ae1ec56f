//! Command-line frontend for Gram-matrix entanglement analysis.

mod files;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gramq_core::frames::align_frames;
use gramq_core::matrix::vec_norm;
use gramq_core::bipartite::random_state;
use gramq_core::{cholesky, CoreError, Side, DEFAULT_TOL};

use files::{read_density, read_state, write_state, StateFile};
use report::{build_report, fmt_complex, fmt_real};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Unusable input: malformed file, bad dimensions, invalid matrix.
    #[error("{0}")]
    Input(String),
    /// A mathematical precondition failed on otherwise well-formed input.
    #[error("{0}")]
    Math(String),
}

impl CliError {
    fn math(e: CoreError) -> Self {
        CliError::Math(e.to_string())
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Math(_) => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SideArg {
    Right,
    Left,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Right => Side::Right,
            SideArg::Left => Side::Left,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "gramq",
    version,
    about = "Gram-matrix analysis of bipartite pure-state entanglement"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a state file: Schmidt data, entropy, gramian volume.
    Analyze {
        /// State file (JSON with d1, d2, coeffs).
        state: PathBuf,
        /// Rank tolerance for Schmidt coefficients.
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Significant digits in text output.
        #[arg(long, default_value_t = 12)]
        precision: usize,
        /// Include both side Gram operators in the report.
        #[arg(long)]
        emit_gram: bool,
        /// Emit the report as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Purify a density matrix into a bipartite pure state.
    Purify {
        /// Density matrix file (JSON with d, matrix).
        density: PathBuf,
        /// Which side Gram operator reproduces the input.
        #[arg(long, value_enum, default_value_t = SideArg::Right)]
        side: SideArg,
        /// Where to write the purified state; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Validation tolerance for the density matrix.
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Generate a seeded Gaussian random state.
    Random {
        d1: usize,
        d2: usize,
        seed: u64,
        /// Where to write the state; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Find the unitary relating two states with equal Gram matrices.
    Align {
        /// First state file.
        a: PathBuf,
        /// Second state file.
        b: PathBuf,
        /// Which side frames to align.
        #[arg(long, value_enum, default_value_t = SideArg::Right)]
        side: SideArg,
        /// Gram comparison and pivot tolerance.
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Significant digits in the printed unitary.
        #[arg(long, default_value_t = 12)]
        precision: usize,
    },
}

fn emit_state(state: &gramq_core::BipartiteState, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => write_state(path, state),
        None => {
            let file = StateFile::from_state(state);
            let text = serde_json::to_string_pretty(&file)
                .map_err(|e| CliError::Input(format!("serialization: {e}")))?;
            println!("{text}");
            Ok(())
        }
    }
}

fn run_analyze(
    path: &PathBuf,
    tol: f64,
    precision: usize,
    emit_gram: bool,
    json: bool,
) -> Result<(), CliError> {
    if precision == 0 || precision > 17 {
        return Err(CliError::Input(format!(
            "precision must be between 1 and 17, found {precision}"
        )));
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(CliError::Input(format!(
            "tol must be a positive finite number, found {tol}"
        )));
    }
    let raw = read_state(path, false)?;
    let original_norm = raw.norm();
    if (original_norm - 1.0).abs() > DEFAULT_TOL {
        eprintln!("warning: input norm is {original_norm:.6e}, normalizing before analysis");
    }
    let state = read_state(path, true)?;
    let rep = build_report(&state, original_norm, tol, emit_gram)?;
    if json {
        print!("{}", rep.to_json());
    } else {
        print!("{}", rep.to_text(precision));
    }
    Ok(())
}

fn run_purify(
    path: &PathBuf,
    side: Side,
    out: Option<&PathBuf>,
    tol: f64,
) -> Result<(), CliError> {
    let rho = read_density(path, tol)?;
    let result = cholesky::purify(&rho, side).map_err(CliError::math)?;
    let gram = result.state.gram_operator(side);
    let residual = gram
        .sub(rho.matrix())
        .map_err(CliError::math)?
        .frobenius_norm();
    let d = rho.dim();
    eprintln!(
        "purified rank {} density into a {d} x {d} state; round-trip residual {residual:.3e}",
        result.rank
    );
    emit_state(&result.state, out)
}

fn run_random(d1: usize, d2: usize, seed: u64, out: Option<&PathBuf>) -> Result<(), CliError> {
    let state = random_state(d1, d2, seed).map_err(|e| CliError::Input(e.to_string()))?;
    emit_state(&state, out)
}

fn run_align(
    a: &PathBuf,
    b: &PathBuf,
    side: Side,
    tol: f64,
    precision: usize,
) -> Result<(), CliError> {
    let psi1 = read_state(a, true)?;
    let psi2 = read_state(b, true)?;
    let f1 = psi1.side_frame(side);
    let f2 = psi2.side_frame(side);
    let u = align_frames(&f1, &f2, tol).map_err(CliError::math)?;
    let mut max_residual = 0.0f64;
    for i in 0..f1.len() {
        let mapped = u.mul_vec(f1.vector(i)).map_err(CliError::math)?;
        let diff: Vec<_> = mapped
            .iter()
            .zip(f2.vector(i))
            .map(|(x, y)| x - y)
            .collect();
        max_residual = max_residual.max(vec_norm(&diff));
    }
    println!("unitary:");
    for i in 0..u.rows() {
        let cells: Vec<String> = u
            .row(i)
            .iter()
            .map(|z| fmt_complex(z.re, z.im, precision))
            .collect();
        println!("  {}", cells.join(" "));
    }
    println!("max residual: {}", fmt_real(max_residual, precision));
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze {
            state,
            tol,
            precision,
            emit_gram,
            json,
        } => run_analyze(&state, tol, precision, emit_gram, json),
        Command::Purify {
            density,
            side,
            out,
            tol,
        } => run_purify(&density, side.into(), out.as_ref(), tol),
        Command::Random { d1, d2, seed, out } => run_random(d1, d2, seed, out.as_ref()),
        Command::Align {
            a,
            b,
            side,
            tol,
            precision,
        } => run_align(&a, &b, side.into(), tol, precision),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
