//! Command line front end for the polyeq engine.
//!
//! Three subcommands cover the workflow:
//!
//! - `smith` prints a Smith normal form `U·A·W = S` of one matrix;
//! - `decide` answers an equivalence question for a pair of inputs and, on
//!   a positive answer, prints the witness;
//! - `verify` replays a stored witness against the pair it claims to relate.
//!
//! Exit codes: 0 positive answer, 1 negative answer or rejected witness,
//! 2 unreadable or malformed input, 3 unsupported instance, 4 inconclusive
//! search, 5 singular input matrix, 70 internal failure.
//!
//! With `--json` the machine-readable payload goes to stdout and the human
//! report moves to stderr, so pipelines can consume one without the other.
//! The `witness` object inside a `decide --json` payload is itself a valid
//! witness file for `verify`.

mod format;

use clap::{Parser, Subcommand, ValueEnum};
use format::{
    family_from_file, poly_to_strings, polymat_from_file, polymat_to_file, read_matrix_file,
    witness_from_file, witness_to_file, FormatError, MatrixFile,
};
use polyeq::{
    decide_family_similarity_with, decide_ps_with, decide_semiscalar_with, smith_decompose,
    verify_witness, verify_witness_ps, DecideOptions, DecisionOutcome, EngineError, PolyMat,
    DEFAULT_MAX_GRID_VARS,
};
use serde::Serialize;
use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_NEGATIVE: u8 = 1;
const EXIT_BAD_INPUT: u8 = 2;
const EXIT_UNSUPPORTED: u8 = 3;
const EXIT_INCONCLUSIVE: u8 = 4;
const EXIT_SINGULAR: u8 = 5;
const EXIT_INTERNAL: u8 = 70;

#[derive(Parser)]
#[command(
    name = "polyeq",
    version,
    about = "Exact equivalence decisions for polynomial matrices over the rationals"
)]
struct Cli {
    /// Emit a JSON payload on stdout; the human report moves to stderr.
    #[arg(long, global = true)]
    json: bool,

    /// Kernel dimensions up to this bound are searched exhaustively;
    /// larger kernels fall back to seeded random sampling.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_GRID_VARS)]
    max_grid_vars: usize,

    /// Keep the candidate V unscaled instead of normalizing its first
    /// nonzero entry to 1.
    #[arg(long, global = true)]
    no_normalize: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Smith normal form U·A·W = S of one polynomial matrix.
    Smith { matrix: PathBuf },
    /// Decide equivalence of two polynomial matrices or two families.
    Decide {
        #[arg(value_enum)]
        mode: Mode,
        left: PathBuf,
        right: PathBuf,
    },
    /// Check a stored witness against the pair it claims to relate.
    Verify {
        left: PathBuf,
        right: PathBuf,
        witness: PathBuf,
        /// Check the mirrored orientation A = Q·B·P.
        #[arg(long)]
        ps: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// A = P·B·Q with P constant nonsingular and Q unimodular
    Semiscalar,
    /// A = Q·B·P, the mirrored orientation
    Ps,
    /// simultaneous similarity of two matrix families
    Similar,
}

impl Mode {
    fn name(self) -> &'static str {
        match self {
            Mode::Semiscalar => "semiscalar",
            Mode::Ps => "ps",
            Mode::Similar => "similar",
        }
    }
}

/// A run that cannot produce an answer; carries the exit code to use.
struct Failure {
    code: u8,
    message: String,
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure {
            code: EXIT_BAD_INPUT,
            message: e.to_string(),
        }
    }
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Self {
        let code = match e {
            EngineError::NotSquare { .. }
            | EngineError::ShapeMismatch { .. }
            | EngineError::FamilyShape
            | EngineError::FamilyMismatch => EXIT_BAD_INPUT,
            EngineError::SingularInput { .. } => EXIT_SINGULAR,
            EngineError::InexactDivision
            | EngineError::SingularCandidate
            | EngineError::InvalidCandidate
            | EngineError::Verification => EXIT_INTERNAL,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Routes the human report to stdout, or to stderr under `--json` where
/// stdout is reserved for the payload.
struct Reporter {
    json: bool,
}

impl Reporter {
    fn line(&self, text: &str) {
        if self.json {
            eprintln!("{text}");
        } else {
            println!("{text}");
        }
    }

    /// Labelled matrix block; the Display impls end with a newline already.
    fn block(&self, label: &str, body: &dyn fmt::Display) {
        if self.json {
            eprint!("{label} =\n{body}");
        } else {
            print!("{label} =\n{body}");
        }
    }

    fn payload(&self, value: &impl Serialize) -> Result<(), Failure> {
        if self.json {
            let text = serde_json::to_string_pretty(value).map_err(|e| Failure {
                code: EXIT_INTERNAL,
                message: e.to_string(),
            })?;
            println!("{text}");
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct SmithReport {
    command: &'static str,
    invariant_factors: Vec<Vec<String>>,
    s: MatrixFile,
    u: MatrixFile,
    w: MatrixFile,
}

#[derive(Serialize)]
struct DecideReport {
    command: &'static str,
    mode: &'static str,
    outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    nullity: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<MatrixFile>,
}

#[derive(Serialize)]
struct VerifyReport {
    command: &'static str,
    orientation: &'static str,
    valid: bool,
}

fn load_polymat(path: &Path) -> Result<PolyMat, Failure> {
    Ok(polymat_from_file(&read_matrix_file(path)?, path)?)
}

fn run_smith(path: &Path, out: &Reporter) -> Result<u8, Failure> {
    let a = load_polymat(path)?;
    let dec = smith_decompose(&a);
    let diag: Vec<String> = (0..a.rows().min(a.cols()))
        .map(|i| dec.s.at(i, i).to_string())
        .collect();
    out.line(&format!("S = diag({})", diag.join(", ")));
    out.block("U", &dec.u);
    out.block("W", &dec.w);
    out.payload(&SmithReport {
        command: "smith",
        invariant_factors: dec.invariant_factors.iter().map(poly_to_strings).collect(),
        s: polymat_to_file(&dec.s),
        u: polymat_to_file(&dec.u),
        w: polymat_to_file(&dec.w),
    })?;
    Ok(EXIT_OK)
}

fn run_decide(
    mode: Mode,
    left: &Path,
    right: &Path,
    opts: &DecideOptions,
    out: &Reporter,
) -> Result<u8, Failure> {
    let outcome = if mode == Mode::Similar {
        let a = family_from_file(&read_matrix_file(left)?, left)?;
        let b = family_from_file(&read_matrix_file(right)?, right)?;
        decide_family_similarity_with(&a, &b, opts)?
    } else {
        let a = load_polymat(left)?;
        let b = load_polymat(right)?;
        match mode {
            Mode::Semiscalar => decide_semiscalar_with(&a, &b, opts)?,
            Mode::Ps => decide_ps_with(&a, &b, opts)?,
            Mode::Similar => unreachable!(),
        }
    };

    let (positive, negative) = if mode == Mode::Similar {
        ("similar", "not similar")
    } else {
        ("equivalent", "not equivalent")
    };
    let mut report = DecideReport {
        command: "decide",
        mode: mode.name(),
        outcome: "",
        rank: None,
        nullity: None,
        reason: None,
        witness: None,
    };
    let code = match outcome {
        DecisionOutcome::Equivalent(w) => {
            out.line(positive);
            out.block("V", &w.v);
            out.block("P", &w.p);
            if mode != Mode::Similar {
                out.block("Q", &w.q);
            }
            report.outcome = "equivalent";
            report.witness = Some(witness_to_file(&w));
            EXIT_OK
        }
        DecisionOutcome::NotEquivalent => {
            out.line(&format!("{negative}: the invariant factors differ"));
            report.outcome = "not-equivalent";
            EXIT_NEGATIVE
        }
        DecisionOutcome::NoWitness { rank, nullity } => {
            out.line(&format!(
                "{negative}: no nonsingular transform exists (system rank {rank}, nullity {nullity})"
            ));
            report.outcome = "no-witness";
            report.rank = Some(rank);
            report.nullity = Some(nullity);
            EXIT_NEGATIVE
        }
        DecisionOutcome::Unsupported { reason } => {
            out.line(&format!("unsupported: {reason}"));
            report.outcome = "unsupported";
            report.reason = Some(reason);
            EXIT_UNSUPPORTED
        }
        DecisionOutcome::Inconclusive { reason } => {
            out.line(&format!("inconclusive: {reason}"));
            report.outcome = "inconclusive";
            report.reason = Some(reason);
            EXIT_INCONCLUSIVE
        }
    };
    out.payload(&report)?;
    Ok(code)
}

fn run_verify(
    left: &Path,
    right: &Path,
    witness: &Path,
    ps: bool,
    out: &Reporter,
) -> Result<u8, Failure> {
    let a = load_polymat(left)?;
    let b = load_polymat(right)?;
    let w = witness_from_file(&read_matrix_file(witness)?, witness)?;
    let (valid, relation) = if ps {
        (verify_witness_ps(&a, &b, &w), "A·V = Q·B, V·P = I")
    } else {
        (verify_witness(&a, &b, &w), "V·A = B·Q, P·V = I")
    };
    if valid {
        out.line(&format!("witness accepted: {relation}, Q unimodular"));
    } else {
        out.line("witness rejected");
    }
    out.payload(&VerifyReport {
        command: "verify",
        orientation: if ps { "ps" } else { "semiscalar" },
        valid,
    })?;
    Ok(if valid { EXIT_OK } else { EXIT_NEGATIVE })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = Reporter { json: cli.json };
    let opts = DecideOptions {
        max_grid_vars: cli.max_grid_vars,
        normalize: !cli.no_normalize,
    };
    let result = match &cli.command {
        Command::Smith { matrix } => run_smith(matrix, &out),
        Command::Decide { mode, left, right } => run_decide(*mode, left, right, &opts, &out),
        Command::Verify {
            left,
            right,
            witness,
            ps,
        } => run_verify(left, right, witness, *ps, &out),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
