//! Batch front end: spec files in, verdict reports out, plus direct access
//! to the raw computations.
//!
//! Exit codes: 0 on success, 1 on any input error (bad flags, unreadable or
//! invalid files, arithmetic preconditions), 2 when an internal invariant
//! is violated.

mod report;
mod specfile;

use std::ffi::OsString;
use std::fmt::Display;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use crate::catalog;
use crate::charclass::{self, SurfaceRRData};
use crate::obstruction::ObstructionError;
use crate::steenrod::{self, Sq2Spec};

pub use report::{
    candidate_computation, run_reports, Computation, Entry, EntryError, ReportDocument, Tool, TOOL_NAME, TOOL_VERSION,
};
pub use specfile::{parse_spec_file, Format, NamedSpec, Options, SpecFile, SpecFileError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "diagonal",
    version,
    about = "Diagonal property verdicts and the computations behind them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate every variety in a spec file.
    Verdict {
        file: String,
        #[arg(long, conflicts_with = "text")]
        json: bool,
        #[arg(long)]
        text: bool,
        /// Write timing metadata to this file, outside the canonical report.
        #[arg(long, value_name = "FILE")]
        metadata: Option<String>,
    },
    /// Euler characteristics by Riemann-Roch.
    #[command(subcommand)]
    Chi(ChiCommand),
    /// Arithmetic in a catalog ring.
    #[command(subcommand)]
    Ring(RingCommand),
    /// Sq^2 on the mod-2 cohomology of Q_{2m-1}.
    Sq2 { m: u32, elem: String },
    /// Candidate cohomologically trivial twists for each supported variety.
    Candidates { file: String },
}

#[derive(Debug, Subcommand)]
enum ChiCommand {
    /// chi of a bundle on Q_3 from rank and the d-coordinates of its Chern classes.
    Q3(Q3Args),
    /// chi of a line bundle on a surface.
    Surface(SurfaceArgs),
}

#[derive(Debug, Args)]
struct Q3Args {
    #[arg(long, allow_hyphen_values = true)]
    rank: BigInt,
    #[arg(long, allow_hyphen_values = true)]
    d1: BigInt,
    #[arg(long, allow_hyphen_values = true)]
    d2: BigInt,
    #[arg(long, allow_hyphen_values = true)]
    d3: BigInt,
}

#[derive(Debug, Args)]
struct SurfaceArgs {
    /// chi of the structure sheaf.
    #[arg(long, allow_hyphen_values = true)]
    chi0: BigInt,
    /// D^2
    #[arg(long, allow_hyphen_values = true)]
    dsq: BigInt,
    /// D.K
    #[arg(long, allow_hyphen_values = true)]
    ddotk: BigInt,
}

#[derive(Debug, Subcommand)]
enum RingCommand {
    /// Multiply two elements, e.g. `ring mul q5 x y`.
    Mul { ring_id: String, a: String, b: String },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(e: impl Display) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: e.to_string(),
        }
    }
}

impl From<ObstructionError> for Failure {
    fn from(e: ObstructionError) -> Self {
        Failure {
            code: if e.is_internal() { EXIT_INTERNAL } else { EXIT_INPUT },
            message: e.to_string(),
        }
    }
}

fn read_spec(path: &str) -> Result<SpecFile, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{path}: {e}")))?;
    parse_spec_file(&text).map_err(|e| Failure::input(format!("{path}: {e}")))
}

fn run(cmd: Command, out: &mut dyn Write) -> Result<(), Failure> {
    let mut emit = |s: &str| out.write_all(s.as_bytes()).map_err(Failure::input);
    match cmd {
        Command::Verdict {
            file,
            json,
            text,
            metadata,
        } => {
            let started = Instant::now();
            let spec = read_spec(&file)?;
            let format = if json {
                Format::Json
            } else if text {
                Format::Text
            } else {
                spec.options.format.unwrap_or(Format::Json)
            };
            let doc = run_reports(&spec)?;
            match format {
                Format::Json => emit(&doc.to_canonical_json())?,
                Format::Text => emit(&doc.to_text())?,
            }
            if let Some(path) = metadata {
                let meta = serde_json::json!({
                    "input": file,
                    "entries": doc.entries.len(),
                    "elapsed_micros": started.elapsed().as_micros() as u64,
                });
                std::fs::write(&path, format!("{meta:#}\n")).map_err(|e| Failure::input(format!("{path}: {e}")))?;
            }
        }
        Command::Chi(ChiCommand::Q3(a)) => {
            let chi = charclass::hrr_q3_closed_form(&a.rank, &a.d1, &a.d2, &a.d3);
            emit(&format!("{chi}\n"))?;
        }
        Command::Chi(ChiCommand::Surface(a)) => {
            let data = SurfaceRRData {
                chi_structure_sheaf: a.chi0,
            };
            let chi = charclass::euler_char_surface(&data, &a.dsq, &a.ddotk).map_err(Failure::input)?;
            emit(&format!("{chi}\n"))?;
        }
        Command::Ring(RingCommand::Mul { ring_id, a, b }) => {
            let ring = catalog::ring_by_id(&ring_id).map_err(Failure::input)?;
            let a = ring.parse_element(&a).map_err(Failure::input)?;
            let b = ring.parse_element(&b).map_err(Failure::input)?;
            let p = a.multiply(&b).map_err(Failure::input)?;
            emit(&format!("{p}\n"))?;
        }
        Command::Sq2 { m, elem } => {
            let spec = Sq2Spec::odd_quadric(m).map_err(Failure::input)?;
            let a = spec.ring().parse_element(&elem).map_err(Failure::input)?;
            let s = steenrod::sq2(&spec, &a).map_err(Failure::input)?;
            emit(&format!("{s}\n"))?;
        }
        Command::Candidates { file } => {
            let spec = read_spec(&file)?;
            let mut doc = serde_json::Map::new();
            for v in &spec.varieties {
                let value = match candidate_computation(&v.spec, spec.options.chi_window) {
                    Ok(c) => serde_json::to_value(c).map_err(Failure::input)?,
                    Err(e) if e.is_internal() => return Err(e.into()),
                    Err(e) => serde_json::json!({ "error": e.to_string() }),
                };
                doc.insert(v.name.clone(), value);
            }
            let text = serde_json::to_string_pretty(&serde_json::Value::Object(doc)).map_err(Failure::input)?;
            emit(&format!("{text}\n"))?;
        }
    }
    Ok(())
}

/// Runs the command line, writing results to `out` and diagnostics to `err`.
pub fn cli_main_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = out.write_all(rendered.as_bytes());
            } else {
                let _ = err.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match run(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

/// [`cli_main_with`] on the process's stdout and stderr.
pub fn cli_main<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    cli_main_with(argv, &mut stdout.lock(), &mut stderr.lock())
}
