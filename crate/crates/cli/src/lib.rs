//! Command-line surface: JSON in, computations and verification suites,
//! human-readable tables and JSON reports out.

pub mod compute;
pub mod manifest;
pub mod suites;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use arsubcat::io::{t2_to_json, to_json_string};
use arsubcat::quivalg::t2_of;
use clap::{Parser, Subcommand};

use compute::Op;
use suites::Suite;

/// Failures, each with its exit code.
#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input (exit 1).
    Parse(String),
    /// An operation's precondition does not hold (exit 2).
    Precondition(arsubcat::Error),
    /// An internal invariant broke (exit 3).
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 1,
            CliError::Precondition(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Precondition(e) => write!(f, "precondition failed: {e}"),
            CliError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl From<arsubcat::Error> for CliError {
    fn from(e: arsubcat::Error) -> Self {
        match e {
            arsubcat::Error::Parse(m) => CliError::Parse(m),
            arsubcat::Error::Internal(m) => CliError::Internal(m),
            other => CliError::Precondition(other),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "arsubcat",
    version,
    about = "Auslander-Reiten computations over bound quiver algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Apply one operation to a module (or morphism object) file.
    Compute {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        module: PathBuf,
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Cap for injective coresolutions when the op needs Gorenstein data.
        #[arg(long, default_value_t = 4)]
        gorenstein_cap: usize,
    },
    /// Run verification suites against a fixture manifest.
    Verify {
        #[arg(long)]
        manifest: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Write T2 of an algebra in the algebra JSON format.
    T2 {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let mut say = |s: String| {
        let _ = writeln!(out, "{s}");
    };
    match cli.command {
        Command::Compute {
            algebra,
            module,
            op,
            out: file,
            gorenstein_cap,
        } => {
            let c = compute::compute(&algebra, &module, op, gorenstein_cap)?;
            match file {
                Some(f) => write_file(&f, &c.json)?,
                None => say(c.json.trim_end().to_string()),
            }
            say(c.summary);
            Ok(0)
        }
        Command::Verify {
            manifest,
            suite,
            seed,
            json,
        } => {
            let fx = manifest::load_fixture(&manifest)?;
            let report = suites::run_suites(&fx, suite, seed)?;
            say(suites::render_table(&report).trim_end().to_string());
            if let Some(f) = json {
                write_file(&f, &suites::report_json(&report))?;
            }
            Ok(if report.passed { 0 } else { 4 })
        }
        Command::T2 { algebra, out: file } => {
            let alg = manifest::load_algebra(&algebra)?;
            let t2 = t2_of(&alg)?;
            write_file(&file, &(to_json_string(&t2_to_json(&t2)) + "\n"))?;
            say(format!(
                "T2: {} vertices, {} arrows, dim {}",
                t2.t2.vertices(),
                t2.t2.arrow_count(),
                t2.t2.dim()
            ));
            Ok(0)
        }
    }
}

/// Caps the worker pool from `ARSUBCAT_THREADS` if set.
fn configure_threads() {
    if let Some(n) = std::env::var("ARSUBCAT_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global();
    }
}

/// Runs the CLI on `args` (including the program name), writing to `out`
/// and `err`, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 1;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    configure_threads();
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            e.exit_code()
        }
    }
}
