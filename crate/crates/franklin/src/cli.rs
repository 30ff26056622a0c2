//! Command-line front end.
//!
//! Exit status: 0 on success (or a verified square), 1 when verification
//! fails, 2 on usage, input or output errors.

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use franklin_core::builder::{self, Schedule, Side};
use franklin_core::verifier::{self, ProofSuite, VerifyOptions, DEFAULT_VIOLATION_CAP};
use franklin_core::{FranklinConstants, DEFAULT_MAX_ORDER, HARD_MAX_ORDER};

use crate::report::{self, ReportStyle};
use crate::serdes::{self, FormatKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_FRANKLIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable that raises the order ceiling for `generate` and `schedule`.
pub const MAX_ORDER_ENV: &str = "FRANKLIN_MAX_ORDER";

#[derive(Debug, Parser)]
#[command(name = "franklin", version, about = "Generate and verify Franklin squares of order 2^r")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the Franklin square of the given order.
    Generate {
        /// Order n = 2^r with r >= 3.
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Grid)]
        format: OutputFormat,
        /// Write to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a square against every Franklin property.
    Verify {
        /// Input file; standard input when omitted or `-`.
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = InputFormat::Grid)]
        format: InputFormat,
        #[arg(long, value_enum, default_value_t = ReportArg::Text)]
        report: ReportArg,
        /// Violations listed per property.
        #[arg(long, default_value_t = DEFAULT_VIOLATION_CAP)]
        max_violations: usize,
        /// When to check the construction lemmas.
        #[arg(long, value_enum, default_value_t = LemmaArg::Auto)]
        lemmas: LemmaArg,
    },
    /// Print the fill operations for an order in execution order.
    Schedule {
        #[arg(long)]
        order: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutputFormat {
    Grid,
    Csv,
    Json,
    Latex,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum InputFormat {
    Grid,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportArg {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LemmaArg {
    Auto,
    Always,
    Never,
}

impl From<OutputFormat> for FormatKind {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Grid => FormatKind::GridText,
            OutputFormat::Csv => FormatKind::Csv,
            OutputFormat::Json => FormatKind::Json,
            OutputFormat::Latex => FormatKind::Latex,
        }
    }
}

impl From<InputFormat> for FormatKind {
    fn from(f: InputFormat) -> Self {
        match f {
            InputFormat::Grid => FormatKind::GridText,
            InputFormat::Csv => FormatKind::Csv,
            InputFormat::Json => FormatKind::Json,
        }
    }
}

/// Process-level settings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub max_order: usize,
}

impl Default for Config {
    fn default() -> Self {
        Self { max_order: DEFAULT_MAX_ORDER }
    }
}

impl Config {
    /// Reads [`MAX_ORDER_ENV`]. Values above [`HARD_MAX_ORDER`] are rejected.
    pub fn from_env() -> Result<Self, String> {
        match std::env::var(MAX_ORDER_ENV) {
            Err(_) => Ok(Self::default()),
            Ok(raw) => Self::with_max_order_str(&raw),
        }
    }

    fn with_max_order_str(raw: &str) -> Result<Self, String> {
        let max_order: usize =
            raw.trim().parse().map_err(|_| format!("{MAX_ORDER_ENV}={raw:?} is not a positive integer"))?;
        if max_order == 0 || max_order > HARD_MAX_ORDER {
            return Err(format!("{MAX_ORDER_ENV} must be between 1 and {HARD_MAX_ORDER}"));
        }
        Ok(Self { max_order })
    }
}

/// Runs one command line. `argv[0]` is the program name.
pub fn run<I, T>(argv: I, config: &Config, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{}", e.render());
                EXIT_OK
            };
            return code;
        }
    };
    match dispatch(cli.command, config, stdin, stdout) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(stderr, "franklin: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command, config: &Config, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<i32, String> {
    match command {
        Command::Generate { order, format, out } => {
            let consts = FranklinConstants::with_max_order(order, config.max_order).map_err(|e| e.to_string())?;
            let square = builder::generate_with(consts).map_err(|e| e.to_string())?;
            let text = serdes::emit(&square, format.into());
            match out {
                Some(path) => std::fs::write(&path, text).map_err(|e| io_message("write", &path, &e))?,
                None => stdout.write_all(text.as_bytes()).map_err(|e| format!("cannot write output: {e}"))?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify { input, format, report: style, max_violations, lemmas } => {
            let text = read_input(input.as_deref(), stdin)?;
            let square = serdes::parse(&text, format.into()).map_err(|e| e.to_string())?;
            let options = VerifyOptions {
                violation_cap: max_violations,
                proof_suite: match lemmas {
                    LemmaArg::Auto => ProofSuite::Auto,
                    LemmaArg::Always => ProofSuite::Always,
                    LemmaArg::Never => ProofSuite::Never,
                },
            };
            let result = verifier::verify_with(&square, &options);
            let style = match style {
                ReportArg::Text => ReportStyle::Text,
                ReportArg::Json => ReportStyle::Json,
            };
            stdout
                .write_all(report::render(&result, style).as_bytes())
                .map_err(|e| format!("cannot write output: {e}"))?;
            Ok(if result.is_franklin() { EXIT_OK } else { EXIT_NOT_FRANKLIN })
        }
        Command::Schedule { order } => {
            let consts = FranklinConstants::with_max_order(order, config.max_order).map_err(|e| e.to_string())?;
            let schedule = Schedule::new(consts);
            let mut text =
                format!("# order {}  N = {}  {} ops\n", consts.order(), consts.complement(), schedule.entries().len());
            for entry in schedule.entries() {
                let side = match entry.side {
                    Side::Left => "left ",
                    Side::Right => "right",
                };
                text.push_str(&format!("{side} j={:<3} op{}  {}\n", entry.round, entry.step, entry.op));
            }
            stdout.write_all(text.as_bytes()).map_err(|e| format!("cannot write output: {e}"))?;
            Ok(EXIT_OK)
        }
    }
}

fn read_input(path: Option<&Path>, stdin: &mut dyn Read) -> Result<String, String> {
    match path {
        Some(p) if p != Path::new("-") => std::fs::read_to_string(p).map_err(|e| io_message("read", p, &e)),
        _ => {
            let mut buf = String::new();
            stdin.read_to_string(&mut buf).map_err(|e| format!("cannot read standard input: {e}"))?;
            Ok(buf)
        }
    }
}

fn io_message(verb: &str, path: &Path, e: &io::Error) -> String {
    format!("cannot {verb} {}: {e}", path.display())
}
