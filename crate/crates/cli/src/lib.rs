//! `betti` command-line interface.
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 when a survey
//! reports violations.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use betti_core::io::{self, DecompositionDocument};
use betti_core::{
    bounds_report, es_decompose, pure_table, run_survey, symmetrize, synthesize,
    verify_decomposition, BettiError, BettiTable, DegreeSequence, SurveyKind,
};
use clap::{Parser, Subcommand};

mod render;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_VIOLATIONS: u8 = 2;

/// Environment variable capping the number of survey worker threads.
pub const THREADS_ENV: &str = "BETTI_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "betti",
    version,
    about = "Exact Betti table decomposition and multiplicity bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the pure table of a degree sequence.
    Pure {
        /// Comma separated strictly increasing degrees, e.g. 0,2,4,8.
        #[arg(long, allow_hyphen_values = true)]
        degrees: String,
        /// Print the smallest integral multiple instead.
        #[arg(long)]
        clear_denominators: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print the Peskine-Szpiro functionals and the multiplicity.
    Mult {
        file: PathBuf,
        /// Report the formal value even if lower functionals do not vanish.
        #[arg(long)]
        force: bool,
    },
    /// Decompose a table along a chain of pure tables.
    Decompose {
        file: PathBuf,
        /// Pair dual sequences (requires a self-dual table).
        #[arg(long)]
        symmetrized: bool,
        /// Append the verification checks as comment lines.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate every multiplicity bound.
    Bounds {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive or randomized check of an inequality.
    Survey {
        #[arg(long)]
        codim: usize,
        #[arg(long)]
        max_socle: i64,
        /// lemma, prop or theorem
        #[arg(long)]
        check: SurveyKind,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Synthesize the table of a decomposition document.
    Synth {
        specfile: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutput {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(message: impl std::fmt::Display) -> Self {
        Self {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

#[derive(Debug)]
enum CliError {
    Io(PathBuf, std::io::Error),
    Betti(BettiError),
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(path, e) => write!(f, "{}: {e}", path.display()),
            CliError::Betti(e) => e.fmt(f),
            CliError::Usage(msg) => f.write_str(msg),
        }
    }
}

impl From<BettiError> for CliError {
    fn from(e: BettiError) -> Self {
        CliError::Betti(e)
    }
}

pub fn run_cli<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CliOutput {
                    code: EXIT_INPUT,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CliOutput::ok(text)
            };
        }
    };
    match dispatch(cli.command) {
        Ok(out) => out,
        Err(e) => CliOutput::error(e),
    }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        let mut text = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut text)
            .map_err(|e| CliError::Io(path.to_path_buf(), e))?;
        return Ok(text);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn read_table(path: &Path) -> Result<BettiTable, CliError> {
    Ok(io::parse_table(&read_input(path)?)?)
}

fn survey_threads() -> Result<Option<usize>, CliError> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(CliError::Usage(format!(
                "{THREADS_ENV} must be a positive integer, got '{v}'"
            ))),
        },
        Err(_) => Ok(None),
    }
}

fn dispatch(command: Command) -> Result<CliOutput, CliError> {
    match command {
        Command::Pure {
            degrees,
            clear_denominators,
            json,
        } => {
            let d: DegreeSequence = degrees.parse()?;
            let mut table = pure_table(&d);
            let mut header = String::new();
            if clear_denominators {
                let (cleared, factor) = table.clear_denominators();
                table = cleared;
                header = format!("# scaled by {factor}\n");
            }
            Ok(CliOutput::ok(if json {
                io::table_to_json(&table)
            } else {
                header + &io::format_table(&table)
            }))
        }
        Command::Mult { file, force } => {
            let table = read_table(&file)?;
            let e = match table.multiplicity() {
                Ok(e) => Ok(e),
                Err(err @ BettiError::NotCohenMacaulayConsistent { .. }) if !force => {
                    return Err(CliError::Usage(format!(
                        "{err} (use --force for the formal multiplicity)"
                    )))
                }
                Err(BettiError::NotCohenMacaulayConsistent { .. }) => {
                    Err(table.formal_multiplicity())
                }
                Err(err) => return Err(err.into()),
            };
            Ok(CliOutput::ok(render::multiplicity(&table, &e)))
        }
        Command::Decompose {
            file,
            symmetrized,
            verify,
            json,
        } => {
            let table = read_table(&file)?;
            let chain = es_decompose(&table)?;
            if !symmetrized {
                return Ok(CliOutput::ok(if json {
                    io::chain_to_json(&chain)
                } else {
                    io::format_chain(&chain)
                }));
            }
            let n = table.self_duality().ok_or_else(|| {
                CliError::Usage("table is not self-dual; drop --symmetrized".into())
            })?;
            let sd = symmetrize(&chain, n)?;
            if json {
                return Ok(CliOutput::ok(io::symmetrized_to_json(&sd)));
            }
            let mut out = io::format_symmetrized(&sd);
            if verify {
                out.push_str(&render::verification(&verify_decomposition(&table, &sd)));
            }
            Ok(CliOutput::ok(out))
        }
        Command::Bounds { file, json } => {
            let report = bounds_report(&read_table(&file)?)?;
            Ok(CliOutput::ok(if json {
                io::bounds_report_to_json(&report)
            } else {
                render::bounds(&report)
            }))
        }
        Command::Survey {
            codim,
            max_socle,
            check,
            trials,
            seed,
            json,
        } => {
            if codim == 0 {
                return Err(CliError::Usage("--codim must be at least 1".into()));
            }
            let run = || run_survey(check, codim, max_socle, trials, seed);
            let result = match survey_threads()? {
                Some(n) => rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .map_err(|e| CliError::Usage(e.to_string()))?
                    .install(run),
                None => run(),
            };
            let stdout = if json {
                io::survey_to_json(&result)
            } else {
                render::survey(&result)
            };
            let code = if result.has_violations() {
                EXIT_VIOLATIONS
            } else {
                EXIT_OK
            };
            Ok(CliOutput {
                code,
                stdout,
                stderr: String::new(),
            })
        }
        Command::Synth { specfile, json } => {
            let table = match io::parse_decomposition(&read_input(&specfile)?)? {
                DecompositionDocument::Chain(chain) => chain.to_table(),
                DecompositionDocument::Symmetrized(sd) => synthesize(&sd)?,
            };
            Ok(CliOutput::ok(if json {
                io::table_to_json(&table)
            } else {
                io::format_table(&table)
            }))
        }
    }
}
