//! Command-line front end: expression grammar, configuration files,
//! subcommands and their reports.

pub mod commands;
pub mod config;
pub mod error;
pub mod eval;
pub mod parse;
pub mod report;
pub mod roundtrip;
pub mod selftest;

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use error::{CliError, Result};
use report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "tanreg",
    version,
    about = "Exact residues, principal parts and tangent symbols on P^1"
)]
pub struct Cli {
    /// Tower file (`trans:`, `alg:`, `var:` lines); defaults to Q(t) over x
    #[arg(long, global = true)]
    pub tower: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub seed: u64,
    /// Cases per property suite
    #[arg(long, global = true, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
    pub count: u64,
    #[command(subcommand)]
    pub command: Command,
}

/// Expression arguments may be `-` to read from standard input.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Residue of a form at a place (`infinity` or a polynomial)
    Residue {
        #[arg(allow_hyphen_values = true)]
        form: String,
        #[arg(allow_hyphen_values = true)]
        place: String,
    },
    /// Principal parts of a form, as family-file rows
    Rho {
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// Tangent of a symbol `{a + eps*a1, b + eps*b1}`
    Tan {
        #[arg(allow_hyphen_values = true)]
        symbol: String,
    },
    /// Four-factor decomposition of a symbol
    Decompose {
        #[arg(allow_hyphen_values = true)]
        symbol: String,
    },
    /// Whether a relative form is exact; exits 1 if not
    IsExact {
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// Basis of the kernel of the relative projection on global forms
    Kernel,
    /// Basis of the global sections
    GlobalSections,
    /// Realize a principal-part family file; exits 1 if obstructed
    Realize {
        #[arg(allow_hyphen_values = true)]
        family: String,
    },
    /// Check the residue square for a form at every place
    VerifyRes {
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// Check the tangent square for a symbol
    VerifyTan {
        #[arg(allow_hyphen_values = true)]
        symbol: String,
    },
    /// Run the seeded property suites
    Selftest,
}

pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Inputs<'a> {
    stdin: &'a mut dyn Read,
    used: bool,
}

impl Inputs<'_> {
    /// `-` reads standard input, at most once per invocation.
    fn resolve(&mut self, arg: &str) -> Result<String> {
        if arg != "-" {
            return Ok(arg.to_string());
        }
        if self.used {
            return Err(CliError::Io("standard input can be used only once".into()));
        }
        self.used = true;
        let mut s = String::new();
        self.stdin
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io(format!("reading standard input: {e}")))?;
        Ok(s.trim().to_string())
    }

    fn file(&mut self, arg: &str) -> Result<String> {
        if arg == "-" {
            return self.resolve(arg);
        }
        std::fs::read_to_string(arg).map_err(|e| CliError::Io(format!("{arg}: {e}")))
    }
}

fn emit<R: Report>(report: R, format: Format) -> (bool, String) {
    let body = match format {
        Format::Text => report.text(),
        Format::Json => report::to_json(&report),
    };
    (report.verdict(), body)
}

fn dispatch(cli: &Cli, inputs: &mut Inputs) -> Result<(bool, String)> {
    let tower = match &cli.tower {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            config::parse_tower(&text)?
        }
        None => config::default_tower(),
    };
    let k = &tower;
    let f = cli.format;
    use commands as c;
    Ok(match &cli.command {
        Command::Residue { form, place } => {
            let form = inputs.resolve(form)?;
            emit(c::residue(k, &form, &inputs.resolve(place)?)?, f)
        }
        Command::Rho { form } => emit(c::rho(k, &inputs.resolve(form)?)?, f),
        Command::Tan { symbol } => emit(c::tan(k, &inputs.resolve(symbol)?)?, f),
        Command::Decompose { symbol } => emit(c::decompose(k, &inputs.resolve(symbol)?)?, f),
        Command::IsExact { form } => emit(c::exactness(k, &inputs.resolve(form)?)?, f),
        Command::Kernel => emit(c::kernel(k), f),
        Command::GlobalSections => emit(c::global_sections(k), f),
        Command::Realize { family } => emit(c::realize(k, &inputs.file(family)?)?, f),
        Command::VerifyRes { form } => emit(c::verify_res(k, &inputs.resolve(form)?)?, f),
        Command::VerifyTan { symbol } => emit(c::verify_tan(k, &inputs.resolve(symbol)?)?, f),
        Command::Selftest => emit(selftest::run(cli.seed, cli.count), f),
    })
}

/// Runs one invocation. Exit status: 0 on success or a true verdict, 1 on a
/// false verdict, 2 on usage, input or evaluation errors.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Output {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let mut inputs = Inputs { stdin, used: false };
    match dispatch(&cli, &mut inputs) {
        Ok((verdict, mut body)) => {
            body.push('\n');
            Output {
                code: if verdict { 0 } else { 1 },
                stdout: body,
                stderr: String::new(),
            }
        }
        Err(e) => Output {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
