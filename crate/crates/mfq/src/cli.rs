//! Argument parsing and dispatch.
//!
//! Exit codes: 0 on success, 1 when a verification suite fails its bounds,
//! 2 for usage and domain errors (bad literals, non-normalizable inputs,
//! unknown suites or models). Batch mode runs one command per stdin line and
//! exits with the worst code seen.

use std::io::BufRead;

use clap::{ArgAction, Parser, Subcommand};

use crate::commands;
use crate::config::{AlgebraSpec, Config, Mode, OutputFormat};
use crate::json::Json;

#[derive(Debug, Parser)]
#[command(
    name = "mfq",
    version,
    about = "Hyperbolic geometry inside quaternion algebras: classify, act, convert, verify",
    disable_help_subcommand = true
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Arithmetic mode.
    #[arg(long, global = true, value_enum, default_value = "float")]
    mode: Mode,

    /// Numeric tolerance for validation and classification.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,

    /// Algebra parameters a,b,d (positive rationals).
    #[arg(long, global = true, default_value = "1,1,1")]
    algebra: AlgebraSpec,

    /// Seed for verification suites.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Case count for verification suites (defaults depend on the suite).
    #[arg(long, global = true)]
    n: Option<usize>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    output: OutputFormat,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify an isometry given as a quaternion literal.
    Classify { quaternion: String },
    /// Apply a unit quaternion to a hyperboloid point: u p u†.
    Act { unit: String, point: String },
    /// Convert coordinates between the hyperboloid, ball, and uhs models.
    Convert {
        from: String,
        to: String,
        coords: String,
    },
    /// Geodesic distance between two hyperboloid points.
    Distance { p: String, q: String },
    /// Split the action of q at the basepoint into symmetric, skew, and
    /// commutator contributions.
    Decompose { quaternion: String },
    /// Run a named property suite (equivariance, closure, homomorphism,
    /// decomposition, axes, 2d, generalized).
    Verify { suite: String },
    /// Read newline-delimited commands from standard input.
    Batch {
        /// Keep processing lines after a failed command.
        #[arg(long, action = ArgAction::SetTrue)]
        keep_going: bool,
    },
}

impl Cli {
    fn config(&self) -> Config {
        Config {
            mode: self.mode,
            tol: self.tol,
            algebra: self.algebra.clone(),
            output: self.output,
            seed: self.seed,
            cases: self.n,
        }
    }
}

fn emit(doc: &Json, cfg: &Config) {
    match cfg.output {
        OutputFormat::Json => println!("{}", doc.render()),
        OutputFormat::Plain => println!("{}", commands::render_plain(doc)),
    }
}

/// Run one non-batch command; returns the process exit code.
fn dispatch(command: &Command, cfg: &Config, line: Option<usize>) -> u8 {
    let complain = |message: &str| match line {
        Some(number) => eprintln!("error: line {number}: {message}"),
        None => eprintln!("error: {message}"),
    };
    let result = match command {
        Command::Classify { quaternion } => commands::cmd_classify(quaternion, cfg),
        Command::Act { unit, point } => commands::cmd_act(unit, point, cfg),
        Command::Convert { from, to, coords } => commands::cmd_convert(from, to, coords, cfg),
        Command::Distance { p, q } => commands::cmd_distance(p, q, cfg),
        Command::Decompose { quaternion } => commands::cmd_decompose(quaternion, cfg),
        Command::Verify { suite } => {
            return match commands::cmd_verify(suite, cfg) {
                Ok((doc, pass)) => {
                    emit(&doc, cfg);
                    if pass {
                        0
                    } else {
                        1
                    }
                }
                Err(message) => {
                    complain(&message);
                    2
                }
            };
        }
        Command::Batch { .. } => {
            complain("batch cannot be nested");
            return 2;
        }
    };
    match result {
        Ok(doc) => {
            emit(&doc, cfg);
            0
        }
        Err(message) => {
            complain(&message);
            2
        }
    }
}

/// Split a batch line into argv tokens, honoring single and double quotes.
fn shell_split(line: &str) -> Result<Vec<String>, String> {
    let mut tokens = Vec::new();
    let mut current = String::new();
    let mut has_token = false;
    let mut quote: Option<char> = None;
    for c in line.chars() {
        match quote {
            Some(q) => {
                if c == q {
                    quote = None;
                } else {
                    current.push(c);
                }
            }
            None => match c {
                '\'' | '"' => {
                    quote = Some(c);
                    has_token = true;
                }
                c if c.is_whitespace() => {
                    if has_token {
                        tokens.push(std::mem::take(&mut current));
                        has_token = false;
                    }
                }
                c => {
                    current.push(c);
                    has_token = true;
                }
            },
        }
    }
    if quote.is_some() {
        return Err("unterminated quote".to_string());
    }
    if has_token {
        tokens.push(current);
    }
    Ok(tokens)
}

/// Run every line of `input` as its own command. Lines are self-contained
/// (they carry their own flags); blank lines and #-comments are skipped.
/// Returns the worst exit code encountered; with `keep_going` false,
/// processing stops at the first failure.
fn run_batch<R: BufRead>(input: R, keep_going: bool) -> u8 {
    let mut worst = 0u8;
    for (lineno, line) in input.lines().enumerate() {
        let line = match line {
            Ok(line) => line,
            Err(e) => {
                eprintln!("error: line {}: {e}", lineno + 1);
                return worst.max(2);
            }
        };
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let code = match shell_split(trimmed) {
            Ok(tokens) => {
                match Cli::try_parse_from(std::iter::once("mfq".to_string()).chain(tokens)) {
                    Ok(cli) => match &cli.command {
                        Command::Batch { .. } => {
                            eprintln!("error: line {}: batch cannot be nested", lineno + 1);
                            2
                        }
                        command => {
                            let cfg = cli.config();
                            match cfg.validate() {
                                Ok(()) => dispatch(command, &cfg, Some(lineno + 1)),
                                Err(message) => {
                                    eprintln!("error: line {}: {message}", lineno + 1);
                                    2
                                }
                            }
                        }
                    },
                    Err(e) => {
                        eprintln!("error: line {}: {e}", lineno + 1);
                        2
                    }
                }
            }
            Err(message) => {
                eprintln!("error: line {}: {message}", lineno + 1);
                2
            }
        };
        worst = worst.max(code);
        if code != 0 && !keep_going {
            return worst;
        }
    }
    worst
}

/// Entry point used by `main`; parses argv and runs the command.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own help/version output with exit code 0 and
            // usage errors with code 2.
            let code = if e.exit_code() == 0 { 0 } else { 2 };
            let _ = e.print();
            return code;
        }
    };
    let cfg = cli.config();
    if let Err(message) = cfg.validate() {
        eprintln!("error: {message}");
        return 2;
    }
    match &cli.command {
        Command::Batch { keep_going } => {
            let stdin = std::io::stdin();
            run_batch(stdin.lock(), *keep_going)
        }
        command => dispatch(command, &cfg, None),
    }
}
