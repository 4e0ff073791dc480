//! Command-line front end: argument parsing, dispatch and exit codes.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 invalid input.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod output;

pub use output::Failure;

#[derive(Parser, Debug)]
#[command(name = "dbhom", version, about = "Recursive q-ary De Bruijn sequences through graph homomorphisms")]
pub struct Cli {
    /// Alphabet size.
    #[arg(long, global = true)]
    q: Option<u32>,
    /// Order of the sequence.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// One JSON object per output record.
    #[arg(long, global = true)]
    json: bool,
    /// File holding an external base De Bruijn cycle (needed for even q).
    #[arg(long = "base-file", global = true)]
    base_file: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build one sequence from the strings B, L and I.
    Generate(GenerateArgs),
    /// Build every sequence of the family, one line per plan.
    Enumerate(EnumerateArgs),
    /// Check that a sequence is De Bruijn of order n.
    Verify(VerifyArgs),
    /// Decompose and join the lift of a binary De Bruijn sequence under x1+x2+x3.
    Binary2(Binary2Args),
    /// Inspect a kernel: property (D), kernel counts, lifts.
    Kernel(KernelArgs),
}

#[derive(Args, Debug)]
struct GenerateArgs {
    /// Kernel coefficients beta, one per level.
    #[arg(long = "B")]
    betas: String,
    /// Alternating steps lambda, one per level.
    #[arg(long = "L")]
    lambdas: String,
    /// Starting cycles i, one per level.
    #[arg(long = "I")]
    starts: String,
    /// Also print the predicted positions of the constant words.
    #[arg(long)]
    positions: bool,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    /// Stop after this many plans.
    #[arg(long)]
    limit: Option<usize>,
    /// Check every sequence with the brute-force oracle.
    #[arg(long)]
    verify: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// The sequence, or `-` for standard input.
    sequence: Option<String>,
    /// Read the sequence from a file.
    #[arg(long, conflicts_with = "sequence")]
    file: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Emit {
    Report,
    Short,
    Long,
    Joined,
}

#[derive(Args, Debug)]
struct Binary2Args {
    /// Binary De Bruijn sequence, or `-` for standard input.
    #[arg(long)]
    base: String,
    #[arg(long, value_enum, default_value_t = Emit::Report)]
    emit: Emit,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum KernelAction {
    Check,
    Count,
    Lift,
}

#[derive(Args, Debug)]
struct KernelArgs {
    action: KernelAction,
    /// Kernel file.
    #[arg(long, conflicts_with = "linear")]
    file: Option<PathBuf>,
    /// One-line kernel, e.g. "q=3 beta=1" or "q=2 d=x1+x3".
    #[arg(long)]
    linear: Option<String>,
    /// Span minus one, for `count` without a kernel.
    #[arg(long)]
    k: Option<usize>,
    /// Base cycle for `lift`.
    #[arg(long)]
    base: Option<String>,
    /// Seed of length k for `lift`.
    #[arg(long)]
    seed: Option<String>,
}

/// Runs the tool on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut out = output::Out::new(stdout, cli.json);
    match commands::dispatch(&cli, stdin, &mut out) {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(stderr, "error: {failure}");
            failure.exit_code()
        }
    }
}
