use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lexhit::cli::{self, Emit, EnumerateOptions, ExitStatus};
use lexhit::reference::BruteForce;
use lexhit::WitnessForm;

/// Enumerate minimal hitting sets of an ordered hypergraph in lexicographic order.
///
/// Exit status: 0 success or `true`; 1 a negative answer (`false`, no
/// transversal for lexmin/lexmax, failed verify, violated bound); 2 usage,
/// parse or I/O error, or the brute-force cap was exceeded.
#[derive(Parser)]
#[command(name = "lexhit", version)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum EmitArg {
    Mcif,
    If,
    Circuit,
}

#[derive(Subcommand)]
enum Command {
    /// Print minimal transversals in lexicographic order, one per line.
    Enumerate {
        file: PathBuf,
        /// Stop after this many transversals.
        #[arg(long)]
        limit: Option<u64>,
        /// One JSON record per line.
        #[arg(long)]
        json: bool,
        /// Print a run report to stderr.
        #[arg(long)]
        stats: bool,
    },
    /// Print the lexicographically smallest minimal transversal.
    Lexmin { file: PathBuf },
    /// Print the lexicographically largest minimal transversal.
    Lexmax { file: PathBuf },
    /// Print the number of minimal transversals.
    Count { file: PathBuf },
    /// Decide whether some minimal transversal contains X and avoids Y.
    Extend {
        file: PathBuf,
        /// Vertices to include (comma or space separated).
        #[arg(long, default_value = "")]
        include: String,
        /// Vertices to exclude (comma or space separated).
        #[arg(long, default_value = "")]
        exclude: String,
        /// Print oracle counters to stderr.
        #[arg(long)]
        stats: bool,
    },
    /// Emit the independent family instance (or circuit) for an extension query.
    Reduce {
        file: PathBuf,
        #[arg(long, default_value = "")]
        include: String,
        #[arg(long, default_value = "")]
        exclude: String,
        #[arg(long, value_enum, default_value = "mcif")]
        emit: EmitArg,
        /// Build witness sets as E \ Y \ {x} instead of E \ Y.
        #[arg(long)]
        punctured: bool,
    },
    /// Cross-check the enumerator against brute force.
    Verify {
        file: PathBuf,
        /// Largest vertex count brute force accepts (default from LEXHIT_BF_CAP, else 20).
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Time repeated full enumerations and print a run report.
    Bench {
        file: PathBuf,
        #[arg(long, default_value_t = 5)]
        repeat: usize,
    },
}

fn names(list: &str) -> Vec<String> {
    list.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect()
}

fn run(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<ExitStatus> {
    let file = match &cmd {
        Command::Enumerate { file, .. }
        | Command::Lexmin { file }
        | Command::Lexmax { file }
        | Command::Count { file }
        | Command::Extend { file, .. }
        | Command::Reduce { file, .. }
        | Command::Verify { file, .. }
        | Command::Bench { file, .. } => file.clone(),
    };
    let h = match cli::load(&file) {
        Ok(h) => h,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(ExitStatus::Usage);
        }
    };
    match cmd {
        Command::Enumerate {
            limit, json, stats, ..
        } => cli::cmd_enumerate(&h, EnumerateOptions { limit, json, stats }, out, err),
        Command::Lexmin { .. } => cli::cmd_lexmin(&h, out, err),
        Command::Lexmax { .. } => cli::cmd_lexmax(&h, out, err),
        Command::Count { .. } => cli::cmd_count(&h, out),
        Command::Extend {
            include,
            exclude,
            stats,
            ..
        } => cli::cmd_extend(&h, &names(&include), &names(&exclude), stats, out, err),
        Command::Reduce {
            include,
            exclude,
            emit,
            punctured,
            ..
        } => {
            let emit = match emit {
                EmitArg::Mcif => Emit::Mcif,
                EmitArg::If => Emit::If,
                EmitArg::Circuit => Emit::Circuit,
            };
            let form = if punctured {
                WitnessForm::Punctured
            } else {
                WitnessForm::Unpunctured
            };
            cli::cmd_reduce(&h, &names(&include), &names(&exclude), emit, form, out, err)
        }
        Command::Verify { max_n, .. } => {
            let bf = max_n.map_or_else(BruteForce::from_env, BruteForce::with_cap);
            cli::cmd_verify(&h, bf, out, err)
        }
        Command::Bench { repeat, .. } => cli::cmd_bench(&h, repeat, out),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let stdout = io::stdout();
    let stderr = io::stderr();
    let (mut out, mut err) = (stdout.lock(), stderr.lock());
    match run(args.command, &mut out, &mut err) {
        Ok(status) => ExitCode::from(status.code() as u8),
        // a closed pipe (e.g. `| head`) is not an error worth reporting
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            ExitCode::from(2)
        }
    }
}
