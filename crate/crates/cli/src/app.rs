//! Argument parsing and command dispatch.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use oseq::bounds::{ledger_bound, period_upper_bound};
use oseq::constructions::{generate, ConstructionRecipe};
use oseq::graph::EdgeCap;
use oseq::oracle::{locate, verify, LocateResult, OrientableSequence, Verdict};
use oseq::tuples::ZkTuple;
use oseq::Error;

use crate::format::{parse_symbols, SequenceFile};
use crate::table::{build_table, Status, Which};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CONSTRUCTION: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;
pub const EXIT_NOT_FOUND: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "oseq", version, about = "Generate, verify and decode orientable sequences")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    A,
    C,
    #[value(name = "a_t", alias = "a-t")]
    At,
    Lempel,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a sequence and write it in the sequence file format.
    Generate {
        #[arg(long, value_enum)]
        method: MethodArg,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: usize,
        /// Half-width for the a_t method.
        #[arg(long)]
        t: Option<usize>,
        /// Output file; the sequence goes to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that a sequence file holds an orientable sequence.
    Verify {
        #[arg(long = "in", value_name = "PATH")]
        input: PathBuf,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Print the upper bound on the period.
    Bound {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: usize,
        /// Also print every exclusion term.
        #[arg(long)]
        ledger: bool,
    },
    /// Recompute a reference table and compare it with the bundled copy.
    Table {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        max_k: u32,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        json: bool,
        /// Fail when any cell was skipped for exceeding the edge cap.
        #[arg(long)]
        strict: bool,
    },
    /// Find where a window occurs, in either reading direction.
    Locate {
        #[arg(long = "in", value_name = "PATH")]
        input: PathBuf,
        #[arg(long)]
        window: String,
    },
}

/// Parses `args` (including the program name) and runs the command.
/// Usage errors exit with 1; `--help` and `--version` exit with 0.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            code
        }
    }
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Generate { method, k, n, t, out: path } => cmd_generate(method, k, n, t, path.as_deref(), out),
        Command::Verify { input, n, k } => cmd_verify(&input, n, k, out),
        Command::Bound { k, n, ledger } => cmd_bound(k, n, ledger, out),
        Command::Table { which, max_k, max_n, json, strict } => cmd_table(which, max_k, max_n, json, strict, out),
        Command::Locate { input, window } => cmd_locate(&input, &window, out),
    };
    match result {
        Ok(code) => code,
        Err((code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

type CmdResult = Result<i32, (i32, String)>;

fn usage(msg: impl ToString) -> (i32, String) {
    (EXIT_USAGE, msg.to_string())
}

fn io_out(e: std::io::Error) -> (i32, String) {
    (EXIT_USAGE, format!("cannot write output: {e}"))
}

fn edge_cap() -> Result<EdgeCap, (i32, String)> {
    EdgeCap::from_env().map_err(usage)
}

fn construction_code(e: &Error) -> i32 {
    match e {
        Error::Disconnected(_) | Error::CapExceeded { .. } | Error::Internal(_) | Error::Precondition(_) => {
            EXIT_CONSTRUCTION
        }
        _ => EXIT_USAGE,
    }
}

fn cmd_generate(
    method: MethodArg,
    k: u32,
    n: usize,
    t: Option<usize>,
    path: Option<&Path>,
    out: &mut dyn Write,
) -> CmdResult {
    let recipe = match (method, t) {
        (MethodArg::At, Some(t)) => ConstructionRecipe::a_t(k, n, t),
        (MethodArg::At, None) => return Err(usage("--method a_t needs --t")),
        (_, Some(_)) => return Err(usage("--t applies only to --method a_t")),
        (MethodArg::A, None) => ConstructionRecipe::a(k, n),
        (MethodArg::C, None) => ConstructionRecipe::c(k, n),
        (MethodArg::Lempel, None) => ConstructionRecipe::lempel(k, n),
    };
    recipe.validate().map_err(usage)?;
    let generated = generate(&recipe, edge_cap()?)
        .map_err(|e| (construction_code(&e), format!("{recipe}: {e}")))?;
    let seq = &generated.sequence;
    let file = SequenceFile {
        k,
        n,
        method: recipe.tag(),
        symbols: seq.symbols().to_vec(),
    };
    let summary = format!(
        "{recipe}: period {} (bound {}, gap {})",
        seq.period(),
        generated.bound,
        generated.bound - seq.period() as u128
    );
    match path {
        Some(p) => {
            fs::write(p, file.serialize()).map_err(|e| usage(format!("cannot write {}: {e}", p.display())))?;
            writeln!(out, "{summary}\nwrote {}", p.display()).map_err(io_out)?;
        }
        None => {
            write!(out, "{}", file.serialize()).map_err(io_out)?;
            eprintln!("{summary}");
        }
    }
    Ok(EXIT_OK)
}

fn read_file(path: &Path, k: Option<u32>, n: Option<usize>) -> Result<SequenceFile, (i32, String)> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    SequenceFile::parse_with(&text, k, n).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn cmd_verify(path: &Path, n: Option<usize>, k: Option<u32>, out: &mut dyn Write) -> CmdResult {
    let file = read_file(path, k, n)?;
    match verify(&file.symbols, file.n, file.k).map_err(usage)? {
        Verdict::Accepted => {
            writeln!(
                out,
                "accepted: orientable sequence k={} n={} period={}",
                file.k,
                file.n,
                file.period()
            )
            .map_err(io_out)?;
            Ok(EXIT_OK)
        }
        Verdict::Rejected(v) => {
            writeln!(out, "rejected: {v}").map_err(io_out)?;
            Ok(EXIT_VERIFY)
        }
    }
}

fn cmd_bound(k: u32, n: usize, ledger: bool, out: &mut dyn Write) -> CmdResult {
    let bound = period_upper_bound(k, n).map_err(usage)?;
    writeln!(out, "{bound}").map_err(io_out)?;
    if ledger {
        let report = ledger_bound(k, n).map_err(usage)?;
        writeln!(out, "{report}").map_err(io_out)?;
    }
    Ok(EXIT_OK)
}

fn cmd_table(which: Which, max_k: u32, max_n: usize, json: bool, strict: bool, out: &mut dyn Write) -> CmdResult {
    if max_k < 2 || max_n < 2 {
        return Err(usage("--max-k and --max-n must be at least 2"));
    }
    let table = build_table(which, max_k, max_n, edge_cap()?);
    let rendered = if json { table.to_json() + "\n" } else { table.to_text() };
    write!(out, "{rendered}").map_err(io_out)?;
    let code = if table.count(Status::Mismatch) > 0 {
        EXIT_VERIFY
    } else if table.count(Status::Failed) > 0 || (strict && table.count(Status::Skipped) > 0) {
        EXIT_CONSTRUCTION
    } else {
        EXIT_OK
    };
    Ok(code)
}

fn cmd_locate(path: &Path, window: &str, out: &mut dyn Write) -> CmdResult {
    let file = read_file(path, None, None)?;
    let seq = match OrientableSequence::new(file.symbols, file.n, file.k) {
        Ok(s) => s,
        Err(Error::NotOrientable(v)) => {
            return Err((EXIT_VERIFY, format!("{} is not orientable: {v}", path.display())))
        }
        Err(e) => return Err(usage(e)),
    };
    let symbols = parse_symbols(window, seq.k()).map_err(usage)?;
    let window = ZkTuple::new(seq.k(), symbols).map_err(usage)?;
    match locate(&seq, &window).map_err(usage)? {
        LocateResult::Found { position, direction } => {
            writeln!(out, "position {position} {direction}").map_err(io_out)?;
            Ok(EXIT_OK)
        }
        LocateResult::NotFound => {
            writeln!(out, "not found").map_err(io_out)?;
            Ok(EXIT_NOT_FOUND)
        }
    }
}
