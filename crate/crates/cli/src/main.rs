//! `solvrep`: command-line driver.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use solvrep_core::problem::{builtin_source, BUILTIN_NAMES};

use commands::{CliError, CliResult, Output};

#[derive(Parser, Debug)]
#[command(name = "solvrep", version, about = "Irreducible representations of filtered solvable Lie algebras")]
struct Cli {
    /// Problem file to load.
    #[arg(long, global = true, conflicts_with = "example")]
    file: Option<PathBuf>,
    /// Built-in example (axb, heisenberg).
    #[arg(long, global = true)]
    example: Option<String>,
    /// Degree bound for module computations.
    #[arg(long, global = true, default_value_t = 4)]
    degree: u32,
    /// Master seed for check-all.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Write a JSON report to this path.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    /// Suppress the human-readable output.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the algebra and filtration axioms.
    Validate,
    /// Print the problem file in canonical form.
    Print,
    /// Vergne polarization of a functional.
    Pv { f: String },
    /// Equivalence class R(f) as an affine subspace of the dual.
    Class { f: String },
    /// Decide whether M(f) and M(g) are equivalent.
    Equiv { f: String, g: String },
    /// Spectrum of ind(M_h, g) for a functional h on a subalgebra.
    SpecInd { h: String, subalgebra: String },
    /// Spectrum of the restriction of M(f) to a subalgebra.
    SpecRes { f: String, subalgebra: String },
    /// Spectrum of M(f) ⊗ M(g), optionally testing a candidate.
    SpecTensor { f: String, g: String, candidate: Option<String> },
    /// Apply an element of U(g) to the cyclic vector of M(f).
    Act { f: String, element: String },
    /// Solutions of (v - c) l = 0 in the degree-D slice of M(f).
    Highest { f: String, degree: u32 },
    /// The character theta of pv(f) and the twisted character.
    Theta { f: String },
    /// Run every property suite over random instances.
    CheckAll {
        #[arg(value_name = "SEED")]
        seed_arg: Option<u64>,
        #[arg(value_name = "N")]
        n_arg: Option<usize>,
        /// Number of instances.
        #[arg(short = 'n', long = "count")]
        count: Option<usize>,
    },
}

fn source_text(cli: &Cli) -> CliResult<String> {
    if let Some(path) = &cli.file {
        return std::fs::read_to_string(path)
            .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())));
    }
    match &cli.example {
        Some(name) => builtin_source(name).map(String::from).ok_or_else(|| {
            CliError::Validation(format!("unknown example {name:?} (available: {})", BUILTIN_NAMES.join(", ")))
        }),
        None => Err(CliError::Validation("no input: pass --file <path> or --example <name>".into())),
    }
}

fn run(cli: &Cli) -> CliResult<Output> {
    if let Command::CheckAll { seed_arg, n_arg, count } = &cli.command {
        let seed = seed_arg.or(cli.seed).unwrap_or(0);
        let n = count.or(*n_arg).unwrap_or(100);
        return commands::check_all(seed, n, cli.degree);
    }
    let problem = commands::load_text(&source_text(cli)?)?;
    match &cli.command {
        Command::Validate => commands::validate(&problem),
        Command::Print => commands::print(&problem),
        Command::Pv { f } => commands::pv(&problem, f),
        Command::Class { f } => commands::class(&problem, f),
        Command::Equiv { f, g } => commands::equiv(&problem, f, g),
        Command::SpecInd { h, subalgebra } => commands::spec_ind(&problem, h, subalgebra),
        Command::SpecRes { f, subalgebra } => commands::spec_res(&problem, f, subalgebra),
        Command::SpecTensor { f, g, candidate } => commands::spec_tensor(&problem, f, g, candidate.as_deref()),
        Command::Act { f, element } => commands::act(&problem, f, element),
        Command::Highest { f, degree } => commands::highest(&problem, f, *degree),
        Command::Theta { f } => commands::theta_cmd(&problem, f),
        Command::CheckAll { .. } => unreachable!(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = std::panic::catch_unwind(|| run(&cli))
        .unwrap_or_else(|_| Err(CliError::Internal("panic while running the command".into())));
    match result {
        Ok(out) => {
            if !cli.quiet {
                for line in &out.lines {
                    println!("{line}");
                }
            }
            if let Some(path) = &cli.report {
                let text = serde_json::to_string_pretty(&out.report).expect("report serializes");
                if let Err(e) = std::fs::write(path, text + "\n") {
                    eprintln!("cannot write report {}: {e}", path.display());
                    return ExitCode::from(3);
                }
            }
            ExitCode::from(out.status as u8)
        }
        Err(e) => {
            eprintln!("{e}");
            if let Some(path) = &cli.report {
                let report = serde_json::json!({ "error": e.to_string(), "exit_code": e.code() });
                let _ = std::fs::write(path, serde_json::to_string_pretty(&report).expect("serializes") + "\n");
            }
            ExitCode::from(e.code() as u8)
        }
    }
}
