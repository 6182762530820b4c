//! Command line front end: reads a combinatorial input file, dispatches to
//! the matching pipeline, and prints the resulting Cox ring presentation,
//! class group, canonical class and moving cone.
//!
//! Exit codes: 0 on success, 1 on validation failure, 2 on schema errors.

use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;
use tcox::io::{self, JobSpec};

#[derive(Parser)]
#[command(name = "tcox", version, about = "Cox rings of varieties with complexity-one torus action")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(clap::Args)]
struct JobArgs {
    /// Input file (JSON; rationals as strings such as "-3/2").
    file: PathBuf,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Re-check structural invariants on the computed output.
    #[arg(long)]
    check: bool,
    /// Write a plain-text ideal listing to this file.
    #[arg(long)]
    ideal_out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Divisorial fan on the projective line.
    Fan(JobArgs),
    /// Orlik-Wagreich graph of a K*-surface.
    Owgraph(JobArgs),
    /// Rank-two bundle filtration data over a toric variety.
    Bundle(JobArgs),
    /// Tangent-sheaf data: the rays of a smooth complete fan.
    Cotangent(JobArgs),
    /// The built-in fixture catalog.
    Catalog {
        /// Recompute every fixture and compare with the expected outputs.
        #[arg(long)]
        verify: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Fan(args) => run_job("fan", args),
        Command::Owgraph(args) => run_job("owgraph", args),
        Command::Bundle(args) => run_job("bundle", args),
        Command::Cotangent(args) => run_job("cotangent", args),
        Command::Catalog { verify } => run_catalog(verify),
    }
}

fn run_job(expected_kind: &str, args: JobArgs) -> ExitCode {
    let bytes = match std::fs::read(&args.file) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", args.file.display());
            return ExitCode::from(2);
        }
    };
    let job: JobSpec = match io::parse_input(&bytes) {
        Ok(j) => j,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if job.kind() != expected_kind {
        eprintln!(
            "error: schema error at `kind`: file declares `{}` but the subcommand expects `{expected_kind}`",
            job.kind()
        );
        return ExitCode::from(2);
    }
    let report = match io::run(&job, args.check) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return match e {
                tcox::Error::Schema { .. } => ExitCode::from(2),
                _ => ExitCode::from(1),
            };
        }
    };
    match args.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).expect("report json")),
        Format::Text => print!("{}", io::render_text(&report)),
    }
    if let Some(path) = &args.ideal_out {
        if let Err(e) = std::fs::write(path, io::ideal_listing(&report)) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(1);
        }
    }
    if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_catalog(verify: bool) -> ExitCode {
    if !verify {
        for line in tcox::catalog::list_catalog() {
            println!("{line}");
        }
        return ExitCode::SUCCESS;
    }
    let results = tcox::catalog::verify_catalog();
    let mut failed = 0usize;
    for r in &results {
        match &r.outcome {
            Ok(()) => println!("PASS {} [{}]", r.name, r.provenance),
            Err(msg) => {
                failed += 1;
                println!("FAIL {} [{}]: {msg}", r.name, r.provenance);
            }
        }
    }
    println!("{} fixtures, {} failed", results.len(), failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
