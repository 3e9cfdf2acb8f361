//! `ratpoly`: classify rational polygons of fixed denominator and size,
//! compute their Ehrhart data, and verify the point-count bounds.

mod commands;
mod manifest;
mod record;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{ehrhart, enumerate, normal_form, plotdata, verify, EXIT_IO};

#[derive(Debug, Parser)]
#[command(name = "ratpoly", version, about)]
struct Cli {
    /// Worker threads for the enumeration (default: all cores). Output is
    /// byte-identical for any value.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    Enumerate(enumerate::EnumerateArgs),
    Ehrhart(ehrhart::EhrhartArgs),
    Verify(verify::VerifyArgs),
    Plotdata(plotdata::PlotdataArgs),
    NormalForm(normal_form::NormalFormArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        // Ignore failure: the global pool can only be set once (tests).
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let result = match cli.command {
        Command::Enumerate(args) => enumerate::run(args),
        Command::Ehrhart(args) => ehrhart::run(args),
        Command::Verify(args) => verify::run(args),
        Command::Plotdata(args) => plotdata::run(args),
        Command::NormalForm(args) => normal_form::run(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {:#}", failure.error);
            ExitCode::from(if failure.code == 0 { EXIT_IO } else { failure.code })
        }
    }
}
