use std::io::Write;
use std::path::PathBuf;

use clap::Args;

use crate::record::{read_records, records_to_polygons};

use super::{fail, open_input, open_output, CmdResult, EXIT_BAD_INPUT, EXIT_IO, EXIT_OK};

/// Print the canonical key of every input polygon, one per line.
#[derive(Debug, Args)]
pub struct NormalFormArgs {
    /// Input records (JSON Lines); `-` for stdin.
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(args: NormalFormArgs) -> CmdResult {
    let reader = open_input(&args.input).map_err(|e| fail(EXIT_IO, e))?;
    let records = read_records(reader).map_err(|e| fail(EXIT_BAD_INPUT, e))?;
    let polygons = records_to_polygons(&records).map_err(|e| fail(EXIT_BAD_INPUT, e))?;

    let mut out = open_output(args.out.as_ref()).map_err(|e| fail(EXIT_IO, e))?;
    for (_, key) in polygons {
        writeln!(out, "{key}").map_err(|e| fail(EXIT_IO, e.into()))?;
    }
    out.flush().map_err(|e| fail(EXIT_IO, e.into()))?;
    Ok(EXIT_OK)
}
