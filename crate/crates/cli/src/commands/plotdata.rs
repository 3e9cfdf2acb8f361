use std::io::Write;
use std::path::PathBuf;

use anyhow::anyhow;
use clap::Args;

use crate::record::read_records;

use super::{fail, open_input, open_output, CmdResult, EXIT_BAD_INPUT, EXIT_IO, EXIT_OK};

/// Emit the distinct `(b(2P), i(2P))` pairs of members with the given
/// `(b(P), i(P))`, as the two-column whitespace format of the figure data
/// files.
#[derive(Debug, Args)]
pub struct PlotdataArgs {
    /// Input records (JSON Lines, denominator 2); `-` for stdin.
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Boundary-point filter b(P).
    #[arg(long)]
    pub b1: u64,
    /// Interior-point filter i(P).
    #[arg(long)]
    pub i1: u64,
    /// Output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(args: PlotdataArgs) -> CmdResult {
    let reader = open_input(&args.input).map_err(|e| fail(EXIT_IO, e))?;
    let records = read_records(reader).map_err(|e| fail(EXIT_BAD_INPUT, e))?;

    let mut rows: Vec<(u64, u64)> = Vec::new();
    for (i, rec) in records.iter().enumerate() {
        let tuple = match (rec.b1, rec.i1, rec.b2, rec.i2) {
            (Some(b1), Some(i1), Some(b2), Some(i2)) => (b1, i1, b2, i2),
            _ => {
                // Fields missing: compute them from the polygon.
                let poly = rec
                    .to_polygon()
                    .map_err(|e| fail(EXIT_BAD_INPUT, anyhow!("record {}: {e}", i + 1)))?;
                if poly.denominator() != 2 {
                    return Err(fail(
                        EXIT_BAD_INPUT,
                        anyhow!("record {}: plotdata requires denominator 2", i + 1),
                    ));
                }
                let (b1, i1) = poly.lattice_profile(1);
                let (b2, i2) = poly.lattice_profile(2);
                (b1, i1, b2, i2)
            }
        };
        if tuple.0 == args.b1 && tuple.1 == args.i1 {
            rows.push((tuple.2, tuple.3));
        }
    }
    rows.sort_unstable();
    rows.dedup();

    let mut out = open_output(args.out.as_ref()).map_err(|e| fail(EXIT_IO, e))?;
    for (b2, i2) in rows {
        writeln!(out, "{b2} {i2}").map_err(|e| fail(EXIT_IO, e.into()))?;
    }
    out.flush().map_err(|e| fail(EXIT_IO, e.into()))?;
    Ok(EXIT_OK)
}
