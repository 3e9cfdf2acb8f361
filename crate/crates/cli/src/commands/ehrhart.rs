use std::io::Write;
use std::path::PathBuf;

use anyhow::anyhow;
use clap::Args;

use ratpoly::ehrhart::{ehrhart_tuple, quasi_polynomial};
use ratpoly::Rat;

use crate::record::{read_records, records_to_polygons};

use super::{fail, open_input, open_output, CmdResult, EXIT_BAD_INPUT, EXIT_IO, EXIT_OK};

/// Compute point-count tuples and/or Ehrhart quasi-polynomials for a
/// record stream.
#[derive(Debug, Args)]
pub struct EhrhartArgs {
    /// Input records (JSON Lines); `-` for stdin.
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Write `key,b1,i1,b2,i2` CSV rows here (denominator-2 records).
    #[arg(long)]
    pub tuples: Option<PathBuf>,
    /// Write `key,i,a2,a1,a0` quasi-polynomial rows here.
    #[arg(long)]
    pub quasi: Option<PathBuf>,
}

/// Exact rational as `p/q` with positive reduced denominator, plain `p`
/// for integers.
pub fn format_rat(x: Rat) -> String {
    if *x.denom() == 1 {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn run(args: EhrhartArgs) -> CmdResult {
    let reader = open_input(&args.input).map_err(|e| fail(EXIT_IO, e))?;
    let records = read_records(reader).map_err(|e| fail(EXIT_BAD_INPUT, e))?;
    let polygons = records_to_polygons(&records).map_err(|e| fail(EXIT_BAD_INPUT, e))?;

    if let Some(path) = &args.tuples {
        let mut out = open_output(Some(path)).map_err(|e| fail(EXIT_IO, e))?;
        for (i, (poly, key)) in polygons.iter().enumerate() {
            let t = ehrhart_tuple(poly).map_err(|e| {
                fail(EXIT_BAD_INPUT, anyhow!("record {}: {e}", i + 1))
            })?;
            writeln!(out, "{key},{},{},{},{}", t.b1, t.i1, t.b2, t.i2)
                .map_err(|e| fail(EXIT_IO, e.into()))?;
        }
        out.flush().map_err(|e| fail(EXIT_IO, e.into()))?;
    }

    if let Some(path) = &args.quasi {
        let mut out = open_output(Some(path)).map_err(|e| fail(EXIT_IO, e))?;
        for (poly, key) in &polygons {
            let q = quasi_polynomial(poly);
            for (i, &(a2, a1, a0)) in q.components().iter().enumerate() {
                writeln!(
                    out,
                    "{key},{i},{},{},{}",
                    format_rat(a2),
                    format_rat(a1),
                    format_rat(a0)
                )
                .map_err(|e| fail(EXIT_IO, e.into()))?;
            }
        }
        out.flush().map_err(|e| fail(EXIT_IO, e.into()))?;
    }
    Ok(EXIT_OK)
}
