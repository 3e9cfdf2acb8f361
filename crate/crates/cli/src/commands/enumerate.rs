use std::path::PathBuf;
use std::time::Instant;

use anyhow::anyhow;
use clap::Args;

use ratpoly::enumeration::{classify, classify_zero_interior};
use ratpoly::Error;

use crate::manifest::RunManifest;
use crate::record::{dataset_records, write_records};

use super::{fail, open_output, CmdResult, EXIT_BAD_INPUT, EXIT_IO, EXIT_OK};

/// Classify the finitely growable polygons for a denominator and size.
#[derive(Debug, Args)]
pub struct EnumerateArgs {
    /// Denominator r (required unless --zero-interior).
    #[arg(short = 'r', long)]
    pub r: Option<i64>,
    /// Size k: the number of lattice points (required unless --zero-interior).
    #[arg(short = 'k', long)]
    pub k: Option<u64>,
    /// Classify the denominator-2 polygons with zero interior lattice
    /// points instead (forces r = 2, ignores -k).
    #[arg(long)]
    pub zero_interior: bool,
    /// Output file (JSON Lines); stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(args: EnumerateArgs) -> CmdResult {
    let start = Instant::now();
    let (ds, params) = if args.zero_interior {
        (
            classify_zero_interior(),
            serde_json::json!({"zero_interior": true, "r": 2}),
        )
    } else {
        let (Some(r), Some(k)) = (args.r, args.k) else {
            return Err(fail(
                EXIT_BAD_INPUT,
                anyhow!("-r and -k are required without --zero-interior"),
            ));
        };
        let ds = classify(r, k).map_err(|e| match e {
            Error::InvalidParameters(_) => fail(EXIT_BAD_INPUT, anyhow!("{e}")),
            other => fail(EXIT_IO, anyhow!("{other}")),
        })?;
        (ds, serde_json::json!({"r": r, "k": k}))
    };

    let records = dataset_records(&ds);
    let mut out = open_output(args.out.as_ref()).map_err(|e| fail(EXIT_IO, e))?;
    write_records(&mut out, &records).map_err(|e| fail(EXIT_IO, e))?;
    out.flush().map_err(|e| fail(EXIT_IO, e.into()))?;

    RunManifest::for_dataset("enumerate", params, &ds, start.elapsed().as_millis())
        .emit_to_stderr();
    Ok(EXIT_OK)
}
