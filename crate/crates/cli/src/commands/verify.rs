use std::io::Write;
use std::path::PathBuf;

use anyhow::anyhow;
use clap::Args;

use ratpoly::canonical::canonical_form;
use ratpoly::ehrhart::verify_dataset;
use ratpoly::enumeration::{ClassificationDataset, DatasetEntry, GrowthStats};

use crate::record::read_records;

use super::{
    fail, open_input, open_output, CmdResult, EXIT_BAD_INPUT, EXIT_BOUND_VIOLATION, EXIT_IO,
    EXIT_OK,
};

/// Check every record against the tuple conditions and the proven bounds.
#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Input records (JSON Lines, denominator 2); `-` for stdin.
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Report file; stdout when omitted.
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Treat the dataset as the zero-interior classification (annotation
    /// only; the same checks run either way).
    #[arg(long)]
    pub zero_interior: bool,
}

pub fn run(args: VerifyArgs) -> CmdResult {
    let reader = open_input(&args.input).map_err(|e| fail(EXIT_IO, e))?;
    let records = read_records(reader).map_err(|e| fail(EXIT_BAD_INPUT, e))?;

    let mut entries = Vec::with_capacity(records.len());
    for (i, rec) in records.iter().enumerate() {
        if rec.r != 2 {
            return Err(fail(
                EXIT_BAD_INPUT,
                anyhow!("record {}: verify requires denominator 2, got {}", i + 1, rec.r),
            ));
        }
        let poly = rec
            .to_polygon()
            .map_err(|e| fail(EXIT_BAD_INPUT, anyhow!("record {}: {e}", i + 1)))?;
        let key = canonical_form(&poly);
        entries.push(DatasetEntry {
            r_size: poly.r_size(),
            size: poly.size(),
            polygon: poly,
            key,
            seed: 0,
        });
    }
    let ds = ClassificationDataset { r: 2, k: None, entries, stats: GrowthStats::default() };
    let report = verify_dataset(&ds, args.zero_interior)
        .map_err(|e| fail(EXIT_BAD_INPUT, anyhow!("{e}")))?;

    let mut out = open_output(args.report.as_ref()).map_err(|e| fail(EXIT_IO, e))?;
    let mut emit = |line: String| -> Result<(), super::Failure> {
        writeln!(out, "{line}").map_err(|e| fail(EXIT_IO, e.into()))
    };
    emit(format!("total {}", report.total))?;
    for (label, count) in ["a", "b", "c", "d"].iter().zip(report.condition_counts) {
        emit(format!("condition {label} {count}"))?;
    }
    emit(format!("exceptions {}", report.exceptions.len()))?;
    for e in &report.exceptions {
        emit(format!(
            "exception {} tuple ({},{},{},{}) violates [{}]",
            e.key,
            e.tuple.b1,
            e.tuple.i1,
            e.tuple.b2,
            e.tuple.i2,
            e.violated_inequalities.join("; ")
        ))?;
    }
    emit(format!(
        "unconditional_violations {}",
        report.unconditional_violations.len()
    ))?;
    for v in &report.unconditional_violations {
        emit(format!("violation {} breaks {}", v.key, v.bound))?;
    }
    emit(format!("diagonal_violations {}", report.diagonal_violations.len()))?;
    for v in &report.diagonal_violations {
        emit(format!("violation {} breaks {}", v.key, v.bound))?;
    }
    out.flush().map_err(|e| fail(EXIT_IO, e.into()))?;

    if report.unconditional_violations.is_empty() {
        Ok(EXIT_OK)
    } else {
        Ok(EXIT_BOUND_VIOLATION)
    }
}
