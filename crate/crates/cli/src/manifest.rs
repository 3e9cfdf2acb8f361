//! Run manifests: machine-readable summaries written to stderr.

use serde::Serialize;

use ratpoly::enumeration::ClassificationDataset;

#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: serde_json::Value,
    /// `(r_size, count)` pairs.
    pub strata: Vec<(u64, u64)>,
    pub total: u64,
    pub wall_ms: u128,
    pub dedup: DedupStats,
}

#[derive(Debug, Serialize)]
pub struct DedupStats {
    pub children_generated: u64,
    pub children_after_dedup: u64,
}

impl RunManifest {
    pub fn for_dataset(
        command: &str,
        parameters: serde_json::Value,
        ds: &ClassificationDataset,
        wall_ms: u128,
    ) -> Self {
        RunManifest {
            command: command.to_string(),
            parameters,
            strata: ds.strata_counts(),
            total: ds.len() as u64,
            wall_ms,
            dedup: DedupStats {
                children_generated: ds.stats.children_generated,
                children_after_dedup: ds.stats.children_after_dedup,
            },
        }
    }

    pub fn emit_to_stderr(&self) {
        eprintln!("{}", serde_json::to_string(self).expect("manifest serialises"));
    }
}
