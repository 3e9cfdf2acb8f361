//! JSON Lines records for polygon datasets.

use std::io::{BufRead, Write};

use anyhow::{anyhow, Context, Result};
use serde::{Deserialize, Serialize};

use ratpoly::canonical::canonical_form;
use ratpoly::enumeration::{ClassificationDataset, DatasetEntry};
use ratpoly::RationalPolygon;

/// One polygon per line: denominator, scaled CCW vertices of `rP`, and
/// optional point-count fields.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PolygonRecord {
    pub r: i64,
    pub verts: Vec<[i64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub size: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_size: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b1: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i1: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b2: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i2: Option<u64>,
}

impl PolygonRecord {
    pub fn bare(poly: &RationalPolygon) -> Self {
        PolygonRecord {
            r: poly.denominator(),
            verts: poly.vertices().iter().map(|v| [v.x, v.y]).collect(),
            size: None,
            r_size: None,
            b1: None,
            i1: None,
            b2: None,
            i2: None,
        }
    }

    /// Record with the point-count fields filled in; `b2`/`i2` (counts of
    /// the doubled polygon) are emitted for denominator 2 only.
    pub fn with_profile(entry: &DatasetEntry) -> Self {
        let poly = &entry.polygon;
        let (b1, i1) = poly.lattice_profile(1);
        let mut rec = PolygonRecord::bare(poly);
        rec.size = Some(entry.size);
        rec.r_size = Some(entry.r_size);
        rec.b1 = Some(b1);
        rec.i1 = Some(i1);
        if poly.denominator() == 2 {
            let (b2, i2) = poly.lattice_profile(2);
            rec.b2 = Some(b2);
            rec.i2 = Some(i2);
        }
        rec
    }

    pub fn to_polygon(&self) -> Result<RationalPolygon> {
        RationalPolygon::new(self.r, self.verts.iter().map(|&[x, y]| (x, y)))
            .map_err(|e| anyhow!("{e}"))
    }
}

/// Parses a record stream, reporting the 1-based line number of the first
/// malformed line.
pub fn read_records(reader: impl BufRead) -> Result<Vec<PolygonRecord>> {
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line.with_context(|| format!("line {}: read error", idx + 1))?;
        if line.trim().is_empty() {
            continue;
        }
        let rec: PolygonRecord = serde_json::from_str(&line)
            .with_context(|| format!("line {}: malformed polygon record", idx + 1))?;
        out.push(rec);
    }
    Ok(out)
}

pub fn write_records(mut writer: impl Write, records: &[PolygonRecord]) -> Result<()> {
    for rec in records {
        serde_json::to_writer(&mut writer, rec)?;
        writer.write_all(b"\n")?;
    }
    Ok(())
}

/// Records for a whole dataset, in its (r_size, key) order.
pub fn dataset_records(ds: &ClassificationDataset) -> Vec<PolygonRecord> {
    ds.entries.iter().map(PolygonRecord::with_profile).collect()
}

/// Parses records into polygons with their canonical keys, keeping line
/// association for error messages.
pub fn records_to_polygons(
    records: &[PolygonRecord],
) -> Result<Vec<(RationalPolygon, ratpoly::CanonicalKey)>> {
    records
        .iter()
        .enumerate()
        .map(|(i, rec)| {
            let poly = rec
                .to_polygon()
                .with_context(|| format!("record {}: invalid polygon", i + 1))?;
            let key = canonical_form(&poly);
            Ok((poly, key))
        })
        .collect()
}
