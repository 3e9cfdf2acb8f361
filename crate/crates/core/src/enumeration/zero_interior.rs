//! Classification of the finitely growable denominator-2 polygons with no
//! interior lattice points: the growing loop restricted to its ten minimal
//! polygons, discarding anything that acquires an interior point, with the
//! collinear cap of 8 half-integral points per non-integral line.

use crate::canonical::canonical_form;
use crate::polygon::RationalPolygon;

use super::classify::{run_growth, ClassificationDataset, DatasetEntry, GrowthStats};
use super::grow::{CollinearRule, GrowRules};

/// Scaled vertex lists (r = 2) of the ten minimal polygons.
const SEEDS: [&[(i64, i64)]; 10] = [
    &[(0, 0), (1, 0), (0, 1)],
    &[(1, 1), (2, 1), (1, 2)],
    &[(0, 0), (2, 0), (0, 1)],
    &[(0, 0), (2, 0), (0, 2)],
    &[(0, 0), (2, 0), (0, 2), (2, 2)],
    &[(0, 0), (2, 0), (0, 4)],
    &[(0, 0), (2, 0), (0, 4), (2, 2)],
    &[(0, 0), (2, 0), (0, 6)],
    &[(0, 0), (2, 0), (0, 6), (2, 2)],
    &[(0, 0), (4, 0), (0, 4)],
];

/// Index of `conv((0,0),(2,0),(0,2))`, which is never grown: every facet
/// holds a lattice point in its relative interior, so any growth adds an
/// interior lattice point.
const UNGROWN_SEED: usize = 9;

pub fn zero_interior_seeds() -> Vec<RationalPolygon> {
    SEEDS
        .iter()
        .map(|pts| RationalPolygon::new(2, pts.iter().copied()).unwrap())
        .collect()
}

/// The finitely growable denominator-2 polygons with zero interior points,
/// grown per seed at that seed's fixed size.
pub fn classify_zero_interior() -> ClassificationDataset {
    let mut entries: Vec<DatasetEntry> = Vec::new();
    let mut stats = GrowthStats::default();
    for (i, seed) in zero_interior_seeds().into_iter().enumerate() {
        debug_assert_eq!(seed.lattice_profile(1).1, 0);
        if i == UNGROWN_SEED {
            let key = canonical_form(&seed);
            let poly = key.to_polygon();
            entries.push(DatasetEntry {
                r_size: poly.r_size(),
                size: poly.size(),
                polygon: poly,
                key,
                seed: i,
            });
            continue;
        }
        let rules = GrowRules {
            target_size: seed.size(),
            allow_lattice_candidates: false,
            collinear: CollinearRule::Cap(8),
            discard_interior: true,
        };
        let (seed_entries, seed_stats) = run_growth(vec![(seed, i)], &rules);
        entries.extend(seed_entries);
        stats.children_generated += seed_stats.children_generated;
        stats.children_after_dedup += seed_stats.children_after_dedup;
    }
    let mut ds = ClassificationDataset { r: 2, k: None, entries, stats };
    ds.sort_entries();
    ds
}
