//! The main classification loop: grow every minimal polygon, stratified by
//! `(1/r)Z^2`-size, separating infinitely and finitely growable frontiers,
//! and stream each finitely growable stratum into the result.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::canonical::{canonical_form, CanonicalKey};
use crate::error::{Error, Result};
use crate::polygon::RationalPolygon;

use super::grow::{grow_children, is_infinitely_growable, CollinearRule, GrowRules};
use super::minimal::{lattice_polygons_of_size, minimal_polygons};

/// One classified polygon: the canonical representative of its class with
/// provenance metadata.
#[derive(Debug, Clone)]
pub struct DatasetEntry {
    pub polygon: RationalPolygon,
    pub key: CanonicalKey,
    pub r_size: u64,
    pub size: u64,
    /// Index of the minimal polygon this class was grown from.
    pub seed: usize,
}

/// Dedup statistics of a growing run: how many children the frontier
/// expansions produced in total versus how many distinct classes survived
/// the per-stratum merge.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GrowthStats {
    pub children_generated: u64,
    pub children_after_dedup: u64,
}

impl GrowthStats {
    fn absorb(&mut self, other: GrowthStats) {
        self.children_generated += other.children_generated;
        self.children_after_dedup += other.children_after_dedup;
    }
}

/// The deduplicated set of finitely growable polygons for one run.
#[derive(Debug, Clone)]
pub struct ClassificationDataset {
    pub r: i64,
    /// Fixed size for `classify(r, k)`; `None` for the zero-interior run,
    /// whose members keep their per-seed sizes.
    pub k: Option<u64>,
    /// Entries sorted by `(r_size, key)`.
    pub entries: Vec<DatasetEntry>,
    pub stats: GrowthStats,
}

impl ClassificationDataset {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(r_size, count)` pairs in increasing r-size order.
    pub fn strata_counts(&self) -> Vec<(u64, u64)> {
        let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
        for e in &self.entries {
            *counts.entry(e.r_size).or_insert(0) += 1;
        }
        counts.into_iter().collect()
    }

    pub(crate) fn sort_entries(&mut self) {
        self.entries
            .sort_by(|a, b| (a.r_size, &a.key).cmp(&(b.r_size, &b.key)));
    }
}

#[derive(Clone)]
struct Member {
    key: CanonicalKey,
    poly: RationalPolygon,
    seed: usize,
}

/// Runs the stratified growing loop from the given seeds. Both frontiers
/// are expanded in parallel per stratum; merging is deterministic (maps
/// keyed by canonical key, minimal seed id on collision), so the result is
/// independent of the thread count.
pub(crate) fn run_growth(
    seeds: Vec<(RationalPolygon, usize)>,
    rules: &GrowRules,
) -> (Vec<DatasetEntry>, GrowthStats) {
    let mut frontier_inf: Vec<Member> = Vec::new();
    let mut frontier_fin: Vec<Member> = Vec::new();
    for (poly, seed) in seeds {
        let key = canonical_form(&poly);
        let poly = key.to_polygon();
        let member = Member { key, poly, seed };
        if is_infinitely_growable(&member.poly).expect("classification seeds have r >= 2") {
            frontier_inf.push(member);
        } else {
            frontier_fin.push(member);
        }
    }

    let mut out: Vec<DatasetEntry> = Vec::new();
    let mut stats = GrowthStats::default();
    while !frontier_inf.is_empty() || !frontier_fin.is_empty() {
        let expand = |members: &[Member], known_fin: bool| -> Vec<(Member, bool)> {
            members
                .par_iter()
                .map(|m| {
                    grow_children(&m.poly, rules, known_fin)
                        .into_iter()
                        .map(|c| {
                            (
                                Member { key: c.key, poly: c.poly, seed: m.seed },
                                c.finite,
                            )
                        })
                        .collect::<Vec<_>>()
                })
                .collect::<Vec<_>>()
                .into_iter()
                .flatten()
                .collect()
        };

        let mut next_inf: BTreeMap<CanonicalKey, Member> = BTreeMap::new();
        let mut next_fin: BTreeMap<CanonicalKey, Member> = BTreeMap::new();
        for (member, finite) in expand(&frontier_inf, false)
            .into_iter()
            .chain(expand(&frontier_fin, true))
        {
            stats.children_generated += 1;
            let map = if finite { &mut next_fin } else { &mut next_inf };
            map.entry(member.key.clone())
                .and_modify(|m| m.seed = m.seed.min(member.seed))
                .or_insert(member);
        }
        stats.children_after_dedup += (next_inf.len() + next_fin.len()) as u64;

        out.extend(frontier_fin.drain(..).map(|m| DatasetEntry {
            r_size: m.poly.r_size(),
            size: m.poly.size(),
            polygon: m.poly,
            key: m.key,
            seed: m.seed,
        }));
        frontier_inf = next_inf.into_values().collect();
        frontier_fin = next_fin.into_values().collect();
    }
    (out, stats)
}

/// The complete set of finitely growable denominator-`r` size-`k` polygons
/// up to equivalence.
///
/// For `r = 1` (where every polygon counts as finitely growable) this
/// delegates to the lattice-polygon enumerator and requires `k >= 3`. For
/// `r >= 2` the minimal polygons of size 0 are grown jointly with shared
/// deduplication, while for `k >= 1` each minimal polygon is grown
/// independently: a polygon of positive size determines its minimal
/// polygon, so the runs cannot overlap.
pub fn classify(r: i64, k: u64) -> Result<ClassificationDataset> {
    if r < 1 {
        return Err(Error::InvalidParameters(format!(
            "denominator must be positive, got {r}"
        )));
    }
    if r == 1 {
        if k < 3 {
            return Err(Error::InvalidParameters(format!(
                "r = 1 requires k >= 3, got k = {k}"
            )));
        }
        let mut entries: Vec<DatasetEntry> = lattice_polygons_of_size(k)?
            .into_iter()
            .map(|p| {
                let key = canonical_form(&p);
                let poly = key.to_polygon();
                DatasetEntry {
                    r_size: poly.r_size(),
                    size: poly.size(),
                    polygon: poly,
                    key,
                    seed: 0,
                }
            })
            .collect();
        // Lattice polygons of fixed size are their own minimal polygons.
        let mut ds = ClassificationDataset {
            r,
            k: Some(k),
            entries: Vec::new(),
            stats: GrowthStats::default(),
        };
        entries.sort_by(|a, b| (a.r_size, &a.key).cmp(&(b.r_size, &b.key)));
        for (i, e) in entries.iter_mut().enumerate() {
            e.seed = i;
        }
        ds.entries = entries;
        return Ok(ds);
    }

    let rules = GrowRules {
        target_size: k,
        allow_lattice_candidates: false,
        collinear: CollinearRule::Generic { k },
        discard_interior: false,
    };
    let seeds = minimal_polygons(r, k)?;
    let mut stats = GrowthStats::default();
    let mut entries = if k == 0 {
        let (entries, s) =
            run_growth(seeds.into_iter().enumerate().map(|(i, s)| (s, i)).collect(), &rules);
        stats.absorb(s);
        entries
    } else {
        let mut all = Vec::new();
        for (i, seed) in seeds.into_iter().enumerate() {
            let (entries, s) = run_growth(vec![(seed, i)], &rules);
            stats.absorb(s);
            all.extend(entries);
        }
        all
    };
    debug_assert!({
        let mut keys: Vec<_> = entries.iter().map(|e| &e.key).collect();
        keys.sort();
        keys.windows(2).all(|w| w[0] != w[1])
    });
    entries.sort_by(|a, b| (a.r_size, &a.key).cmp(&(b.r_size, &b.key)));
    Ok(ClassificationDataset { r, k: Some(k), entries, stats })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_counts_for_r1() {
        assert_eq!(classify(1, 3).unwrap().len(), 1);
        assert_eq!(classify(1, 4).unwrap().len(), 3);
        assert_eq!(classify(1, 5).unwrap().len(), 6);
        assert!(classify(1, 2).is_err());
    }

    #[test]
    fn table_count_r2_k0() {
        let ds = classify(2, 0).unwrap();
        assert_eq!(ds.len(), 1);
        assert_eq!(ds.entries[0].size, 0);
        assert_eq!(ds.r, 2);
    }

    #[test]
    fn table_count_r2_k1() {
        let ds = classify(2, 1).unwrap();
        assert_eq!(ds.len(), 106);
        for e in &ds.entries {
            assert_eq!(e.size, 1);
            assert_eq!(e.polygon.denominator(), 2);
            assert!(!is_infinitely_growable(&e.polygon).unwrap());
        }
    }

    #[test]
    fn classify_is_deterministic() {
        let a = classify(2, 1).unwrap();
        let b = classify(2, 1).unwrap();
        let keys_a: Vec<_> = a.entries.iter().map(|e| e.key.clone()).collect();
        let keys_b: Vec<_> = b.entries.iter().map(|e| e.key.clone()).collect();
        assert_eq!(keys_a, keys_b);
    }
}
