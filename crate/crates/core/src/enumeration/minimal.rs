//! Minimal polygons: the seeds of the growing algorithm.
//!
//! For size 0 these are the triangles `(1/r)(Δ + v)` indexed by triples
//! `(a1, a2, a3)`; for size 1 the single triangle `T_{r,1}`; for larger
//! sizes the lattice polygons of that size together with the thin triangle
//! `T_{r,k}`.

use std::collections::BTreeMap;

use crate::canonical::{canonical_form, CanonicalKey};
use crate::error::{Error, Result};
use crate::point::ScaledPoint;
use crate::polygon::RationalPolygon;

use super::grow::{grow_children, CollinearRule, GrowRules};

fn shifted_unit_triangle(r: i64, a1: i64, a2: i64) -> RationalPolygon {
    RationalPolygon::new(r, [(a1, a2), (a1 + 1, a2), (a1, a2 + 1)])
        .expect("unit triangle is two-dimensional")
}

/// Minimal size-zero polygons of denominator `r`, one triangle per triple
/// `(a1, a2, a3)` with `0 <= a1 <= a2 <= a3 <= r-1` satisfying either
/// `a1+a2+a3 = r-1` with `a1+a2 > 0`, or `a1+a2+a3 = 2r-1` with
/// `a1+a2 >= r`. Empty for `r = 1`.
pub fn minimal_size_zero(r: i64) -> Vec<RationalPolygon> {
    let mut out = Vec::new();
    for a1 in 0..r {
        for a2 in a1..r {
            for a3 in a2..r {
                let sum = a1 + a2 + a3;
                let cond1 = sum == r - 1 && a1 + a2 > 0;
                let cond2 = sum == 2 * r - 1 && a1 + a2 >= r;
                if cond1 || cond2 {
                    let tri = shifted_unit_triangle(r, a1, a2);
                    debug_assert_eq!(tri.size(), 0);
                    out.push(tri);
                }
            }
        }
    }
    out
}

/// Independent route for the same classification: enumerate
/// `(1/r)(Δ + v)` over `v` in `[0, r-1]^2`, keep the size-zero ones and
/// deduplicate by canonical key. Returned sorted by key.
pub fn minimal_size_zero_by_filter(r: i64) -> Vec<RationalPolygon> {
    let mut seen: BTreeMap<CanonicalKey, RationalPolygon> = BTreeMap::new();
    for a1 in 0..r {
        for a2 in 0..r {
            let tri = shifted_unit_triangle(r, a1, a2);
            if tri.size() == 0 {
                seen.entry(canonical_form(&tri)).or_insert(tri);
            }
        }
    }
    seen.into_values().collect()
}

/// All lattice polygons with exactly `k` lattice points, up to equivalence,
/// by size-stratified growing: each stratum is grown by one lattice point
/// on adjacent hyperplanes, and the one-row triangle
/// `conv((0,0),(s-1,0),(0,1))` is injected to cover chains whose
/// predecessor degenerates to a segment.
pub fn lattice_polygons_of_size(k: u64) -> Result<Vec<RationalPolygon>> {
    if k < 3 {
        return Err(Error::InvalidParameters(format!(
            "lattice polygons need at least 3 lattice points, got {k}"
        )));
    }
    let unit = RationalPolygon::new(1, [(0, 0), (1, 0), (0, 1)]).unwrap();
    let mut current: BTreeMap<CanonicalKey, RationalPolygon> = BTreeMap::new();
    current.insert(canonical_form(&unit), unit);
    for s in 3..k {
        let target = s + 1;
        let rules = GrowRules {
            target_size: target,
            allow_lattice_candidates: true,
            collinear: CollinearRule::None,
            discard_interior: false,
        };
        let mut next: BTreeMap<CanonicalKey, RationalPolygon> = BTreeMap::new();
        for poly in current.values() {
            for child in grow_children(poly, &rules, true) {
                next.entry(child.key).or_insert(child.poly);
            }
        }
        let row = RationalPolygon::new(1, [(0, 0), (target as i64 - 2, 0), (0, 1)]).unwrap();
        debug_assert_eq!(row.size(), target);
        next.entry(canonical_form(&row)).or_insert(row);
        current = next;
    }
    Ok(current.into_values().collect())
}

/// The minimal polygons of denominator `r >= 2` and size `k`.
pub fn minimal_polygons(r: i64, k: u64) -> Result<Vec<RationalPolygon>> {
    if r < 2 {
        return Err(Error::InvalidParameters(format!(
            "minimal_polygons requires r >= 2, got {r}"
        )));
    }
    match k {
        0 => Ok(minimal_size_zero(r)),
        1 => Ok(vec![RationalPolygon::new(r, [(0, 0), (1, 0), (0, 1)]).unwrap()]),
        _ => {
            let mut seeds = Vec::new();
            if k >= 3 {
                for lattice in lattice_polygons_of_size(k)? {
                    let scaled: Vec<ScaledPoint> =
                        lattice.vertices().iter().map(|&v| v * r).collect();
                    seeds.push(RationalPolygon::new(r, scaled).unwrap());
                }
            }
            // The thin triangle T_{r,k} = conv((0,0),(k-1,0),(0,1/r)).
            let thin =
                RationalPolygon::new(r, [(0, 0), (r * (k as i64 - 1), 0), (0, 1)]).unwrap();
            debug_assert_eq!(thin.size(), k);
            seeds.push(thin);
            Ok(seeds)
        }
    }
}
