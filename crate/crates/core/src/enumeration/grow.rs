//! One growing step: all ways to extend a polygon by exactly one point of
//! `(1/r)Z^2` on a hyperplane adjacent to one of its facets, without
//! changing the number of lattice points.

use std::collections::BTreeMap;
use std::collections::HashMap;

use crate::canonical::{canonical_form, CanonicalKey};
use crate::error::{Error, Result};
use crate::penumbra::{ceil_strict, floor_strict, in_penumbra, penumbra_interval_on_line};
use crate::point::{extended_gcd, ScaledPoint};
use crate::polygon::RationalPolygon;
use crate::width::directions_within;

/// Pruning rule for collinear `(1/r)Z^2` points on lines with non-integral
/// offset. Polygons that violate the rule are subsets of no maximal
/// polygon and are dropped together with all their descendants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum CollinearRule {
    /// Prune when a line holds at least `r(r-h+1)(k+1)` points.
    Generic { k: u64 },
    /// Prune when a line holds more than `cap` points.
    Cap(u64),
    /// No pruning (the r = 1 enumerator; no non-integral lines exist).
    None,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct GrowRules {
    /// Required `|Q ∩ Z^2|` of every kept polygon.
    pub target_size: u64,
    /// Admit candidates that are lattice points (the r = 1 enumerator
    /// grows by one lattice point at a time).
    pub allow_lattice_candidates: bool,
    pub collinear: CollinearRule,
    /// Drop polygons with interior lattice points (zero-interior variant).
    pub discard_interior: bool,
}

/// A deduplicated child polygon together with its growability status.
#[derive(Debug, Clone)]
pub(crate) struct GrownChild {
    pub key: CanonicalKey,
    pub poly: RationalPolygon,
    pub finite: bool,
}

/// Whether the polygon is equivalent to a subset of the strip
/// `[0,1] x R`. Defined for denominators `r >= 2`; at `r = 1` growability
/// has no meaning for this pipeline and calling this is a contract error.
pub fn is_infinitely_growable(poly: &RationalPolygon) -> Result<bool> {
    let r = poly.denominator();
    if r < 2 {
        return Err(Error::Contract(
            "is_infinitely_growable is defined for denominators r >= 2".into(),
        ));
    }
    let r = r as i128;
    // Width at most 1 plus the slab condition: the extent must fit between
    // consecutive integral hyperplanes after an integral shift.
    Ok(directions_within(poly, r)
        .into_iter()
        .any(|(_, mn, mx)| mn.div_euclid(r) * r + r >= mx))
}

/// Candidate growth points on the hyperplanes adjacent to each facet,
/// excluding lattice points and everything inside the two penumbra cones
/// of the facet's flanking points. This is the admissible set of the
/// growing step before the size filters.
pub fn grow_candidates(poly: &RationalPolygon) -> Vec<ScaledPoint> {
    candidate_points(poly, false)
}

pub(crate) fn candidate_points(poly: &RationalPolygon, allow_lattice: bool) -> Vec<ScaledPoint> {
    let r = poly.denominator();
    let mut out = Vec::new();
    for (a, b) in poly.edges() {
        let d = (b - a).primitive();
        let u = d.rotate_cw(); // primitive outward normal of a CCW edge
        // A base point on the adjacent line u.x = h + 1.
        let (g, s, t) = extended_gcd(u.x, u.y);
        debug_assert_eq!(g, 1);
        let base = a + ScaledPoint::new(s, t);
        // Nearest scaled-lattice points on the facet line beyond each end.
        let x1 = b + d;
        let x2 = a - d;

        // pen(P, x1) meets the adjacent line in a ray towards +d, and
        // pen(P, x2) in a ray towards -d; the admissible window is the gap.
        let (lo1, hi1) = penumbra_interval_on_line(poly, x1, base, d)
            .expect("pen(P, x1) meets the adjacent line");
        debug_assert!(hi1.is_none());
        let (lo2, hi2) = penumbra_interval_on_line(poly, x2, base, d)
            .expect("pen(P, x2) meets the adjacent line");
        debug_assert!(lo2.is_none());
        let t_hi = floor_strict(lo1.unwrap().0, lo1.unwrap().1);
        let t_lo = ceil_strict(hi2.unwrap().0, hi2.unwrap().1);

        for t in t_lo..=t_hi {
            let v = base + d * (t as i64);
            if !allow_lattice && v.x.rem_euclid(r) == 0 && v.y.rem_euclid(r) == 0 {
                continue;
            }
            if in_penumbra(poly, x1, v) || in_penumbra(poly, x2, v) {
                continue;
            }
            out.push(v);
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Collinear pruning, restricted to lines through the newly added point:
/// a violation that appeared with this growth step must involve it.
fn collinear_ok_through(child: &RationalPolygon, v: ScaledPoint, rule: CollinearRule) -> bool {
    let (cap_exclusive, k) = match rule {
        CollinearRule::None => return true,
        CollinearRule::Cap(cap) => (Some(cap), 0),
        CollinearRule::Generic { k } => (None, k),
    };
    let r = child.denominator();
    if r == 1 {
        return true;
    }
    let mut counts: HashMap<ScaledPoint, u64> = HashMap::new();
    for w in child.contained_scaled_points() {
        if w == v {
            continue;
        }
        let mut d = (w - v).primitive();
        if d.x < 0 || (d.x == 0 && d.y < 0) {
            d = -d;
        }
        *counts.entry(d).or_insert(0) += 1;
    }
    for (d, cnt) in counts {
        let u = d.rotate_cw();
        let c = u.dot(v);
        let res = c.rem_euclid(r as i128) as i64;
        if res == 0 {
            continue; // integral line, exempt
        }
        let points_on_line = cnt + 1;
        let violated = match cap_exclusive {
            Some(cap) => points_on_line > cap,
            None => {
                let h = res.min(r - res) as u64;
                points_on_line >= (r as u64) * (r as u64 - h + 1) * (k + 1)
            }
        };
        if violated {
            return false;
        }
    }
    true
}

/// Full collinear bound over every line spanned by two contained
/// `(1/r)Z^2` points, at the generic threshold `r(r-h+1)(k+1)`.
pub fn collinear_bound_ok(poly: &RationalPolygon, k: u64) -> bool {
    let r = poly.denominator();
    if r == 1 {
        return true;
    }
    let pts = poly.contained_scaled_points();
    let mut lines: BTreeMap<(ScaledPoint, i128), u64> = BTreeMap::new();
    for (i, &p) in pts.iter().enumerate() {
        for &q in &pts[i + 1..] {
            let mut d = (q - p).primitive();
            if d.x < 0 || (d.x == 0 && d.y < 0) {
                d = -d;
            }
            let u = d.rotate_cw();
            lines.entry((u, u.dot(p))).or_insert(0);
        }
    }
    for (&(u, c), count) in lines.iter_mut() {
        *count = pts.iter().filter(|&&p| u.dot(p) == c).count() as u64;
        let res = c.rem_euclid(r as i128) as i64;
        if res == 0 {
            continue;
        }
        let h = res.min(r - res) as u64;
        if *count >= (r as u64) * (r as u64 - h + 1) * (k + 1) {
            return false;
        }
    }
    true
}

/// Grows `parent` by one scaled-lattice point in every admissible way,
/// keeping polygons with unchanged size and exactly one extra
/// `(1/r)Z^2` point, deduplicated by canonical key. Children of a polygon
/// already known to be finitely growable inherit that status without
/// re-testing.
pub(crate) fn grow_children(
    parent: &RationalPolygon,
    rules: &GrowRules,
    parent_known_finite: bool,
) -> Vec<GrownChild> {
    let r = parent.denominator();
    let target_r_size = parent.r_size() + 1;
    let mut dedup: BTreeMap<CanonicalKey, GrownChild> = BTreeMap::new();
    for v in candidate_points(parent, rules.allow_lattice_candidates) {
        let mut pts = parent.vertices().to_vec();
        pts.push(v);
        let child = RationalPolygon::new(r, pts).expect("adding an outside point keeps dimension");
        if child.r_size() != target_r_size {
            continue;
        }
        if child.size() != rules.target_size {
            continue;
        }
        if rules.discard_interior && child.lattice_profile(1).1 > 0 {
            continue;
        }
        if !collinear_ok_through(&child, v, rules.collinear) {
            continue;
        }
        let key = canonical_form(&child);
        if dedup.contains_key(&key) {
            continue;
        }
        let poly = key.to_polygon();
        let finite = parent_known_finite
            || !is_infinitely_growable(&poly).expect("growable children have r >= 2");
        dedup.insert(key.clone(), GrownChild { key, poly, finite });
    }
    dedup.into_values().collect()
}

/// One growing step as a public operation: children partitioned into
/// (infinitely growable, finitely growable).
pub fn grow_step(
    parent: &RationalPolygon,
    k: u64,
) -> (Vec<RationalPolygon>, Vec<RationalPolygon>) {
    debug_assert_eq!(parent.size(), k);
    let rules = GrowRules {
        target_size: k,
        allow_lattice_candidates: false,
        collinear: CollinearRule::Generic { k },
        discard_interior: false,
    };
    let mut inf = Vec::new();
    let mut fin = Vec::new();
    for child in grow_children(parent, &rules, false) {
        if child.finite {
            fin.push(child.poly);
        } else {
            inf.push(child.poly);
        }
    }
    (inf, fin)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(r: i64, pts: &[(i64, i64)]) -> RationalPolygon {
        RationalPolygon::new(r, pts.iter().copied()).unwrap()
    }

    #[test]
    fn growable_strip_examples() {
        assert!(is_infinitely_growable(&poly(2, &[(0, 0), (1, 0), (0, 1)])).unwrap());
        assert!(is_infinitely_growable(&poly(2, &[(1, 1), (2, 1), (1, 2)])).unwrap());
        assert!(!is_infinitely_growable(&poly(2, &[(0, 0), (3, 0), (0, 3)])).unwrap());
        assert!(is_infinitely_growable(&poly(1, &[(0, 0), (1, 0), (0, 1)])).is_err());
    }

    #[test]
    fn growable_needs_integral_slab() {
        // Width 1 around x = -1/2..1/2 cannot be shifted into [0,1].
        let p = poly(2, &[(-1, 0), (1, 0), (0, 3)]);
        assert!(!is_infinitely_growable(&p).unwrap());
    }

    #[test]
    fn candidates_on_bottom_facet_of_t21() {
        let p = poly(2, &[(0, 0), (1, 0), (0, 1)]);
        let cands = grow_candidates(&p);
        // The five points on y = -1 from the bottom facet.
        for t in -1..=3i64 {
            assert!(
                cands.contains(&ScaledPoint::new(t, -1)),
                "missing candidate ({t}, -1)"
            );
        }
        // The mirror facet contributes the mirrored set.
        for t in -1..=3i64 {
            assert!(cands.contains(&ScaledPoint::new(-1, t)));
        }
        // One step further out is inside a penumbra.
        assert!(!cands.contains(&ScaledPoint::new(4, -1)));
        assert!(!cands.contains(&ScaledPoint::new(-2, -1)));
    }

    #[test]
    fn unit_square_bottom_candidates() {
        let p = poly(1, &[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let cands = candidate_points(&p, true);
        for t in -1..=2i64 {
            assert!(cands.contains(&ScaledPoint::new(t, -1)));
        }
        assert!(!cands.contains(&ScaledPoint::new(3, -1)));
        assert!(!cands.contains(&ScaledPoint::new(-2, -1)));
    }

    #[test]
    fn grow_step_keeps_one_new_half_point() {
        let p = poly(2, &[(0, 0), (1, 0), (0, 1)]);
        let (inf, fin) = grow_step(&p, 1);
        let all: Vec<_> = inf.iter().chain(fin.iter()).collect();
        assert!(!all.is_empty());
        for q in &all {
            assert_eq!(q.size(), 1);
            assert_eq!(q.r_size(), 4);
        }
        // The grown triangle conv((0,0),(3,-1),(0,1)) appears.
        let grown = poly(2, &[(0, 0), (3, -1), (0, 1)]);
        let key = canonical_form(&grown);
        assert!(all.iter().any(|q| canonical_form(q) == key));
    }

    #[test]
    fn grow_step_at_r1_is_empty() {
        let p = poly(1, &[(0, 0), (1, 0), (0, 1)]);
        let (inf, fin) = grow_step(&p, 3);
        assert!(inf.is_empty() && fin.is_empty());
    }

    #[test]
    fn collinear_bound_examples() {
        // Eight half-integral points on y = 1/2 against threshold 4 (r=2, k=0).
        let p = poly(2, &[(0, 1), (7, 1), (0, 0)]);
        assert!(!collinear_bound_ok(&p, 0));
        assert!(collinear_bound_ok(&poly(2, &[(0, 0), (1, 0), (0, 1)]), 1));
    }
}
