//! Penumbra membership: `pen(P, v) = v - cone(P - v)` is the affine cone of
//! points `x` for which adding `x` to `P` would capture `v`. Membership is
//! tested through the equivalent condition `v in conv(P, x)`.

use crate::point::{orient, ScaledPoint};
use crate::polygon::{convex_hull, RationalPolygon};

/// Whether `x` lies in the penumbra of `v` with respect to `P`; all points
/// in the scaled frame of `P`.
pub fn in_penumbra(poly: &RationalPolygon, v: ScaledPoint, x: ScaledPoint) -> bool {
    let mut pts = poly.vertices().to_vec();
    pts.push(x);
    let hull = convex_hull(&pts);
    debug_assert!(hull.len() >= 3);
    let n = hull.len();
    (0..n).all(|i| orient(hull[i], hull[(i + 1) % n], v) >= 0)
}

/// Exact interval `{t : base + t*dir in pen(P, apex)}` on a line, as
/// rational bounds (numerator, positive denominator). `None` means
/// unbounded on that side. Returns `None` overall when the intersection is
/// empty.
///
/// The penumbra is the affine cone with apex `apex` spanned by the
/// directions `apex - w` over vertices `w` of `P`; since `apex` lies
/// outside `P` the cone is pointed, so membership is a pair of half-plane
/// conditions against the extreme rays, each linear in `t`.
pub(crate) fn penumbra_interval_on_line(
    poly: &RationalPolygon,
    apex: ScaledPoint,
    base: ScaledPoint,
    dir: ScaledPoint,
) -> Option<(Option<(i128, i128)>, Option<(i128, i128)>)> {
    let gens: Vec<ScaledPoint> = poly.vertices().iter().map(|&w| apex - w).collect();
    // Extreme rays by pairwise cross comparisons; valid because the
    // directions span less than a half turn.
    let mut right = gens[0];
    let mut left = gens[0];
    for &g in &gens[1..] {
        if right.cross(g) < 0 {
            right = g;
        }
        if left.cross(g) > 0 {
            left = g;
        }
    }

    let y0 = base - apex;
    let mut lo: Option<(i128, i128)> = None;
    let mut hi: Option<(i128, i128)> = None;
    // cross(right, y0 + t*dir) >= 0 and cross(y0 + t*dir, left) >= 0.
    for (c0, c1) in [
        (right.cross(y0), right.cross(dir)),
        (-left.cross(y0), -left.cross(dir)),
    ] {
        match c1.cmp(&0) {
            std::cmp::Ordering::Greater => {
                // t >= -c0/c1
                let cand = (-c0, c1);
                if lo.is_none_or(|l| frac_less(l, cand)) {
                    lo = Some(cand);
                }
            }
            std::cmp::Ordering::Less => {
                // t <= c0/(-c1)
                let cand = (c0, -c1);
                if hi.is_none_or(|h| frac_less(cand, h)) {
                    hi = Some(cand);
                }
            }
            std::cmp::Ordering::Equal => {
                if c0 < 0 {
                    return None;
                }
            }
        }
    }
    if let (Some(l), Some(h)) = (lo, hi) {
        if frac_less(h, l) {
            return None;
        }
    }
    Some((lo, hi))
}

fn frac_less(a: (i128, i128), b: (i128, i128)) -> bool {
    debug_assert!(a.1 > 0 && b.1 > 0);
    a.0 * b.1 < b.0 * a.1
}

/// Largest integer strictly below `n/d` (`d > 0`).
pub(crate) fn floor_strict(n: i128, d: i128) -> i128 {
    if n.rem_euclid(d) == 0 {
        n / d - 1
    } else {
        n.div_euclid(d)
    }
}

/// Smallest integer strictly above `n/d` (`d > 0`).
pub(crate) fn ceil_strict(n: i128, d: i128) -> i128 {
    if n.rem_euclid(d) == 0 {
        n / d + 1
    } else {
        n.div_euclid(d) + 1
    }
}
