//! Lattice width: minimal extent of `u . P` over primitive dual vectors.
//!
//! Minimisation is exact: any `u` whose width does not exceed a seed bound
//! `w0` satisfies `|u . z| <= r*w0` for every edge vector `z` of `rP`, so
//! two independent edge vectors confine the search to a bounded
//! parallelogram of integer dual vectors.

use crate::error::{Error, Result};
use crate::point::{extended_gcd, Mat2, ScaledPoint};
use crate::polygon::{Rat, RationalPolygon};

/// Width of `P` with respect to the dual vector `u`, as an exact rational.
pub fn width_along(poly: &RationalPolygon, u: ScaledPoint) -> Rat {
    assert!(!u.is_zero(), "dual vector must be nonzero");
    let (mn, mx) = extent(poly.vertices(), u);
    Rat::new((mx - mn) as i64, poly.denominator())
}

fn extent(verts: &[ScaledPoint], u: ScaledPoint) -> (i128, i128) {
    let mut mn = i128::MAX;
    let mut mx = i128::MIN;
    for &v in verts {
        let d = u.dot(v);
        mn = mn.min(d);
        mx = mx.max(d);
    }
    (mn, mx)
}

/// Sign-canonical representative of the pair {u, -u}.
fn canonical_sign(u: ScaledPoint) -> ScaledPoint {
    if u.x > 0 || (u.x == 0 && u.y > 0) {
        u
    } else {
        -u
    }
}

/// Tie-break key from the spec: lexicographic on (|a|, |b|, a, b).
fn tie_key(u: ScaledPoint) -> (i64, i64, i64, i64) {
    (u.x.abs(), u.y.abs(), u.x, u.y)
}

/// All primitive dual vectors (one per +-pair) whose scaled width on `rP`
/// is at most `bound`, with the realised extents.
pub(crate) fn directions_within(
    poly: &RationalPolygon,
    bound: i128,
) -> Vec<(ScaledPoint, i128, i128)> {
    let verts = poly.vertices();
    let z1 = (verts[1] - verts[0]).primitive();
    let mut z2 = ScaledPoint::ORIGIN;
    for i in 1..verts.len() {
        let z = (verts[(i + 1) % verts.len()] - verts[i]).primitive();
        if z1.cross(z) != 0 {
            z2 = z;
            break;
        }
    }
    debug_assert!(!z2.is_zero());
    // |u.z1| <= bound and |u.z2| <= bound confine u to a parallelogram;
    // iterate its integer bounding box.
    let det = z1.cross(z2);
    let ax = div_ceil_abs(bound * (z2.y.abs() as i128 + z1.y.abs() as i128), det.abs());
    let ay = div_ceil_abs(bound * (z2.x.abs() as i128 + z1.x.abs() as i128), det.abs());
    let mut out = Vec::new();
    for a in -ax..=ax {
        for b in -ay..=ay {
            let u = ScaledPoint::new(a as i64, b as i64);
            if u.is_zero() || canonical_sign(u) != u || u.primitive() != u {
                continue;
            }
            let (mn, mx) = extent(verts, u);
            if mx - mn <= bound {
                out.push((u, mn, mx));
            }
        }
    }
    out
}

fn div_ceil_abs(a: i128, b: i128) -> i128 {
    debug_assert!(b > 0);
    (a.abs() + b - 1) / b
}

const SEED_DIRS: [ScaledPoint; 4] = [
    ScaledPoint { x: 1, y: 0 },
    ScaledPoint { x: 0, y: 1 },
    ScaledPoint { x: 1, y: 1 },
    ScaledPoint { x: 1, y: -1 },
];

/// First width of `P` and a realising primitive dual vector.
pub fn width(poly: &RationalPolygon) -> (Rat, ScaledPoint) {
    let bound = SEED_DIRS
        .iter()
        .map(|&u| {
            let (mn, mx) = extent(poly.vertices(), u);
            mx - mn
        })
        .min()
        .unwrap();
    let best = directions_within(poly, bound)
        .into_iter()
        .min_by_key(|&(u, mn, mx)| (mx - mn, tie_key(u)))
        .expect("seed direction is always a candidate");
    (
        Rat::new((best.2 - best.1) as i64, poly.denominator()),
        best.0,
    )
}

/// Second width: minimal width over primitive dual vectors linearly
/// independent from a first-width direction.
pub fn second_width(poly: &RationalPolygon) -> (Rat, ScaledPoint) {
    let (_, u1) = width(poly);
    let bound = SEED_DIRS
        .iter()
        .filter(|&&u| u1.cross(u) != 0)
        .map(|&u| {
            let (mn, mx) = extent(poly.vertices(), u);
            mx - mn
        })
        .min()
        .unwrap();
    let best = directions_within(poly, bound)
        .into_iter()
        .filter(|&(u, _, _)| u1.cross(u) != 0)
        .min_by_key(|&(u, mn, mx)| (mx - mn, tie_key(u)))
        .expect("an independent seed direction is always a candidate");
    (
        Rat::new((best.2 - best.1) as i64, poly.denominator()),
        best.0,
    )
}

/// Repositions a lattice polygon (r = 1) into `[0, w1] x [0, w2]` touching
/// all four sides, where `(w1, w2)` are its first and second widths.
pub fn reposition_to_width_box(poly: &RationalPolygon) -> Result<RationalPolygon> {
    if poly.denominator() != 1 {
        return Err(Error::Contract(
            "reposition_to_width_box requires a lattice polygon (r = 1)".into(),
        ));
    }
    let (w1, u1) = width(poly);
    let (w2, _) = second_width(poly);
    let (w1, w2) = (*w1.numer(), *w2.numer());

    // Send u1 to (1, 0): complete the primitive row u1 to a unimodular
    // matrix, so the image's x-extent is exactly w1.
    let (g, s, t) = extended_gcd(u1.x, u1.y);
    debug_assert_eq!(g, 1);
    let m = Mat2::new(u1.x, u1.y, -t, s);
    debug_assert_eq!(m.det(), 1);
    let mapped: Vec<ScaledPoint> = poly.vertices().iter().map(|&v| m.apply(v)).collect();

    // The y-extent after the shear (x, y) -> (x, kx + y) is the width along
    // (k, 1), convex piecewise-linear in k; walk outward from k = 0.
    let f = |k: i64| {
        let (mn, mx) = extent(&mapped, ScaledPoint::new(k, 1));
        mx - mn
    };
    let mut k = 0i64;
    if f(1) < f(0) {
        while f(k + 1) < f(k) {
            k += 1;
        }
    } else {
        while f(k - 1) < f(k) {
            k -= 1;
        }
    }

    if f(k) == w2 as i128 {
        let sheared = Mat2::new(1, 0, k, 1);
        let placed = place_at_origin(&mapped.iter().map(|&v| sheared.apply(v)).collect::<Vec<_>>());
        let boxed = RationalPolygon::new(1, placed)?;
        debug_assert_eq!(box_extents(&boxed), (w1, w2));
        return Ok(boxed);
    }

    // Shear search missed the box; brute-force over small unimodular maps.
    let e = w1.checked_mul(w2).ok_or(Error::Reposition)?;
    for a in -e..=e {
        for b in -e..=e {
            for c in -e..=e {
                for d in -e..=e {
                    let m = Mat2::new(a, b, c, d);
                    if m.det().abs() != 1 {
                        continue;
                    }
                    let img: Vec<ScaledPoint> =
                        poly.vertices().iter().map(|&v| m.apply(v)).collect();
                    let (xm, xx) = extent(&img, ScaledPoint::new(1, 0));
                    let (ym, yx) = extent(&img, ScaledPoint::new(0, 1));
                    if xx - xm == w1 as i128 && yx - ym == w2 as i128 {
                        return RationalPolygon::new(1, place_at_origin(&img));
                    }
                }
            }
        }
    }
    Err(Error::Reposition)
}

fn place_at_origin(verts: &[ScaledPoint]) -> Vec<ScaledPoint> {
    let xmin = verts.iter().map(|v| v.x).min().unwrap();
    let ymin = verts.iter().map(|v| v.y).min().unwrap();
    let shift = ScaledPoint::new(-xmin, -ymin);
    verts.iter().map(|&v| v + shift).collect()
}

fn box_extents(poly: &RationalPolygon) -> (i64, i64) {
    let xs = poly.vertices().iter().map(|v| v.x);
    let ys = poly.vertices().iter().map(|v| v.y);
    (
        xs.clone().max().unwrap() - xs.min().unwrap(),
        ys.clone().max().unwrap() - ys.min().unwrap(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(r: i64, pts: &[(i64, i64)]) -> RationalPolygon {
        RationalPolygon::new(r, pts.iter().copied()).unwrap()
    }

    #[test]
    fn width_along_examples() {
        let strip = poly(1, &[(0, 0), (0, 5), (1, 2)]);
        assert_eq!(width_along(&strip, ScaledPoint::new(1, 0)), Rat::from(1));
        // Vertex evaluations 0, 3, -3: extent 6.
        let delta3 = poly(1, &[(0, 0), (3, 0), (0, 3)]);
        assert_eq!(width_along(&delta3, ScaledPoint::new(1, -1)), Rat::from(6));
        let t21 = poly(2, &[(0, 0), (1, 0), (0, 1)]);
        assert_eq!(width_along(&t21, ScaledPoint::new(1, 1)), Rat::new(1, 2));
    }

    #[test]
    fn first_width_examples() {
        let strip = poly(1, &[(0, 0), (0, 5), (1, 2)]);
        let (w, u) = width(&strip);
        assert_eq!(w, Rat::from(1));
        assert_eq!(u, ScaledPoint::new(1, 0));

        let delta3 = poly(1, &[(0, 0), (3, 0), (0, 3)]);
        assert_eq!(width(&delta3).0, Rat::from(3));

        let t21 = poly(2, &[(0, 0), (1, 0), (0, 1)]);
        assert_eq!(width(&t21).0, Rat::new(1, 2));
    }

    #[test]
    fn second_width_at_least_first() {
        for p in [
            poly(1, &[(0, 0), (0, 5), (1, 2)]),
            poly(1, &[(0, 0), (3, 0), (0, 3)]),
            poly(2, &[(0, 0), (2, 0), (0, 1), (3, 1)]),
        ] {
            assert!(second_width(&p).0 >= width(&p).0);
        }
    }

    #[test]
    fn exhaustive_width_oracle() {
        // Brute force over a generous range of primitive dual vectors.
        let polys = [
            poly(1, &[(0, 0), (3, 0), (0, 3)]),
            poly(2, &[(0, 0), (2, 0), (0, 1), (3, 1)]),
            poly(3, &[(-2, -1), (4, 0), (3, 5), (-1, 3)]),
        ];
        for p in polys {
            let mut best = None;
            for a in -12..=12i64 {
                for b in -12..=12i64 {
                    let u = ScaledPoint::new(a, b);
                    if u.is_zero() || u.primitive() != u {
                        continue;
                    }
                    let w = width_along(&p, u);
                    if best.is_none_or(|bw| w < bw) {
                        best = Some(w);
                    }
                }
            }
            assert_eq!(width(&p).0, best.unwrap());
        }
    }

    #[test]
    fn reposition_examples() {
        let square = poly(1, &[(0, 0), (4, 0), (4, 4), (0, 4)]);
        assert_eq!(reposition_to_width_box(&square).unwrap(), square);

        let shifted = poly(1, &[(7, 3), (11, 3), (11, 7), (7, 7)]);
        assert_eq!(reposition_to_width_box(&shifted).unwrap(), square);

        let skew = poly(1, &[(0, 0), (5, 1), (1, 3)]);
        let placed = reposition_to_width_box(&skew).unwrap();
        let (w1, _) = width(&skew);
        let (w2, _) = second_width(&skew);
        assert_eq!(
            box_extents(&placed),
            (*w1.numer(), *w2.numer()),
            "box must match the widths"
        );
    }
}
