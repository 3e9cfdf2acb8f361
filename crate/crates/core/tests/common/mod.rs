//! Shared test helpers: independent counting oracles and random polygon
//! generation. The oracles deliberately avoid the library's Pick/row-scan
//! code paths: they test each candidate point of a bounding box against
//! the edge half-planes.
#![allow(dead_code)] // each test binary uses a different subset

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use ratpoly::point::{orient, ScaledPoint};
use ratpoly::RationalPolygon;

/// Bounding-box scan: number of points of `stride * Z^2` in the scaled
/// polygon.
pub fn oracle_count(poly: &RationalPolygon, stride: i64) -> u64 {
    let verts = poly.vertices();
    let xmin = verts.iter().map(|v| v.x).min().unwrap();
    let xmax = verts.iter().map(|v| v.x).max().unwrap();
    let ymin = verts.iter().map(|v| v.y).min().unwrap();
    let ymax = verts.iter().map(|v| v.y).max().unwrap();
    let mut count = 0;
    for x in xmin..=xmax {
        if x.rem_euclid(stride) != 0 {
            continue;
        }
        for y in ymin..=ymax {
            if y.rem_euclid(stride) != 0 {
                continue;
            }
            if oracle_contains(poly, ScaledPoint::new(x, y)) {
                count += 1;
            }
        }
    }
    count
}

pub fn oracle_contains(poly: &RationalPolygon, p: ScaledPoint) -> bool {
    let verts = poly.vertices();
    let n = verts.len();
    (0..n).all(|i| orient(verts[i], verts[(i + 1) % n], p) >= 0)
}

pub fn oracle_on_boundary(poly: &RationalPolygon, p: ScaledPoint) -> bool {
    let verts = poly.vertices();
    let n = verts.len();
    oracle_contains(poly, p)
        && (0..n).any(|i| orient(verts[i], verts[(i + 1) % n], p) == 0)
}

/// Boundary/interior split of `|nP ∩ Z^2|` by pointwise scan.
pub fn oracle_profile(poly: &RationalPolygon, n: i64) -> (u64, u64) {
    let r = poly.denominator();
    let dilated =
        RationalPolygon::new(r, poly.vertices().iter().map(|v| (v.x * n, v.y * n))).unwrap();
    let verts = dilated.vertices();
    let xmin = verts.iter().map(|v| v.x).min().unwrap();
    let xmax = verts.iter().map(|v| v.x).max().unwrap();
    let ymin = verts.iter().map(|v| v.y).min().unwrap();
    let ymax = verts.iter().map(|v| v.y).max().unwrap();
    let mut boundary = 0;
    let mut interior = 0;
    for x in xmin..=xmax {
        for y in ymin..=ymax {
            if x.rem_euclid(r) != 0 || y.rem_euclid(r) != 0 {
                continue;
            }
            let p = ScaledPoint::new(x, y);
            if oracle_on_boundary(&dilated, p) {
                boundary += 1;
            } else if oracle_contains(&dilated, p) {
                interior += 1;
            }
        }
    }
    (boundary, interior)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random polygon with the given denominator and scaled coordinates in
/// `[-span, span]`; retries until the hull is two-dimensional.
pub fn random_polygon(rng: &mut ChaCha8Rng, r: i64, span: i64) -> RationalPolygon {
    loop {
        let n = rng.random_range(3..=8);
        let pts: Vec<(i64, i64)> = (0..n)
            .map(|_| (rng.random_range(-span..=span), rng.random_range(-span..=span)))
            .collect();
        if let Ok(poly) = RationalPolygon::new(r, pts) {
            return poly;
        }
    }
}

/// Random unimodular matrix with entries in `[-5, 5]`.
pub fn random_unimodular(rng: &mut ChaCha8Rng) -> ratpoly::Mat2 {
    loop {
        let m = ratpoly::Mat2::new(
            rng.random_range(-5..=5),
            rng.random_range(-5..=5),
            rng.random_range(-5..=5),
            rng.random_range(-5..=5),
        );
        if m.det().abs() == 1 {
            return m;
        }
    }
}
