//! Canonical forms for affine unimodular equivalence.
//!
//! Two rational polygons are equivalent when one maps onto the other by a
//! `GL(2,Z)` change of basis followed by an integral translation. On the
//! scaled polygon `Q = rP` these act as unimodular maps plus translations
//! in `rZ^2`. The canonical key is computed from one candidate frame per
//! directed edge of `Q` and of its mirror image:
//!
//! 1. send the edge's source vertex `a` to the origin and the edge
//!    direction to `(1, 0)` by a det-(+1) unimodular map,
//! 2. fix the remaining shear freedom by requiring the leftmost vertex `m`
//!    attaining the maximal height `H` to satisfy `0 <= x(m) < H`,
//! 3. restore a legal `rZ^2` translation by moving the image of `a` to its
//!    residue in `[0, r)^2`.
//!
//! Equivalent polygons produce identical candidate sets, so the
//! lexicographically minimal signature is a complete invariant.

use std::fmt;

use crate::point::{extended_gcd, Mat2, ScaledPoint};
use crate::polygon::RationalPolygon;

/// Total-order key for an equivalence class: the denominator followed by
/// the canonical vertex list, flattened.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<i64>);

impl CanonicalKey {
    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn denominator(&self) -> i64 {
        self.0[0]
    }

    /// The canonical representative polygon encoded by this key.
    pub fn to_polygon(&self) -> RationalPolygon {
        let r = self.0[0];
        let pts: Vec<ScaledPoint> = self.0[1..]
            .chunks_exact(2)
            .map(|c| ScaledPoint::new(c[0], c[1]))
            .collect();
        RationalPolygon::new(r, pts).expect("canonical key encodes a valid polygon")
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.0[0])?;
        for (i, c) in self.0[1..].chunks_exact(2).enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{}_{}", c[0], c[1])?;
        }
        Ok(())
    }
}

/// Candidate signature for one directed edge of the (possibly mirrored)
/// vertex cycle.
fn edge_signature(r: i64, verts: &[ScaledPoint], i: usize, out: &mut Vec<i64>) {
    let n = verts.len();
    let a = verts[i];
    let b = verts[(i + 1) % n];
    let d = (b - a).primitive();
    // Det +1 map sending d to (1, 0); the Bezout ambiguity in the first row
    // is absorbed by the shear below.
    let (g, s, t) = extended_gcd(d.x, d.y);
    debug_assert_eq!(g, 1);
    let a0 = Mat2::new(s, t, -d.y, d.x);
    debug_assert_eq!(a0.det(), 1);
    debug_assert_eq!(a0.apply(d), ScaledPoint::new(1, 0));

    // Image of the cycle with `a` at the origin; all heights nonnegative,
    // the edge itself on y = 0.
    let mapped: Vec<ScaledPoint> = (0..n)
        .map(|j| a0.apply(verts[(i + j) % n] - a))
        .collect();
    let h = mapped.iter().map(|p| p.y).max().unwrap();
    debug_assert!(h > 0);
    let top_x = mapped
        .iter()
        .filter(|p| p.y == h)
        .map(|p| p.x)
        .min()
        .unwrap();
    let k = -top_x.div_euclid(h);
    let m = Mat2::new(1, k, 0, 1).compose(a0);
    let rho = m.apply(a).rem_euclid(r);

    out.clear();
    out.push(r);
    for j in 0..n {
        let p = m.apply(verts[(i + j) % n] - a) + rho;
        out.push(p.x);
        out.push(p.y);
    }
}

/// Canonical key of a rational polygon: minimal edge signature over both
/// the polygon and its mirror image (covering det -1 maps).
pub fn canonical_form(poly: &RationalPolygon) -> CanonicalKey {
    let r = poly.denominator();
    let direct = poly.vertices().to_vec();
    // Mirroring reverses orientation; reverse the list to restore CCW.
    let mut mirrored: Vec<ScaledPoint> = direct
        .iter()
        .map(|&v| ScaledPoint::new(v.x, -v.y))
        .collect();
    mirrored.reverse();

    let mut best: Option<Vec<i64>> = None;
    let mut cand = Vec::with_capacity(1 + 2 * direct.len());
    for verts in [&direct, &mirrored] {
        for i in 0..verts.len() {
            edge_signature(r, verts, i, &mut cand);
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand.clone());
            }
        }
    }
    CanonicalKey(best.unwrap())
}

impl RationalPolygon {
    /// See [`canonical_form`].
    pub fn canonical_key(&self) -> CanonicalKey {
        canonical_form(self)
    }

    /// The canonical representative of this polygon's equivalence class.
    pub fn canonical_representative(&self) -> RationalPolygon {
        self.canonical_key().to_polygon()
    }
}
