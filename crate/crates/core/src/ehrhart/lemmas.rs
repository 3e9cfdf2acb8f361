//! Checkable forms of the two counting lemmas used by the diagonal bound.

use crate::error::{Error, Result};
use crate::point::ScaledPoint;
use crate::polygon::RationalPolygon;
use crate::width::{reposition_to_width_box, width};

/// Points of the polygon on the vertical line `x = h`, split into
/// (total, interior).
fn column_counts(poly: &RationalPolygon, h: i64) -> (u64, u64) {
    let ymin = poly.vertices().iter().map(|v| v.y).min().unwrap();
    let ymax = poly.vertices().iter().map(|v| v.y).max().unwrap();
    let mut total = 0;
    let mut interior = 0;
    for y in ymin..=ymax {
        let p = ScaledPoint::new(h, y);
        if poly.contains_scaled(p) {
            total += 1;
            if !poly.boundary_contains_scaled(p) {
                interior += 1;
            }
        }
    }
    (total, interior)
}

/// Checks `p_0 + p_2 = p_1 + i_1 + 2` on the trapezium
/// `conv((0,y1),(0,y2),(2,y3),(2,y4))` by exact scan. Expected to be true
/// for every valid input; a false return signals a bug.
pub fn trapezium_identity_check(y1: i64, y2: i64, y3: i64, y4: i64) -> Result<bool> {
    if y1 > y2 || y3 > y4 {
        return Err(Error::Domain("trapezium sides must be ordered".into()));
    }
    let poly = RationalPolygon::new(1, [(0, y1), (0, y2), (2, y3), (2, y4)])?;
    let (p0, _) = column_counts(&poly, 0);
    let (p1, i1) = column_counts(&poly, 1);
    let (p2, _) = column_counts(&poly, 2);
    Ok(p0 + p2 == p1 + i1 + 2)
}

/// Checks the hourglass lower bound: after repositioning a lattice polygon
/// into its width box `[0,w1] x [0,w2]`, the line `x = h` (with
/// `2 <= h <= w1 - 2`) holds at least `min(h, w1-h) - 1` interior points.
pub fn hourglass_check(poly: &RationalPolygon, h: i64) -> Result<bool> {
    if poly.denominator() != 1 {
        return Err(Error::Contract("hourglass_check requires a lattice polygon".into()));
    }
    let w1 = *width(poly).0.numer();
    if h < 2 || h > w1 - 2 {
        return Err(Error::Domain(format!(
            "h must satisfy 2 <= h <= w1 - 2 = {}, got {h}",
            w1 - 2
        )));
    }
    let placed = reposition_to_width_box(poly)?;
    let (_, interior) = column_counts(&placed, h);
    let needed = h.min(w1 - h) - 1;
    Ok(interior as i64 >= needed)
}
