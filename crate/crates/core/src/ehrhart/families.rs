//! Explicit polygon families realising tuples on the boundaries of the
//! classified region.

use crate::error::{Error, Result};
use crate::polygon::RationalPolygon;

use super::tuples::{inf_growable_tuple_check, EhrhartTuple};

/// An infinitely growable denominator-2 polygon realising the tuple
/// `(b1, b2, i2)` with `i(P) = 0`; the tuple must satisfy
/// [`inf_growable_tuple_check`].
///
/// Vertex lists are the case tables of the realisation proof, in scaled
/// (doubled) coordinates.
pub fn zero_interior_family(b1: u64, b2: u64, i2: u64) -> Result<RationalPolygon> {
    if !inf_growable_tuple_check(b1, b2, i2) {
        return Err(Error::Domain(format!(
            "tuple ({b1}, {b2}, {i2}) is not realisable by an infinitely growable polygon"
        )));
    }
    let (b1, b2, i2) = (b1 as i64, b2 as i64, i2 as i64);
    let verts: Vec<(i64, i64)> = if i2 == 0 {
        if b1 == 0 {
            vec![(0, 1), (1, 0), (1, b2 - 2)]
        } else {
            vec![(0, 0), (0, 2 * (b1 - 1)), (1, 0), (1, b2 - 2 * b1)]
        }
    } else if b1 == 0 {
        vec![(0, 1), (2, 1), (1, i2 + 2)]
    } else if b1 == 1 {
        match b2 {
            3 => vec![(0, 0), (2, 1), (1, i2 + 1)],
            4 => vec![(0, 0), (0, 1), (2, 1), (1, i2 + 1)],
            5 => vec![(0, 0), (0, 1), (1, 0), (2, 1), (1, i2 + 1)],
            6 => vec![(0, -1), (0, 1), (2, 1), (1, i2 + 1)],
            _ => unreachable!("b1 = 1 admits 3 <= b2 <= 6"),
        }
    } else {
        // In the four cases below the boundary dips to y = -1/2, which
        // turns (1/2, 0) into an interior point of 2P; the apex height
        // compensates so the interior count is exactly i2.
        match b2 - 2 * b1 {
            0 => vec![(0, 0), (0, 2 * (b1 - 2)), (2, 0), (1, i2 + 1)],
            1 => vec![(0, -1), (0, 2 * (b1 - 2)), (2, 0), (1, -1), (1, i2)],
            2 => vec![(0, -1), (0, 2 * (b1 - 2)), (2, 0), (2, -1), (1, i2)],
            3 => vec![(0, -1), (0, 2 * (b1 - 2)), (2, 1), (2, -1), (1, i2)],
            4 => vec![(0, -1), (0, 2 * b1 - 3), (2, 1), (2, -1), (1, i2)],
            _ => unreachable!("b1 >= 2 admits 2b1 <= b2 <= 2b1 + 4"),
        }
    };
    RationalPolygon::new(2, verts)
}

/// The seven infinite families whose tuples sit on the boundaries of the
/// classified region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::F1,
        Family::F2,
        Family::F3,
        Family::F4,
        Family::F5,
        Family::F6,
        Family::F7,
    ];

    pub fn parse(s: &str) -> Option<Family> {
        match s.to_ascii_uppercase().as_str() {
            "F1" => Some(Family::F1),
            "F2" => Some(Family::F2),
            "F3" => Some(Family::F3),
            "F4" => Some(Family::F4),
            "F5" => Some(Family::F5),
            "F6" => Some(Family::F6),
            "F7" => Some(Family::F7),
            _ => None,
        }
    }
}

/// The tuple of the `i`-th member of a family (`i >= 1`), checked against
/// the boundary equations the family lies on.
pub fn boundary_family_tuple(family: Family, i: u64) -> Result<EhrhartTuple> {
    if i < 1 {
        return Err(Error::Domain(format!("family index must be >= 1, got {i}")));
    }
    let t = match family {
        Family::F1 => EhrhartTuple::new(0, i, 3, 2 * i - 1),
        Family::F2 => EhrhartTuple::new(2, i, 4, 2 * i + 1),
        Family::F3 => EhrhartTuple::new(2, i, 4 * i + 8, 2 * i + 1),
        Family::F4 => EhrhartTuple::new(1, i, 3, 3 * i),
        Family::F5 => EhrhartTuple::new(4, i, 8, 4 * i + 1),
        Family::F6 => EhrhartTuple::new(2 * i - 2, i, 4 * i + 2, 6 * i + 1),
        Family::F7 => EhrhartTuple::new(4, i, 12, 6 * i + 3),
    };
    // Each family sits on the stated boundary hyperplanes.
    match family {
        Family::F1 => {
            assert_eq!(t.b2, 3);
            assert_eq!(t.i2 + 1, t.b1 + 2 * t.i1);
        }
        Family::F2 => {
            assert_eq!(t.b2, 2 * t.b1);
            assert_eq!(t.i2 + 1, t.b1 + 2 * t.i1);
        }
        Family::F3 => assert_eq!(t.i2 + 1, t.b1 + 2 * t.i1),
        Family::F4 => assert_eq!(t.b2, 3),
        Family::F5 => assert_eq!(t.b2, 2 * t.b1),
        Family::F6 | Family::F7 => {
            assert_eq!(t.b2 + t.i2, 2 * t.b1 + 6 * t.i1 + 7);
        }
    }
    Ok(t)
}
