//! Boundary/interior point tuples of denominator-2 polygons and the
//! classification of which region of the four conditions they satisfy.

use crate::error::{Error, Result};
use crate::polygon::RationalPolygon;

/// `(b(P), i(P), b(2P), i(2P))` for a denominator-2 polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EhrhartTuple {
    pub b1: u64,
    pub i1: u64,
    pub b2: u64,
    pub i2: u64,
}

impl EhrhartTuple {
    pub fn new(b1: u64, i1: u64, b2: u64, i2: u64) -> Self {
        EhrhartTuple { b1, i1, b2, i2 }
    }
}

/// The tuple of a denominator-2 polygon.
pub fn ehrhart_tuple(poly: &RationalPolygon) -> Result<EhrhartTuple> {
    if poly.denominator() != 2 {
        return Err(Error::Contract(format!(
            "ehrhart_tuple requires denominator 2, got {}",
            poly.denominator()
        )));
    }
    let (b1, i1) = poly.lattice_profile(1);
    let (b2, i2) = poly.lattice_profile(2);
    Ok(EhrhartTuple { b1, i1, b2, i2 })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    A,
    B,
    C,
    D,
    Exception,
}

impl Condition {
    pub fn label(self) -> &'static str {
        match self {
            Condition::A => "a",
            Condition::B => "b",
            Condition::C => "c",
            Condition::D => "d",
            Condition::Exception => "exception",
        }
    }
}

/// Outcome of testing a tuple against conditions (a)-(d): the first
/// condition that holds, or the list of inequalities that failed in every
/// condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleVerdict {
    pub condition: Condition,
    pub violated_inequalities: Vec<&'static str>,
}

/// Evaluates conditions (a)-(d) in order and returns the first satisfied
/// label; a tuple matching none is an exception.
pub fn classify_tuple(t: EhrhartTuple) -> TupleVerdict {
    let EhrhartTuple { b1, i1, b2, i2 } = t;
    let lower = 3u64.max(2 * b1);

    let mut violated = Vec::new();
    let mut check = |cond: &[(&'static str, bool)]| -> bool {
        let mut ok = true;
        for &(name, holds) in cond {
            if !holds {
                ok = false;
                violated.push(name);
            }
        }
        ok
    };

    if check(&[
        ("a: i(P) = 0", i1 == 0),
        ("a: i(2P) = 0", i2 == 0),
        ("a: b(2P) >= max(3, 2b(P))", b2 >= lower),
    ]) {
        return TupleVerdict { condition: Condition::A, violated_inequalities: Vec::new() };
    }
    if check(&[
        ("b: b(P) = 0", b1 == 0),
        ("b: i(P) = 0", i1 == 0),
        ("b: b(2P) = 4", b2 == 4),
        ("b: i(2P) > 0", i2 > 0),
    ]) {
        return TupleVerdict { condition: Condition::B, violated_inequalities: Vec::new() };
    }
    if check(&[
        ("c: i(P) = 0", i1 == 0),
        ("c: i(2P) > 0", i2 > 0),
        ("c: b(P) > 0", b1 > 0),
        ("c: b(2P) >= max(3, 2b(P))", b2 >= lower),
        ("c: b(2P) <= 2b(P) + 4", b2 <= 2 * b1 + 4),
        ("c: b(2P) <= 2i(2P) + 6", b2 <= 2 * i2 + 6),
    ]) {
        return TupleVerdict { condition: Condition::C, violated_inequalities: Vec::new() };
    }
    if check(&[
        ("d: i(P) > 0", i1 > 0),
        ("d: b(2P) >= max(3, 2b(P))", b2 >= lower),
        ("d: i(2P) >= b(P) + 2i(P) - 1", i2 + 1 >= b1 + 2 * i1),
        ("d: b(2P) + i(2P) <= 2b(P) + 6i(P) + 7", b2 + i2 <= 2 * b1 + 6 * i1 + 7),
    ]) {
        return TupleVerdict { condition: Condition::D, violated_inequalities: Vec::new() };
    }
    TupleVerdict { condition: Condition::Exception, violated_inequalities: violated }
}

/// Scott / Haase-Schicho: whether `(b, i)` is realised by a lattice
/// polygon.
pub fn scott_check(b: i64, i: i64) -> bool {
    b >= 3 && i >= 0 && (i == 0 || (i == 1 && b == 9) || b <= 2 * i + 6)
}

/// The tuple conditions satisfied by every infinitely growable
/// denominator-2 polygon (which always has `i(P) = 0`).
pub fn inf_growable_tuple_check(b1: u64, b2: u64, i2: u64) -> bool {
    let lower = 3u64.max(2 * b1);
    let cond1 = i2 == 0 && b2 >= lower;
    let cond2 = i2 > 0 && b1 == 0 && b2 == 4;
    let cond3 = i2 > 0 && b1 > 0 && lower <= b2 && b2 <= 2 * b1 + 4 && b2 <= 2 * i2 + 6;
    cond1 || cond2 || cond3
}
