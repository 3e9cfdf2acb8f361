use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;

/// A point of the scaled lattice: the coordinates of `r * p` for a point
/// `p` of `(1/r)Z^2`. All geometry in this crate works on these integer
/// coordinates; products are widened to `i128` where they could be large.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ScaledPoint {
    pub x: i64,
    pub y: i64,
}

impl ScaledPoint {
    pub const ORIGIN: ScaledPoint = ScaledPoint { x: 0, y: 0 };

    pub fn new(x: i64, y: i64) -> Self {
        ScaledPoint { x, y }
    }

    pub fn dot(self, other: ScaledPoint) -> i128 {
        self.x as i128 * other.x as i128 + self.y as i128 * other.y as i128
    }

    /// z-component of the cross product `self x other`.
    pub fn cross(self, other: ScaledPoint) -> i128 {
        self.x as i128 * other.y as i128 - self.y as i128 * other.x as i128
    }

    pub fn is_zero(self) -> bool {
        self.x == 0 && self.y == 0
    }

    /// The primitive vector in the same direction. Zero stays zero.
    pub fn primitive(self) -> ScaledPoint {
        let g = self.x.gcd(&self.y);
        if g == 0 {
            self
        } else {
            ScaledPoint::new(self.x / g, self.y / g)
        }
    }

    /// gcd of the absolute coordinates: the lattice length of the segment
    /// from the origin to this point.
    pub fn lattice_length(self) -> i64 {
        self.x.gcd(&self.y)
    }

    /// Rotate by -90 degrees; for a CCW edge direction this is the outward
    /// normal.
    pub fn rotate_cw(self) -> ScaledPoint {
        ScaledPoint::new(self.y, -self.x)
    }

    /// Component-wise nonnegative residue mod `r`.
    pub fn rem_euclid(self, r: i64) -> ScaledPoint {
        ScaledPoint::new(self.x.rem_euclid(r), self.y.rem_euclid(r))
    }
}

impl Add for ScaledPoint {
    type Output = ScaledPoint;
    fn add(self, rhs: ScaledPoint) -> ScaledPoint {
        ScaledPoint::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for ScaledPoint {
    type Output = ScaledPoint;
    fn sub(self, rhs: ScaledPoint) -> ScaledPoint {
        ScaledPoint::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for ScaledPoint {
    type Output = ScaledPoint;
    fn neg(self) -> ScaledPoint {
        ScaledPoint::new(-self.x, -self.y)
    }
}

impl Mul<i64> for ScaledPoint {
    type Output = ScaledPoint;
    fn mul(self, rhs: i64) -> ScaledPoint {
        ScaledPoint::new(self.x * rhs, self.y * rhs)
    }
}

impl From<(i64, i64)> for ScaledPoint {
    fn from((x, y): (i64, i64)) -> Self {
        ScaledPoint::new(x, y)
    }
}

/// Orientation of the triple (a, b, c): positive for a left turn.
pub fn orient(a: ScaledPoint, b: ScaledPoint, c: ScaledPoint) -> i128 {
    (b - a).cross(c - a)
}

/// A 2x2 integer matrix acting on scaled points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mat2 {
    // Row-major: [[a, b], [c, d]].
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2 { a: 1, b: 0, c: 0, d: 1 };

    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn det(self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    pub fn apply(self, p: ScaledPoint) -> ScaledPoint {
        ScaledPoint::new(self.a * p.x + self.b * p.y, self.c * p.x + self.d * p.y)
    }

    /// Matrix product `self * rhs`.
    pub fn compose(self, rhs: Mat2) -> Mat2 {
        Mat2::new(
            self.a * rhs.a + self.b * rhs.c,
            self.a * rhs.b + self.b * rhs.d,
            self.c * rhs.a + self.d * rhs.c,
            self.c * rhs.b + self.d * rhs.d,
        )
    }

    /// Inverse of a unimodular matrix (det must be +-1).
    pub fn inverse_unimodular(self) -> Mat2 {
        let det = self.det();
        debug_assert!(det == 1 || det == -1);
        Mat2::new(self.d * det, -self.b * det, -self.c * det, self.a * det)
    }
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g = gcd(a, b), g >= 0.
pub fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i64, 0i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_direction() {
        assert_eq!(ScaledPoint::new(4, -6).primitive(), ScaledPoint::new(2, -3));
        assert_eq!(ScaledPoint::new(0, 5).primitive(), ScaledPoint::new(0, 1));
        assert_eq!(ScaledPoint::new(-3, 0).primitive(), ScaledPoint::new(-1, 0));
    }

    #[test]
    fn extended_gcd_identity() {
        for a in -20..=20i64 {
            for b in -20..=20i64 {
                let (g, s, t) = extended_gcd(a, b);
                assert_eq!(g, a.gcd(&b));
                assert_eq!(s * a + t * b, g);
            }
        }
    }

    #[test]
    fn unimodular_inverse() {
        let m = Mat2::new(2, 3, 1, 2); // det 1
        let inv = m.inverse_unimodular();
        assert_eq!(m.compose(inv), Mat2::IDENTITY);
        let m = Mat2::new(0, 1, 1, 0); // det -1
        let inv = m.inverse_unimodular();
        assert_eq!(m.compose(inv), Mat2::IDENTITY);
    }

    #[test]
    fn outward_normal_of_ccw_edge() {
        // Bottom edge of a CCW square points its normal down.
        let d = ScaledPoint::new(1, 0);
        assert_eq!(d.rotate_cw(), ScaledPoint::new(0, -1));
    }
}
