use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::point::{orient, Mat2, ScaledPoint};

pub type Rat = Ratio<i64>;

/// A rational polygon `P` of denominator `r`, stored as the lattice polygon
/// `rP`. Vertices are in counterclockwise order, each a strict extreme
/// point, starting at the lexicographically smallest vertex. `r` need not
/// be minimal for `P`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalPolygon {
    denominator: i64,
    vertices: Vec<ScaledPoint>,
}

/// Exact point counts of a polygon: `size` and `r_size` count lattice and
/// `(1/r)`-lattice points of `P`, `boundary`/`interior` split the lattice
/// points of `P` itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PointProfile {
    pub size: u64,
    pub r_size: u64,
    pub boundary: u64,
    pub interior: u64,
}

/// Strict convex hull in CCW order starting at the lexicographically
/// smallest point; collinear non-extreme points are dropped.
pub fn convex_hull(points: &[ScaledPoint]) -> Vec<ScaledPoint> {
    let mut pts = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut hull: Vec<ScaledPoint> = Vec::with_capacity(pts.len() + 1);
    // Lower hull then upper hull (Andrew's monotone chain).
    for &p in pts.iter() {
        while hull.len() >= 2 && orient(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev() {
        while hull.len() >= lower_len && orient(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0
        {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop(); // first point repeated
    if hull.len() == 2 && hull[0] == hull[1] {
        hull.pop();
    }
    hull
}

impl RationalPolygon {
    /// Builds the polygon `(1/r) conv(points)` from scaled points. Fails
    /// with [`Error::Degenerate`] if the hull is a point or a segment.
    pub fn new<I, P>(denominator: i64, points: I) -> Result<Self>
    where
        I: IntoIterator<Item = P>,
        P: Into<ScaledPoint>,
    {
        if denominator < 1 {
            return Err(Error::Domain(format!(
                "denominator must be positive, got {denominator}"
            )));
        }
        let pts: Vec<ScaledPoint> = points.into_iter().map(Into::into).collect();
        let hull = convex_hull(&pts);
        if hull.len() < 3 {
            return Err(Error::Degenerate);
        }
        Ok(RationalPolygon { denominator, vertices: hull })
    }

    pub fn denominator(&self) -> i64 {
        self.denominator
    }

    /// Vertices of the scaled polygon `rP`, CCW.
    pub fn vertices(&self) -> &[ScaledPoint] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Directed edges of `rP` as `(source, target)` pairs in CCW order.
    pub fn edges(&self) -> impl Iterator<Item = (ScaledPoint, ScaledPoint)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Twice the Euclidean area of the scaled polygon `rP` (the shoelace
    /// sum); always positive for a CCW polygon.
    pub fn scaled_area2(&self) -> i128 {
        let mut sum: i128 = 0;
        for (a, b) in self.edges() {
            sum += a.cross(b);
        }
        debug_assert!(sum > 0);
        sum
    }

    /// Normalised volume of `P`: twice its Euclidean area, as an exact
    /// rational.
    pub fn normalized_volume(&self) -> Rat {
        let r = self.denominator;
        Rat::new(
            i64::try_from(self.scaled_area2()).expect("area overflows i64"),
            r * r,
        )
    }

    /// Number of lattice points of the scaled polygon `rP`, i.e.
    /// `|P ∩ (1/r)Z^2|`, by Pick's theorem.
    pub fn r_size(&self) -> u64 {
        let area2 = self.scaled_area2();
        let boundary: i128 = self
            .edges()
            .map(|(a, b)| (b - a).lattice_length() as i128)
            .sum();
        // Pick: points = area + boundary/2 + 1, and area2 + boundary is even.
        ((area2 + boundary + 2) / 2) as u64
    }

    /// `|P ∩ Z^2|`: lattice points of the rational polygon itself.
    pub fn size(&self) -> u64 {
        count_scaled_multiples(&self.vertices, self.denominator)
    }

    /// Boundary/interior split of `|nP ∩ Z^2|` for a dilation `n >= 1`.
    pub fn lattice_profile(&self, n: i64) -> (u64, u64) {
        assert!(n >= 1, "dilation must be positive");
        let dilated: Vec<ScaledPoint> = self.vertices.iter().map(|&v| v * n).collect();
        let total = count_scaled_multiples(&dilated, self.denominator);
        let boundary = count_boundary_multiples(&dilated, self.denominator);
        (boundary, total - boundary)
    }

    /// Full point profile: size, r-size and the boundary/interior split of
    /// `P` itself.
    pub fn profile(&self) -> PointProfile {
        let (boundary, interior) = self.lattice_profile(1);
        PointProfile {
            size: boundary + interior,
            r_size: self.r_size(),
            boundary,
            interior,
        }
    }

    /// All points of `(1/r)Z^2` contained in `P`, in scaled coordinates,
    /// row by row.
    pub fn contained_scaled_points(&self) -> Vec<ScaledPoint> {
        let mut out = Vec::with_capacity(self.r_size() as usize);
        for_each_row_span(&self.vertices, 1, |y, xlo, xhi| {
            for x in xlo..=xhi {
                out.push(ScaledPoint::new(x, y));
            }
        });
        out
    }

    /// Whether the scaled point lies in the closed scaled polygon.
    pub fn contains_scaled(&self, p: ScaledPoint) -> bool {
        self.edges().all(|(a, b)| orient(a, b, p) >= 0)
    }

    /// Whether the scaled point lies on the boundary of the scaled polygon.
    pub fn boundary_contains_scaled(&self, p: ScaledPoint) -> bool {
        self.contains_scaled(p) && self.edges().any(|(a, b)| orient(a, b, p) == 0)
    }

    /// The polygon `U . P + t` for a lattice matrix `U` (no unimodularity
    /// check) and an integral translation `t` of `P` (scaled by `r`
    /// internally).
    pub fn transformed(&self, u: Mat2, t: ScaledPoint) -> Result<RationalPolygon> {
        let shift = t * self.denominator;
        RationalPolygon::new(
            self.denominator,
            self.vertices.iter().map(|&v| u.apply(v) + shift),
        )
    }

    /// Mirror image under `(x, y) -> (x, -y)`.
    pub fn mirrored(&self) -> RationalPolygon {
        let pts: Vec<ScaledPoint> = self
            .vertices
            .iter()
            .map(|&v| ScaledPoint::new(v.x, -v.y))
            .collect();
        RationalPolygon::new(self.denominator, pts).expect("mirror preserves dimension")
    }
}

/// Calls `f(y, xlo, xhi)` for every horizontal lattice line `y` meeting the
/// polygon, where `xlo..=xhi` are the integer `x` with `(x, y)` inside and
/// `x ≡ 0 (mod stride)` is *not* yet applied (stride handling is done by
/// callers that need it). The span bounds are exact.
fn for_each_row_span(verts: &[ScaledPoint], stride: i64, mut f: impl FnMut(i64, i64, i64)) {
    debug_assert!(stride >= 1);
    let ymin = verts.iter().map(|v| v.y).min().unwrap();
    let ymax = verts.iter().map(|v| v.y).max().unwrap();
    let mut y = ymin.div_euclid(stride) * stride;
    if y < ymin {
        y += stride;
    }
    let n = verts.len();
    while y <= ymax {
        // Exact rational span of the slice at height y: min/max of edge
        // intersections, tracked as fractions with positive denominators.
        let mut lo: Option<(i128, i128)> = None; // x = num/den, den > 0
        let mut hi: Option<(i128, i128)> = None;
        let less = |a: (i128, i128), b: (i128, i128)| a.0 * b.1 < b.0 * a.1;
        for i in 0..n {
            let p = verts[i];
            let q = verts[(i + 1) % n];
            let (y0, y1) = (p.y.min(q.y), p.y.max(q.y));
            if y < y0 || y > y1 {
                continue;
            }
            let mut push = |x: (i128, i128)| {
                if lo.is_none() || less(x, lo.unwrap()) {
                    lo = Some(x);
                }
                if hi.is_none() || less(hi.unwrap(), x) {
                    hi = Some(x);
                }
            };
            if p.y == q.y {
                push((p.x as i128, 1));
                push((q.x as i128, 1));
            } else {
                // x = p.x + (y - p.y)(q.x - p.x)/(q.y - p.y), normalised to
                // a positive denominator.
                let dy = (q.y - p.y) as i128;
                let num = p.x as i128 * dy + (y - p.y) as i128 * (q.x - p.x) as i128;
                if dy > 0 {
                    push((num, dy));
                } else {
                    push((-num, -dy));
                }
            }
        }
        if let (Some((ln, ld)), Some((hn, hd))) = (lo, hi) {
            // Integer multiples of `stride` in [ln/ld, hn/hd].
            let s = stride as i128;
            let first = ln.div_euclid(ld * s) + i128::from(ln.rem_euclid(ld * s) != 0);
            let last = hn.div_euclid(hd * s);
            if first <= last {
                f(y, (first * s) as i64, (last * s) as i64);
            }
        }
        y += stride;
    }
}

/// Counts points of `stride * Z^2` in the closed polygon with the given
/// scaled vertices.
pub(crate) fn count_scaled_multiples(verts: &[ScaledPoint], stride: i64) -> u64 {
    let mut count = 0u64;
    for_each_row_span(verts, stride, |_y, xlo, xhi| {
        count += ((xhi - xlo) / stride) as u64 + 1;
    });
    count
}

/// Counts points of `stride * Z^2` on the boundary of the polygon, walking
/// each edge half-open so every boundary point is counted exactly once.
pub(crate) fn count_boundary_multiples(verts: &[ScaledPoint], stride: i64) -> u64 {
    let n = verts.len();
    let mut count = 0u64;
    for i in 0..n {
        let p = verts[i];
        let q = verts[(i + 1) % n];
        let d = q - p;
        let g = d.lattice_length();
        let step = ScaledPoint::new(d.x / g, d.y / g);
        for t in 0..g {
            let v = p + step * t;
            if v.x.rem_euclid(stride) == 0 && v.y.rem_euclid(stride) == 0 {
                count += 1;
            }
        }
    }
    count
}

/// Interior lattice-point count of the dilation `m * P`, i.e.
/// `|mP° ∩ Z^2|`; `m >= 1`.
pub fn interior_count(poly: &RationalPolygon, m: i64) -> u64 {
    let (_, interior) = poly.lattice_profile(m);
    interior
}
