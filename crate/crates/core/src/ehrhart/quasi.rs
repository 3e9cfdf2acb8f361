//! Ehrhart quasi-polynomials of rational polygons, built from exact point
//! counts: the leading coefficient is half the normalised volume, the
//! linear coefficients come from counts of `iP` and interiors of
//! `(r-i)P`, and the constant terms are solved from the evaluation
//! identity at `n = i`.

use num_rational::Ratio;

use crate::polygon::{Rat, RationalPolygon};

/// Number of lattice points of the dilation `nP`; `n = 0` gives 1.
pub fn ehrhart_count(poly: &RationalPolygon, n: u64) -> u64 {
    if n == 0 {
        return 1;
    }
    let (b, i) = poly.lattice_profile(n as i64);
    b + i
}

/// Per-residue quadratic coefficients of `n -> |nP ∩ Z^2|` with
/// quasi-period `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiPolynomial {
    r: i64,
    /// `(a2, a1, a0)` for the residue class `n ≡ i (mod r)`.
    components: Vec<(Rat, Rat, Rat)>,
}

impl QuasiPolynomial {
    pub fn quasi_period(&self) -> i64 {
        self.r
    }

    pub fn components(&self) -> &[(Rat, Rat, Rat)] {
        &self.components
    }

    /// Evaluate at any integer, using the component of `n mod r`; negative
    /// arguments give the reciprocity values.
    pub fn evaluate(&self, n: i64) -> Rat {
        let (a2, a1, a0) = self.components[n.rem_euclid(self.r) as usize];
        let n = Rat::from(n);
        a2 * n * n + a1 * n + a0
    }
}

/// The Ehrhart quasi-polynomial of `P` with quasi-period `r` (the stored
/// denominator).
pub fn quasi_polynomial(poly: &RationalPolygon) -> QuasiPolynomial {
    let r = poly.denominator();
    let vol = poly.normalized_volume();
    let a2 = vol / Rat::from(2);
    let mut components = Vec::with_capacity(r as usize);
    for i in 0..r {
        let count_i = Rat::from(ehrhart_count(poly, i as u64) as i64);
        // |(r-i)P° ∩ Z^2|: r-i is always in 1..=r here.
        let interior = Rat::from(poly.lattice_profile(r - i).1 as i64);
        let correction = Ratio::new(r * (2 * i - r), 2) * vol;
        let a1 = (count_i - interior - correction) / Rat::from(r);
        let i_rat = Rat::from(i);
        let a0 = count_i - a2 * i_rat * i_rat - a1 * i_rat;
        components.push((a2, a1, a0));
    }
    QuasiPolynomial { r, components }
}

/// Ehrhart-Macdonald reciprocity at `n >= 1`: the quasi-polynomial at `-n`
/// must count the interior lattice points of `nP`.
pub fn reciprocity_check(poly: &RationalPolygon, n: u64) -> bool {
    assert!(n >= 1);
    let q = quasi_polynomial(poly);
    q.evaluate(-(n as i64)) == Rat::from(poly.lattice_profile(n as i64).1 as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(r: i64, pts: &[(i64, i64)]) -> RationalPolygon {
        RationalPolygon::new(r, pts.iter().copied()).unwrap()
    }

    #[test]
    fn count_examples() {
        let unit = poly(1, &[(0, 0), (1, 0), (0, 1)]);
        assert_eq!(ehrhart_count(&unit, 4), 15); // (n+1)(n+2)/2
        assert_eq!(ehrhart_count(&unit, 0), 1);
        let t21 = poly(2, &[(0, 0), (1, 0), (0, 1)]);
        assert_eq!(ehrhart_count(&t21, 2), 3);
    }

    #[test]
    fn quasi_polynomial_of_half_square() {
        // P = [0, 1/2]^2: counts are (floor(n/2) + 1)^2.
        let p = poly(2, &[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let q = quasi_polynomial(&p);
        assert_eq!(
            q.components()[0],
            (Rat::new(1, 4), Rat::from(1), Rat::from(1))
        );
        assert_eq!(
            q.components()[1],
            (Rat::new(1, 4), Rat::new(1, 2), Rat::new(1, 4))
        );
    }

    #[test]
    fn quasi_polynomial_of_unit_triangle() {
        let p = poly(1, &[(0, 0), (1, 0), (0, 1)]);
        let q = quasi_polynomial(&p);
        assert_eq!(
            q.components()[0],
            (Rat::new(1, 2), Rat::new(3, 2), Rat::from(1))
        );
    }

    #[test]
    fn evaluation_matches_counts() {
        for p in [
            poly(2, &[(0, 0), (1, 0), (0, 1)]),
            poly(2, &[(0, 0), (2, 0), (0, 1), (3, 1)]),
            poly(3, &[(-2, -1), (4, 0), (3, 5), (-1, 3)]),
        ] {
            let q = quasi_polynomial(&p);
            for n in 0..=(3 * p.denominator()) as u64 {
                assert_eq!(
                    q.evaluate(n as i64),
                    Rat::from(ehrhart_count(&p, n) as i64),
                    "n = {n}"
                );
            }
        }
    }

    #[test]
    fn reciprocity_examples() {
        let unit = poly(1, &[(0, 0), (1, 0), (0, 1)]);
        let q = quasi_polynomial(&unit);
        assert_eq!(q.evaluate(-3), Rat::from(1));
        assert!(reciprocity_check(&unit, 3));

        let half_square = poly(2, &[(0, 0), (1, 0), (1, 1), (0, 1)]);
        assert!(reciprocity_check(&half_square, 2));

        let t21 = poly(2, &[(0, 0), (1, 0), (0, 1)]);
        assert!(reciprocity_check(&t21, 1));
    }
}
