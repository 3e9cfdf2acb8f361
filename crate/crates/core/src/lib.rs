//! Exact-arithmetic classification of rational polygons.
//!
//! A rational polygon of denominator `r` is stored through its scaled
//! lattice polygon `rP` with integer vertices; all geometry is integral
//! and rational numbers appear only in derived quantities (widths, Ehrhart
//! coefficients). The crate provides:
//!
//! - geometric primitives: hulls, exact point counting, widths, penumbra
//!   membership and a canonical form for affine unimodular equivalence;
//! - the growing algorithm enumerating all finitely growable polygons of a
//!   fixed denominator and size, plus the zero-interior variant;
//! - Ehrhart quasi-polynomials, reciprocity, denominator-2 point-count
//!   tuples and verifiers for the bounds they satisfy.
//!
//! All types are immutable values; every operation is a pure function, so
//! everything is safe to use from any number of threads.

pub mod canonical;
pub mod ehrhart;
pub mod enumeration;
pub mod error;
pub mod penumbra;
pub mod point;
pub mod polygon;
pub mod width;

pub use canonical::{canonical_form, CanonicalKey};
pub use enumeration::{classify, classify_zero_interior, ClassificationDataset, DatasetEntry};
pub use error::{Error, Result};
pub use penumbra::in_penumbra;
pub use point::{Mat2, ScaledPoint};
pub use polygon::{PointProfile, Rat, RationalPolygon};
pub use width::{reposition_to_width_box, second_width, width, width_along};
