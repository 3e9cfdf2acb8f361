//! Minimal-polygon generation and the growing algorithm: the complete set
//! of finitely growable denominator-`r` size-`k` polygons up to
//! equivalence, plus the zero-interior variant.

mod classify;
mod grow;
mod minimal;
mod zero_interior;

pub use classify::{classify, ClassificationDataset, DatasetEntry, GrowthStats};
pub use grow::{collinear_bound_ok, grow_candidates, grow_step, is_infinitely_growable};
pub use minimal::{
    lattice_polygons_of_size, minimal_polygons, minimal_size_zero, minimal_size_zero_by_filter,
};
pub use zero_interior::{classify_zero_interior, zero_interior_seeds};
