//! Ehrhart theory of rational polygons: quasi-polynomials, reciprocity,
//! denominator-2 point-count tuples and the verifiers for the bounds they
//! satisfy.

mod families;
mod lemmas;
mod quasi;
mod tuples;
mod verify;

pub use families::{boundary_family_tuple, zero_interior_family, Family};
pub use lemmas::{hourglass_check, trapezium_identity_check};
pub use quasi::{ehrhart_count, quasi_polynomial, reciprocity_check, QuasiPolynomial};
pub use tuples::{
    classify_tuple, ehrhart_tuple, inf_growable_tuple_check, scott_check, Condition, EhrhartTuple,
    TupleVerdict,
};
pub use verify::{verify_dataset, BoundViolation, ExceptionEntry, VerificationReport};
