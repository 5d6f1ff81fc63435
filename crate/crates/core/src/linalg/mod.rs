//! Exact linear algebra over prime fields and the rationals.

pub mod bareiss;
pub mod complex;
pub mod elim;
mod field;
pub mod gf2;
mod matrix;

pub use complex::{
    cohomology, connecting_map, induced_map, ChainMap, CochainComplex, CohomologyBasis,
    CohomologyMap, ShortExactSequence,
};
pub use elim::{kernel_basis, rank};
pub use field::{is_prime, Field, FieldSpec, PrimeField, Rationals};
pub use matrix::Matrix;
