//! The brute-force side: modules as representations on a box, complexes of
//! them, the Nakayama functor, Koszul tensoring and cohomology tables.

mod complex;
mod module;
mod table;

pub use complex::{max_cells, ComplexOfReps, DEFAULT_MAX_CELLS};
pub use module::{alexander_dual_module, interval_module, quotient_module, ModuleRep};
pub use table::{cohomology_table, CohomologyTable, DimEntry, MultEntry};
