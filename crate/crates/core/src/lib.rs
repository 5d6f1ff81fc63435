pub mod cli;
pub mod degree;
pub mod error;
pub mod formulas;
pub mod ideal;
pub mod linalg;
pub mod modrep;
pub mod simplicial;
pub mod verify;

pub use degree::{DegreeBox, Multidegree};
pub use error::{Error, Result};
pub use linalg::FieldSpec;
