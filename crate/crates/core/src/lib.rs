pub mod asymptotics;
pub mod catalog;
pub mod cli;
pub mod complex;
pub mod error;
pub mod laurent;
pub mod lobachevsky;
pub mod quantum;
pub mod solver;

pub use asymptotics::{EvalPath, QSample, RootSchedule};
pub use catalog::{Catalog, KnotRecord};
pub use complex::BigComplex;
pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use quantum::Basis;
pub use solver::{DivisibilityWitness, HkSolution};
