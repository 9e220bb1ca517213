//! Signless Laplacian spread of graphs: spectra, exact combinatorial
//! oracles, a catalog of lower and upper bounds, and the unit-vector
//! gradient search.

pub mod bounds;
pub mod combinatorics;
pub mod edgelist;
pub mod eigen;
pub mod error;
pub mod generators;
pub mod graph;
pub mod matrix;
pub mod minmax;
pub mod par;
pub mod report;
pub mod rng;
pub mod spectra;
pub mod validate;

pub use error::{Error, Result};
pub use graph::{DegreeProfile, Graph};
pub use par::Exec;
