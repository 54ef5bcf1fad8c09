pub mod boundary_residue;
pub mod cli;
pub mod error;
pub mod fiber_algebra;
pub mod interior_residue;
pub mod report;
pub mod scalar_ring;
pub mod symbol_calculus;
pub mod verification_oracle;

pub use error::{EngineError, Result};
pub use scalar_ring::{GaussRat, ParamScalar};
