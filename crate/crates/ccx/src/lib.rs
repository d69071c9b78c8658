//! Exact combinatorial topology toolkit: normal curves on closed oriented
//! surfaces, curve complexes and cut-system graphs at desk scale, and
//! machine-checkable edge-loop homotopy certificates.
//!
//! Everything is exact integer combinatorics; no floating point, no
//! randomness in the library itself. All values are immutable after
//! construction and all operations are pure functions of their inputs.

pub mod bounds;
pub mod complexes;
pub mod jmap;
pub mod reduction;
pub mod simplicial;
pub mod surface;

mod error;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
