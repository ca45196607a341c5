//! Finite cubic implication algebras and MR-algebras.
//!
//! Algebras are explicit tables over carrier indices `0..n`. The crate builds
//! interval, face and filter algebras, model-checks the axioms, computes
//! quotients, filters and automorphism groups, and re-verifies the structure
//! theory of inner automorphisms on finite instances.

pub mod automorphisms;
pub mod constructions;
pub mod corpus;
pub mod cubic;
pub mod error;
pub mod filters;
pub mod format;
pub mod functors;
pub mod limits;
pub mod report;
pub mod set;
pub mod verify;

pub use cubic::{CubicAlgebra, JoinSemilattice, Validity, UNDEFINED};
pub use error::{Error, Result};
pub use limits::Limits;
pub use report::{AxiomReport, Violation, WitnessPolicy};
pub use set::ElementSet;
