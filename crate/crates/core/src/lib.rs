//! Constructive search for intersecting or linked simplex pairs among
//! n+3 general-position points in R^n, with exact rational arithmetic
//! end to end.
//!
//! Given n+3 points with rational coordinates, no n+1 of which share a
//! hyperplane, the library finds:
//!
//! * **n even** — two disjoint (n+2)/2-point subsets whose simplex
//!   interiors share a common point ([`sweep::find_even_partition`]);
//! * **n odd** — two disjoint (n+3)/2-point subsets spanning linked
//!   simplices ([`sweep::find_odd_partition`]).
//!
//! Every result carries a machine-checkable [`verify::Certificate`] that
//! an independent verifier re-derives from scratch, and a brute-force
//! [`oracle`] enumerates all qualifying pairs for cross-checking. No
//! floating point is used anywhere: all predicates are exact, and all
//! outputs are deterministic functions of the input.

pub mod configuration;
pub mod document;
pub mod error;
pub mod generator;
pub mod linalg;
pub mod oracle;
mod qserde;
pub mod sweep;
pub mod verify;

pub use configuration::{Configuration, GeneralPositionReport};
pub use error::{Error, Result};
pub use generator::{GenKind, GenSpec};
pub use linalg::{Mat, Rational, Sign};
pub use oracle::{EnumOptions, EnumerationReport};
pub use sweep::{Parity, PartitionResult, PlaneBasis, SweepOrder};
pub use verify::Certificate;
