//! Verification and search toolkit for multicolor Ramsey numbers.
//!
//! - [`formulas`]: a catalog of closed-form Ramsey and bipartite Ramsey
//!   values and bounds, each guarded by its preconditions.
//! - [`constructions`]: explicit lower-bound colorings, verified before they
//!   are returned.
//! - [`search`]: exhaustive arrowing search for exact small values, and a
//!   DIMACS CNF encoder for external SAT solvers.
//! - [`detect`]: exact monochromatic pattern detectors used by all of the above.

pub mod coloring;
pub mod constructions;
pub mod detect;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod json;
pub mod par;
pub mod report;
pub mod search;
pub mod target;

pub use coloring::{Color, EdgeColoring, Host, HostKind, SplitRecipe};
pub use error::{Error, ErrorClass, Result};
pub use graph::SimpleGraph;
pub use par::Parallelism;
pub use target::TargetGraph;
