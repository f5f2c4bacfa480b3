//! Zero forcing under leaks.
//!
//! Computes closures, forcing processes and possible-force sets under vertex,
//! edge, specified (arc) and mixed leaks; decides leaky-forcing membership and
//! minimum leaky forcing numbers with certificates; and cross-checks the
//! equivalences between the leak flavors against brute-force oracles.

pub mod error;
pub mod forcing;
pub mod format;
pub mod graph;
pub mod leak;
pub mod solver;
pub mod verify;
pub mod vertex_set;

pub use error::{Error, Result};
pub use forcing::{ClosureResult, Force, ForcingProcess};
pub use graph::{Family, Graph};
pub use leak::{ArcSet, Leak, LeakBudget, LeakKind, LeakPattern, LeakSet};
pub use solver::{NumberResult, Verdict};
pub use vertex_set::VertexSet;
