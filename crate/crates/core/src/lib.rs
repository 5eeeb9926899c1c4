//! Vertex cover kernelization.
//!
//! * [`classic`]: Buss, crown and LP kernels.
//! * [`degree`]: small-degree rules and the minimum-degree driver.
//! * [`lift`]: mapping kernel covers back to the input graph.
//! * [`pipeline`]: named chains of the above.
//! * [`solver`]: brute force and branching exact solvers.
//! * [`profile`]: boundaried graphs, profiles, equivalence checks and
//!   replacement discovery.
//! * [`corpus`]: graph generators used by the test suites.

mod bits;
pub mod classic;
pub mod corpus;
pub mod degree;
pub mod dimacs;
pub mod error;
pub mod graph;
pub mod kernel;
pub mod lift;
pub mod matching;
pub mod pipeline;
pub mod profile;
pub mod solver;
pub mod trace;

pub use error::{Error, Result};
pub use graph::{Graph, Instance, VertexId, VertexSet};
pub use kernel::{KernelOutcome, Reduction};
pub use lift::lift_solution;
pub use pipeline::Pipeline;
pub use trace::{ReductionTrace, RuleTag, TraceEvent};
