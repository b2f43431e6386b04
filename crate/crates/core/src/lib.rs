//! Maximum clique toolkit for large sparse graphs.
//!
//! * [`exact`]: branch-and-bound maximum clique with degree-based pruning.
//! * [`heuristic`]: greedy single-path variant of the same search.
//! * [`parallel`]: multi-threaded root loop sharing one incumbent.
//! * [`community`]: clique-percolation communities and the Omega index.
//! * [`rmat`], [`generators`]: synthetic and structured test graphs.
//! * [`oracle`]: slow reference solvers for cross-checking.

pub mod bound;
pub mod community;
pub mod error;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod heuristic;
pub mod io;
pub mod oracle;
pub mod parallel;
pub mod result;
pub mod rmat;
mod seed;

pub use bound::{Bound, BoundObserver, LocalBound};
pub use error::{Error, Result};
pub use exact::{clique_extend, max_clique, ExactSolver};
pub use graph::{build_csr, CsrGraph, EdgeList, Vertex};
pub use heuristic::{max_clique_heuristic, SelectionPolicy};
pub use parallel::{max_clique_parallel, run_parallel, Algorithm, ParallelConfig};
pub use result::{CliqueResult, PruningStats};
pub use rmat::{rmat_generate, RmatFamily, RmatParams};
