//! Kernelization toolkit for maximum strong independent set on hypergraphs.
//!
//! A set of vertices is strongly independent when no hyperedge holds more than
//! one of them. [`reduce`] shrinks an instance with nine reduction rules while
//! tracking how many solution vertices are already fixed; [`lift_solution`]
//! turns a solution of the kernel back into one of the input. The remaining
//! modules expand hypergraphs into graphs, export integer programs and solve
//! small instances exactly.
//!
//! ```
//! use hymis::{reduce, solve_exact, Hypergraph, ReducerConfig};
//!
//! let h = Hypergraph::from_edges(3, [vec![1, 2], vec![2, 3]]).unwrap();
//! let result = reduce(h, &ReducerConfig::default()).unwrap();
//! assert_eq!(result.offset, 2);
//! let kernel_solution = solve_exact(&result.kernel.hypergraph, None).unwrap();
//! let lifted = result.lift_kernel_ids(&kernel_solution.members).unwrap();
//! assert_eq!(lifted.cardinality(), 2);
//! ```

pub mod error;
pub mod exact;
pub mod expansion;
pub mod graph;
pub mod hypergraph;
pub mod ilp;
pub mod io;
pub mod reductions;
mod sorted;

pub use error::{Error, Result};
pub use exact::{solve_exact, solve_exact_graph, verify_independent, ExactConfig, Solution};
pub use expansion::clique_expand;
pub use graph::Graph;
pub use hypergraph::{vertex_ids, EdgeId, Hypergraph, VertexId};
pub use ilp::{export_lp_graph, export_lp_hypergraph};
pub use io::StatsReport;
pub use reductions::{
    lift_solution, reduce, Kernel, KernelResult, ReducerConfig, ReductionKind, RuleStats,
    TraceEvent,
};
