//! Interior and exterior polynomials of connected hypergraphs.
//!
//! A hypertree of a connected hypergraph is a valence vector on the
//! hyperedges realizable by a spanning tree of the bipartite incidence
//! graph. Under a total order on the hyperedges, each hypertree gets an
//! internal and an external activity count from single-step valence
//! transfers; the interior polynomial `I(x)` counts hypertrees by internal
//! inactivity and the exterior polynomial `X(y)` by external inactivity,
//! and neither depends on the chosen order. For ordinary graphs the two
//! polynomials are reversals of `T(x, 1)` and `T(1, y)`.
//!
//! Everything the computation rests on ships as executable checks: dual
//! implementations for hypertree validity, transfer feasibility, and
//! enumeration; the `verify` module re-checks order independence, the
//! adjacent-transposition argument behind it, and the exchange lemmas on
//! concrete instances; `tutte` cross-validates the graph specialization.

pub mod activity;
pub mod bipartite;
pub mod error;
pub mod fiber;
pub mod gen;
pub mod graph;
pub mod hypergraph;
pub mod hypertree;
pub mod ordering;
pub mod poly;
pub mod report;
pub mod tightness;
pub mod tutte;
pub mod verify;

mod unionfind;

pub use activity::{
    activity_profile, exterior_polynomial, interior_polynomial, polynomial_pair, ActivityProfile,
    TransferCache, TransferTable,
};
pub use bipartite::{build_bipartite, BipartiteGraph, EdgeSet};
pub use error::{Error, Result};
pub use fiber::{fiber_decomposition, partition_into_fibers, Fiber, FiberDecomposition};
pub use gen::{generate_corpus, random_connected_hypergraph, CorpusSpec};
pub use graph::{graph_to_hypergraph, parse_graph, GraphDocument, Multigraph};
pub use hypergraph::{
    parse_hypergraph, Hyperedge, HyperedgeId, Hypergraph, HypergraphDocument, VertexId,
};
pub use hypertree::{
    enumerate_hypertrees, enumerate_hypertrees_by_transfer, enumerate_hypertrees_with_budget,
    hypertree_from_tree, is_hypertree, transfer_valid, Hypertree, SpanningTreeWitness,
    TransferMove, DEFAULT_TREE_BUDGET,
};
pub use ordering::EdgeOrdering;
pub use poly::{IntPolynomial, TuttePolynomial};
pub use report::{Check, Counterexample, Report, Status};
pub use tightness::{
    is_hypertree_polymatroid, is_tight, tight_family, transfer_valid_by_tightness,
    EXHAUSTIVE_EDGE_BOUND,
};
pub use tutte::{crosscheck_specialization, tutte_by_activities, tutte_deletion_contraction};
pub use verify::{
    verify_lemmas, verify_lemmas_in, verify_lemmas_with_budget, verify_order_independence,
    verify_order_independence_in, verify_transposition_in, verify_transposition_proof,
    InstanceContext, OrderingMode,
};
