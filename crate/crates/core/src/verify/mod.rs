//! Instance-level verification: order independence of the polynomials, the
//! adjacent-transposition argument behind it, and the exchange lemmas the
//! argument rests on. Every verifier returns a structured report; a failing
//! assertion carries a self-contained counterexample.

mod lemmas;
mod order_independence;
mod transposition;

pub use lemmas::{verify_lemmas, verify_lemmas_in, verify_lemmas_with_budget, LEMMA_SUITE_EDGE_BOUND};
pub use order_independence::{
    verify_order_independence, verify_order_independence_in, OrderingMode, MAX_ALL_ORDERING_EDGES,
};
pub use transposition::{verify_transposition_in, verify_transposition_proof};

use crate::activity::TransferTable;
use crate::bipartite::{build_bipartite, BipartiteGraph};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::hypertree::{enumerate_hypertrees_with_budget, Hypertree, DEFAULT_TREE_BUDGET};

/// A connected instance with its hypertree basis and transfer table
/// enumerated once, shared across repeated verification runs.
#[derive(Debug, Clone)]
pub struct InstanceContext {
    hypergraph: Hypergraph,
    bip: BipartiteGraph,
    basis: Vec<Hypertree>,
    table: TransferTable,
}

impl InstanceContext {
    pub fn new(hypergraph: &Hypergraph) -> Result<Self> {
        InstanceContext::with_budget(hypergraph, DEFAULT_TREE_BUDGET)
    }

    pub fn with_budget(hypergraph: &Hypergraph, tree_budget: u64) -> Result<Self> {
        let bip = build_bipartite(hypergraph);
        if !bip.is_connected() {
            return Err(Error::NotConnected);
        }
        let basis = enumerate_hypertrees_with_budget(&bip, tree_budget)?;
        let table = TransferTable::build(&bip, &basis)?;
        Ok(InstanceContext {
            hypergraph: hypergraph.clone(),
            bip,
            basis,
            table,
        })
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.hypergraph
    }

    pub fn bip(&self) -> &BipartiteGraph {
        &self.bip
    }

    pub fn basis(&self) -> &[Hypertree] {
        &self.basis
    }

    pub fn table(&self) -> &TransferTable {
        &self.table
    }
}
