use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors across the crate. Budget variants signal that a resource cap was
/// hit and the caller may retry with a larger budget; everything else is an
/// input or usage problem.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed document: {0}")]
    MalformedDocument(String),
    #[error("duplicate {kind} identifier `{id}`")]
    DuplicateIdentifier { kind: &'static str, id: String },
    #[error("empty identifier label")]
    EmptyLabel,
    #[error("hyperedge `{0}` is empty")]
    EmptyHyperedge(String),
    #[error("hyperedge `{edge}` references undeclared vertex `{vertex}`")]
    UndeclaredVertex { edge: String, vertex: String },
    #[error("edge `{edge}` references undeclared endpoint `{vertex}`")]
    UndeclaredEndpoint { edge: String, vertex: String },
    #[error("loop edge `{0}` is not representable as a hyperedge")]
    LoopNotRepresentable(String),
    #[error("input graph has a loop edge `{0}`")]
    LoopEdge(String),
    #[error("unknown hyperedge `{0}`")]
    UnknownHyperedge(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("hyperedge index {index} out of range for {edges} hyperedges")]
    EdgeIndexOutOfRange { index: usize, edges: usize },
    #[error("candidate map covers {got} hyperedges, expected {expected}")]
    DomainMismatch { expected: usize, got: usize },
    #[error("ordering must rank every hyperedge exactly once")]
    InvalidOrdering,
    #[error("transfer endpoints must be distinct")]
    IdenticalEndpoints,
    #[error("rank {rank} out of range; expected 1..{edges}")]
    RankOutOfRange { rank: usize, edges: usize },
    #[error("values are not a hypertree of this hypergraph")]
    NotAHypertree,
    #[error("seed is not a hypertree of this hypergraph")]
    InvalidSeed,
    #[error("witness is not a spanning tree of the bipartite graph")]
    InvalidWitness,
    #[error("bipartite incidence graph is not connected")]
    NotConnected,
    #[error("graph is not connected")]
    GraphNotConnected,
    #[error("fiber members do not take consecutive values")]
    NonConsecutiveFiber,
    #[error("spanning-tree budget of {budget} exceeded")]
    TreeBudgetExceeded { budget: u64 },
    #[error("{edges} hyperedges exceed the exhaustive subset bound of {bound}")]
    ExhaustiveBoundExceeded { edges: usize, bound: usize },
    #[error("all-orderings mode supports at most {max} hyperedges, got {edges}")]
    AllOrderingsBudget { edges: usize, max: usize },
    #[error("transfer tables support at most 64 hyperedges, got {0}")]
    TooManyHyperedges(usize),
}

impl Error {
    /// True for errors that mean "a configured resource cap was exceeded".
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::TreeBudgetExceeded { .. }
                | Error::ExhaustiveBoundExceeded { .. }
                | Error::AllOrderingsBudget { .. }
                | Error::TooManyHyperedges(_)
        )
    }
}
