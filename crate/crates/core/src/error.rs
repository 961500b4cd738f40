use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("edge index {edge} out of range for a graph with {edge_count} edges")]
    EdgeOutOfRange { edge: usize, edge_count: usize },

    #[error("edge {0} is a loop and cannot be contracted")]
    ContractLoop(usize),

    #[error("graphs with more than {max} edges are not supported (got {got})")]
    TooManyEdges { got: usize, max: usize },

    #[error("edge permutation is not a permutation of 0..{0}")]
    BadPermutation(usize),

    #[error("matrix dimensions do not match: {0}")]
    Dimension(String),

    #[error("composition of consecutive differentials is nonzero: {0}")]
    ComplexIntegrity(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("enumeration budget exceeded: {needed} maps > budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("torsion coefficient does not fit in 64 bits")]
    Overflow,
}
