use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("enumeration budget exceeded (limit {limit})")]
    BudgetExceeded { limit: u64 },

    #[error("index {index} out of range (size {size})")]
    OutOfRange { index: usize, size: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    // LP complementation
    #[error("optimal value {0} is not greater than one")]
    OptNotAboveOne(String),
    #[error("LP is not solved to optimality ({0})")]
    NotOptimal(String),
    #[error("LP data is not integral")]
    NotIntegral,
    #[error("payoff entry {0} lies outside [0, 1]")]
    PayoffOutOfRange(String),
    #[error("degenerate game value {0}")]
    DegenerateGame(String),

    // hypergraph parameters
    #[error("parameter LP is infeasible: {0}")]
    InfeasibleParameter(String),
    #[error("parameter LP is unbounded: {0}")]
    UnboundedParameter(String),
    #[error("no admissible subset for the ratio bound")]
    NoAdmissibleSubset,
    #[error("hypergraph is not nontrivial (empty edge or universal vertex)")]
    NotNontrivial,

    // matroids
    #[error("bases have unequal sizes")]
    UnequalBasisSizes,
    #[error("basis exchange axiom violated")]
    ExchangeAxiomViolated,
    #[error("matroid has rank zero")]
    RankZero,
    #[error("matroid is trivial (rank zero or has a coloop)")]
    Trivial,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no edges")]
    NoEdges,

    // graph applications
    #[error("vertex {0} has an empty neighbourhood, no total dominating set exists")]
    NoTotalDominatingSet(usize),
    #[error("vertex {0} is in-universal")]
    InUniversalVertex(usize),
    #[error("graph has no edges")]
    EmptyGraph,

    /// A checked identity failed. This indicates a bug, not bad input.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
