use thiserror::Error;

/// Errors produced by graph construction, searches, and the file formats.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("graph is disconnected (finite-weight part)")]
    Disconnected,
    #[error("edge {{{0}, {1}}} has a non-positive or non-finite weight")]
    NonPositiveWeight(usize, usize),
    #[error("weights given for {weights} edges, expected {edges}")]
    WeightCountMismatch { edges: usize, weights: usize },
    #[error("vertex subset must be nonempty")]
    EmptySubset,
    #[error("vertex {0} listed twice in a subset")]
    DuplicateMember(usize),
    #[error("no generator of the requested kind exists")]
    NoGenerator,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("products are defined on unweighted factors only")]
    WeightedFactor,
    #[error("instance has {vertices} vertices, exact search limit is {limit}")]
    InstanceTooLarge { vertices: usize, limit: usize },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("customer {customer} references unknown vertex {vertex}")]
    UnknownVertex { customer: String, vertex: usize },
    #[error("customers {0} and {1} share a location")]
    DuplicateLocation(String, String),
    #[error("customer {0} has an empty family name")]
    EmptyFamilyName(String),
    #[error("customer graph is disconnected")]
    DisconnectedResult,
    #[error("malformed document: {0}")]
    Format(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
