use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("tree must have at least one vertex")]
    EmptyTree,
    #[error("expected {expected} edges for {n} vertices, found {found}")]
    EdgeCount { n: usize, expected: usize, found: usize },
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("edge set is not connected")]
    Disconnected,
    #[error("Pruefer entry {entry} out of range for {n} vertices")]
    PrueferOutOfRange { entry: usize, n: usize },
    #[error("Pruefer encoding needs at least 2 vertices")]
    PrueferTooSmall,
    #[error("{what} limited to order {limit}, got {n}")]
    TooLarge { what: &'static str, n: usize, limit: usize },
    #[error("alpha = {0} is degenerate (0 and 1 are excluded)")]
    DegenerateAlpha(f64),
    #[error("alpha must be finite, got {0}")]
    NonFiniteAlpha(f64),
    #[error("0^alpha is undefined for the single-vertex tree with alpha = {0}")]
    IsolatedVertexPower(f64),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("canonical code is malformed: {0}")]
    BadCode(String),
    #[error("unknown format `{0}`")]
    UnknownFormat(String),
    #[error("family construction failed: {0}")]
    Construction(String),
}
