use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} is isolated; strip isolated vertices first")]
    IsolatedVertex(usize),
    #[error("graph is not ({c}, {epsilon})-sparse: vertex {vertex} has {nbhd_edges} edges among its {degree} neighbours")]
    NotSparse {
        c: f64,
        epsilon: f64,
        vertex: usize,
        degree: usize,
        nbhd_edges: usize,
    },
    #[error("epsilon must lie in [0, 1], got {0}")]
    InvalidEpsilon(f64),
    #[error("c must be positive, got {0}")]
    NonPositiveC(f64),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("expected a vector of length {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("normalized inner product {ratio} on edge {u}-{v} is outside [-1, 1]")]
    ArcsinDomain { u: usize, v: usize, ratio: f64 },
    #[error("invalid partial cut: {0}")]
    InvalidPartialCut(String),
    #[error("graph is not regular")]
    NotRegular,
    #[error("alpha must lie in [1, 2], got {0}")]
    InvalidAlpha(f64),
    #[error("tau must lie in (0, 1), got {0}")]
    InvalidTau(f64),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("invalid size: {0}")]
    InvalidSize(String),
    #[error("probability must lie in [0, 1], got {0}")]
    InvalidProbability(f64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("k = {k} out of range 1..={max}")]
    KOutOfRange { k: usize, max: usize },
    #[error("graph with {n} vertices exceeds the limit of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("K_{{s,t}} check supports 1 <= s <= t, s <= 3, t <= 4; got s={s}, t={t}")]
    KstTooLarge { s: usize, t: usize },
    #[error("power iteration did not converge after {0} iterations")]
    NoConvergence(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
