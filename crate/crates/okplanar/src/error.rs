use thiserror::Error;

/// Unordered vertex pair, always stored with the smaller id first.
pub type Edge = (usize, usize);

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid drawing: {0}")]
    InvalidDrawing(String),

    #[error("trivial instance: fewer than 3 vertices")]
    TrivialInstance,

    #[error("drawing is not hull-complete: missing edge between consecutive positions {0} and {1}")]
    NotHullComplete(usize, usize),

    #[error("three edges concurrent at one point under every placement in the retry schedule: {0:?}, {1:?}, {2:?}")]
    ThreeConcurrentEdges(Edge, Edge, Edge),

    #[error("drawing is not outer min-{k}-planar: edges {e:?} and {f:?} cross with counts {ce} and {cf}")]
    NotMinKPlanar {
        k: usize,
        e: Edge,
        f: Edge,
        ce: usize,
        cf: usize,
    },

    #[error("internal: dual depth {depth} exceeds bound {bound} at face {face}")]
    DepthBoundViolated {
        face: usize,
        depth: usize,
        bound: usize,
    },

    #[error("internal: {what} = {got} exceeds proven bound {bound}")]
    BoundViolated {
        what: &'static str,
        got: usize,
        bound: usize,
    },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("internal: {0}")]
    Internal(String),

    #[error("instance too large for exact oracle: {n} > cap {cap}")]
    TooLarge { n: usize, cap: usize },

    #[error("exact oracle budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
