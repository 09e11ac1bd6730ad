//! Library error type.

use std::fmt;

/// Errors raised by graph construction, polynomial engines, and certification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An edge endpoint is outside `0..vertex_count`.
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    /// The same edge was given twice.
    DuplicateEdge(usize, usize),
    /// An edge joins a vertex to itself.
    SelfLoop(usize),
    /// The two distinguished vertices of a marked graph must be adjacent.
    MarksNotAdjacent { v: usize, w: usize },
    /// A marked graph is missing its second distinguished vertex.
    MissingSecondMark,
    /// Concatenation of zero copies through a single vertex is undefined.
    EmptyConcatenation,
    /// The operation requires an acyclic graph.
    NotAForest,
    /// The graph is too large for the requested engine.
    TooLarge { vertices: usize, cap: usize },
    /// A configurable resource budget (memo entries, subdivision boxes, ...) ran out.
    BudgetExceeded(String),
    /// The zero polynomial has no roots to count.
    ZeroPolynomial,
    /// An operation's precondition on its numeric input failed.
    BadInput(String),
    /// Numeric root refinement did not converge.
    RootFindingFailed(String),
    /// Malformed edge-list text.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, vertex_count } => {
                write!(f, "vertex {vertex} out of range for graph on {vertex_count} vertices")
            }
            Error::DuplicateEdge(u, v) => write!(f, "duplicate edge ({u}, {v})"),
            Error::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            Error::MarksNotAdjacent { v, w } => {
                write!(f, "distinguished vertices {v} and {w} are not adjacent")
            }
            Error::MissingSecondMark => write!(f, "marked graph has no second distinguished vertex"),
            Error::EmptyConcatenation => write!(f, "concatenation requires at least one copy"),
            Error::NotAForest => write!(f, "input graph contains a cycle"),
            Error::TooLarge { vertices, cap } => {
                write!(f, "graph on {vertices} vertices exceeds engine cap {cap}")
            }
            Error::BudgetExceeded(what) => write!(f, "budget exceeded: {what}"),
            Error::ZeroPolynomial => write!(f, "zero polynomial"),
            Error::BadInput(msg) => write!(f, "bad input: {msg}"),
            Error::RootFindingFailed(msg) => write!(f, "root finding failed: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
