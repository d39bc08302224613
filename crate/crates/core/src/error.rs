use thiserror::Error;

/// Errors produced by hypergraph construction and the exact computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incidence {incidence} references unknown {kind} `{name}`")]
    DanglingReference {
        incidence: usize,
        kind: &'static str,
        name: String,
    },
    #[error("duplicate {kind} name `{name}`")]
    DuplicateName { kind: &'static str, name: String },
    #[error("invalid incidence sign `{0}` (expected +1 or -1)")]
    InvalidSign(String),
    #[error("unknown {kind} `{name}`")]
    UnknownElement { kind: &'static str, name: String },
    #[error("vertex `{0}` has no incidences")]
    IsolatedVertex(String),
    #[error("edge `{0}` has no incidences")]
    EmptyEdge(String),
    #[error("edge `{0}` has size greater than 2; not a signed graph")]
    NotASignedGraph(String),
    #[error("not a plain graph encoding: {0}")]
    NotAPlainGraph(String),
    #[error("matrix is {rows}x{cols}; expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("interpolated coefficient {0} is not an integer")]
    InternalNonIntegral(String),
    #[error("invalid contributor: {0}")]
    InvalidContributor(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("resource limit exceeded: {what} > {limit}")]
    ResourceLimit { what: &'static str, limit: u64 },
    #[error("self-verification mismatch in {what}: contributor={contributor} oracle={oracle}")]
    VerificationMismatch {
        what: String,
        contributor: String,
        oracle: String,
    },
    #[error("cannot read {0}")]
    Io(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
