use crate::model::Signature;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("empty signature: a type needs at least one relation kind")]
    EmptySignature,
    #[error("arity {arity} of kind {kind} is below 2")]
    ArityTooSmall { kind: usize, arity: usize },
    #[error("empty base set")]
    EmptyBaseSet,
    #[error("relation count {found} does not match the {expected} kinds of the signature")]
    KindCountMismatch { expected: usize, found: usize },
    #[error("arity mismatch: kind {kind} expects {expected} entries, tuple has {found}")]
    ArityMismatch {
        kind: usize,
        expected: usize,
        found: usize,
    },
    #[error("vertex {vertex} out of range in kind {kind} (base set has {n} vertices)")]
    VertexOutOfRange { kind: usize, vertex: usize, n: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("signature mismatch: ({left}) vs ({right})")]
    SignatureMismatch { left: Signature, right: Signature },
    #[error("resource ceiling exceeded: {what} needs {needed} candidates, ceiling is {ceiling}")]
    CeilingExceeded {
        what: String,
        needed: u128,
        ceiling: u64,
    },
    #[error("input is not a tree")]
    NotATree,
    #[error("input is not a connected tree with at least one tuple")]
    NotAConnectedTree,
    #[error("input {index} is not a forest")]
    NotAForest { index: usize },
    #[error("elements {first} and {second} are comparable, so the list is not an antichain")]
    NotAnAntichain { first: usize, second: usize },
    #[error("inputs {first} and {second} admit a homomorphism between them")]
    NotHomFree { first: usize, second: usize },
    #[error("bounded verification failed up to {bound} vertices: {detail}")]
    VerificationFailed { bound: usize, detail: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("conditions 5 and 6 are defined only for the digraph signature (2), got ({0})")]
    NotDigraph(Signature),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    pub(crate) fn io(path: &std::path::Path, err: impl std::fmt::Display) -> Self {
        Error::Io {
            path: path.display().to_string(),
            message: err.to_string(),
        }
    }
}
