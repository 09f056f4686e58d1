use thiserror::Error;

/// Everything that can go wrong while building or analysing a diagram.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: duplicate vertex `{name}`")]
    DuplicateVertex { line: usize, name: String },
    #[error("line {line}: duplicate edge {a}-{b}")]
    DuplicateEdge { line: usize, a: String, b: String },
    #[error("line {line}: label {label} on edge {a}-{b} is below 2")]
    LabelTooSmall {
        line: usize,
        a: String,
        b: String,
        label: u64,
    },
    #[error("line {line}: edge endpoint `{name}` was not declared")]
    UndeclaredVertex { line: usize, name: String },
    #[error("invalid generator name `{0}`")]
    InvalidName(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("no edge between `{0}` and `{1}`")]
    NoEdge(String, String),
    #[error("edge `{a}`-`{b}` has label {label}, expected {expected} label")]
    WrongParity {
        a: String,
        b: String,
        label: u32,
        expected: &'static str,
    },
    #[error("subset {{{0}}} is not spherical")]
    NotSpherical(String),
    #[error("search exceeded the cap of {cap} states")]
    StateCapExceeded { cap: usize },
    #[error("diagram has {vertices} vertices, above the canonicalization cap of {cap}")]
    CanonicalizationCap { vertices: usize, cap: usize },
    #[error("twist enumeration exceeded the cap of {cap} moves")]
    MoveCapExceeded { cap: usize },
    #[error("twist class exceeded the cap of {cap} diagrams")]
    ClassCapExceeded { cap: usize },
    #[error("illegal twist: {0}")]
    IllegalMove(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = CoxError> = std::result::Result<T, E>;
