use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("mismatched free rank: {0} vs {1}")]
    MismatchedRank(usize, usize),
    #[error("element set is not closed under multiplication")]
    NotClosed,
    #[error("family mismatch: cannot combine {0} element with {1} element")]
    FamilyMismatch(&'static str, &'static str),
    #[error("bad family parameter: {0}")]
    BadParam(String),
    #[error("operation requires a subgroup-closed view, but `{0}` is a window")]
    WindowNotClosed(String),
    #[error("graphs have different vertex label lists")]
    LabelMismatch,
    #[error("unknown vertex label: {0}")]
    UnknownLabel(String),
    #[error("graph too large for backtracking isomorphism: {0} vertices (bound {1})")]
    TooLarge(usize, usize),
}
