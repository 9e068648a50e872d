//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("summand size list must be nonempty")]
    EmptySizes,
    #[error("summand sizes must be positive (summand {summand} has size 0)")]
    NonPositiveSize { summand: usize },
    #[error("index out of range: {what} = {got}, valid range 1..={max}")]
    IndexOutOfRange {
        what: &'static str,
        got: usize,
        max: usize,
    },
    #[error("entry ({row},{col}) lies outside the block-diagonal index set")]
    OutsideIndexSet { row: usize, col: usize },
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("map domain/codomain mismatch: {0}")]
    MapMismatch(String),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("level {level} is out of range and the diagram has no tail")]
    LevelOutOfRange { level: usize },
    #[error("telescope levels must be strictly increasing")]
    NonIncreasingLevels,
    #[error("multiplicity arithmetic overflowed u64")]
    MultiplicityOverflow,
    #[error("classification requires an eventually periodic tail")]
    UnsupportedClassification,
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("map is not of ordered compression type")]
    NotOrdered,
    #[error("invalid isometry certificate: {0}")]
    InvalidCertificate(String),
    #[error("no Fermion witness available in the target (deepest level searched: {deepest})")]
    FermionUnavailable { deepest: usize },
    #[error("direct system has no generator and cannot be extended past level {materialized}")]
    SystemExhausted { materialized: usize },
    #[error("construction search exhausted its level budget ({budget})")]
    ConstructionNotFound { budget: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
}

pub type Result<T> = std::result::Result<T, Error>;
