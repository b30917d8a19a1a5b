use thiserror::Error;

use crate::polyring::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("input line {line}: {msg}")]
    Input { line: usize, msg: String },
    #[error("hypersurface equation must be a homogeneous polynomial of degree at least 1")]
    BadEquation,
    #[error("f is not squarefree (a reduced equation is required)")]
    NotSquarefree,
    #[error("product of the declared components differs from f by more than a scalar")]
    ComponentMismatch,
    #[error("this check needs the components of f to be declared")]
    MissingComponents,
    #[error("unsupported ambient dimension r = {r}: {what}")]
    UnsupportedDimension { r: usize, what: &'static str },
    #[error("unsupported degree d = {d}: {what}")]
    UnsupportedDegree { d: u32, what: &'static str },
    #[error("all partial derivatives vanish")]
    GradientVanishes,
    #[error("expected {expected} generators, got {got}")]
    GeneratorCount { expected: usize, got: usize },
    #[error("hypothesis of {theorem} violated: {detail}")]
    HypothesisViolated { theorem: &'static str, detail: String },
    #[error("graded table stops at degree {have}, degree {need} is required")]
    TableTooShort { have: u32, need: u32 },
    #[error("inconsistent node/cusp data: {0}")]
    InconsistentCounts(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
