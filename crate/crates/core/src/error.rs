use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("polynomial must be square-free")]
    RequiresSquarefree,

    #[error("refinement cap of {0} iterations reached without a decision")]
    PrecisionExhausted(usize),

    #[error("curves {0} and {1} are proportional")]
    DuplicateCurve(usize, usize),

    #[error("conic is singular (zero Gram determinant)")]
    SingularConic,

    #[error("curves {0} and {1} are tangent: the arrangement has a non-ordinary singularity")]
    NonOrdinarySingularity(usize, usize),

    #[error("a point lies on all {0} curves of the arrangement")]
    ForbiddenFullPoint(usize),

    #[error("arrangement needs at least 3 curves, got {0}")]
    TooFewCurves(usize),

    #[error("characteristic number undefined: c2 vanishes")]
    UndefinedSlope,

    #[error("no cover for p = {p} with d = {d} lines")]
    UnsupportedCoverCase { p: u64, d: usize },

    #[error("no consistent curve assignment for synthetic blow-up points: {0}")]
    SyntheticAssignment(String),

    #[error("generation failed after {0} attempts")]
    GenerationFailed(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("theorem contradiction: {0}")]
    TheoremContradiction(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    /// Short machine-readable tag, used in CLI error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) => "InvalidInput",
            Error::RequiresSquarefree => "RequiresSquarefree",
            Error::PrecisionExhausted(_) => "PrecisionExhausted",
            Error::DuplicateCurve(..) => "DuplicateCurve",
            Error::SingularConic => "SingularConic",
            Error::NonOrdinarySingularity(..) => "NonOrdinarySingularity",
            Error::ForbiddenFullPoint(_) => "ForbiddenFullPoint",
            Error::TooFewCurves(_) => "TooFewCurves",
            Error::UndefinedSlope => "UndefinedSlope",
            Error::UnsupportedCoverCase { .. } => "UnsupportedCoverCase",
            Error::SyntheticAssignment(_) => "SyntheticAssignment",
            Error::GenerationFailed(_) => "GenerationFailed",
            Error::Parse(_) => "Parse",
            Error::TheoremContradiction(_) => "TheoremContradiction",
            Error::NotApplicable(_) => "NotApplicable",
            Error::Internal(_) => "Internal",
        }
    }
}
