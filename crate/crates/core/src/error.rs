use thiserror::Error;

use crate::monoid::RestrictionFailure;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("degenerate cone: {0}")]
    DegenerateCone(String),

    #[error("evaluation at a pole: {0}")]
    Pole(String),

    /// The cone violates the restriction condition.
    #[error("not a monoid: cone contains {} but not {}", .0.point, .0.missing)]
    NotAMonoid(Box<RestrictionFailure>),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("no explicit chart for {0}")]
    NotImplementedChart(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
