// SPDX-License-Identifier: Apache-2.0
use thiserror::Error;

/// Domain errors raised by the limit-algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("n-ary evaluation over an empty index set")]
    EmptyIndexSet,
    #[error("operation needs a nonempty list")]
    EmptyList,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix order {0} exceeds the supported maximum of 8")]
    TooLarge(usize),
    #[error("radius must be nonnegative, got {0}")]
    NegativeRadius(String),
    #[error("invalid hull combination: {0}")]
    InvalidCombination(String),
    #[error("invalid coefficients: {0}")]
    InvalidCoefficients(String),
    #[error("points do not share a closed orthant")]
    OrthantViolation,
    #[error("point is not a member: {0}")]
    NotAMember(String),
    #[error("the two points coincide")]
    DegeneratePair,
    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),
    #[error("the lines are not parallel")]
    NotParallel,
    #[error("the limit inner product of the two vectors is not zero")]
    NotOrthogonal,
    #[error("the triple is not right-angled in the limit sense")]
    NotRightAngled,
    #[error("zero vector is not allowed here")]
    ZeroVector,
    #[error("point is not on the Chebyshev unit square")]
    NotOnUnitSquare,
    #[error("zero argument has no polar form")]
    ZeroArgument,
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

impl Error {
    /// Stable snake_case identifier, used in machine-readable error output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyIndexSet => "empty_index_set",
            Error::EmptyList => "empty_list",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::TooLarge(_) => "too_large",
            Error::NegativeRadius(_) => "negative_radius",
            Error::InvalidCombination(_) => "invalid_combination",
            Error::InvalidCoefficients(_) => "invalid_coefficients",
            Error::OrthantViolation => "orthant_violation",
            Error::NotAMember(_) => "not_a_member",
            Error::DegeneratePair => "degenerate_pair",
            Error::DegenerateConfiguration(_) => "degenerate_configuration",
            Error::NotParallel => "not_parallel",
            Error::NotOrthogonal => "not_orthogonal",
            Error::NotRightAngled => "not_right_angled",
            Error::ZeroVector => "zero_vector",
            Error::NotOnUnitSquare => "not_on_unit_square",
            Error::ZeroArgument => "zero_argument",
            Error::Parse { .. } => "parse_error",
        }
    }

    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
