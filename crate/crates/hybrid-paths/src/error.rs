use thiserror::Error;

use crate::evolve::Flavor;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown token {0:?}")]
    UnknownToken(char),
    #[error("horizontal steps come in pairs; found a maximal run of H of odd length")]
    OddHorizontalRun,
    #[error("path dips below the x-axis at unit position {0}")]
    NegativeHeight(usize),
    #[error("path ends at height {0}, not on the x-axis")]
    NonzeroFinalHeight(i64),
    #[error("unit position {0} does not address a step")]
    InvalidPosition(usize),
    #[error("no matching step for the step at unit position {0}")]
    NoMatch(usize),
    #[error("path is not a Dyck path")]
    NotDyck,
    #[error("step at unit position {0} is not a horizontal step")]
    NotHoriz(usize),
    #[error("step at unit position {0} is not a special downstep")]
    NotSpecial(usize),
    #[error("path is not a {0} hybrid path")]
    NotHybrid(Flavor),
    #[error("path contains no horizontal step")]
    NoHorizontal,
    #[error("path is not a valid start for the {0} evolution")]
    WrongStartClass(Flavor),
    #[error("path is not a little hybrid path")]
    NotLittleHybrid,
    #[error("matching contains a {0}-distant crossing")]
    HasKDistantCrossing(usize),
    #[error("matching has no special edge")]
    NoSpecialEdge,
    #[error("not a perfect matching: {0}")]
    InvalidMatching(String),
    #[error("not a permutation of 1..=n: {0}")]
    InvalidPermutation(String),
    #[error("permutation does not avoid the pattern 231")]
    Not231Avoiding,
    #[error("series division needs a nonzero constant term in the divisor")]
    DivisionByZeroConstantTerm,
    #[error("series square root needs a positive perfect-square constant term")]
    NonSquareConstantTerm,
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("two independent computations disagree: {0}")]
    InternalMismatch(String),
    #[error("requested length {0} exceeds the configured cap {1}")]
    LengthTooLarge(usize, usize),
}

impl Error {
    /// Stable machine-readable name, used by the CLI on stderr.
    pub fn name(&self) -> &'static str {
        match self {
            Error::UnknownToken(_) => "UnknownToken",
            Error::OddHorizontalRun => "OddHorizontalRun",
            Error::NegativeHeight(_) => "NegativeHeight",
            Error::NonzeroFinalHeight(_) => "NonzeroFinalHeight",
            Error::InvalidPosition(_) => "InvalidPosition",
            Error::NoMatch(_) => "NoMatch",
            Error::NotDyck => "NotDyck",
            Error::NotHoriz(_) => "NotHoriz",
            Error::NotSpecial(_) => "NotSpecial",
            Error::NotHybrid(_) => "NotHybrid",
            Error::NoHorizontal => "NoHorizontal",
            Error::WrongStartClass(_) => "WrongStartClass",
            Error::NotLittleHybrid => "NotLittleHybrid",
            Error::HasKDistantCrossing(_) => "HasKDistantCrossing",
            Error::NoSpecialEdge => "NoSpecialEdge",
            Error::InvalidMatching(_) => "InvalidMatching",
            Error::InvalidPermutation(_) => "InvalidPermutation",
            Error::Not231Avoiding => "Not231Avoiding",
            Error::DivisionByZeroConstantTerm => "DivisionByZeroConstantTerm",
            Error::NonSquareConstantTerm => "NonSquareConstantTerm",
            Error::OutOfRange(_) => "OutOfRange",
            Error::InternalMismatch(_) => "InternalMismatch",
            Error::LengthTooLarge(_, _) => "LengthTooLarge",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
