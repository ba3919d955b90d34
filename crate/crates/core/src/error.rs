use thiserror::Error;

/// Every failure mode exposed by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("basis exchange fails: {0}")]
    NotAMatroid(String),
    #[error("matroid needs at least one basis")]
    EmptyBases,
    #[error("bases have unequal cardinalities")]
    SizeMismatch,
    #[error("rank {rank} out of range for ground set of size {ground}")]
    RankOutOfRange { rank: usize, ground: usize },
    #[error("ground set of size {0} is not supported (need 1..=63)")]
    GroundTooLarge(usize),
    #[error("element {0} lies outside the ground set")]
    ElementOutOfRange(usize),
    #[error("flats are not nested")]
    NotNested,
    #[error("{0} is not a flat")]
    NotAFlat(String),
    #[error("sequence has a negative entry")]
    NegativeEntry,
    #[error("invalid bisequence: {0}")]
    InvalidBisequence(String),
    #[error("invalid biflag: {0}")]
    InvalidBiflag(String),
    #[error("point is not in chart {0}")]
    ChartMismatch(usize),
    #[error("not a bipermutation: {0}")]
    NotABipermutation(String),
    #[error("matroid has loops")]
    HasLoops,
    #[error("matroid has loops or coloops")]
    HasLoopsOrColoops,
    #[error("{0} is not a bnbc basis")]
    NotBnbc(String),
    #[error("biflag length plus exponent exceeds the fan dimension")]
    DimensionOverflow,
    #[error("biflag length {len} plus exponent {m} must equal {dim}")]
    LengthMismatch { len: usize, m: usize, dim: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("weight is not balanced")]
    Unbalanced,
    #[error("map is not a morphism of fans: {0}")]
    NotAMorphism(String),
    #[error("invalid fan: {0}")]
    InvalidFan(String),
    #[error("cone {0:?} is not in the fan")]
    ConeNotInFan(Vec<usize>),
    #[error("monomial budget exceeded: {needed} > {budget}")]
    ResourceGuard { needed: usize, budget: usize },
    #[error("fan is not Lefschetz-eligible: {0}")]
    NotLefschetzEligible(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable name of the variant, used in machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotAMatroid(_) => "NotAMatroid",
            Error::EmptyBases => "EmptyBases",
            Error::SizeMismatch => "SizeMismatch",
            Error::RankOutOfRange { .. } => "RankOutOfRange",
            Error::GroundTooLarge(_) => "GroundTooLarge",
            Error::ElementOutOfRange(_) => "ElementOutOfRange",
            Error::NotNested => "NotNested",
            Error::NotAFlat(_) => "NotAFlat",
            Error::NegativeEntry => "NegativeEntry",
            Error::InvalidBisequence(_) => "InvalidBisequence",
            Error::InvalidBiflag(_) => "InvalidBiflag",
            Error::ChartMismatch(_) => "ChartMismatch",
            Error::NotABipermutation(_) => "NotABipermutation",
            Error::HasLoops => "HasLoops",
            Error::HasLoopsOrColoops => "HasLoopsOrColoops",
            Error::NotBnbc(_) => "NotBnbc",
            Error::DimensionOverflow => "DimensionOverflow",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::Unbalanced => "Unbalanced",
            Error::NotAMorphism(_) => "NotAMorphism",
            Error::InvalidFan(_) => "InvalidFan",
            Error::ConeNotInFan(_) => "ConeNotInFan",
            Error::ResourceGuard { .. } => "ResourceGuard",
            Error::NotLefschetzEligible(_) => "NotLefschetzEligible",
            Error::Parse(_) => "ParseError",
            Error::Internal(_) => "Internal",
        }
    }

    /// Process exit code: 3 for resource refusals, 1 for internal
    /// inconsistencies, 2 for everything caused by the input.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ResourceGuard { .. } => 3,
            Error::Internal(_) => 1,
            _ => 2,
        }
    }
}
