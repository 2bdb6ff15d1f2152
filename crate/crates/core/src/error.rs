use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty polyhedron where a nonempty one is required")]
    EmptyInput,
    #[error("ambient rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("tail cone is not pointed")]
    NotPointed,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("no shelling order exists")]
    NotShellable,
    #[error("shelling search exceeds the backtracking budget ({0} maximal cells)")]
    SearchBudgetExceeded(usize),
    #[error("invalid polyhedral complex: {0}")]
    InvalidComplex(String),
    #[error("weight is not in the dual of the tail cone")]
    NotInDualCone,
    #[error("point {0} is excluded from the locus")]
    EmptyCoefficient(String),
    #[error("unknown point label {0}")]
    UnknownLabel(String),
    #[error("point {0} is excluded from every locus")]
    PointNotCovered(String),
    #[error("divisorial fan is invalid: {0}")]
    FanInvalid(String),
    #[error("validation failed: {0}")]
    ValidationFailed(String),
    #[error("not complete: {0}")]
    NotComplete(String),
    #[error("not simplicial: {0}")]
    NotSimplicial(String),
    #[error("slice at {0} is not shellable")]
    NotShellableSlice(String),
    #[error("negative Betti number b_{degree} = {value}")]
    NegativeBetti { degree: usize, value: i64 },
    #[error("curve genus {0} is not zero")]
    GenusNotZero(u32),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("hypotheses not met: {0}")]
    NotApplicable(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// The variant name, for machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::EmptyInput => "EmptyInput",
            Error::RankMismatch(..) => "RankMismatch",
            Error::NotPointed => "NotPointed",
            Error::Invalid(_) => "Invalid",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::NotShellable => "NotShellable",
            Error::SearchBudgetExceeded(_) => "SearchBudgetExceeded",
            Error::InvalidComplex(_) => "InvalidComplex",
            Error::NotInDualCone => "NotInDualCone",
            Error::EmptyCoefficient(_) => "EmptyCoefficient",
            Error::UnknownLabel(_) => "UnknownLabel",
            Error::PointNotCovered(_) => "PointNotCovered",
            Error::FanInvalid(_) => "FanInvalid",
            Error::ValidationFailed(_) => "ValidationFailed",
            Error::NotComplete(_) => "NotComplete",
            Error::NotSimplicial(_) => "NotSimplicial",
            Error::NotShellableSlice(_) => "NotShellableSlice",
            Error::NegativeBetti { .. } => "NegativeBetti",
            Error::GenusNotZero(_) => "GenusNotZero",
            Error::BudgetExceeded(_) => "BudgetExceeded",
            Error::NotApplicable(_) => "NotApplicable",
            Error::Parse(_) => "ParseError",
        }
    }
}
