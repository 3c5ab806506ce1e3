use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGeneratorList,
    #[error("generator {index} has degree {found}, expected {expected}")]
    DegreeMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("permutation degree must be positive")]
    ZeroDegree,
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),
    #[error("cycle notation error at byte {offset}: {message}")]
    CycleSyntax { offset: usize, message: String },
    #[error("group order exceeds the element cap of {cap}")]
    OrderExceedsCap { cap: usize },
    #[error("C({n}, {k}) = {count} k-subsets exceeds the subset budget of {budget}")]
    SubsetBudgetExceeded {
        n: usize,
        k: usize,
        count: u128,
        budget: usize,
    },
    #[error("k = {k} is outside 0..={n}")]
    SubsetSizeOutOfRange { n: usize, k: usize },
    #[error("degree {n} is too large for an exhaustive subgroup scan (max {max})")]
    DegreeTooLarge { n: usize, max: usize },

    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("field of order {p}^{e} is outside the supported range")]
    FieldTooLarge { p: u32, e: u32 },
    #[error("{0} is not a supported prime power")]
    NotPrimePower(u32),
    #[error("unsupported group kind: {0}")]
    UnsupportedKind(String),

    #[error("expected a diamond of dimension {expected}, got {found}")]
    WrongDimension { expected: usize, found: usize },
    #[error("invalid Hodge diamond: {0}")]
    InvalidDiamond(String),
    #[error("subtracting {requested} from hh_0 = {available} gives a negative dimension")]
    NegativeDimension { available: u64, requested: u64 },
    #[error("degree {degree} lies outside the allowed range [{min}, {max}]")]
    SupportOutOfRange { degree: i64, min: i64, max: i64 },
    #[error("expected {expected} Hochschild numbers")]
    WrongVariant { expected: &'static str },
    #[error("expected {expected} entries, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("Hochschild numbers are not palindromic")]
    NotPalindromic,
    #[error("odd-degree Hochschild number hh^{0} is nonzero")]
    OddDegreePresent(usize),

    #[error("commuting-pair sum is not divisible by the group order {order}")]
    NonIntegralResult { order: usize },
    #[error("series stopped after n = {largest_completed:?}: group order exceeds the element cap of {cap}")]
    SeriesCapExceeded {
        largest_completed: Option<usize>,
        cap: usize,
    },
}

impl Error {
    /// Stable machine-readable identifier for reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyGeneratorList => "EmptyGeneratorList",
            Error::DegreeMismatch { .. } => "DegreeMismatch",
            Error::ZeroDegree => "ZeroDegree",
            Error::InvalidPermutation(_) => "InvalidPermutation",
            Error::CycleSyntax { .. } => "CycleSyntax",
            Error::OrderExceedsCap { .. } => "OrderExceedsCap",
            Error::SubsetBudgetExceeded { .. } => "SubsetBudgetExceeded",
            Error::SubsetSizeOutOfRange { .. } => "SubsetSizeOutOfRange",
            Error::DegreeTooLarge { .. } => "DegreeTooLarge",
            Error::NotPrime(_) => "NotPrime",
            Error::FieldTooLarge { .. } => "FieldTooLarge",
            Error::NotPrimePower(_) => "NotPrimePower",
            Error::UnsupportedKind(_) => "UnsupportedKind",
            Error::WrongDimension { .. } => "WrongDimension",
            Error::InvalidDiamond(_) => "InvalidDiamond",
            Error::NegativeDimension { .. } => "NegativeDimension",
            Error::SupportOutOfRange { .. } => "SupportOutOfRange",
            Error::WrongVariant { .. } => "WrongVariant",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::NotPalindromic => "NotPalindromic",
            Error::OddDegreePresent(_) => "OddDegreePresent",
            Error::NonIntegralResult { .. } => "NonIntegralResult",
            Error::SeriesCapExceeded { .. } => "SeriesCapExceeded",
        }
    }
}
