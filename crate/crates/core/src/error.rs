use alloc::string::String;
use core::fmt;

/// Everything that can go wrong inside the library.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    NotWeaklyDecreasing,
    TruncationTooLarge { row: usize },
    ShiftedNeedsDistinctParts,
    NeedsDistinctParts,
    /// `(1-q)`-adic valuation of the denominator minus that of the numerator.
    ValuationMismatch { expected: usize, found: i64 },
    NonIntegerResult,
    /// A brute-force enumeration exceeded its configured budget.
    TooLarge { size: usize, budget: usize },
    ShapeMismatch(String),
    EntryOutOfRange { entry: u64, max: u64 },
    LengthRestriction { length: usize, max: usize },
    RequiresNLeqM { n: usize, m: usize },
    InnerNotContained,
    NonconvergentSpec,
    SingularDenominator,
    /// Division left negative powers of `q`, so the result is not a power series.
    NotAPowerSeries,
    /// The leading denominator coefficient is not a unit over the integers.
    NonUnitDenominator,
    Domain(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotWeaklyDecreasing => write!(f, "parts are not weakly decreasing"),
            Error::TruncationTooLarge { row } => {
                write!(f, "truncation exceeds the outer shape in row {row}")
            }
            Error::ShiftedNeedsDistinctParts => {
                write!(f, "a shifted shape needs strictly decreasing outer parts")
            }
            Error::NeedsDistinctParts => write!(f, "partition must have distinct parts"),
            Error::ValuationMismatch { expected, found } => write!(
                f,
                "(1-q)-valuation mismatch: expected pole order {expected}, found {found}"
            ),
            Error::NonIntegerResult => write!(f, "result is not a nonnegative integer"),
            Error::TooLarge { size, budget } => {
                write!(f, "instance of size {size} exceeds budget {budget}")
            }
            Error::ShapeMismatch(what) => write!(f, "shape mismatch: {what}"),
            Error::EntryOutOfRange { entry, max } => {
                write!(f, "entry {entry} out of range (max {max})")
            }
            Error::LengthRestriction { length, max } => {
                write!(f, "length {length} exceeds the allowed {max}")
            }
            Error::RequiresNLeqM { n, m } => write!(f, "requires n <= m, got n={n}, m={m}"),
            Error::InnerNotContained => write!(f, "inner partition is not contained in outer"),
            Error::NonconvergentSpec => {
                write!(f, "specialization has a zero exponent; series does not converge")
            }
            Error::SingularDenominator => write!(f, "denominator vanishes identically"),
            Error::NotAPowerSeries => write!(f, "expansion has negative powers of q"),
            Error::NonUnitDenominator => {
                write!(f, "denominator has a non-unit lowest coefficient")
            }
            Error::Domain(what) => write!(f, "domain error: {what}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
