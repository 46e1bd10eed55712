//! Crate-wide error type.
//!
//! Errors are reserved for conditions a caller can trigger with legal API use
//! on bad *input* (unparsable files, invalid characters, mismatched torus
//! specs, oversized problems). Violations of internal invariants, such as a
//! non-exact division inside fraction-free elimination, panic instead.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Inversion of zero in a coefficient field.
    #[error("division by zero")]
    DivisionByZero,

    /// Two polynomials over different variable lists met in one operation.
    #[error("variable lists differ: [{left}] vs [{right}]")]
    VariableMismatch { left: String, right: String },

    /// A vector or matrix had the wrong length/shape for the operation.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// The zero polynomial was passed where a nonzero one is required.
    #[error("zero polynomial")]
    ZeroPolynomial,

    /// A minor size exceeding the generic rank of the matrix was requested.
    #[error("requested minor size {requested} exceeds the generic rank {generic}")]
    RankTooLarge { requested: usize, generic: usize },

    /// A generator index outside the presentation's range.
    #[error("generator index {index} out of range for {count} generators")]
    IndexOutOfRange { index: usize, count: usize },

    /// A cochain vector that the exponent matrix does not annihilate.
    #[error("not a one-form: exponent matrix does not annihilate ({0})")]
    InvalidOneForm(String),

    /// A character that fails validation against the presentation.
    #[error("invalid character: {0}")]
    InvalidCharacter(String),

    /// A torus spec inconsistent with the operation or the presentation.
    #[error("torus spec mismatch: {0}")]
    SpecMismatch(String),

    /// The columns of the spec do not have full rank.
    #[error("exponent columns have rank {rank}, expected {params}")]
    RankDeficientSpec { rank: usize, params: usize },

    /// A spec whose row count differs from the generator count.
    #[error("torus spec has {found} rows, presentation has {expected} generators")]
    RowCountMismatch { expected: usize, found: usize },

    /// A lift whose fractional part is not the given character.
    #[error("one-form is not a lift of the character: {0}")]
    NotALift(String),

    /// A character that does not lie on the given subtorus.
    #[error("character does not lie on the torus")]
    NotOnTorus,

    /// A curve whose component dimension formula is non-positive.
    #[error("degenerate curve: component dimension would be {0}")]
    DegenerateCurve(i64),

    /// Line-oriented input that does not match the grammar.
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    /// A relator mentions a generator that was never declared.
    #[error("unknown generator `{name}` at line {line}")]
    UnknownGenerator { name: String, line: usize },

    /// A presentation with no generators.
    #[error("empty generator list")]
    EmptyGeneratorList,

    /// The problem exceeds the hard size guards for exact enumeration.
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
}

impl Error {
    /// True for rejections caused by the hard size guards (the CLI maps these
    /// to a distinct exit code).
    pub fn is_size_limit(&self) -> bool {
        matches!(self, Error::SizeLimit(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
