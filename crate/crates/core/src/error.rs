use thiserror::Error;

/// Errors reported by the library.
///
/// The CLI maps these onto process exit codes: [`Error::SizeLimit`] is an
/// explicit refusal to start a computation that would not finish in
/// reasonable time, and everything else is a malformed request or a failed
/// internal consistency check.
#[derive(Debug, Error)]
pub enum Error {
    /// A value that violates a constructor's contract (zero denominator,
    /// edge out of range, malformed table, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A family parameter combination the formulas do not cover
    /// (for example overlap larger than half the edge size).
    #[error("unsupported parameters: {0}")]
    UnsupportedParameter(String),

    /// An index outside the documented range of a closed form.
    #[error("argument out of range: {0}")]
    OutOfRange(String),

    /// Power-series expansion of a rational function whose denominator has
    /// zero constant term.
    #[error("not a power series: {0}")]
    NotAPowerSeries(String),

    /// Power-series expansion produced a non-integer coefficient.
    #[error("series has non-integer coefficients: {0}")]
    NonIntegralSeries(String),

    /// Evaluation of a rational function at a zero of its denominator.
    #[error("evaluation at a pole: {0}")]
    Pole(String),

    /// A computation rejected up front because the instance exceeds the
    /// documented size limits for exhaustive enumeration.
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    /// Adjudication between formula variants did not single out a winner.
    #[error("adjudication failed: {0}")]
    Adjudication(String),

    /// An internal invariant was violated; indicates a bug.
    #[error("internal error: {0}")]
    Internal(String),
}
