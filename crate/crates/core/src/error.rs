use thiserror::Error;

/// Every failure the engine can report.
///
/// Paper discrepancies are *not* errors: they surface as
/// [`Verdict::Mismatch`](crate::report::Verdict) values inside reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("division by the zero rational function")]
    DegenerateScalar,
    #[error("denominator vanishes at the sample point")]
    PoleAtSample,
    #[error("degenerate parameters: a0*b0 must be nonzero")]
    DegenerateParameters,
    #[error("leading symbol is not invertible: {0}")]
    NonInvertibleLeading(String),
    #[error("symbol matrix is singular over the function field")]
    SingularSymbol,
    #[error("integrand does not decay fast enough in xi_n: {0}")]
    NonIntegrable(String),
    #[error("bracket pattern broken: {0}")]
    PatternBroken(String),
    #[error("unknown identity tag `{0}`")]
    UnknownTag(String),
    #[error("unknown functional `{0}`")]
    UnknownFunctional(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T> = std::result::Result<T, EngineError>;
