use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Error type shared by every module.
///
/// Variants split into two broad classes that front ends care about:
/// invalid input (bad domains, malformed geometry) versus numerical failure
/// (overflow, non-convergence). [`Error::is_numerical`] exposes the split.
#[derive(Debug, Error)]
pub enum Error {
    /// Argument outside an operation's mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Dimension outside the supported range, or a capability that only
    /// exists in certain dimensions.
    #[error("unsupported dimension {n}: {why}")]
    UnsupportedDimension { n: u32, why: String },

    /// Operands whose dimensions do not match.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A result (or required intermediate) exceeds the representable range.
    /// Overflow is always reported, never returned as a silent infinity.
    #[error("numerical overflow in {0}")]
    Overflow(String),

    /// Bracketed root search exhausted its iteration budget.
    #[error("root finder failed to converge after {iterations} iterations on [{lo:e}, {hi:e}]")]
    NoConvergence { iterations: usize, lo: f64, hi: f64 },

    /// A root bracket that does not straddle the target value.
    #[error("target {target:e} is outside the invertible range [{f_hi:e}, {f_lo:e}]")]
    BracketFailure { target: f64, f_lo: f64, f_hi: f64 },

    /// Vector that fails the point constraints beyond the correction budget.
    #[error("invalid point: {0}")]
    InvalidPoint(String),

    /// Normal vector that fails the hyperplane constraints.
    #[error("invalid hyperplane: {0}")]
    InvalidHyperplane(String),

    /// Matrix that does not preserve the bilinear form or the upper sheet.
    #[error("invalid isometry: {0}")]
    InvalidIsometry(String),

    /// Hyperplanes with no common perpendicular (intersecting or asymptotic).
    #[error("no common perpendicular: hyperplanes are {classification}")]
    NoPerpendicular { classification: String },

    /// Isometry without a real leading eigenvalue above 1.
    #[error("not loxodromic: {0}")]
    NotLoxodromic(String),

    /// Boundary geodesics sharing an endpoint (asymptotic configuration).
    #[error("geodesics share a boundary endpoint (asymptotic case)")]
    SharedEndpoint,

    /// 2×2 word whose trace rules out a closed-geodesic representative.
    #[error("word is not hyperbolic: |trace| = {trace_abs} is not > 2")]
    NotHyperbolic { trace_abs: f64 },

    /// Structurally invalid input data (bad matrices, empty generators, …).
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// True for failures of the numerics (overflow, non-convergence) as
    /// opposed to invalid input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::Overflow(_) | Error::NoConvergence { .. } | Error::BracketFailure { .. }
        )
    }
}
