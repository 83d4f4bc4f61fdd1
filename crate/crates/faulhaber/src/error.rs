use crate::linsys::Parity;
use crate::polyforms::Basis;

/// Errors reported by the library's fallible operations.
///
/// Precondition violations that are representable in the type system
/// (negative degrees, negative Bernoulli indices) are ruled out by
/// unsigned parameters instead of a variant here.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A rational was constructed with denominator zero.
    #[error("rational denominator is zero")]
    ZeroDenominator,

    /// A rational string was not of the form `a` or `a/b`.
    #[error("cannot parse {0:?} as a rational")]
    ParseRational(String),

    /// The requested degree has no representation in the requested form.
    /// S_0(n) = n exists only in the power basis.
    #[error("degree p = {0} has no center-form representation")]
    UnsupportedDegree(u32),

    /// No S1-basis form exists for this degree (p = 0 and p = 1).
    #[error("degree p = {0} has no S1-basis representation")]
    NoS1Form(u32),

    /// An operation received a coefficient set of the wrong parity.
    #[error("expected a {expected}-parity input, got {got}")]
    ParityMismatch { expected: Parity, got: Parity },

    /// An operation received a polynomial in the wrong basis.
    #[error("expected a {expected}-basis polynomial, got {got}")]
    BasisMismatch { expected: Basis, got: Basis },

    /// A determinant index was outside `1 ≤ j ≤ k` (or `0 ≤ j ≤ k`).
    #[error("index j = {j} out of range for k = {k}")]
    IndexOutOfRange { j: u32, k: u32 },

    /// A triangular solve met a zero diagonal entry.
    #[error("triangular system has a zero diagonal entry at row {0}")]
    SingularDiagonal(usize),

    /// A center form expanded to a nonzero constant term, which signals
    /// corrupted coefficients: every power sum vanishes at n = 0.
    #[error("center form expands to nonzero constant term {0}")]
    NonzeroConstant(String),
}
