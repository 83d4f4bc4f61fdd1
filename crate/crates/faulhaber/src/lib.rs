//! Exact computation of the power-sum polynomials
//! S_p(n) = 1^p + 2^p + ... + n^p.
//!
//! S_p(n) is represented in three bases — plain powers of n, the
//! parity-split center form in N = n + 1/2, and the classical product
//! form in S_1(n) = n(n+1)/2 — with exact conversions between them.
//! The center-form coefficients can be computed by five independent
//! methods (triangular recurrence, structured determinants, Witmer's
//! vertical recursion, explicit Bernoulli formulas, and the
//! even-to-odd derivative transfer), which makes every value
//! cross-checkable. All arithmetic is arbitrary-precision rational;
//! nothing is ever rounded.
//!
//! ```
//! use faulhaber::{coeffs_by_recurrence, evaluate, PolyForm, Rational};
//!
//! let s10 = PolyForm::Center(coeffs_by_recurrence(10)?);
//! assert_eq!(evaluate(&s10, &Rational::from(3)), Rational::from(60074));
//! assert_eq!(s10.text(), "S_10(n) = 1/11 N^11 - 5/12 N^9 + 7/8 N^7 \
//!                         - 31/32 N^5 + 127/256 N^3 - 2555/33792 N");
//! # Ok::<(), faulhaber::Error>(())
//! ```
//!
//! The `guide` module mirrors the chapters of the mdbook under `book/`
//! so their code samples run as doc-tests.

pub mod bench;
pub mod bernoulli;
pub mod coeffs;
mod error;
pub mod guide;
pub mod linsys;
pub mod oracle;
pub mod polyforms;
pub mod ratnum;

pub use bernoulli::{bernoulli_half, bernoulli_number, BernoulliCache};
pub use coeffs::{
    coeffs_by_determinant, coeffs_by_explicit, coeffs_by_method, coeffs_by_recurrence,
    coeffs_by_witmer, constant_term, odd_from_even, FaulhaberCoeffs, Method,
};
pub use error::Error;
pub use linsys::Parity;
pub use oracle::{brute_force_sum, run_verification, VerifyReport};
pub use polyforms::{
    center_to_power, center_to_s1, derivative, evaluate, explicit_center_polynomial, generate,
    power_basis_bernoulli, reflect, s1_to_center, Basis, PolyForm,
};
pub use ratnum::{binomial, double_factorial, Integer, OpCounts, Rational};
