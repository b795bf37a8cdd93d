//! Exact verification of recurrences for powers of Fibonacci and Carlitz
//! q-Fibonacci polynomials.
//!
//! Everything lives in the Laurent ring `Z[x][s, 1/s, q, 1/q]`
//! ([`MPoly`]). The [`sequences`] module generates the polynomial families,
//! [`matrix`] computes exact determinants, and [`identities`] assembles both
//! sides of each recurrence or determinant evaluation and reports the
//! residual.

pub mod error;
pub mod grid;
pub mod identities;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod sequences;

pub use error::{Error, Result};
pub use grid::{GridSpec, RunReport, Summary, ValueSet};
pub use identities::{
    Check, ClosedForm, IdentityId, IdentityReport, Options, Params, Status, Verifier,
};
pub use matrix::PolyMatrix;
pub use poly::{binom, ExponentExpr, MPoly, Monomial, QSubst, SignedMonomial};
pub use scalar::Coefficient;
pub use sequences::{FibonomialReading, SeqCache};

/// The coefficient domain used by the verifiers.
pub type Int = num_bigint::BigInt;
/// Exact rationals, for spot evaluation.
pub type Rational = num_rational::BigRational;
/// Polynomials over arbitrary-precision integers.
pub type Poly = MPoly<Int>;
/// Polynomials over `i64`; overflow panics in debug builds.
pub type Poly64 = MPoly<i64>;
/// Polynomials over `i128`.
pub type Poly128 = MPoly<i128>;
