//! The Laurent-polynomial ring `Z[x][s, 1/s, q, 1/q]`.

mod exponent;
mod monomial;
mod mpoly;
mod text;

pub use exponent::{binom, ExponentExpr};
pub use monomial::{Monomial, SignedMonomial};
pub use mpoly::{MPoly, QSubst};
