//! Coefficient domains for [`MPoly`](crate::MPoly).
//!
//! The ring arithmetic is written once against [`Coefficient`]; the
//! verification layers instantiate it with [`BigInt`], which is the only
//! domain wide enough for the determinants at k = 3. The fixed-width
//! implementations exist for cheap experiments and tests and panic on
//! overflow in debug builds.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::{BigInt, ToBigInt};
use num_integer::Integer;
use num_traits::{FromPrimitive, NumAssignRef, Signed};

/// An exact integral domain usable as polynomial coefficient.
///
/// `Integer::div_rem` supplies the exactness test for [`MPoly::exact_div`](crate::MPoly::exact_div).
pub trait Coefficient:
    Clone
    + Debug
    + Display
    + Eq
    + Hash
    + Integer
    + Signed
    + NumAssignRef
    + FromPrimitive
    + FromStr
    + ToBigInt
    + Send
    + Sync
    + 'static
{
    /// Exact quotient, or `None` when `divisor` does not divide `self`.
    fn checked_exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (quot, rem) = self.div_rem(divisor);
        rem.is_zero().then_some(quot)
    }
}

impl Coefficient for BigInt {}
impl Coefficient for i64 {}
impl Coefficient for i128 {}
