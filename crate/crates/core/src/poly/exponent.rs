use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational accumulator for closed-form exponents.
///
/// Several closed forms have exponents such as `binom(k+1, 3) * m(km - 2) / 4`
/// whose individual summands are fractional while the total is not. The sum
/// is carried exactly and only turned into an integer by [`Self::to_i32`],
/// which fails instead of rounding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentExpr(Ratio<i64>);

impl ExponentExpr {
    pub fn int(n: i64) -> Self {
        ExponentExpr(Ratio::from_integer(n))
    }

    pub fn frac(num: i64, den: i64) -> Self {
        ExponentExpr(Ratio::new(num, den))
    }

    pub fn zero() -> Self {
        Self::int(0)
    }

    pub fn value(&self) -> Ratio<i64> {
        self.0
    }

    pub fn is_integral(&self) -> bool {
        self.0.is_integer()
    }

    /// Materializes the exponent; `what` names it in the error.
    pub fn to_i32(&self, what: &str) -> Result<i32> {
        if !self.0.is_integer() {
            return Err(Error::NonIntegralExponent {
                expr: what.to_string(),
                value: self.0.to_string(),
            });
        }
        self.0.to_integer().to_i32().ok_or_else(|| {
            Error::InvalidParameter(format!("exponent {what} = {} overflows", self.0))
        })
    }

    /// Parity of an integral exponent, for sign factors `(-1)^e`.
    pub fn parity(&self, what: &str) -> Result<i64> {
        Ok((self.to_i32(what)? as i64).rem_euclid(2))
    }
}

impl fmt::Display for ExponentExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<i64> for ExponentExpr {
    fn from(n: i64) -> Self {
        Self::int(n)
    }
}

impl Add for ExponentExpr {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        ExponentExpr(self.0 + rhs.0)
    }
}

impl Sub for ExponentExpr {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        ExponentExpr(self.0 - rhs.0)
    }
}

impl Mul for ExponentExpr {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        ExponentExpr(self.0 * rhs.0)
    }
}

impl Neg for ExponentExpr {
    type Output = Self;
    fn neg(self) -> Self {
        ExponentExpr(-self.0)
    }
}

impl std::iter::Sum for ExponentExpr {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

impl Zero for ExponentExpr {
    fn zero() -> Self {
        ExponentExpr::int(0)
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

/// `binom(n, k)` for any integer `n` via the falling factorial
/// `n (n-1) ... (n-k+1) / k!`; zero for negative `k`.
pub fn binom(n: i64, k: i64) -> i64 {
    if k < 0 {
        return 0;
    }
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for i in 0..k {
        num *= (n - i) as i128;
        den *= (i + 1) as i128;
    }
    (num / den) as i64
}
