use std::cmp::Ordering;
use std::ops::{Div, Mul};

/// A power product `x^ex * s^es * q^eq`.
///
/// `x` never carries a negative exponent; `s` and `q` are Laurent variables.
///
/// The ordering compares the `x`-degree first (higher is greater), then the
/// `s`- and `q`-exponents with *lower* being greater. Read as a polynomial in
/// `x` whose coefficients are Laurent polynomials in `s, q` written in
/// ascending powers, the descending order of terms is exactly how the
/// q-Fibonacci polynomials are usually displayed:
/// `x^4 + q*s*x^2 + q^2*s*x^2 + q^3*s*x^2 + q^4*s^2`.
///
/// The order is compatible with multiplication (it is a lexicographic order
/// on the exponent group), which is all that exact division needs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub ex: u32,
    pub es: i32,
    pub eq: i32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        ex: 0,
        es: 0,
        eq: 0,
    };
    pub const X: Monomial = Monomial {
        ex: 1,
        es: 0,
        eq: 0,
    };
    pub const S: Monomial = Monomial {
        ex: 0,
        es: 1,
        eq: 0,
    };
    pub const Q: Monomial = Monomial {
        ex: 0,
        es: 0,
        eq: 1,
    };

    pub const fn new(ex: u32, es: i32, eq: i32) -> Self {
        Monomial { ex, es, eq }
    }

    /// `s^es * q^eq`, the unit monomials of the Laurent ring.
    pub const fn sq(es: i32, eq: i32) -> Self {
        Monomial { ex: 0, es, eq }
    }

    pub fn is_one(&self) -> bool {
        *self == Monomial::ONE
    }

    /// Quotient by `other`, or `None` when the `x`-exponent would go negative.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        Some(Monomial {
            ex: self.ex.checked_sub(other.ex)?,
            es: self.es - other.es,
            eq: self.eq - other.eq,
        })
    }

    /// Inverse in the Laurent group; only exists when there is no `x` factor.
    pub fn inverse(&self) -> Option<Monomial> {
        (self.ex == 0).then_some(Monomial::sq(-self.es, -self.eq))
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let k_i = k as i32;
        Monomial {
            ex: self.ex * k,
            es: self.es * k_i,
            eq: self.eq * k_i,
        }
    }

    /// Image under `s -> q^k * s`.
    pub fn scale_s(&self, k: i32) -> Monomial {
        Monomial {
            eq: self.eq + k * self.es,
            ..*self
        }
    }

    pub fn exponents(&self) -> [i64; 3] {
        [self.ex as i64, self.es as i64, self.eq as i64]
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ex
            .cmp(&other.ex)
            .then_with(|| other.es.cmp(&self.es))
            .then_with(|| other.eq.cmp(&self.eq))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial {
            ex: self.ex + rhs.ex,
            es: self.es + rhs.es,
            eq: self.eq + rhs.eq,
        }
    }
}

impl Div for Monomial {
    type Output = Option<Monomial>;

    fn div(self, rhs: Monomial) -> Option<Monomial> {
        self.checked_div(&rhs)
    }
}

/// A monomial with a sign: the shape of every closed-form prefactor such as
/// `v(k) = (-1)^k q^(k(k-1)/2) s^(k-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedMonomial {
    pub negative: bool,
    pub mono: Monomial,
}

impl SignedMonomial {
    pub const ONE: SignedMonomial = SignedMonomial {
        negative: false,
        mono: Monomial::ONE,
    };

    pub fn new(negative: bool, mono: Monomial) -> Self {
        SignedMonomial { negative, mono }
    }

    /// `(-1)^parity * mono`.
    pub fn with_parity(parity: i64, mono: Monomial) -> Self {
        SignedMonomial {
            negative: parity.rem_euclid(2) == 1,
            mono,
        }
    }

    pub fn inverse(&self) -> Option<SignedMonomial> {
        Some(SignedMonomial {
            negative: self.negative,
            mono: self.mono.inverse()?,
        })
    }

    pub fn pow(&self, k: u32) -> SignedMonomial {
        SignedMonomial {
            negative: self.negative && k % 2 == 1,
            mono: self.mono.pow(k),
        }
    }

    pub fn neg(&self) -> SignedMonomial {
        SignedMonomial {
            negative: !self.negative,
            mono: self.mono,
        }
    }
}

impl Mul for SignedMonomial {
    type Output = SignedMonomial;

    fn mul(self, rhs: SignedMonomial) -> SignedMonomial {
        SignedMonomial {
            negative: self.negative != rhs.negative,
            mono: self.mono * rhs.mono,
        }
    }
}
