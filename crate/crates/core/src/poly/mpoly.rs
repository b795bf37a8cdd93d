use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::monomial::{Monomial, SignedMonomial};
use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// Which value to substitute for `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QSubst {
    /// `q -> 1`, the classical limit.
    One,
    /// `q -> 1/q`.
    Inverse,
}

/// Sparse polynomial in `Z[x][s, 1/s, q, 1/q]` with coefficients in `C`.
///
/// Terms are kept sorted by descending [`Monomial`] order with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MPoly<C> {
    terms: Vec<(Monomial, C)>,
}

impl<C: Coefficient> MPoly<C> {
    pub fn zero() -> Self {
        MPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn term(mono: Monomial, c: C) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            MPoly {
                terms: vec![(mono, c)],
            }
        }
    }

    pub fn monomial(mono: Monomial) -> Self {
        Self::term(mono, C::one())
    }

    pub fn x() -> Self {
        Self::monomial(Monomial::X)
    }

    pub fn s() -> Self {
        Self::monomial(Monomial::S)
    }

    pub fn q() -> Self {
        Self::monomial(Monomial::Q)
    }

    pub fn from_signed(m: SignedMonomial) -> Self {
        let c = if m.negative { -C::one() } else { C::one() };
        Self::term(m.mono, c)
    }

    /// Canonicalizes an arbitrary list of terms: merges duplicates, drops zeros
    /// and sorts.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
    {
        let mut acc: HashMap<Monomial, C> = HashMap::new();
        for (m, c) in terms {
            match acc.get_mut(&m) {
                Some(e) => *e += &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(acc)
    }

    fn from_map(acc: HashMap<Monomial, C>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
        MPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn leading_term(&self) -> Option<&(Monomial, C)> {
        self.terms.first()
    }

    /// Coefficient of `mono`, zero if absent.
    pub fn coeff(&self, mono: &Monomial) -> C {
        self.terms
            .binary_search_by(|(m, _)| mono.cmp(m))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| C::zero())
    }

    /// `Some` when the polynomial is `±mono`.
    pub fn as_signed_monomial(&self) -> Option<SignedMonomial> {
        match self.terms.as_slice() {
            [(m, c)] if c.is_one() => Some(SignedMonomial::new(false, *m)),
            [(m, c)] if (-c.clone()).is_one() => Some(SignedMonomial::new(true, *m)),
            _ => None,
        }
    }

    /// Per-variable `[min, max]` exponents over the support, ordered `(x, s, q)`.
    pub fn exponent_bounds(&self) -> Option<[(i64, i64); 3]> {
        let mut it = self.terms.iter();
        let first = it.next()?.0.exponents();
        let mut bounds = first.map(|e| (e, e));
        for (m, _) in it {
            for (b, e) in bounds.iter_mut().zip(m.exponents()) {
                b.0 = b.0.min(e);
                b.1 = b.1.max(e);
            }
        }
        Some(bounds)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| {
                    let mut p = a.clone();
                    p *= c;
                    (*m, p)
                })
                .collect(),
        }
    }

    /// Product with a single monomial. Order-preserving, so no re-sort.
    pub fn mul_monomial(&self, mono: Monomial) -> Self {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m * mono, c.clone()))
                .collect(),
        }
    }

    pub fn mul_signed(&self, m: SignedMonomial) -> Self {
        let p = self.mul_monomial(m.mono);
        if m.negative {
            -p
        } else {
            p
        }
    }

    fn add_impl(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        let take_b = |c: &C| if negate_other { -c.clone() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((b[j].0, take_b(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let mut c = a[i].1.clone();
                    if negate_other {
                        c -= &b[j].1;
                    } else {
                        c += &b[j].1;
                    }
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (*m, take_b(c))));
        MPoly { terms: out }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.scale(c).mul_monomial(*m);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.scale(c).mul_monomial(*m);
        }
        let mut acc: HashMap<Monomial, C> =
            HashMap::with_capacity(self.terms.len().max(other.terms.len()) * 4);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mut p = ca.clone();
                p *= cb;
                match acc.get_mut(&(*ma * *mb)) {
                    Some(e) => *e += &p,
                    None => {
                        acc.insert(*ma * *mb, p);
                    }
                }
            }
        }
        Self::from_map(acc)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact quotient `self / divisor` in the Laurent ring with coefficients in `C`.
    ///
    /// Long division by leading terms. Exponents of a genuine quotient are
    /// confined to the window `[min(self) - min(divisor), max(self) - max(divisor)]`
    /// in every variable, which both bounds the loop and detects failure early.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let non_divisible = || Error::NonDivisible {
            dividend: truncated_text(self),
            divisor: truncated_text(divisor),
        };

        if divisor.terms.len() == 1 {
            let (dm, dc) = &divisor.terms[0];
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                let qm = m.checked_div(dm).ok_or_else(non_divisible)?;
                let qc = c.checked_exact_div(dc).ok_or_else(non_divisible)?;
                terms.push((qm, qc));
            }
            return Ok(MPoly { terms });
        }

        let a_bounds = self.exponent_bounds().expect("nonzero");
        let d_bounds = divisor.exponent_bounds().expect("nonzero");
        let mut window = [(0i64, 0i64); 3];
        for v in 0..3 {
            window[v] = (a_bounds[v].0 - d_bounds[v].0, a_bounds[v].1 - d_bounds[v].1);
            if window[v].0 > window[v].1 {
                return Err(non_divisible());
            }
        }

        let (lead_m, lead_c) = divisor.terms[0].clone();
        let tail = &divisor.terms[1..];
        let mut rem: BTreeMap<Monomial, C> = self.terms.iter().cloned().collect();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let qm = m.checked_div(&lead_m).ok_or_else(non_divisible)?;
            let in_window = qm
                .exponents()
                .iter()
                .zip(window.iter())
                .all(|(e, (lo, hi))| lo <= e && e <= hi);
            if !in_window {
                return Err(non_divisible());
            }
            let qc = c.checked_exact_div(&lead_c).ok_or_else(non_divisible)?;
            for (tm, tc) in tail {
                let mut p = tc.clone();
                p *= &qc;
                let key = *tm * qm;
                match rem.get_mut(&key) {
                    Some(e) => {
                        *e -= &p;
                        if e.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, -p);
                    }
                }
            }
            quotient.push((qm, qc));
        }
        Ok(MPoly { terms: quotient })
    }

    /// Substitutes `s -> q^k * s`.
    pub fn subst_s_scale(&self, k: i32) -> Self {
        if k == 0 {
            return self.clone();
        }
        // (ex, es) are untouched and eq shifts uniformly within each (ex, es)
        // block, so the order survives.
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.scale_s(k), c.clone()))
                .collect(),
        }
    }

    pub fn subst_q_value(&self, mode: QSubst) -> Self {
        match mode {
            QSubst::One => Self::from_terms(
                self.terms
                    .iter()
                    .map(|(m, c)| (Monomial { eq: 0, ..*m }, c.clone())),
            ),
            QSubst::Inverse => {
                let mut terms: Vec<_> = self
                    .terms
                    .iter()
                    .map(|(m, c)| (Monomial { eq: -m.eq, ..*m }, c.clone()))
                    .collect();
                terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
                MPoly { terms }
            }
        }
    }

    /// Exact evaluation at a rational point.
    pub fn eval_rational(
        &self,
        x: &BigRational,
        s: &BigRational,
        q: &BigRational,
    ) -> Result<BigRational> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            if m.es < 0 && s.is_zero() {
                return Err(Error::PoleAtZero { var: 's' });
            }
            if m.eq < 0 && q.is_zero() {
                return Err(Error::PoleAtZero { var: 'q' });
            }
            let c: BigInt = c.to_bigint().expect("integral coefficient");
            let mut t = BigRational::from_integer(c);
            t *= num_traits::pow(x.clone(), m.ex as usize);
            t *= ratio_powi(s, m.es);
            t *= ratio_powi(q, m.eq);
            total += t;
        }
        Ok(total)
    }

    /// Same polynomial over a different coefficient domain.
    pub fn convert<D: Coefficient>(&self) -> Option<MPoly<D>> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let big = c.to_bigint()?;
                let d: D = big.to_string().parse().ok()?;
                Some((*m, d))
            })
            .collect::<Option<Vec<_>>>()?;
        Some(MPoly { terms })
    }
}

fn ratio_powi(base: &BigRational, e: i32) -> BigRational {
    if e == 0 {
        BigRational::one()
    } else if e > 0 {
        num_traits::pow(base.clone(), e as usize)
    } else {
        num_traits::pow(base.recip(), e.unsigned_abs() as usize)
    }
}

fn truncated_text<C: Coefficient>(p: &MPoly<C>) -> String {
    const LIMIT: usize = 200;
    let mut s = p.to_string();
    if s.len() > LIMIT {
        let mut cut = LIMIT;
        while !s.is_char_boundary(cut) {
            cut -= 1;
        }
        s.truncate(cut);
        s.push_str(" ...");
    }
    s
}

impl<C: Coefficient> Default for MPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> From<Monomial> for MPoly<C> {
    fn from(m: Monomial) -> Self {
        Self::monomial(m)
    }
}

impl<C: Coefficient> From<SignedMonomial> for MPoly<C> {
    fn from(m: SignedMonomial) -> Self {
        Self::from_signed(m)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $imp:expr) => {
        impl<C: Coefficient> $tr<&MPoly<C>> for &MPoly<C> {
            type Output = MPoly<C>;
            fn $method(self, rhs: &MPoly<C>) -> MPoly<C> {
                $imp(self, rhs)
            }
        }
        impl<C: Coefficient> $tr<MPoly<C>> for MPoly<C> {
            type Output = MPoly<C>;
            fn $method(self, rhs: MPoly<C>) -> MPoly<C> {
                $imp(&self, &rhs)
            }
        }
        impl<C: Coefficient> $tr<&MPoly<C>> for MPoly<C> {
            type Output = MPoly<C>;
            fn $method(self, rhs: &MPoly<C>) -> MPoly<C> {
                $imp(&self, rhs)
            }
        }
        impl<C: Coefficient> $tr<MPoly<C>> for &MPoly<C> {
            type Output = MPoly<C>;
            fn $method(self, rhs: MPoly<C>) -> MPoly<C> {
                $imp(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &MPoly<C>, b: &MPoly<C>| a.add_impl(b, false));
forward_binop!(Sub, sub, |a: &MPoly<C>, b: &MPoly<C>| a.add_impl(b, true));
forward_binop!(Mul, mul, |a: &MPoly<C>, b: &MPoly<C>| a.mul_impl(b));

impl<C: Coefficient> AddAssign<&MPoly<C>> for MPoly<C> {
    fn add_assign(&mut self, rhs: &MPoly<C>) {
        *self = self.add_impl(rhs, false);
    }
}

impl<C: Coefficient> SubAssign<&MPoly<C>> for MPoly<C> {
    fn sub_assign(&mut self, rhs: &MPoly<C>) {
        *self = self.add_impl(rhs, true);
    }
}

impl<C: Coefficient> Neg for MPoly<C> {
    type Output = MPoly<C>;
    fn neg(mut self) -> MPoly<C> {
        for (_, c) in &mut self.terms {
            *c = -std::mem::replace(c, C::zero());
        }
        self
    }
}

impl<C: Coefficient> Neg for &MPoly<C> {
    type Output = MPoly<C>;
    fn neg(self) -> MPoly<C> {
        -self.clone()
    }
}

impl<C: Coefficient> std::iter::Sum for MPoly<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| acc + p)
    }
}

impl<C: Coefficient> std::iter::Product for MPoly<C> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, p| acc * p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Poly;

    fn p(text: &str) -> Poly {
        text.parse().unwrap()
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn add_examples() {
        assert_eq!(p("x") + Poly::zero(), p("x"));
        assert_eq!(p("x^2 + q*s") + p("-q*s"), p("x^2"));
        assert_eq!(p("x^2 + s") + p("x^2 + s"), p("2*x^2 + 2*s"));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p("x + s") * p("x - s"), p("x^2 - s^2"));
        assert_eq!(p("x") * p("x^2 + q*s"), p("x^3 + q*s*x"));
        assert_eq!(p("x^2 + 2*s") * p("x^2 + s"), p("x^4 + 3*s*x^2 + 2*s^2"));
    }

    #[test]
    fn pow_examples() {
        assert_eq!(p("x^2 + q*s").pow(0), Poly::one());
        assert_eq!(p("x").pow(3), p("x^3"));
        assert_eq!(p("x + 1").pow(2), p("x^2 + 2*x + 1"));
    }

    #[test]
    fn exact_div_examples() {
        assert_eq!(p("x^3 + q*s*x").exact_div(&p("x")).unwrap(), p("x^2 + q*s"));
        assert_eq!(
            p("x^4 + 3*s*x^2 + 2*s^2").exact_div(&p("x^2 + s")).unwrap(),
            p("x^2 + 2*s")
        );
        assert_eq!(
            p("x^2 + q*s").exact_div(&p("s")).unwrap(),
            p("s^-1*x^2 + q")
        );
        assert!(matches!(
            p("x + 1").exact_div(&p("x")),
            Err(Error::NonDivisible { .. })
        ));
        assert_eq!(p("x").exact_div(&Poly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn exact_div_rejects_rational_quotients() {
        // (2x + 2) / (2x + 4) has no quotient at all; (x + 1) / (2x + 2) = 1/2
        assert!(p("2*x + 2").exact_div(&p("2*x + 4")).is_err());
        assert!(p("x + 1").exact_div(&p("2*x + 2")).is_err());
        assert_eq!(p("2*x + 2").exact_div(&p("x + 1")).unwrap(), p("2"));
    }

    #[test]
    fn exact_div_with_laurent_divisor() {
        let d = p("s^-1*q + x*q^-2");
        let quo = p("x^2 - s*q^3 + 5");
        assert_eq!((&quo * &d).exact_div(&d).unwrap(), quo);
    }

    #[test]
    fn subst_s_scale_examples() {
        assert_eq!(p("x^2 + q*s").subst_s_scale(1), p("x^2 + q^2*s"));
        assert_eq!(p("x^2 + q*s").subst_s_scale(0), p("x^2 + q*s"));
        assert_eq!(p("q^4*s^2").subst_s_scale(2), p("q^8*s^2"));
    }

    #[test]
    fn subst_q_value_examples() {
        assert_eq!(p("x^2 + q*s").subst_q_value(QSubst::One), p("x^2 + s"));
        assert_eq!(
            p("q^2*s + q^-1").subst_q_value(QSubst::Inverse),
            p("q^-2*s + q")
        );
        assert_eq!(p("x").subst_q_value(QSubst::Inverse), p("x"));
        assert_eq!(p("q*s - s").subst_q_value(QSubst::One), Poly::zero());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(
            p("x^2 + q*s")
                .eval_rational(&r(2, 1), &r(1, 1), &r(1, 1))
                .unwrap(),
            r(5, 1)
        );
        assert_eq!(
            p("q*s^-1")
                .eval_rational(&r(0, 1), &r(2, 1), &r(3, 1))
                .unwrap(),
            r(3, 2)
        );
        assert_eq!(
            p("q*s^-1").eval_rational(&r(0, 1), &r(0, 1), &r(1, 1)),
            Err(Error::PoleAtZero { var: 's' })
        );
    }

    #[test]
    fn signed_monomial_detection() {
        assert_eq!(
            p("-q^2*s^-1").as_signed_monomial(),
            Some(SignedMonomial::new(true, Monomial::sq(-1, 2)))
        );
        assert_eq!(p("2*q").as_signed_monomial(), None);
        assert_eq!(p("1 + q").as_signed_monomial(), None);
    }

    #[test]
    fn coefficient_lookup() {
        let f = p("x^4 + 3*s*x^2 + s^2");
        assert_eq!(f.coeff(&Monomial::new(2, 1, 0)), BigInt::from(3));
        assert_eq!(f.coeff(&Monomial::new(1, 0, 0)), BigInt::from(0));
    }

    #[test]
    fn fixed_width_coefficients_agree_with_bigint() {
        let a = p("x^2 + 2*q*s - 3");
        let b = p("x - q^-1");
        let a64: MPoly<i64> = a.convert().unwrap();
        let b64: MPoly<i64> = b.convert().unwrap();
        let prod64 = &a64 * &b64;
        assert_eq!(prod64.convert::<BigInt>().unwrap(), &a * &b);
        assert_eq!(prod64.exact_div(&b64).unwrap(), a64);
    }
}
