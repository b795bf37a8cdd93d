//! Generators for the polynomial families.
//!
//! * classical Fibonacci polynomials `F_n(x, s)`,
//! * Carlitz q-Fibonacci polynomials `f(n, x, q^shift s)` for every integer `n`,
//! * Gaussian binomials, fibonomials and their q-analogs,
//! * the `fac` products and the prefactor `v(k)`.
//!
//! The free functions compute from scratch. [`SeqCache`] memoizes the
//! expensive ones and is what the verifiers use.

use std::collections::HashMap;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::poly::{binom, Monomial, SignedMonomial};
use crate::{Int, Poly};

/// How the second denominator product of the step-`ell` q-fibonomial is
/// shifted.
///
/// The step-`ell` definition prints `f(i*ell, x, q^(j*ell) s)` (a shift fixed
/// by `j`), while the step-1 definition prints `f(i, x, q^i s)` (a shift that
/// varies with `i`). The two agree in neither direction, so both are
/// available and the recurrence verifiers decide.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub enum FibonomialReading {
    /// `prod_{i=1}^{k-j} f(i*ell, x, q^(j*ell) s)`.
    #[default]
    #[serde(rename = "fixed")]
    FixedShift,
    /// `prod_{i=1}^{k-j} f(i*ell, x, q^(i*ell) s)`.
    #[serde(rename = "varying")]
    VaryingShift,
}

impl FibonomialReading {
    pub const ALL: [FibonomialReading; 2] = [
        FibonomialReading::FixedShift,
        FibonomialReading::VaryingShift,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FibonomialReading::FixedShift => "fixed",
            FibonomialReading::VaryingShift => "varying",
        }
    }
}

impl std::str::FromStr for FibonomialReading {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "fixed" => Ok(FibonomialReading::FixedShift),
            "varying" => Ok(FibonomialReading::VaryingShift),
            other => Err(format!(
                "unknown reading `{other}` (expected `fixed` or `varying`)"
            )),
        }
    }
}

fn x() -> Poly {
    Poly::x()
}

/// `q^e * s`, the coefficient of `f(n-2)` in the q-recurrence with `e = n - 2`.
fn qs(e: i64) -> Monomial {
    Monomial::sq(1, e as i32)
}

/// `F_n(x, s)` with `F_0 = 0`, `F_1 = 1`, `F_n = x F_{n-1} + s F_{n-2}`,
/// continued to negative `n` through the same recurrence.
pub fn classical_fib(n: i64) -> Poly {
    let (mut prev, mut cur) = (Poly::zero(), Poly::one()); // F_0, F_1
    if n >= 1 {
        for _ in 1..n {
            let next = &x() * &cur + prev.mul_monomial(Monomial::S);
            prev = std::mem::replace(&mut cur, next);
        }
        return cur;
    }
    // walk down: F_{i-2} = (F_i - x F_{i-1}) / s
    let (mut hi, mut lo) = (cur, prev); // F_1, F_0
    for _ in n..0 {
        let below = (&hi - &x() * &lo).mul_monomial(Monomial::sq(-1, 0));
        hi = std::mem::replace(&mut lo, below);
    }
    lo
}

/// `f(n, x, s)` for any integer `n`: forward recurrence for `n >= 0`,
/// backward recurrence `f(i-2) = (f(i) - x f(i-1)) / (q^(i-2) s)` below.
fn qfib_base(n: i64) -> Poly {
    let (mut prev, mut cur) = (Poly::zero(), Poly::one());
    if n >= 1 {
        for i in 2..=n {
            let next = &x() * &cur + prev.mul_monomial(qs(i - 2));
            prev = std::mem::replace(&mut cur, next);
        }
        return cur;
    }
    let (mut hi, mut lo) = (cur, prev); // f(i), f(i-1) with i = 1
    let mut i = 1;
    while i - 1 > n {
        let below = (&hi - &x() * &lo).mul_monomial(qs(i - 2).inverse().unwrap());
        hi = std::mem::replace(&mut lo, below);
        i -= 1;
    }
    lo
}

/// `f(n, x, q^shift s)`.
pub fn qfib(n: i64, shift: i64) -> Poly {
    qfib_base(n).subst_s_scale(shift as i32)
}

/// The closed form for negative indices,
/// `f(-n, x, s) = (-1)^(n-1) q^binom(n+1, 2) f(n, x, q^-n s) / s^n`.
pub fn qfib_negative_closed_form(n: i64) -> Poly {
    let pre = SignedMonomial::with_parity(n - 1, Monomial::sq(-(n as i32), binom(n + 1, 2) as i32));
    qfib(n, -n).mul_signed(pre)
}

/// `f(n, x, s)` from the explicit sum
/// `sum_k [n-1-k, k]_q q^(k^2) x^(n-1-2k) s^k`.
pub fn qfib_explicit(n: u32) -> Poly {
    let n = n as i64;
    (0..=(n - 1) / 2)
        .filter(|&k| n - 1 - 2 * k >= 0)
        .map(|k| {
            let mono = Monomial::new((n - 1 - 2 * k) as u32, k as i32, (k * k) as i32);
            qbinomial(n - 1 - k, k).mul_monomial(mono)
        })
        .sum()
}

/// Gaussian binomial `[n, k]_q` via `[n, k] = [n-1, k-1] + q^k [n-1, k]`.
/// Zero outside `0 <= k <= n`.
pub fn qbinomial(n: i64, k: i64) -> Poly {
    if k < 0 || n < 0 || k > n {
        return Poly::zero();
    }
    let mut row = vec![Poly::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(row.len() + 1);
        for j in 0..=m {
            let left = if j >= 1 {
                row[(j - 1) as usize].clone()
            } else {
                Poly::zero()
            };
            let right = if j < m {
                row[j as usize].mul_monomial(Monomial::sq(0, j as i32))
            } else {
                Poly::zero()
            };
            next.push(left + right);
        }
        row = next;
    }
    row.swap_remove(k as usize)
}

/// Gaussian binomial from the product quotient
/// `(1-q^n)...(1-q^(n-k+1)) / ((1-q)...(1-q^k))`, by exact division.
pub fn qbinomial_product(n: i64, k: i64) -> Result<Poly> {
    if k < 0 || n < 0 || k > n {
        return Ok(Poly::zero());
    }
    let one_minus = |e: i64| Poly::one() - Poly::monomial(Monomial::sq(0, e as i32));
    let num: Poly = (0..k).map(|i| one_minus(n - i)).product();
    let den: Poly = (1..=k).map(one_minus).product();
    num.exact_div(&den)
}

/// `<n, k>(x, s) = F_n F_(n-1) ... F_(n-k+1) / (F_1 ... F_k)`.
pub fn fibonomial(n: i64, k: i64) -> Result<Poly> {
    let num: Poly = (0..k).map(|i| classical_fib(n - i)).product();
    let den: Poly = (1..=k).map(classical_fib).product();
    num.exact_div(&den)
}

/// `prod_{i=1}^k f(i*m, x, q^shift s)`.
pub fn fac(k: i64, shift: i64, m: i64) -> Poly {
    (1..=k).map(|i| qfib(i * m, shift)).product()
}

/// `v(k) = (-1)^k q^binom(k, 2) s^(k-1)`.
pub fn v_prefactor(k: i64) -> SignedMonomial {
    SignedMonomial::with_parity(k, Monomial::sq((k - 1) as i32, binom(k, 2) as i32))
}

/// The q-fibonomial with step `ell`:
/// `prod_{i=1}^k f(i ell) / (prod_{i=1}^j f(i ell, q^((j-i) ell) s) * second)`,
/// with the second product chosen by `reading`.
pub fn qfibonomial(k: i64, j: i64, ell: i64, reading: FibonomialReading) -> Result<Poly> {
    let (num, den) = qfibonomial_factors(k, j, ell, reading, &mut |n, sh| qfib(n, sh));
    num.into_iter()
        .product::<Poly>()
        .exact_div(&den.into_iter().product())
}

fn qfibonomial_factors(
    k: i64,
    j: i64,
    ell: i64,
    reading: FibonomialReading,
    f: &mut dyn FnMut(i64, i64) -> Poly,
) -> (Vec<Poly>, Vec<Poly>) {
    let num = (1..=k).map(|i| f(i * ell, 0)).collect();
    let mut den: Vec<Poly> = (1..=j).map(|i| f(i * ell, (j - i) * ell)).collect();
    den.extend((1..=k - j).map(|i| match reading {
        FibonomialReading::FixedShift => f(i * ell, j * ell),
        FibonomialReading::VaryingShift => f(i * ell, i * ell),
    }));
    (num, den)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Key {
    Classical(i64),
    QFib(i64),
    QBinomial(i64, i64),
    Fibonomial(i64, i64),
    QFibonomial(i64, i64, i64, FibonomialReading),
}

/// Memo tables for the generators.
///
/// `qfib(n, shift)` stores only the shift-0 value and applies `s -> q^shift s`
/// on the way out, which is exact because such substitutions compose
/// additively. Concurrent fills of the same key compute the same value, so a
/// lost race is harmless.
#[derive(Debug, Default)]
pub struct SeqCache {
    table: Mutex<HashMap<Key, Poly>>,
}

impl SeqCache {
    pub fn new() -> Self {
        Self::default()
    }

    fn get_or(&self, key: Key, compute: impl FnOnce() -> Poly) -> Poly {
        if let Some(p) = self.table.lock().unwrap().get(&key) {
            return p.clone();
        }
        let value = compute();
        self.table
            .lock()
            .unwrap()
            .entry(key)
            .or_insert(value)
            .clone()
    }

    fn try_get_or(&self, key: Key, compute: impl FnOnce() -> Result<Poly>) -> Result<Poly> {
        if let Some(p) = self.table.lock().unwrap().get(&key) {
            return Ok(p.clone());
        }
        let value = compute()?;
        Ok(self
            .table
            .lock()
            .unwrap()
            .entry(key)
            .or_insert(value)
            .clone())
    }

    pub fn len(&self) -> usize {
        self.table.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn classical_fib(&self, n: i64) -> Poly {
        if let Some(p) = self.table.lock().unwrap().get(&Key::Classical(n)) {
            return p.clone();
        }
        let value = match n {
            0 => Poly::zero(),
            1 => Poly::one(),
            n if n >= 2 => {
                &x() * &self.classical_fib(n - 1)
                    + self.classical_fib(n - 2).mul_monomial(Monomial::S)
            }
            n => (self.classical_fib(n + 2) - &x() * &self.classical_fib(n + 1))
                .mul_monomial(Monomial::sq(-1, 0)),
        };
        self.get_or(Key::Classical(n), || value)
    }

    /// `f(n, x, q^shift s)`.
    pub fn qfib(&self, n: i64, shift: i64) -> Poly {
        self.qfib_base(n).subst_s_scale(shift as i32)
    }

    fn qfib_base(&self, n: i64) -> Poly {
        if let Some(p) = self.table.lock().unwrap().get(&Key::QFib(n)) {
            return p.clone();
        }
        let value = match n {
            0 => Poly::zero(),
            1 => Poly::one(),
            n if n >= 2 => {
                &x() * &self.qfib_base(n - 1) + self.qfib_base(n - 2).mul_monomial(qs(n - 2))
            }
            // f(n) from f(n+2) = x f(n+1) + q^n s f(n)
            n => (self.qfib_base(n + 2) - &x() * &self.qfib_base(n + 1))
                .mul_monomial(qs(n).inverse().unwrap()),
        };
        self.get_or(Key::QFib(n), || value)
    }

    pub fn qbinomial(&self, n: i64, k: i64) -> Poly {
        if k < 0 || n < 0 || k > n {
            return Poly::zero();
        }
        if k == 0 || k == n {
            return Poly::one();
        }
        if let Some(p) = self.table.lock().unwrap().get(&Key::QBinomial(n, k)) {
            return p.clone();
        }
        let value = self.qbinomial(n - 1, k - 1)
            + self
                .qbinomial(n - 1, k)
                .mul_monomial(Monomial::sq(0, k as i32));
        self.get_or(Key::QBinomial(n, k), || value)
    }

    pub fn qfib_explicit(&self, n: u32) -> Poly {
        let n = n as i64;
        (0..=(n - 1) / 2)
            .filter(|&k| n - 1 - 2 * k >= 0)
            .map(|k| {
                let mono = Monomial::new((n - 1 - 2 * k) as u32, k as i32, (k * k) as i32);
                self.qbinomial(n - 1 - k, k).mul_monomial(mono)
            })
            .sum()
    }

    pub fn fibonomial(&self, n: i64, k: i64) -> Result<Poly> {
        self.try_get_or(Key::Fibonomial(n, k), || {
            let num: Poly = (0..k).map(|i| self.classical_fib(n - i)).product();
            let den: Poly = (1..=k).map(|i| self.classical_fib(i)).product();
            num.exact_div(&den)
        })
    }

    pub fn qfibonomial(
        &self,
        k: i64,
        j: i64,
        ell: i64,
        reading: FibonomialReading,
    ) -> Result<Poly> {
        self.try_get_or(Key::QFibonomial(k, j, ell, reading), || {
            let (num, den) = self.qfibonomial_factors(k, j, ell, reading);
            num.into_iter()
                .product::<Poly>()
                .exact_div(&den.into_iter().product())
        })
    }

    /// Numerator and denominator factors of the q-fibonomial, undivided.
    pub fn qfibonomial_factors(
        &self,
        k: i64,
        j: i64,
        ell: i64,
        reading: FibonomialReading,
    ) -> (Vec<Poly>, Vec<Poly>) {
        qfibonomial_factors(k, j, ell, reading, &mut |n, sh| self.qfib(n, sh))
    }

    pub fn fac(&self, k: i64, shift: i64, m: i64) -> Poly {
        (1..=k).map(|i| self.qfib(i * m, shift)).product()
    }
}

/// Integer `binom(n, k)` as a polynomial constant.
pub fn binom_const(n: i64, k: i64) -> Poly {
    Poly::constant(Int::from(binom(n, k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::QSubst;

    fn p(text: &str) -> Poly {
        text.parse().unwrap()
    }

    #[test]
    fn classical_examples() {
        assert_eq!(classical_fib(5), p("x^4 + 3*s*x^2 + s^2"));
        assert_eq!(classical_fib(0), Poly::zero());
        assert_eq!(classical_fib(-1), p("s^-1"));
        assert_eq!(classical_fib(-2), p("-s^-2*x"));
    }

    #[test]
    fn qfib_examples() {
        assert_eq!(
            qfib(5, 0),
            p("x^4 + q*s*x^2 + q^2*s*x^2 + q^3*s*x^2 + q^4*s^2")
        );
        assert_eq!(qfib(3, 1), p("x^2 + q^2*s"));
        assert_eq!(qfib(-1, 0), p("q*s^-1"));
    }

    #[test]
    fn qfib_explicit_examples() {
        assert_eq!(qfib_explicit(4), p("x^3 + q*s*x + q^2*s*x"));
        assert_eq!(qfib_explicit(1), Poly::one());
        assert_eq!(qfib_explicit(0), Poly::zero());
        assert_eq!(qfib_explicit(6), qfib(6, 0));
    }

    #[test]
    fn qbinomial_examples() {
        assert_eq!(qbinomial(4, 2), p("1 + q + 2*q^2 + q^3 + q^4"));
        for n in 0..6 {
            assert_eq!(qbinomial(n, 0), Poly::one());
        }
        assert_eq!(qbinomial(3, 5), Poly::zero());
        assert_eq!(qbinomial(3, -1), Poly::zero());
    }

    #[test]
    fn qbinomial_pascal_matches_product_formula() {
        for n in 0..=10 {
            for k in 0..=n {
                assert_eq!(
                    qbinomial(n, k),
                    qbinomial_product(n, k).unwrap(),
                    "[{n},{k}]"
                );
            }
        }
    }

    #[test]
    fn fibonomial_examples() {
        assert_eq!(fibonomial(4, 2).unwrap(), p("x^4 + 3*s*x^2 + 2*s^2"));
        assert_eq!(fibonomial(6, 0).unwrap(), Poly::one());
        assert_eq!(fibonomial(3, 3).unwrap(), Poly::one());
        assert_eq!(fibonomial(3, 1).unwrap(), p("x^2 + s"));
    }

    #[test]
    fn qfibonomial_examples() {
        for k in 0..=6 {
            assert_eq!(
                qfibonomial(k, 0, 1, FibonomialReading::FixedShift).unwrap(),
                Poly::one(),
                "k={k}"
            );
        }
        // with a varying shift the j = 0 denominator is prod f(i, q^i s), not prod f(i)
        assert_ne!(
            qfibonomial(3, 0, 1, FibonomialReading::VaryingShift),
            Ok(Poly::one())
        );
        for reading in FibonomialReading::ALL {
            assert_eq!(qfibonomial(3, 1, 1, reading).unwrap(), p("x^2 + q*s"));
            let collapsed = qfibonomial(2, 1, 1, reading)
                .unwrap()
                .subst_q_value(QSubst::One);
            assert_eq!(collapsed, fibonomial(2, 1).unwrap());
        }
    }

    #[test]
    fn fac_examples() {
        assert_eq!(fac(0, 0, 1), Poly::one());
        assert_eq!(fac(3, 0, 1), p("x^3 + q*s*x"));
        assert_eq!(fac(2, 0, 2), p("x") * p("x^3 + q*s*x + q^2*s*x"));
    }

    #[test]
    fn v_prefactor_examples() {
        assert_eq!(Poly::from(v_prefactor(1)), p("-1"));
        assert_eq!(Poly::from(v_prefactor(2)), p("q*s"));
        assert_eq!(Poly::from(v_prefactor(0)), p("s^-1"));
        assert_eq!(Poly::from(v_prefactor(3)), p("-q^3*s^2"));
    }

    #[test]
    fn negative_closed_form_matches_backward_recurrence() {
        for n in 1..=10 {
            assert_eq!(qfib_negative_closed_form(n), qfib(-n, 0), "n={n}");
        }
    }

    #[test]
    fn cache_is_transparent() {
        let cache = SeqCache::new();
        for n in -8..=15 {
            for shift in [-2, 0, 3] {
                assert_eq!(cache.qfib(n, shift), qfib(n, shift));
            }
            assert_eq!(cache.classical_fib(n), classical_fib(n));
        }
        for n in 0..=6 {
            for k in 0..=n {
                assert_eq!(cache.qbinomial(n, k), qbinomial(n, k));
                assert_eq!(cache.fibonomial(n, k).unwrap(), fibonomial(n, k).unwrap());
                for reading in FibonomialReading::ALL {
                    assert_eq!(
                        cache.qfibonomial(n, k, 2, reading),
                        qfibonomial(n, k, 2, reading)
                    );
                }
            }
        }
        assert_eq!(cache.qfib_explicit(9), qfib_explicit(9));
        assert_eq!(cache.fac(3, 2, 2), fac(3, 2, 2));
        // second pass reads from the table
        assert_eq!(cache.qfib(12, 1), qfib(12, 1));
        assert!(!cache.is_empty());
    }
}
