use crate::error::Result;
use crate::poly::{binom, ExponentExpr, Monomial, QSubst, SignedMonomial};
use crate::sequences::{FibonomialReading, SeqCache};
use crate::{Int, Poly};

fn e(n: i64) -> ExponentExpr {
    ExponentExpr::int(n)
}

fn frac(num: i64, den: i64) -> ExponentExpr {
    ExponentExpr::frac(num, den)
}

/// `(-1)^parity s^s_exp q^q_exp`, all exponents asserted integral.
pub(crate) fn prefactor(
    parity: ExponentExpr,
    s_exp: ExponentExpr,
    q_exp: ExponentExpr,
    label: &str,
) -> Result<SignedMonomial> {
    Ok(SignedMonomial::with_parity(
        parity.parity(&format!("{label}: sign"))?,
        Monomial::sq(
            s_exp.to_i32(&format!("{label}: s"))?,
            q_exp.to_i32(&format!("{label}: q"))?,
        ),
    ))
}

/// Coefficient of `F_(n-j)^k` in the classical power recurrence:
/// `(-1)^binom(j+1, 2) s^binom(j, 2) <k+1, j>(x, s)`.
pub fn classical_coefficient(seq: &SeqCache, k: i64, j: i64) -> Result<Poly> {
    let pre = prefactor(e(binom(j + 1, 2)), e(binom(j, 2)), e(0), "classical")?;
    Ok(seq.fibonomial(k + 1, j)?.mul_signed(pre))
}

/// `q -> 1/q`, then `s -> q^shift s`.
fn invert_and_shift(p: &Poly, shift: i64) -> Poly {
    p.subst_q_value(QSubst::Inverse).subst_s_scale(shift as i32)
}

/// A recurrence coefficient kept as `prefactor * prod(numerator) / prod(denominator)`,
/// since the q-fibonomial quotient is in general not a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepCoefficient {
    pub prefactor: SignedMonomial,
    pub numerator: Vec<Poly>,
    pub denominator: Vec<Poly>,
}

impl StepCoefficient {
    /// Cancels factors common to both sides and drops units.
    pub fn new(
        prefactor: SignedMonomial,
        numerator: Vec<Poly>,
        mut denominator: Vec<Poly>,
    ) -> Self {
        let mut kept = Vec::with_capacity(numerator.len());
        for factor in numerator {
            match denominator.iter().position(|d| *d == factor) {
                Some(i) => {
                    denominator.swap_remove(i);
                }
                None => kept.push(factor),
            }
        }
        kept.retain(|p| !p.is_one());
        denominator.retain(|p| !p.is_one());
        StepCoefficient {
            prefactor,
            numerator: kept,
            denominator,
        }
    }

    pub fn numerator_product(&self) -> Poly {
        self.numerator
            .iter()
            .cloned()
            .product::<Poly>()
            .mul_signed(self.prefactor)
    }

    pub fn denominator_product(&self) -> Poly {
        self.denominator.iter().cloned().product()
    }

    pub fn is_polynomial(&self) -> bool {
        self.to_poly().is_ok()
    }

    /// The coefficient as a polynomial; fails with `NonDivisible` otherwise.
    pub fn to_poly(&self) -> Result<Poly> {
        self.numerator_product()
            .exact_div(&self.denominator_product())
    }

    /// Applies a ring homomorphism that maps signed monomials to signed monomials.
    pub fn map(
        &self,
        pre: impl Fn(SignedMonomial) -> SignedMonomial,
        f: impl Fn(&Poly) -> Poly,
    ) -> Self {
        StepCoefficient::new(
            pre(self.prefactor),
            self.numerator.iter().map(&f).collect(),
            self.denominator.iter().map(&f).collect(),
        )
    }
}

/// `sum_j c_j t_j` times the least common multiple of the denominator
/// factor lists, so that it is a polynomial that vanishes iff the sum does.
pub fn cleared_sum(terms: &[(StepCoefficient, Poly)]) -> Poly {
    let mut lcm: Vec<(Poly, usize)> = Vec::new();
    for (c, _) in terms {
        let mut counts: Vec<(&Poly, usize)> = Vec::new();
        for d in &c.denominator {
            match counts.iter_mut().find(|(p, _)| *p == d) {
                Some(slot) => slot.1 += 1,
                None => counts.push((d, 1)),
            }
        }
        for (d, n) in counts {
            match lcm.iter_mut().find(|(p, _)| p == d) {
                Some(slot) => slot.1 = slot.1.max(n),
                None => lcm.push((d.clone(), n)),
            }
        }
    }
    let mut sum = Poly::zero();
    for (c, t) in terms {
        let mut missing = lcm.clone();
        for d in &c.denominator {
            let slot = missing
                .iter_mut()
                .find(|(p, _)| p == d)
                .expect("factor is in the lcm");
            slot.1 -= 1;
        }
        let multiplier: Poly = missing.iter().map(|(p, n)| p.pow(*n as u32)).product();
        sum += &(c.numerator_product() * multiplier * t);
    }
    sum
}

/// Parts of the step-`ell` coefficient of `f(n - j ell, x, q^(j ell) s)^k`:
/// sign `(-1)^(j + ell binom(j, 2))`, monomial `(q^(((4j+1) ell - 3)/6) s)^(ell binom(j, 2))`
/// and the step-`ell` q-fibonomial `<k+1, j>(x, s, q, ell)`. At `ell = 1` with
/// the fixed-shift reading these are the coefficients of the unit-step recurrence.
pub fn step_coefficient_parts(
    seq: &SeqCache,
    k: i64,
    j: i64,
    ell: i64,
    reading: FibonomialReading,
) -> Result<StepCoefficient> {
    let power = ell * binom(j, 2);
    let q_exp = frac((4 * j + 1) * ell - 3, 6) * e(power);
    let pre = prefactor(e(j + power), e(power), q_exp, "theorem3")?;
    let (numerator, denominator) = seq.qfibonomial_factors(k + 1, j, ell, reading);
    Ok(StepCoefficient::new(pre, numerator, denominator))
}

/// Unit-step coefficient parts: `(-1)^binom(j+1, 2) s^binom(j, 2) q^(j(j-1)(2j-1)/6) <k+1, j>(x, s, q)`.
pub fn theorem1_parts(seq: &SeqCache, k: i64, j: i64) -> Result<StepCoefficient> {
    let pre = prefactor(
        e(binom(j + 1, 2)),
        e(binom(j, 2)),
        frac(j * (j - 1) * (2 * j - 1), 6),
        "theorem1",
    )?;
    let (numerator, denominator) =
        seq.qfibonomial_factors(k + 1, j, 1, FibonomialReading::FixedShift);
    Ok(StepCoefficient::new(pre, numerator, denominator))
}

/// Coefficient of `f(n-j, x, q^j s)^k` in the q-power recurrence, when it is a
/// polynomial.
pub fn theorem1_coefficient(seq: &SeqCache, k: i64, j: i64) -> Result<Poly> {
    theorem1_parts(seq, k, j)?.to_poly()
}

/// The unit-step coefficient moved to unshifted arguments: `q -> 1/q`, then
/// `s -> q^(n-1) s`.
pub fn corollary1_parts(seq: &SeqCache, n: i64, k: i64, j: i64) -> Result<StepCoefficient> {
    let shift = n - 1;
    Ok(theorem1_parts(seq, k, j)?.map(
        |m| {
            let mono = Monomial::sq(m.mono.es, -m.mono.eq + shift as i32 * m.mono.es);
            SignedMonomial::new(m.negative, mono)
        },
        |p| invert_and_shift(p, shift),
    ))
}

pub fn corollary1_coefficient(seq: &SeqCache, n: i64, k: i64, j: i64) -> Result<Poly> {
    corollary1_parts(seq, n, k, j)?.to_poly()
}

/// The unshifted coefficient exactly as displayed:
/// `(-1)^binom(j+1, 2) s^binom(j, 2) q^(binom(n-1, 2) - j(j-1)(2j-1)/6)` times
/// `prod_{i=1}^{k+1} f(i, x, q^(n-i) s) / (prod_{i=1}^j f(i, x, q^(n-j) s) prod_{i=1}^{k+1-j} f(i, x, q^(n-i-j) s))`.
pub fn corollary1_literal_parts(seq: &SeqCache, n: i64, k: i64, j: i64) -> Result<StepCoefficient> {
    let pre = prefactor(
        e(binom(j + 1, 2)),
        e(binom(j, 2)),
        e(binom(n - 1, 2)) - frac(j * (j - 1) * (2 * j - 1), 6),
        "corollary1",
    )?;
    let numerator = (1..=k + 1).map(|i| seq.qfib(i, n - i)).collect();
    let mut denominator: Vec<Poly> = (1..=j).map(|i| seq.qfib(i, n - j)).collect();
    denominator.extend((1..=k + 1 - j).map(|i| seq.qfib(i, n - i - j)));
    Ok(StepCoefficient::new(pre, numerator, denominator))
}

/// Coefficient of `f(n - j ell, x, q^(j ell) s)^k` in the step-`ell` recurrence,
/// when it is a polynomial.
pub fn theorem3_coefficient(
    seq: &SeqCache,
    k: i64,
    j: i64,
    ell: i64,
    reading: FibonomialReading,
) -> Result<Poly> {
    step_coefficient_parts(seq, k, j, ell, reading)?.to_poly()
}

/// `prod_{j=0}^k binom(k, j)`.
fn binomial_row_product(k: i64) -> Int {
    (0..=k).map(|j| Int::from(binom(k, j))).product()
}

/// Closed form claimed for `det(f(n + m i - ell j, x, q^(ell j) s)^k)_{i,j=0..k}`.
pub fn theorem2_rhs(
    seq: &SeqCache,
    n: i64,
    m: i64,
    ell: i64,
    k: i64,
    form: super::ClosedForm,
) -> Result<Poly> {
    let b2 = binom(k + 1, 2);
    let b3 = binom(k + 1, 3);
    let sign_s = e(b2 * (n - k * ell) + b3 * (ell + m));
    let m_part = e(b2 * binom(n, 2) + b3 * m * n) + e(b3) * frac(m * (k * m - 2), 4);
    let ell_part = match form {
        super::ClosedForm::Printed => -e(b2 * binom(ell, 2)) - e(b3) * frac(ell * (3 * k + 2), 4),
        super::ClosedForm::Derived => {
            e(b3) * frac(ell * (k * ell - 2), 4)
                - frac(k * k * (k + 1) * ell * (2 * k * ell + ell - 3), 12)
        }
    };
    let pre = prefactor(sign_s, sign_s, m_part + ell_part, "theorem2")?;
    let facs: Poly = (0..k)
        .map(|j| seq.fac(k - j, m * j + n, m) * seq.fac(k - j, ell * j, ell))
        .product();
    Ok(facs.scale(&binomial_row_product(k)).mul_signed(pre))
}

/// Closed form claimed for `D(n, m, s, k) = det(f(n + mi)^j f(n + mi - 1, x, qs)^(k-j))`.
pub fn lemma2_closed_form(seq: &SeqCache, n: i64, m: i64, k: i64) -> Result<Poly> {
    let (b2, b3, b4) = (binom(k + 1, 2), binom(k + 1, 3), binom(k + 1, 4));
    let pre = prefactor(
        e(b2 * n + b3 * m),
        e(b2 * (n - 1) + b3 * m),
        e(b2 * binom(n, 2) + n * m * b3 + b3 * binom(m, 2) + b4 * m * m),
        "lemma2",
    )?;
    let facs: Poly = (0..k).map(|j| seq.fac(k - j, m * j + n, m)).product();
    Ok(facs.mul_signed(pre))
}

/// Closed form claimed for `det(f(ell i - 1, x, qs)^j (-f(ell i, x, s))^(k-j))`.
pub fn lemma3_closed_form(seq: &SeqCache, ell: i64, k: i64) -> Result<Poly> {
    let (b2, b3, b4) = (binom(k + 1, 2), binom(k + 1, 3), binom(k + 1, 4));
    let pre = prefactor(
        e(b3 * ell),
        e(-b2 + b3 * ell),
        e(b3 * binom(ell, 2) + b4 * ell * ell),
        "lemma3",
    )?;
    let facs: Poly = (0..k).map(|j| seq.fac(k - j, ell * j, ell)).product();
    Ok(facs.mul_signed(pre))
}

/// `sum_k (-1)^k q^binom(k, 2) [n, k]_q x^k`.
pub fn qbinomial_expansion(seq: &SeqCache, n: i64) -> Poly {
    (0..=n)
        .map(|k| {
            let pre =
                SignedMonomial::with_parity(k, Monomial::new(k as u32, 0, binom(k, 2) as i32));
            seq.qbinomial(n, k).mul_signed(pre)
        })
        .sum()
}
