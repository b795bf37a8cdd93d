use super::coefficients::{
    classical_coefficient, cleared_sum, corollary1_literal_parts, corollary1_parts, prefactor,
    qbinomial_expansion, step_coefficient_parts, theorem1_parts, StepCoefficient,
};
use super::{Check, Verifier};
use crate::error::Result;
use crate::poly::{ExponentExpr, Monomial, QSubst};
use crate::sequences::FibonomialReading;
use crate::Poly;

impl Verifier {
    /// `sum_j c_j(k) f(n-j, x, q^j s)^k` with denominators cleared.
    pub fn theorem1_relation(&self, n: i64, k: i64) -> Result<Poly> {
        let terms = (0..=k + 1)
            .map(|j| {
                Ok((
                    theorem1_parts(&self.seq, k, j)?,
                    self.seq.qfib(n - j, j).pow(k as u32),
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(cleared_sum(&terms))
    }

    pub fn classical_relation(&self, n: i64, k: i64) -> Result<Poly> {
        let mut sum = Poly::zero();
        for j in 0..=k + 1 {
            sum += &(classical_coefficient(&self.seq, k, j)?
                * self.seq.classical_fib(n - j).pow(k as u32));
        }
        Ok(sum)
    }

    pub(super) fn check_theorem1(&self, n: i64, k: i64) -> Result<Check> {
        Ok(Check::of_residual(self.theorem1_relation(n, k)?))
    }

    /// The classical sum must vanish, and each q-coefficient must collapse to
    /// the classical one at `q = 1`. A failed collapse is reported as the
    /// first cross-multiplied coefficient difference.
    pub(super) fn check_classical(&self, n: i64, k: i64) -> Result<Check> {
        let residual = self.classical_relation(n, k)?;
        if !residual.is_zero() {
            return Ok(Check::Difference(residual));
        }
        for j in 0..=k + 1 {
            let diff = self.collapse_difference(k, j)?;
            if !diff.is_zero() {
                return Ok(Check::Difference(diff));
            }
        }
        Ok(Check::Zero)
    }

    /// `c_j(k)|_(q=1) - classical c_j(k)`, cross-multiplied.
    pub fn collapse_difference(&self, k: i64, j: i64) -> Result<Poly> {
        let parts = theorem1_parts(&self.seq, k, j)?;
        let at_one = |p: Poly| p.subst_q_value(QSubst::One);
        Ok(at_one(parts.numerator_product())
            - classical_coefficient(&self.seq, k, j)? * at_one(parts.denominator_product()))
    }

    /// Unshifted form: the transformed coefficients paired with `f(n-j, x, s)^k`.
    pub fn corollary1_relation(&self, n: i64, k: i64) -> Result<Poly> {
        self.unshifted_relation(n, k, corollary1_parts)
    }

    /// The unshifted relation with the coefficients exactly as displayed.
    pub fn corollary1_literal_relation(&self, n: i64, k: i64) -> Result<Poly> {
        self.unshifted_relation(n, k, corollary1_literal_parts)
    }

    fn unshifted_relation(
        &self,
        n: i64,
        k: i64,
        parts: fn(&crate::sequences::SeqCache, i64, i64, i64) -> Result<StepCoefficient>,
    ) -> Result<Poly> {
        let terms = (0..=k + 1)
            .map(|j| {
                Ok((
                    parts(&self.seq, n, k, j)?,
                    self.seq.qfib(n - j, 0).pow(k as u32),
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(cleared_sum(&terms))
    }

    pub(super) fn check_corollary1(&self, n: i64, k: i64) -> Result<Check> {
        Ok(Check::of_residual(self.corollary1_relation(n, k)?))
    }

    pub(super) fn check_qbinomial_theorem(&self, n: i64) -> Result<Check> {
        let product: Poly = (0..n)
            .map(|j| Poly::one() - Poly::monomial(Monomial::new(1, 0, j as i32)))
            .product();
        Ok(Check::of_residual(
            product - qbinomial_expansion(&self.seq, n),
        ))
    }

    /// The step-`ell` recurrence with all denominators cleared.
    pub fn theorem3_relation(
        &self,
        n: i64,
        k: i64,
        ell: i64,
        reading: FibonomialReading,
    ) -> Result<Poly> {
        let terms = (0..=k + 1)
            .map(|j| {
                let parts = step_coefficient_parts(&self.seq, k, j, ell, reading)?;
                Ok((parts, self.seq.qfib(n - j * ell, j * ell).pow(k as u32)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(cleared_sum(&terms))
    }

    pub(super) fn check_theorem3(
        &self,
        n: i64,
        k: i64,
        ell: i64,
        reading: FibonomialReading,
    ) -> Result<Check> {
        Ok(Check::of_residual(
            self.theorem3_relation(n, k, ell, reading)?,
        ))
    }

    /// `f(n) f(l, q^l s) - f(2l) f(n-l, q^l s) + (-1)^l q^(l(3l-1)/2) s^l f(l) f(n-2l, q^(2l) s)`.
    pub(super) fn check_theorem3_k1(&self, n: i64, ell: i64) -> Result<Check> {
        let f = |idx: i64, shift: i64| self.seq.qfib(idx, shift);
        let pre = prefactor(
            ExponentExpr::int(ell),
            ExponentExpr::int(ell),
            ExponentExpr::frac(ell * (3 * ell - 1), 2),
            "theorem3_k1",
        )?;
        let residual = f(n, 0) * f(ell, ell) - f(2 * ell, 0) * f(n - ell, ell)
            + (f(ell, 0) * f(n - 2 * ell, 2 * ell)).mul_signed(pre);
        Ok(Check::of_residual(residual))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::{IdentityId, Options, Params, Status};

    #[test]
    fn theorem1_examples() {
        let v = Verifier::new();
        for (n, k) in [(3, 1), (5, 2), (-2, 2), (6, 3)] {
            assert!(v.verify_theorem1(n, k).is_zero(), "n={n} k={k}");
        }
    }

    #[test]
    fn theorem1_k1_is_the_shifted_recurrence() {
        // f(n) - x f(n-1, x, qs) - qs f(n-2, x, q^2 s)
        let v = Verifier::new();
        for n in -3..8 {
            let direct = v.seq.qfib(n, 0)
                - Poly::x() * v.seq.qfib(n - 1, 1)
                - v.seq.qfib(n - 2, 2).mul_monomial(Monomial::sq(1, 1));
            assert!(direct.is_zero());
            assert!(v.theorem1_relation(n, 1).unwrap().is_zero());
        }
    }

    #[test]
    fn classical_examples() {
        let v = Verifier::new();
        for (n, k) in [(6, 2), (4, 1), (7, 3)] {
            let r = v.verify_classical_1_4(n, k);
            assert_eq!(r.status, Status::Zero, "{r:?}");
        }
    }

    #[test]
    fn corollary1_examples() {
        let v = Verifier::new();
        for (n, k) in [(3, 1), (5, 2), (4, 3)] {
            assert!(v.verify_corollary1(n, k).is_zero(), "n={n} k={k}");
        }
    }

    #[test]
    fn qbinomial_theorem_examples() {
        let v = Verifier::new();
        for n in [0, 2, 10] {
            assert!(v.verify_qbinomial_theorem(n).is_zero());
        }
    }

    #[test]
    fn theorem3_examples() {
        let v = Verifier::new();
        for reading in FibonomialReading::ALL {
            assert!(v.verify_theorem3(5, 1, 1, reading).is_zero());
        }
        assert!(v
            .verify_theorem3(6, 1, 2, FibonomialReading::FixedShift)
            .is_zero());
        assert!(v
            .verify_theorem3(6, 2, 2, FibonomialReading::FixedShift)
            .is_zero());
        assert_eq!(
            v.verify_theorem3(6, 2, 2, FibonomialReading::VaryingShift)
                .status,
            Status::Residual
        );
        assert!(v.verify_theorem3_k1(6, 2).is_zero());
    }

    #[test]
    fn broken_relation_reports_residual() {
        let v = Verifier::new();
        // the classical recurrence does not hold for q-Fibonacci polynomials
        let sum = v.seq.qfib(5, 0) - Poly::x() * v.seq.qfib(4, 0) - Poly::s() * v.seq.qfib(3, 0);
        assert!(!sum.is_zero());
        let report = v.run(
            IdentityId::Theorem1,
            &Params::new().with("k", 0).with("n", 3),
            Options::default(),
        );
        assert_eq!(report.status, Status::Error);
    }
}
