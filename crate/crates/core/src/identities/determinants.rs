use super::coefficients::{
    lemma2_closed_form, lemma3_closed_form, prefactor, step_coefficient_parts, theorem1_parts,
    theorem2_rhs,
};
use super::matrices::{d_matrix, det_shifted, lemma2_matrix, lemma3_matrix, power_matrix};
use super::{Check, ClosedForm, Verifier};
use crate::error::{Error, Result};
use crate::poly::{binom, ExponentExpr, Monomial, SignedMonomial};
use crate::sequences::{v_prefactor, FibonomialReading, SeqCache};
use crate::Poly;

fn e(n: i64) -> ExponentExpr {
    ExponentExpr::int(n)
}

/// Writes `f(n-k, x, q^k s) = c1 f(n, x, s) + c2 f(n-1, x, qs)` with
/// `c1 = f(k-1, x, qs) / v(k)` and `c2 = -f(k, x, s) / v(k)`, and checks it.
pub fn decompose_shifted(seq: &SeqCache, n: i64, k: i64) -> Result<(Poly, Poly, Check)> {
    if k < 1 {
        return Err(Error::InvalidParameter(format!("k must be >= 1, got {k}")));
    }
    let inv = v_prefactor(k).inverse().expect("v(k) is a unit");
    let c1 = seq.qfib(k - 1, 1).mul_signed(inv);
    let c2 = -seq.qfib(k, 0).mul_signed(inv);
    let residual = seq.qfib(n - k, k) - &c1 * seq.qfib(n, 0) - &c2 * seq.qfib(n - 1, 1);
    Ok((c1, c2, Check::of_residual(residual)))
}

impl Verifier {
    pub(super) fn check_lemma1(&self, n: i64, m: i64, ell: i64) -> Result<Check> {
        let lhs = power_matrix(&self.seq, n, m, ell, 1, 2)?.det()?;
        let pre = prefactor(
            e(n - ell),
            e(n - ell),
            e(binom(n, 2) - binom(ell, 2)),
            "lemma1",
        )?;
        let rhs = (self.seq.qfib(ell, 0) * self.seq.qfib(m, n)).mul_signed(pre);
        Ok(Check::closed_form(&lhs, &rhs))
    }

    pub(super) fn check_corollary2(&self, n: i64, k: i64) -> Result<Check> {
        Ok(decompose_shifted(&self.seq, n, k)?.2)
    }

    pub(super) fn check_theorem2(
        &self,
        n: i64,
        m: i64,
        ell: i64,
        k: i64,
        form: ClosedForm,
    ) -> Result<Check> {
        let lhs = power_matrix(&self.seq, n, m, ell, k, k + 1)?.det()?;
        let rhs = theorem2_rhs(&self.seq, n, m, ell, k, form)?;
        Ok(Check::closed_form(&lhs, &rhs))
    }

    pub(super) fn check_lemma2(&self, n: i64, m: i64, k: i64) -> Result<Check> {
        let lhs = lemma2_matrix(&self.seq, n, m, k)?.det()?;
        let rhs = lemma2_closed_form(&self.seq, n, m, k)?;
        Ok(Check::closed_form(&lhs, &rhs))
    }

    pub(super) fn check_lemma3(&self, ell: i64, k: i64) -> Result<Check> {
        let lhs = lemma3_matrix(&self.seq, ell, k)?.det()?;
        let rhs = lemma3_closed_form(&self.seq, ell, k)?;
        Ok(Check::closed_form(&lhs, &rhs))
    }

    /// The first leg `d(n, m, s, k, 0) = D(n + m, m, s, k)` is checked at
    /// `n = 0` and `n = 1`; then the reduction from `k` to `k - 1` for `j = 0`
    /// or `j > 0`.
    pub(super) fn check_d_relations(
        &self,
        m: i64,
        k: i64,
        j: i64,
        form: ClosedForm,
    ) -> Result<Check> {
        for n in 0..=1 {
            let lhs = d_matrix(&self.seq, n, m, k, 0)?.det()?;
            let rhs = lemma2_matrix(&self.seq, n + m, m, k)?.det()?;
            if lhs != rhs {
                return Ok(Check::closed_form(&lhs, &rhs));
            }
        }
        let lhs = d_matrix(&self.seq, 0, m, k, j)?.det()?;
        let inner = det_shifted(&d_matrix(&self.seq, 0, m, k - 1, (j - 1).max(0))?, m)?;
        let rhs = if j == 0 {
            let b2 = binom(k + 1, 2);
            let pre = prefactor(
                e(b2 * m),
                e(b2 * m - k),
                ExponentExpr::frac(k * m * (k * m + m + k - 3), 4),
                "d_relations",
            )?;
            (self.seq.fac(k, m, m) * inner).mul_signed(pre)
        } else {
            let neg_s = match form {
                ClosedForm::Printed => m,
                ClosedForm::Derived => m * binom(k, 2),
            };
            let pre = SignedMonomial::with_parity(
                neg_s,
                Monomial::sq((neg_s - k) as i32, (binom(k, 2) * binom(m + 1, 2)) as i32),
            );
            let fac = self
                .seq
                .fac(k + 1, 0, m)
                .exact_div(&self.seq.qfib(j * m, 0))?;
            (fac * inner).mul_signed(pre)
        };
        Ok(Check::closed_form(&lhs, &rhs))
    }

    pub(super) fn check_vanishing(&self, n: i64, k: i64) -> Result<Check> {
        Ok(Check::of_residual(
            power_matrix(&self.seq, n, 1, 1, k, k + 2)?.det()?,
        ))
    }

    /// With `A_j` the minor of the `(k+2)`-dimensional step-`ell` power matrix
    /// obtained by deleting row 0 and column `j`, checks
    /// `(-1)^j det(A_j) = c_j det(A_0)` with `c_j` the recurrence coefficient,
    /// cross-multiplied by its denominator.
    pub(super) fn check_minor_ratio(
        &self,
        n: i64,
        k: i64,
        j: i64,
        ell: i64,
        reading: FibonomialReading,
    ) -> Result<Check> {
        let full = power_matrix(&self.seq, n, ell, ell, k, k + 2)?;
        let minor = |col: i64| {
            full.minor(0, col as usize)
                .ok_or_else(|| Error::InvalidParameter(format!("column {col} out of range")))
                .and_then(|a| a.det())
        };
        let a0 = minor(0)?;
        let aj = minor(j)?.mul_signed(SignedMonomial::with_parity(j, Monomial::ONE));
        let parts = if ell == 1 {
            theorem1_parts(&self.seq, k, j)?
        } else {
            step_coefficient_parts(&self.seq, k, j, ell, reading)?
        };
        let residual = aj * parts.denominator_product() - parts.numerator_product() * a0;
        Ok(Check::of_residual(residual))
    }
}
