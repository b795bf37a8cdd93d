//! Both sides of every recurrence and determinant evaluation, and the
//! verifiers that compare them.
//!
//! Verification is per parameter instance and exact: a relation holds iff its
//! assembled residual is the zero polynomial. Where a relation involves
//! quotients of polynomials it is checked in cross-multiplied form. Closed
//! forms for determinants are always compared against the determinant itself.

mod coefficients;
mod determinants;
pub mod matrices;
mod recurrences;
mod report;

use std::time::Instant;

use serde::{Deserialize, Serialize};

pub use coefficients::{
    classical_coefficient, cleared_sum, corollary1_coefficient, corollary1_literal_parts,
    corollary1_parts, lemma2_closed_form, lemma3_closed_form, qbinomial_expansion,
    step_coefficient_parts, theorem1_coefficient, theorem1_parts, theorem2_rhs,
    theorem3_coefficient, StepCoefficient,
};
pub use determinants::decompose_shifted;
pub use matrices::{d_matrix, lemma2_matrix, lemma3_matrix, power_matrix};
pub use report::{IdentityId, IdentityReport, Params, Status};

use crate::error::{Error, Result};
use crate::poly::SignedMonomial;
use crate::sequences::{FibonomialReading, SeqCache};
use crate::Poly;

/// Which transcription of a closed form to test.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosedForm {
    /// Exponents exactly as displayed.
    #[default]
    Printed,
    /// Exponents recomputed by composing the intermediate evaluations.
    Derived,
}

impl ClosedForm {
    pub fn name(&self) -> &'static str {
        match self {
            ClosedForm::Printed => "printed",
            ClosedForm::Derived => "derived",
        }
    }
}

impl std::str::FromStr for ClosedForm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "printed" => Ok(ClosedForm::Printed),
            "derived" => Ok(ClosedForm::Derived),
            other => Err(format!(
                "unknown closed form `{other}` (expected `printed` or `derived`)"
            )),
        }
    }
}

/// Knobs for the identities whose published form is ambiguous.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Options {
    pub reading: FibonomialReading,
    pub closed_form: ClosedForm,
}

/// Result of comparing two sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    Zero,
    /// `lhs - rhs`, or the assembled sum that should vanish.
    Difference(Poly),
    /// The sides differ but `lhs = factor * rhs` for a signed monomial.
    Factor(SignedMonomial),
}

impl Check {
    pub fn of_residual(residual: Poly) -> Check {
        if residual.is_zero() {
            Check::Zero
        } else {
            Check::Difference(residual)
        }
    }

    /// Compares a determinant with its claimed closed form, diagnosing a
    /// monomial discrepancy.
    pub fn closed_form(lhs: &Poly, rhs: &Poly) -> Check {
        if lhs == rhs {
            return Check::Zero;
        }
        if !rhs.is_zero() {
            if let Some(m) = lhs.exact_div(rhs).ok().and_then(|q| q.as_signed_monomial()) {
                return Check::Factor(m);
            }
        }
        Check::Difference(lhs - rhs)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Check::Zero)
    }

    pub fn residual_text(&self) -> String {
        match self {
            Check::Zero => "0".to_string(),
            Check::Difference(p) => p.to_string(),
            Check::Factor(m) => Poly::from(*m).to_string(),
        }
    }
}

/// Entry point for all verifiers; owns the sequence cache.
#[derive(Debug, Default)]
pub struct Verifier {
    pub seq: SeqCache,
}

fn need(params: &Params, id: IdentityId, name: &str) -> Result<i64> {
    params
        .get(name)
        .or_else(|| id.param_default(name))
        .ok_or_else(|| Error::InvalidParameter(format!("{id} needs parameter `{name}`")))
}

fn at_least(name: &str, value: i64, min: i64) -> Result<()> {
    if value < min {
        return Err(Error::InvalidParameter(format!(
            "{name} must be >= {min}, got {value}"
        )));
    }
    Ok(())
}

impl Verifier {
    pub fn new() -> Self {
        Self::default()
    }

    /// Checks parameter names and preconditions without running anything.
    pub fn validate(id: IdentityId, params: &Params) -> Result<()> {
        for (name, _) in params.iter() {
            if !id.params().contains(&name) {
                return Err(Error::InvalidParameter(format!(
                    "{id} does not take parameter `{name}`"
                )));
            }
        }
        let get = |name: &str| need(params, id, name);
        for name in id.params() {
            let v = get(name)?;
            match *name {
                "k" => at_least("k", v, 1)?,
                "m" | "ell" => at_least(name, v, 1)?,
                _ => {}
            }
        }
        match id {
            IdentityId::QBinomial => at_least("n", get("n")?, 0)?,
            IdentityId::DRelations => {
                let (k, j) = (get("k")?, get("j")?);
                if !(0..=k).contains(&j) {
                    return Err(Error::InvalidParameter(format!(
                        "j must lie in [0, k] = [0, {k}], got {j}"
                    )));
                }
            }
            IdentityId::MinorRatio => {
                let (k, j) = (get("k")?, get("j")?);
                if !(1..=k + 1).contains(&j) {
                    return Err(Error::InvalidParameter(format!(
                        "j must lie in [1, k+1] = [1, {}], got {j}",
                        k + 1
                    )));
                }
            }
            _ => {}
        }
        Ok(())
    }

    /// Runs `id` at `params`, timing it and folding errors into the report.
    pub fn run(&self, id: IdentityId, params: &Params, opts: Options) -> IdentityReport {
        let start = Instant::now();
        let outcome = Self::validate(id, params).and_then(|()| self.check(id, params, opts));
        let elapsed_ms = start.elapsed().as_millis() as u64;
        let (status, residual) = match outcome {
            Ok(Check::Zero) => (Status::Zero, "0".to_string()),
            Ok(c) => (Status::Residual, c.residual_text()),
            Err(e) => (Status::Error, e.to_string()),
        };
        let mut ordered = Params::new();
        for name in id.params() {
            if let Ok(v) = need(params, id, name) {
                ordered.set(name, v);
            }
        }
        for (name, v) in params.iter() {
            ordered.set(name, v);
        }
        IdentityReport {
            identity: id,
            params: ordered,
            status,
            residual,
            elapsed_ms,
        }
    }

    /// The raw comparison behind [`Self::run`].
    pub fn check(&self, id: IdentityId, params: &Params, opts: Options) -> Result<Check> {
        let get = |name: &str| need(params, id, name);
        match id {
            IdentityId::Classical => self.check_classical(get("n")?, get("k")?),
            IdentityId::Theorem1 => self.check_theorem1(get("n")?, get("k")?),
            IdentityId::Corollary1 => self.check_corollary1(get("n")?, get("k")?),
            IdentityId::Corollary2 => self.check_corollary2(get("n")?, get("k")?),
            IdentityId::QBinomial => self.check_qbinomial_theorem(get("n")?),
            IdentityId::Lemma1 => self.check_lemma1(get("n")?, get("m")?, get("ell")?),
            IdentityId::Theorem2 => self.check_theorem2(
                get("n")?,
                get("m")?,
                get("ell")?,
                get("k")?,
                opts.closed_form,
            ),
            IdentityId::Lemma2 => self.check_lemma2(get("n")?, get("m")?, get("k")?),
            IdentityId::Lemma3 => self.check_lemma3(get("ell")?, get("k")?),
            IdentityId::DRelations => {
                self.check_d_relations(get("m")?, get("k")?, get("j")?, opts.closed_form)
            }
            IdentityId::Vanishing => self.check_vanishing(get("n")?, get("k")?),
            IdentityId::MinorRatio => {
                self.check_minor_ratio(get("n")?, get("k")?, get("j")?, get("ell")?, opts.reading)
            }
            IdentityId::Theorem3 => {
                self.check_theorem3(get("n")?, get("k")?, get("ell")?, opts.reading)
            }
            IdentityId::Theorem3K1 => self.check_theorem3_k1(get("n")?, get("ell")?),
        }
    }

    pub fn verify_classical_1_4(&self, n: i64, k: i64) -> IdentityReport {
        self.run(
            IdentityId::Classical,
            &Params::new().with("k", k).with("n", n),
            Options::default(),
        )
    }

    pub fn verify_theorem1(&self, n: i64, k: i64) -> IdentityReport {
        self.run(
            IdentityId::Theorem1,
            &Params::new().with("k", k).with("n", n),
            Options::default(),
        )
    }

    pub fn verify_corollary1(&self, n: i64, k: i64) -> IdentityReport {
        self.run(
            IdentityId::Corollary1,
            &Params::new().with("k", k).with("n", n),
            Options::default(),
        )
    }

    pub fn verify_qbinomial_theorem(&self, n: i64) -> IdentityReport {
        self.run(
            IdentityId::QBinomial,
            &Params::new().with("n", n),
            Options::default(),
        )
    }

    pub fn verify_lemma1(&self, n: i64, m: i64, ell: i64) -> IdentityReport {
        self.run(
            IdentityId::Lemma1,
            &Params::new().with("n", n).with("m", m).with("ell", ell),
            Options::default(),
        )
    }

    pub fn verify_theorem2(
        &self,
        n: i64,
        m: i64,
        ell: i64,
        k: i64,
        form: ClosedForm,
    ) -> IdentityReport {
        let p = Params::new()
            .with("k", k)
            .with("n", n)
            .with("m", m)
            .with("ell", ell);
        self.run(
            IdentityId::Theorem2,
            &p,
            Options {
                closed_form: form,
                ..Options::default()
            },
        )
    }

    pub fn verify_lemma2(&self, n: i64, m: i64, k: i64) -> IdentityReport {
        self.run(
            IdentityId::Lemma2,
            &Params::new().with("k", k).with("n", n).with("m", m),
            Options::default(),
        )
    }

    pub fn verify_lemma3(&self, ell: i64, k: i64) -> IdentityReport {
        self.run(
            IdentityId::Lemma3,
            &Params::new().with("k", k).with("ell", ell),
            Options::default(),
        )
    }

    pub fn verify_d_relations(&self, m: i64, k: i64, j: i64, form: ClosedForm) -> IdentityReport {
        let p = Params::new().with("k", k).with("m", m).with("j", j);
        self.run(
            IdentityId::DRelations,
            &p,
            Options {
                closed_form: form,
                ..Options::default()
            },
        )
    }

    pub fn verify_vanishing(&self, n: i64, k: i64) -> IdentityReport {
        self.run(
            IdentityId::Vanishing,
            &Params::new().with("k", k).with("n", n),
            Options::default(),
        )
    }

    pub fn minor_ratio(&self, n: i64, k: i64, j: i64) -> IdentityReport {
        self.run(
            IdentityId::MinorRatio,
            &Params::new().with("k", k).with("j", j).with("n", n),
            Options::default(),
        )
    }

    pub fn verify_theorem3(
        &self,
        n: i64,
        k: i64,
        ell: i64,
        reading: FibonomialReading,
    ) -> IdentityReport {
        let p = Params::new().with("k", k).with("ell", ell).with("n", n);
        self.run(
            IdentityId::Theorem3,
            &p,
            Options {
                reading,
                ..Options::default()
            },
        )
    }

    pub fn verify_theorem3_k1(&self, n: i64, ell: i64) -> IdentityReport {
        self.run(
            IdentityId::Theorem3K1,
            &Params::new().with("ell", ell).with("n", n),
            Options::default(),
        )
    }
}
