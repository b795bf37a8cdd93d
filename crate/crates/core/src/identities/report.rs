use std::fmt;
use std::str::FromStr;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Every identity the verifiers know about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityId {
    /// Power recurrence for classical Fibonacci polynomials.
    Classical,
    /// Power recurrence for q-Fibonacci polynomials with shifted arguments.
    Theorem1,
    /// The same recurrence with unshifted arguments.
    Corollary1,
    /// `f(n-k, x, q^k s)` as a combination of `f(n)` and `f(n-1, x, qs)`.
    Corollary2,
    /// Gaussian binomial expansion of `prod (1 - q^j x)`.
    QBinomial,
    /// The 2x2 Cassini-type determinant.
    Lemma1,
    /// Closed form of `det(f(n + mi - l j, x, q^(l j) s)^k)`.
    Theorem2,
    /// Closed form of `det(f(n + mi)^j f(n + mi - 1, x, qs)^(k-j))`.
    Lemma2,
    /// Closed form of the coefficient determinant `det(a_i^j b_i^(k-j))`.
    Lemma3,
    /// Reduction steps for the row-skipping determinants `d(n, m, s, k, j)`.
    DRelations,
    /// The `(k+2) x (k+2)` power determinant vanishes.
    Vanishing,
    /// First-row cofactor ratios reproduce the recurrence coefficients.
    MinorRatio,
    /// Power recurrence with step `l`.
    Theorem3,
    /// The `k = 1` case of the step-`l` recurrence.
    Theorem3K1,
}

impl IdentityId {
    pub const ALL: [IdentityId; 14] = [
        IdentityId::Classical,
        IdentityId::Theorem1,
        IdentityId::Corollary1,
        IdentityId::Corollary2,
        IdentityId::QBinomial,
        IdentityId::Lemma1,
        IdentityId::Theorem2,
        IdentityId::Lemma2,
        IdentityId::Lemma3,
        IdentityId::DRelations,
        IdentityId::Vanishing,
        IdentityId::MinorRatio,
        IdentityId::Theorem3,
        IdentityId::Theorem3K1,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            IdentityId::Classical => "classical",
            IdentityId::Theorem1 => "theorem1",
            IdentityId::Corollary1 => "corollary1",
            IdentityId::Corollary2 => "corollary2",
            IdentityId::QBinomial => "q_binomial",
            IdentityId::Lemma1 => "lemma1",
            IdentityId::Theorem2 => "theorem2",
            IdentityId::Lemma2 => "lemma2",
            IdentityId::Lemma3 => "lemma3",
            IdentityId::DRelations => "d_relations",
            IdentityId::Vanishing => "vanishing",
            IdentityId::MinorRatio => "minor_ratio",
            IdentityId::Theorem3 => "theorem3",
            IdentityId::Theorem3K1 => "theorem3_k1",
        }
    }

    /// Parameter names, in the order they are enumerated and reported.
    pub fn params(&self) -> &'static [&'static str] {
        match self {
            IdentityId::Classical
            | IdentityId::Theorem1
            | IdentityId::Corollary1
            | IdentityId::Corollary2
            | IdentityId::Vanishing => &["k", "n"],
            IdentityId::QBinomial => &["n"],
            IdentityId::Lemma1 => &["n", "m", "ell"],
            IdentityId::Theorem2 => &["k", "n", "m", "ell"],
            IdentityId::Lemma2 => &["k", "n", "m"],
            IdentityId::Lemma3 => &["k", "ell"],
            IdentityId::DRelations => &["k", "m", "j"],
            IdentityId::MinorRatio => &["k", "j", "n", "ell"],
            IdentityId::Theorem3 => &["k", "ell", "n"],
            IdentityId::Theorem3K1 => &["ell", "n"],
        }
    }

    /// Parameters that may be omitted, with their default.
    pub fn param_default(&self, name: &str) -> Option<i64> {
        match (self, name) {
            (IdentityId::MinorRatio, "ell") => Some(1),
            _ => None,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = String;

    /// Accepts the canonical names and a few alternate ids.
    fn from_str(s: &str) -> Result<Self, String> {
        let alias = match s {
            "eq_2_26" => Some(IdentityId::Vanishing),
            "classical_1_4" => Some(IdentityId::Classical),
            "qbinomial_1_9" | "qbinomial" => Some(IdentityId::QBinomial),
            "eq_2_33" => Some(IdentityId::Theorem3K1),
            _ => None,
        };
        alias
            .or_else(|| IdentityId::ALL.iter().copied().find(|id| id.name() == s))
            .ok_or_else(|| {
                let names: Vec<_> = IdentityId::ALL.iter().map(|i| i.name()).collect();
                format!(
                    "unknown identity `{s}`; expected one of {}",
                    names.join(", ")
                )
            })
    }
}

/// Ordered named integer parameters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Params(Vec<(String, i64)>);

impl Params {
    pub fn new() -> Self {
        Params(Vec::new())
    }

    pub fn with(mut self, name: &str, value: i64) -> Self {
        self.set(name, value);
        self
    }

    pub fn set(&mut self, name: &str, value: i64) {
        match self.0.iter_mut().find(|(k, _)| k == name) {
            Some(slot) => slot.1 = value,
            None => self.0.push((name.to_string(), value)),
        }
    }

    pub fn get(&self, name: &str) -> Option<i64> {
        self.0.iter().find(|(k, _)| k == name).map(|(_, v)| *v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, i64)> {
        self.0.iter().map(|(k, v)| (k.as_str(), *v))
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(" "))
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Params {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct ParamsVisitor;

        impl<'de> Visitor<'de> for ParamsVisitor {
            type Value = Params;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object of integers")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Params, A::Error> {
                let mut out = Params::new();
                while let Some((k, v)) = access.next_entry::<String, i64>()? {
                    out.0.push((k, v));
                }
                Ok(out)
            }
        }

        deserializer.deserialize_map(ParamsVisitor)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Zero,
    Residual,
    Error,
}

/// Outcome of a single verification.
///
/// `residual` is `0` for [`Status::Zero`]. For [`Status::Residual`] it is the
/// difference of the two sides in canonical text, except for closed-form
/// determinant evaluations whose two sides differ by a signed monomial: then
/// it is that monomial, `lhs / rhs`. For [`Status::Error`] it carries the
/// error message.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: IdentityId,
    pub params: Params,
    pub status: Status,
    pub residual: String,
    pub elapsed_ms: u64,
}

impl IdentityReport {
    pub fn is_zero(&self) -> bool {
        self.status == Status::Zero
    }
}
