//! Parameter grids and run reports.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::identities::{ClosedForm, IdentityId, IdentityReport, Options, Params, Status};
use crate::sequences::FibonomialReading;

/// An inclusive integer interval `a..b` or an explicit list `a,b,c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum ValueSet {
    Range(i64, i64),
    List(Vec<i64>),
}

impl ValueSet {
    pub fn values(&self) -> Vec<i64> {
        match self {
            ValueSet::Range(a, b) => (*a..=*b).collect(),
            ValueSet::List(v) => v.clone(),
        }
    }
}

impl fmt::Display for ValueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValueSet::Range(a, b) => write!(f, "{a}..{b}"),
            ValueSet::List(v) => {
                let parts: Vec<String> = v.iter().map(i64::to_string).collect();
                f.write_str(&parts.join(","))
            }
        }
    }
}

impl FromStr for ValueSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let int = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| bad("expected an integer"))
        };
        let t = s.trim();
        if t.is_empty() {
            return Err(bad("empty range"));
        }
        // the first character may be a minus sign, so look for `..` after it
        if let Some(pos) = t[1..].find("..").map(|p| p + 1) {
            let (a, b) = (int(&t[..pos])?, int(&t[pos + 2..])?);
            if a > b {
                return Err(bad("empty range: lower bound exceeds upper bound"));
            }
            return Ok(ValueSet::Range(a, b));
        }
        let values = t.split(',').map(int).collect::<Result<Vec<_>>>()?;
        Ok(ValueSet::List(values))
    }
}

impl From<ValueSet> for String {
    fn from(v: ValueSet) -> String {
        v.to_string()
    }
}

impl TryFrom<String> for ValueSet {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// One parameter and its values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamRange {
    pub name: String,
    pub values: ValueSet,
}

/// An identity and ranges for some of its parameters. Parameters left out
/// take their default grid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSpec {
    pub identity: IdentityId,
    pub ranges: Vec<ParamRange>,
    pub reading: FibonomialReading,
    pub closed_form: ClosedForm,
}

struct Block {
    sets: Vec<(&'static str, ValueSet)>,
    /// Default `j` values are kept only while `j <= k + offset`.
    j_offset: Option<i64>,
}

fn r(a: i64, b: i64) -> ValueSet {
    ValueSet::Range(a, b)
}

fn block(sets: Vec<(&'static str, ValueSet)>) -> Block {
    Block {
        sets,
        j_offset: None,
    }
}

fn default_blocks(id: IdentityId) -> Vec<Block> {
    use IdentityId::*;
    match id {
        Classical | Theorem1 => vec![block(vec![("k", r(1, 4)), ("n", r(-3, 10))])],
        Corollary1 => vec![block(vec![("k", r(1, 3)), ("n", r(1, 8))])],
        Corollary2 => vec![block(vec![("k", r(1, 5)), ("n", r(0, 10))])],
        QBinomial => vec![block(vec![("n", r(0, 12))])],
        Lemma1 => vec![block(vec![
            ("n", r(-3, 6)),
            ("m", r(1, 4)),
            ("ell", r(1, 4)),
        ])],
        Theorem2 => vec![
            block(vec![
                ("k", r(1, 1)),
                ("n", r(-2, 4)),
                ("m", r(1, 3)),
                ("ell", r(1, 3)),
            ]),
            block(vec![
                ("k", r(2, 3)),
                ("n", r(-1, 3)),
                ("m", r(1, 2)),
                ("ell", r(1, 2)),
            ]),
        ],
        Lemma2 => vec![
            block(vec![("k", r(1, 1)), ("n", r(-2, 4)), ("m", r(1, 3))]),
            block(vec![("k", r(2, 3)), ("n", r(-1, 3)), ("m", r(1, 2))]),
        ],
        Lemma3 => vec![
            block(vec![("k", r(1, 1)), ("ell", r(1, 3))]),
            block(vec![("k", r(2, 3)), ("ell", r(1, 2))]),
        ],
        DRelations => vec![Block {
            sets: vec![("k", r(1, 3)), ("m", r(1, 2)), ("j", r(0, 3))],
            j_offset: Some(0),
        }],
        Vanishing => vec![block(vec![("k", r(1, 3)), ("n", r(-3, 10))])],
        MinorRatio => vec![Block {
            sets: vec![
                ("k", r(1, 3)),
                ("j", r(1, 4)),
                ("n", ValueSet::List(vec![4, 5])),
                ("ell", r(1, 1)),
            ],
            j_offset: Some(1),
        }],
        Theorem3 => vec![block(vec![
            ("k", r(1, 2)),
            ("ell", r(1, 3)),
            ("n", r(2, 8)),
        ])],
        Theorem3K1 => (1..=3)
            .map(|ell| block(vec![("ell", r(ell, ell)), ("n", r(2 * ell, 2 * ell + 6))]))
            .collect(),
    }
}

impl GridSpec {
    /// The default grid of `id`.
    pub fn new(id: IdentityId) -> Self {
        GridSpec {
            identity: id,
            ranges: Vec::new(),
            reading: Default::default(),
            closed_form: Default::default(),
        }
    }

    /// Sets the values of one parameter; rejects parameters `id` does not take.
    pub fn with_range(mut self, name: &str, values: ValueSet) -> Result<Self> {
        if !self.identity.params().contains(&name) {
            return Err(Error::InvalidParameter(format!(
                "{} does not take parameter `{name}`",
                self.identity
            )));
        }
        match self.ranges.iter_mut().find(|p| p.name == name) {
            Some(slot) => slot.values = values,
            None => self.ranges.push(ParamRange {
                name: name.to_string(),
                values,
            }),
        }
        Ok(self)
    }

    pub fn options(&self) -> Options {
        Options {
            reading: self.reading,
            closed_form: self.closed_form,
        }
    }

    fn given(&self, name: &str) -> Option<&ValueSet> {
        self.ranges
            .iter()
            .find(|p| p.name == name)
            .map(|p| &p.values)
    }

    /// Every grid point, in enumeration order, without duplicates.
    pub fn points(&self) -> Vec<Params> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for b in default_blocks(self.identity) {
            let axes: Vec<(&str, Vec<i64>)> = self
                .identity
                .params()
                .iter()
                .map(|name| {
                    let set = self
                        .given(name)
                        .or_else(|| b.sets.iter().find(|(n, _)| n == name).map(|(_, v)| v));
                    (*name, set.map(ValueSet::values).unwrap_or_default())
                })
                .collect();
            let filter_j = b.j_offset.filter(|_| self.given("j").is_none());
            for p in cartesian(&axes) {
                if let (Some(off), Some(j), Some(k)) = (filter_j, p.get("j"), p.get("k")) {
                    if j > k + off {
                        continue;
                    }
                }
                if seen.insert(p.clone()) {
                    out.push(p);
                }
            }
        }
        out
    }
}

fn cartesian(axes: &[(&str, Vec<i64>)]) -> Vec<Params> {
    let mut acc = vec![Params::new()];
    for (name, values) in axes {
        acc = acc
            .iter()
            .flat_map(|p| values.iter().map(move |v| p.clone().with(name, *v)))
            .collect();
    }
    acc
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub zero: usize,
    pub residual: usize,
    pub error: usize,
}

/// Everything a grid run produced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub version: String,
    pub grid: GridSpec,
    pub reports: Vec<IdentityReport>,
    pub summary: Summary,
    pub elapsed_ms: u64,
}

impl RunReport {
    pub fn new(grid: GridSpec, reports: Vec<IdentityReport>, elapsed_ms: u64) -> Self {
        let mut summary = Summary::default();
        for r in &reports {
            match r.status {
                Status::Zero => summary.zero += 1,
                Status::Residual => summary.residual += 1,
                Status::Error => summary.error += 1,
            }
        }
        RunReport {
            version: env!("CARGO_PKG_VERSION").to_string(),
            grid,
            reports,
            summary,
            elapsed_ms,
        }
    }

    pub fn success(&self) -> bool {
        self.summary.residual == 0 && self.summary.error == 0
    }
}
