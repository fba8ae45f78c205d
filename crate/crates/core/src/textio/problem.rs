use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{parse_integer, parse_monomial, parse_poly};
use crate::error::Error;
use crate::order_ideal::{CoefficientIdealMapping, OrderIdeal};
use crate::poly::{MonomialOrder, OrderKind, Polynomial};

/// A problem file as written on disk (JSON).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub vars: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<OrderSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal_generators: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mapping: Option<Vec<MappingEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prebasis: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub query_polys: Option<Vec<String>>,
    /// Deepest k-th border reported by the `border` command.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub border_depth: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderSpec {
    pub kind: OrderKind,
    /// Variable names, most significant first; defaults to declaration order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub priority: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MappingEntry {
    pub monomial: String,
    pub generators: Vec<IntLiteral>,
}

/// Integers may be given as JSON numbers or, when large, as strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IntLiteral {
    Number(i64),
    Text(String),
}

#[derive(Debug, thiserror::Error)]
pub enum ProblemError {
    #[error("malformed problem file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{section}: {message}")]
    Invalid { section: String, message: String },
    #[error("{section}[{index}]: {source}")]
    Entry {
        section: String,
        index: usize,
        source: Error,
    },
    #[error("{section}: {source}")]
    Section { section: String, source: Error },
    #[error("problem file has no `{0}` section")]
    MissingSection(&'static str),
}

/// A parsed and validated problem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem {
    pub vars: Vec<String>,
    pub order: MonomialOrder,
    pub ideal_generators: Option<Vec<Polynomial>>,
    pub order_ideal: Option<OrderIdeal>,
    pub prebasis: Option<Vec<Polynomial>>,
    pub query_polys: Vec<Polynomial>,
    pub border_depth: u32,
}

impl ProblemFile {
    pub fn from_json(text: &str) -> Result<Self, ProblemError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn resolve(&self) -> Result<Problem, ProblemError> {
        let vars = self.vars.clone();
        if vars.is_empty() {
            return Err(invalid("vars", "at least one variable is required"));
        }
        for (i, v) in vars.iter().enumerate() {
            let ok = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(invalid("vars", &format!("`{v}` is not an ASCII identifier")));
            }
            if vars[..i].contains(v) {
                return Err(invalid("vars", &format!("`{v}` declared twice")));
            }
        }

        let order = match &self.order {
            None => MonomialOrder::natural(OrderKind::DegLex, vars.len()),
            Some(spec) => {
                let priority = match &spec.priority {
                    None => (0..vars.len()).collect(),
                    Some(names) => names
                        .iter()
                        .map(|n| {
                            vars.iter()
                                .position(|v| v == n)
                                .ok_or_else(|| invalid("order", &format!("unknown variable `{n}`")))
                        })
                        .collect::<Result<Vec<_>, _>>()?,
                };
                if priority.len() != vars.len() {
                    return Err(invalid("order", "priority must list every variable once"));
                }
                MonomialOrder::new(spec.kind, priority).map_err(|e| ProblemError::Section {
                    section: "order".into(),
                    source: e,
                })?
            }
        };

        let polys = |section: &str, list: &Option<Vec<String>>| -> Result<Option<Vec<Polynomial>>, ProblemError> {
            list.as_ref()
                .map(|items| {
                    items
                        .iter()
                        .enumerate()
                        .map(|(index, s)| {
                            parse_poly(&vars, s).map_err(|source| ProblemError::Entry {
                                section: section.into(),
                                index,
                                source,
                            })
                        })
                        .collect()
                })
                .transpose()
        };

        let order_ideal = match &self.mapping {
            None => None,
            Some(entries) => {
                let mut raw = Vec::with_capacity(entries.len());
                for (index, e) in entries.iter().enumerate() {
                    let entry_err = |source| ProblemError::Entry {
                        section: "mapping".into(),
                        index,
                        source,
                    };
                    let m = parse_monomial(&vars, &e.monomial).map_err(entry_err)?;
                    let gens = e
                        .generators
                        .iter()
                        .map(|g| match g {
                            IntLiteral::Number(n) => Ok(BigInt::from(*n)),
                            IntLiteral::Text(s) => parse_integer(s),
                        })
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(entry_err)?;
                    raw.push((m, gens));
                }
                let mapping = CoefficientIdealMapping::validate(vars.len(), &raw).map_err(|source| {
                    ProblemError::Section {
                        section: "mapping".into(),
                        source,
                    }
                })?;
                Some(OrderIdeal::new(mapping))
            }
        };

        Ok(Problem {
            ideal_generators: polys("ideal_generators", &self.ideal_generators)?,
            prebasis: polys("prebasis", &self.prebasis)?,
            query_polys: polys("query_polys", &self.query_polys)?.unwrap_or_default(),
            order_ideal,
            order,
            border_depth: self.border_depth.unwrap_or(2),
            vars,
        })
    }
}

fn invalid(section: &str, message: &str) -> ProblemError {
    ProblemError::Invalid {
        section: section.into(),
        message: message.into(),
    }
}

impl Problem {
    pub fn from_json(text: &str) -> Result<Self, ProblemError> {
        ProblemFile::from_json(text)?.resolve()
    }

    pub fn require_generators(&self) -> Result<&[Polynomial], ProblemError> {
        self.ideal_generators
            .as_deref()
            .ok_or(ProblemError::MissingSection("ideal_generators"))
    }

    pub fn require_order_ideal(&self) -> Result<&OrderIdeal, ProblemError> {
        self.order_ideal
            .as_ref()
            .ok_or(ProblemError::MissingSection("mapping"))
    }

    pub fn require_prebasis(&self) -> Result<&[Polynomial], ProblemError> {
        self.prebasis
            .as_deref()
            .ok_or(ProblemError::MissingSection("prebasis"))
    }
}
