use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize};

use crate::identities::{CaseTemplate, ParamKind, ParamValue};

/// Output format of a verification report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(format!("unknown format {other:?} (expected json or csv)")),
        }
    }
}

/// A list of parameter values; a bare scalar means a one-element list.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct ValueList(pub Vec<ParamValue>);

impl<'de> Deserialize<'de> for ValueList {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            One(f64),
            Many(Vec<ParamValue>),
        }
        Ok(match Raw::deserialize(d)? {
            Raw::One(x) => ValueList(vec![ParamValue::Real(x)]),
            Raw::Many(v) => ValueList(v),
        })
    }
}

/// Uniform random points for one case: `count` draws with each listed
/// parameter sampled from [lo, hi]; unlisted parameters take the first
/// value of their grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RandomDraws {
    pub count: usize,
    pub ranges: BTreeMap<String, [f64; 2]>,
}

/// Verification grid, read from a JSON file.
///
/// ```json
/// {
///   "seed": 7,
///   "cases": ["theorem*"],
///   "tolerance": 1e-8,
///   "grid": {"lambda": [1, 2]},
///   "case_grids": {"theorem1": {"x1": [1.5], "p": [0, [0.5, 0.5]]}},
///   "tolerances": {"theorem4": 1e-12},
///   "random": {"theorem1": {"count": 20, "ranges": {"alpha": [0.3, 3.0]}}}
/// }
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub format: Option<OutputFormat>,
    /// Default relative tolerance.
    #[serde(default)]
    pub tolerance: Option<f64>,
    /// Case-name glob patterns; empty selects every case.
    #[serde(default)]
    pub cases: Vec<String>,
    /// Overrides applied to every selected case that has the parameter.
    #[serde(default)]
    pub grid: BTreeMap<String, ValueList>,
    #[serde(default)]
    pub case_grids: BTreeMap<String, BTreeMap<String, ValueList>>,
    #[serde(default)]
    pub tolerances: BTreeMap<String, f64>,
    #[serde(default)]
    pub random: BTreeMap<String, RandomDraws>,
}

/// Invalid configuration, with the offending field or position.
#[derive(Debug, Clone, PartialEq)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

fn err<T>(msg: impl Into<String>) -> Result<T, ConfigError> {
    Err(ConfigError(msg.into()))
}

impl GridConfig {
    pub fn from_json(text: &str) -> Result<Self, ConfigError> {
        serde_json::from_str(text).map_err(|e| ConfigError(format!("config line {}, column {}: {e}", e.line(), e.column())))
    }

    pub fn from_path(path: &std::path::Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// Templates matched by the case patterns, in name order.
    pub fn select<'a>(&self, catalog: &'a [CaseTemplate]) -> Result<Vec<&'a CaseTemplate>, ConfigError> {
        if self.cases.is_empty() {
            return Ok(catalog.iter().collect());
        }
        let mut patterns = Vec::new();
        for raw in &self.cases {
            let pat = glob::Pattern::new(raw).map_err(|e| ConfigError(format!("cases: bad pattern {raw:?}: {e}")))?;
            if !catalog.iter().any(|t| pat.matches(t.name)) {
                return err(format!("cases: pattern {raw:?} matches no case"));
            }
            patterns.push(pat);
        }
        Ok(catalog.iter().filter(|t| patterns.iter().any(|p| p.matches(t.name))).collect())
    }

    /// Checks every override against the parameter schema of the selected
    /// cases.
    pub fn validate(&self, selected: &[&CaseTemplate]) -> Result<(), ConfigError> {
        let check_tol = |field: &str, t: f64| {
            if t > 0.0 && t.is_finite() {
                Ok(())
            } else {
                err(format!("{field}: tolerance {t} must be positive"))
            }
        };
        if let Some(t) = self.tolerance {
            check_tol("tolerance", t)?;
        }
        for (name, t) in &self.tolerances {
            check_tol(&format!("tolerances.{name}"), *t)?;
            if !selected.iter().any(|c| c.name == name) {
                return err(format!("tolerances: unknown or unselected case {name:?}"));
            }
        }
        for (param, values) in &self.grid {
            let owners: Vec<_> = selected.iter().filter_map(|c| c.param(param)).collect();
            if owners.is_empty() {
                return err(format!("grid.{param}: no selected case has this parameter"));
            }
            for spec in owners {
                check_values(&format!("grid.{param}"), spec.kind, &values.0)?;
            }
        }
        for (case, params) in &self.case_grids {
            let Some(t) = selected.iter().find(|c| c.name == case) else {
                return err(format!("case_grids: unknown or unselected case {case:?}"));
            };
            for (param, values) in params {
                let Some(spec) = t.param(param) else {
                    return err(format!("case_grids.{case}.{param}: case has no such parameter"));
                };
                check_values(&format!("case_grids.{case}.{param}"), spec.kind, &values.0)?;
            }
        }
        for (case, draws) in &self.random {
            let Some(t) = selected.iter().find(|c| c.name == case) else {
                return err(format!("random: unknown or unselected case {case:?}"));
            };
            for (param, [lo, hi]) in &draws.ranges {
                if t.param(param).is_none() {
                    return err(format!("random.{case}.ranges.{param}: case has no such parameter"));
                }
                if !(lo <= hi && lo.is_finite() && hi.is_finite()) {
                    return err(format!("random.{case}.ranges.{param}: need finite lo <= hi, got [{lo}, {hi}]"));
                }
            }
        }
        Ok(())
    }

    /// Grid overrides for one case: global entries first, then per-case ones.
    pub fn overrides_for(&self, template: &CaseTemplate) -> BTreeMap<String, Vec<ParamValue>> {
        let mut out: BTreeMap<String, Vec<ParamValue>> = self
            .grid
            .iter()
            .filter(|(k, _)| template.param(k).is_some())
            .map(|(k, v)| (k.clone(), v.0.clone()))
            .collect();
        if let Some(per_case) = self.case_grids.get(template.name) {
            for (k, v) in per_case {
                out.insert(k.clone(), v.0.clone());
            }
        }
        out
    }
}

fn check_values(field: &str, kind: ParamKind, values: &[ParamValue]) -> Result<(), ConfigError> {
    if values.is_empty() {
        return err(format!("{field}: empty value list"));
    }
    for v in values {
        let finite = match v {
            ParamValue::Real(x) => x.is_finite(),
            ParamValue::Complex([a, b]) => a.is_finite() && b.is_finite(),
        };
        if !finite {
            return err(format!("{field}: non-finite value {v}"));
        }
        if kind == ParamKind::Real && v.as_real().is_none() {
            return err(format!("{field}: expected a real number, got {v}"));
        }
    }
    Ok(())
}
