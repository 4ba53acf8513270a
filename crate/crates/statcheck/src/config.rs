//! Audit configuration files.
//!
//! ```json
//! {
//!   "output": "text",
//!   "specs": [
//!     {"label": "wang", "n": 2, "side": "schur", "coefficients": ["-1/2", "3/2"]},
//!     {"family": "gentile", "params": {"n": 4, "q": 2}}
//!   ]
//! }
//! ```

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::Deserialize;
use statcheck_core::audit::SpecError;
use statcheck_core::partitions::enumerate_partitions;
use statcheck_core::scalar::parse_rational;
use statcheck_core::zoo::{make_spec, Family, FamilyParams, ZooError};
use statcheck_core::{Side, StatisticsSpec};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "text" => Ok(Self::Text),
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            other => Err(format!("unknown output format {other:?} (expected text, json or csv)")),
        }
    }
}

/// Raw file contents. Both entry shapes share one struct so that unknown keys
/// are reported against the right entry.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AuditConfig {
    #[serde(default)]
    pub output: OutputFormat,
    pub specs: Vec<SpecEntry>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecEntry {
    pub label: Option<String>,
    pub n: Option<usize>,
    pub side: Option<String>,
    pub coefficients: Option<Vec<String>>,
    pub family: Option<String>,
    pub params: Option<FamilyParamsEntry>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyParamsEntry {
    pub n: usize,
    pub q: Option<usize>,
    pub p: Option<usize>,
    pub alpha: Option<String>,
    pub m_states: Option<usize>,
}

/// A spec ready to audit, with a display title for the verdict table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolvedSpec {
    pub title: String,
    pub spec: StatisticsSpec,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConfigError {
    /// JSON syntax or shape problem.
    Parse { path: String, line: usize, column: usize, message: String },
    /// Semantic problem in one field.
    Invalid { path: String, message: String },
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Parse { path, line, column, message } => {
                write!(f, "line {line}, column {column}: {path}: {message}")
            }
            Self::Invalid { path, message } => write!(f, "{path}: {message}"),
        }
    }
}

impl std::error::Error for ConfigError {}

fn invalid(path: impl Into<String>, message: impl fmt::Display) -> ConfigError {
    ConfigError::Invalid { path: path.into(), message: message.to_string() }
}

pub fn parse_config(text: &str) -> Result<AuditConfig, ConfigError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = match e.path().to_string() {
            p if p == "." => String::from("(root)"),
            p => p,
        };
        let inner = e.inner();
        ConfigError::Parse { path, line: inner.line(), column: inner.column(), message: strip_position(&inner.to_string()) }
    })
}

fn strip_position(message: &str) -> String {
    match message.rfind(" at line ") {
        Some(i) => message[..i].to_string(),
        None => message.to_string(),
    }
}

/// Human-readable family name used as the first column of verdict tables.
pub fn family_title(family: Family) -> &'static str {
    match family {
        Family::Boson => "Boson",
        Family::Fermion => "Fermion",
        Family::Gentile => "Gentile",
        Family::Paraboson => "Paraboson",
        Family::Parafermion => "Parafermion",
        Family::MaxwellBoltzmann => "Quon/MB",
        Family::Jack21 => "Jack",
        Family::Immanon21 => "Immanon",
        Family::SemionN5 => "Haldane-Wu semion",
        Family::CappedDistinguishable => "Capped quon",
    }
}

impl FamilyParamsEntry {
    fn to_params(&self, family: Family, path: &str) -> Result<FamilyParams, ConfigError> {
        let mut params = FamilyParams::new(family, self.n);
        params.q_or_p = match (self.q, self.p) {
            (Some(_), Some(_)) => return Err(invalid(format!("{path}.params"), "give q or p, not both")),
            (q, p) => q.or(p),
        };
        if let Some(a) = &self.alpha {
            let alpha = parse_rational(a).ok_or_else(|| invalid(format!("{path}.params.alpha"), format!("not a rational: {a:?}")))?;
            params.alpha = Some(alpha);
        }
        params.m_states = self.m_states;
        Ok(params)
    }
}

pub fn family_spec(params: &FamilyParams) -> Result<ResolvedSpec, ZooError> {
    let spec = make_spec(params)?;
    Ok(ResolvedSpec { title: family_title(params.family).to_string(), spec })
}

impl SpecEntry {
    pub fn resolve(&self, path: &str) -> Result<ResolvedSpec, ConfigError> {
        match (&self.family, &self.coefficients) {
            (Some(_), Some(_)) => Err(invalid(path, "an entry has either `family` or `coefficients`, not both")),
            (None, None) => Err(invalid(path, "an entry needs `family` or `coefficients`")),
            (Some(name), None) => {
                if self.n.is_some() || self.side.is_some() {
                    return Err(invalid(path, "family entries take `n` inside `params`"));
                }
                let family = Family::parse(name).ok_or_else(|| invalid(format!("{path}.family"), format!("unknown family {name:?}")))?;
                let params = self.params.as_ref().ok_or_else(|| invalid(format!("{path}.params"), "missing field"))?;
                let params = params.to_params(family, path)?;
                let mut resolved = family_spec(&params).map_err(|e| invalid(format!("{path}.params"), e))?;
                if let Some(label) = &self.label {
                    resolved.spec.label = label.clone();
                }
                Ok(resolved)
            }
            (None, Some(coeffs)) => {
                if self.params.is_some() {
                    return Err(invalid(format!("{path}.params"), "only family entries take params"));
                }
                let label = self.label.clone().ok_or_else(|| invalid(format!("{path}.label"), "missing field"))?;
                let n = self.n.ok_or_else(|| invalid(format!("{path}.n"), "missing field"))?;
                if n == 0 {
                    return Err(invalid(format!("{path}.n"), "particle number must be at least 1"));
                }
                let side_text = self.side.as_deref().ok_or_else(|| invalid(format!("{path}.side"), "missing field"))?;
                let side = Side::parse(side_text).ok_or_else(|| invalid(format!("{path}.side"), format!("expected schur or monomial, got {side_text:?}")))?;
                let expected = enumerate_partitions(n).len();
                if coeffs.len() != expected {
                    return Err(invalid(
                        format!("{path}.coefficients"),
                        format!("expected P({n}) = {expected} coefficients, got {}", coeffs.len()),
                    ));
                }
                let values = coeffs
                    .iter()
                    .enumerate()
                    .map(|(k, c)| parse_rational(c).ok_or_else(|| invalid(format!("{path}.coefficients[{k}]"), format!("not a rational: {c:?}"))))
                    .collect::<Result<Vec<_>, _>>()?;
                let spec = StatisticsSpec::new(n, side, values, label.clone()).map_err(|e| match e {
                    SpecError::AllZero => invalid(format!("{path}.coefficients"), e),
                    SpecError::Length { .. } => invalid(format!("{path}.coefficients"), e),
                })?;
                Ok(ResolvedSpec { title: label, spec })
            }
        }
    }
}

impl AuditConfig {
    /// Resolves every entry and checks that labels are unique.
    pub fn resolve(&self) -> Result<Vec<ResolvedSpec>, ConfigError> {
        if self.specs.is_empty() {
            return Err(invalid("specs", "at least one spec is required"));
        }
        let mut seen = HashSet::new();
        let mut out = Vec::with_capacity(self.specs.len());
        for (k, entry) in self.specs.iter().enumerate() {
            let path = format!("specs[{k}]");
            let resolved = entry.resolve(&path)?;
            if !seen.insert(resolved.spec.label.clone()) {
                return Err(invalid(format!("{path}.label"), format!("duplicate label {:?}", resolved.spec.label)));
            }
            out.push(resolved);
        }
        Ok(out)
    }
}

pub fn load_config(text: &str) -> Result<(OutputFormat, Vec<ResolvedSpec>), ConfigError> {
    let config = parse_config(text)?;
    let specs = config.resolve()?;
    Ok((config.output, specs))
}
