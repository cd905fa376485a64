//! JSON problem files.
//!
//! ```json
//! {
//!   "variables": ["x1", "x2"],
//!   "objective": [
//!     {"family": "tri", "params": [1, 2, 3], "theta_l": 0.5, "theta_r": 0.5,
//!      "exponents": {"x1": 1}}
//!   ],
//!   "constraints": [[ ... ]]
//! }
//! ```
//!
//! Exponents not listed for a term are zero. Structural problems (bad JSON,
//! unknown fields, wrong parameter count, undeclared variables) are reported
//! as [`ProblemFileError::Parse`]; values outside the admissible ranges as
//! [`ProblemFileError::Domain`].

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::chance::{UncertainGpProblem, UncertainTerm};
use crate::twofold::TwoFoldUv;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyTag {
    Tri,
    Tra,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermRecord {
    pub family: FamilyTag,
    pub params: Vec<f64>,
    pub theta_l: f64,
    pub theta_r: f64,
    #[serde(default)]
    pub exponents: BTreeMap<String, f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub variables: Vec<String>,
    pub objective: Vec<TermRecord>,
    #[serde(default)]
    pub constraints: Vec<Vec<TermRecord>>,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ProblemFileError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
}

pub const CASE_I_JSON: &str = include_str!("../data/case1.json");
pub const CASE_II_JSON: &str = include_str!("../data/case2.json");

/// The two bundled numerical cases: triangular and trapezoidal coefficients
/// on the same three-variable program.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BundledCase {
    Triangular,
    Trapezoidal,
}

impl BundledCase {
    pub fn json(self) -> &'static str {
        match self {
            BundledCase::Triangular => CASE_I_JSON,
            BundledCase::Trapezoidal => CASE_II_JSON,
        }
    }

    pub fn problem(self) -> UncertainGpProblem {
        ProblemFile::from_json(self.json())
            .and_then(|f| f.to_problem())
            .expect("bundled problem files are valid")
    }
}

impl ProblemFile {
    pub fn from_json(text: &str) -> Result<Self, ProblemFileError> {
        serde_json::from_str(text).map_err(|e| ProblemFileError::Parse(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, ProblemFileError> {
        let text = std::fs::read_to_string(path).map_err(|e| ProblemFileError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("problem files serialise")
    }

    fn blocks(&self) -> impl Iterator<Item = (String, &Vec<TermRecord>)> {
        std::iter::once(("objective".to_string(), &self.objective)).chain(
            self.constraints
                .iter()
                .enumerate()
                .map(|(k, b)| (format!("constraints[{k}]"), b)),
        )
    }

    /// Validates the file and builds the uncertain program.
    pub fn to_problem(&self) -> Result<UncertainGpProblem, ProblemFileError> {
        let mut seen = std::collections::HashSet::new();
        for (j, name) in self.variables.iter().enumerate() {
            if !seen.insert(name) {
                return Err(ProblemFileError::Parse(format!(
                    "variables[{j}]: duplicate variable `{name}`"
                )));
            }
        }
        if self.objective.is_empty() {
            return Err(ProblemFileError::Parse(
                "objective: at least one term is required".into(),
            ));
        }
        let mut blocks = Vec::new();
        for (path, records) in self.blocks() {
            if records.is_empty() {
                return Err(ProblemFileError::Parse(format!(
                    "{path}: empty constraint block"
                )));
            }
            let terms = records
                .iter()
                .enumerate()
                .map(|(i, r)| self.term(&format!("{path}[{i}]"), r))
                .collect::<Result<Vec<_>, _>>()?;
            blocks.push(terms);
        }
        let objective = blocks.remove(0);
        UncertainGpProblem::new(objective, blocks, self.variables.len())
            .map_err(|e| ProblemFileError::Domain(e.to_string()))
    }

    fn term(&self, path: &str, r: &TermRecord) -> Result<UncertainTerm, ProblemFileError> {
        let expected = match r.family {
            FamilyTag::Tri => 3,
            FamilyTag::Tra => 4,
        };
        if r.params.len() != expected {
            return Err(ProblemFileError::Parse(format!(
                "{path}.params: family `{}` takes {expected} parameters, got {}",
                serde_json::to_value(r.family)
                    .expect("tag serialises")
                    .as_str()
                    .unwrap_or("?"),
                r.params.len()
            )));
        }
        let mut exponents = vec![0.0; self.variables.len()];
        for (name, value) in &r.exponents {
            let j = self
                .variables
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| {
                    ProblemFileError::Parse(format!(
                        "{path}.exponents: `{name}` is not a declared variable"
                    ))
                })?;
            exponents[j] = *value;
        }
        let p = &r.params;
        let coefficient = match r.family {
            FamilyTag::Tri => TwoFoldUv::triangular(p[0], p[1], p[2], r.theta_l, r.theta_r),
            FamilyTag::Tra => TwoFoldUv::trapezoidal(p[0], p[1], p[2], p[3], r.theta_l, r.theta_r),
        }
        .map_err(|e| ProblemFileError::Domain(format!("{path}: {e}")))?;
        Ok(UncertainTerm::new(coefficient, exponents))
    }

    /// Display label of each coefficient, objective first.
    pub fn coefficient_labels(&self) -> Vec<String> {
        let mut labels: Vec<String> = (1..=self.objective.len())
            .map(|i| format!("b{i}0"))
            .collect();
        for (k, block) in self.constraints.iter().enumerate() {
            labels.extend((1..=block.len()).map(|i| format!("b{i}{}", k + 1)));
        }
        labels
    }
}
