use std::fmt;

use serde::{Deserialize, Serialize};

use crate::fuzzy::{FuzzyError, TermSet};

/// Capability maturity level 1 (Initial) to 5 (Optimizing).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct CmmLevel(u8);

impl CmmLevel {
    pub fn new(level: u8) -> Option<Self> {
        (1..=5).contains(&level).then_some(Self(level))
    }

    pub fn get(self) -> u8 {
        self.0
    }

    pub fn name(self) -> &'static str {
        ["Initial", "Repeatable", "Defined", "Managed", "Optimizing"][usize::from(self.0) - 1]
    }
}

impl TryFrom<u8> for CmmLevel {
    type Error = String;

    fn try_from(level: u8) -> Result<Self, Self::Error> {
        Self::new(level).ok_or_else(|| format!("CMM level {level} is outside 1..=5"))
    }
}

impl From<CmmLevel> for u8 {
    fn from(level: CmmLevel) -> Self {
        level.0
    }
}

impl fmt::Display for CmmLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The one or two maturity terms a crisp score belongs to.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevelClassification {
    pub terms: Vec<String>,
    pub memberships: Vec<f64>,
    pub levels: Vec<CmmLevel>,
    /// `"Defined"` or `"Defined to Managed"`.
    pub label: String,
    /// `"3"` or `"3 to 4"`.
    pub level_label: String,
}

impl LevelClassification {
    /// Lowest level in the classification; the level regarded as achieved.
    pub fn achieved(&self) -> CmmLevel {
        self.levels[0]
    }
}

/// Every output term with positive membership at `x`, in rank order.
///
/// Term ranks are used as CMM levels, so the output set must rank its terms 1..=5.
pub fn classify_level(x: f64, output: &TermSet) -> Result<LevelClassification, FuzzyError> {
    let mv = output.fuzzify(x)?;
    let mut terms = Vec::new();
    let mut memberships = Vec::new();
    let mut levels = Vec::new();
    for (term, &m) in output.terms().iter().zip(mv.degrees()) {
        if m > 0.0 {
            let level = u8::try_from(term.rank)
                .ok()
                .and_then(CmmLevel::new)
                .ok_or_else(|| FuzzyError::UnknownTerm(term.name.clone()))?;
            terms.push(term.name.clone());
            memberships.push(m);
            levels.push(level);
        }
    }
    if terms.is_empty() {
        return Err(FuzzyError::EmptyOutput);
    }
    let label = terms.join(" to ");
    let level_label = levels
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" to ");
    Ok(LevelClassification {
        terms,
        memberships,
        levels,
        label,
        level_label,
    })
}
