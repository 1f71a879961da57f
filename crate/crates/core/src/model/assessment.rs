use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fuzzy::FuzzyError;

use super::cascade::{reduce_group, GroupTrace, NodeInput};
use super::classify::{classify_level, CmmLevel, LevelClassification};
use super::{Activity, QuestionId, StandardModel, UNIVERSE};

/// What is wrong with one field of a submitted answer sheet.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Problem {
    Missing,
    Unknown,
    OutOfRange { value: f64, min: f64, max: f64 },
    NotFinite,
    Invalid { message: String },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Issue {
    pub field: String,
    #[serde(flatten)]
    pub problem: Problem,
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.problem {
            Problem::Missing => write!(f, "{}: missing", self.field),
            Problem::Unknown => write!(f, "{}: unknown field", self.field),
            Problem::OutOfRange { value, min, max } => {
                write!(f, "{}: {value} is outside [{min}, {max}]", self.field)
            }
            Problem::NotFinite => write!(f, "{}: not a finite number", self.field),
            Problem::Invalid { message } => write!(f, "{}: {message}", self.field),
        }
    }
}

/// One or more invalid fields, in field order.
#[derive(Debug, Clone, PartialEq, Error, Serialize, Deserialize)]
#[error("invalid answer sheet: {}", .issues.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
pub struct ValidationError {
    pub issues: Vec<Issue>,
}

impl ValidationError {
    pub fn single(field: impl Into<String>, problem: Problem) -> Self {
        Self {
            issues: vec![Issue {
                field: field.into(),
                problem,
            }],
        }
    }

    /// Names of the offending fields.
    pub fn fields(&self) -> Vec<&str> {
        self.issues.iter().map(|i| i.field.as_str()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AssessmentError {
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error(transparent)]
    Fuzzy(#[from] FuzzyError),
    #[error("cannot reduce an empty group")]
    EmptyGroup,
    #[error("reduction tree {tree} does not cover {leaves} leaves")]
    TreeMismatch { leaves: usize, tree: String },
}

/// Seventeen crisp answers in `[0, 50]` plus organization metadata.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnswerSheet {
    organization: String,
    declared_cmm: Option<CmmLevel>,
    answers: [f64; QuestionId::COUNT],
}

fn check_answer(id: QuestionId, value: f64) -> Option<Issue> {
    let (min, max) = UNIVERSE;
    let problem = if !value.is_finite() {
        Problem::NotFinite
    } else if !(min..=max).contains(&value) {
        Problem::OutOfRange { value, min, max }
    } else {
        return None;
    };
    Some(Issue {
        field: id.to_string(),
        problem,
    })
}

impl AnswerSheet {
    pub fn new(
        organization: impl Into<String>,
        answers: [f64; QuestionId::COUNT],
    ) -> Result<Self, ValidationError> {
        let issues: Vec<_> = QuestionId::all()
            .filter_map(|id| check_answer(id, answers[id.index()]))
            .collect();
        if !issues.is_empty() {
            return Err(ValidationError { issues });
        }
        Ok(Self {
            organization: organization.into(),
            declared_cmm: None,
            answers,
        })
    }

    /// Validates keyed answers; every missing, unknown or out-of-range key is reported.
    pub fn from_keyed<'a>(
        organization: impl Into<String>,
        answers: impl IntoIterator<Item = (&'a str, f64)>,
    ) -> Result<Self, ValidationError> {
        let mut slots = [None; QuestionId::COUNT];
        let mut issues = Vec::new();
        let mut unknown = Vec::new();
        for (key, value) in answers {
            match key.parse::<QuestionId>() {
                Ok(id) => {
                    if slots[id.index()].replace(value).is_some() {
                        issues.push(Issue {
                            field: id.to_string(),
                            problem: Problem::Invalid {
                                message: "given more than once".into(),
                            },
                        });
                    }
                }
                Err(_) => unknown.push(Issue {
                    field: key.to_owned(),
                    problem: Problem::Unknown,
                }),
            }
        }
        for id in QuestionId::all() {
            match slots[id.index()] {
                None => issues.push(Issue {
                    field: id.to_string(),
                    problem: Problem::Missing,
                }),
                Some(v) => issues.extend(check_answer(id, v)),
            }
        }
        issues.extend(unknown);
        if !issues.is_empty() {
            return Err(ValidationError { issues });
        }
        Self::new(organization, slots.map(|v| v.unwrap_or_default()))
    }

    pub fn with_declared_cmm(mut self, level: Option<CmmLevel>) -> Self {
        self.declared_cmm = level;
        self
    }

    pub fn organization(&self) -> &str {
        &self.organization
    }

    pub fn declared_cmm(&self) -> Option<CmmLevel> {
        self.declared_cmm
    }

    pub fn answers(&self) -> &[f64; QuestionId::COUNT] {
        &self.answers
    }

    pub fn answer(&self, id: QuestionId) -> f64 {
        self.answers[id.index()]
    }

    /// Copy with one answer replaced; the value must already be in range.
    pub fn with_answer(&self, id: QuestionId, value: f64) -> Result<Self, ValidationError> {
        if let Some(issue) = check_answer(id, value) {
            return Err(ValidationError {
                issues: vec![issue],
            });
        }
        let mut next = self.clone();
        next.answers[id.index()] = value;
        Ok(next)
    }
}

/// A crisp score with its linguistic classification.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupScore {
    pub score: f64,
    pub classification: LevelClassification,
}

/// Reduction trees of the three activities and of the final combination.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CascadeTrace {
    pub core_asset: GroupTrace,
    pub product_development: GroupTrace,
    pub management: GroupTrace,
    pub overall: GroupTrace,
}

impl CascadeTrace {
    pub fn activity(&self, activity: Activity) -> &GroupTrace {
        match activity {
            Activity::CoreAsset => &self.core_asset,
            Activity::ProductDevelopment => &self.product_development,
            Activity::Management => &self.management,
        }
    }

    pub fn groups(&self) -> [&GroupTrace; 4] {
        [
            &self.core_asset,
            &self.product_development,
            &self.management,
            &self.overall,
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AssessmentResult {
    pub organization: String,
    pub declared_cmm: Option<CmmLevel>,
    pub core_asset: GroupScore,
    pub product_development: GroupScore,
    pub management: GroupScore,
    pub overall: GroupScore,
    /// Arithmetic mean of the 17 answers.
    pub baseline: GroupScore,
    pub trace: CascadeTrace,
}

impl AssessmentResult {
    pub fn activity(&self, activity: Activity) -> &GroupScore {
        match activity {
            Activity::CoreAsset => &self.core_asset,
            Activity::ProductDevelopment => &self.product_development,
            Activity::Management => &self.management,
        }
    }
}

/// Fuzzy overall vs statistical average vs the organization's declared level.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRecord {
    pub fuzzy: GroupScore,
    pub average: GroupScore,
    pub declared_cmm: Option<CmmLevel>,
    /// Whether the achieved (lowest) fuzzy level equals the declared level.
    pub fuzzy_agrees: Option<bool>,
    pub average_agrees: Option<bool>,
}

/// Change in the overall score when each answer is raised by `delta` (clamped to 50).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sensitivity {
    pub delta: f64,
    pub changes: BTreeMap<QuestionId, f64>,
}

impl Sensitivity {
    /// Question ids ordered by decreasing change; ties keep questionnaire order.
    pub fn ranked(&self) -> Vec<(QuestionId, f64)> {
        let mut v: Vec<_> = self.changes.iter().map(|(&k, &d)| (k, d)).collect();
        v.sort_by(|a, b| b.1.total_cmp(&a.1));
        v
    }
}

/// Runs the standard model over answer sheets.
#[derive(Debug, Clone, Default)]
pub struct Assessor {
    model: StandardModel,
}

impl Assessor {
    pub fn new(model: StandardModel) -> Self {
        Self { model }
    }

    pub fn model(&self) -> &StandardModel {
        &self.model
    }

    pub fn classify(&self, x: f64) -> Result<LevelClassification, AssessmentError> {
        Ok(classify_level(x, self.model.output_terms())?)
    }

    fn score(&self, x: f64) -> Result<GroupScore, AssessmentError> {
        Ok(GroupScore {
            score: x,
            classification: self.classify(x)?,
        })
    }

    pub fn assess(&self, sheet: &AnswerSheet) -> Result<AssessmentResult, AssessmentError> {
        let system = &self.model.system;
        let group = |activity: Activity| {
            let leaves: Vec<_> = self
                .model
                .schema
                .questions_for(activity)
                .into_iter()
                .map(|id| NodeInput {
                    source: id.to_string(),
                    value: sheet.answer(id),
                })
                .collect();
            reduce_group(system, activity.key(), &leaves)
        };
        let core_asset = group(Activity::CoreAsset)?;
        let product_development = group(Activity::ProductDevelopment)?;
        let management = group(Activity::Management)?;
        let overall_leaves: Vec<_> = [&core_asset, &product_development, &management]
            .iter()
            .map(|g| NodeInput {
                source: g.group.clone(),
                value: g.output,
            })
            .collect();
        let overall = reduce_group(system, "overall", &overall_leaves)?;

        Ok(AssessmentResult {
            organization: sheet.organization().to_owned(),
            declared_cmm: sheet.declared_cmm(),
            core_asset: self.score(core_asset.output)?,
            product_development: self.score(product_development.output)?,
            management: self.score(management.output)?,
            overall: self.score(overall.output)?,
            baseline: self.statistical_average(sheet)?,
            trace: CascadeTrace {
                core_asset,
                product_development,
                management,
                overall,
            },
        })
    }

    /// Arithmetic mean of all answers, classified on the output scale.
    pub fn statistical_average(&self, sheet: &AnswerSheet) -> Result<GroupScore, AssessmentError> {
        let mean = sheet.answers().iter().sum::<f64>() / QuestionId::COUNT as f64;
        self.score(mean)
    }

    pub fn sensitivity(
        &self,
        sheet: &AnswerSheet,
        delta: f64,
    ) -> Result<Sensitivity, AssessmentError> {
        if !(delta.is_finite() && delta >= 0.0) {
            return Err(ValidationError::single(
                "delta",
                Problem::Invalid {
                    message: format!("{delta} must be a non-negative number"),
                },
            )
            .into());
        }
        let base = self.assess(sheet)?.overall.score;
        let mut changes = BTreeMap::new();
        for id in QuestionId::all() {
            let raised = (sheet.answer(id) + delta).min(UNIVERSE.1);
            let perturbed = sheet.with_answer(id, raised)?;
            changes.insert(id, self.assess(&perturbed)?.overall.score - base);
        }
        Ok(Sensitivity { delta, changes })
    }

    pub fn compare_report(
        &self,
        sheet: &AnswerSheet,
        declared: Option<CmmLevel>,
    ) -> Result<ComparisonRecord, AssessmentError> {
        let result = self.assess(sheet)?;
        Ok(Self::comparison(&result, declared))
    }

    /// Comparison built from an existing assessment.
    pub fn comparison(result: &AssessmentResult, declared: Option<CmmLevel>) -> ComparisonRecord {
        let agrees = |s: &GroupScore| declared.map(|d| s.classification.achieved() == d);
        ComparisonRecord {
            fuzzy_agrees: agrees(&result.overall),
            average_agrees: agrees(&result.baseline),
            fuzzy: result.overall.clone(),
            average: result.baseline.clone(),
            declared_cmm: declared,
        }
    }
}
