use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{AnswerSheet, CmmLevel, Issue, Problem, QuestionId, ValidationError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DocumentError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid document at line {line}, column {column}: {message}")]
    Structure {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Validation(#[from] ValidationError),
}

impl DocumentError {
    fn from_json(err: serde_json::Error) -> Self {
        use serde_json::error::Category;
        let (line, column) = (err.line(), err.column());
        // serde_json appends " at line L column C"; the position is kept separately
        let message = err.to_string();
        let message = match message.rfind(" at line ") {
            Some(cut) => message[..cut].to_owned(),
            None => message,
        };
        match err.classify() {
            Category::Syntax | Category::Eof | Category::Io => Self::Syntax {
                line,
                column,
                message,
            },
            Category::Data => Self::Structure {
                line,
                column,
                message,
            },
        }
    }
}

/// On-disk answer sheet:
///
/// ```json
/// { "organization": "A", "declared_cmm": 2, "answers": { "q1": 35, "q2": 40, ... } }
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnswerSheetDocument {
    pub organization: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub declared_cmm: Option<i64>,
    pub answers: BTreeMap<String, f64>,
}

fn declared_level(raw: Option<i64>) -> Result<Option<CmmLevel>, Issue> {
    raw.map(|level| {
        u8::try_from(level)
            .ok()
            .and_then(CmmLevel::new)
            .ok_or(Issue {
                field: "declared_cmm".into(),
                problem: Problem::OutOfRange {
                    value: level as f64,
                    min: 1.0,
                    max: 5.0,
                },
            })
    })
    .transpose()
}

fn build_sheet(
    organization: String,
    declared: Option<i64>,
    answers: &BTreeMap<String, f64>,
) -> Result<AnswerSheet, ValidationError> {
    let declared = declared_level(declared);
    let sheet =
        AnswerSheet::from_keyed(organization, answers.iter().map(|(k, &v)| (k.as_str(), v)));
    match (sheet, declared) {
        (Ok(sheet), Ok(level)) => Ok(sheet.with_declared_cmm(level)),
        (Ok(_), Err(issue)) => Err(ValidationError {
            issues: vec![issue],
        }),
        (Err(mut err), declared) => {
            err.issues.extend(declared.err());
            Err(err)
        }
    }
}

/// Answers keyed `q1`..`q17` in questionnaire order.
pub struct OrderedAnswers<'a>(pub &'a AnswerSheet);

impl Serialize for OrderedAnswers<'_> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(QuestionId::COUNT))?;
        for id in QuestionId::all() {
            map.serialize_entry(&id, &self.0.answer(id))?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct SheetOut<'a> {
    organization: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    declared_cmm: Option<CmmLevel>,
    answers: OrderedAnswers<'a>,
}

pub fn parse_answer_sheet(doc: &[u8]) -> Result<AnswerSheet, DocumentError> {
    let raw: AnswerSheetDocument = serde_json::from_slice(doc).map_err(DocumentError::from_json)?;
    Ok(build_sheet(
        raw.organization,
        raw.declared_cmm,
        &raw.answers,
    )?)
}

/// Pretty-printed answer sheet document; parses back to an identical sheet.
pub fn render_answer_sheet(sheet: &AnswerSheet) -> String {
    let doc = SheetOut {
        organization: sheet.organization(),
        declared_cmm: sheet.declared_cmm(),
        answers: OrderedAnswers(sheet),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("answer sheet serializes");
    out.push('\n');
    out
}

/// Body of `POST /api/assess`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AssessRequest {
    #[serde(default)]
    pub organization: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub declared_cmm: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sensitivity_delta: Option<f64>,
    pub answers: BTreeMap<String, f64>,
}

/// Default what-if increment applied to each answer.
pub const DEFAULT_SENSITIVITY_DELTA: f64 = 10.0;

/// Parses an API request into a validated sheet and the sensitivity delta to use.
pub fn parse_assess_request(body: &[u8]) -> Result<(AnswerSheet, f64), DocumentError> {
    let raw: AssessRequest = serde_json::from_slice(body).map_err(DocumentError::from_json)?;
    let delta = raw.sensitivity_delta.unwrap_or(DEFAULT_SENSITIVITY_DELTA);
    let sheet = build_sheet(raw.organization, raw.declared_cmm, &raw.answers);
    let delta_issue = (!(delta.is_finite() && delta >= 0.0)).then(|| Issue {
        field: "sensitivity_delta".into(),
        problem: Problem::Invalid {
            message: format!("{delta} must be a non-negative number"),
        },
    });
    match (sheet, delta_issue) {
        (Ok(sheet), None) => Ok((sheet, delta)),
        (Ok(_), Some(issue)) => Err(ValidationError {
            issues: vec![issue],
        }
        .into()),
        (Err(mut err), issue) => {
            err.issues.extend(issue);
            Err(err.into())
        }
    }
}
