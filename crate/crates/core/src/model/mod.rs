//! The concrete assessment model: questionnaire, term sets, rule table,
//! per-activity cascades and level classification.

mod assessment;
pub mod cascade;
mod classify;
mod schema;
pub mod standard;

pub use assessment::{
    AnswerSheet, AssessmentError, AssessmentResult, Assessor, CascadeTrace, ComparisonRecord,
    GroupScore, Issue, Problem, Sensitivity, ValidationError,
};
pub use cascade::{
    reduce_group, reduce_with_tree, CascadeNode, GroupTrace, NodeInput, ReductionTree, RuleFiring,
    TermLevel,
};
pub use classify::{classify_level, CmmLevel, LevelClassification};
pub use schema::{Activity, Question, QuestionId, QuestionnaireSchema};
pub use standard::{StandardModel, UNIVERSE};
