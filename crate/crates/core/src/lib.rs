//! Software product line process assessment built on a two-input Mamdani
//! fuzzy inference system.
//!
//! The crate is split into three layers:
//!
//! - [`fuzzy`]: a generic two-antecedent Mamdani engine over trapezoidal
//!   terms (fuzzification, min implication, max aggregation, centroid
//!   defuzzification).
//! - [`model`]: the concrete 17-question assessment model, the cascaded
//!   pairwise reduction per activity, level classification and the
//!   statistical-average baseline.
//! - [`report`]: the answer-sheet document format and report rendering.

pub mod fuzzy;
pub mod model;
pub mod report;

pub use fuzzy::{
    AggregatedOutput, Boundary, FuzzyError, FuzzySystem, MembershipVector, PairInference,
    Quadrature, Rule, RuleBase, Term, TermSet, TrapezoidShape,
};
pub use model::{
    Activity, AnswerSheet, AssessmentError, AssessmentResult, Assessor, CascadeTrace, CmmLevel,
    ComparisonRecord, GroupScore, GroupTrace, LevelClassification, QuestionId, QuestionnaireSchema,
    ReductionTree, StandardModel, ValidationError,
};

/// Tool version embedded in machine-readable reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
