//! Two-antecedent Mamdani inference over trapezoidal linguistic terms.

mod inference;
mod membership;
mod rules;
mod terms;

pub use inference::{
    defuzzify_centroid, fire_rules, AggregatedOutput, CentroidDefuzzifier, FuzzySystem,
    PairInference, Quadrature,
};
pub use membership::TrapezoidShape;
pub use rules::{Rule, RuleBase};
pub use terms::{Boundary, MembershipVector, Term, TermSet};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FuzzyError {
    #[error(
        "invalid trapezoid ({a}, {b}, {c}, {d}): breakpoints must be finite and non-decreasing"
    )]
    InvalidShape { a: f64, b: f64, c: f64, d: f64 },
    #[error("invalid universe [{min}, {max}]")]
    InvalidUniverse { min: f64, max: f64 },
    #[error("term set has no terms")]
    EmptyTermSet,
    #[error("duplicate term `{0}`")]
    DuplicateTerm(String),
    #[error("term `{0}` does not have a strictly increasing rank")]
    RankOrder(String),
    #[error("term `{0}` extends outside the universe")]
    ShapeOutsideUniverse(String),
    #[error("unknown term `{0}`")]
    UnknownTerm(String),
    #[error("degree {degree} for term `{term}` is outside [0, 1]")]
    DegreeOutOfRange { term: String, degree: f64 },
    #[error("duplicate rule `{0}`")]
    DuplicateRule(String),
    #[error("no rule for antecedents `{0}`")]
    MissingRule(String),
    #[error("value {value} is outside [{min}, {max}]")]
    OutOfRange { value: f64, min: f64, max: f64 },
    #[error("expected {expected} clip levels, found {found}")]
    TermCountMismatch { expected: usize, found: usize },
    #[error("aggregated output is empty; centroid is undefined")]
    EmptyOutput,
}
