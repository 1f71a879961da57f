use crate::fuzzy::{Boundary, FuzzySystem, Quadrature, Rule, RuleBase, TermSet};

use super::QuestionnaireSchema;

pub const UNIVERSE: (f64, f64) = (0.0, 50.0);

/// Answer terms: how completely a practice is performed.
pub const INPUT_TERMS: [(&str, [f64; 4]); 3] = [
    ("No", [0.0, 5.0, 16.5, 21.5]),
    ("Partial", [16.5, 21.5, 33.0, 38.0]),
    ("Yes", [33.0, 38.0, 50.0, 50.0]),
];

/// Maturity terms, ranked 1..=5 like CMM levels.
pub const OUTPUT_TERMS: [(&str, [f64; 4]); 5] = [
    ("Initial", [0.0, 5.0, 10.0, 15.0]),
    ("Repeatable", [10.0, 15.0, 20.0, 25.0]),
    ("Defined", [20.0, 25.0, 30.0, 35.0]),
    ("Managed", [30.0, 35.0, 40.0, 45.0]),
    ("Optimizing", [40.0, 45.0, 50.0, 50.0]),
];

pub const RULES: [(&str, &str, &str); 9] = [
    ("Yes", "Yes", "Optimizing"),
    ("No", "No", "Initial"),
    ("Partial", "Partial", "Repeatable"),
    ("Yes", "No", "Defined"),
    ("No", "Yes", "Defined"),
    ("Yes", "Partial", "Managed"),
    ("Partial", "Yes", "Managed"),
    ("Partial", "No", "Repeatable"),
    ("No", "Partial", "Repeatable"),
];

/// Questionnaire plus the two-input inference system used at every cascade node.
#[derive(Debug, Clone)]
pub struct StandardModel {
    pub schema: QuestionnaireSchema,
    pub system: FuzzySystem,
}

impl StandardModel {
    pub fn build() -> Self {
        Self::with_quadrature(Quadrature::default())
    }

    pub fn with_quadrature(quadrature: Quadrature) -> Self {
        Self::configured(quadrature, Boundary::default())
    }

    /// Builds the model with an explicit reading of the edge terms.
    pub fn configured(quadrature: Quadrature, boundary: Boundary) -> Self {
        // the tables above are checked by the unit tests below
        let input = TermSet::from_shapes(UNIVERSE, &INPUT_TERMS)
            .expect("input terms")
            .with_boundary(boundary);
        let output = TermSet::from_shapes(UNIVERSE, &OUTPUT_TERMS)
            .expect("output terms")
            .with_boundary(boundary);
        let rules = RULES.iter().map(|(a, b, c)| Rule::new(a, b, c)).collect();
        let rules = RuleBase::new(&input, &output, rules).expect("rule table");
        Self {
            schema: QuestionnaireSchema::standard(),
            system: FuzzySystem::with_quadrature(input, output, rules, quadrature),
        }
    }

    pub fn input_terms(&self) -> &TermSet {
        self.system.input()
    }

    pub fn output_terms(&self) -> &TermSet {
        self.system.output()
    }

    pub fn rules(&self) -> &RuleBase {
        self.system.rules()
    }
}

impl Default for StandardModel {
    fn default() -> Self {
        Self::build()
    }
}
