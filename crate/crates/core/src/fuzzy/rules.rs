use std::fmt;

use serde::{Deserialize, Serialize};

use super::{FuzzyError, TermSet};

/// `IF input1 IS antecedents.0 AND input2 IS antecedents.1 THEN output IS consequent`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rule {
    pub antecedents: (String, String),
    pub consequent: String,
}

impl Rule {
    pub fn new(first: &str, second: &str, consequent: &str) -> Self {
        Self {
            antecedents: (first.to_owned(), second.to_owned()),
            consequent: consequent.to_owned(),
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} & {} -> {}",
            self.antecedents.0, self.antecedents.1, self.consequent
        )
    }
}

/// Complete two-antecedent rule table: exactly one rule for each ordered
/// pair of input terms.
#[derive(Debug, Clone, PartialEq)]
pub struct RuleBase {
    rules: Vec<Rule>,
    // (first input index, second input index, output index), parallel to `rules`
    resolved: Vec<(usize, usize, usize)>,
    table: Vec<usize>,
    inputs: usize,
}

impl RuleBase {
    pub fn new(input: &TermSet, output: &TermSet, rules: Vec<Rule>) -> Result<Self, FuzzyError> {
        let n = input.len();
        let mut table = vec![None; n * n];
        let mut resolved = Vec::with_capacity(rules.len());
        for rule in &rules {
            let find_input = |name: &str| {
                input
                    .index_of(name)
                    .ok_or_else(|| FuzzyError::UnknownTerm(name.to_owned()))
            };
            let i = find_input(&rule.antecedents.0)?;
            let j = find_input(&rule.antecedents.1)?;
            let k = output
                .index_of(&rule.consequent)
                .ok_or_else(|| FuzzyError::UnknownTerm(rule.consequent.clone()))?;
            if table[i * n + j].replace(k).is_some() {
                return Err(FuzzyError::DuplicateRule(rule.to_string()));
            }
            resolved.push((i, j, k));
        }
        let table = table
            .into_iter()
            .enumerate()
            .map(|(cell, k)| {
                k.ok_or_else(|| {
                    let terms = input.terms();
                    FuzzyError::MissingRule(format!(
                        "{} & {}",
                        terms[cell / n].name,
                        terms[cell % n].name
                    ))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            rules,
            resolved,
            table,
            inputs: n,
        })
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// Resolved `(first, second, consequent)` term indices, parallel to [`Self::rules`].
    pub fn resolved(&self) -> &[(usize, usize, usize)] {
        &self.resolved
    }

    /// Output term index for the ordered antecedent pair.
    pub fn consequent(&self, first: usize, second: usize) -> usize {
        self.table[first * self.inputs + second]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.inputs)
            .all(|i| (0..self.inputs).all(|j| self.consequent(i, j) == self.consequent(j, i)))
    }

    /// True when upgrading either antecedent never lowers the consequent's rank.
    pub fn is_monotone(&self, output: &TermSet) -> bool {
        let rank = |i, j| output.terms()[self.consequent(i, j)].rank;
        let n = self.inputs;
        (0..n).all(|i| {
            (0..n).all(|j| {
                (i + 1 >= n || rank(i + 1, j) >= rank(i, j))
                    && (j + 1 >= n || rank(i, j + 1) >= rank(i, j))
            })
        })
    }
}
