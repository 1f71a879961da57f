use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::{FuzzyError, TrapezoidShape};

/// A named linguistic term with its ordinal rank.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Term {
    pub name: String,
    pub rank: u32,
    pub shape: TrapezoidShape,
}

/// How terms touching the ends of the universe are read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Boundary {
    /// A term whose support starts (ends) at the universe minimum (maximum)
    /// is open on that side: full membership from the universe edge to its
    /// plateau.
    #[default]
    Shoulder,
    /// Every term follows its trapezoid exactly, so a ramp starting at the
    /// universe minimum has zero membership there.
    Literal,
}

/// Ordered linguistic terms sharing one universe of discourse.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TermSet {
    universe: (f64, f64),
    terms: Vec<Term>,
    boundary: Boundary,
}

impl TermSet {
    pub fn new(universe: (f64, f64), terms: Vec<Term>) -> Result<Self, FuzzyError> {
        let (lo, hi) = universe;
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(FuzzyError::InvalidUniverse { min: lo, max: hi });
        }
        if terms.is_empty() {
            return Err(FuzzyError::EmptyTermSet);
        }
        let mut seen = HashSet::new();
        for (i, term) in terms.iter().enumerate() {
            if !seen.insert(term.name.as_str()) {
                return Err(FuzzyError::DuplicateTerm(term.name.clone()));
            }
            if i > 0 && term.rank <= terms[i - 1].rank {
                return Err(FuzzyError::RankOrder(term.name.clone()));
            }
            let (a, d) = term.shape.support();
            if a < lo || d > hi {
                return Err(FuzzyError::ShapeOutsideUniverse(term.name.clone()));
            }
        }
        Ok(Self {
            universe,
            terms,
            boundary: Boundary::default(),
        })
    }

    /// Builds a term set from `(name, [a, b, c, d])` pairs, ranked 1.. in order.
    pub fn from_shapes(
        universe: (f64, f64),
        shapes: &[(&str, [f64; 4])],
    ) -> Result<Self, FuzzyError> {
        let terms = shapes
            .iter()
            .zip(1..)
            .map(|((name, [a, b, c, d]), rank)| {
                Ok(Term {
                    name: (*name).to_owned(),
                    rank,
                    shape: TrapezoidShape::new(*a, *b, *c, *d)?,
                })
            })
            .collect::<Result<Vec<_>, FuzzyError>>()?;
        Self::new(universe, terms)
    }

    pub fn with_boundary(mut self, boundary: Boundary) -> Self {
        self.boundary = boundary;
        self
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    /// Membership of `x` in the term at `index`, honouring the boundary mode.
    pub fn degree(&self, index: usize, x: f64) -> f64 {
        let shape = &self.terms[index].shape;
        if self.boundary == Boundary::Shoulder && self.contains(x) {
            let [a, b, c, d] = shape.breakpoints();
            let (lo, hi) = self.universe;
            if (a == lo && x <= b) || (d == hi && x >= c) {
                return 1.0;
            }
        }
        shape.degree(x)
    }

    pub fn universe(&self) -> (f64, f64) {
        self.universe
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.terms.iter().position(|t| t.name == name)
    }

    pub fn term(&self, name: &str) -> Option<&Term> {
        self.terms.iter().find(|t| t.name == name)
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.universe.0 && x <= self.universe.1
    }

    /// Membership degree of `x` in every term, in term order.
    pub fn fuzzify(&self, x: f64) -> Result<MembershipVector, FuzzyError> {
        if !self.contains(x) {
            let (min, max) = self.universe;
            return Err(FuzzyError::OutOfRange { value: x, min, max });
        }
        Ok(MembershipVector {
            degrees: (0..self.terms.len()).map(|i| self.degree(i, x)).collect(),
        })
    }
}

/// Membership degrees indexed like the owning [`TermSet`]'s terms.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MembershipVector {
    degrees: Vec<f64>,
}

impl MembershipVector {
    /// Builds a vector from explicit `(term, degree)` pairs; unnamed terms get 0.
    pub fn from_pairs(set: &TermSet, pairs: &[(&str, f64)]) -> Result<Self, FuzzyError> {
        let mut degrees = vec![0.0; set.len()];
        for &(name, degree) in pairs {
            let idx = set
                .index_of(name)
                .ok_or_else(|| FuzzyError::UnknownTerm(name.to_owned()))?;
            if !(0.0..=1.0).contains(&degree) {
                return Err(FuzzyError::DegreeOutOfRange {
                    term: name.to_owned(),
                    degree,
                });
            }
            degrees[idx] = degree;
        }
        Ok(Self { degrees })
    }

    pub fn degrees(&self) -> &[f64] {
        &self.degrees
    }

    pub fn get(&self, index: usize) -> f64 {
        self.degrees.get(index).copied().unwrap_or(0.0)
    }

    /// Degree for a named term.
    pub fn degree_of(&self, set: &TermSet, name: &str) -> Option<f64> {
        set.index_of(name).map(|i| self.get(i))
    }

    pub fn sum(&self) -> f64 {
        self.degrees.iter().sum()
    }
}
