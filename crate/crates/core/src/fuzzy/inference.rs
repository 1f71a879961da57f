use serde::{Deserialize, Serialize};

use super::{FuzzyError, MembershipVector, RuleBase, TermSet};

/// Per-output-term clip levels after max aggregation of rule strengths.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AggregatedOutput {
    clip_levels: Vec<f64>,
}

impl AggregatedOutput {
    pub fn new(clip_levels: Vec<f64>) -> Self {
        Self { clip_levels }
    }

    /// Clip levels from `(term, level)` pairs; unnamed terms are 0.
    pub fn from_pairs(set: &TermSet, pairs: &[(&str, f64)]) -> Result<Self, FuzzyError> {
        MembershipVector::from_pairs(set, pairs).map(|mv| Self::new(mv.degrees().to_vec()))
    }

    pub fn clip_levels(&self) -> &[f64] {
        &self.clip_levels
    }

    pub fn is_empty(&self) -> bool {
        self.clip_levels.iter().all(|&c| c <= 0.0)
    }
}

/// Min implication per rule, max composition per consequent.
///
/// Returns the firing strength of every rule (parallel to `rules.rules()`)
/// together with the aggregated clip levels.
pub fn fire_rules(
    first: &MembershipVector,
    second: &MembershipVector,
    rules: &RuleBase,
    outputs: usize,
) -> (Vec<f64>, AggregatedOutput) {
    let mut clip = vec![0.0f64; outputs];
    let strengths = rules
        .resolved()
        .iter()
        .map(|&(i, j, k)| {
            let s = first.get(i).min(second.get(j));
            clip[k] = clip[k].max(s);
            s
        })
        .collect();
    (strengths, AggregatedOutput::new(clip))
}

/// Uniform-grid trapezoidal quadrature over the output universe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quadrature {
    pub intervals: usize,
}

impl Quadrature {
    /// Grid whose step is as close as possible to `step` over `width`.
    pub fn with_step(width: f64, step: f64) -> Self {
        Self {
            intervals: ((width / step).round() as usize).max(1),
        }
    }

    /// Same universe, half the step.
    pub fn halved(self) -> Self {
        Self {
            intervals: self.intervals * 2,
        }
    }
}

impl Default for Quadrature {
    /// 0.01 step over a 50-unit universe (5001 points).
    fn default() -> Self {
        Self { intervals: 5000 }
    }
}

/// Output term memberships sampled once on the quadrature grid.
#[derive(Debug, Clone)]
pub struct CentroidDefuzzifier {
    xs: Vec<f64>,
    weights: Vec<f64>,
    // degrees[point * terms + term]
    degrees: Vec<f64>,
    terms: usize,
    quadrature: Quadrature,
}

impl CentroidDefuzzifier {
    pub fn new(output: &TermSet, quadrature: Quadrature) -> Self {
        let (lo, hi) = output.universe();
        let n = quadrature.intervals.max(1);
        let h = (hi - lo) / n as f64;
        let xs: Vec<f64> = (0..=n)
            .map(|i| lo + (hi - lo) * i as f64 / n as f64)
            .collect();
        let weights = (0..=n)
            .map(|i| if i == 0 || i == n { h / 2.0 } else { h })
            .collect();
        let degrees = xs
            .iter()
            .flat_map(|&x| (0..output.len()).map(move |i| output.degree(i, x)))
            .collect();
        Self {
            xs,
            weights,
            degrees,
            terms: output.len(),
            quadrature,
        }
    }

    pub fn quadrature(&self) -> Quadrature {
        self.quadrature
    }

    /// Center of gravity of `max_k min(clip_k, mu_k(x))`.
    pub fn centroid(&self, agg: &AggregatedOutput) -> Result<f64, FuzzyError> {
        let clip = agg.clip_levels();
        if clip.len() != self.terms {
            return Err(FuzzyError::TermCountMismatch {
                expected: self.terms,
                found: clip.len(),
            });
        }
        if agg.is_empty() {
            return Err(FuzzyError::EmptyOutput);
        }
        let (mut moment, mut area) = (0.0, 0.0);
        for (p, (&x, &w)) in self.xs.iter().zip(&self.weights).enumerate() {
            let row = &self.degrees[p * self.terms..(p + 1) * self.terms];
            let mu = row
                .iter()
                .zip(clip)
                .fold(0.0f64, |acc, (&m, &c)| acc.max(m.min(c)));
            moment += w * x * mu;
            area += w * mu;
        }
        if area <= 0.0 {
            return Err(FuzzyError::EmptyOutput);
        }
        Ok(moment / area)
    }
}

/// Centroid defuzzification of `agg` over the terms of `output`.
pub fn defuzzify_centroid(
    agg: &AggregatedOutput,
    output: &TermSet,
    quadrature: Quadrature,
) -> Result<f64, FuzzyError> {
    CentroidDefuzzifier::new(output, quadrature).centroid(agg)
}

/// Everything computed for one two-input inference.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairInference {
    pub inputs: (f64, f64),
    pub memberships: (MembershipVector, MembershipVector),
    /// Firing strength per rule, in rule-base order.
    pub firing: Vec<f64>,
    pub aggregated: AggregatedOutput,
    pub output: f64,
}

/// A two-input Mamdani system: input terms, output terms and a complete rule table.
#[derive(Debug, Clone)]
pub struct FuzzySystem {
    input: TermSet,
    output: TermSet,
    rules: RuleBase,
    defuzzifier: CentroidDefuzzifier,
}

impl FuzzySystem {
    pub fn new(input: TermSet, output: TermSet, rules: RuleBase) -> Self {
        Self::with_quadrature(input, output, rules, Quadrature::default())
    }

    pub fn with_quadrature(
        input: TermSet,
        output: TermSet,
        rules: RuleBase,
        quadrature: Quadrature,
    ) -> Self {
        let defuzzifier = CentroidDefuzzifier::new(&output, quadrature);
        Self {
            input,
            output,
            rules,
            defuzzifier,
        }
    }

    /// Same model, different defuzzification grid.
    pub fn regridded(&self, quadrature: Quadrature) -> Self {
        Self::with_quadrature(
            self.input.clone(),
            self.output.clone(),
            self.rules.clone(),
            quadrature,
        )
    }

    pub fn input(&self) -> &TermSet {
        &self.input
    }

    pub fn output(&self) -> &TermSet {
        &self.output
    }

    pub fn rules(&self) -> &RuleBase {
        &self.rules
    }

    pub fn quadrature(&self) -> Quadrature {
        self.defuzzifier.quadrature()
    }

    pub fn fire(
        &self,
        first: &MembershipVector,
        second: &MembershipVector,
    ) -> (Vec<f64>, AggregatedOutput) {
        fire_rules(first, second, &self.rules, self.output.len())
    }

    pub fn defuzzify(&self, agg: &AggregatedOutput) -> Result<f64, FuzzyError> {
        self.defuzzifier.centroid(agg)
    }

    pub fn infer_pair(&self, x1: f64, x2: f64) -> Result<f64, FuzzyError> {
        self.infer_pair_detailed(x1, x2).map(|p| p.output)
    }

    pub fn infer_pair_detailed(&self, x1: f64, x2: f64) -> Result<PairInference, FuzzyError> {
        let m1 = self.input.fuzzify(x1)?;
        let m2 = self.input.fuzzify(x2)?;
        let (firing, aggregated) = self.fire(&m1, &m2);
        let output = self.defuzzify(&aggregated)?;
        Ok(PairInference {
            inputs: (x1, x2),
            memberships: (m1, m2),
            firing,
            aggregated,
            output,
        })
    }
}
