use std::fmt;

use serde::{Deserialize, Serialize};

use crate::fuzzy::FuzzySystem;

use super::AssessmentError;

/// Binary tree over leaf positions describing how a group is reduced to one
/// score by repeated two-input inferences.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ReductionTree {
    Leaf(usize),
    Pair(Box<ReductionTree>, Box<ReductionTree>),
}

impl ReductionTree {
    pub fn pair(left: ReductionTree, right: ReductionTree) -> Self {
        Self::Pair(Box::new(left), Box::new(right))
    }

    /// Level-by-level left-to-right pairing; an unpaired trailing element is
    /// carried up unchanged to the next level.
    pub fn level_wise(leaves: usize) -> Option<Self> {
        let mut level: Vec<_> = (0..leaves).map(Self::Leaf).collect();
        while level.len() > 1 {
            let mut next = Vec::with_capacity(level.len().div_ceil(2));
            let mut items = level.into_iter();
            while let Some(left) = items.next() {
                match items.next() {
                    Some(right) => next.push(Self::pair(left, right)),
                    None => next.push(left),
                }
            }
            level = next;
        }
        level.pop()
    }

    /// Leaf positions in left-to-right order.
    pub fn leaves(&self) -> Vec<usize> {
        match self {
            Self::Leaf(i) => vec![*i],
            Self::Pair(l, r) => {
                let mut v = l.leaves();
                v.extend(r.leaves());
                v
            }
        }
    }

    /// True when the tree uses every position in `0..n` exactly once.
    pub fn covers(&self, n: usize) -> bool {
        let mut leaves = self.leaves();
        leaves.sort_unstable();
        leaves.iter().copied().eq(0..n)
    }
}

impl fmt::Display for ReductionTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Leaf(i) => write!(f, "{}", i + 1),
            Self::Pair(l, r) => write!(f, "({l}, {r})"),
        }
    }
}

/// A crisp value entering a cascade node: a leaf label (`q3`) or a node id (`n2`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NodeInput {
    pub source: String,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RuleFiring {
    pub rule: String,
    pub strength: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermLevel {
    pub term: String,
    pub level: f64,
}

/// One two-input inference inside a group reduction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CascadeNode {
    pub id: String,
    /// 1 for nodes fed only by leaves, otherwise one more than the deepest child.
    pub stage: usize,
    pub left: NodeInput,
    pub right: NodeInput,
    pub firing: Vec<RuleFiring>,
    pub clip_levels: Vec<TermLevel>,
    pub output: f64,
}

/// Full reduction of one group of crisp values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupTrace {
    pub group: String,
    pub leaves: Vec<NodeInput>,
    /// Nodes in evaluation (post-) order; the last one is the root.
    pub nodes: Vec<CascadeNode>,
    /// Parenthesised leaf order, e.g. `((1, 2), 3)`.
    pub tree: String,
    pub output: f64,
}

impl GroupTrace {
    /// Id of the value that leaves the group: the root node, or the single leaf.
    pub fn root(&self) -> &str {
        self.nodes
            .last()
            .map(|n| n.id.as_str())
            .unwrap_or_else(|| self.leaves[0].source.as_str())
    }

    pub fn node(&self, id: &str) -> Option<&CascadeNode> {
        self.nodes.iter().find(|n| n.id == id)
    }
}

/// Reduces `leaves` with the level-wise tree.
pub fn reduce_group(
    system: &FuzzySystem,
    group: &str,
    leaves: &[NodeInput],
) -> Result<GroupTrace, AssessmentError> {
    let tree = ReductionTree::level_wise(leaves.len()).ok_or(AssessmentError::EmptyGroup)?;
    reduce_with_tree(system, group, leaves, &tree)
}

/// Reduces `leaves` following an explicit tree.
pub fn reduce_with_tree(
    system: &FuzzySystem,
    group: &str,
    leaves: &[NodeInput],
    tree: &ReductionTree,
) -> Result<GroupTrace, AssessmentError> {
    if leaves.is_empty() {
        return Err(AssessmentError::EmptyGroup);
    }
    if !tree.covers(leaves.len()) {
        return Err(AssessmentError::TreeMismatch {
            leaves: leaves.len(),
            tree: tree.to_string(),
        });
    }
    for leaf in leaves {
        if !system.input().contains(leaf.value) {
            let (min, max) = system.input().universe();
            return Err(crate::fuzzy::FuzzyError::OutOfRange {
                value: leaf.value,
                min,
                max,
            }
            .into());
        }
    }
    let mut nodes = Vec::new();
    let (root, _) = evaluate(system, tree, leaves, &mut nodes)?;
    Ok(GroupTrace {
        group: group.to_owned(),
        leaves: leaves.to_vec(),
        nodes,
        tree: tree.to_string(),
        output: root.value,
    })
}

fn evaluate(
    system: &FuzzySystem,
    tree: &ReductionTree,
    leaves: &[NodeInput],
    nodes: &mut Vec<CascadeNode>,
) -> Result<(NodeInput, usize), AssessmentError> {
    match tree {
        ReductionTree::Leaf(i) => Ok((leaves[*i].clone(), 0)),
        ReductionTree::Pair(l, r) => {
            let (left, ls) = evaluate(system, l, leaves, nodes)?;
            let (right, rs) = evaluate(system, r, leaves, nodes)?;
            let inference = system.infer_pair_detailed(left.value, right.value)?;
            let firing = system
                .rules()
                .rules()
                .iter()
                .zip(&inference.firing)
                .map(|(rule, &strength)| RuleFiring {
                    rule: rule.to_string(),
                    strength,
                })
                .collect();
            let clip_levels = system
                .output()
                .terms()
                .iter()
                .zip(inference.aggregated.clip_levels())
                .map(|(t, &level)| TermLevel {
                    term: t.name.clone(),
                    level,
                })
                .collect();
            let id = format!("n{}", nodes.len() + 1);
            let stage = ls.max(rs) + 1;
            nodes.push(CascadeNode {
                id: id.clone(),
                stage,
                left,
                right,
                firing,
                clip_levels,
                output: inference.output,
            });
            Ok((
                NodeInput {
                    source: id,
                    value: inference.output,
                },
                stage,
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::StandardModel;

    fn inputs(values: &[f64]) -> Vec<NodeInput> {
        values
            .iter()
            .enumerate()
            .map(|(i, &value)| NodeInput {
                source: format!("x{}", i + 1),
                value,
            })
            .collect()
    }

    #[test]
    fn level_wise_shapes() {
        let s = |n| ReductionTree::level_wise(n).unwrap().to_string();
        assert_eq!(s(1), "1");
        assert_eq!(s(3), "((1, 2), 3)");
        assert_eq!(s(5), "(((1, 2), (3, 4)), 5)");
        assert_eq!(s(7), "(((1, 2), (3, 4)), ((5, 6), 7))");
        assert!(ReductionTree::level_wise(0).is_none());
    }

    #[test]
    fn single_value_is_identity() {
        let m = StandardModel::build();
        let t = reduce_group(&m.system, "g", &inputs(&[45.0])).unwrap();
        assert_eq!(t.output, 45.0);
        assert!(t.nodes.is_empty());
        assert_eq!(t.root(), "x1");
    }

    #[test]
    fn saturated_yes_group() {
        let m = StandardModel::build();
        let t = reduce_group(&m.system, "g", &inputs(&[45.0; 4])).unwrap();
        assert_eq!(t.nodes.len(), 3);
        for n in &t.nodes {
            assert!((n.output - 46.11).abs() < 0.01);
        }
        assert_eq!(t.nodes[2].stage, 2);
    }

    #[test]
    fn empty_group_rejected() {
        let m = StandardModel::build();
        assert!(matches!(
            reduce_group(&m.system, "g", &[]),
            Err(AssessmentError::EmptyGroup)
        ));
    }

    #[test]
    fn out_of_range_leaf_rejected_even_alone() {
        let m = StandardModel::build();
        assert!(reduce_group(&m.system, "g", &inputs(&[51.0])).is_err());
    }

    #[test]
    fn mismatched_tree_rejected() {
        let m = StandardModel::build();
        let tree = ReductionTree::level_wise(3).unwrap();
        assert!(matches!(
            reduce_with_tree(&m.system, "g", &inputs(&[1.0, 2.0]), &tree),
            Err(AssessmentError::TreeMismatch { .. })
        ));
    }

    #[test]
    fn right_leaning_tree_differs_from_default() {
        let m = StandardModel::build();
        let values = inputs(&[35.0, 40.0, 25.0, 35.0, 25.0]);
        let mut right = ReductionTree::Leaf(4);
        for i in (0..4).rev() {
            right = ReductionTree::pair(ReductionTree::Leaf(i), right);
        }
        let a = reduce_group(&m.system, "g", &values).unwrap().output;
        let b = reduce_with_tree(&m.system, "g", &values, &right)
            .unwrap()
            .output;
        assert!((a - b).abs() > 1.0);
    }
}
