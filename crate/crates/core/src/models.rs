//! Complete-minor models and their verifier.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

/// An ordered list of branch sets claimed to form a `K_t`-model, `t = len()`.
///
/// Serialises as an array of sorted vertex arrays, preserving set order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MinorModel {
    branch_sets: Vec<VertexSet>,
}

impl MinorModel {
    pub fn new(branch_sets: Vec<VertexSet>) -> Self {
        MinorModel { branch_sets }
    }

    /// One singleton branch set per member of `clique`, in increasing order.
    pub fn singletons(clique: VertexSet) -> Self {
        MinorModel::new(clique.iter().map(VertexSet::singleton).collect())
    }

    pub fn branch_sets(&self) -> &[VertexSet] {
        &self.branch_sets
    }

    pub fn len(&self) -> usize {
        self.branch_sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.branch_sets.is_empty()
    }

    pub fn push(&mut self, set: VertexSet) {
        self.branch_sets.push(set);
    }

    pub fn extend(&mut self, other: MinorModel) {
        self.branch_sets.extend(other.branch_sets);
    }

    /// All vertices used by some branch set.
    pub fn support(&self) -> VertexSet {
        self.branch_sets.iter().fold(VertexSet::EMPTY, |acc, &s| acc | s)
    }

    /// Maps every vertex `v` to `map[v]`, e.g. from a subgraph to its parent.
    #[must_use]
    pub fn relabel(&self, map: &[usize]) -> MinorModel {
        MinorModel::new(
            self.branch_sets
                .iter()
                .map(|s| s.iter().map(|v| map[v]).collect())
                .collect(),
        )
    }

    /// Moves the first branch set of size greater than 2 to the front.
    #[must_use]
    pub fn big_set_first(mut self) -> MinorModel {
        if let Some(i) = self.branch_sets.iter().position(|s| s.len() > 2) {
            let big = self.branch_sets.remove(i);
            self.branch_sets.insert(0, big);
        }
        self
    }

    pub fn classify(&self) -> ModelClass {
        classify_model(self)
    }
}

/// Smallness classes, ordered `Small < SemiSmall < General`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelClass {
    /// Every branch set has at most 2 vertices.
    Small,
    /// Exactly one branch set has more than 2 vertices.
    SemiSmall,
    General,
}

impl ModelClass {
    /// Whether a model of this class is acceptable where `required` is asked for.
    pub fn at_most(self, required: ModelClass) -> bool {
        self <= required
    }
}

pub fn classify_model(m: &MinorModel) -> ModelClass {
    match m.branch_sets.iter().filter(|s| s.len() > 2).count() {
        0 => ModelClass::Small,
        1 => ModelClass::SemiSmall,
        _ => ModelClass::General,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    Empty,
    OutOfRange,
    Overlap,
    Disconnected,
    Unlinked,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub rule: Rule,
    /// Indices of the offending branch sets.
    pub sets: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelReport {
    pub valid: bool,
    pub size: usize,
    pub classification: ModelClass,
    pub violations: Vec<Violation>,
}

/// Checks non-emptiness, disjointness, connectivity and pairwise linkage, in
/// that order, and reports every violation found.
pub fn verify_model(host: &Graph, m: &MinorModel) -> ModelReport {
    let sets = m.branch_sets();
    let all = host.vertices();
    let mut violations = Vec::new();
    let mut flag = |rule, sets: Vec<usize>| violations.push(Violation { rule, sets });

    for (i, s) in sets.iter().enumerate() {
        if s.is_empty() {
            flag(Rule::Empty, vec![i]);
        }
        if !s.is_subset(all) {
            flag(Rule::OutOfRange, vec![i]);
        }
    }
    for i in 0..sets.len() {
        for j in (i + 1)..sets.len() {
            if !sets[i].is_disjoint(sets[j]) {
                flag(Rule::Overlap, vec![i, j]);
            }
        }
    }
    // Out-of-range members are clipped so the remaining checks stay in bounds.
    let clipped: Vec<VertexSet> = sets.iter().map(|&s| s & all).collect();
    for (i, &s) in clipped.iter().enumerate() {
        if !host.is_connected_set(s) {
            flag(Rule::Disconnected, vec![i]);
        }
    }
    let reach: Vec<VertexSet> = clipped.iter().map(|&s| host.neighborhood_of(s)).collect();
    for (i, r) in reach.iter().enumerate() {
        for (j, &s) in clipped.iter().enumerate().skip(i + 1) {
            if r.is_disjoint(s) {
                flag(Rule::Unlinked, vec![i, j]);
            }
        }
    }
    ModelReport {
        valid: violations.is_empty(),
        size: sets.len(),
        classification: classify_model(m),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model(sets: &[&[usize]]) -> MinorModel {
        MinorModel::new(sets.iter().map(|s| s.iter().copied().collect()).collect())
    }

    #[test]
    fn verify_examples() {
        let r = verify_model(&Graph::cycle(5), &model(&[&[0, 1], &[2, 3], &[4]]));
        assert!(r.valid);
        assert_eq!((r.size, r.classification), (3, ModelClass::Small));

        let r = verify_model(&Graph::complete(3), &model(&[&[0], &[1], &[2]]));
        assert!(r.valid && r.size == 3);

        let r = verify_model(&Graph::path(3), &model(&[&[0], &[2]]));
        assert!(!r.valid);
        assert_eq!(r.violations, vec![Violation { rule: Rule::Unlinked, sets: vec![0, 1] }]);

        let r = verify_model(&Graph::cycle(7), &model(&[&[0, 1], &[3, 4], &[5, 6]]));
        assert!(!r.valid);
        assert_eq!(r.violations, vec![Violation { rule: Rule::Unlinked, sets: vec![0, 1] }]);
    }

    #[test]
    fn every_violation_is_reported() {
        let g = Graph::path(4);
        let r = verify_model(&g, &model(&[&[0, 2], &[2], &[], &[7]]));
        let rules: Vec<Rule> = r.violations.iter().map(|v| v.rule).collect();
        assert_eq!(
            rules,
            vec![
                Rule::Empty,
                Rule::OutOfRange,
                Rule::Overlap,
                Rule::Disconnected,
                Rule::Unlinked,
                Rule::Unlinked,
                Rule::Unlinked,
                Rule::Unlinked,
                Rule::Unlinked,
                Rule::Unlinked
            ]
        );
        assert_eq!(r.violations[2].sets, vec![0, 1]);
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_model(&model(&[&[0, 1], &[2], &[3, 4]])), ModelClass::Small);
        assert_eq!(classify_model(&model(&[&[0, 1, 2], &[3], &[4]])), ModelClass::SemiSmall);
        assert_eq!(classify_model(&model(&[&[0, 1, 2], &[3, 4, 5]])), ModelClass::General);
        assert!(ModelClass::Small < ModelClass::SemiSmall && ModelClass::SemiSmall < ModelClass::General);
    }

    #[test]
    fn serialises_as_nested_arrays() {
        let m = model(&[&[3, 1], &[0]]);
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(json, "[[1,3],[0]]");
        assert_eq!(serde_json::from_str::<MinorModel>(&json).unwrap(), m);
    }
}
