//! Induced-subgraph search, odd holes and antiholes, and the hereditary
//! classes built from them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{ComposeMode, Graph, VertexSet};

/// The small graphs the classes are defined by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PatternName {
    Fork,
    Antifork,
    Coclaw,
    Cogem,
    Claw,
    Gem,
    W4,
    Hvn,
    K5MinusE,
    P4,
    K3,
}

impl PatternName {
    pub const ALL: [PatternName; 11] = [
        PatternName::Fork,
        PatternName::Antifork,
        PatternName::Coclaw,
        PatternName::Cogem,
        PatternName::Claw,
        PatternName::Gem,
        PatternName::W4,
        PatternName::Hvn,
        PatternName::K5MinusE,
        PatternName::P4,
        PatternName::K3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PatternName::Fork => "fork",
            PatternName::Antifork => "antifork",
            PatternName::Coclaw => "coclaw",
            PatternName::Cogem => "cogem",
            PatternName::Claw => "claw",
            PatternName::Gem => "gem",
            PatternName::W4 => "w4",
            PatternName::Hvn => "hvn",
            PatternName::K5MinusE => "k5_minus_e",
            PatternName::P4 => "p4",
            PatternName::K3 => "k3",
        }
    }

    /// The concrete labelled graph for this name.
    pub fn graph(self) -> Graph {
        let edges = |n, e: &[(usize, usize)]| Graph::from_edges(n, e).expect("registry graph");
        match self {
            // Claw centred at 0 with the edge 0-3 subdivided by 4.
            PatternName::Fork => edges(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]),
            PatternName::Antifork => PatternName::Fork.graph().complement(),
            PatternName::Coclaw => {
                Graph::compose(&Graph::complete(3), &Graph::empty(1), ComposeMode::Union)
                    .expect("5 vertices")
            }
            PatternName::Cogem => {
                Graph::compose(&Graph::path(4), &Graph::empty(1), ComposeMode::Union)
                    .expect("5 vertices")
            }
            PatternName::Claw => Graph::star(3),
            PatternName::Gem => PatternName::Cogem.graph().complement(),
            // C4 on 0..4 plus hub 4.
            PatternName::W4 => Graph::compose(&Graph::cycle(4), &Graph::empty(1), ComposeMode::Join)
                .expect("5 vertices"),
            // K4 on 0..4 plus a vertex adjacent to exactly two of its vertices.
            PatternName::Hvn => edges(
                5,
                &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 0), (4, 1)],
            ),
            PatternName::K5MinusE => {
                let k5 = Graph::complete(5);
                let kept: Vec<_> = k5.edges().into_iter().filter(|&e| e != (3, 4)).collect();
                edges(5, &kept)
            }
            PatternName::P4 => Graph::path(4),
            PatternName::K3 => Graph::complete(3),
        }
    }
}

impl fmt::Display for PatternName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PatternName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let key = s.replace('-', "_");
        PatternName::ALL
            .into_iter()
            .find(|p| p.as_str() == key)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Certificate that a graph contains a forbidden structure. Vertices are
/// labels of the graph the evidence was found in.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    /// `vertices[i]` is the image of pattern vertex `i`.
    InducedPattern {
        pattern: PatternName,
        vertices: Vec<usize>,
    },
    /// Cyclic order of an induced odd cycle of length at least 5.
    OddHole { cycle: Vec<usize> },
    /// Cyclic order of an odd antihole: consecutive vertices are non-adjacent.
    OddAntihole { cycle: Vec<usize> },
}

impl Evidence {
    pub fn vertices(&self) -> &[usize] {
        match self {
            Evidence::InducedPattern { vertices, .. } => vertices,
            Evidence::OddHole { cycle } | Evidence::OddAntihole { cycle } => cycle,
        }
    }

    #[must_use]
    pub fn relabel(&self, map: &[usize]) -> Evidence {
        let remap = |vs: &[usize]| vs.iter().map(|&v| map[v]).collect::<Vec<_>>();
        match self {
            Evidence::InducedPattern { pattern, vertices } => Evidence::InducedPattern {
                pattern: *pattern,
                vertices: remap(vertices),
            },
            Evidence::OddHole { cycle } => Evidence::OddHole { cycle: remap(cycle) },
            Evidence::OddAntihole { cycle } => Evidence::OddAntihole { cycle: remap(cycle) },
        }
    }

    /// Re-checks the evidence against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let in_range = self.vertices().iter().all(|&v| v < g.n());
        in_range
            && match self {
                Evidence::InducedPattern { pattern, vertices } => {
                    is_induced_embedding(g, &pattern.graph(), vertices)
                }
                Evidence::OddHole { cycle } => is_induced_cycle(g, cycle),
                Evidence::OddAntihole { cycle } => is_induced_cycle(&g.complement(), cycle),
            }
    }
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evidence::InducedPattern { pattern, vertices } => {
                write!(f, "induced {pattern} on {vertices:?}")
            }
            Evidence::OddHole { cycle } => write!(f, "odd hole {cycle:?}"),
            Evidence::OddAntihole { cycle } => write!(f, "odd antihole {cycle:?}"),
        }
    }
}

/// Whether `map` is an injective map with `map[u] ~ map[v]` exactly when `u ~ v`.
pub fn is_induced_embedding(g: &Graph, pattern: &Graph, map: &[usize]) -> bool {
    if map.len() != pattern.n() || map.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let image: VertexSet = map.iter().copied().collect();
    if image.len() != map.len() {
        return false;
    }
    (0..map.len()).all(|u| {
        ((u + 1)..map.len()).all(|v| pattern.has_edge(u, v) == g.has_edge(map[u], map[v]))
    })
}

fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    let set: VertexSet = cycle.iter().copied().collect();
    k >= 5
        && k % 2 == 1
        && set.len() == k
        && (0..k).all(|i| {
            let v = cycle[i];
            g.neighbors(v) & set
                == VertexSet::singleton(cycle[(i + 1) % k]).with(cycle[(i + k - 1) % k])
        })
}

/// The lexicographically least induced embedding of `pattern` into `g`,
/// as the list of images of pattern vertices `0, 1, ..`.
pub fn find_induced(g: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    if pattern.n() > g.n() {
        return None;
    }
    let mut map = Vec::with_capacity(pattern.n());
    extend_embedding(g, pattern, &mut map, VertexSet::EMPTY).then_some(map)
}

fn extend_embedding(g: &Graph, p: &Graph, map: &mut Vec<usize>, used: VertexSet) -> bool {
    let k = map.len();
    if k == p.n() {
        return true;
    }
    let mut candidates = g.vertices() - used;
    for (j, &image) in map.iter().enumerate() {
        if p.has_edge(j, k) {
            candidates = candidates & g.neighbors(image);
        } else {
            candidates = candidates - g.neighbors(image);
        }
    }
    let need_deg = p.degree(k);
    let need_non = p.n() - 1 - need_deg;
    for c in candidates {
        let deg = g.degree(c);
        if deg < need_deg || g.n() - 1 - deg < need_non {
            continue;
        }
        map.push(c);
        if extend_embedding(g, p, map, used.with(c)) {
            return true;
        }
        map.pop();
    }
    false
}

/// Shortest induced odd cycle of length at least `min_length` (raised to
/// the next odd number `>= 5`), found by growing induced paths from each
/// start vertex, which is the cycle's smallest vertex.
pub fn find_odd_hole(g: &Graph, min_length: usize) -> Option<Vec<usize>> {
    let mut len = min_length.max(5);
    if len.is_multiple_of(2) {
        len += 1;
    }
    while len <= g.n() {
        for start in 0..g.n() {
            let mut path = vec![start];
            if grow_hole(g, len, &mut path, VertexSet::singleton(start), VertexSet::EMPTY) {
                return Some(path);
            }
        }
        len += 2;
    }
    None
}

/// `interior` holds the neighbourhoods of path vertices strictly between
/// the start and the current end.
fn grow_hole(g: &Graph, len: usize, path: &mut Vec<usize>, on_path: VertexSet, interior: VertexSet) -> bool {
    let start = path[0];
    let last = *path.last().expect("non-empty path");
    if path.len() == len {
        return true;
    }
    let mut candidates = (g.neighbors(last).above(start) - on_path) - interior;
    if path.len() > 1 {
        if path.len() + 1 == len {
            candidates = candidates & g.neighbors(start);
        } else {
            candidates = candidates - g.neighbors(start);
        }
    }
    let next_interior = if path.len() > 1 { interior | g.neighbors(last) } else { interior };
    for w in candidates {
        path.push(w);
        if grow_hole(g, len, path, on_path.with(w), next_interior) {
            return true;
        }
        path.pop();
    }
    false
}

/// Odd antihole of length at least `min_length`, ordered so that cyclically
/// consecutive vertices are the non-adjacent pairs.
pub fn find_odd_antihole(g: &Graph, min_length: usize) -> Option<Vec<usize>> {
    find_odd_hole(&g.complement(), min_length)
}

/// Hereditary classes with a decidable membership test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassName {
    CoclawCogemFree,
    ForkAntiforkFree,
    ClawGemW4Free,
    ComponentwiseCcgFree,
    Perfect,
    OddHoleFree,
    OddAntiholeFree,
}

impl ClassName {
    pub const ALL: [ClassName; 7] = [
        ClassName::CoclawCogemFree,
        ClassName::ForkAntiforkFree,
        ClassName::ClawGemW4Free,
        ClassName::ComponentwiseCcgFree,
        ClassName::Perfect,
        ClassName::OddHoleFree,
        ClassName::OddAntiholeFree,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClassName::CoclawCogemFree => "coclaw-cogem-free",
            ClassName::ForkAntiforkFree => "fork-antifork-free",
            ClassName::ClawGemW4Free => "claw-gem-w4-free",
            ClassName::ComponentwiseCcgFree => "componentwise-ccg-free",
            ClassName::Perfect => "perfect",
            ClassName::OddHoleFree => "odd-hole-free",
            ClassName::OddAntiholeFree => "odd-antihole-free",
        }
    }
}

impl fmt::Display for ClassName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let key = s.replace('_', "-");
        ClassName::ALL
            .into_iter()
            .find(|c| c.as_str() == key)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Result of a membership test; `witness` is set exactly when `member` is false.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Membership {
    pub member: bool,
    pub witness: Option<Evidence>,
}

impl Membership {
    fn from_witness(witness: Option<Evidence>) -> Self {
        Membership {
            member: witness.is_none(),
            witness,
        }
    }
}

/// First forbidden pattern of `patterns` (in order) induced in `g`.
pub fn find_any_pattern(g: &Graph, patterns: &[PatternName]) -> Option<Evidence> {
    patterns.iter().find_map(|&pattern| {
        find_induced(g, &pattern.graph()).map(|vertices| Evidence::InducedPattern { pattern, vertices })
    })
}

pub fn in_class(g: &Graph, class: ClassName) -> Membership {
    let witness = match class {
        ClassName::CoclawCogemFree => find_any_pattern(g, &[PatternName::Coclaw, PatternName::Cogem]),
        ClassName::ForkAntiforkFree => find_any_pattern(g, &[PatternName::Fork, PatternName::Antifork]),
        ClassName::ClawGemW4Free => {
            find_any_pattern(g, &[PatternName::Claw, PatternName::Gem, PatternName::W4])
        }
        ClassName::ComponentwiseCcgFree => g.connected_components().into_iter().find_map(|part| {
            let (h, map) = g.induced_subgraph(part);
            find_any_pattern(&h, &[PatternName::Coclaw, PatternName::Cogem]).map(|e| e.relabel(&map))
        }),
        ClassName::Perfect => find_odd_hole(g, 5)
            .map(|cycle| Evidence::OddHole { cycle })
            .or_else(|| find_odd_antihole(g, 5).map(|cycle| Evidence::OddAntihole { cycle })),
        ClassName::OddHoleFree => find_odd_hole(g, 5).map(|cycle| Evidence::OddHole { cycle }),
        ClassName::OddAntiholeFree => {
            find_odd_antihole(g, 5).map(|cycle| Evidence::OddAntihole { cycle })
        }
    };
    Membership::from_witness(witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_key;

    fn c7() -> Graph {
        Graph::cycle(7)
    }

    #[test]
    fn find_induced_examples() {
        assert_eq!(
            find_induced(&c7(), &PatternName::Cogem.graph()),
            Some(vec![0, 1, 2, 3, 5])
        );
        assert_eq!(find_induced(&c7().complement(), &PatternName::Coclaw.graph()), None);
        assert_eq!(find_induced(&Graph::complete(3), &Graph::complete(3)), Some(vec![0, 1, 2]));
        assert_eq!(find_induced(&Graph::complete(3), &Graph::complete(4)), None);
    }

    #[test]
    fn odd_hole_examples() {
        assert_eq!(find_odd_hole(&c7(), 5), Some((0..7).collect()));
        assert_eq!(find_odd_hole(&Graph::cycle(5), 7), None);
        let bipartite = Graph::from_edges(6, &[(0, 3), (0, 4), (1, 4), (1, 5), (2, 5), (2, 3)]).unwrap();
        assert_eq!(find_odd_hole(&bipartite, 5), None);
        // C5 plus a chord-free tail is still found.
        assert_eq!(find_odd_hole(&Graph::cycle(9), 5).map(|c| c.len()), Some(9));
    }

    #[test]
    fn odd_antihole_examples() {
        let c7bar = c7().complement();
        let x = find_odd_antihole(&c7bar, 7).unwrap();
        assert_eq!(x.len(), 7);
        assert!(Evidence::OddAntihole { cycle: x }.verify(&c7bar));
        assert_eq!(find_odd_antihole(&Graph::cycle(5), 5).map(|c| c.len()), Some(5));
        assert_eq!(find_odd_antihole(&Graph::complete(6), 5), None);
    }

    #[test]
    fn class_examples() {
        assert!(in_class(&c7().complement(), ClassName::CoclawCogemFree).member);
        assert!(in_class(&c7(), ClassName::ForkAntiforkFree).member);
        let m = in_class(&c7(), ClassName::CoclawCogemFree);
        assert!(!m.member);
        assert!(matches!(
            m.witness,
            Some(Evidence::InducedPattern { pattern: PatternName::Cogem, .. })
        ));
        assert!(m.witness.unwrap().verify(&c7()));

        let c5_c7 = Graph::compose(&Graph::cycle(5), &c7(), ComposeMode::Union).unwrap();
        let m = in_class(&c5_c7, ClassName::ComponentwiseCcgFree);
        assert!(!m.member);
        let w = m.witness.unwrap();
        assert!(w.verify(&c5_c7));
        assert!(w.vertices().iter().all(|&v| v >= 5));
        assert!(in_class(&Graph::cycle(5), ClassName::ComponentwiseCcgFree).member);
        assert!(!in_class(&c7(), ClassName::Perfect).member);
    }

    #[test]
    fn registry_sanity() {
        let key = |p: PatternName| canonical_key(&p.graph()).unwrap();
        assert_eq!(canonical_key(&PatternName::Fork.graph().complement()).unwrap(), key(PatternName::Antifork));
        assert_eq!(canonical_key(&PatternName::Gem.graph().complement()).unwrap(), key(PatternName::Cogem));
        let keys: std::collections::HashSet<_> = PatternName::ALL.iter().map(|&p| key(p)).collect();
        assert_eq!(keys.len(), PatternName::ALL.len());
        assert_eq!(PatternName::Hvn.graph().edge_count(), 8);
        assert_eq!(PatternName::K5MinusE.graph().edge_count(), 9);
        assert_eq!(PatternName::W4.graph().degree(4), 4);
        for p in PatternName::ALL {
            assert_eq!(p.as_str().parse::<PatternName>().unwrap(), p);
        }
        for c in ClassName::ALL {
            assert_eq!(c.as_str().parse::<ClassName>().unwrap(), c);
        }
    }
}
