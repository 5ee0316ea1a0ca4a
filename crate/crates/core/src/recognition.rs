//! Detectors for the eight structural outcomes used on {fork, antifork}-free
//! graphs: disconnectedness, simplicial vertices and twins, candelabra, and
//! line-graph roots.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{ensure_size, Result};
use crate::graph::{Graph, Multigraph, VertexSet, MAX_MULTIPLICITY};
use crate::patterns::{find_any_pattern, PatternName};

pub const MAX_ROOT_SEARCH: usize = 12;
pub const MAX_CANDELABRUM: usize = 10;
pub const MAX_OUTCOMES: usize = 10;

/// Least vertex whose neighbourhood is a clique.
pub fn find_simplicial(g: &Graph) -> Option<usize> {
    (0..g.n()).find(|&v| g.is_clique(g.neighbors(v)))
}

pub fn is_simplicial(g: &Graph, v: usize) -> bool {
    g.is_clique(g.neighbors(v))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TwinKind {
    Nonadjacent,
    AdjacentSimplicial,
}

/// `u` and `v` have the same neighbours outside `{u, v}`.
pub fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u).without(v) == g.neighbors(v).without(u)
}

/// Lexicographically least pair `(u, v)`, `u < v`, of the requested kind.
pub fn find_twins(g: &Graph, kind: TwinKind) -> Option<(usize, usize)> {
    (0..g.n())
        .flat_map(|u| ((u + 1)..g.n()).map(move |v| (u, v)))
        .find(|&(u, v)| {
            are_twins(g, u, v)
                && match kind {
                    TwinKind::Nonadjacent => !g.has_edge(u, v),
                    TwinKind::AdjacentSimplicial => {
                        g.has_edge(u, v) && is_simplicial(g, u) && is_simplicial(g, v)
                    }
                }
        })
}

// ---------------------------------------------------------------------------
// Line-graph roots
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct RootConstraints {
    /// No parallel edges in the root.
    pub simple: bool,
    /// No three root vertices pairwise joined.
    pub triangle_free: bool,
    /// Largest multiplicity allowed for a root edge; `None` means unbounded.
    pub max_multiplicity: Option<u8>,
}

impl RootConstraints {
    pub const SIMPLE: RootConstraints = RootConstraints {
        simple: true,
        triangle_free: false,
        max_multiplicity: None,
    };
    pub const SIMPLE_TRIANGLE_FREE: RootConstraints = RootConstraints {
        simple: true,
        triangle_free: true,
        max_multiplicity: None,
    };
    /// Triangle-free multigraph roots with multiplicity at most 3.
    pub const TRIANGLE_FREE_MULTIGRAPH: RootConstraints = RootConstraints {
        simple: false,
        triangle_free: true,
        max_multiplicity: Some(MAX_MULTIPLICITY),
    };
    pub const TRIANGLE_FREE_ANY_MULTIPLICITY: RootConstraints = RootConstraints {
        simple: false,
        triangle_free: true,
        max_multiplicity: None,
    };

    fn allows(&self, multiplicity: u8) -> bool {
        (!self.simple || multiplicity <= 1) && self.max_multiplicity.is_none_or(|cap| multiplicity <= cap)
    }
}

/// A root multigraph together with the root edge each vertex of `g` became.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineGraphRoot {
    pub root: Multigraph,
    /// `edge_of[v]` is the root edge (smaller endpoint first) representing `v`.
    pub edge_of: Vec<(usize, usize)>,
}

impl LineGraphRoot {
    /// Adjacency in `g` is exactly endpoint sharing, and the root satisfies
    /// `constraints`.
    pub fn verify(&self, g: &Graph, constraints: RootConstraints) -> bool {
        let n = g.n();
        if self.edge_of.len() != n || self.root.edge_instances() != n {
            return false;
        }
        let mut counts: BTreeMap<(usize, usize), u8> = BTreeMap::new();
        for &e in &self.edge_of {
            *counts.entry(e).or_default() += 1;
        }
        let declared: BTreeMap<(usize, usize), u8> = self
            .root
            .edges()
            .iter()
            .map(|&(u, v, m)| ((u.min(v), u.max(v)), m))
            .collect();
        if counts != declared {
            return false;
        }
        let shares = |(a, b): (usize, usize), (c, d): (usize, usize)| a == c || a == d || b == c || b == d;
        let relation_ok = (0..n).all(|i| {
            ((i + 1)..n).all(|j| shares(self.edge_of[i], self.edge_of[j]) == g.has_edge(i, j))
        });
        relation_ok
            && self.root.edges().iter().all(|e| constraints.allows(e.2))
            && (!constraints.triangle_free || self.root.is_triangle_free())
    }
}

/// Backtracking root search. Vertices of `g` are placed in index order; each
/// becomes a root edge between existing root vertices or fresh ones, fresh
/// labels being introduced in increasing order. The first root found in this
/// order is returned.
pub fn reconstruct_line_graph_root(
    g: &Graph,
    constraints: RootConstraints,
) -> Result<Option<LineGraphRoot>> {
    ensure_size("line-graph root search", g.n(), MAX_ROOT_SEARCH)?;
    let mut search = RootSearch {
        g,
        constraints,
        edge_of: Vec::with_capacity(g.n()),
        root_adj: Vec::with_capacity(2 * g.n()),
    };
    if !search.place(0) {
        return Ok(None);
    }
    let mut order: Vec<(usize, usize)> = Vec::new();
    let mut counts: BTreeMap<(usize, usize), u8> = BTreeMap::new();
    for &e in &search.edge_of {
        let c = counts.entry(e).or_default();
        if *c == 0 {
            order.push(e);
        }
        *c += 1;
    }
    let edges = order.into_iter().map(|e| (e.0, e.1, counts[&e])).collect();
    let root = Multigraph::new(search.root_adj.len(), edges).expect("search keeps the root valid");
    Ok(Some(LineGraphRoot {
        root,
        edge_of: search.edge_of,
    }))
}

struct RootSearch<'a> {
    g: &'a Graph,
    constraints: RootConstraints,
    edge_of: Vec<(usize, usize)>,
    /// Simple adjacency of the root built so far (root has at most 24 vertices).
    root_adj: Vec<VertexSet>,
}

impl RootSearch<'_> {
    fn place(&mut self, v: usize) -> bool {
        if v == self.g.n() {
            return true;
        }
        let k = self.root_adj.len();
        let mut options: Vec<(usize, usize)> = Vec::new();
        for a in 0..k {
            for b in (a + 1)..k {
                options.push((a, b));
            }
        }
        options.extend((0..k).map(|a| (a, k)));
        options.push((k, k + 1));

        for (a, b) in options {
            if !self.consistent(v, a, b) {
                continue;
            }
            let added = b + 1 - k.min(b + 1);
            let added = added.min(2);
            for _ in 0..added {
                self.root_adj.push(VertexSet::EMPTY);
            }
            let was_edge = self.root_adj[a].contains(b);
            self.root_adj[a] = self.root_adj[a].with(b);
            self.root_adj[b] = self.root_adj[b].with(a);
            self.edge_of.push((a, b));
            if self.place(v + 1) {
                return true;
            }
            self.edge_of.pop();
            if !was_edge {
                self.root_adj[a] = self.root_adj[a].without(b);
                self.root_adj[b] = self.root_adj[b].without(a);
            }
            for _ in 0..added {
                self.root_adj.pop();
            }
        }
        false
    }

    fn consistent(&self, v: usize, a: usize, b: usize) -> bool {
        let k = self.root_adj.len();
        let mut multiplicity: u8 = 0;
        for (u, &(c, d)) in self.edge_of.iter().enumerate() {
            let shares = a == c || a == d || b == c || b == d;
            if shares != self.g.has_edge(u, v) {
                return false;
            }
            if (c, d) == (a, b) {
                multiplicity += 1;
            }
        }
        if !self.constraints.allows(multiplicity + 1) {
            return false;
        }
        if self.constraints.triangle_free && a < k && b < k && multiplicity == 0
            && !(self.root_adj[a] & self.root_adj[b]).is_empty() {
                return false;
            }
        true
    }
}

/// Line graph of a triangle-free multigraph, decided by the {claw, gem, W4}
/// forbidden-subgraph characterisation (independent of the root search).
pub fn is_lg_triangle_free_multigraph(g: &Graph) -> bool {
    find_any_pattern(g, &[PatternName::Claw, PatternName::Gem, PatternName::W4]).is_none()
}

// ---------------------------------------------------------------------------
// Candelabra
// ---------------------------------------------------------------------------

/// Candle sets `Y_i` (cliques), base sets `Z_i` (stable sets) and the rest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candelabrum {
    pub candles: Vec<VertexSet>,
    pub bases: Vec<VertexSet>,
    pub rest: VertexSet,
}

impl Candelabrum {
    pub fn k(&self) -> usize {
        self.candles.len()
    }

    pub fn verify(&self, g: &Graph) -> bool {
        let k = self.candles.len();
        if k == 0 || self.bases.len() != k {
            return false;
        }
        let parts: Vec<VertexSet> = self.candles.iter().chain(&self.bases).copied().collect();
        let union = parts.iter().fold(VertexSet::EMPTY, |acc, &s| acc | s);
        let total: usize = parts.iter().map(|s| s.len()).sum();
        if total != union.len() || union | self.rest != g.vertices() || !union.is_disjoint(self.rest) {
            return false;
        }
        let complete = |a: VertexSet, b: VertexSet| a.iter().all(|v| b.is_subset(g.neighbors(v)));
        let anticomplete = |a: VertexSet, b: VertexSet| a.iter().all(|v| g.neighbors(v).is_disjoint(b));
        let all_bases = self.bases.iter().fold(VertexSet::EMPTY, |acc, &s| acc | s);
        let all_candles = self.candles.iter().fold(VertexSet::EMPTY, |acc, &s| acc | s);
        (0..k).all(|i| {
            let (y, z) = (self.candles[i], self.bases[i]);
            !y.is_empty()
                && !z.is_empty()
                && g.is_clique(y)
                && g.is_stable(z)
                && complete(y, z)
                && (0..k).filter(|&j| j != i).all(|j| {
                    anticomplete(y, self.candles[j])
                        && complete(z, self.bases[j])
                        && anticomplete(y, self.bases[j])
                })
        }) && complete(self.rest, all_bases)
            && anticomplete(self.rest, all_candles)
    }
}

#[derive(Clone, Copy)]
enum Slot {
    Rest,
    Candle(usize),
    Base(usize),
}

struct CandleSearch<'a> {
    g: &'a Graph,
    candles: Vec<VertexSet>,
    bases: Vec<VertexSet>,
    rest: VertexSet,
}

impl CandleSearch<'_> {
    fn all_candles(&self) -> VertexSet {
        self.candles.iter().fold(VertexSet::EMPTY, |acc, &s| acc | s)
    }

    fn all_bases(&self) -> VertexSet {
        self.bases.iter().fold(VertexSet::EMPTY, |acc, &s| acc | s)
    }

    fn part(&self, i: usize) -> (VertexSet, VertexSet) {
        if i < self.candles.len() {
            (self.candles[i], self.bases[i])
        } else {
            (VertexSet::EMPTY, VertexSet::EMPTY)
        }
    }

    fn fits(&self, v: usize, slot: Slot) -> bool {
        let nb = self.g.neighbors(v);
        let (ys, zs) = (self.all_candles(), self.all_bases());
        match slot {
            Slot::Rest => zs.is_subset(nb) && nb.is_disjoint(ys),
            Slot::Candle(i) => {
                let (y, z) = self.part(i);
                (y | z).is_subset(nb)
                    && nb.is_disjoint(ys - y)
                    && nb.is_disjoint(zs - z)
                    && nb.is_disjoint(self.rest)
            }
            Slot::Base(i) => {
                let (y, z) = self.part(i);
                nb.is_disjoint(z)
                    && (zs - z).is_subset(nb)
                    && y.is_subset(nb)
                    && nb.is_disjoint(ys - y)
                    && self.rest.is_subset(nb)
            }
        }
    }

    fn put(&mut self, v: usize, slot: Slot) {
        match slot {
            Slot::Rest => self.rest = self.rest.with(v),
            Slot::Candle(i) | Slot::Base(i) => {
                if i == self.candles.len() {
                    self.candles.push(VertexSet::EMPTY);
                    self.bases.push(VertexSet::EMPTY);
                }
                if let Slot::Candle(_) = slot {
                    self.candles[i] = self.candles[i].with(v);
                } else {
                    self.bases[i] = self.bases[i].with(v);
                }
            }
        }
    }

    fn take(&mut self, v: usize, slot: Slot) {
        match slot {
            Slot::Rest => self.rest = self.rest.without(v),
            Slot::Candle(i) | Slot::Base(i) => {
                self.candles[i] = self.candles[i].without(v);
                self.bases[i] = self.bases[i].without(v);
                if i + 1 == self.candles.len() && self.candles[i].is_empty() && self.bases[i].is_empty() {
                    self.candles.pop();
                    self.bases.pop();
                }
            }
        }
    }

    /// Every half-filled part still has an unassigned vertex able to fill it.
    fn completable(&self, unassigned: VertexSet) -> bool {
        (0..self.candles.len()).all(|i| {
            let need = if self.candles[i].is_empty() {
                Some(Slot::Candle(i))
            } else if self.bases[i].is_empty() {
                Some(Slot::Base(i))
            } else {
                None
            };
            need.is_none_or(|slot| unassigned.iter().any(|u| self.fits(u, slot)))
        })
    }

    fn run(&mut self, v: usize) -> bool {
        let n = self.g.n();
        if v == n {
            return !self.candles.is_empty()
                && self.candles.iter().zip(&self.bases).all(|(y, z)| !y.is_empty() && !z.is_empty());
        }
        let k = self.candles.len();
        let mut slots = vec![Slot::Rest];
        for i in 0..k {
            slots.push(Slot::Candle(i));
            slots.push(Slot::Base(i));
        }
        slots.push(Slot::Candle(k));
        slots.push(Slot::Base(k));
        let unassigned = VertexSet::full(n) - VertexSet::full(v + 1);
        for slot in slots {
            if !self.fits(v, slot) {
                continue;
            }
            self.put(v, slot);
            if self.completable(unassigned) && self.run(v + 1) {
                return true;
            }
            self.take(v, slot);
        }
        false
    }
}

/// A candelabrum with `k >= 1` witnessing that `g` is candled. Vertices are
/// assigned in index order to rest, then existing parts, then a new part.
pub fn find_candelabrum(g: &Graph) -> Result<Option<Candelabrum>> {
    ensure_size("candelabrum search", g.n(), MAX_CANDELABRUM)?;
    let mut search = CandleSearch {
        g,
        candles: Vec::new(),
        bases: Vec::new(),
        rest: VertexSet::EMPTY,
    };
    Ok(search.run(0).then_some(Candelabrum {
        candles: search.candles,
        bases: search.bases,
        rest: search.rest,
    }))
}

// ---------------------------------------------------------------------------
// Structural outcomes
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum OutcomeWitness {
    Components { parts: Vec<VertexSet> },
    Twins { u: usize, v: usize },
    Candelabrum(Candelabrum),
    LineGraphRoot(LineGraphRoot),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub label: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<OutcomeWitness>,
}

/// Outcomes (i)..(viii): odd labels concern `G`, even labels its complement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutcomeSet {
    pub outcomes: Vec<Outcome>,
}

pub const OUTCOME_LABELS: [&str; 8] = ["i", "ii", "iii", "iv", "v", "vi", "vii", "viii"];

impl OutcomeSet {
    pub fn any(&self) -> bool {
        self.outcomes.iter().any(|o| o.holds)
    }

    pub fn flags(&self) -> [bool; 8] {
        let mut flags = [false; 8];
        for (f, o) in flags.iter_mut().zip(&self.outcomes) {
            *f = o.holds;
        }
        flags
    }

    pub fn holding(&self) -> Vec<&str> {
        self.outcomes.iter().filter(|o| o.holds).map(|o| o.label.as_str()).collect()
    }

    /// Every flag that is set carries a witness valid for the graph it names.
    pub fn verify(&self, g: &Graph) -> bool {
        let complement = g.complement();
        self.outcomes.len() == 8
            && self.outcomes.iter().enumerate().all(|(i, o)| {
                let target = if i % 2 == 0 { g } else { &complement };
                !o.holds
                    || match &o.witness {
                        Some(OutcomeWitness::Components { parts }) => {
                            parts.len() >= 2 && *parts == target.connected_components()
                        }
                        Some(OutcomeWitness::Twins { u, v }) => {
                            target.has_edge(*u, *v)
                                && are_twins(target, *u, *v)
                                && is_simplicial(target, *u)
                                && is_simplicial(target, *v)
                        }
                        Some(OutcomeWitness::Candelabrum(c)) => c.verify(target),
                        Some(OutcomeWitness::LineGraphRoot(r)) => {
                            r.verify(target, RootConstraints::SIMPLE_TRIANGLE_FREE)
                        }
                        None => false,
                    }
            })
    }
}

fn outcomes_for(g: &Graph) -> Result<[Option<OutcomeWitness>; 4]> {
    let parts = g.connected_components();
    Ok([
        (parts.len() >= 2).then_some(OutcomeWitness::Components { parts }),
        find_twins(g, TwinKind::AdjacentSimplicial).map(|(u, v)| OutcomeWitness::Twins { u, v }),
        find_candelabrum(g)?.map(OutcomeWitness::Candelabrum),
        reconstruct_line_graph_root(g, RootConstraints::SIMPLE_TRIANGLE_FREE)?
            .map(OutcomeWitness::LineGraphRoot),
    ])
}

pub fn structure_outcomes(g: &Graph) -> Result<OutcomeSet> {
    ensure_size("structure outcomes", g.n(), MAX_OUTCOMES)?;
    let direct = outcomes_for(g)?;
    let dual = outcomes_for(&g.complement())?;
    let mut outcomes = Vec::with_capacity(8);
    for (pair, (a, b)) in direct.into_iter().zip(dual).enumerate() {
        for (offset, witness) in [a, b].into_iter().enumerate() {
            outcomes.push(Outcome {
                label: OUTCOME_LABELS[2 * pair + offset].to_string(),
                holds: witness.is_some(),
                witness,
            });
        }
    }
    Ok(OutcomeSet { outcomes })
}
