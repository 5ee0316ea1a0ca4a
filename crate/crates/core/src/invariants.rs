//! Exact solvers for the clique number, the chromatic number and the
//! Hadwiger-type numbers, each with a re-checkable witness.
//!
//! Witness orderings:
//! - cliques are the lexicographically least maximum clique (ascending list);
//! - colourings are the lexicographically least colour vector among optimal
//!   colourings whose colours appear in first-occurrence order;
//! - bounded models are the lexicographically least maximum clique of the
//!   blob graph, blobs being ordered by their ascending vertex lists;
//! - semi-small models list the big branch set first.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::bits::{bits_empty, bits_full, bits_insert, BitMatrix};
use crate::error::{ensure_size, Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::models::{verify_model, MinorModel, ModelClass};

pub const MAX_CHROMATIC: usize = 16;
pub const MAX_HAD2_PLUS: usize = 14;
pub const MAX_HADWIGER: usize = 12;
pub const MAX_BLOBS: usize = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InvariantKind {
    Omega,
    Chi,
    Had,
    Had2,
    Had2Plus,
    HadM(usize),
}

impl fmt::Display for InvariantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantKind::Omega => f.write_str("omega"),
            InvariantKind::Chi => f.write_str("chi"),
            InvariantKind::Had => f.write_str("had"),
            InvariantKind::Had2 => f.write_str("had2"),
            InvariantKind::Had2Plus => f.write_str("had2plus"),
            InvariantKind::HadM(m) => write!(f, "hadm:{m}"),
        }
    }
}

impl std::str::FromStr for InvariantKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "omega" => InvariantKind::Omega,
            "chi" => InvariantKind::Chi,
            "had" => InvariantKind::Had,
            "had2" => InvariantKind::Had2,
            "had2plus" => InvariantKind::Had2Plus,
            other => other
                .strip_prefix("hadm:")
                .and_then(|m| m.parse().ok())
                .map(InvariantKind::HadM)
                .ok_or_else(|| Error::UnknownName(other.to_string()))?,
        })
    }
}

impl Serialize for InvariantKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for InvariantKind {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", content = "value", rename_all = "snake_case")]
pub enum Witness {
    Clique(VertexSet),
    /// `colours[v]` is the colour of vertex `v`.
    Coloring(Vec<usize>),
    Model(MinorModel),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantResult {
    pub kind: InvariantKind,
    pub value: usize,
    pub witness: Witness,
}

impl InvariantResult {
    /// Re-checks that the witness certifies `value` on `g`. For colourings this
    /// is properness with exactly `value` colours; optimality is not rechecked.
    pub fn verify(&self, g: &Graph) -> bool {
        match &self.witness {
            Witness::Clique(c) => c.is_subset(g.vertices()) && g.is_clique(*c) && c.len() == self.value,
            Witness::Coloring(colours) => {
                colours.len() == g.n()
                    && is_proper_coloring(g, colours)
                    && colours.iter().collect::<HashSet<_>>().len() == self.value
            }
            Witness::Model(m) => {
                let report = verify_model(g, m);
                let shape_ok = match self.kind {
                    InvariantKind::Had2 => report.classification == ModelClass::Small,
                    InvariantKind::Had2Plus => report.classification.at_most(ModelClass::SemiSmall),
                    InvariantKind::HadM(k) => m.branch_sets().iter().all(|s| s.len() <= k),
                    _ => true,
                };
                report.valid && report.size == self.value && shape_ok
            }
        }
    }
}

pub fn is_proper_coloring(g: &Graph, colours: &[usize]) -> bool {
    colours.len() == g.n() && g.edges().iter().all(|&(u, v)| colours[u] != colours[v])
}

// ---------------------------------------------------------------------------
// Clique number
// ---------------------------------------------------------------------------

pub fn clique_number(g: &Graph) -> InvariantResult {
    let clique = max_clique(g);
    InvariantResult {
        kind: InvariantKind::Omega,
        value: clique.len(),
        witness: Witness::Clique(clique),
    }
}

/// Lexicographically least maximum clique of `g`.
pub fn max_clique(g: &Graph) -> VertexSet {
    max_clique_within(g, g.vertices())
}

/// Lexicographically least maximum clique of `g[within]`.
pub fn max_clique_within(g: &Graph, within: VertexSet) -> VertexSet {
    let m = BitMatrix::from_graph(g);
    let mut cand = bits_empty(g.n());
    for v in within {
        bits_insert(&mut cand, v);
    }
    m.lex_least_max_clique(&cand).into_iter().collect()
}

// ---------------------------------------------------------------------------
// Chromatic number
// ---------------------------------------------------------------------------

pub fn chromatic_number(g: &Graph) -> Result<InvariantResult> {
    ensure_size("chromatic number", g.n(), MAX_CHROMATIC)?;
    let (value, colours) = optimal_coloring(g);
    Ok(InvariantResult {
        kind: InvariantKind::Chi,
        value,
        witness: Witness::Coloring(colours),
    })
}

/// Exact `χ` without the size guard, for internal callers that already
/// bounded `n`.
pub(crate) fn chi(g: &Graph) -> usize {
    optimal_coloring(g).0
}

fn optimal_coloring(g: &Graph) -> (usize, Vec<usize>) {
    if g.n() == 0 {
        return (0, Vec::new());
    }
    let lower = max_clique(g).len();
    let upper = greedy_largest_first(g);
    for k in lower..upper {
        if let Some(colours) = k_coloring(g, k) {
            return (k, colours);
        }
    }
    (upper, k_coloring(g, upper).expect("greedy colouring shows feasibility"))
}

/// Number of colours used by largest-first greedy colouring.
fn greedy_largest_first(g: &Graph) -> usize {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut colour = vec![usize::MAX; g.n()];
    let mut used = 0;
    for v in order {
        let taken: u64 = g
            .neighbors(v)
            .iter()
            .filter(|&u| colour[u] != usize::MAX)
            .fold(0, |acc, u| acc | (1 << colour[u]));
        let c = (!taken).trailing_zeros() as usize;
        colour[v] = c;
        used = used.max(c + 1);
    }
    used
}

/// First proper `k`-colouring in vertex order, colours introduced in order.
fn k_coloring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut colours = vec![usize::MAX; n];
    // forbidden[v] = bitmask of colours already used by coloured neighbours.
    let mut forbidden = vec![0u32; n];
    fn assign(
        g: &Graph,
        k: usize,
        v: usize,
        used: usize,
        colours: &mut [usize],
        forbidden: &mut [u32],
    ) -> bool {
        if v == g.n() {
            return true;
        }
        let limit = (used + 1).min(k);
        for c in 0..limit {
            if forbidden[v] & (1 << c) != 0 {
                continue;
            }
            let later = g.neighbors(v).above(v);
            // Forward check: no later neighbour may be left without a colour.
            let dead = later.iter().any(|u| {
                let f = forbidden[u] | (1 << c);
                f.count_ones() as usize >= k && (0..k).all(|x| f & (1 << x) != 0)
            });
            if dead {
                continue;
            }
            let saved: Vec<u32> = later.iter().map(|u| forbidden[u]).collect();
            for u in later {
                forbidden[u] |= 1 << c;
            }
            colours[v] = c;
            if assign(g, k, v + 1, used.max(c + 1), colours, forbidden) {
                return true;
            }
            for (u, f) in later.iter().zip(saved) {
                forbidden[u] = f;
            }
        }
        colours[v] = usize::MAX;
        false
    }
    assign(g, k, 0, 0, &mut colours, &mut forbidden).then_some(colours)
}

// ---------------------------------------------------------------------------
// Blob graphs and bounded-size models
// ---------------------------------------------------------------------------

/// Connected vertex sets of size at most `m` and the "disjoint and joined by
/// an edge" relation between them.
#[derive(Debug, Clone)]
pub struct BlobGraph {
    pub host: Graph,
    pub blobs: Vec<VertexSet>,
    pub meta: BitMatrix,
}

impl BlobGraph {
    pub fn linked(host: &Graph, a: VertexSet, b: VertexSet) -> bool {
        a.is_disjoint(b) && !host.neighborhood_of(a).is_disjoint(b)
    }
}

/// All non-empty connected subsets of `g` with at most `max_size` vertices,
/// sorted by ascending vertex list.
pub fn connected_subsets(g: &Graph, max_size: usize, limit: usize) -> Result<Vec<VertexSet>> {
    let mut all: Vec<VertexSet> = Vec::new();
    let mut level: Vec<VertexSet> = (0..g.n()).map(VertexSet::singleton).collect();
    let mut size = 1;
    while !level.is_empty() && size <= max_size {
        all.extend_from_slice(&level);
        if all.len() > limit {
            return Err(Error::TooManyBlobs { limit });
        }
        if size == max_size {
            break;
        }
        let mut next = HashSet::new();
        for &s in &level {
            for v in g.neighborhood_of(s) - s {
                next.insert(s.with(v));
            }
        }
        level = next.into_iter().collect();
        size += 1;
    }
    all.sort_by_cached_key(|s| s.to_vec());
    Ok(all)
}

pub fn blob_graph(g: &Graph, m: usize) -> Result<BlobGraph> {
    if m == 0 {
        return Err(Error::PreconditionViolated("branch-set bound must be at least 1".into()));
    }
    let blobs = connected_subsets(g, m, MAX_BLOBS)?;
    let reach: Vec<VertexSet> = blobs.iter().map(|&b| g.neighborhood_of(b)).collect();
    let mut meta = BitMatrix::new(blobs.len());
    for i in 0..blobs.len() {
        for j in (i + 1)..blobs.len() {
            if blobs[i].is_disjoint(blobs[j]) && !reach[i].is_disjoint(blobs[j]) {
                meta.add_edge(i, j);
            }
        }
    }
    Ok(BlobGraph {
        host: g.clone(),
        blobs,
        meta,
    })
}

/// Largest `t` with a `K_t`-model whose branch sets have at most `m` vertices.
pub fn had_m(g: &Graph, m: usize) -> Result<InvariantResult> {
    let bg = blob_graph(g, m)?;
    let clique = bg.meta.lex_least_max_clique(&bits_full(bg.blobs.len()));
    let model = MinorModel::new(clique.iter().map(|&i| bg.blobs[i]).collect());
    Ok(InvariantResult {
        kind: if m == 2 { InvariantKind::Had2 } else { InvariantKind::HadM(m) },
        value: model.len(),
        witness: Witness::Model(model),
    })
}

pub fn had2(g: &Graph) -> Result<InvariantResult> {
    had_m(g, 2)
}

/// Largest `t` with a `K_t`-model in which at most one branch set has more
/// than two vertices. The big set `B` is enumerated explicitly; for each `B`
/// the rest is a maximum clique among the small blobs disjoint from and
/// linked to `B`.
pub fn had2_plus(g: &Graph) -> Result<InvariantResult> {
    ensure_size("had2plus", g.n(), MAX_HAD2_PLUS)?;
    let small = had_m(g, 2)?;
    let Witness::Model(small_model) = small.witness else {
        unreachable!("had_m returns a model");
    };
    let mut best = small_model;
    if g.n() >= 3 {
        let bg = blob_graph(g, 2)?;
        for big in connected_subsets(g, g.n(), usize::MAX)? {
            if big.len() < 3 || (g.n() - big.len()) < best.len() {
                continue;
            }
            let reach = g.neighborhood_of(big);
            let mut eligible = bits_empty(bg.blobs.len());
            let mut count = 0;
            for (i, &b) in bg.blobs.iter().enumerate() {
                if b.is_disjoint(big) && !b.is_disjoint(reach) {
                    bits_insert(&mut eligible, i);
                    count += 1;
                }
            }
            if count < best.len() || bg.meta.max_clique_size(&eligible) < best.len() {
                continue;
            }
            let rest = bg.meta.lex_least_max_clique(&eligible);
            let mut model = MinorModel::new(vec![big]);
            for i in rest {
                model.push(bg.blobs[i]);
            }
            best = model;
        }
    }
    Ok(InvariantResult {
        kind: InvariantKind::Had2Plus,
        value: best.len(),
        witness: Witness::Model(best),
    })
}

// ---------------------------------------------------------------------------
// Hadwiger number
// ---------------------------------------------------------------------------

/// Exact Hadwiger number by iterative deepening on `t`, starting at `ω`.
///
/// In a connected graph any `K_t`-model extends to one that covers every
/// vertex (an unused vertex next to a branch set can join it), so each level
/// searches partitions of a component into exactly `t` connected, pairwise
/// linked parts.
pub fn hadwiger_number(g: &Graph) -> Result<InvariantResult> {
    ensure_size("Hadwiger number", g.n(), MAX_HADWIGER)?;
    let components = g.connected_components();
    let mut best = MinorModel::singletons(max_clique(g));
    let mut t = best.len() + 1;
    'deepen: loop {
        for &part in &components {
            if let Some(model) = partition_model(g, part, t) {
                best = model;
                t += 1;
                continue 'deepen;
            }
        }
        break;
    }
    Ok(InvariantResult {
        kind: InvariantKind::Had,
        value: best.len(),
        witness: Witness::Model(best),
    })
}

fn partition_model(g: &Graph, component: VertexSet, t: usize) -> Option<MinorModel> {
    let k = component.len();
    if t > k || t * (t - 1) / 2 > g.induced_subgraph(component).0.edge_count() {
        return None;
    }
    // Breadth-first order so each vertex after the first has an earlier neighbour.
    let start = component.min()?;
    let mut order = vec![start];
    let mut seen = VertexSet::singleton(start);
    let mut head = 0;
    while head < order.len() {
        for u in g.neighbors(order[head]) & component {
            if !seen.contains(u) {
                seen = seen.with(u);
                order.push(u);
            }
        }
        head += 1;
    }
    let mut parts = Vec::with_capacity(t);
    if assign_parts(g, &order, 0, t, &mut parts, component) {
        Some(MinorModel::new(parts))
    } else {
        None
    }
}

fn assign_parts(
    g: &Graph,
    order: &[usize],
    idx: usize,
    t: usize,
    parts: &mut Vec<VertexSet>,
    unassigned: VertexSet,
) -> bool {
    if idx == order.len() {
        return parts.len() == t && parts_feasible(g, parts, VertexSet::EMPTY);
    }
    if parts.len() + (order.len() - idx) < t {
        return false;
    }
    let v = order[idx];
    let rest = unassigned.without(v);
    for p in 0..=parts.len().min(t - 1) {
        if p == parts.len() {
            parts.push(VertexSet::singleton(v));
        } else {
            parts[p] = parts[p].with(v);
        }
        if parts_feasible(g, parts, rest) && assign_parts(g, order, idx + 1, t, parts, rest) {
            return true;
        }
        if parts[p].len() == 1 {
            parts.pop();
        } else {
            parts[p] = parts[p].without(v);
        }
    }
    false
}

/// Each part can still become connected, and each pair can still be linked,
/// using the unassigned vertices `free`.
fn parts_feasible(g: &Graph, parts: &[VertexSet], free: VertexSet) -> bool {
    let grown: Vec<VertexSet> = parts.iter().map(|&p| p | free).collect();
    for (&p, &room) in parts.iter().zip(&grown) {
        let start = p.min().expect("parts are non-empty");
        if !p.is_subset(g.reachable_within(start, room)) {
            return false;
        }
    }
    let reach: Vec<VertexSet> = grown.iter().map(|&s| g.neighborhood_of(s)).collect();
    (0..parts.len()).all(|i| ((i + 1)..parts.len()).all(|j| !reach[i].is_disjoint(grown[j])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ComposeMode;

    fn c(n: usize) -> Graph {
        Graph::cycle(n)
    }

    #[test]
    fn omega_examples() {
        assert_eq!(clique_number(&c(7).complement()).value, 3);
        assert_eq!(clique_number(&Graph::complete(5)).value, 5);
        assert_eq!(clique_number(&c(7)).value, 2);
        let r = clique_number(&c(7).complement());
        assert!(r.verify(&c(7).complement()));
        assert_eq!(r.witness, Witness::Clique([0, 2, 4].into_iter().collect()));
    }

    #[test]
    fn chi_examples() {
        let r = chromatic_number(&c(7).complement()).unwrap();
        assert_eq!(r.value, 4);
        assert!(r.verify(&c(7).complement()));
        assert_eq!(chromatic_number(&c(7)).unwrap().value, 3);
        for n in 0..8 {
            assert_eq!(chromatic_number(&Graph::complete(n)).unwrap().value, n);
        }
        assert!(matches!(
            chromatic_number(&Graph::empty(17)),
            Err(Error::TooLarge { .. })
        ));
        // Colours appear in first-occurrence order.
        let r = chromatic_number(&c(5)).unwrap();
        assert_eq!(r.witness, Witness::Coloring(vec![0, 1, 0, 1, 2]));
    }

    #[test]
    fn blob_graph_examples() {
        let bg = blob_graph(&c(5), 1).unwrap();
        let meta_c5: Vec<_> = (0..5).map(|i| crate::bits::bits_iter(bg.meta.row(i)).collect::<Vec<_>>()).collect();
        let c5 = c(5);
        for (i, row) in meta_c5.iter().enumerate() {
            assert_eq!(row, &c5.neighbors(i).to_vec());
        }
        assert_eq!(blob_graph(&Graph::complete(3), 2).unwrap().blobs.len(), 6);
        let bg = blob_graph(&c(7), 2).unwrap();
        assert_eq!(bg.meta.max_clique_size(&bits_full(bg.blobs.len())), 2);
    }

    #[test]
    fn had_m_examples() {
        assert_eq!(had2(&c(7)).unwrap().value, 2);
        let r = had2(&c(5)).unwrap();
        assert_eq!(r.value, 3);
        assert!(r.verify(&c(5)));
        assert_eq!(had_m(&c(9), 3).unwrap().value, 3);
        assert_eq!(had_m(&c(9), 2).unwrap().value, 2);
        assert!(matches!(had_m(&c(5), 0), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn had2_plus_examples() {
        let r = had2_plus(&c(7)).unwrap();
        assert_eq!(r.value, 3);
        assert!(r.verify(&c(7)));
        let Witness::Model(m) = &r.witness else { panic!() };
        assert!(m.branch_sets()[0].len() > 2);
        assert_eq!(had2_plus(&Graph::complete(4)).unwrap().value, 4);
        assert!(matches!(had2_plus(&Graph::empty(15)), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn hadwiger_examples() {
        assert_eq!(hadwiger_number(&Graph::complete(6)).unwrap().value, 6);
        let r = hadwiger_number(&c(5)).unwrap();
        assert_eq!(r.value, 3);
        assert!(r.verify(&c(5)));
        let r = hadwiger_number(&c(7).complement()).unwrap();
        assert!(r.value >= 4);
        assert!(r.verify(&c(7).complement()));
        // Petersen-free sanity: K3,3 has had = 4.
        let k33 = Graph::compose(&Graph::empty(3), &Graph::empty(3), ComposeMode::Join).unwrap();
        assert_eq!(hadwiger_number(&k33).unwrap().value, 4);
        assert_eq!(hadwiger_number(&Graph::empty(0)).unwrap().value, 0);
        assert_eq!(hadwiger_number(&Graph::empty(3)).unwrap().value, 1);
    }
}
