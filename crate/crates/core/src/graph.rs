//! Small simple graphs stored as one neighbourhood word per vertex.
//!
//! Every graph here has at most [`MAX_VERTICES`] vertices, which lets a vertex
//! set live in a single `u32`. Graphs are immutable values: operations that
//! change the vertex set return a new graph together with the map from new
//! labels back to the labels of the graph they came from.

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Not, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 32;

/// A subset of `{0, .., 31}` packed into a machine word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u32) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u32 {
        self.0
    }

    /// `{0, .., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 32 {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u32 << v)
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 32 && self.0 & (1u32 << v) != 0
    }

    #[inline]
    #[must_use]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u32 << v))
    }

    #[inline]
    #[must_use]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u32 << v))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member.
    #[inline]
    pub const fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members strictly greater than `v`.
    #[inline]
    pub const fn above(self, v: usize) -> Self {
        if v >= 31 {
            VertexSet::EMPTY
        } else {
            VertexSet(self.0 & (u32::MAX << (v + 1)))
        }
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::EMPTY, VertexSet::with)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u32);

impl Iterator for VertexIter {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

impl BitOr for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitXor for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitxor(self, rhs: Self) -> Self {
        VertexSet(self.0 ^ rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn not(self) -> Self {
        VertexSet(!self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(d)?;
        let mut set = VertexSet::EMPTY;
        for v in members {
            if v >= MAX_VERTICES {
                return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
            }
            set = set.with(v);
        }
        Ok(set)
    }
}

/// How [`Graph::compose`] connects its two operands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComposeMode {
    /// Disjoint union, no edges between the sides.
    Union,
    /// Disjoint union plus every edge between the sides.
    Join,
}

/// Finite, loopless, simple undirected graph on at most 32 vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    ///
    /// # Panics
    /// If `n > 32`.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graphs are limited to 32 vertices");
        Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        }
    }

    pub fn complete(n: usize) -> Self {
        Graph::empty(n).complement()
    }

    /// Cycle `0-1-..-(n-1)-0`. For `n < 3` this is a path.
    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Graph::from_edges(n, &edges).expect("cycle edges are valid")
    }

    /// Path `0-1-..-(n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges).expect("path edges are valid")
    }

    /// Star `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<(usize, usize)> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges).expect("star edges are valid")
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::SizeOverflow(n));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::PreconditionViolated(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::PreconditionViolated(format!("loop at vertex {u}")));
            }
            adj[u] = adj[u].with(v);
            adj[v] = adj[v].with(u);
        }
        Ok(Graph { n, adj })
    }

    /// Builds a graph from neighbourhood words, checking symmetry and looplessness.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::SizeOverflow(n));
        }
        let all = VertexSet::full(n);
        for (v, &nb) in adj.iter().enumerate() {
            if nb.contains(v) || !nb.is_subset(all) {
                return Err(Error::PreconditionViolated(format!(
                    "bad neighbourhood for vertex {v}"
                )));
            }
            if nb.iter().any(|u| !adj[u].contains(v)) {
                return Err(Error::PreconditionViolated(format!(
                    "asymmetric adjacency at vertex {v}"
                )));
            }
        }
        Ok(Graph { n, adj })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Neighbourhood including `v` itself.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.adj[u].above(u).iter().map(move |v| (u, v)))
            .collect()
    }

    /// Union of the open neighbourhoods of the members of `set`.
    pub fn neighborhood_of(&self, set: VertexSet) -> VertexSet {
        set.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v])
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| (set.without(v)).is_subset(self.adj[v]))
    }

    pub fn is_stable(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    /// Vertices of `within` reachable from `start` inside `g[within]`.
    pub fn reachable_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = (self.neighborhood_of(frontier) & within) - seen;
            seen = seen | next;
            frontier = next;
        }
        seen
    }

    /// Whether `g[set]` is connected. The empty set counts as connected.
    pub fn is_connected_set(&self, set: VertexSet) -> bool {
        match set.min() {
            None => true,
            Some(v) => self.reachable_within(v, set) == set,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_set(self.vertices())
    }

    #[must_use]
    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n)
            .map(|v| (all - self.adj[v]).without(v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// `g[set]` with vertices relabelled `0..|set|` in increasing order.
    /// The returned map sends each new label to its label in `self`.
    pub fn induced_subgraph(&self, set: VertexSet) -> (Graph, Vec<usize>) {
        let set = set & self.vertices();
        let map = set.to_vec();
        let mut position = [usize::MAX; MAX_VERTICES];
        for (i, &v) in map.iter().enumerate() {
            position[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| {
                (self.adj[v] & set)
                    .iter()
                    .map(|u| position[u])
                    .collect::<VertexSet>()
            })
            .collect();
        (Graph { n: map.len(), adj }, map)
    }

    /// `g - set`, with the relabelling map as in [`Graph::induced_subgraph`].
    pub fn remove(&self, set: VertexSet) -> (Graph, Vec<usize>) {
        self.induced_subgraph(self.vertices() - set)
    }

    /// `a ⊔ b` or the join of `a` and `b`; `b`'s vertices are shifted by `a.n()`.
    pub fn compose(a: &Graph, b: &Graph, mode: ComposeMode) -> Result<Graph> {
        let n = a.n + b.n;
        if n > MAX_VERTICES {
            return Err(Error::SizeOverflow(n));
        }
        let a_side = VertexSet::full(a.n);
        let b_side = VertexSet::full(n) - a_side;
        let mut adj = Vec::with_capacity(n);
        for &nb in &a.adj {
            adj.push(match mode {
                ComposeMode::Union => nb,
                ComposeMode::Join => nb | b_side,
            });
        }
        for &nb in &b.adj {
            let shifted = VertexSet::from_bits(nb.bits() << a.n);
            adj.push(match mode {
                ComposeMode::Union => shifted,
                ComposeMode::Join => shifted | a_side,
            });
        }
        Ok(Graph { n, adj })
    }

    /// Connected components, ordered by their smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertices();
        let mut parts = Vec::new();
        while let Some(v) = rest.min() {
            let part = self.reachable_within(v, rest);
            parts.push(part);
            rest = rest - part;
        }
        parts
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    ///
    /// # Panics
    /// If `perm` is not a permutation of `0..n`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for v in 0..self.n {
            adj[perm[v]] = self.adj[v].iter().map(|u| perm[u]).collect();
        }
        Graph { n: self.n, adj }
    }

    pub fn to_graph6(&self) -> String {
        graph6_encode(self)
    }

    pub fn from_graph6(text: &str) -> Result<Self> {
        graph6_decode(text)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {:?})", self.n, self.edges())
    }
}

// ---------------------------------------------------------------------------
// graph6
// ---------------------------------------------------------------------------

/// Upper-triangle bits in graph6 order: column by column, `(0,1), (0,2), (1,2), (0,3), ..`.
fn upper_triangle_bits(g: &Graph) -> impl Iterator<Item = bool> + '_ {
    (1..g.n).flat_map(move |j| (0..j).map(move |i| g.has_edge(i, j)))
}

pub fn graph6_encode(g: &Graph) -> String {
    let mut out = String::with_capacity(1 + (g.n * g.n) / 12 + 1);
    out.push((63 + g.n as u8) as char);
    let mut group = 0u8;
    let mut filled = 0;
    for bit in upper_triangle_bits(g) {
        group = (group << 1) | bit as u8;
        filled += 1;
        if filled == 6 {
            out.push((63 + group) as char);
            group = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((63 + (group << (6 - filled))) as char);
    }
    out
}

/// Decodes one graph6 record. Surrounding whitespace and an optional
/// `>>graph6<<` header are ignored.
pub fn graph6_decode(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(Error::MalformedGraph6("empty record".into()));
    };
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::MalformedGraph6(format!(
            "byte {} at position {pos} is outside 63..=126",
            bytes[pos]
        )));
    }
    if first == 126 {
        return Err(Error::MalformedGraph6(
            "extended size header (n > 62) is not supported".into(),
        ));
    }
    let n = (first - 63) as usize;
    if n > MAX_VERTICES {
        return Err(Error::MalformedGraph6(format!(
            "{n} vertices exceeds the limit of 32"
        )));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = 1 + nbits.div_ceil(6);
    if bytes.len() != expected {
        return Err(Error::MalformedGraph6(format!(
            "expected {expected} bytes for {n} vertices, got {}",
            bytes.len()
        )));
    }
    let bit = |k: usize| -> bool {
        let byte = bytes[1 + k / 6] - 63;
        (byte >> (5 - k % 6)) & 1 == 1
    };
    if (nbits..(expected - 1) * 6).any(bit) {
        return Err(Error::MalformedGraph6("non-zero padding bits".into()));
    }
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                adj[i] = adj[i].with(j);
                adj[j] = adj[j].with(i);
            }
            k += 1;
        }
    }
    Ok(Graph { n, adj })
}

// ---------------------------------------------------------------------------
// Edge lists
// ---------------------------------------------------------------------------

/// Parses `n m` followed by `m` lines `u v` (0-indexed).
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let (n, rows) = parse_edge_rows(text, 2)?;
    let edges: Vec<(usize, usize)> = rows.iter().map(|r| (r[0], r[1])).collect();
    Graph::from_edges(n, &edges).map_err(|e| Error::MalformedEdgeList(e.to_string()))
}

pub fn format_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn parse_edge_rows(text: &str, width: usize) -> Result<(usize, Vec<Vec<usize>>)> {
    let bad = |msg: String| Error::MalformedEdgeList(msg);
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| bad("missing header".into()))?;
    let head: Vec<usize> = header
        .split_whitespace()
        .map(str::parse)
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| bad(format!("header: {e}")))?;
    let [n, m] = head[..] else {
        return Err(bad("header must be `n m`".into()));
    };
    let mut rows = Vec::with_capacity(m);
    for line in lines {
        let row: Vec<usize> = line
            .split_whitespace()
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| bad(format!("line `{line}`: {e}")))?;
        if row.len() != width {
            return Err(bad(format!("line `{line}` must have {width} fields")));
        }
        rows.push(row);
    }
    if rows.len() != m {
        return Err(bad(format!("header promises {m} edges, found {}", rows.len())));
    }
    Ok((n, rows))
}

// ---------------------------------------------------------------------------
// Multigraphs and line graphs
// ---------------------------------------------------------------------------

/// Multiplicity cap used by the random root generator and by capped root
/// searches. [`Multigraph`] itself accepts any positive multiplicity.
pub const MAX_MULTIPLICITY: u8 = 3;

/// Loopless undirected multigraph; each unordered pair appears at most once,
/// with a positive multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize, u8)>,
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(usize, usize, u8)>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for &(u, v, mult) in &edges {
            if u == v {
                return Err(Error::InvalidMultigraph(format!("loop at {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidMultigraph(format!("edge ({u}, {v}) out of range")));
            }
            if mult == 0 {
                return Err(Error::InvalidMultigraph(format!("pair ({u}, {v}) has multiplicity 0")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidMultigraph(format!("pair ({u}, {v}) repeated")));
            }
        }
        Ok(Multigraph { n, edges })
    }

    /// A simple graph viewed as a multigraph with all multiplicities 1.
    pub fn from_simple(g: &Graph) -> Self {
        Multigraph {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v)| (u, v, 1)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize, u8)] {
        &self.edges
    }

    /// Number of edge instances, counting multiplicity.
    pub fn edge_instances(&self) -> usize {
        self.edges.iter().map(|e| e.2 as usize).sum()
    }

    pub fn is_simple(&self) -> bool {
        self.edges.iter().all(|e| e.2 == 1)
    }

    /// Triangle-freeness of the underlying simple graph.
    pub fn is_triangle_free(&self) -> bool {
        let mut adj = vec![std::collections::BTreeSet::new(); self.n];
        for &(u, v, _) in &self.edges {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        self.edges
            .iter()
            .all(|&(u, v, _)| adj[u].intersection(&adj[v]).next().is_none())
    }

    /// Parses `n m` followed by `m` lines `u v mult`.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let (n, rows) = parse_edge_rows(text, 3)?;
        let edges = rows
            .iter()
            .map(|r| {
                u8::try_from(r[2])
                    .map(|mult| (r[0], r[1], mult))
                    .map_err(|_| Error::MalformedEdgeList(format!("multiplicity {}", r[2])))
            })
            .collect::<Result<Vec<_>>>()?;
        Multigraph::new(n, edges)
    }

    pub fn format_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v, mult) in &self.edges {
            out.push_str(&format!("{u} {v} {mult}\n"));
        }
        out
    }
}

/// Line graph of `h`: one vertex per edge instance (parallel copies are
/// consecutive), adjacent iff the underlying edges share an endpoint.
/// The second component maps each line-graph vertex to its root edge.
pub fn line_graph(h: &Multigraph) -> Result<(Graph, Vec<(usize, usize)>)> {
    let instances: Vec<(usize, usize)> = h
        .edges
        .iter()
        .flat_map(|&(u, v, mult)| std::iter::repeat_n((u.min(v), u.max(v)), mult as usize))
        .collect();
    let n = instances.len();
    if n > MAX_VERTICES {
        return Err(Error::SizeOverflow(n));
    }
    let mut adj = vec![VertexSet::EMPTY; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let (a, b) = instances[i];
            let (c, d) = instances[j];
            if a == c || a == d || b == c || b == d {
                adj[i] = adj[i].with(j);
                adj[j] = adj[j].with(i);
            }
        }
    }
    Ok((Graph { n, adj }, instances))
}

// ---------------------------------------------------------------------------
// Canonical form
// ---------------------------------------------------------------------------

pub const MAX_CANONICAL: usize = 10;

/// Canonical labelling: the relabelled copy whose graph6 bit string is
/// lexicographically least over all vertex permutations.
///
/// Positions are filled one at a time; placing a vertex at position `j`
/// fixes column `j` of the upper triangle, so a prefix that already
/// compares greater than the best complete string is cut off.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let n = g.n();
    if n > MAX_CANONICAL {
        return Err(Error::TooLargeForCanonical(n));
    }
    let mut search = CanonSearch {
        g,
        order: Vec::with_capacity(n),
        columns: Vec::with_capacity(n),
        best_order: Vec::new(),
        best_columns: Vec::new(),
    };
    search.run(VertexSet::full(n));
    let mut perm = vec![0; n];
    for (position, &v) in search.best_order.iter().enumerate() {
        perm[v] = position;
    }
    Ok(g.permuted(&perm))
}

/// Bytes that are equal exactly for isomorphic graphs (the graph6 record of
/// the canonical form).
pub fn canonical_key(g: &Graph) -> Result<Vec<u8>> {
    Ok(canonical_form(g)?.to_graph6().into_bytes())
}

struct CanonSearch<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    /// Column `j` as a number whose most significant bit is row 0.
    columns: Vec<u32>,
    best_order: Vec<usize>,
    best_columns: Vec<u32>,
}

impl CanonSearch<'_> {
    fn run(&mut self, remaining: VertexSet) {
        let depth = self.order.len();
        if remaining.is_empty() {
            if self.best_order.is_empty() || self.columns < self.best_columns {
                self.best_order.clone_from(&self.order);
                self.best_columns.clone_from(&self.columns);
            }
            return;
        }
        for v in remaining {
            let mut column = 0u32;
            for &u in &self.order {
                column = (column << 1) | self.g.has_edge(u, v) as u32;
            }
            if !self.best_order.is_empty() {
                // Compare the prefix including this column against the best.
                let prefix = self.columns.as_slice();
                let best = &self.best_columns[..depth];
                match prefix.cmp(best) {
                    std::cmp::Ordering::Greater => return,
                    std::cmp::Ordering::Equal if column > self.best_columns[depth] => continue,
                    _ => {}
                }
            }
            self.order.push(v);
            self.columns.push(column);
            self.run(remaining.without(v));
            self.order.pop();
            self.columns.pop();
        }
    }
}
