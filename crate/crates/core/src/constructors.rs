//! Constructive model builders for the two graph classes. Each builder is a
//! recursion that strictly shrinks the graph, checks the structural claims it
//! relies on as it goes, and records which rule fired in a [`Trace`].

use serde::{Deserialize, Serialize};

use crate::error::{ensure_size, Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::invariants::{chi, clique_number, max_clique};
use crate::models::{verify_model, MinorModel, ModelClass};
use crate::patterns::{find_any_pattern, find_induced, find_odd_antihole, in_class, ClassName, Evidence, PatternName};
use crate::recognition::{find_simplicial, find_twins, reconstruct_line_graph_root, RootConstraints, TwinKind};

pub const MAX_CCG: usize = 14;
pub const MAX_FAF: usize = 12;

const CCG_PATTERNS: [PatternName; 2] = [PatternName::Coclaw, PatternName::Cogem];
const FAF_PATTERNS: [PatternName; 2] = [PatternName::Fork, PatternName::Antifork];

/// How a vertex outside an induced `C5` `x_0..x_4` sees it. Indices are
/// 0-based and taken modulo 5.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tag", content = "i", rename_all = "snake_case")]
pub enum NeighborType5 {
    /// Exactly `{x_i, x_{i+2}}`.
    A(usize),
    /// Exactly `{x_i, x_{i+1}, x_{i+3}}`.
    B(usize),
    /// All of the cycle.
    C,
}

/// How a vertex outside an odd antihole `x_0..x_{2k}` sees it (consecutive
/// vertices non-adjacent). Indices are 0-based, modulo `2k+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tag", content = "i", rename_all = "snake_case")]
pub enum NeighborTypeAnti {
    Full,
    /// Everything except `x_i, x_{i+1}`.
    MinusPair(usize),
    /// Everything except `x_i, x_{i+1}, x_{i+2}`.
    MinusTriple(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepRule {
    AntiholeDeletion,
    C5Deletion,
    TwinDeletion,
    Component,
    JoinCombine,
    SimplicialDeletion,
    SimplicialClique,
    LineGraphRestrict,
    LineGraphBase,
    PerfectBase,
}

/// One reduction; `vertices` are labels of the input graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub rule: StepRule,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Trace {
    steps: Vec<TraceStep>,
}

impl Trace {
    pub fn steps(&self) -> &[TraceStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn count(&self, rule: StepRule) -> usize {
        self.steps.iter().filter(|s| s.rule == rule).count()
    }

    fn push(&mut self, rule: StepRule, vertices: Vec<usize>) {
        self.steps.push(TraceStep { rule, vertices });
    }
}

fn lift(map: &[usize], vs: impl IntoIterator<Item = usize>) -> Vec<usize> {
    vs.into_iter().map(|v| map[v]).collect()
}

fn lift_set(map: &[usize], s: VertexSet) -> VertexSet {
    s.iter().map(|v| map[v]).collect()
}

fn compose(outer: &[usize], inner: &[usize]) -> Vec<usize> {
    inner.iter().map(|&v| outer[v]).collect()
}

fn lift_err(e: Error, map: &[usize]) -> Error {
    match e {
        Error::ClassViolation(ev) => Error::ClassViolation(Box::new(ev.relabel(map))),
        other => other,
    }
}

/// A forbidden structure inside `g[within]`, in `g`'s labels.
fn evidence_within(g: &Graph, within: VertexSet, patterns: &[PatternName], antihole_below: usize) -> Option<Evidence> {
    let (h, map) = g.induced_subgraph(within);
    find_any_pattern(&h, patterns)
        .or_else(|| {
            find_odd_antihole(&h, 5)
                .filter(|c| c.len() < antihole_below)
                .map(|cycle| Evidence::OddAntihole { cycle })
        })
        .map(|e| e.relabel(&map))
}

fn violation_or_bug(evidence: Option<Evidence>, what: impl Into<String>) -> Error {
    match evidence {
        Some(e) => Error::ClassViolation(Box::new(e)),
        None => Error::InternalCheckFailed(what.into()),
    }
}

fn check_outside(x: &[usize], g: &Graph, v: usize) -> Result<VertexSet> {
    let set: VertexSet = x.iter().copied().collect();
    if set.len() != x.len() || x.iter().any(|&u| u >= g.n()) || v >= g.n() || set.contains(v) {
        return Err(Error::PreconditionViolated(format!(
            "vertex {v} must lie outside the distinct in-range vertices {x:?}"
        )));
    }
    Ok(set)
}

/// Bit `i` set when `v` is adjacent to `x[i]`.
fn index_mask(g: &Graph, x: &[usize], v: usize) -> u32 {
    x.iter()
        .enumerate()
        .filter(|&(_, &u)| g.has_edge(u, v))
        .fold(0, |m, (i, _)| m | 1 << i)
}

fn cyclic_mask(len: usize, offsets: &[usize], i: usize) -> u32 {
    offsets.iter().fold(0, |m, &d| m | 1 << ((i + d) % len))
}

pub fn classify_c5_neighbor(g: &Graph, x: &[usize], v: usize) -> Result<NeighborType5> {
    let set = check_outside(x, g, v)?;
    if x.len() != 5 || !(0..5).all(|i| (0..5).all(|j| g.has_edge(x[i], x[j]) == matches!((5 + j - i) % 5, 1 | 4))) {
        return Err(Error::PreconditionViolated(format!("{x:?} is not an induced C5 in cyclic order")));
    }
    let mask = index_mask(g, x, v);
    if mask == 0b11111 {
        return Ok(NeighborType5::C);
    }
    for i in 0..5 {
        if mask == cyclic_mask(5, &[0, 2], i) {
            return Ok(NeighborType5::A(i));
        }
        if mask == cyclic_mask(5, &[0, 1, 3], i) {
            return Ok(NeighborType5::B(i));
        }
    }
    Err(violation_or_bug(
        evidence_within(g, set.with(v), &CCG_PATTERNS, 0),
        format!("vertex {v} sees the C5 {x:?} in no admissible way, yet no co-claw or co-gem appears"),
    ))
}

fn is_antihole_order(g: &Graph, x: &[usize]) -> bool {
    let len = x.len();
    (0..len).all(|i| {
        (0..len).filter(|&j| j != i).all(|j| {
            let d = (len + j - i) % len;
            g.has_edge(x[i], x[j]) == (d != 1 && d != len - 1)
        })
    })
}

pub fn classify_antihole_neighbor(g: &Graph, x: &[usize], v: usize) -> Result<NeighborTypeAnti> {
    let set = check_outside(x, g, v)?;
    let len = x.len();
    if len < 7 || len.is_multiple_of(2) || !is_antihole_order(g, x) {
        return Err(Error::PreconditionViolated(format!(
            "{x:?} is not an odd antihole of length at least 7 in cyclic order"
        )));
    }
    let mask = index_mask(g, x, v);
    let full = (1u32 << len) - 1;
    if mask == full {
        return Ok(NeighborTypeAnti::Full);
    }
    for i in 0..len {
        if mask == full & !cyclic_mask(len, &[0, 1], i) {
            return Ok(NeighborTypeAnti::MinusPair(i));
        }
        if mask == full & !cyclic_mask(len, &[0, 1, 2], i) {
            return Ok(NeighborTypeAnti::MinusTriple(i));
        }
    }
    Err(violation_or_bug(
        evidence_within(g, set.with(v), &CCG_PATTERNS, len),
        format!("vertex {v} sees the antihole {x:?} in no admissible way, yet no forbidden structure appears"),
    ))
}

/// Small model of size at least `χ(g)` for a {co-claw, co-gem}-free `g`.
pub fn construct_small_model_ccg(g: &Graph) -> Result<(MinorModel, Trace)> {
    ensure_size("small-model construction", g.n(), MAX_CCG)?;
    let mut trace = Trace::default();
    let identity: Vec<usize> = (0..g.n()).collect();
    let model = ccg_rec(g, &identity, &mut trace)?;
    let report = verify_model(g, &model);
    let problem = if !report.valid {
        Some("constructed model does not verify")
    } else if report.classification != ModelClass::Small {
        Some("constructed model is not small")
    } else if model.len() < chi(g) {
        Some("constructed model is smaller than the chromatic number")
    } else {
        None
    };
    match problem {
        Some(what) => Err(violation_or_bug(find_any_pattern(g, &CCG_PATTERNS), what)),
        None => Ok((model, trace)),
    }
}

fn ccg_rec(h: &Graph, map: &[usize], trace: &mut Trace) -> Result<MinorModel> {
    if h.n() == 0 {
        return Ok(MinorModel::default());
    }
    if let Some(x) = find_induced(h, &Graph::cycle(5)) {
        let cycle: VertexSet = x.iter().copied().collect();
        let mut twin_of = None;
        for v in h.vertices() - cycle {
            let kind = classify_c5_neighbor(h, &x, v).map_err(|e| lift_err(e, map))?;
            if let (NeighborType5::A(i), None) = (kind, twin_of) {
                twin_of = Some((v, x[(i + 1) % 5]));
            }
        }
        if let Some((v, twin)) = twin_of {
            if h.neighbors(v) != h.neighbors(twin) {
                let ev = find_any_pattern(h, &CCG_PATTERNS).map(|e| e.relabel(map));
                return Err(violation_or_bug(ev, format!("{} and {} should be twins", map[v], map[twin])));
            }
            trace.push(StepRule::TwinDeletion, vec![map[v], map[twin]]);
            let (sub, sub_map) = h.remove(VertexSet::singleton(v));
            return ccg_rec(&sub, &compose(map, &sub_map), trace);
        }
        trace.push(StepRule::C5Deletion, lift(map, x[..4].iter().copied()));
        let (sub, sub_map) = h.remove(x[..4].iter().copied().collect());
        let mut model = ccg_rec(&sub, &compose(map, &sub_map), trace)?;
        model.push([map[x[0]], map[x[1]]].into_iter().collect());
        model.push([map[x[2]], map[x[3]]].into_iter().collect());
        return Ok(model);
    }
    if let Some(x) = find_odd_antihole(h, 7) {
        let ring: VertexSet = x.iter().copied().collect();
        for v in h.vertices() - ring {
            classify_antihole_neighbor(h, &x, v).map_err(|e| lift_err(e, map))?;
        }
        trace.push(StepRule::AntiholeDeletion, lift(map, x[..6].iter().copied()));
        let (sub, sub_map) = h.remove(x[..6].iter().copied().collect());
        let mut model = ccg_rec(&sub, &compose(map, &sub_map), trace)?;
        for i in 0..3 {
            model.push([map[x[i]], map[x[i + 3]]].into_iter().collect());
        }
        return Ok(model);
    }
    let clique = max_clique(h);
    trace.push(StepRule::PerfectBase, lift(map, clique.iter()));
    Ok(MinorModel::singletons(lift_set(map, clique)))
}

/// Combines semi-small models of the two sides of a join. Both models must
/// already use the labels of the joined graph and have disjoint supports.
pub fn join_combine_models(a: &MinorModel, b: &MinorModel) -> Result<MinorModel> {
    for (side, m) in [("first", a), ("second", b)] {
        let big = m.branch_sets().iter().filter(|s| s.len() > 2).count();
        if big > 1 || (big == 1 && m.branch_sets()[0].len() <= 2) {
            return Err(Error::PreconditionViolated(format!(
                "{side} model must be semi-small with its big set first"
            )));
        }
    }
    if !a.support().is_disjoint(b.support()) {
        return Err(Error::PreconditionViolated("models overlap".into()));
    }
    let (sa, sb) = (a.branch_sets(), b.branch_sets());
    let both_big = sa.first().is_some_and(|s| s.len() > 2) && sb.first().is_some_and(|s| s.len() > 2);
    if !both_big {
        let mut out = a.clone();
        out.extend(b.clone());
        return Ok(out.big_set_first());
    }
    let s = sa[0].to_vec();
    let t = sb[0].to_vec();
    let mut out = MinorModel::new(sa[1..].iter().chain(&sb[1..]).copied().collect());
    out.push([s[0], t[0]].into_iter().collect());
    out.push([s[1], t[1]].into_iter().collect());
    Ok(out)
}

/// Semi-small model of size at least `χ(g)` for a {fork, antifork}-free `g`.
/// The big branch set, if any, is listed first.
pub fn construct_semismall_model_faf(g: &Graph) -> Result<(MinorModel, Trace)> {
    ensure_size("semi-small-model construction", g.n(), MAX_FAF)?;
    let mut trace = Trace::default();
    let identity: Vec<usize> = (0..g.n()).collect();
    let model = match faf_rec(g, &identity, &mut trace) {
        Ok(m) => m.big_set_first(),
        Err(Error::StructureFallthrough(msg)) => {
            return Err(match find_any_pattern(g, &FAF_PATTERNS) {
                Some(e) => Error::ClassViolation(Box::new(e)),
                None => Error::StructureFallthrough(msg),
            })
        }
        Err(e) => return Err(e),
    };
    let report = verify_model(g, &model);
    let problem = if !report.valid {
        Some("constructed model does not verify")
    } else if !report.classification.at_most(ModelClass::SemiSmall) {
        Some("constructed model is not semi-small")
    } else if model.len() < chi(g) {
        Some("constructed model is smaller than the chromatic number")
    } else {
        None
    };
    match problem {
        Some(what) => Err(violation_or_bug(find_any_pattern(g, &FAF_PATTERNS), what)),
        None => Ok((model, trace)),
    }
}

fn faf_rec(h: &Graph, map: &[usize], trace: &mut Trace) -> Result<MinorModel> {
    if h.n() == 0 {
        return Ok(MinorModel::default());
    }
    let recurse_on = |keep: VertexSet, trace: &mut Trace| {
        let (sub, sub_map) = h.induced_subgraph(keep);
        faf_rec(&sub, &compose(map, &sub_map), trace).map(MinorModel::big_set_first)
    };

    let parts = h.connected_components();
    if parts.len() > 1 {
        let mut best = (0, parts[0]);
        for &p in &parts {
            let value = chi(&h.induced_subgraph(p).0);
            if value > best.0 {
                best = (value, p);
            }
        }
        trace.push(StepRule::Component, lift(map, best.1.iter()));
        return recurse_on(best.1, trace);
    }

    let co_parts = h.complement().connected_components();
    if co_parts.len() > 1 {
        let a = co_parts[0];
        let b = h.vertices() - a;
        trace.push(StepRule::JoinCombine, lift(map, a.iter()));
        let ma = recurse_on(a, trace)?;
        let mb = recurse_on(b, trace)?;
        return join_combine_models(&ma, &mb);
    }

    if let Some((u, v)) = find_twins(h, TwinKind::Nonadjacent) {
        trace.push(StepRule::TwinDeletion, vec![map[u], map[v]]);
        return recurse_on(h.vertices().without(u), trace);
    }

    if let Some(v) = find_simplicial(h) {
        let rest = h.vertices().without(v);
        if chi(h) == chi(&h.induced_subgraph(rest).0) {
            trace.push(StepRule::SimplicialDeletion, vec![map[v]]);
            return recurse_on(rest, trace);
        }
        let clique = h.closed_neighbors(v);
        trace.push(StepRule::SimplicialClique, lift(map, clique.iter()));
        return Ok(MinorModel::singletons(lift_set(map, clique)));
    }

    if reconstruct_line_graph_root(h, RootConstraints::SIMPLE)?.is_some() {
        return line_graph_rule(h, map, trace);
    }

    if in_class(h, ClassName::CoclawCogemFree).member {
        return ccg_rec(h, map, trace);
    }
    Err(Error::StructureFallthrough(format!(
        "no reduction applies to {}",
        h.to_graph6()
    )))
}

fn line_graph_rule(h: &Graph, map: &[usize], trace: &mut Trace) -> Result<MinorModel> {
    let omega = clique_number(h).value;
    let target = chi(h);
    let clique = max_clique(h);
    if omega == target {
        trace.push(StepRule::LineGraphBase, lift(map, clique.iter()));
        return Ok(MinorModel::singletons(lift_set(map, clique)));
    }
    let (rest, rest_map) = h.remove(clique);
    let mut best: Option<(usize, VertexSet)> = None;
    for part in rest.connected_components() {
        let part = lift_set(&rest_map, part);
        let value = chi(&h.induced_subgraph(clique | part).0);
        if best.is_none_or(|(b, _)| value > b) {
            best = Some((value, part));
        }
    }
    let (value, part) = best.expect("a non-clique leaves vertices outside a maximum clique");
    if value != target {
        return Err(Error::StructureFallthrough(format!(
            "line graph {}: best clique extension has chromatic number {value}, expected {target}",
            h.to_graph6()
        )));
    }
    let keep = clique | part;
    if keep != h.vertices() {
        trace.push(StepRule::LineGraphRestrict, lift(map, keep.iter()));
        let (sub, sub_map) = h.induced_subgraph(keep);
        return faf_rec(&sub, &compose(map, &sub_map), trace);
    }
    if let Some(c) = clique.iter().find(|&c| h.neighbors(c).is_disjoint(part)) {
        return Err(Error::InternalCheckFailed(format!(
            "clique vertex {} has no neighbour in the remaining component",
            map[c]
        )));
    }
    if target > omega + 1 {
        return Err(Error::StructureFallthrough(format!(
            "line graph {} has chromatic number {target} > clique number {omega} + 1",
            h.to_graph6()
        )));
    }
    trace.push(StepRule::LineGraphBase, lift(map, clique.iter()));
    let mut model = MinorModel::new(vec![lift_set(map, part)]);
    model.extend(MinorModel::singletons(lift_set(map, clique)));
    Ok(model)
}
