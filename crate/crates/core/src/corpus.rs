//! Graph corpora (exhaustive enumeration and parametrised families) and the
//! sweep engine that runs registered checks over them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constructors::{construct_semismall_model_faf, construct_small_model_ccg};
use crate::error::{ensure_size, Error, Result};
use crate::graph::{canonical_form, canonical_key, line_graph, ComposeMode, Graph, Multigraph, VertexSet, MAX_MULTIPLICITY};
use crate::invariants::{chromatic_number, clique_number, had2, had2_plus, had_m, hadwiger_number};
use crate::models::{verify_model, ModelClass};
use crate::patterns::{in_class, ClassName, PatternName};
use crate::patterns::find_induced;
use crate::recognition::{
    is_lg_triangle_free_multigraph, reconstruct_line_graph_root, structure_outcomes, Candelabrum, RootConstraints,
};

pub const MAX_ENUMERATE: usize = 7;
pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// One representative per isomorphism class of graphs on `n` vertices, in
/// canonical form, sorted by canonical graph6 key.
pub fn enumerate_nonisomorphic(n: usize) -> Result<Vec<Graph>> {
    ensure_size("built-in enumeration", n, MAX_ENUMERATE)?;
    let mut level = vec![Graph::empty(0)];
    for size in 1..=n {
        let mut seen: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
        for g in &level {
            for mask in 0u32..(1 << (size - 1)) {
                let mut adj = g.adjacency().to_vec();
                let new = VertexSet::from_bits(mask);
                for u in new {
                    adj[u] = adj[u].with(size - 1);
                }
                adj.push(new);
                let h = Graph::from_adjacency(adj)?;
                let key = canonical_key(&h)?;
                if let std::collections::btree_map::Entry::Vacant(e) = seen.entry(key) {
                    e.insert(canonical_form(&h)?);
                }
            }
        }
        level = seen.into_values().collect();
    }
    Ok(level)
}

/// Concatenation of [`enumerate_nonisomorphic`] for `1..=max_n`.
pub fn enumerate_up_to(max_n: usize) -> Result<Vec<Graph>> {
    ensure_size("built-in enumeration", max_n, MAX_ENUMERATE)?;
    let mut all = Vec::new();
    for n in 1..=max_n {
        all.extend(enumerate_nonisomorphic(n)?);
    }
    Ok(all)
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Cycle(usize),
    Antihole(usize),
    Complete(usize),
    /// Candle sizes, base sizes (same length, all positive) and the number of
    /// rest vertices, which are left pairwise non-adjacent.
    Candled { candles: Vec<usize>, bases: Vec<usize>, rest: usize },
    /// `count` random cographs on `ops + 1` vertices, each built by `ops`
    /// random unions and joins starting from single vertices.
    Cograph { seed: u64, ops: usize, count: usize },
    /// Line graphs of `count` random triangle-free roots on `root_n` vertices.
    LineOfTriangleFree { seed: u64, root_n: usize, count: usize, multigraph: bool },
    ComplementOf(Box<Family>),
}

/// Upper bound on edge instances of generated roots, keeping line graphs at
/// desk scale.
pub const MAX_ROOT_EDGES: usize = 12;

fn parse_num<T: FromStr>(s: &str, what: &str) -> Result<T> {
    s.trim().parse().map_err(|_| Error::BadParams(format!("{what}: cannot parse `{s}`")))
}

fn parse_list(s: &str, what: &str) -> Result<Vec<usize>> {
    s.split(',').map(|x| parse_num(x, what)).collect()
}

impl FromStr for Family {
    type Err = Error;

    /// `cycle:N`, `antihole:N`, `complete:N`, `candled:Y,..:Z,..:R`,
    /// `cograph:SEED:OPS:COUNT`, `line-tf:SEED:ROOT_N:COUNT[:multi]`,
    /// `complement:<family>`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let fields: Vec<&str> = rest.split(':').collect();
        let arity = |n: usize| {
            if fields.len() == n && !rest.is_empty() {
                Ok(())
            } else {
                Err(Error::BadParams(format!("`{name}` takes {n} parameter(s), got `{rest}`")))
            }
        };
        match name {
            "cycle" | "antihole" | "complete" => {
                arity(1)?;
                let n = parse_num(fields[0], name)?;
                Ok(match name {
                    "cycle" => Family::Cycle(n),
                    "antihole" => Family::Antihole(n),
                    _ => Family::Complete(n),
                })
            }
            "candled" => {
                arity(3)?;
                Ok(Family::Candled {
                    candles: parse_list(fields[0], "candle sizes")?,
                    bases: parse_list(fields[1], "base sizes")?,
                    rest: parse_num(fields[2], "rest size")?,
                })
            }
            "cograph" => {
                arity(3)?;
                Ok(Family::Cograph {
                    seed: parse_num(fields[0], "seed")?,
                    ops: parse_num(fields[1], "ops")?,
                    count: parse_num(fields[2], "count")?,
                })
            }
            "line-tf" => {
                let multigraph = match fields.len() {
                    3 => false,
                    4 if fields[3] == "multi" => true,
                    _ => return Err(Error::BadParams(format!("line-tf expects SEED:ROOT_N:COUNT[:multi], got `{rest}`"))),
                };
                Ok(Family::LineOfTriangleFree {
                    seed: parse_num(fields[0], "seed")?,
                    root_n: parse_num(fields[1], "root size")?,
                    count: parse_num(fields[2], "count")?,
                    multigraph,
                })
            }
            "complement" => Ok(Family::ComplementOf(Box::new(rest.parse()?))),
            other => Err(Error::BadParams(format!("unknown family `{other}`"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        match self {
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Antihole(n) => write!(f, "antihole:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Candled { candles, bases, rest } => write!(f, "candled:{}:{}:{rest}", join(candles), join(bases)),
            Family::Cograph { seed, ops, count } => write!(f, "cograph:{seed}:{ops}:{count}"),
            Family::LineOfTriangleFree { seed, root_n, count, multigraph } => {
                write!(f, "line-tf:{seed}:{root_n}:{count}{}", if *multigraph { ":multi" } else { "" })
            }
            Family::ComplementOf(inner) => write!(f, "complement:{inner}"),
        }
    }
}

fn family_check(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InternalCheckFailed(what()))
    }
}

fn is_cycle(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && g.vertices().iter().all(|v| g.degree(v) == 2)
}

/// The candled graph with the given part sizes and its candelabrum. Parts are
/// laid out as `Y_1, Z_1, Y_2, Z_2, ..`, followed by the rest.
pub fn candled_graph(candles: &[usize], bases: &[usize], rest: usize) -> Result<(Graph, Candelabrum)> {
    if candles.is_empty() || candles.len() != bases.len() || candles.iter().chain(bases).any(|&s| s == 0) {
        return Err(Error::BadParams("candled needs k >= 1 equally many positive candle and base sizes".into()));
    }
    let n = candles.iter().chain(bases).sum::<usize>() + rest;
    ensure_size("candled family", n, crate::graph::MAX_VERTICES)?;
    let mut next = 0;
    let mut take = |k: usize| {
        let s = VertexSet::full(next + k) - VertexSet::full(next);
        next += k;
        s
    };
    let mut ys = Vec::new();
    let mut zs = Vec::new();
    for (&y, &z) in candles.iter().zip(bases) {
        ys.push(take(y));
        zs.push(take(z));
    }
    let r = take(rest);
    let mut edges = Vec::new();
    let mut complete = |a: VertexSet, b: VertexSet| {
        for u in a {
            for v in b {
                if u < v {
                    edges.push((u, v));
                } else if v < u {
                    edges.push((v, u));
                }
            }
        }
    };
    for i in 0..ys.len() {
        complete(ys[i], ys[i]);
        complete(ys[i], zs[i]);
        complete(r, zs[i]);
        for j in 0..ys.len() {
            if i != j {
                complete(zs[i], zs[j]);
            }
        }
    }
    let g = Graph::from_edges(n, &edges)?;
    Ok((g, Candelabrum { candles: ys, bases: zs, rest: r }))
}

fn random_cograph(rng: &mut ChaCha8Rng, ops: usize) -> Result<Graph> {
    let mut pool: Vec<Graph> = vec![Graph::complete(1); ops + 1];
    while pool.len() > 1 {
        let a = pool.swap_remove(rng.gen_range(0..pool.len()));
        let b = pool.swap_remove(rng.gen_range(0..pool.len()));
        let mode = if rng.gen_bool(0.5) { ComposeMode::Union } else { ComposeMode::Join };
        pool.push(Graph::compose(&a, &b, mode)?);
    }
    Ok(pool.pop().expect("pool starts non-empty"))
}

/// Random triangle-free root on `n` vertices with between 1 and
/// [`MAX_ROOT_EDGES`] edge instances: pairs are tried in random order and kept
/// unless they close a triangle. The multigraph variant then raises the
/// multiplicity of random edges, up to 3.
pub fn random_triangle_free_multigraph(rng: &mut ChaCha8Rng, n: usize, multigraph: bool) -> Result<Multigraph> {
    if n < 2 {
        return Err(Error::BadParams("triangle-free roots need at least 2 vertices".into()));
    }
    let target = rng.gen_range(1..=MAX_ROOT_EDGES);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut edges: Vec<(usize, usize, u8)> = Vec::new();
    for (u, v) in pairs {
        if edges.len() == target {
            break;
        }
        if adj[u].is_disjoint(adj[v]) {
            adj[u] = adj[u].with(v);
            adj[v] = adj[v].with(u);
            edges.push((u, v, 1));
        }
    }
    if multigraph {
        let mut instances = edges.len();
        for e in edges.iter_mut() {
            while instances < target && e.2 < MAX_MULTIPLICITY && rng.gen_bool(0.5) {
                e.2 += 1;
                instances += 1;
            }
        }
    }
    Multigraph::new(n, edges)
}

/// Roots and line graphs of [`Family::LineOfTriangleFree`], each re-checked.
pub fn line_of_triangle_free(seed: u64, root_n: usize, count: usize, multigraph: bool) -> Result<Vec<(Multigraph, Graph)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let root = random_triangle_free_multigraph(&mut rng, root_n, multigraph)?;
        let (g, edge_of) = line_graph(&root)?;
        family_check(root.is_triangle_free() && (multigraph || root.is_simple()), || {
            format!("generated root {root:?} violates its constraints")
        })?;
        family_check(
            (0..g.n()).all(|i| {
                (0..g.n()).filter(|&j| j != i).all(|j| {
                    let ((a, b), (c, d)) = (edge_of[i], edge_of[j]);
                    g.has_edge(i, j) == (a == c || a == d || b == c || b == d)
                })
            }),
            || "line graph does not match its root".into(),
        )?;
        out.push((root, g));
    }
    Ok(out)
}

pub fn generate_family(f: &Family) -> Result<Vec<Graph>> {
    let sized = |n: usize, min: usize| {
        if n < min {
            Err(Error::BadParams(format!("{f} needs at least {min} vertices")))
        } else {
            ensure_size("family", n, crate::graph::MAX_VERTICES)
        }
    };
    match f {
        Family::Cycle(n) => {
            sized(*n, 3)?;
            let g = Graph::cycle(*n);
            family_check(is_cycle(&g), || format!("{f} is not a cycle"))?;
            Ok(vec![g])
        }
        Family::Antihole(n) => {
            sized(*n, 3)?;
            let g = Graph::cycle(*n).complement();
            family_check(is_cycle(&g.complement()), || format!("{f} is not an antihole"))?;
            Ok(vec![g])
        }
        Family::Complete(n) => {
            sized(*n, 0)?;
            let g = Graph::complete(*n);
            family_check(g.is_clique(g.vertices()), || format!("{f} is not complete"))?;
            Ok(vec![g])
        }
        Family::Candled { candles, bases, rest } => {
            let (g, c) = candled_graph(candles, bases, *rest)?;
            family_check(c.verify(&g), || format!("{f} does not satisfy its candelabrum"))?;
            Ok(vec![g])
        }
        Family::Cograph { seed, ops, count } => {
            sized(ops + 1, 1)?;
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            (0..*count)
                .map(|_| {
                    let g = random_cograph(&mut rng, *ops)?;
                    family_check(find_induced(&g, &PatternName::P4.graph()).is_none(), || {
                        format!("cograph {} contains P4", g.to_graph6())
                    })?;
                    Ok(g)
                })
                .collect()
        }
        Family::LineOfTriangleFree { seed, root_n, count, multigraph } => {
            Ok(line_of_triangle_free(*seed, *root_n, *count, *multigraph)?
                .into_iter()
                .map(|(_, g)| g)
                .collect())
        }
        Family::ComplementOf(inner) => Ok(generate_family(inner)?.iter().map(Graph::complement).collect()),
    }
}

/// Reads one graph6 record per non-empty line.
pub fn read_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            Graph::from_graph6(l).map_err(|e| match e {
                Error::MalformedGraph6(msg) => Error::MalformedGraph6(format!("line {}: {msg}", i + 1)),
                other => other,
            })
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Had2GeChi,
    Had2plusGeChi,
    ChiLe2omega,
    ConstructorCcgValid,
    ConstructorFafValid,
    StructureDisjunction,
    LgRootEquivalence,
    ChiEqOmega,
    InvariantChain,
    HadmNEqHad,
}

impl Check {
    pub const ALL: [Check; 10] = [
        Check::Had2GeChi,
        Check::Had2plusGeChi,
        Check::ChiLe2omega,
        Check::ConstructorCcgValid,
        Check::ConstructorFafValid,
        Check::StructureDisjunction,
        Check::LgRootEquivalence,
        Check::ChiEqOmega,
        Check::InvariantChain,
        Check::HadmNEqHad,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Had2GeChi => "had2_ge_chi",
            Check::Had2plusGeChi => "had2plus_ge_chi",
            Check::ChiLe2omega => "chi_le_2omega",
            Check::ConstructorCcgValid => "constructor_ccg_valid",
            Check::ConstructorFafValid => "constructor_faf_valid",
            Check::StructureDisjunction => "structure_disjunction",
            Check::LgRootEquivalence => "lg_root_equivalence",
            Check::ChiEqOmega => "chi_eq_omega",
            Check::InvariantChain => "invariant_chain",
            Check::HadmNEqHad => "hadm_n_eq_had",
        }
    }

    /// What `lhs` and `rhs` of a [`CheckOutcome`] hold.
    pub fn describe(self) -> &'static str {
        match self {
            Check::Had2GeChi => "had2 >= chi",
            Check::Had2plusGeChi => "had2plus >= chi",
            Check::ChiLe2omega => "chi <= 2 * omega",
            Check::ConstructorCcgValid => "small model size >= chi",
            Check::ConstructorFafValid => "semi-small model size >= chi",
            Check::StructureDisjunction => "outcomes holding >= 1",
            Check::LgRootEquivalence => "claw/gem/W4-free == has triangle-free multigraph root",
            Check::ChiEqOmega => "chi == omega",
            Check::InvariantChain => "omega <= had2 <= had2plus <= had",
            Check::HadmNEqHad => "had_n == had",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub lhs: Option<usize>,
    pub rhs: Option<usize>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckOutcome {
    fn compare(lhs: usize, rhs: usize, pass: bool) -> Self {
        CheckOutcome { lhs: Some(lhs), rhs: Some(rhs), pass, detail: None }
    }

    fn failed(e: &Error) -> Self {
        CheckOutcome { lhs: None, rhs: None, pass: false, detail: Some(e.to_string()) }
    }
}

fn chi_of(g: &Graph) -> Result<usize> {
    Ok(chromatic_number(g)?.value)
}

pub fn run_check(check: Check, g: &Graph) -> CheckOutcome {
    let attempt = || -> Result<CheckOutcome> {
        Ok(match check {
            Check::Had2GeChi => {
                let (a, b) = (had2(g)?, chi_of(g)?);
                CheckOutcome::compare(a.value, b, a.value >= b && a.verify(g))
            }
            Check::Had2plusGeChi => {
                let (a, b) = (had2_plus(g)?, chi_of(g)?);
                CheckOutcome::compare(a.value, b, a.value >= b && a.verify(g))
            }
            Check::ChiLe2omega => {
                let (c, w) = (chi_of(g)?, clique_number(g).value);
                CheckOutcome::compare(c, 2 * w, c <= 2 * w)
            }
            Check::ConstructorCcgValid | Check::ConstructorFafValid => {
                let (built, limit) = if check == Check::ConstructorCcgValid {
                    (construct_small_model_ccg(g), ModelClass::Small)
                } else {
                    (construct_semismall_model_faf(g), ModelClass::SemiSmall)
                };
                let c = chi_of(g)?;
                match built {
                    Ok((m, _)) => {
                        let r = verify_model(g, &m);
                        CheckOutcome::compare(m.len(), c, r.valid && r.classification.at_most(limit) && m.len() >= c)
                    }
                    Err(e) => CheckOutcome { rhs: Some(c), ..CheckOutcome::failed(&e) },
                }
            }
            Check::StructureDisjunction => {
                let o = structure_outcomes(g)?;
                let holding = o.holding().len();
                let mut out = CheckOutcome::compare(holding, 1, holding >= 1 && o.verify(g));
                out.detail = Some(o.holding().join(","));
                out
            }
            Check::LgRootEquivalence => {
                let predicate = is_lg_triangle_free_multigraph(g);
                let constraints = RootConstraints::TRIANGLE_FREE_ANY_MULTIPLICITY;
                let root = reconstruct_line_graph_root(g, constraints)?;
                let valid_root = root.as_ref().is_none_or(|r| r.verify(g, constraints));
                CheckOutcome::compare(
                    predicate as usize,
                    root.is_some() as usize,
                    predicate == root.is_some() && valid_root,
                )
            }
            Check::ChiEqOmega => {
                let (c, w) = (chi_of(g)?, clique_number(g).value);
                CheckOutcome::compare(c, w, c == w)
            }
            Check::InvariantChain => {
                let w = clique_number(g).value;
                let (h2, h2p, h) = (had2(g)?.value, had2_plus(g)?.value, hadwiger_number(g)?.value);
                let mut out = CheckOutcome::compare(w, h, w <= h2 && h2 <= h2p && h2p <= h);
                out.detail = Some(format!("{w} <= {h2} <= {h2p} <= {h}"));
                out
            }
            Check::HadmNEqHad => {
                let (a, b) = (had_m(g, g.n().max(1))?, hadwiger_number(g)?);
                CheckOutcome::compare(a.value, b.value, a.value == b.value && a.verify(g) && b.verify(g))
            }
        })
    };
    attempt().unwrap_or_else(|e| CheckOutcome::failed(&e))
}

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckTally {
    pub check: Check,
    pub pass: usize,
    pub fail: usize,
}

/// A failed check on one graph, re-checkable from `graph6` alone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationCertificate {
    pub graph6: String,
    pub check: Check,
    pub outcome: CheckOutcome,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub wall_seconds: f64,
    pub jobs: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub schema_version: u32,
    pub corpus: String,
    pub class_filter: Option<ClassName>,
    pub checks: Vec<Check>,
    pub graphs_total: usize,
    pub graphs_checked: usize,
    pub graphs_filtered: usize,
    pub per_check: Vec<CheckTally>,
    pub violations: Vec<ViolationCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Per-graph results, in source order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub graph6: String,
    pub class_member: bool,
    pub results: Vec<(Check, CheckOutcome)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepOutcome {
    pub report: SweepReport,
    pub records: Vec<GraphRecord>,
}

impl SweepOutcome {
    /// Columns `graph6,class_member,check,value_lhs,value_rhs,pass`. Graphs
    /// rejected by the filter get one row with the check fields left empty.
    pub fn to_csv(&self) -> String {
        let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        let mut out = String::from("graph6,class_member,check,value_lhs,value_rhs,pass\n");
        for r in &self.records {
            if r.results.is_empty() {
                out.push_str(&format!("{},{},,,,\n", r.graph6, r.class_member));
            }
            for (check, o) in &r.results {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    r.graph6,
                    r.class_member,
                    check,
                    opt(o.lhs),
                    opt(o.rhs),
                    o.pass
                ));
            }
        }
        out
    }
}

fn evaluate(g: &Graph, filter: Option<ClassName>, checks: &[Check]) -> GraphRecord {
    let class_member = filter.is_none_or(|c| in_class(g, c).member);
    let results = if class_member {
        checks.iter().map(|&c| (c, run_check(c, g))).collect()
    } else {
        Vec::new()
    };
    GraphRecord { graph6: g.to_graph6(), class_member, results }
}

/// Runs `checks` on every graph of `source` admitted by `filter`, using a pool
/// of `jobs` threads. Results do not depend on `jobs`.
pub fn sweep(
    source: &[Graph],
    corpus: &str,
    filter: Option<ClassName>,
    checks: &[Check],
    jobs: usize,
) -> Result<SweepOutcome> {
    let started = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::BadParams(format!("cannot start worker pool: {e}")))?;
    let records: Vec<GraphRecord> = pool.install(|| source.par_iter().map(|g| evaluate(g, filter, checks)).collect());

    let mut per_check: Vec<CheckTally> = checks.iter().map(|&check| CheckTally { check, pass: 0, fail: 0 }).collect();
    let mut violations = Vec::new();
    for r in &records {
        for (i, (check, o)) in r.results.iter().enumerate() {
            if o.pass {
                per_check[i].pass += 1;
            } else {
                per_check[i].fail += 1;
                violations.push(ViolationCertificate { graph6: r.graph6.clone(), check: *check, outcome: o.clone() });
            }
        }
    }
    let checked = records.iter().filter(|r| r.class_member).count();
    let report = SweepReport {
        schema_version: REPORT_SCHEMA_VERSION,
        corpus: corpus.to_string(),
        class_filter: filter,
        checks: checks.to_vec(),
        graphs_total: records.len(),
        graphs_checked: checked,
        graphs_filtered: records.len() - checked,
        per_check,
        violations,
        timing: Some(Timing { wall_seconds: started.elapsed().as_secs_f64(), jobs: jobs.max(1) }),
    };
    Ok(SweepOutcome { report, records })
}
