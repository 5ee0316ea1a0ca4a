//! Brute-force oracles that share no code with the library's solvers.
#![allow(dead_code)]

use hadlab::Graph;

pub fn adjacent(g: &Graph, u: usize, v: usize) -> bool {
    g.edges().contains(&(u.min(v), u.max(v)))
}

/// Adjacency matrix built from the edge list only.
pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let mut m = vec![vec![false; g.n()]; g.n()];
    for (u, v) in g.edges() {
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}

pub fn members(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

pub fn is_connected_mask(m: &[Vec<bool>], mask: u32) -> bool {
    let vs = members(mask);
    let Some(&start) = vs.first() else { return false };
    let mut seen = vec![start];
    let mut i = 0;
    while i < seen.len() {
        let u = seen[i];
        for &v in &vs {
            if m[u][v] && !seen.contains(&v) {
                seen.push(v);
            }
        }
        i += 1;
    }
    seen.len() == vs.len()
}

pub fn omega_oracle(g: &Graph) -> usize {
    let m = matrix(g);
    (0u32..(1 << g.n()))
        .filter(|&mask| {
            let vs = members(mask);
            vs.iter().all(|&a| vs.iter().all(|&b| a == b || m[a][b]))
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Smallest `k` admitting a proper colouring, by trying every assignment.
pub fn chi_oracle(g: &Graph) -> usize {
    let n = g.n();
    let edges = g.edges();
    (0..=n)
        .find(|&k| {
            if n == 0 {
                return true;
            }
            if k == 0 {
                return false;
            }
            let total = (k as u64).pow(n as u32);
            (0..total).any(|code| {
                let mut c = code;
                let colours: Vec<u64> = (0..n)
                    .map(|_| {
                        let x = c % k as u64;
                        c /= k as u64;
                        x
                    })
                    .collect();
                edges.iter().all(|&(u, v)| colours[u] != colours[v])
            })
        })
        .unwrap()
}

/// Largest number of pairwise disjoint, pairwise adjacent connected subsets
/// of size at most `m`, by exhaustive backtracking over all candidate sets.
pub fn had_m_oracle(g: &Graph, m: usize) -> usize {
    let adj = matrix(g);
    let sets: Vec<u32> = (1u32..(1 << g.n()))
        .filter(|&s| s.count_ones() as usize <= m && is_connected_mask(&adj, s))
        .collect();
    let touches = |a: u32, b: u32| members(a).iter().any(|&u| members(b).iter().any(|&v| adj[u][v]));
    fn go(i: usize, chosen: &mut Vec<u32>, sets: &[u32], touches: &dyn Fn(u32, u32) -> bool, best: &mut usize) {
        *best = (*best).max(chosen.len());
        for j in i..sets.len() {
            let s = sets[j];
            if chosen.iter().all(|&c| c & s == 0 && touches(c, s)) {
                chosen.push(s);
                go(j + 1, chosen, sets, touches, best);
                chosen.pop();
            }
        }
    }
    let mut best = 0;
    go(0, &mut Vec::new(), &sets, &touches, &mut best);
    best
}

/// Number of unlabelled graphs on `n` vertices by Burnside's lemma: the
/// average over all permutations of `2^(cycles on unordered pairs)`.
pub fn burnside_count(n: usize) -> u64 {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total: u64 = 0;
    let mut count: u64 = 0;
    loop {
        let mut seen = std::collections::HashSet::new();
        let mut cycles = 0u32;
        for a in 0..n {
            for b in (a + 1)..n {
                if seen.contains(&(a, b)) {
                    continue;
                }
                cycles += 1;
                let (mut x, mut y) = (a, b);
                loop {
                    seen.insert((x.min(y), x.max(y)));
                    x = perm[x];
                    y = perm[y];
                    if (x.min(y), x.max(y)) == (a, b) {
                        break;
                    }
                }
            }
        }
        total += 1u64 << cycles;
        count += 1;
        if !next_permutation(&mut perm) {
            break;
        }
    }
    total / count
}

pub fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let Some(i) = (0..p.len() - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// Number of isomorphism classes among all labelled graphs on `n` vertices,
/// using the least edge set over all relabellings as the class key.
pub fn labelled_class_count(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| ((a + 1)..n).map(move |b| (a, b))).collect();
    let mut perms = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        perms.push(p.clone());
        if !next_permutation(&mut p) {
            break;
        }
    }
    let index = |a: usize, b: usize| pairs.iter().position(|&e| e == (a.min(b), a.max(b))).unwrap();
    let images: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(a, b)| index(p[a], p[b])).collect())
        .collect();
    let mut keys = std::collections::HashSet::new();
    for mask in 0u64..(1 << pairs.len()) {
        let key = images
            .iter()
            .map(|img| {
                img.iter()
                    .enumerate()
                    .filter(|&(i, _)| mask >> i & 1 == 1)
                    .fold(0u64, |k, (_, &j)| k | 1 << j)
            })
            .min()
            .unwrap();
        keys.insert(key);
    }
    keys.len()
}

/// Whether some labelling of the vertices as rest, candle or base of a part
/// satisfies every candelabrum adjacency rule. Exhaustive, so `n <= 5`.
pub fn has_candelabrum_oracle(g: &Graph) -> bool {
    // Label 0 is rest; label x > 0 is part ceil(x/2), a candle when x is odd.
    let n = g.n();
    let m = matrix(g);
    let labels = n + 1;
    let mut assign = vec![0usize; n];
    loop {
        if candelabrum_ok(&m, &assign) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            assign[i] += 1;
            if assign[i] < 2 * labels - 1 {
                break;
            }
            assign[i] = 0;
            i += 1;
        }
    }
}

fn candelabrum_ok(m: &[Vec<bool>], assign: &[usize]) -> bool {
    let n = assign.len();
    let parts = assign.iter().map(|&a| a.div_ceil(2)).max().unwrap_or(0);
    if parts == 0 {
        return false;
    }
    let candle = |v: usize| assign[v] % 2 == 1;
    let part = |v: usize| assign[v].div_ceil(2);
    for p in 1..=parts {
        let has_y = (0..n).any(|v| part(v) == p && candle(v));
        let has_z = (0..n).any(|v| part(v) == p && assign[v] != 0 && !candle(v));
        if !has_y || !has_z {
            return false;
        }
    }
    for u in 0..n {
        for v in (u + 1)..n {
            let (a, b) = (assign[u], assign[v]);
            let need = match (a, b) {
                (0, 0) => None,
                (0, x) | (x, 0) => Some(x % 2 == 0),
                _ => {
                    let same = part(u) == part(v);
                    match (candle(u), candle(v), same) {
                        (true, true, true) => Some(true),
                        (true, true, false) => Some(false),
                        (false, false, true) => Some(false),
                        (false, false, false) => Some(true),
                        (_, _, true) => Some(true),
                        (_, _, false) => Some(false),
                    }
                }
            };
            if let Some(edge) = need {
                if m[u][v] != edge {
                    return false;
                }
            }
        }
    }
    true
}

/// All graphs on `n` labelled vertices, for `n <= 6`.
pub fn all_labelled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| ((a + 1)..n).map(move |b| (a, b))).collect();
    (0u64..(1 << pairs.len())).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}
