//! Dense bit matrices of arbitrary order and an exact maximum clique search
//! over them. The 32-vertex [`Graph`](crate::graph::Graph) type converts into
//! this form; blob graphs are built in it directly.

use crate::graph::Graph;

pub type Bits = Vec<u64>;

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

pub fn bits_empty(n: usize) -> Bits {
    vec![0; words_for(n)]
}

pub fn bits_full(n: usize) -> Bits {
    let mut b = bits_empty(n);
    for v in 0..n {
        bits_insert(&mut b, v);
    }
    b
}

#[inline]
pub fn bits_insert(b: &mut [u64], v: usize) {
    b[v / 64] |= 1u64 << (v % 64);
}

#[inline]
pub fn bits_remove(b: &mut [u64], v: usize) {
    b[v / 64] &= !(1u64 << (v % 64));
}

#[inline]
pub fn bits_contains(b: &[u64], v: usize) -> bool {
    b[v / 64] & (1u64 << (v % 64)) != 0
}

#[inline]
pub fn bits_count(b: &[u64]) -> usize {
    b.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub fn bits_is_empty(b: &[u64]) -> bool {
    b.iter().all(|&w| w == 0)
}

pub fn bits_first(b: &[u64]) -> Option<usize> {
    b.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

pub fn bits_and(a: &[u64], b: &[u64]) -> Bits {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

pub fn bits_iter(b: &[u64]) -> impl Iterator<Item = usize> + '_ {
    b.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + t)
            }
        })
    })
}

/// Symmetric adjacency matrix with one bit row per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    n: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let words = words_for(n);
        BitMatrix {
            n,
            words,
            data: vec![0; n * words],
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        let mut m = BitMatrix::new(g.n());
        for (u, v) in g.edges() {
            m.add_edge(u, v);
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        let w = self.words;
        bits_insert(&mut self.data[u * w..(u + 1) * w], v);
        bits_insert(&mut self.data[v * w..(v + 1) * w], u);
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.data[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits_contains(self.row(u), v)
    }

    /// Size of a maximum clique inside `candidates`.
    pub fn max_clique_size(&self, candidates: &[u64]) -> usize {
        self.max_clique(candidates).len()
    }

    /// Some maximum clique inside `candidates` (branch and bound with a
    /// greedy colouring bound).
    pub fn max_clique(&self, candidates: &[u64]) -> Vec<usize> {
        let mut best = Vec::new();
        let mut current = Vec::new();
        if !bits_is_empty(candidates) {
            self.expand(&mut current, candidates.to_vec(), &mut best);
        }
        best
    }

    fn expand(&self, current: &mut Vec<usize>, mut candidates: Bits, best: &mut Vec<usize>) {
        let (order, bounds) = self.colour_order(&candidates);
        for idx in (0..order.len()).rev() {
            if current.len() + bounds[idx] <= best.len() {
                return;
            }
            let v = order[idx];
            current.push(v);
            let next = bits_and(&candidates, self.row(v));
            if bits_is_empty(&next) {
                if current.len() > best.len() {
                    best.clone_from(current);
                }
            } else {
                self.expand(current, next, best);
            }
            current.pop();
            bits_remove(&mut candidates, v);
        }
    }

    /// Greedy sequential colouring of `candidates`; `bounds[i]` is the colour
    /// of `order[i]` and bounds the clique size among `order[..=i]`.
    fn colour_order(&self, candidates: &[u64]) -> (Vec<usize>, Vec<usize>) {
        let mut uncoloured = candidates.to_vec();
        let mut order = Vec::with_capacity(bits_count(candidates));
        let mut bounds = Vec::with_capacity(order.capacity());
        let mut colour = 0;
        while !bits_is_empty(&uncoloured) {
            colour += 1;
            let mut class = uncoloured.clone();
            while let Some(v) = bits_first(&class) {
                bits_remove(&mut uncoloured, v);
                bits_remove(&mut class, v);
                for (c, r) in class.iter_mut().zip(self.row(v)) {
                    *c &= !r;
                }
                order.push(v);
                bounds.push(colour);
            }
        }
        (order, bounds)
    }

    /// The maximum clique inside `candidates` whose ascending vertex list is
    /// lexicographically least.
    pub fn lex_least_max_clique(&self, candidates: &[u64]) -> Vec<usize> {
        let target = self.max_clique_size(candidates);
        let mut chosen = Vec::with_capacity(target);
        let mut pool = candidates.to_vec();
        while chosen.len() < target {
            let v = bits_first(&pool).expect("a clique of the target size remains");
            bits_remove(&mut pool, v);
            let next = bits_and(&pool, self.row(v));
            if 1 + self.max_clique_size(&next) + chosen.len() >= target {
                chosen.push(v);
                pool = next;
            }
        }
        chosen
    }
}
