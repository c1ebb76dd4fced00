//! Slow reference implementations used as test oracles. Nothing here shares code with the
//! library beyond `Graph` itself.
#![allow(dead_code)]

use std::collections::BTreeSet;

use extremal_core::canon::canonical_form;
use extremal_core::Graph;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for j in 1..n {
        for i in 0..j {
            out.push((i, j));
        }
    }
    out
}

/// The labeled graph whose edges are the set bits of `mask` over [`pairs`].
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges: Vec<_> = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(s, _)| mask >> s & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::new(n, &edges).unwrap()
}

pub fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    let s = n * (n.saturating_sub(1)) / 2;
    (0..1u64 << s).map(move |m| graph_from_mask(n, m))
}

/// One graph per isomorphism class on `n` vertices, by vertex extension.
pub fn all_unlabeled(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(1).unwrap()];
    for m in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &level {
            for nb in 0..1u64 << (m - 1) {
                let mut edges = g.edges();
                edges.extend((0..m - 1).filter(|&v| nb >> v & 1 == 1).map(|v| (v, m - 1)));
                let h = Graph::new(m, &edges).unwrap();
                if seen.insert(canonical_form(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    Graph::new(n, &edges).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let edges: Vec<_> = pairs(n).into_iter().zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn adj_matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut a = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

fn subset_independent(a: &[Vec<bool>], s: u64) -> bool {
    let n = a.len();
    (0..n).all(|u| s >> u & 1 == 0 || (u + 1..n).all(|v| s >> v & 1 == 0 || !a[u][v]))
}

/// `i_t` for every `t`, by checking all `2^n` subsets.
pub fn bf_poly(g: &Graph) -> Vec<u64> {
    let a = adj_matrix(g);
    let mut c = vec![0u64; g.n() + 1];
    for s in 0..1u64 << g.n() {
        if subset_independent(&a, s) {
            c[s.count_ones() as usize] += 1;
        }
    }
    while c.len() > 1 && *c.last().unwrap() == 0 {
        c.pop();
    }
    c
}

pub fn bf_total(g: &Graph) -> u64 {
    bf_poly(g).iter().sum()
}

/// Fewest independent sets covering the vertices, by dynamic programming over subsets.
pub fn bf_chromatic(g: &Graph) -> usize {
    let n = g.n();
    let a = adj_matrix(g);
    let full = (1u64 << n) - 1;
    let mut best = vec![usize::MAX; 1 << n];
    best[0] = 0;
    for mask in 1..=full {
        let low = mask.trailing_zeros();
        let rest = mask & !(1 << low);
        // independent subsets of `mask` containing its lowest vertex
        let mut sub = rest;
        loop {
            let s = sub | 1 << low;
            if subset_independent(&a, s) && best[(mask & !s) as usize] != usize::MAX {
                best[mask as usize] = best[mask as usize].min(best[(mask & !s) as usize] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    best[full as usize]
}

fn connected_within(a: &[Vec<bool>], keep: u64) -> bool {
    if keep == 0 {
        return true;
    }
    let start = keep.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for (u, &e) in a[v].iter().enumerate() {
            if e && keep >> u & 1 == 1 && seen >> u & 1 == 0 {
                seen |= 1 << u;
                stack.push(u);
            }
        }
    }
    seen == keep
}

/// Smallest vertex set whose removal disconnects the graph; `n-1` for complete graphs.
pub fn bf_connectivity(g: &Graph) -> usize {
    let n = g.n();
    let a = adj_matrix(g);
    let full = (1u64 << n) - 1;
    let mut best = n - 1;
    for s in 0..=full {
        let size = s.count_ones() as usize;
        if size < best && n - size >= 2 && !connected_within(&a, full & !s) {
            best = size;
        }
    }
    best
}

pub fn bf_components(g: &Graph) -> usize {
    let a = adj_matrix(g);
    let mut left = (1u64 << g.n()) - 1;
    let mut count = 0;
    while left != 0 {
        let start = left.trailing_zeros() as usize;
        let mut stack = vec![start];
        left &= !(1 << start);
        while let Some(v) = stack.pop() {
            for (u, &e) in a[v].iter().enumerate() {
                if e && left >> u & 1 == 1 {
                    left &= !(1 << u);
                    stack.push(u);
                }
            }
        }
        count += 1;
    }
    count
}

/// Maximum matching by trying every choice for the lowest remaining vertex.
pub fn bf_matching(g: &Graph) -> usize {
    fn go(a: &[Vec<bool>], left: u64) -> usize {
        if left == 0 {
            return 0;
        }
        let v = left.trailing_zeros() as usize;
        let rest = left & !(1 << v);
        let mut best = go(a, rest);
        for u in 0..a.len() {
            if a[v][u] && rest >> u & 1 == 1 {
                best = best.max(1 + go(a, rest & !(1 << u)));
            }
        }
        best
    }
    go(&adj_matrix(g), (1u64 << g.n()) - 1)
}

pub fn bf_min_degree(g: &Graph) -> usize {
    let a = adj_matrix(g);
    a.iter().map(|r| r.iter().filter(|&&e| e).count()).min().unwrap()
}

/// Every proper subgraph is `(k-1)`-colorable: delete each edge and each vertex.
pub fn bf_is_k_critical(g: &Graph, k: usize) -> bool {
    if bf_chromatic(g) != k {
        return false;
    }
    let edges = g.edges();
    let edge_ok = (0..edges.len()).all(|i| {
        let rest: Vec<_> = edges.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &e)| e).collect();
        bf_chromatic(&Graph::new(g.n(), &rest).unwrap()) < k
    });
    let vertex_ok = g.n() == 1
        || (0..g.n()).all(|v| {
            let keep: Vec<usize> = (0..g.n()).filter(|&u| u != v).collect();
            let idx = |x: usize| keep.iter().position(|&u| u == x).unwrap();
            let rest: Vec<_> = edges
                .iter()
                .filter(|&&(a, b)| a != v && b != v)
                .map(|&(a, b)| (idx(a), idx(b)))
                .collect();
            bf_chromatic(&Graph::new(g.n() - 1, &rest).unwrap()) < k
        });
    edge_ok && vertex_ok
}

pub fn binom(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Relabels `g` so that old vertex `v` becomes `perm[v]`.
pub fn permute(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<_> = g.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::new(g.n(), &edges).unwrap()
}

/// Every permutation of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else { return out };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        out.push(p.clone());
    }
}
