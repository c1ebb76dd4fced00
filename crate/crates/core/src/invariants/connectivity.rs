//! Connectedness, components and vertex connectivity.

use std::collections::VecDeque;

use crate::graph::{bit, bits, low_mask};

/// Vertices reachable from the lowest vertex of `verts` inside `verts`.
#[inline]
fn reach_from_lowest(adj: &[u64], verts: u64) -> u64 {
    let mut seen = verts & verts.wrapping_neg();
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        for v in bits(frontier) {
            next |= adj[v];
        }
        next &= verts & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

/// Whether the subgraph induced by `verts` is connected. The empty set counts as connected.
#[inline]
pub(crate) fn is_connected(adj: &[u64], verts: u64) -> bool {
    verts == 0 || reach_from_lowest(adj, verts) == verts
}

/// Vertex masks of the connected components of the subgraph induced by `verts`.
pub(crate) fn components(adj: &[u64], mut verts: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while verts != 0 {
        let c = reach_from_lowest(adj, verts);
        out.push(c);
        verts &= !c;
    }
    out
}

/// `l`-connectivity test by exhausting vertex subsets of size `l - 1`.
///
/// For `n > l`, a separator smaller than `l - 1` can always be padded to size `l - 1`
/// while leaving both sides non-empty, so fixed-size subsets suffice. Only meant for
/// the small orders used by the exhaustive search.
pub(crate) fn is_l_connected_small(adj: &[u64], n: usize, l: usize) -> bool {
    if n <= l {
        return false;
    }
    let all = low_mask(n);
    if l == 0 {
        return true;
    }
    if !is_connected(adj, all) {
        return false;
    }
    let r = l - 1;
    if r == 0 {
        return true;
    }
    // Gosper's hack over r-subsets of 0..n
    let mut s: u64 = low_mask(r);
    let limit = bit(n);
    while s < limit {
        if !is_connected(adj, all & !s) {
            return false;
        }
        let c = s & s.wrapping_neg();
        let rr = s + c;
        s = (((rr ^ s) >> 2) / c) | rr;
    }
    true
}

/// Maximum number of internally vertex-disjoint `s`-`t` paths for non-adjacent `s`, `t`,
/// by unit-capacity augmenting paths on the vertex-split digraph.
pub(crate) fn local_connectivity(adj: &[u64], s: usize, t: usize) -> usize {
    let n = adj.len();
    debug_assert!(s != t && adj[s] & bit(t) == 0);
    // node 2v is v_in, 2v+1 is v_out
    let m = 2 * n;
    let big = n as i32 + 1;
    let mut cap = vec![0i32; m * m];
    for v in 0..n {
        cap[(2 * v) * m + 2 * v + 1] = if v == s || v == t { big } else { 1 };
        for u in bits(adj[v]) {
            cap[(2 * v + 1) * m + 2 * u] = big;
        }
    }
    let source = 2 * s + 1;
    let sink = 2 * t;
    let mut flow = 0;
    let mut prev = vec![usize::MAX; m];
    let mut queue = VecDeque::with_capacity(m);
    loop {
        prev.fill(usize::MAX);
        prev[source] = source;
        queue.clear();
        queue.push_back(source);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for y in 0..m {
                if prev[y] == usize::MAX && cap[x * m + y] > 0 {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[sink] == usize::MAX {
            return flow;
        }
        let mut y = sink;
        while y != source {
            let x = prev[y];
            cap[x * m + y] -= 1;
            cap[y * m + x] += 1;
            y = x;
        }
        flow += 1;
    }
}

/// Exact vertex connectivity with `κ(K_n) = n - 1` and `κ = 0` for disconnected graphs.
///
/// Some minimum separator misses one of the first `κ + 1` vertices; taking the lowest such
/// vertex `v_i`, every vertex on the far side of the cut has a larger index, so only pairs
/// `(i, j)` with `i ≤ current bound` and `j > i` need a flow computation.
pub(crate) fn vertex_connectivity(adj: &[u64]) -> usize {
    let n = adj.len();
    let all = low_mask(n);
    if !is_connected(adj, all) {
        return 0;
    }
    let mut best = n - 1;
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if adj[i] & bit(j) == 0 {
                best = best.min(local_connectivity(adj, i, j));
            }
        }
        i += 1;
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &e).unwrap()
    }

    #[test]
    fn cycles_and_paths() {
        assert_eq!(vertex_connectivity(cycle(6).adjacency()), 2);
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(vertex_connectivity(p4.adjacency()), 1);
        assert!(is_l_connected_small(cycle(6).adjacency(), 6, 2));
        assert!(!is_l_connected_small(cycle(6).adjacency(), 6, 3));
        assert!(!is_l_connected_small(p4.adjacency(), 4, 2));
    }

    #[test]
    fn disconnected_and_trivial() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(vertex_connectivity(g.adjacency()), 0);
        assert_eq!(components(g.adjacency(), low_mask(4)), vec![0b0011, 0b1100]);
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(vertex_connectivity(k1.adjacency()), 0);
        assert!(!is_l_connected_small(k1.adjacency(), 1, 1));
    }

    #[test]
    fn local_paths_in_biclique() {
        // K_{3,4}: two vertices on the small side have 4 disjoint paths between them
        let mut e = vec![];
        for a in 0..3 {
            for b in 3..7 {
                e.push((a, b));
            }
        }
        let g = Graph::new(7, &e).unwrap();
        assert_eq!(local_connectivity(g.adjacency(), 0, 1), 4);
        assert_eq!(local_connectivity(g.adjacency(), 3, 4), 3);
        assert_eq!(vertex_connectivity(g.adjacency()), 3);
    }
}
