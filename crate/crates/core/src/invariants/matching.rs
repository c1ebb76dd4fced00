//! Maximum cardinality matching in general graphs (Edmonds' blossom algorithm).

use std::collections::VecDeque;

use crate::graph::bits;

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    adj: &'a [u64],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_tree: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl Blossom<'_> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Returns the free endpoint of an augmenting path from `root`, if one exists.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.in_tree.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.in_tree[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for to in bits(self.adj[v]) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.in_tree[i] {
                                self.in_tree[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.in_tree[next] = true;
                    queue.push_back(next);
                }
            }
        }
        None
    }
}

/// Edges of a maximum matching, each as `(u, v)` with `u < v`, sorted.
pub(crate) fn maximum_matching(adj: &[u64]) -> Vec<(usize, usize)> {
    let n = adj.len();
    let mut b = Blossom {
        adj,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        in_tree: vec![false; n],
        in_blossom: vec![false; n],
    };
    // greedy start
    for v in 0..n {
        if b.mate[v] == NONE {
            if let Some(u) = bits(adj[v]).find(|&u| b.mate[u] == NONE) {
                b.mate[v] = u;
                b.mate[u] = v;
            }
        }
    }
    for v in 0..n {
        if b.mate[v] != NONE {
            continue;
        }
        if let Some(mut u) = b.find_path(v) {
            while u != NONE {
                let pv = b.parent[u];
                let ppv = b.mate[pv];
                b.mate[u] = pv;
                b.mate[pv] = u;
                u = ppv;
            }
        }
    }
    (0..n)
        .filter(|&v| b.mate[v] != NONE && v < b.mate[v])
        .map(|v| (v, b.mate[v]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn odd_cycle() {
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(maximum_matching(c5.adjacency()).len(), 2);
    }

    #[test]
    fn needs_blossom() {
        // triangle 0-1-2 with pendants 3 on 0 and 4 on 1 and a path 2-5-6
        let g = Graph::new(7, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5), (5, 6)]).unwrap();
        let m = maximum_matching(g.adjacency());
        assert_eq!(m.len(), 3);
        for &(u, v) in &m {
            assert!(g.has_edge(u, v));
        }
        // Petersen graph has a perfect matching
        let mut e = vec![];
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        let p = Graph::new(10, &e).unwrap();
        assert_eq!(maximum_matching(p.adjacency()).len(), 5);
    }
}
