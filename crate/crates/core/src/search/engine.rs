//! Labeled edge-set enumeration with sound early cuts.
//!
//! Edge slots are visited in column order `(0,1), (0,2), (1,2), (0,3), ..` so that after the
//! last slot of column `j` the subgraph on `0..=j` is final. Each slot is decided
//! exclude-first. Three cuts are available, each only removing graphs that provably fail:
//!
//! * degree: vertex `v` cannot reach degree `l` with the slots it has left;
//! * chromatic prefix: the finished subgraph on `0..=j` already needs more than `k` colors;
//! * edge budget: the edge count cannot land on the requested value.

use crate::count::poly_raw;
use crate::graph::low_mask;
use crate::invariants::coloring::is_colorable;
use crate::invariants::connectivity::{is_connected, is_l_connected_small};

use super::Hypothesis;

/// Which cuts are active; all on by default.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Prune {
    pub degree: bool,
    pub chromatic_prefix: bool,
    pub edge_budget: bool,
}

impl Default for Prune {
    fn default() -> Self {
        Prune {
            degree: true,
            chromatic_prefix: true,
            edge_budget: true,
        }
    }
}

impl Prune {
    pub const NONE: Prune = Prune {
        degree: false,
        chromatic_prefix: false,
        edge_budget: false,
    };
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Family {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub hypothesis: Hypothesis,
    /// Restrict to graphs with exactly this many edges.
    pub edges: Option<usize>,
}

impl Family {
    /// Full hypothesis test, cheapest checks first.
    pub fn admits(&self, adj: &[u64]) -> bool {
        let n = self.n;
        let all = low_mask(n);
        if adj.iter().any(|&row| (row.count_ones() as usize) < self.l) {
            return false;
        }
        let conn = self.hypothesis == Hypothesis::Connectivity;
        if conn && (n <= self.l || (self.l >= 1 && !is_connected(adj, all))) {
            return false;
        }
        if !is_colorable(adj, all, self.k) || is_colorable(adj, all, self.k.saturating_sub(1)) {
            return false;
        }
        !(conn && self.l >= 2 && !is_l_connected_small(adj, n, self.l))
    }
}

pub(crate) struct Slots {
    pub pairs: Vec<(usize, usize)>,
    /// `Some(j)` when the slot closes column `j`.
    pub closes: Vec<Option<usize>>,
}

impl Slots {
    pub fn new(n: usize) -> Slots {
        let mut pairs = Vec::new();
        let mut closes = Vec::new();
        for j in 1..n {
            for i in 0..j {
                pairs.push((i, j));
                closes.push((i + 1 == j).then_some(j));
            }
        }
        Slots { pairs, closes }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }
}

/// Edge bitmask over slot indices to adjacency rows.
pub(crate) fn adjacency_of(slots: &Slots, n: usize, mask: u64) -> Vec<u64> {
    let mut adj = vec![0u64; n];
    for (s, &(i, j)) in slots.pairs.iter().enumerate() {
        if mask >> s & 1 == 1 {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
    }
    adj
}

/// A fixed assignment of the first `len` slots (bit `s` of `bits` decides slot `s`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Prefix {
    pub bits: u64,
    pub len: usize,
}

impl Prefix {
    pub const EMPTY: Prefix = Prefix { bits: 0, len: 0 };
}

pub(crate) const MAX_SEARCH_N: usize = 11;

/// What a visitor sees for each qualifying graph.
pub(crate) struct Leaf<'a> {
    pub adj: &'a [u64],
    pub mask: u64,
    pub edges: usize,
}

pub(crate) struct Walk<'a, F: FnMut(&Leaf<'_>)> {
    fam: Family,
    slots: &'a Slots,
    prune: Prune,
    prefix: Prefix,
    visit: F,
    adj: [u64; MAX_SEARCH_N],
    deg: [usize; MAX_SEARCH_N],
    rem: [usize; MAX_SEARCH_N],
    edges: usize,
    mask: u64,
    pub examined: u128,
    pub pruned: u128,
}

impl<'a, F: FnMut(&Leaf<'_>)> Walk<'a, F> {
    pub fn new(fam: Family, slots: &'a Slots, prune: Prune, prefix: Prefix, visit: F) -> Self {
        debug_assert!(fam.n <= MAX_SEARCH_N);
        let mut rem = [0; MAX_SEARCH_N];
        rem[..fam.n].fill(fam.n.saturating_sub(1));
        Walk {
            fam,
            slots,
            prune,
            prefix,
            visit,
            adj: [0; MAX_SEARCH_N],
            deg: [0; MAX_SEARCH_N],
            rem,
            edges: 0,
            mask: 0,
            examined: 0,
            pruned: 0,
        }
    }

    pub fn run(&mut self) {
        self.descend(0);
    }

    /// Labeled graphs of this partition below a node at depth `depth`.
    fn leaves_below(&self, depth: usize) -> u128 {
        1u128 << (self.slots.len() - depth.max(self.prefix.len))
    }

    fn feasible(&self, s: usize) -> bool {
        let (i, j) = self.slots.pairs[s];
        let l = self.fam.l;
        if self.prune.degree && (self.deg[i] + self.rem[i] < l || self.deg[j] + self.rem[j] < l) {
            return false;
        }
        if self.prune.edge_budget {
            if let Some(e) = self.fam.edges {
                let left = self.slots.len() - s - 1;
                if self.edges > e || self.edges + left < e {
                    return false;
                }
            }
        }
        if self.prune.chromatic_prefix {
            if let Some(col) = self.slots.closes[s] {
                if col + 1 > self.fam.k
                    && col + 1 < self.fam.n
                    && !is_colorable(&self.adj[..self.fam.n], low_mask(col + 1), self.fam.k)
                {
                    return false;
                }
            }
        }
        true
    }

    fn descend(&mut self, s: usize) {
        if s == self.slots.len() {
            self.leaf();
            return;
        }
        let (i, j) = self.slots.pairs[s];
        self.rem[i] -= 1;
        self.rem[j] -= 1;
        for take in [false, true] {
            if s < self.prefix.len && take != (self.prefix.bits >> s & 1 == 1) {
                continue;
            }
            if take {
                self.adj[i] |= 1 << j;
                self.adj[j] |= 1 << i;
                self.deg[i] += 1;
                self.deg[j] += 1;
                self.edges += 1;
                self.mask |= 1 << s;
            }
            if self.feasible(s) {
                self.descend(s + 1);
            } else {
                self.pruned += self.leaves_below(s + 1);
            }
            if take {
                self.adj[i] &= !(1 << j);
                self.adj[j] &= !(1 << i);
                self.deg[i] -= 1;
                self.deg[j] -= 1;
                self.edges -= 1;
                self.mask &= !(1 << s);
            }
        }
        self.rem[i] += 1;
        self.rem[j] += 1;
    }

    fn leaf(&mut self) {
        self.examined += 1;
        if self.fam.edges.is_some_and(|e| e != self.edges) {
            return;
        }
        let adj = &self.adj[..self.fam.n];
        if self.fam.admits(adj) {
            (self.visit)(&Leaf {
                adj,
                mask: self.mask,
                edges: self.edges,
            });
        }
    }
}

/// Independence polynomial of a leaf, as `u128` coefficients.
pub(crate) fn leaf_poly(adj: &[u64]) -> Vec<u128> {
    poly_raw(adj, low_mask(adj.len())).iter().map(|&c| u128::from(c)).collect()
}
