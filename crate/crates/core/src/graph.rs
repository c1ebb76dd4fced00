//! Immutable simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one 64-bit neighbor mask per vertex, so vertex sets are single
//! machine words and most set algebra is a handful of bit operations.

use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

#[inline(always)]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the low `n` bits set.
#[inline(always)]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(u64);

impl Iterator for Bits {
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
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub(crate) fn bits(mask: u64) -> Bits {
    Bits(mask)
}

/// A set of vertex indices, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// The set `{0, .., n-1}`.
    pub const fn first(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    pub fn singleton(v: usize) -> Self {
        assert!(v < MAX_VERTICES);
        VertexSet(bit(v))
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & bit(v) != 0
    }

    #[must_use]
    pub fn with(self, v: usize) -> Self {
        assert!(v < MAX_VERTICES);
        VertexSet(self.0 | bit(v))
    }

    #[must_use]
    pub fn without(self, v: usize) -> Self {
        if v < MAX_VERTICES {
            VertexSet(self.0 & !bit(v))
        } else {
            self
        }
    }

    #[must_use]
    pub const fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[must_use]
    pub const fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[must_use]
    pub const fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::EMPTY, VertexSet::with)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Simple undirected graph on `1..=64` vertices.
///
/// Invariants: adjacency is symmetric, loop-free, and no mask has bits at positions `>= n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: SmallVec<[u64; 16]>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate and reversed pairs collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        check_order(n)?;
        let mut adj: SmallVec<[u64; 16]> = SmallVec::from_elem(0, n);
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        Ok(Graph { n, adj })
    }

    /// Builds a graph from neighbor masks, rejecting anything that violates the invariants.
    pub fn from_adjacency(adj: &[u64]) -> Result<Graph> {
        let n = adj.len();
        check_order(n)?;
        let outside = !low_mask(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & bit(v) != 0 {
                return Err(Error::LoopEdge(v));
            }
            if row & outside != 0 {
                let w = (row & outside).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
            for u in bits(row) {
                if adj[u] & bit(v) == 0 {
                    return Err(Error::Graph6(format!(
                        "asymmetric adjacency between {v} and {u}"
                    )));
                }
            }
        }
        Ok(Graph {
            n,
            adj: SmallVec::from_slice(adj),
        })
    }

    /// Caller guarantees the invariants; checked in debug builds.
    pub(crate) fn from_adjacency_unchecked(adj: &[u64]) -> Graph {
        let g = Graph {
            n: adj.len(),
            adj: SmallVec::from_slice(adj),
        };
        debug_assert!(g.is_valid());
        g
    }

    pub fn empty(n: usize) -> Result<Graph> {
        Graph::new(n, &[])
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::first(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// True iff no edge has both endpoints in `s`.
    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.0 == 0)
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(VertexSet(self.adj[v] | bit(v)))
    }

    /// Induced subgraph on the complement of `s`, relabeled `0..` in the original order.
    pub fn delete_vertices(&self, s: VertexSet) -> Result<Graph> {
        if let Some(v) = s.difference(self.vertices()).iter().next() {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        self.induced(self.vertices().difference(s))
    }

    /// Induced subgraph on `keep`, relabeled `0..|keep|` preserving relative order.
    pub fn induced(&self, keep: VertexSet) -> Result<Graph> {
        let keep = keep.intersection(self.vertices());
        if keep.is_empty() {
            return Err(Error::EmptyResult);
        }
        let kept: SmallVec<[usize; 16]> = keep.iter().collect();
        let adj: SmallVec<[u64; 16]> = kept
            .iter()
            .map(|&v| compress(self.adj[v] & keep.0, keep.0))
            .collect();
        Ok(Graph { n: kept.len(), adj })
    }

    /// Relabels vertex `v` to `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut adj: SmallVec<[u64; 16]> = SmallVec::from_elem(0, self.n);
        for v in 0..self.n {
            let mut row = 0u64;
            for u in bits(self.adj[v]) {
                row |= bit(perm[u]);
            }
            adj[perm[v]] = row;
        }
        Graph { n: self.n, adj }
    }

    pub fn complement(&self) -> Graph {
        let all = low_mask(self.n);
        let adj = (0..self.n).map(|v| !self.adj[v] & all & !bit(v)).collect();
        Graph { n: self.n, adj }
    }

    /// Checks symmetry, absence of loops and that no bits lie outside `0..n`.
    pub fn is_valid(&self) -> bool {
        if self.n == 0 || self.n > MAX_VERTICES || self.adj.len() != self.n {
            return false;
        }
        let outside = !low_mask(self.n);
        (0..self.n).all(|v| {
            let row = self.adj[v];
            row & bit(v) == 0
                && row & outside == 0
                && bits(row).all(|u| self.adj[u] & bit(v) != 0)
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VERTICES {
        Err(Error::VertexCount(n))
    } else {
        Ok(())
    }
}

/// Packs the bits of `x` selected by `keep` into the low bits, preserving order.
fn compress(x: u64, keep: u64) -> u64 {
    let mut out = 0u64;
    for (i, v) in bits(keep).enumerate() {
        if x & bit(v) != 0 {
            out |= bit(i);
        }
    }
    out
}
