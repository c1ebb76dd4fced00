//! Canonical labeling by partition refinement plus individualization search.
//!
//! The search tree branches on the first non-singleton cell of the refined ordered
//! partition. Vertices of that cell that are twins of an already tried vertex are skipped:
//! swapping two twins is an automorphism fixing every other vertex, so their subtrees yield
//! identical leaf encodings. The encoding kept is the lexicographically largest adjacency
//! row sequence over all leaves.

use std::fmt;

use crate::format::to_graph6;
use crate::graph::{bit, bits, Graph};

/// Labeling-independent encoding: the graph6 bytes of the canonically relabeled graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        // graph6 output is ASCII
        std::str::from_utf8(&self.0).expect("canonical form is graph6 text")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.as_str())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm(to_graph6(&canonical_graph(g)).into_bytes())
}

/// The canonical representative of the isomorphism class of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    let perm = canonical_labeling(g);
    g.relabel(&perm)
}

/// Returns `perm` with `perm[v]` the canonical label of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let mut search = Search {
        adj: g.adjacency(),
        best_rows: Vec::new(),
        best_perm: Vec::new(),
    };
    let start = vec![(0..g.n()).collect::<Vec<_>>()];
    search.descend(start);
    search.best_perm
}

type Partition = Vec<Vec<usize>>;

struct Search<'a> {
    adj: &'a [u64],
    best_rows: Vec<u64>,
    best_perm: Vec<usize>,
}

impl Search<'_> {
    fn descend(&mut self, partition: Partition) {
        let partition = refine(self.adj, partition);
        let Some(target) = partition.iter().position(|c| c.len() > 1) else {
            self.leaf(&partition);
            return;
        };

        let cell = &partition[target];
        let mut tried: Vec<usize> = Vec::with_capacity(cell.len());
        for &v in cell {
            if tried.iter().any(|&u| are_twins(self.adj, u, v)) {
                continue;
            }
            tried.push(v);
            let mut next = Vec::with_capacity(partition.len() + 1);
            next.extend_from_slice(&partition[..target]);
            next.push(vec![v]);
            next.push(cell.iter().copied().filter(|&u| u != v).collect());
            next.extend_from_slice(&partition[target + 1..]);
            self.descend(next);
        }
    }

    fn leaf(&mut self, partition: &Partition) {
        let n = self.adj.len();
        let mut perm = vec![0usize; n];
        for (label, cell) in partition.iter().enumerate() {
            perm[cell[0]] = label;
        }
        let mut rows = vec![0u64; n];
        for v in 0..n {
            rows[perm[v]] = bits(self.adj[v]).fold(0u64, |acc, u| acc | bit(perm[u]));
        }
        if self.best_perm.is_empty() || rows > self.best_rows {
            self.best_rows = rows;
            self.best_perm = perm;
        }
    }
}

/// `u` and `v` have the same neighbors apart from each other.
fn are_twins(adj: &[u64], u: usize, v: usize) -> bool {
    adj[u] & !bit(v) == adj[v] & !bit(u)
}

/// Equitable refinement: repeatedly split every cell by the vector of neighbor counts into
/// all current cells, ordering sub-cells by that vector, until nothing splits.
fn refine(adj: &[u64], mut partition: Partition) -> Partition {
    loop {
        let masks: Vec<u64> = partition
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | bit(v)))
            .collect();
        let mut next: Partition = Vec::with_capacity(partition.len());
        let mut split = false;
        for cell in &partition {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let sig = masks.iter().map(|&m| (adj[v] & m).count_ones()).collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    split |= start > 0 || i < keyed.len();
                    start = i;
                }
            }
        }
        // sub-cells keep the vertex order of their parent so refinement is deterministic
        for c in &mut next {
            c.sort_unstable();
        }
        if !split {
            return next;
        }
        partition = next;
    }
}
