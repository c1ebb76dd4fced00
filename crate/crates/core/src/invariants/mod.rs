//! Exact graph parameters: chromatic number, vertex connectivity, minimum degree, matching
//! number, component count and criticality.

pub(crate) mod coloring;
pub(crate) mod connectivity;
pub(crate) mod matching;

use serde::Serialize;

use crate::graph::{bit, Graph, VertexSet};

pub fn chromatic_number(g: &Graph) -> usize {
    coloring::chromatic_number(g.adjacency(), g.vertices().bits())
}

pub fn is_colorable(g: &Graph, k: usize) -> bool {
    coloring::is_colorable(g.adjacency(), g.vertices().bits(), k)
}

pub fn clique_number(g: &Graph) -> usize {
    coloring::clique_number(g.adjacency(), g.vertices().bits())
}

/// Vertex connectivity. `K_n` is `(n-1)`-connected, a disconnected graph is 0-connected.
pub fn vertex_connectivity(g: &Graph) -> usize {
    connectivity::vertex_connectivity(g.adjacency())
}

/// `|V| > l` and deleting fewer than `l` vertices never disconnects the graph.
pub fn is_l_connected(g: &Graph, l: usize) -> bool {
    g.n() > l && vertex_connectivity(g) >= l
}

pub fn is_connected(g: &Graph) -> bool {
    connectivity::is_connected(g.adjacency(), g.vertices().bits())
}

pub fn min_degree(g: &Graph) -> usize {
    (0..g.n()).map(|v| g.degree(v)).min().unwrap_or(0)
}

pub fn max_matching(g: &Graph) -> usize {
    matching::maximum_matching(g.adjacency()).len()
}

/// Edges of one maximum matching.
pub fn maximum_matching(g: &Graph) -> Vec<(usize, usize)> {
    matching::maximum_matching(g.adjacency())
}

pub fn component_count(g: &Graph) -> usize {
    connectivity::components(g.adjacency(), g.vertices().bits()).len()
}

pub fn components(g: &Graph) -> Vec<VertexSet> {
    connectivity::components(g.adjacency(), g.vertices().bits())
        .into_iter()
        .map(VertexSet::from_bits)
        .collect()
}

/// `χ(g) = k` and every proper subgraph is `(k-1)`-colorable.
///
/// Both single-vertex and single-edge deletions are checked.
pub fn is_k_critical(g: &Graph, k: usize) -> bool {
    let adj = g.adjacency();
    let all = g.vertices().bits();
    if coloring::chromatic_number(adj, all) != k {
        return false;
    }
    let vertex_ok =
        (0..g.n()).all(|v| coloring::is_colorable(adj, all & !bit(v), k.saturating_sub(1)));
    if !vertex_ok {
        return false;
    }
    let mut scratch = adj.to_vec();
    g.edges().into_iter().all(|(u, v)| {
        scratch[u] &= !bit(v);
        scratch[v] &= !bit(u);
        let ok = coloring::is_colorable(&scratch, all, k.saturating_sub(1));
        scratch[u] |= bit(v);
        scratch[v] |= bit(u);
        ok
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub chromatic: usize,
    pub connectivity: usize,
    pub min_degree: usize,
    pub max_matching: usize,
    pub components: usize,
    pub is_k_critical: bool,
}

impl InvariantReport {
    /// Computes every field. Criticality is tested against `k`, defaulting to `χ(g)`.
    pub fn compute(g: &Graph, k: Option<usize>) -> InvariantReport {
        let chromatic = chromatic_number(g);
        let k = k.unwrap_or(chromatic);
        InvariantReport {
            chromatic,
            connectivity: vertex_connectivity(g),
            min_degree: min_degree(g),
            max_matching: max_matching(g),
            components: component_count(g),
            is_k_critical: chromatic == k && is_k_critical(g, k),
        }
    }
}
