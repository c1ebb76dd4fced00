//! Named graph families and the extremal constructions, built from join and union.
//!
//! Vertex layouts are fixed so callers can address named parts:
//!
//! * `gstar`, `k <= l`: `0..k-1` is `K_{k-1}`, `k-1..l` is `E_{l-k+1}`, `l..n` is `E_{n-l}`.
//! * `gstar`, `k > l`: `0..l` is `K_l`, `l..k` is `K_{k-l}`, `k..n` is `E_{n-k}`.
//! * both minimum-edge constructions: `0..k` is `K_k` (vertices `v_1..v_k`), `k..n` is the
//!   other side (`w_1..w_{n-k}` in circle order).
//! * `theta`: 0 and 1 are the hubs, then the internal vertices of each path in turn.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, Graph, MAX_VERTICES};

pub const GSTAR: &str = "extremal graph G*";
pub const MIN_EDGES_SMALL: &str = "minimum-edge theorem (k-1 > l > 1, l <= n-k)";
pub const MIN_EDGES_LARGE: &str = "minimum-edge theorem (k-1 > l > 1, l > n-k)";
pub const HARARY: &str = "Harary graph";
pub const THETA: &str = "theta graph";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Regime {
    #[serde(rename = "K_LE_L")]
    KLeL,
    #[serde(rename = "K_GT_L")]
    KGtL,
    #[serde(rename = "MINEDGE_SMALL_L")]
    MinEdgeSmallL,
    #[serde(rename = "MINEDGE_LARGE_L")]
    MinEdgeLargeL,
}

/// A validated `(n, k, l)` triple tagged with the parameter regime it satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FamilyParams {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub regime: Regime,
}

impl FamilyParams {
    pub fn new(n: usize, k: usize, l: usize, regime: Regime) -> Result<FamilyParams> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let (result, ok, need) = match regime {
            Regime::KLeL => (GSTAR, 2 <= k && k <= l && n > l, "2 <= k <= l and n >= l+1"),
            Regime::KGtL => (GSTAR, l >= 1 && k > l && n >= k, "k > l >= 1 and n >= k"),
            Regime::MinEdgeSmallL => (
                MIN_EDGES_SMALL,
                l > 1 && k > l + 1 && n >= k + l,
                "k-1 > l > 1 and l <= n-k",
            ),
            Regime::MinEdgeLargeL => (
                MIN_EDGES_LARGE,
                l > 1 && k > l + 1 && n > k && n < k + l,
                "k-1 > l > 1, l > n-k and n > k",
            ),
        };
        if !ok {
            return Err(Error::hypothesis(
                result,
                format!("(n, k, l) = ({n}, {k}, {l}) violates {need}"),
            ));
        }
        Ok(FamilyParams { n, k, l, regime })
    }

    /// G* parameters, choosing the regime from `k` and `l`.
    pub fn gstar(n: usize, k: usize, l: usize) -> Result<FamilyParams> {
        let regime = if k <= l { Regime::KLeL } else { Regime::KGtL };
        FamilyParams::new(n, k, l, regime)
    }

    /// Minimum-edge construction parameters, choosing the regime from `l` versus `n - k`.
    pub fn min_edges(n: usize, k: usize, l: usize) -> Result<FamilyParams> {
        let regime = if n >= k + l {
            Regime::MinEdgeSmallL
        } else {
            Regime::MinEdgeLargeL
        };
        FamilyParams::new(n, k, l, regime)
    }

    pub fn is_gstar(&self) -> bool {
        matches!(self.regime, Regime::KLeL | Regime::KGtL)
    }

    /// Vertex connectivity of G* from the join formula
    /// `κ(A ∨ B) = min(κ(A) + |B|, κ(B) + |A|)`: `min(l, n-l)` when `k <= l`; when `k > l`
    /// it is `l` unless `n = k`, where G* is `K_k`.
    pub fn gstar_connectivity(&self) -> Option<usize> {
        match self.regime {
            Regime::KLeL => Some(self.l.min(self.n - self.l)),
            Regime::KGtL if self.n > self.k => Some(self.l),
            Regime::KGtL => Some(self.k - 1),
            _ => None,
        }
    }

    /// Whether G* itself is `k`-chromatic and `l`-connected for these parameters.
    pub fn gstar_in_family(&self) -> bool {
        self.gstar_connectivity().is_some_and(|c| c >= self.l)
    }
}

/// Edge lengths of the three hub-to-hub paths of a theta graph, stored sorted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ThetaParams {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl ThetaParams {
    pub fn new(a: usize, b: usize, c: usize) -> Result<ThetaParams> {
        let mut p = [a, b, c];
        p.sort_unstable();
        let [a, b, c] = p;
        if a == 0 {
            return Err(Error::hypothesis(THETA, "path lengths must be at least 1"));
        }
        if b == 1 {
            return Err(Error::hypothesis(
                THETA,
                "at most one path may have length 1 (two would be parallel edges)",
            ));
        }
        let n = a + b + c - 1;
        if n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        Ok(ThetaParams { a, b, c })
    }

    pub fn vertex_count(&self) -> usize {
        self.a + self.b + self.c - 1
    }

    pub fn has_even_length(&self) -> bool {
        self.a % 2 == 0 || self.b % 2 == 0 || self.c % 2 == 0
    }
}

pub fn empty_graph(n: usize) -> Result<Graph> {
    Graph::empty(n)
}

pub fn complete_graph(n: usize) -> Result<Graph> {
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::VertexCount(n));
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let adj: Vec<u64> = (0..n).map(|v| all & !bit(v)).collect();
    Ok(Graph::from_adjacency_unchecked(&adj))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::hypothesis("cycle", format!("needs n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges)
}

pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges)
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::hypothesis("complete bipartite graph", "both parts must be non-empty"));
    }
    join(&empty_graph(a)?, &empty_graph(b)?)
}

/// `g1 ⊔ g2`: `g1` keeps its labels, `g2` is shifted by `|g1|`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Result<Graph> {
    combine(g1, g2, false)
}

/// `g1 ∨ g2`: the disjoint union plus every edge between the two sides.
pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph> {
    combine(g1, g2, true)
}

fn combine(g1: &Graph, g2: &Graph, cross: bool) -> Result<Graph> {
    let (n1, n2) = (g1.n(), g2.n());
    let n = n1 + n2;
    if n > MAX_VERTICES {
        return Err(Error::SizeOverflow(n));
    }
    let side1 = (1u64 << n1) - 1;
    let side2 = if n == 64 { !side1 } else { ((1u64 << n) - 1) & !side1 };
    let mut adj = Vec::with_capacity(n);
    for &row in g1.adjacency() {
        adj.push(row | if cross { side2 } else { 0 });
    }
    for &row in g2.adjacency() {
        adj.push((row << n1) | if cross { side1 } else { 0 });
    }
    Ok(Graph::from_adjacency_unchecked(&adj))
}

fn union_opt(g1: Graph, n2: usize) -> Result<Graph> {
    if n2 == 0 {
        Ok(g1)
    } else {
        disjoint_union(&g1, &empty_graph(n2)?)
    }
}

/// `(K_{k-1} ∪ E_{l-k+1}) ∨ E_{n-l}` when `k <= l`, `K_l ∨ (K_{k-l} ∪ E_{n-k})` when `k > l`.
pub fn gstar(p: &FamilyParams) -> Result<Graph> {
    let FamilyParams { n, k, l, .. } = *p;
    match p.regime {
        Regime::KLeL => {
            let low = union_opt(complete_graph(k - 1)?, l - k + 1)?;
            join(&low, &empty_graph(n - l)?)
        }
        Regime::KGtL => {
            let high = union_opt(complete_graph(k - l)?, n - k)?;
            join(&complete_graph(l)?, &high)
        }
        _ => Err(Error::hypothesis(
            GSTAR,
            format!("regime {:?} is not a G* regime", p.regime),
        )),
    }
}

/// `K_2 ∨ E_{n-2}`.
pub fn k2_join_empty(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::hypothesis("K_2 join E_(n-2)", "needs n >= 3"));
    }
    join(&complete_graph(2)?, &empty_graph(n - 2)?)
}

pub fn theta(p: &ThetaParams) -> Result<Graph> {
    let n = p.vertex_count();
    let mut edges = Vec::with_capacity(n + 1);
    let mut next = 2;
    for len in [p.a, p.b, p.c] {
        let mut prev = 0;
        for _ in 1..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    Graph::new(n, &edges)
}

/// Recognizes a theta graph: exactly two vertices of degree 3, all others of degree 2, and
/// the three walks out of one hub all ending at the other.
pub fn theta_parameters(g: &Graph) -> Option<ThetaParams> {
    let hubs: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == 3).collect();
    if hubs.len() != 2 || (0..g.n()).any(|v| g.degree(v) != 2 && g.degree(v) != 3) {
        return None;
    }
    let (v, w) = (hubs[0], hubs[1]);
    let mut lens = Vec::with_capacity(3);
    for start in g.neighbors(v).iter() {
        let (mut prev, mut cur, mut len) = (v, start, 1);
        while cur != w {
            if cur == v || g.degree(cur) != 2 {
                return None;
            }
            let next = g.neighbors(cur).without(prev).iter().next()?;
            prev = cur;
            cur = next;
            len += 1;
        }
        lens.push(len);
    }
    if lens.iter().sum::<usize>() != g.n() + 1 {
        return None;
    }
    ThetaParams::new(lens[0], lens[1], lens[2]).ok()
}

/// Harary graph `H_{n,l}`: vertex `i` is joined to the `floor(l/2)` nearest vertices on each
/// side of a circle; for odd `l`, also to the opposite vertex (`i + n/2`), or for odd `n`
/// to `i + (n+1)/2` for `0 <= i <= (n-1)/2`, which leaves vertex 0 with degree `l + 1`.
pub fn harary(n: usize, l: usize) -> Result<Graph> {
    if n <= l || l == 0 {
        return Err(Error::hypothesis(HARARY, format!("needs n > l >= 1, got n = {n}, l = {l}")));
    }
    if l == 1 && n > 2 {
        return Err(Error::hypothesis(
            HARARY,
            "a connected graph on n >= 3 vertices needs n-1 edges, not ceil(n/2)",
        ));
    }
    if n > MAX_VERTICES {
        return Err(Error::VertexCount(n));
    }
    let r = l / 2;
    let mut edges = Vec::with_capacity((n * l).div_ceil(2));
    for i in 0..n {
        for d in 1..=r {
            edges.push((i, (i + d) % n));
        }
    }
    if l % 2 == 1 {
        if n % 2 == 0 {
            for i in 0..n / 2 {
                edges.push((i, i + n / 2));
            }
        } else {
            for i in 0..=(n - 1) / 2 {
                edges.push((i, (i + (n + 1) / 2) % n));
            }
        }
    }
    Graph::new(n, &edges)
}

/// Sharp construction for the small-`l` minimum-edge theorem.
///
/// `K_k ⊔ H_{n-k,l}`, a matching `v_i w_i` onto `l` consecutive circle vertices, and
/// alternate path edges `w_1w_2, w_3w_4, ..` removed. When `l` and `n - k` are both odd
/// the Harary vertex of degree `l + 1` is placed at `w_2`, the lowest position from which
/// deleting both of its path edges still leaves every other path vertex losing exactly one
/// edge; the removed edges are then `w_1w_2, w_2w_3, w_4w_5, .., w_{l-1}w_l`.
///
/// When `l = n - k` there is no `H_{l,l}`; the construction degenerates to `K_k ⊔ K_l` plus
/// the matching, which has the same edge count.
pub fn gstar_min_edges_small_l(p: &FamilyParams) -> Result<Graph> {
    if p.regime != Regime::MinEdgeSmallL {
        return Err(Error::hypothesis(
            MIN_EDGES_SMALL,
            format!("regime {:?} does not match", p.regime),
        ));
    }
    let FamilyParams { n, k, l, .. } = *p;
    let m = n - k;
    let w = |pos: usize| k + pos % m;

    if m == l {
        let mut g = disjoint_union(&complete_graph(k)?, &complete_graph(l)?)?.edges();
        g.extend((0..l).map(|i| (i, k + i)));
        return Graph::new(n, &g);
    }

    let h = harary(m, l)?;
    let mut adj: Vec<u64> = complete_graph(k)?.adjacency().to_vec();
    adj.extend(h.adjacency().iter().map(|&row| row << k));

    let odd_odd = l % 2 == 1 && m % 2 == 1;
    // circle positions of w_1..w_l
    let start = if odd_odd { m - 1 } else { 0 };
    let ws: Vec<usize> = (0..l).map(|i| w(start + i)).collect();

    let mut removed: Vec<(usize, usize)> = Vec::new();
    if odd_odd {
        removed.push((ws[0], ws[1]));
        removed.push((ws[1], ws[2]));
        let mut i = 3;
        while i + 1 < l {
            removed.push((ws[i], ws[i + 1]));
            i += 2;
        }
    } else {
        let mut i = 0;
        while i + 1 < l {
            removed.push((ws[i], ws[i + 1]));
            i += 2;
        }
    }
    for (a, b) in removed {
        debug_assert!(adj[a] & bit(b) != 0, "path edge must exist in the Harary graph");
        adj[a] &= !bit(b);
        adj[b] &= !bit(a);
    }
    for (i, &wi) in ws.iter().enumerate() {
        adj[i] |= bit(wi);
        adj[wi] |= bit(i);
    }
    Graph::from_adjacency(&adj)
}

/// Sharp construction for the large-`l` minimum-edge theorem: `K_k ⊔ K_{n-k}` plus, for
/// each `i`, edges `w_i v_j` for `i <= j <= i + (l - n + k)`.
pub fn gstar_min_edges_large_l(p: &FamilyParams) -> Result<Graph> {
    if p.regime != Regime::MinEdgeLargeL {
        return Err(Error::hypothesis(
            MIN_EDGES_LARGE,
            format!("regime {:?} does not match", p.regime),
        ));
    }
    let FamilyParams { n, k, l, .. } = *p;
    let m = n - k;
    let spread = l + k - n;
    let mut edges = disjoint_union(&complete_graph(k)?, &complete_graph(m)?)?.edges();
    for i in 1..=m {
        for j in i..=i + spread {
            edges.push((k + i - 1, j - 1));
        }
    }
    Graph::new(n, &edges)
}

/// Whichever minimum-edge construction applies to `p`.
pub fn gstar_min_edges(p: &FamilyParams) -> Result<Graph> {
    match p.regime {
        Regime::MinEdgeSmallL => gstar_min_edges_small_l(p),
        Regime::MinEdgeLargeL => gstar_min_edges_large_l(p),
        _ => Err(Error::hypothesis(
            MIN_EDGES_SMALL,
            format!("regime {:?} is not a minimum-edge regime", p.regime),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use crate::count::count_total;
    use crate::invariants::{chromatic_number, component_count, min_degree, vertex_connectivity};

    #[test]
    fn basic_families() {
        assert_eq!(complete_graph(3).unwrap().edge_count(), 3);
        let c5 = cycle(5).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert!(c5.degrees().iter().all(|&d| d == 2));
        assert_eq!(complete_bipartite(2, 3).unwrap().edge_count(), 6);
        assert!(cycle(2).is_err());
        assert!(complete_graph(0).is_err());
        assert!(complete_bipartite(0, 2).is_err());
        assert_eq!(complete_graph(64).unwrap().edge_count(), 2016);
    }

    #[test]
    fn union_and_join() {
        let g = disjoint_union(&complete_graph(3).unwrap(), &empty_graph(2).unwrap()).unwrap();
        assert_eq!((g.n(), g.edge_count(), component_count(&g)), (5, 3, 3));
        let e1 = empty_graph(1).unwrap();
        assert_eq!(disjoint_union(&e1, &e1).unwrap(), empty_graph(2).unwrap());
        let k2 = complete_graph(2).unwrap();
        assert_eq!(disjoint_union(&k2, &k2).unwrap().edges(), vec![(0, 1), (2, 3)]);

        assert_eq!(join(&e1, &e1).unwrap(), k2);
        let diamond = join(&k2, &empty_graph(2).unwrap()).unwrap();
        assert_eq!((diamond.n(), diamond.edge_count()), (4, 5));
        let wheel = join(&e1, &cycle(4).unwrap()).unwrap();
        assert_eq!(wheel.edge_count(), 8);

        assert_eq!(
            join(&complete_graph(40).unwrap(), &empty_graph(25).unwrap()),
            Err(Error::SizeOverflow(65))
        );
        let big = join(&complete_graph(32).unwrap(), &empty_graph(32).unwrap()).unwrap();
        assert_eq!(big.edge_count(), 496 + 1024);
    }

    #[test]
    fn gstar_examples() {
        let g = gstar(&FamilyParams::gstar(6, 3, 2).unwrap()).unwrap();
        let expect = join(
            &complete_graph(2).unwrap(),
            &disjoint_union(&complete_graph(1).unwrap(), &empty_graph(3).unwrap()).unwrap(),
        )
        .unwrap();
        assert_eq!(g, expect);
        assert_eq!(count_total(&g).to_u64(), Some(18));

        let g = gstar(&FamilyParams::gstar(8, 3, 4).unwrap()).unwrap();
        assert_eq!(count_total(&g).to_u64(), Some(27));
        assert_eq!(min_degree(&g), 4);
        // K_2 part has degree 1 + 4, E_2 part degree 4, E_4 part degree 4
        assert_eq!(g.degrees(), vec![5, 5, 4, 4, 4, 4, 4, 4]);

        let g = gstar(&FamilyParams::gstar(4, 2, 2).unwrap()).unwrap();
        assert_eq!(g, complete_bipartite(2, 2).unwrap());
    }

    #[test]
    fn gstar_layout() {
        let p = FamilyParams::gstar(9, 4, 2).unwrap();
        let g = gstar(&p).unwrap();
        // K_l is dominating
        assert!((0..2).all(|v| g.degree(v) == 8));
        // K_{k-l} part
        assert!(g.has_edge(2, 3));
        // E_{n-k} part only sees K_l
        assert!((4..9).all(|v| g.neighbors(v).bits() == 0b11));
    }

    #[test]
    fn regime_validation() {
        assert!(FamilyParams::new(4, 3, 2, Regime::KLeL).is_err());
        assert!(FamilyParams::new(3, 3, 3, Regime::KLeL).is_err());
        assert!(FamilyParams::new(3, 4, 2, Regime::KGtL).is_err());
        assert!(FamilyParams::new(10, 5, 3, Regime::MinEdgeLargeL).is_err());
        assert!(FamilyParams::new(7, 5, 3, Regime::MinEdgeSmallL).is_err());
        assert!(FamilyParams::new(7, 5, 3, Regime::MinEdgeLargeL).is_ok());
        assert!(FamilyParams::new(5, 5, 3, Regime::MinEdgeLargeL).is_err());
        assert!(FamilyParams::new(8, 4, 3, Regime::MinEdgeSmallL).is_err());
        let p = FamilyParams::gstar(6, 3, 2).unwrap();
        assert!(gstar_min_edges_small_l(&p).is_err());
        let q = FamilyParams::min_edges(10, 5, 3).unwrap();
        assert!(gstar(&q).is_err());
        match FamilyParams::new(7, 5, 3, Regime::MinEdgeSmallL) {
            Err(Error::Hypothesis { result, .. }) => assert_eq!(result, MIN_EDGES_SMALL),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn theta_examples() {
        let k23 = theta(&ThetaParams::new(2, 2, 2).unwrap()).unwrap();
        assert_eq!(canonical_form(&k23), canonical_form(&complete_bipartite(2, 3).unwrap()));
        let t = theta(&ThetaParams::new(3, 2, 2).unwrap()).unwrap();
        assert_eq!((t.n(), t.edge_count()), (6, 7));
        let t = ThetaParams::new(1, 4, 6).unwrap();
        assert_eq!(t.vertex_count(), 10);
        assert_eq!(theta(&t).unwrap().edge_count(), 11);
        assert!(ThetaParams::new(1, 1, 3).is_err());
        assert!(ThetaParams::new(0, 2, 3).is_err());
        assert_eq!(ThetaParams::new(3, 1, 2).unwrap(), ThetaParams { a: 1, b: 2, c: 3 });
    }

    #[test]
    fn harary_examples() {
        assert_eq!(harary(6, 3).unwrap().edge_count(), 9);
        assert_eq!(harary(5, 2).unwrap(), cycle(5).unwrap());
        let h = harary(7, 3).unwrap();
        assert_eq!(h.edge_count(), 11);
        let deg = h.degrees();
        assert_eq!(deg.iter().filter(|&&d| d == 4).count(), 1);
        assert_eq!(deg.iter().filter(|&&d| d == 3).count(), 6);
        assert_eq!(deg.iter().sum::<usize>(), 22);
        assert!(harary(3, 3).is_err());
        assert!(harary(5, 1).is_err());
        assert_eq!(harary(2, 1).unwrap(), complete_graph(2).unwrap());
        assert_eq!(harary(6, 5).unwrap(), complete_graph(6).unwrap());
    }

    #[test]
    fn min_edge_constructions() {
        let p = FamilyParams::min_edges(10, 5, 3).unwrap();
        let g = gstar_min_edges_small_l(&p).unwrap();
        assert_eq!(g.edge_count(), 19);
        assert_eq!(chromatic_number(&g), 5);
        assert_eq!(vertex_connectivity(&g), 3);

        let p = FamilyParams::min_edges(8, 4, 2).unwrap();
        assert_eq!(gstar_min_edges_small_l(&p).unwrap().edge_count(), 11);

        let p = FamilyParams::min_edges(7, 5, 3).unwrap();
        let g = gstar_min_edges_large_l(&p).unwrap();
        assert_eq!(g.edge_count(), 15);
        assert_eq!(chromatic_number(&g), 5);
        assert_eq!(vertex_connectivity(&g), 3);

        let p = FamilyParams::min_edges(9, 7, 4).unwrap();
        assert_eq!(gstar_min_edges(&p).unwrap().edge_count(), 28);
    }

    #[test]
    fn min_edge_boundary_l_equals_n_minus_k() {
        let p = FamilyParams::min_edges(8, 5, 3).unwrap();
        assert_eq!(p.regime, Regime::MinEdgeSmallL);
        let g = gstar_min_edges_small_l(&p).unwrap();
        assert_eq!(g.edge_count(), 10 + 6);
        assert_eq!(chromatic_number(&g), 5);
        assert_eq!(vertex_connectivity(&g), 3);
    }
}
