//! Exact vertex coloring on bitmask adjacency.

use crate::graph::{bit, bits};

/// Size of a maximum clique of the subgraph induced by `verts`.
pub(crate) fn clique_number(adj: &[u64], verts: u64) -> usize {
    fn expand(adj: &[u64], size: usize, mut cand: u64, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        while cand != 0 {
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= !bit(v);
            expand(adj, size + 1, cand & adj[v], best);
        }
    }
    let mut best = 0;
    expand(adj, 0, verts, &mut best);
    best
}

fn greedy_dsatur(adj: &[u64], verts: u64) -> usize {
    let mut classes: Vec<u64> = Vec::new();
    let mut left = verts;
    while left != 0 {
        let v = pick_saturated(adj, left, &classes);
        left &= !bit(v);
        match classes.iter().position(|&c| adj[v] & c == 0) {
            Some(c) => classes[c] |= bit(v),
            None => classes.push(bit(v)),
        }
    }
    classes.len()
}

/// Uncolored vertex with the most distinct neighboring colors, ties broken by the number
/// of uncolored neighbors, then by lowest index.
#[inline]
fn pick_saturated(adj: &[u64], uncolored: u64, classes: &[u64]) -> usize {
    let mut best_v = uncolored.trailing_zeros() as usize;
    let mut best_key = (0usize, 0u32);
    let mut first = true;
    for v in bits(uncolored) {
        let sat = classes.iter().filter(|&&c| adj[v] & c != 0).count();
        let key = (sat, (adj[v] & uncolored).count_ones());
        if first || key > best_key {
            best_key = key;
            best_v = v;
            first = false;
        }
    }
    best_v
}

fn is_bipartite(adj: &[u64], verts: u64) -> bool {
    let mut left = verts;
    while left != 0 {
        let root = bit(left.trailing_zeros() as usize);
        let (mut side_a, mut side_b) = (root, 0u64);
        let mut frontier = root;
        let mut on_a = true;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= adj[v];
            }
            next &= verts;
            let same = if on_a { side_a } else { side_b };
            if next & same != 0 {
                return false;
            }
            let other = if on_a { &mut side_b } else { &mut side_a };
            next &= !*other;
            *other |= next;
            frontier = next;
            on_a = !on_a;
        }
        left &= !(side_a | side_b);
    }
    true
}

fn backtrack(adj: &[u64], uncolored: u64, classes: &mut [u64], used: usize) -> bool {
    if uncolored == 0 {
        return true;
    }
    let k = classes.len();
    let v = pick_saturated(adj, uncolored, &classes[..used]);
    let rest = uncolored & !bit(v);
    let limit = (used + 1).min(k);
    for c in 0..limit {
        if adj[v] & classes[c] == 0 {
            classes[c] |= bit(v);
            if backtrack(adj, rest, classes, used.max(c + 1)) {
                return true;
            }
            classes[c] &= !bit(v);
        }
    }
    false
}

/// Whether the subgraph induced by `verts` has a proper coloring with `k` colors.
pub(crate) fn is_colorable(adj: &[u64], verts: u64, k: usize) -> bool {
    let size = verts.count_ones() as usize;
    if size <= k {
        return true;
    }
    match k {
        0 => false,
        1 => bits(verts).all(|v| adj[v] & verts == 0),
        2 => is_bipartite(adj, verts),
        _ => {
            let mut classes = [0u64; 64];
            backtrack(adj, verts, &mut classes[..k], 0)
        }
    }
}

/// Exact chromatic number of the subgraph induced by `verts` (0 for the empty set).
pub(crate) fn chromatic_number(adj: &[u64], verts: u64) -> usize {
    if verts == 0 {
        return 0;
    }
    let lower = clique_number(adj, verts);
    let upper = greedy_dsatur(adj, verts);
    (lower..upper)
        .find(|&c| is_colorable(adj, verts, c))
        .unwrap_or(upper)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{low_mask, Graph};

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &e).unwrap()
    }

    #[test]
    fn small_cases() {
        let c5 = cycle(5);
        assert_eq!(chromatic_number(c5.adjacency(), low_mask(5)), 3);
        assert_eq!(chromatic_number(cycle(6).adjacency(), low_mask(6)), 2);
        assert!(is_bipartite(cycle(8).adjacency(), low_mask(8)));
        assert!(!is_bipartite(cycle(7).adjacency(), low_mask(7)));
        // a path inside C_5
        assert_eq!(chromatic_number(c5.adjacency(), 0b01111), 2);
        assert_eq!(chromatic_number(c5.adjacency(), 0), 0);
        assert_eq!(clique_number(c5.adjacency(), low_mask(5)), 2);
    }

    #[test]
    fn grotzsch_needs_four_colors() {
        // Mycielskian of C_5: triangle-free, chromatic number 4
        let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        for i in 0..5 {
            e.push((5 + i, (i + 1) % 5));
            e.push((5 + i, (i + 4) % 5));
            e.push((5 + i, 10));
        }
        let g = Graph::new(11, &e).unwrap();
        assert_eq!(clique_number(g.adjacency(), low_mask(11)), 2);
        assert_eq!(chromatic_number(g.adjacency(), low_mask(11)), 4);
        assert!(!is_colorable(g.adjacency(), low_mask(11), 3));
    }
}
