mod common;

use common::*;
use extremal_core::bounds::{
    binomial, gstar_floor, istar_total, kstar_it, matching_bound, min_edges_large_l, min_edges_small_l,
    min_edges_small_l_raw, split_comparison,
};
use extremal_core::construct::{
    complete_bipartite, disjoint_union, empty_graph, gstar, gstar_min_edges, harary, join, theta, FamilyParams,
    Regime, ThetaParams,
};
use extremal_core::format::{from_graph6, to_graph6};
use extremal_core::invariants::{chromatic_number, is_l_connected, max_matching, min_degree, vertex_connectivity};
use extremal_core::{canonical_form, count_size, count_total, independence_polynomial, ExactCount, Graph, VertexSet};
use num_bigint::BigUint;
use num_rational::BigRational;
use proptest::prelude::*;

fn poly_product(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn total(g: &Graph) -> u128 {
    count_total(g).to_u128().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph_invariants_hold(g in arb_graph(12)) {
        prop_assert!(g.is_valid());
        for v in 0..g.n() {
            prop_assert!(!g.has_edge(v, v));
            for u in 0..g.n() {
                prop_assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
    }

    #[test]
    fn is_independent_matches_pair_loop(g in arb_graph(12), bits in any::<u64>()) {
        let s = VertexSet::from_bits(bits & ((1u64 << g.n()) - 1));
        let vs: Vec<usize> = s.iter().collect();
        let direct = vs.iter().all(|&u| vs.iter().all(|&v| !g.has_edge(u, v)));
        prop_assert_eq!(g.is_independent(s), direct);
    }

    #[test]
    fn deleting_nothing_is_identity(g in arb_graph(12)) {
        let h = g.delete_vertices(VertexSet::EMPTY).unwrap();
        prop_assert_eq!(canonical_form(&h), canonical_form(&g));
    }

    #[test]
    fn join_identity(a in arb_graph(8), b in arb_graph(8)) {
        let j = join(&a, &b).unwrap();
        prop_assert_eq!(total(&j), total(&a) + total(&b) - 1);
    }

    #[test]
    fn union_multiplicativity(a in arb_graph(8), b in arb_graph(8)) {
        let u = disjoint_union(&a, &b).unwrap();
        let want = poly_product(independence_polynomial(&a).coefficients(), independence_polynomial(&b).coefficients());
        let got = independence_polynomial(&u);
        prop_assert_eq!(got.coefficients(), want.as_slice());
    }

    #[test]
    fn deletion_recurrence(g in arb_graph(14)) {
        prop_assume!(g.n() >= 2);
        for v in 0..g.n() {
            let minus_v = total(&g.delete_vertices(VertexSet::singleton(v)).unwrap());
            let nv = g.closed_neighborhood(v).unwrap();
            let minus_nv = if nv.len() == g.n() { 1 } else { total(&g.delete_vertices(nv).unwrap()) };
            prop_assert_eq!(total(&g), minus_v + minus_nv);
        }
    }

    #[test]
    fn pairs_count_non_edges(g in arb_graph(16)) {
        let n = g.n();
        prop_assert_eq!(count_size(&g, 2).to_u64().unwrap(), binom(n, 2) - g.edge_count() as u64);
    }

    #[test]
    fn matching_bound_dominates(g in arb_graph(14)) {
        let m = max_matching(&g);
        prop_assert!(matching_bound(g.n(), m).unwrap() >= count_total(&g));
    }

    #[test]
    fn polynomial_shape(g in arb_graph(14)) {
        let p = independence_polynomial(&g);
        let c = p.coefficients();
        prop_assert_eq!(c[0], 1);
        prop_assert_eq!(c[1], g.n() as u64);
        prop_assert!(*c.last().unwrap() >= 1);
        prop_assert_eq!(p.total(), count_total(&g));
    }

    #[test]
    fn graph6_round_trip(g in arb_graph(30)) {
        let s = to_graph6(&g);
        prop_assert_eq!(from_graph6(&s).unwrap(), g.clone());
        prop_assert_eq!(to_graph6(&from_graph6(&s).unwrap()), s);
    }

    #[test]
    fn connectivity_at_most_min_degree(g in arb_graph(12)) {
        prop_assert!(vertex_connectivity(&g) <= min_degree(&g));
    }

    #[test]
    fn chromatic_matches_oracle(g in arb_graph(9)) {
        prop_assert_eq!(chromatic_number(&g), bf_chromatic(&g));
    }

    #[test]
    fn canonical_form_ignores_labels(g in arb_graph(10), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rng(seed));
        prop_assert_eq!(canonical_form(&permute(&g, &perm)), canonical_form(&g));
        prop_assert_eq!(canonical_form(&g.relabel(&perm)), canonical_form(&g));
    }

    #[test]
    fn split_comparison_is_strict(n in 4usize..40, l in 1usize..10, m in 2usize..10) {
        prop_assume!(n >= l + m);
        let (lhs, rhs) = split_comparison(n, l, m).unwrap();
        prop_assert!(lhs < rhs);
    }
}

#[test]
fn gstar_exceeds_floor_on_grid() {
    let mut checked = 0;
    for n in 2..=24 {
        for k in 2..=8 {
            for l in 1..=8 {
                if FamilyParams::gstar(n, k, l).is_err() {
                    continue;
                }
                let i = BigRational::from_integer(istar_total(n, k, l).unwrap().into_inner().into());
                assert!(i > gstar_floor(n, k, l), "({n},{k},{l})");
                checked += 1;
            }
        }
    }
    assert!(checked >= 100);
}

#[test]
fn gstar_formulas_agree_with_counting() {
    for n in 2..=18 {
        for k in 2..=7 {
            for l in 1..=7 {
                let Ok(p) = FamilyParams::gstar(n, k, l) else { continue };
                let g = gstar(&p).unwrap();
                assert_eq!(count_total(&g), istar_total(n, k, l).unwrap(), "({n},{k},{l})");
                for t in 0..=n {
                    assert_eq!(count_size(&g, t), kstar_it(n, k, l, t).unwrap(), "({n},{k},{l},{t})");
                }
            }
        }
    }
}

#[test]
fn gstar_invariants_follow_layout() {
    for n in 2..=14 {
        for k in 2..=6 {
            for l in 1..=6 {
                let Ok(p) = FamilyParams::gstar(n, k, l) else { continue };
                let g = gstar(&p).unwrap();
                assert_eq!(chromatic_number(&g), k, "({n},{k},{l})");
                assert_eq!(Some(vertex_connectivity(&g)), p.gstar_connectivity(), "({n},{k},{l})");
            }
        }
    }
}

#[test]
fn harary_graphs_are_optimal() {
    for n in 3..=16 {
        for l in 2..n {
            let g = harary(n, l).unwrap();
            assert_eq!(min_degree(&g), l, "H({n},{l})");
            assert_eq!(vertex_connectivity(&g), l, "H({n},{l})");
            assert_eq!(g.edge_count(), (n * l).div_ceil(2), "H({n},{l})");
        }
    }
}

#[test]
fn theta_graphs() {
    for a in 1..=5 {
        for b in a..=5 {
            for c in b..=5 {
                let Ok(p) = ThetaParams::new(a, b, c) else {
                    assert_eq!((a, b), (1, 1));
                    continue;
                };
                let g = theta(&p).unwrap();
                assert_eq!(g.n(), a + b + c - 1);
                assert_eq!(g.edge_count(), g.n() + 1);
                assert!(is_l_connected(&g, 2));
                // an odd cycle exists iff the lengths do not all share a parity
                let mixed = !(a % 2 == b % 2 && b % 2 == c % 2);
                assert_eq!(chromatic_number(&g), if mixed { 3 } else { 2 }, "theta({a},{b},{c})");
                if g.n() % 2 == 0 {
                    assert_eq!(mixed, p.has_even_length());
                }
            }
        }
    }
}

#[test]
fn min_edge_constructions_hit_their_counts() {
    let mut seen = [0usize; 2];
    for n in 4..=16 {
        for k in 4..=n {
            for l in 2..k - 1 {
                let Ok(p) = FamilyParams::min_edges(n, k, l) else { continue };
                let g = gstar_min_edges(&p).unwrap();
                let (bound, slot) = match p.regime {
                    Regime::MinEdgeSmallL => (min_edges_small_l(n, k, l).unwrap(), 0),
                    _ => (min_edges_large_l(n, k, l).unwrap(), 1),
                };
                seen[slot] += 1;
                assert_eq!(ExactCount::from(g.edge_count()), bound, "({n},{k},{l})");
                assert_eq!(chromatic_number(&g), k, "({n},{k},{l})");
                assert_eq!(vertex_connectivity(&g), l, "({n},{k},{l})");
                if p.regime == Regime::MinEdgeSmallL {
                    let raw = min_edges_small_l_raw(n, k, l).unwrap();
                    assert!(BigRational::from_integer(bound.into_inner().into()) >= raw);
                }
            }
        }
    }
    assert!(seen[0] > 20 && seen[1] > 20);
}

#[test]
fn biclique_join_identity() {
    for n in 4..=16 {
        let kb = complete_bipartite(2, n - 2).unwrap();
        let k2e = join(&extremal_core::construct::complete_graph(2).unwrap(), &empty_graph(n - 2).unwrap()).unwrap();
        assert_eq!(total(&kb), total(&k2e) + 1);
    }
}

#[test]
fn empty_join_is_biclique() {
    for a in 1..=5 {
        for b in 1..=5 {
            let j = join(&empty_graph(a).unwrap(), &empty_graph(b).unwrap()).unwrap();
            assert_eq!(canonical_form(&j), canonical_form(&complete_bipartite(a, b).unwrap()));
        }
    }
}

#[test]
fn large_counts_do_not_overflow() {
    let g = empty_graph(64).unwrap();
    assert_eq!(count_total(&g).into_inner(), BigUint::from(1u8) << 64usize);
    assert_eq!(count_size(&g, 32).into_inner(), binomial(64, 32));
}
