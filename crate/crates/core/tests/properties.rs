//! Randomized invariants over small signed graphs.

use proptest::prelude::*;
use sginertia::format::{parse_sg, to_sg};
use sginertia::inertia::{adjacency_matrix, char_poly, graph_inertia, inertia_from_char_poly};
use sginertia::structure::{
    block_decomposition, contraction_tree, fundamental_cycles, is_balanced, is_cycle_disjoint,
    negate, switch,
};
use sginertia::verify::{
    canonical_code, check_bounds, check_deletion_lemmas, check_interlacing, parse_sg_token,
    sg_token,
};
use sginertia::families::is_extremal_family;
use sginertia::{Sign, SignedGraph};

/// A signed graph on `1..=max_n` vertices; each pair is an edge with
/// probability roughly `density`.
fn signed_graph(max_n: usize) -> impl Strategy<Value = SignedGraph> {
    (1..=max_n, 0.15f64..0.85).prop_flat_map(|(n, density)| {
        let pairs = n * (n - 1) / 2;
        (
            Just(n),
            proptest::collection::vec(proptest::bool::weighted(density), pairs),
            proptest::collection::vec(any::<bool>(), pairs),
        )
            .prop_map(|(n, present, negative)| {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if present[k] {
                            let s = if negative[k] { Sign::Negative } else { Sign::Positive };
                            edges.push((u, v, s));
                        }
                        k += 1;
                    }
                }
                SignedGraph::new(n, edges).unwrap()
            })
    })
}

fn subset(n: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(any::<bool>(), n)
        .prop_map(|bits| bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect())
}

fn graph_and_subset(max_n: usize) -> impl Strategy<Value = (SignedGraph, Vec<usize>)> {
    signed_graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), subset(n))
    })
}

fn relabel(g: &SignedGraph, perm: &[usize]) -> SignedGraph {
    SignedGraph::new(g.order(), g.edges().map(|(u, v, s)| (perm[u], perm[v], s))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn switching_preserves_inertia((g, set) in graph_and_subset(9)) {
        let h = switch(&g, &set).unwrap();
        prop_assert_eq!(graph_inertia(&h), graph_inertia(&g));
        prop_assert_eq!(is_balanced(&h), is_balanced(&g));
    }

    #[test]
    fn negation_swaps_positive_and_negative(g in signed_graph(9)) {
        prop_assert_eq!(graph_inertia(&negate(&g)), graph_inertia(&g).swapped());
    }

    #[test]
    fn elimination_agrees_with_characteristic_polynomial(g in signed_graph(10)) {
        let a = adjacency_matrix(&g);
        let by_poly = inertia_from_char_poly(&char_poly(&a).unwrap()).unwrap();
        prop_assert_eq!(graph_inertia(&g), by_poly);
    }

    #[test]
    fn principal_submatrices_interlace((g, keep) in graph_and_subset(9)) {
        let check = check_interlacing(&adjacency_matrix(&g), &keep).unwrap();
        prop_assert!(check.passes(), "{:?}", check);
    }

    #[test]
    fn inertia_adds_over_disjoint_unions(g in signed_graph(6), h in signed_graph(6)) {
        let union = g.disjoint_union(&h);
        prop_assert_eq!(graph_inertia(&union), graph_inertia(&g) + graph_inertia(&h));
        prop_assert_eq!(union.cyclomatic_number(), g.cyclomatic_number() + h.cyclomatic_number());
        prop_assert_eq!(union.component_count(), g.component_count() + h.component_count());
    }

    #[test]
    fn deletions_compose((g, first) in graph_and_subset(9)) {
        // delete `first`, then vertex 0 of what is left, versus both at once
        let (rest, kept) = g.delete_vertices(&first).unwrap();
        prop_assume!(!kept.is_empty());
        let (twice, _) = rest.delete_vertices(&[0]).unwrap();
        let mut all = first.clone();
        all.push(kept[0]);
        let (once, _) = g.delete_vertices(&all).unwrap();
        prop_assert_eq!(twice, once);
    }

    #[test]
    fn deletion_lemmas_hold(g in signed_graph(8)) {
        let report = check_deletion_lemmas(&g);
        prop_assert!(report.passes(), "{:?}", report.failures);
    }

    #[test]
    fn cyclomatic_number_splits_over_blocks(g in signed_graph(10)) {
        let blocks = block_decomposition(&g);
        let total: usize = blocks.block_cyclomatic_numbers(&g).iter().sum();
        prop_assert_eq!(total, g.cyclomatic_number());
        prop_assert_eq!(fundamental_cycles(&g).len(), g.cyclomatic_number());
    }

    #[test]
    fn balance_matches_cycle_basis_signs(g in signed_graph(10)) {
        let basis_positive = fundamental_cycles(&g).iter().all(|c| c.is_positive());
        prop_assert_eq!(is_balanced(&g), basis_positive);
    }

    #[test]
    fn cycle_disjoint_graphs_contract_to_trees(g in signed_graph(10)) {
        let thetas = block_decomposition(&g).block_cyclomatic_numbers(&g);
        if is_cycle_disjoint(&g) {
            prop_assert_eq!(thetas.iter().filter(|&&t| t == 1).count(), g.cyclomatic_number());
            if g.is_connected() {
                let tree = contraction_tree(&g).unwrap();
                prop_assert!(tree.is_tree());
                prop_assert_eq!(tree.cycle_count(), g.cyclomatic_number());
            }
        } else {
            prop_assert!(g.cyclomatic_number() >= 2);
            prop_assert!(contraction_tree(&g).is_err());
        }
    }

    #[test]
    fn bounds_hold(g in signed_graph(10)) {
        prop_assume!(g.order() >= 2);
        let report = check_bounds(&g).unwrap();
        prop_assert!(report.passes(), "{:?}", report.failures());
        if is_extremal_family(&g).verdict {
            let f = report.equality_flags();
            prop_assert!(f.positive && f.negative && f.nullity);
        }
    }

    #[test]
    fn text_formats_round_trip(g in signed_graph(10)) {
        prop_assert_eq!(parse_sg(&to_sg(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_sg_token(&sg_token(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_code_ignores_labels(
        (g, perm) in signed_graph(8).prop_flat_map(|g| {
            let n = g.order();
            (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        })
    ) {
        prop_assert_eq!(canonical_code(&g).unwrap(), canonical_code(&relabel(&g, &perm)).unwrap());
    }
}
