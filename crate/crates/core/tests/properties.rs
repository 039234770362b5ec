use proptest::prelude::*;

use hypodom::canon::{are_isomorphic, canonical_form};
use hypodom::domination::{
    analyze, bondage_number, domination_number, enumerate_min_dominating_sets, is_dominating,
    vertex_deletion_gammas, ReportOptions,
};
use hypodom::eds::{enumerate_eds, has_eds, is_efficient_dominating_set};
use hypodom::families::circulant;
use hypodom::harness::oracle::{brute_force_bondage, brute_force_eds, brute_force_gamma, brute_force_gamma_sets};
use hypodom::hypo::classify;
use hypodom::io::{parse_edge_list, parse_graph6, write_edge_list, write_graph6};
use hypodom::{CirculantSpec, Graph, VertexSet};

fn graph(max_n: usize, density: f64) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(move |n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(proptest::bool::weighted(density), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// Random graph plus a Hamiltonian path, so it is connected.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n, 0.3).prop_filter("nonempty", |g| g.order() > 0).prop_map(|g| {
        let mut edges = g.edges();
        edges.extend((1..g.order()).map(|v| (v - 1, v)));
        Graph::from_edges(g.order(), &edges).unwrap()
    })
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<_> = g.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edges(g.order(), &edges).unwrap()
}

fn sets_as_vecs(sets: &[VertexSet]) -> Vec<Vec<usize>> {
    sets.iter().map(VertexSet::to_vec).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in graph(70, 0.5)) {
        let line = write_graph6(&g);
        prop_assert_eq!(parse_graph6(&line).unwrap(), g.clone());
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in graph(70, 0.4)) {
        let c = g.complement();
        prop_assert_eq!(c.size() + g.size(), g.order() * g.order().saturating_sub(1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn delete_vertex_keeps_other_edges(g in graph(20, 0.4), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.order() > 0);
        let v = pick.index(g.order());
        let h = g.delete_vertex(v).unwrap();
        prop_assert_eq!(h.order(), g.order() - 1);
        let shift = |u: usize| if u > v { u - 1 } else { u };
        let expected: Vec<_> = g.edges().into_iter()
            .filter(|&(a, b)| a != v && b != v)
            .map(|(a, b)| (shift(a), shift(b)))
            .collect();
        prop_assert_eq!(h.edges(), expected);
    }

    #[test]
    fn canonical_form_ignores_labels(g in graph(14, 0.4), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = relabel(&g, &perm);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert!(are_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn gamma_matches_oracle(g in graph(13, 0.3)) {
        prop_assert_eq!(domination_number(&g), brute_force_gamma(&g).unwrap());
    }

    #[test]
    fn gamma_sets_match_oracle(g in graph(11, 0.35)) {
        let found = enumerate_min_dominating_sets(&g, usize::MAX);
        prop_assert_eq!(sets_as_vecs(&found.sets), brute_force_gamma_sets(&g).unwrap());
        prop_assert_eq!(found.count as usize, found.sets.len());
        prop_assert!(found.sets.iter().all(|d| is_dominating(&g, d)));
    }

    #[test]
    fn truncated_listing_keeps_exact_count(g in graph(10, 0.3), cap in 1usize..4) {
        let all = enumerate_min_dominating_sets(&g, usize::MAX);
        let capped = enumerate_min_dominating_sets(&g, cap);
        prop_assert_eq!(capped.count, all.count);
        prop_assert_eq!(&capped.sets[..], &all.sets[..cap.min(all.sets.len())]);
    }

    #[test]
    fn eds_matches_oracle(g in graph(11, 0.3)) {
        let found = enumerate_eds(&g, usize::MAX);
        prop_assert_eq!(sets_as_vecs(&found.sets), brute_force_eds(&g).unwrap());
        prop_assert_eq!(found.exists, has_eds(&g));
        let gamma = domination_number(&g);
        for d in &found.sets {
            prop_assert!(is_efficient_dominating_set(&g, d));
            prop_assert_eq!(d.len(), gamma);
            let total: usize = d.iter().map(|v| g.degree(v) + 1).sum();
            prop_assert_eq!(total, g.order());
        }
    }

    #[test]
    fn eds_survives_disjoint_union(g in graph(8, 0.3), h in graph(8, 0.3)) {
        if has_eds(&g) && has_eds(&h) {
            prop_assert!(has_eds(&g.disjoint_union(&h)));
        }
    }

    #[test]
    fn bondage_matches_oracle(g in graph(6, 0.5).prop_filter("has an edge", |g| g.size() > 0)) {
        prop_assert_eq!(bondage_number(&g, None).unwrap(), brute_force_bondage(&g).unwrap());
    }

    #[test]
    fn corona_gamma_is_base_order(h in connected_graph(12)) {
        prop_assert_eq!(domination_number(&h.corona()), h.order());
    }

    #[test]
    fn deletion_never_drops_gamma_by_two(g in graph(11, 0.3)) {
        let gamma = domination_number(&g);
        for gv in vertex_deletion_gammas(&g) {
            prop_assert!(gv + 1 >= gamma);
        }
    }

    #[test]
    fn report_invariants(g in graph(9, 0.4)) {
        let r = analyze(&g, &ReportOptions::default());
        prop_assert_eq!(r.unique, r.gamma_set_count == 1);
        prop_assert_eq!(r.is_vc, r.critical_vertices.len() == g.order());
        for d in r.gamma_sets.as_deref().unwrap_or(&[]) {
            prop_assert_eq!(d.len(), r.gamma);
            prop_assert!(is_dominating(&g, d));
        }
    }

    #[test]
    fn hypo_report_invariants(g in graph(8, 0.45)) {
        prop_assume!(g.order() > 0);
        let r = classify(&g);
        if r.is_hypo_ed {
            prop_assert!(!r.is_ed);
            prop_assert!(r.per_vertex.iter().all(|d| d.eds_count_minus_v >= 1));
        }
        if r.is_hypo_ud {
            prop_assert!(!r.is_ud);
            prop_assert!(r.per_vertex.iter().all(|d| d.gamma_set_count_minus_v == 1));
        }
        if let Some(v) = r.failing_vertex.ud {
            prop_assert!(r.per_vertex[v].gamma_set_count_minus_v != 1);
            prop_assert!(r.per_vertex[..v].iter().all(|d| d.gamma_set_count_minus_v == 1));
        }
        if let Some(v) = r.failing_vertex.ed {
            prop_assert_eq!(r.per_vertex[v].eds_count_minus_v, 0);
        }
    }

    #[test]
    fn consecutive_circulants_are_regular(n in 3usize..80, k in 1usize..12) {
        prop_assume!(k < n / 2);
        let g = circulant(&CirculantSpec::consecutive(n, k).unwrap());
        prop_assert!(g.is_regular());
        prop_assert_eq!(g.degree(0), 2 * k);
    }
}
