mod common;

use proptest::prelude::*;
use sigcover::circuits::enumerate_circuits;
use sigcover::coverability::{is_coverable, is_coverable_oracle};
use sigcover::cover::{parse_cover, write_cover, CoverFamily, CoverMember};
use sigcover::graph::io;
use sigcover::sp::is_k4_minor_free;
use sigcover::{Sign, SignedGraph, SwitchSet};

fn graph(max_vertices: usize, max_edges: usize) -> impl Strategy<Value = SignedGraph> {
    (1..=max_vertices).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n, any::<bool>()), 1..=max_edges).prop_map(move |es| {
            SignedGraph::from_edges(n, es.into_iter().map(|(u, v, neg)| (u, v, if neg { Sign::Neg } else { Sign::Pos })))
                .unwrap()
        })
    })
}

/// A spanning tree plus extra edges, so the graph is connected.
fn connected(max_vertices: usize, max_extra: usize) -> impl Strategy<Value = SignedGraph> {
    (1..=max_vertices).prop_flat_map(move |n| {
        let tree = (1..n).map(|v| (0..v, any::<bool>())).collect::<Vec<_>>();
        let extra = prop::collection::vec((0..n, 0..n, any::<bool>()), 0..=max_extra);
        (tree, extra).prop_map(move |(tree, extra)| {
            let sign = |neg: bool| if neg { Sign::Neg } else { Sign::Pos };
            let mut g = SignedGraph::new(n);
            for (v, (u, neg)) in tree.into_iter().enumerate() {
                g.add_edge(u, v + 1, sign(neg)).unwrap();
            }
            for (u, v, neg) in extra {
                g.add_edge(u, v, sign(neg)).unwrap();
            }
            g
        })
    })
}

fn with_switch(max_vertices: usize, max_edges: usize) -> impl Strategy<Value = (SignedGraph, SwitchSet)> {
    graph(max_vertices, max_edges).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), prop::collection::btree_set(0..n, 0..=n).prop_map(SwitchSet))
    })
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn switching_is_an_involution((g, s) in with_switch(8, 14)) {
        prop_assert_eq!(g.switch(&s).unwrap().switch(&s).unwrap(), g);
    }

    #[test]
    fn epsilon_is_switching_invariant((g, s) in with_switch(8, 14)) {
        prop_assert_eq!(g.switch(&s).unwrap().negativeness().unwrap(), g.negativeness().unwrap());
    }

    #[test]
    fn epsilon_matches_brute_force(g in graph(7, 12)) {
        prop_assert_eq!(g.negativeness().unwrap(), common::brute_epsilon(&g));
    }

    #[test]
    fn balanced_iff_epsilon_zero(g in graph(8, 14)) {
        prop_assert_eq!(g.is_balanced(), g.negativeness().unwrap() == 0);
        if let Some(s) = g.balancing_switch() {
            prop_assert_eq!(g.switch(&s).unwrap().negative_edges().count(), 0);
        }
    }

    #[test]
    fn circuits_match_subset_brute_force(g in graph(6, 10)) {
        let found = enumerate_circuits(&g, 1 << 20).unwrap();
        let sets: std::collections::BTreeSet<Vec<usize>> = found.iter().map(|c| c.edge_ids.clone()).collect();
        prop_assert_eq!(sets.len(), found.len());
        prop_assert_eq!(&sets, &common::brute_circuits(&g));
        for c in &found {
            prop_assert_eq!(c.sign, g.sign_of(&c.edge_ids).unwrap());
        }
    }

    #[test]
    fn coverability_criterion_matches_oracle(g in connected(5, 5)) {
        prop_assume!(g.edge_count() <= 8);
        prop_assert_eq!(is_coverable(&g).unwrap().coverable, is_coverable_oracle(&g).unwrap());
    }

    #[test]
    fn k4_minor_matches_brute_force(g in graph(6, 11)) {
        prop_assert_eq!(is_k4_minor_free(&g), !common::brute_has_k4_minor(&g));
    }

    #[test]
    fn graph_text_round_trips(g in graph(8, 14), t in any::<bool>()) {
        let terminals = (t && g.vertex_count() > 1).then_some((0, g.vertex_count() - 1));
        let back = io::parse(&io::write(&g, terminals)).unwrap();
        prop_assert_eq!(back.graph, g);
        prop_assert_eq!(back.terminals, terminals);
    }

    #[test]
    fn cover_text_round_trips(g in graph(5, 8)) {
        let f: CoverFamily = enumerate_circuits(&g, 1000)
            .unwrap()
            .iter()
            .filter(|c| c.is_balanced())
            .filter_map(|c| CoverMember::signed(&g, &c.edge_ids))
            .collect();
        let text = write_cover(&f, 2);
        let parsed = parse_cover(&text).unwrap();
        prop_assert_eq!(parsed.k, 2);
        prop_assert_eq!(parsed.into_family(&g).unwrap(), f);
    }
}

#[test]
fn known_epsilon_values() {
    use sigcover::instances::{gadget, GadgetId};
    for id in GadgetId::SMALL {
        let g = gadget(id).graph;
        assert_eq!(g.negativeness().unwrap(), 1, "{id}");
        assert!(!is_coverable(&g).unwrap().coverable);
    }
}
