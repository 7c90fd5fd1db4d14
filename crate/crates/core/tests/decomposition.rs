mod common;

use std::collections::BTreeSet;

use common::{arb_graph, components_without};
use cyclebound::cycles::enumerate_cycles;
use cyclebound::decomposition::{
    block_decomposition, find_bridges, is_block_graph, two_edge_components,
};
use cyclebound::Rational;
use proptest::prelude::*;

proptest! {
    #[test]
    fn bridges_match_deletion_oracle(g in arb_graph(7)) {
        let base = components_without(&g, None);
        let bridges = find_bridges(&g);
        for id in 0..g.m() {
            let is_bridge = components_without(&g, Some(id)) > base;
            prop_assert_eq!(bridges.contains(id), is_bridge, "edge {}", id);
        }
    }

    #[test]
    fn blocks_match_shared_cycle_classes(g in arb_graph(7)) {
        // Two edges share a block iff some cycle contains both.
        let mut class: Vec<usize> = (0..g.m()).collect();
        fn find(c: &mut [usize], mut x: usize) -> usize {
            while c[x] != x { x = c[x]; }
            x
        }
        for cycle in enumerate_cycles(&g, 12).unwrap() {
            let edges = cycle.edges(&g);
            for pair in edges.windows(2) {
                let (a, b) = (find(&mut class, pair[0]), find(&mut class, pair[1]));
                class[a] = b;
            }
        }
        let mut expected: BTreeSet<Vec<usize>> = BTreeSet::new();
        for root in 0..g.m() {
            let members: Vec<usize> = (0..g.m()).filter(|&e| find(&mut class, e) == root).collect();
            if !members.is_empty() {
                expected.insert(members);
            }
        }
        let blocks = block_decomposition(&g);
        let actual: BTreeSet<Vec<usize>> = blocks
            .blocks
            .iter()
            .map(|b| { let mut e = b.edges.clone(); e.sort(); e })
            .collect();
        prop_assert_eq!(actual, expected);
        for (id, &b) in blocks.block_of_edge.iter().enumerate() {
            prop_assert!(blocks.blocks[b].edges.contains(&id));
        }
    }

    #[test]
    fn bridge_accounting_identity(g in arb_graph(8)) {
        let decomposition = two_edge_components(&g);
        let parts = g.connected_components().len();
        let sum: usize = decomposition.components.iter().map(|c| c.len() - 1).sum();
        prop_assert_eq!(sum + decomposition.bridge_count, g.n() - parts);
        let covered: usize = decomposition.components.iter().map(Vec::len).sum();
        prop_assert_eq!(covered, g.n());
    }

    #[test]
    fn cut_vertices_match_deletion_oracle(g in arb_graph(7)) {
        let blocks = block_decomposition(&g);
        let base = g.connected_components().len();
        for v in 0..g.n() {
            let keep: Vec<usize> = (0..g.n()).filter(|&x| x != v).collect();
            let (sub, _) = g.induced_subgraph(&keep);
            let isolated = usize::from(g.degree(v) == 0);
            let is_cut = sub.connected_components().len() + isolated > base;
            prop_assert_eq!(blocks.cut_vertices.contains(&v), is_cut, "vertex {}", v);
        }
    }

    #[test]
    fn block_graphs_are_exactly_cycle_clique_graphs(g in arb_graph(6)) {
        // Connected, and every cycle's vertex set induces a clique.
        let every_cycle_in_clique = enumerate_cycles(&g, 12).unwrap().all(|c| {
            let vs = c.vertices();
            vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.edge_between(a, b).is_some()))
        });
        prop_assert_eq!(is_block_graph(&g).is_block_graph, g.is_connected() && every_cycle_in_clique);
    }
}

#[test]
fn path_of_two_hundred_thousand_vertices() {
    let n = 200_000;
    let g = cyclebound::WeightedGraph::new(n, (1..n).map(|v| (v - 1, v, Rational::one()))).unwrap();
    assert_eq!(find_bridges(&g).len(), n - 1);
    assert!(is_block_graph(&g).is_block_graph);
}
