#![allow(dead_code)]

use cyclebound::cycles::enumerate_cycles;
use cyclebound::{Rational, WeightedGraph};
use proptest::prelude::*;

/// Random simple graph on `1..=max_n` vertices with small positive rational
/// weights. Not necessarily connected.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = WeightedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec((any::<bool>(), 1i64..=20, 1i64..=6), pairs).prop_map(
            move |slots| {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        let (keep, p, q) = slots[k];
                        k += 1;
                        if keep {
                            edges.push((u, v, Rational::new(p, q)));
                        }
                    }
                }
                WeightedGraph::new(n, edges).unwrap()
            },
        )
    })
}

/// Maximum cycle weight through each edge by exhaustive enumeration.
pub fn oracle_c_w(g: &WeightedGraph) -> Vec<Option<Rational>> {
    let mut best: Vec<Option<Rational>> = vec![None; g.m()];
    for cycle in enumerate_cycles(g, 12).unwrap() {
        for id in cycle.edges(g) {
            if best[id].as_ref().is_none_or(|b| cycle.weight() > b) {
                best[id] = Some(cycle.weight().clone());
            }
        }
    }
    best
}

/// Number of components after deleting edge `skip` (if any).
pub fn components_without(g: &WeightedGraph, skip: Option<usize>) -> usize {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            x = p[x];
        }
        x
    }
    let mut count = g.n();
    for (id, e) in g.edges().iter().enumerate() {
        if Some(id) == skip {
            continue;
        }
        let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
        if a != b {
            parent[a] = b;
            count -= 1;
        }
    }
    count
}
