mod common;

use common::{arb_graph, oracle_c_w};
use cyclebound::cycles::{heaviest_cycle, CycleSearch};
use cyclebound::format::{parse_graph, serialize_graph, serialize_graph_json};
use cyclebound::generators::{gen_random_connected, Density, RandomSpec, WeightRange};
use cyclebound::inequality::verify_main;
use cyclebound::{Rational, SearchConfig};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn pruned_search_matches_enumeration(g in arb_graph(8)) {
        let oracle = oracle_c_w(&g);
        let profiles = CycleSearch::new(&g, SearchConfig::default()).profiles().unwrap();
        for (p, best) in profiles.iter().zip(&oracle) {
            match best {
                None => {
                    prop_assert!(p.is_bridge);
                    prop_assert_eq!(&p.c_w, &(Rational::from_integer(2) * &p.weight));
                    prop_assert_eq!(&p.phi, &Rational::new(1, 2));
                }
                Some(max) => {
                    prop_assert!(!p.is_bridge);
                    prop_assert_eq!(&p.c_w, max);
                    let w = p.witness.as_ref().unwrap();
                    prop_assert!(w.revalidate(&g));
                    prop_assert!(w.contains_edge(&g, p.edge));
                    prop_assert_eq!(w.weight(), max);
                }
            }
        }
    }

    #[test]
    fn heaviest_cycle_is_max_of_local_values(g in arb_graph(8)) {
        let global = heaviest_cycle(&g, &SearchConfig::default()).unwrap();
        let best = oracle_c_w(&g).into_iter().flatten().max();
        prop_assert_eq!(global.map(|c| c.weight().clone()), best);
    }

    #[test]
    fn main_bound_holds_on_arbitrary_graphs(g in arb_graph(8)) {
        let report = verify_main(&g, &SearchConfig::default()).unwrap();
        prop_assert!(report.local_sum <= report.bound);
        let parts = g.connected_components().len();
        prop_assert_eq!(report.bound, Rational::new((g.n() - parts) as i64, 2));
    }

    #[test]
    fn serialization_round_trips(g in arb_graph(9)) {
        prop_assert_eq!(&parse_graph(&serialize_graph(&g)).unwrap(), &g);
        prop_assert_eq!(&parse_graph(&serialize_graph_json(&g)).unwrap(), &g);
    }
}

#[test]
fn seeded_graphs_round_trip() {
    for seed in 0..100u64 {
        let n = 2 + (seed as usize % 11);
        let g = gen_random_connected(&RandomSpec {
            n,
            density: Density::Probability(0.4),
            weights: WeightRange::default(),
            seed,
        })
        .unwrap();
        let text = serialize_graph(&g);
        assert_eq!(parse_graph(&text).unwrap(), g, "seed {seed}");
        assert_eq!(serialize_graph(&parse_graph(&text).unwrap()), text);
        assert_eq!(
            parse_graph(&serialize_graph_json(&g)).unwrap(),
            g,
            "seed {seed}"
        );
    }
}

#[test]
fn sequential_and_parallel_profiles_agree() {
    for seed in 0..20u64 {
        let g = gen_random_connected(&RandomSpec {
            n: 10,
            density: Density::Edges(22),
            weights: WeightRange::default(),
            seed,
        })
        .unwrap();
        let cfg = SearchConfig::default();
        let par = CycleSearch::new(&g, cfg).profiles().unwrap();
        let seq = CycleSearch::new(&g, cfg.sequential()).profiles().unwrap();
        assert_eq!(par, seq);
    }
}
