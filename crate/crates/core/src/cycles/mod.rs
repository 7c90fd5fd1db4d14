//! Heaviest cycle through an edge (`C_w(e)`), global heaviest cycle, cycle
//! enumeration and the Hamilton-cycle catalog of `K_r`.

mod enumerate;
mod hamilton;
mod search;
mod witness;

use rayon::prelude::*;
use serde::Serialize;

use crate::config::SearchConfig;
use crate::decomposition::{block_decomposition, find_bridges, BlockDecomposition, BridgeSet};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, VertexId, WeightedGraph};
use crate::rational::Rational;

pub use enumerate::{enumerate_cycles, Cycles};
pub use hamilton::{
    hamilton_catalog, pair_index, two_opt_graph_connected, HamiltonCatalog, MetaGraphConnectivity,
};
pub use witness::{canonicalize_cycle, CycleWitness};

use search::{heaviest_through, Scaled, ScaledWeights, SearchWeight};

/// Per-edge record of the local parameter and the self-normalized weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalProfile {
    pub edge: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
    pub weight: Rational,
    pub is_bridge: bool,
    /// `C_w(e)`: heaviest cycle weight through the edge, or `2 w(e)` for a bridge.
    pub c_w: Rational,
    pub witness: Option<CycleWitness>,
    /// `w(e) / C_w(e)`.
    pub phi: Rational,
}

/// Shared state for repeated exact searches on one graph: bridges, blocks and
/// the integer-scaled weights. Cycles never leave their block, so each search
/// is confined to the block containing its edge.
pub struct CycleSearch<'g> {
    g: &'g WeightedGraph,
    config: SearchConfig,
    bridges: BridgeSet,
    blocks: BlockDecomposition,
    scaled: Scaled,
}

impl<'g> CycleSearch<'g> {
    pub fn new(g: &'g WeightedGraph, config: SearchConfig) -> Self {
        CycleSearch {
            g,
            config,
            bridges: find_bridges(g),
            blocks: block_decomposition(g),
            scaled: Scaled::new(g),
        }
    }

    pub fn graph(&self) -> &'g WeightedGraph {
        self.g
    }

    pub fn bridges(&self) -> &BridgeSet {
        &self.bridges
    }

    pub fn blocks(&self) -> &BlockDecomposition {
        &self.blocks
    }

    fn check_edge(&self, e: EdgeId) -> Result<()> {
        if e >= self.g.m() {
            return Err(Error::EdgeOutOfRange {
                index: e,
                count: self.g.m(),
            });
        }
        Ok(())
    }

    fn run<W: SearchWeight>(
        &self,
        w: &[W],
        e: EdgeId,
        floor: Option<W>,
    ) -> Result<Option<(W, CycleWitness)>> {
        let block = &self.blocks.blocks[self.blocks.block_of_edge[e]];
        if block.order() > self.config.search_cap {
            return Err(Error::CapExceeded {
                what: "heaviest-cycle search",
                size: block.order(),
                cap: self.config.search_cap,
            });
        }
        Ok(heaviest_through(self.g, w, block, e, floor).map(|found| {
            let witness = CycleWitness::from_canonical_unchecked(
                found.cycle,
                self.scaled.to_rational(&found.weight),
            );
            debug_assert!(witness.revalidate(self.g));
            (found.weight, witness)
        }))
    }

    /// `C_w(e)` with a witness; bridges return `(2 w(e), None)`.
    pub fn through(&self, e: EdgeId) -> Result<(Rational, Option<CycleWitness>)> {
        self.check_edge(e)?;
        if self.bridges.contains(e) {
            return Ok((self.g.weight(e) * Rational::from_integer(2), None));
        }
        let found = match &self.scaled.weights {
            ScaledWeights::Small(w) => self.run(w, e, None)?.map(|(_, c)| c),
            ScaledWeights::Big(w) => self.run(w, e, None)?.map(|(_, c)| c),
        };
        let witness = found.expect("a non-bridge edge lies on a cycle");
        Ok((witness.weight().clone(), Some(witness)))
    }

    pub fn profile(&self, e: EdgeId) -> Result<LocalProfile> {
        let (c_w, witness) = self.through(e)?;
        let edge = self.g.edge(e);
        Ok(LocalProfile {
            edge: e,
            u: edge.u,
            v: edge.v,
            weight: edge.weight.clone(),
            is_bridge: witness.is_none(),
            phi: &edge.weight / &c_w,
            c_w,
            witness,
        })
    }

    /// Profiles for every edge, in edge order. Parallel and sequential runs
    /// produce identical results.
    pub fn profiles(&self) -> Result<Vec<LocalProfile>> {
        if self.config.parallel {
            (0..self.g.m())
                .into_par_iter()
                .map(|e| self.profile(e))
                .collect()
        } else {
            (0..self.g.m()).map(|e| self.profile(e)).collect()
        }
    }

    /// Heaviest cycle of the whole graph (canonically smallest among ties),
    /// or `None` for a forest.
    pub fn heaviest(&self) -> Result<Option<CycleWitness>> {
        match &self.scaled.weights {
            ScaledWeights::Small(w) => self.heaviest_with(w),
            ScaledWeights::Big(w) => self.heaviest_with(w),
        }
    }

    fn heaviest_with<W: SearchWeight>(&self, w: &[W]) -> Result<Option<CycleWitness>> {
        let mut best: Option<(W, CycleWitness)> = None;
        for e in 0..self.g.m() {
            if self.bridges.contains(e) {
                continue;
            }
            let floor = best.as_ref().map(|(bw, _)| bw.clone());
            if let Some((weight, witness)) = self.run(w, e, floor)? {
                let replace = match &best {
                    None => true,
                    Some((bw, bc)) => {
                        weight > *bw || (weight == *bw && witness.vertices() < bc.vertices())
                    }
                };
                if replace {
                    best = Some((weight, witness));
                }
            }
        }
        Ok(best.map(|(_, c)| c))
    }
}

/// `C_w(e)` for a single edge, with a witness cycle unless `e` is a bridge.
pub fn heaviest_cycle_through(
    g: &WeightedGraph,
    e: EdgeId,
    config: &SearchConfig,
) -> Result<(Rational, Option<CycleWitness>)> {
    CycleSearch::new(g, *config).through(e)
}

pub fn heaviest_cycle(g: &WeightedGraph, config: &SearchConfig) -> Result<Option<CycleWitness>> {
    CycleSearch::new(g, *config).heaviest()
}

/// `c(e)`: the number of edges of a longest cycle through `e`, 2 for a bridge.
pub fn longest_cycle_through(g: &WeightedGraph, e: EdgeId, config: &SearchConfig) -> Result<usize> {
    let unit = g.unit_weighted();
    let (c, _) = heaviest_cycle_through(&unit, e, config)?;
    Ok(c.numer().try_into().expect("cycle length fits in usize"))
}

pub fn local_profiles(g: &WeightedGraph, config: &SearchConfig) -> Result<Vec<LocalProfile>> {
    CycleSearch::new(g, *config).profiles()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    fn c4_heavy() -> WeightedGraph {
        WeightedGraph::new(
            4,
            [
                (0, 1, Rational::one()),
                (1, 2, Rational::one()),
                (2, 3, Rational::one()),
                (0, 3, Rational::from_integer(10)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn uniform_triangle() {
        let g = WeightedGraph::complete(3, |_, _| Rational::one()).unwrap();
        for e in 0..3 {
            let (c, w) = heaviest_cycle_through(&g, e, &cfg()).unwrap();
            assert_eq!(c, 3);
            assert_eq!(w.unwrap().vertices(), &[0, 1, 2]);
        }
    }

    #[test]
    fn bridge_convention() {
        let g =
            WeightedGraph::new(3, [(0, 1, Rational::new(3, 2)), (1, 2, Rational::one())]).unwrap();
        let (c, w) = heaviest_cycle_through(&g, 0, &cfg()).unwrap();
        assert_eq!(c, 3);
        assert!(w.is_none());
        assert_eq!(longest_cycle_through(&g, 0, &cfg()).unwrap(), 2);
    }

    #[test]
    fn heavy_four_cycle() {
        let g = c4_heavy();
        for e in 0..4 {
            assert_eq!(heaviest_cycle_through(&g, e, &cfg()).unwrap().0, 13);
        }
        assert_eq!(
            heaviest_cycle(&g, &cfg()).unwrap().unwrap().weight(),
            &Rational::from_integer(13)
        );
    }

    #[test]
    fn induced_k4_is_constant() {
        let a = [1i64, 2, 3, 4];
        let g = WeightedGraph::complete(4, |u, v| Rational::new(a[u] + a[v], 2)).unwrap();
        for e in 0..6 {
            assert_eq!(heaviest_cycle_through(&g, e, &cfg()).unwrap().0, 10);
        }
    }

    #[test]
    fn longest_cycles_unweighted() {
        let k4 = WeightedGraph::complete(4, |_, _| Rational::new(7, 3)).unwrap();
        assert_eq!(longest_cycle_through(&k4, 0, &cfg()).unwrap(), 4);
        let c5 = WeightedGraph::new(5, (0..5).map(|i| (i, (i + 1) % 5, Rational::one()))).unwrap();
        assert_eq!(longest_cycle_through(&c5, 2, &cfg()).unwrap(), 5);
    }

    #[test]
    fn heaviest_examples() {
        let forest =
            WeightedGraph::new(4, [(0, 1, Rational::one()), (2, 3, Rational::one())]).unwrap();
        assert!(heaviest_cycle(&forest, &cfg()).unwrap().is_none());
        let k4 = WeightedGraph::complete(4, |_, _| Rational::one()).unwrap();
        let best = heaviest_cycle(&k4, &cfg()).unwrap().unwrap();
        assert_eq!(best.weight(), &Rational::from_integer(4));
        // Smallest canonical Hamilton cycle.
        assert_eq!(best.vertices(), &[0, 1, 2, 3]);
    }

    #[test]
    fn ties_resolve_to_smallest_witness() {
        let k5 = WeightedGraph::complete(5, |_, _| Rational::one()).unwrap();
        let (_, w) = heaviest_cycle_through(&k5, k5.edge_between(2, 4).unwrap(), &cfg()).unwrap();
        assert_eq!(w.unwrap().vertices(), &[0, 1, 2, 4, 3]);
    }

    #[test]
    fn errors() {
        let g = c4_heavy();
        assert!(matches!(
            heaviest_cycle_through(&g, 9, &cfg()),
            Err(Error::EdgeOutOfRange { .. })
        ));
        let k6 = WeightedGraph::complete(6, |_, _| Rational::one()).unwrap();
        let tight = SearchConfig {
            search_cap: 5,
            ..cfg()
        };
        assert!(matches!(
            heaviest_cycle_through(&k6, 0, &tight),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn huge_denominators_use_big_integers() {
        let big = Rational::from_bigints(1.into(), num_bigint::BigInt::from(u64::MAX) * 3);
        let g = WeightedGraph::complete(4, |u, v| {
            if (u, v) == (0, 1) {
                big.clone()
            } else {
                Rational::one()
            }
        })
        .unwrap();
        let s = CycleSearch::new(&g, cfg());
        assert!(matches!(s.scaled.weights, ScaledWeights::Big(_)));
        assert_eq!(s.through(0).unwrap().0, Rational::from_integer(3) + &big);
    }

    #[test]
    fn sequential_equals_parallel() {
        let g = WeightedGraph::complete(6, |u, v| {
            Rational::new((u * 7 + v * 3) as i64 % 11 + 1, (u + 1) as i64)
        })
        .unwrap();
        let par = local_profiles(&g, &cfg()).unwrap();
        let seq = local_profiles(&g, &cfg().sequential()).unwrap();
        assert_eq!(par, seq);
    }
}
