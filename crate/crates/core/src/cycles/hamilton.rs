//! Undirected Hamilton cycles of `K_r` and their share-an-edge meta-graph.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::VertexId;

/// Index of edge `{u, v}` of `K_r` in lexicographic `(min, max)` order. This
/// matches the edge ids of [`WeightedGraph::complete`](crate::graph::WeightedGraph::complete).
pub fn pair_index(r: usize, u: VertexId, v: VertexId) -> usize {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    debug_assert!(b < r && a != b);
    a * r - a * (a + 1) / 2 + (b - a - 1)
}

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HamiltonCatalog {
    pub r: usize,
    /// Canonical vertex sequences, one per undirected Hamilton cycle.
    pub cycles: Vec<Vec<VertexId>>,
    /// Number of catalog cycles through each edge, by [`pair_index`].
    pub incidence: Vec<u64>,
}

impl HamiltonCatalog {
    /// Edge ids of cycle `i` as a bitmask (`r <= 8` gives at most 28 edges).
    pub fn edge_mask(&self, i: usize) -> u64 {
        let c = &self.cycles[i];
        (0..c.len()).fold(0u64, |mask, k| {
            mask | 1 << pair_index(self.r, c[k], c[(k + 1) % c.len()])
        })
    }

    pub fn expected_count(&self) -> u64 {
        factorial(self.r - 1) / 2
    }

    pub fn expected_incidence(&self) -> u64 {
        factorial(self.r - 2)
    }

    /// `|H| = (r-1)!/2` and every edge lies on exactly `(r-2)!` cycles.
    pub fn counts_hold(&self) -> bool {
        self.cycles.len() as u64 == self.expected_count()
            && self
                .incidence
                .iter()
                .all(|&k| k == self.expected_incidence())
    }
}

/// All `(r-1)!/2` Hamilton cycles of `K_r` for `3 <= r <= 8`.
pub fn hamilton_catalog(r: usize) -> Result<HamiltonCatalog> {
    if !(3..=8).contains(&r) {
        return Err(Error::invalid(format!(
            "Hamilton catalog needs 3 <= r <= 8, got {r}"
        )));
    }
    let mut cycles = Vec::new();
    let mut incidence = vec![0u64; r * (r - 1) / 2];
    // Vertex 0 first; of each mirror pair keep the one with second < last.
    for perm in (1..r).permutations(r - 1) {
        if perm[0] > perm[r - 2] {
            continue;
        }
        let mut cycle = Vec::with_capacity(r);
        cycle.push(0);
        cycle.extend(perm);
        for k in 0..r {
            incidence[pair_index(r, cycle[k], cycle[(k + 1) % r])] += 1;
        }
        cycles.push(cycle);
    }
    let catalog = HamiltonCatalog {
        r,
        cycles,
        incidence,
    };
    if !catalog.counts_hold() {
        return Err(Error::Counterexample {
            claim: "Hamilton cycle counts in K_r",
            detail: format!(
                "r = {r}: {} cycles, incidences {:?}",
                catalog.cycles.len(),
                catalog.incidence
            ),
            instance: format!("K_{r}"),
        });
    }
    Ok(catalog)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MetaGraphConnectivity {
    pub r: usize,
    pub nodes: usize,
    pub meta_edges: usize,
    pub components: usize,
    pub connected: bool,
}

/// Builds the graph on Hamilton cycles of `K_r` joining two cycles when they
/// share an edge, and reports whether it is connected (`4 <= r <= 7`).
pub fn two_opt_graph_connected(r: usize) -> Result<MetaGraphConnectivity> {
    if !(4..=7).contains(&r) {
        return Err(Error::invalid(format!(
            "meta-graph check needs 4 <= r <= 7, got {r}"
        )));
    }
    let catalog = hamilton_catalog(r)?;
    let masks: Vec<u64> = (0..catalog.cycles.len())
        .map(|i| catalog.edge_mask(i))
        .collect();
    let nodes = masks.len();
    let mut parent: Vec<usize> = (0..nodes).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut meta_edges = 0;
    let mut components = nodes;
    for i in 0..nodes {
        for j in i + 1..nodes {
            if masks[i] & masks[j] != 0 {
                meta_edges += 1;
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                    components -= 1;
                }
            }
        }
    }
    Ok(MetaGraphConnectivity {
        r,
        nodes,
        meta_edges,
        components,
        connected: components == 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_index_is_lexicographic() {
        let r = 5;
        let mut expected = 0;
        for u in 0..r {
            for v in u + 1..r {
                assert_eq!(pair_index(r, u, v), expected);
                assert_eq!(pair_index(r, v, u), expected);
                expected += 1;
            }
        }
    }

    #[test]
    fn small_catalogs() {
        let c3 = hamilton_catalog(3).unwrap();
        assert_eq!(c3.cycles, vec![vec![0, 1, 2]]);
        assert_eq!(c3.incidence, vec![1, 1, 1]);

        let c4 = hamilton_catalog(4).unwrap();
        assert_eq!(
            c4.cycles,
            vec![vec![0, 1, 2, 3], vec![0, 1, 3, 2], vec![0, 2, 1, 3]]
        );
        assert!(c4.incidence.iter().all(|&k| k == 2));

        let c5 = hamilton_catalog(5).unwrap();
        assert_eq!(c5.cycles.len(), 12);
        assert!(c5.incidence.iter().all(|&k| k == 6));
    }

    #[test]
    fn range_checks() {
        assert!(hamilton_catalog(2).is_err());
        assert!(hamilton_catalog(9).is_err());
        assert!(two_opt_graph_connected(3).is_err());
        assert!(two_opt_graph_connected(8).is_err());
    }

    #[test]
    fn k4_meta_graph_is_a_triangle() {
        let m = two_opt_graph_connected(4).unwrap();
        assert_eq!((m.nodes, m.meta_edges, m.components), (3, 3, 1));
    }
}
