//! Simple undirected graphs with strictly positive rational edge weights.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::rational::Rational;

/// Dense vertex index in `0..n`.
pub type VertexId = usize;
/// Index into [`WeightedGraph::edges`].
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(VertexId),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("edge {u}-{v} has non-positive weight {weight}")]
    NonPositiveWeight {
        u: VertexId,
        v: VertexId,
        weight: Rational,
    },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Edge {
    /// Smaller endpoint.
    pub u: VertexId,
    /// Larger endpoint.
    pub v: VertexId,
    pub weight: Rational,
}

impl Edge {
    pub fn other(&self, x: VertexId) -> VertexId {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// Immutable weighted graph. Edges are stored with `u < v` and sorted by
/// `(u, v)`, so two graphs with the same edge set compare equal and edge
/// indices are canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<Edge>,
    /// Per vertex, `(neighbor, edge id)` sorted by neighbor.
    adjacency: Vec<Vec<(VertexId, EdgeId)>>,
}

impl WeightedGraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId, Rational)>,
    {
        let mut list = Vec::new();
        for (a, b, weight) in edges {
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { vertex, n });
                }
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if !weight.is_positive() {
                return Err(GraphError::NonPositiveWeight { u, v, weight });
            }
            list.push(Edge { u, v, weight });
        }
        list.sort_by_key(|e| (e.u, e.v));
        if let Some(w) = list
            .windows(2)
            .find(|w| (w[0].u, w[0].v) == (w[1].u, w[1].v))
        {
            return Err(GraphError::DuplicateEdge(w[0].u, w[0].v));
        }
        let mut adjacency = vec![Vec::new(); n];
        for (id, e) in list.iter().enumerate() {
            adjacency[e.u].push((e.v, id));
            adjacency[e.v].push((e.u, id));
        }
        for row in &mut adjacency {
            row.sort_unstable();
        }
        Ok(WeightedGraph {
            n,
            edges: list,
            adjacency,
        })
    }

    /// Complete graph `K_r` with weights from `weight(u, v)` (`u < v`).
    pub fn complete(
        r: usize,
        mut weight: impl FnMut(VertexId, VertexId) -> Rational,
    ) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(r * r.saturating_sub(1) / 2);
        for u in 0..r {
            for v in u + 1..r {
                edges.push((u, v, weight(u, v)));
            }
        }
        WeightedGraph::new(r, edges)
    }

    /// Same edge set, all weights one.
    pub fn unit_weighted(&self) -> Self {
        let edges = self.edges.iter().map(|e| Edge {
            u: e.u,
            v: e.v,
            weight: Rational::one(),
        });
        WeightedGraph {
            n: self.n,
            edges: edges.collect(),
            adjacency: self.adjacency.clone(),
        }
    }

    /// Same edge set with the given weights (indexed by edge id).
    pub fn with_weights(&self, weights: Vec<Rational>) -> Result<Self, GraphError> {
        assert_eq!(weights.len(), self.edges.len(), "one weight per edge");
        let mut edges = Vec::with_capacity(weights.len());
        for (e, weight) in self.edges.iter().zip(weights) {
            if !weight.is_positive() {
                return Err(GraphError::NonPositiveWeight {
                    u: e.u,
                    v: e.v,
                    weight,
                });
            }
            edges.push(Edge {
                u: e.u,
                v: e.v,
                weight,
            });
        }
        Ok(WeightedGraph {
            n: self.n,
            edges,
            adjacency: self.adjacency.clone(),
        })
    }

    /// Subgraph induced by `vertices`, relabelled to `0..k` in sorted order.
    /// Returns the subgraph together with the original id of each of its edges.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> (WeightedGraph, Vec<EdgeId>) {
        let sorted: BTreeSet<VertexId> = vertices.iter().copied().collect();
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in sorted.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        let mut origin = Vec::new();
        for (id, e) in self.edges.iter().enumerate() {
            if local[e.u] != usize::MAX && local[e.v] != usize::MAX {
                edges.push((local[e.u], local[e.v], e.weight.clone()));
                origin.push(id);
            }
        }
        // Relabelling is monotone, so the sorted edge order is preserved and
        // `origin` lines up with the new edge ids.
        let sub = WeightedGraph::new(sorted.len(), edges)
            .expect("induced subgraph of a valid graph is valid");
        (sub, origin)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id]
    }

    pub fn weight(&self, id: EdgeId) -> &Rational {
        &self.edges[id].weight
    }

    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn edge_between(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
        let row = self.adjacency.get(a)?;
        row.binary_search_by_key(&b, |&(x, _)| x)
            .ok()
            .map(|i| row[i].1)
    }

    /// `w(G)`, the exact sum of all edge weights.
    pub fn total_weight(&self) -> Rational {
        self.edges.iter().map(|e| &e.weight).sum()
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = Vec::new();
            while let Some(x) = stack.pop() {
                comp.push(x);
                for &(y, _) in &self.adjacency[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }
}

/// Exact sum of the weights of the given edges, `w(H)` for a subgraph `H`.
pub fn subgraph_weight(g: &WeightedGraph, edges: impl IntoIterator<Item = EdgeId>) -> Rational {
    edges.into_iter().map(|id| g.weight(id)).sum()
}
