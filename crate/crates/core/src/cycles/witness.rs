use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, VertexId, WeightedGraph};
use crate::rational::Rational;

/// A simple cycle given by its vertex sequence, with its exact weight.
///
/// Stored canonically: the smallest vertex first, followed by the smaller of
/// its two cycle neighbours.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CycleWitness {
    vertices: Vec<VertexId>,
    weight: Rational,
}

/// Rotates and reflects a cyclic sequence into canonical form.
pub fn canonicalize_cycle(vertices: &mut [VertexId]) {
    let Some((pos, _)) = vertices.iter().enumerate().min_by_key(|&(_, v)| *v) else {
        return;
    };
    vertices.rotate_left(pos);
    let len = vertices.len();
    if len > 2 && vertices[1] > vertices[len - 1] {
        vertices[1..].reverse();
    }
}

impl CycleWitness {
    /// Validates that `vertices` is a simple cycle of `g` and computes its weight.
    pub fn new(g: &WeightedGraph, mut vertices: Vec<VertexId>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::invalid("a cycle needs at least three vertices"));
        }
        let mut seen = vec![false; g.n()];
        for &v in &vertices {
            if v >= g.n() || std::mem::replace(&mut seen[v], true) {
                return Err(Error::invalid(format!(
                    "vertex {v} repeated or out of range in cycle"
                )));
            }
        }
        canonicalize_cycle(&mut vertices);
        let mut weight = Rational::zero();
        for (a, b) in cyclic_pairs(&vertices) {
            let id = g
                .edge_between(a, b)
                .ok_or_else(|| Error::invalid(format!("cycle uses missing edge {a}-{b}")))?;
            weight += g.weight(id);
        }
        Ok(CycleWitness { vertices, weight })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// `w(C)` under the graph the witness was built from.
    pub fn weight(&self) -> &Rational {
        &self.weight
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Edge ids of the cycle in traversal order.
    pub fn edges(&self, g: &WeightedGraph) -> Vec<EdgeId> {
        cyclic_pairs(&self.vertices)
            .map(|(a, b)| g.edge_between(a, b).expect("witness edges exist"))
            .collect()
    }

    pub fn contains_edge(&self, g: &WeightedGraph, e: EdgeId) -> bool {
        let edge = g.edge(e);
        cyclic_pairs(&self.vertices).any(|(a, b)| (a.min(b), a.max(b)) == (edge.u, edge.v))
    }

    /// Weight of the same cycle under another weighting of `g`'s edges.
    pub fn weight_under(&self, g: &WeightedGraph, weights: &[Rational]) -> Rational {
        self.edges(g).into_iter().map(|id| &weights[id]).sum()
    }

    /// Re-checks adjacency and the stored weight against `g`.
    pub fn revalidate(&self, g: &WeightedGraph) -> bool {
        CycleWitness::new(g, self.vertices.clone()).is_ok_and(|c| c == *self)
    }

    pub(crate) fn from_canonical_unchecked(vertices: Vec<VertexId>, weight: Rational) -> Self {
        CycleWitness { vertices, weight }
    }
}

fn cyclic_pairs(vertices: &[VertexId]) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
    vertices
        .iter()
        .zip(vertices.iter().cycle().skip(1))
        .map(|(&a, &b)| (a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_is_rotation_and_reflection_invariant() {
        let forms = [
            vec![2, 0, 3, 1],
            vec![0, 3, 1, 2],
            vec![1, 3, 0, 2],
            vec![3, 1, 2, 0],
        ];
        for mut f in forms {
            canonicalize_cycle(&mut f);
            assert_eq!(f, vec![0, 2, 1, 3]);
        }
    }

    #[test]
    fn witness_validation() {
        let g = WeightedGraph::complete(4, |u, v| Rational::from_integer((u + v) as i64)).unwrap();
        let c = CycleWitness::new(&g, vec![3, 1, 0]).unwrap();
        assert_eq!(c.vertices(), &[0, 1, 3]);
        assert_eq!(c.weight(), &Rational::from_integer(1 + 4 + 3));
        assert!(c.revalidate(&g));
        assert!(c.contains_edge(&g, g.edge_between(1, 3).unwrap()));
        assert!(!c.contains_edge(&g, g.edge_between(1, 2).unwrap()));
        assert!(CycleWitness::new(&g, vec![0, 1]).is_err());
        assert!(CycleWitness::new(&g, vec![0, 1, 0]).is_err());
        let path =
            WeightedGraph::new(3, [(0, 1, Rational::one()), (1, 2, Rational::one())]).unwrap();
        assert!(CycleWitness::new(&path, vec![0, 1, 2]).is_err());
    }
}
