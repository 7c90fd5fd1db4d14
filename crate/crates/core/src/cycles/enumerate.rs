//! Exhaustive simple-cycle enumeration. Slow, simple and independent of the
//! branch-and-bound search, so it serves as the reference oracle.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, VertexId, WeightedGraph};
use crate::rational::Rational;

use super::CycleWitness;

/// Every simple cycle exactly once, already in canonical form.
///
/// Cycles are grouped by smallest vertex `s` and found by a DFS restricted to
/// vertices above `s`; a closing edge back to `s` is reported only when the
/// second vertex is smaller than the last, which removes the mirror image.
pub struct Cycles<'g> {
    g: &'g WeightedGraph,
    start: VertexId,
    path: Vec<VertexId>,
    path_edges: Vec<EdgeId>,
    cursor: Vec<usize>,
    on_path: Vec<bool>,
}

pub fn enumerate_cycles(g: &WeightedGraph, vertex_cap: usize) -> Result<Cycles<'_>> {
    if g.n() > vertex_cap {
        return Err(Error::CapExceeded {
            what: "cycle enumeration",
            size: g.n(),
            cap: vertex_cap,
        });
    }
    Ok(Cycles {
        g,
        start: 0,
        path: Vec::new(),
        path_edges: Vec::new(),
        cursor: Vec::new(),
        on_path: vec![false; g.n()],
    })
}

impl Cycles<'_> {
    fn witness(&self, closing: EdgeId) -> CycleWitness {
        let weight: Rational = self
            .path_edges
            .iter()
            .chain(std::iter::once(&closing))
            .map(|&id| self.g.weight(id))
            .sum();
        CycleWitness::from_canonical_unchecked(self.path.clone(), weight)
    }
}

impl Iterator for Cycles<'_> {
    type Item = CycleWitness;

    fn next(&mut self) -> Option<CycleWitness> {
        loop {
            if self.path.is_empty() {
                if self.start >= self.g.n() {
                    return None;
                }
                self.path.push(self.start);
                self.cursor.push(0);
                self.on_path[self.start] = true;
            }
            let tip = *self.path.last().unwrap();
            let pos = *self.cursor.last().unwrap();
            if let Some(&(y, id)) = self.g.neighbors(tip).get(pos) {
                *self.cursor.last_mut().unwrap() += 1;
                if y == self.start {
                    if self.path.len() >= 3 && self.path[1] < tip {
                        return Some(self.witness(id));
                    }
                } else if y > self.start && !self.on_path[y] {
                    self.on_path[y] = true;
                    self.path.push(y);
                    self.path_edges.push(id);
                    self.cursor.push(0);
                }
                continue;
            }
            self.on_path[tip] = false;
            self.path.pop();
            self.cursor.pop();
            self.path_edges.truncate(self.path.len().saturating_sub(1));
            if self.path.is_empty() {
                self.start += 1;
            }
        }
    }
}
