//! Branch-and-bound for the heaviest cycle through a fixed edge.
//!
//! Weights are rescaled by the lcm of their denominators so the inner loop
//! runs on integers: `u64` when the total weight fits, `BigUint` otherwise.
//! The scaling is exact and the results are mapped back to rationals.

use std::ops::{AddAssign, SubAssign};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::decomposition::Block;
use crate::graph::{EdgeId, VertexId, WeightedGraph};
use crate::rational::Rational;

use super::witness::canonicalize_cycle;

pub(crate) trait SearchWeight:
    Clone + Ord + Zero + Send + Sync + for<'a> AddAssign<&'a Self> + for<'a> SubAssign<&'a Self>
{
    fn to_bigint(&self) -> BigInt;
}

impl SearchWeight for u64 {
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl SearchWeight for BigUint {
    fn to_bigint(&self) -> BigInt {
        BigInt::from(self.clone())
    }
}

pub(crate) enum ScaledWeights {
    Small(Vec<u64>),
    Big(Vec<BigUint>),
}

/// Integer edge weights `w(e) * scale` with `scale` the lcm of denominators.
pub(crate) struct Scaled {
    pub weights: ScaledWeights,
    pub scale: BigInt,
}

impl Scaled {
    pub fn new(g: &WeightedGraph) -> Self {
        let scale = g
            .edges()
            .iter()
            .fold(BigInt::one(), |acc, e| acc.lcm(e.weight.denom()));
        let big: Vec<BigUint> = g
            .edges()
            .iter()
            .map(|e| {
                let scaled = e.weight.numer() * (&scale / e.weight.denom());
                scaled.to_biguint().expect("weights are positive")
            })
            .collect();
        let total: BigUint = big.iter().sum();
        let weights = if total.to_u64().is_some() {
            ScaledWeights::Small(big.iter().map(|w| w.to_u64().unwrap()).collect())
        } else {
            ScaledWeights::Big(big)
        };
        Scaled { weights, scale }
    }

    pub fn to_rational<W: SearchWeight>(&self, w: &W) -> Rational {
        Rational::from_bigints(w.to_bigint(), self.scale.clone())
    }
}

pub(crate) struct Found<W> {
    pub weight: W,
    /// Canonical vertex sequence.
    pub cycle: Vec<VertexId>,
}

struct PathSearch<'a, W> {
    g: &'a WeightedGraph,
    w: &'a [W],
    target: VertexId,
    skip: EdgeId,
    blocked: Vec<bool>,
    path: Vec<VertexId>,
    current: W,
    /// Total weight of edges between unblocked vertices, excluding `skip`.
    /// Any completion of the current path uses only such edges.
    available: W,
    /// Only cycles at least this heavy are of interest.
    floor: Option<W>,
    best: Option<Found<W>>,
}

impl<W: SearchWeight> PathSearch<'_, W> {
    fn threshold(&self) -> Option<&W> {
        match (&self.best, &self.floor) {
            (Some(b), _) => Some(&b.weight),
            (None, f) => f.as_ref(),
        }
    }

    fn admit(&mut self) {
        let better = match self.threshold() {
            None => true,
            Some(t) => self.current >= *t,
        };
        if !better {
            return;
        }
        let mut cycle = self.path.clone();
        cycle.push(self.target);
        canonicalize_cycle(&mut cycle);
        let replace = match &self.best {
            None => true,
            Some(b) => self.current > b.weight || (self.current == b.weight && cycle < b.cycle),
        };
        if replace {
            self.best = Some(Found {
                weight: self.current.clone(),
                cycle,
            });
        }
    }

    fn extend(&mut self, tip: VertexId) {
        // `tip` becomes interior: its remaining edges leave the pool.
        self.blocked[tip] = true;
        let mut removed = W::zero();
        for &(z, id) in self.g.neighbors(tip) {
            if id != self.skip && !self.blocked[z] {
                removed += &self.w[id];
            }
        }
        self.available -= &removed;

        for &(y, id) in self.g.neighbors(tip) {
            if id == self.skip || self.blocked[y] {
                continue;
            }
            self.current += &self.w[id];
            if y == self.target {
                self.admit();
            } else {
                let mut bound = self.current.clone();
                bound += &self.available;
                let promising = match self.threshold() {
                    None => true,
                    Some(t) => bound >= *t,
                };
                if promising {
                    self.path.push(y);
                    self.extend(y);
                    self.path.pop();
                }
            }
            self.current -= &self.w[id];
        }

        self.available += &removed;
        self.blocked[tip] = false;
    }
}

/// Heaviest cycle through `e` inside `block`, ties broken towards the
/// canonically smallest vertex sequence. Returns `None` when no cycle through
/// `e` reaches `floor`.
pub(crate) fn heaviest_through<W: SearchWeight>(
    g: &WeightedGraph,
    w: &[W],
    block: &Block,
    e: EdgeId,
    floor: Option<W>,
) -> Option<Found<W>> {
    let edge = g.edge(e);
    let mut blocked = vec![true; g.n()];
    for &v in &block.vertices {
        blocked[v] = false;
    }
    let mut available = W::zero();
    for &id in &block.edges {
        if id != e {
            available += &w[id];
        }
    }
    let mut search = PathSearch {
        g,
        w,
        target: edge.v,
        skip: e,
        blocked,
        path: vec![edge.u],
        current: w[e].clone(),
        available,
        floor,
        best: None,
    };
    search.extend(edge.u);
    search.best
}
