//! Extremal families and seeded random instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, VertexId, WeightedGraph};
use crate::rational::Rational;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random positive weights `p/q` with `p` uniform in `1..=numerator_max` and
/// `q` uniform in `1..=denominator_max`, then reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightRange {
    pub numerator_max: u32,
    pub denominator_max: u32,
}

impl Default for WeightRange {
    fn default() -> Self {
        WeightRange {
            numerator_max: 100,
            denominator_max: 10,
        }
    }
}

impl WeightRange {
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Rational {
        let p = rng.gen_range(1..=self.numerator_max.max(1));
        let q = rng.gen_range(1..=self.denominator_max.max(1));
        Rational::new(p.into(), q.into())
    }
}

/// Random labelled tree (uniform over all `n^(n-2)` trees via a Prüfer code).
fn random_tree_edges<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<(VertexId, VertexId)> {
    if n < 2 {
        return Vec::new();
    }
    if n == 2 {
        return vec![(0, 1)];
    }
    let code: Vec<VertexId> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &code {
        degree[v] += 1;
    }
    let mut leaves: std::collections::BTreeSet<VertexId> =
        (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in &code {
        let leaf = leaves
            .pop_first()
            .expect("a Prüfer code always leaves a leaf");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let rest: Vec<VertexId> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    edges
}

pub fn gen_tree(n: usize, seed: u64) -> Result<WeightedGraph> {
    if n < 1 {
        return Err(Error::invalid("a tree needs at least one vertex"));
    }
    let mut rng = rng_from_seed(seed);
    let range = WeightRange::default();
    let edges: Vec<_> = random_tree_edges(n, &mut rng)
        .into_iter()
        .map(|(u, v)| (u, v, range.sample(&mut rng)))
        .collect();
    Ok(WeightedGraph::new(n, edges)?)
}

/// `K_r` with the vertex-induced weighting `w(uv) = (a(u) + a(v)) / 2`.
pub fn gen_induced_clique(r: usize, a: &[Rational]) -> Result<WeightedGraph> {
    if r < 3 {
        return Err(Error::invalid(format!(
            "induced clique needs r >= 3, got {r}"
        )));
    }
    if a.len() != r {
        return Err(Error::invalid(format!(
            "expected {r} vertex values, got {}",
            a.len()
        )));
    }
    if let Some(x) = a.iter().find(|x| x.is_negative()) {
        return Err(Error::invalid(format!("vertex value {x} is negative")));
    }
    let half = Rational::new(1, 2);
    Ok(WeightedGraph::complete(r, |u, v| (&a[u] + &a[v]) * &half)?)
}

/// Nonnegative vertex values for an induced clique. At most one entry is zero,
/// so every induced edge weight stays positive.
pub fn random_vertex_values<R: Rng + ?Sized>(r: usize, rng: &mut R) -> Vec<Rational> {
    let range = WeightRange::default();
    let mut a: Vec<Rational> = (0..r).map(|_| range.sample(rng)).collect();
    if rng.gen_bool(0.25) {
        let i = rng.gen_range(0..r);
        a[i] = Rational::zero();
    }
    a
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BlockWeights {
    /// Every edge of the block gets `weight`.
    Uniform { weight: Rational },
    /// Vertex-induced from `a`, listed in block vertex order.
    Induced { a: Vec<Rational> },
    /// Explicit weights in block-local lexicographic edge order; blocks of
    /// order at most 3 only.
    ExplicitPositive { weights: Vec<Rational> },
    /// Seeded random positive weights; blocks of order at most 3 only.
    RandomPositive,
}

/// A block graph assembled block by block. Block 0 takes vertices
/// `0..block_sizes[0]`; block `j >= 1` consists of the existing vertex
/// `attachment[j - 1]` plus `block_sizes[j] - 1` fresh vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockGraphSpec {
    pub block_sizes: Vec<usize>,
    pub attachment: Vec<VertexId>,
    pub per_block_weights: Vec<BlockWeights>,
}

impl BlockGraphSpec {
    pub fn vertex_count(&self) -> usize {
        match self.block_sizes.split_first() {
            None => 0,
            Some((first, rest)) => first + rest.iter().map(|s| s - 1).sum::<usize>(),
        }
    }
}

pub fn gen_block_graph(spec: &BlockGraphSpec, seed: u64) -> Result<WeightedGraph> {
    let blocks = spec.block_sizes.len();
    if blocks == 0 {
        return Err(Error::invalid("block graph spec has no blocks"));
    }
    if spec.attachment.len() != blocks - 1 {
        return Err(Error::invalid(format!(
            "{blocks} blocks need {} attachment vertices, got {}",
            blocks - 1,
            spec.attachment.len()
        )));
    }
    if spec.per_block_weights.len() != blocks {
        return Err(Error::invalid("one weight recipe per block required"));
    }
    let mut rng = rng_from_seed(seed);
    let range = WeightRange::default();
    let mut n = 0usize;
    let mut edges = Vec::new();
    for (j, (&size, recipe)) in spec
        .block_sizes
        .iter()
        .zip(&spec.per_block_weights)
        .enumerate()
    {
        if size < 2 {
            return Err(Error::invalid(format!("block {j} has order {size} < 2")));
        }
        let vertices: Vec<VertexId> = if j == 0 {
            (0..size).collect()
        } else {
            let anchor = spec.attachment[j - 1];
            if anchor >= n {
                return Err(Error::invalid(format!(
                    "block {j} attaches at vertex {anchor} but only {n} vertices exist"
                )));
            }
            std::iter::once(anchor).chain(n..n + size - 1).collect()
        };
        n = if j == 0 { size } else { n + size - 1 };

        let pairs = size * (size - 1) / 2;
        let weights: Vec<Rational> = match recipe {
            BlockWeights::Uniform { weight } => vec![weight.clone(); pairs],
            BlockWeights::Induced { a } => {
                if size < 3 || a.len() != size {
                    return Err(Error::invalid(format!(
                        "block {j}: induced weights need order >= 3 and {size} vertex values"
                    )));
                }
                let clique = gen_induced_clique(size, a)?;
                clique.edges().iter().map(|e| e.weight.clone()).collect()
            }
            BlockWeights::ExplicitPositive { weights } => {
                if size > 3 || weights.len() != pairs {
                    return Err(Error::invalid(format!(
                        "block {j}: explicit weights need order <= 3 and {pairs} values"
                    )));
                }
                weights.clone()
            }
            BlockWeights::RandomPositive => {
                if size > 3 {
                    return Err(Error::invalid(format!(
                        "block {j}: random weights need order <= 3"
                    )));
                }
                (0..pairs).map(|_| range.sample(&mut rng)).collect()
            }
        };
        let mut k = 0;
        for a in 0..size {
            for b in a + 1..size {
                edges.push((vertices[a], vertices[b], weights[k].clone()));
                k += 1;
            }
        }
    }
    Ok(WeightedGraph::new(n, edges)?)
}

/// A random spec whose blocks follow the equality recipe: cliques of order
/// at least 4 are induced (or uniform), smaller blocks are arbitrary.
pub fn random_block_graph_spec(
    max_blocks: usize,
    max_block_size: usize,
    seed: u64,
) -> BlockGraphSpec {
    let mut rng = rng_from_seed(seed);
    let range = WeightRange::default();
    let blocks = rng.gen_range(1..=max_blocks.max(1));
    let mut block_sizes = Vec::with_capacity(blocks);
    let mut attachment = Vec::new();
    let mut per_block_weights = Vec::new();
    let mut n = 0;
    for j in 0..blocks {
        let size = rng.gen_range(2..=max_block_size.max(2));
        if j > 0 {
            attachment.push(rng.gen_range(0..n));
            n += size - 1;
        } else {
            n = size;
        }
        block_sizes.push(size);
        let recipe = if rng.gen_bool(0.25) {
            BlockWeights::Uniform {
                weight: range.sample(&mut rng),
            }
        } else if size >= 4 {
            BlockWeights::Induced {
                a: random_vertex_values(size, &mut rng),
            }
        } else {
            BlockWeights::RandomPositive
        };
        per_block_weights.push(recipe);
    }
    BlockGraphSpec {
        block_sizes,
        attachment,
        per_block_weights,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Density {
    /// Exactly this many edges.
    Edges(usize),
    /// Each non-tree pair independently with this probability.
    Probability(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RandomSpec {
    pub n: usize,
    pub density: Density,
    pub weights: WeightRange,
    pub seed: u64,
}

/// Connected random graph: a random spanning tree plus extra edges drawn
/// uniformly from the remaining pairs. Deterministic per spec.
pub fn gen_random_connected(spec: &RandomSpec) -> Result<WeightedGraph> {
    let n = spec.n;
    if n < 1 {
        return Err(Error::invalid("graph needs at least one vertex"));
    }
    let max_m = n * (n - 1) / 2;
    let mut rng = rng_from_seed(spec.seed);
    let tree = random_tree_edges(n, &mut rng);
    let mut present = vec![false; max_m];
    let index = |u: VertexId, v: VertexId| crate::cycles::pair_index(n, u, v);
    for &(u, v) in &tree {
        present[index(u, v)] = true;
    }
    let mut rest: Vec<(VertexId, VertexId)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !present[index(u, v)])
        .collect();
    let extra: Vec<(VertexId, VertexId)> = match spec.density {
        Density::Edges(m) => {
            if m + 1 < n || m > max_m {
                return Err(Error::invalid(format!(
                    "cannot build a connected simple graph with n = {n} and m = {m}"
                )));
            }
            rest.shuffle(&mut rng);
            rest.truncate(m - (n - 1));
            rest
        }
        Density::Probability(p) => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::invalid(format!(
                    "edge probability {p} outside [0, 1]"
                )));
            }
            rest.into_iter().filter(|_| rng.gen_bool(p)).collect()
        }
    };
    let edges: Vec<_> = tree
        .into_iter()
        .chain(extra)
        .map(|(u, v)| (u, v, spec.weights.sample(&mut rng)))
        .collect();
    Ok(WeightedGraph::new(n, edges)?)
}

/// Copy of `g` with `w(e)` replaced by `w(e) + delta`.
pub fn perturb_edge(g: &WeightedGraph, e: EdgeId, delta: &Rational) -> Result<WeightedGraph> {
    if e >= g.m() {
        return Err(Error::EdgeOutOfRange {
            index: e,
            count: g.m(),
        });
    }
    let mut weights: Vec<Rational> = g.edges().iter().map(|x| x.weight.clone()).collect();
    weights[e] = &weights[e] + delta;
    Ok(g.with_weights(weights)?)
}
