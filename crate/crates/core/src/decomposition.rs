//! Bridges, 2-edge-connected components and biconnected blocks.
//!
//! One iterative lowlink DFS yields both the bridge set and the blocks, so
//! deep paths do not overflow the call stack.

use serde::Serialize;

use crate::graph::{EdgeId, VertexId, WeightedGraph};

/// Edges whose removal increases the number of components, sorted by id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BridgeSet {
    pub bridges: Vec<EdgeId>,
    #[serde(skip)]
    is_bridge: Vec<bool>,
}

impl BridgeSet {
    pub fn contains(&self, e: EdgeId) -> bool {
        self.is_bridge[e]
    }

    pub fn len(&self) -> usize {
        self.bridges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bridges.is_empty()
    }
}

/// Components `H_1..H_k` of `G - B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoEdgeDecomposition {
    /// Sorted vertex sets, ordered by smallest vertex.
    pub components: Vec<Vec<VertexId>>,
    pub bridge_count: usize,
    #[serde(skip)]
    pub component_of: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Block {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Block {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_clique(&self) -> bool {
        let k = self.vertices.len();
        self.edges.len() == k * (k - 1) / 2
    }

    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }
}

/// Maximal biconnected subgraphs; a bridge forms its own 2-vertex block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<VertexId>,
    #[serde(skip)]
    pub block_of_edge: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockGraphCheck {
    pub is_block_graph: bool,
    pub connected: bool,
    /// A block that does not induce a clique, if any.
    pub offending: Option<Block>,
}

struct Lowlink {
    is_bridge: Vec<bool>,
    blocks: Vec<Vec<EdgeId>>,
}

fn lowlink(g: &WeightedGraph) -> Lowlink {
    const UNSEEN: usize = usize::MAX;
    let n = g.n();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;
    let mut is_bridge = vec![false; g.m()];
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    // (vertex, edge to parent, next adjacency position)
    let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, None, 0));
        while let Some(frame) = stack.last_mut() {
            let (v, parent_edge, pos) = *frame;
            if pos < g.degree(v) {
                frame.2 += 1;
                let (y, id) = g.neighbors(v)[pos];
                if Some(id) == parent_edge {
                    continue;
                }
                if disc[y] == UNSEEN {
                    edge_stack.push(id);
                    disc[y] = timer;
                    low[y] = timer;
                    timer += 1;
                    stack.push((y, Some(id), 0));
                } else if disc[y] < disc[v] {
                    edge_stack.push(id);
                    low[v] = low[v].min(disc[y]);
                }
                continue;
            }
            stack.pop();
            let (Some(tree_edge), Some(&(p, _, _))) = (parent_edge, stack.last()) else {
                continue;
            };
            low[p] = low[p].min(low[v]);
            if low[v] > disc[p] {
                is_bridge[tree_edge] = true;
            }
            if low[v] >= disc[p] {
                let mut block = Vec::new();
                while let Some(id) = edge_stack.pop() {
                    block.push(id);
                    if id == tree_edge {
                        break;
                    }
                }
                blocks.push(block);
            }
        }
    }
    Lowlink { is_bridge, blocks }
}

pub fn find_bridges(g: &WeightedGraph) -> BridgeSet {
    let is_bridge = lowlink(g).is_bridge;
    let bridges = (0..g.m()).filter(|&e| is_bridge[e]).collect();
    BridgeSet { bridges, is_bridge }
}

pub fn two_edge_components(g: &WeightedGraph) -> TwoEdgeDecomposition {
    two_edge_components_with(g, &find_bridges(g))
}

pub fn two_edge_components_with(g: &WeightedGraph, bridges: &BridgeSet) -> TwoEdgeDecomposition {
    let n = g.n();
    let mut component_of = vec![usize::MAX; n];
    let mut components = Vec::new();
    for s in 0..n {
        if component_of[s] != usize::MAX {
            continue;
        }
        let c = components.len();
        component_of[s] = c;
        let mut stack = vec![s];
        let mut members = Vec::new();
        while let Some(x) = stack.pop() {
            members.push(x);
            for &(y, id) in g.neighbors(x) {
                if !bridges.contains(id) && component_of[y] == usize::MAX {
                    component_of[y] = c;
                    stack.push(y);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    TwoEdgeDecomposition {
        components,
        bridge_count: bridges.len(),
        component_of,
    }
}

pub fn block_decomposition(g: &WeightedGraph) -> BlockDecomposition {
    let mut blocks: Vec<Block> = lowlink(g)
        .blocks
        .into_iter()
        .map(|mut edges| {
            edges.sort_unstable();
            let mut vertices: Vec<VertexId> = edges
                .iter()
                .flat_map(|&id| [g.edge(id).u, g.edge(id).v])
                .collect();
            vertices.sort_unstable();
            vertices.dedup();
            Block { vertices, edges }
        })
        .collect();
    blocks.sort_by(|a, b| a.vertices.cmp(&b.vertices));

    let mut block_of_edge = vec![usize::MAX; g.m()];
    let mut membership = vec![0usize; g.n()];
    for (i, block) in blocks.iter().enumerate() {
        for &id in &block.edges {
            block_of_edge[id] = i;
        }
        for &v in &block.vertices {
            membership[v] += 1;
        }
    }
    let cut_vertices = (0..g.n()).filter(|&v| membership[v] >= 2).collect();
    BlockDecomposition {
        blocks,
        cut_vertices,
        block_of_edge,
    }
}

/// A block graph is connected and every block induces a clique. A tree is a
/// block graph (all blocks are `K_2`).
pub fn is_block_graph(g: &WeightedGraph) -> BlockGraphCheck {
    let connected = g.is_connected();
    let offending = block_decomposition(g)
        .blocks
        .into_iter()
        .find(|b| !b.is_clique());
    BlockGraphCheck {
        is_block_graph: connected && offending.is_none(),
        connected,
        offending,
    }
}
