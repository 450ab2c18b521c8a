//! Biconnected components, cut vertices, the block-cutpoint tree and the
//! cut-edge graph `C(G)`.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

/// One block: a maximal 2-connected subgraph or a single cut edge.
#[derive(Debug, Clone)]
pub struct Block {
    /// Edge ids, sorted.
    pub edge_ids: Vec<EdgeId>,
    /// Vertices, sorted.
    pub vertices: Vec<usize>,
    /// Exactly one edge.
    pub is_trivial: bool,
}

/// Block decomposition of a connected graph.
#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    /// Canonical order: sorted by the minimal contained edge.
    pub blocks: Vec<Block>,
    /// Sorted cut vertices.
    pub cut_vertices: Vec<usize>,
    /// Edge id -> block index.
    pub block_of_edge: Vec<usize>,
    /// Vertex -> indices of blocks containing it (ascending).
    pub blocks_at_vertex: Vec<Vec<usize>>,
    /// Bipartite block-cutpoint tree edges `(cut vertex, block index)`.
    pub bc_edges: Vec<(usize, usize)>,
}

impl BlockDecomposition {
    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.blocks_at_vertex[v].len() >= 2
    }

    /// A graph is 2-connected iff it has exactly one block and n >= 3.
    pub fn is_two_connected(&self, g: &Graph) -> bool {
        self.blocks.len() == 1 && g.n() >= 3
    }
}

/// Lowpoint DFS over a connected graph with `n >= 2`.
pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition> {
    if g.n() < 2 {
        return Err(Error::Precondition(
            "block decomposition requires n >= 2".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }

    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    let mut raw_blocks: Vec<Vec<EdgeId>> = Vec::new();
    let mut is_cut = vec![false; n];

    // Iterative DFS from vertex 0; frames carry the adjacency cursor.
    struct Frame {
        v: usize,
        parent_edge: Option<EdgeId>,
        next: usize,
        children: usize,
    }
    let mut stack = vec![Frame {
        v: 0,
        parent_edge: None,
        next: 0,
        children: 0,
    }];
    disc[0] = timer;
    low[0] = timer;
    timer += 1;

    while let Some(frame) = stack.last_mut() {
        let v = frame.v;
        if frame.next < g.neighbours(v).len() {
            let w = g.neighbours(v)[frame.next];
            frame.next += 1;
            let e = g.edge_id(v, w).unwrap();
            if Some(e) == frame.parent_edge {
                continue;
            }
            if disc[w] == usize::MAX {
                edge_stack.push(e);
                frame.children += 1;
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                stack.push(Frame {
                    v: w,
                    parent_edge: Some(e),
                    next: 0,
                    children: 0,
                });
            } else if disc[w] < disc[v] {
                edge_stack.push(e);
                low[v] = low[v].min(disc[w]);
            }
        } else {
            let finished = stack.pop().unwrap();
            if let Some(pe) = finished.parent_edge {
                let parent = stack.last().unwrap().v;
                low[parent] = low[parent].min(low[finished.v]);
                if low[finished.v] >= disc[parent] {
                    // parent closes a block here
                    let mut block = Vec::new();
                    while let Some(&top) = edge_stack.last() {
                        edge_stack.pop();
                        block.push(top);
                        if top == pe {
                            break;
                        }
                    }
                    raw_blocks.push(block);
                    let root = stack.len() == 1;
                    if !root || stack.last().unwrap().children > 1 {
                        is_cut[parent] = true;
                    }
                }
            }
        }
    }

    // Root cut condition is handled above; normalize block contents.
    let mut blocks: Vec<Block> = raw_blocks
        .into_iter()
        .map(|mut edge_ids| {
            edge_ids.sort_unstable();
            let mut vertices: Vec<usize> = edge_ids
                .iter()
                .flat_map(|&e| {
                    let (u, v) = g.endpoints(e);
                    [u, v]
                })
                .collect();
            vertices.sort_unstable();
            vertices.dedup();
            let is_trivial = edge_ids.len() == 1;
            Block {
                edge_ids,
                vertices,
                is_trivial,
            }
        })
        .collect();
    blocks.sort_by_key(|b| g.endpoints(b.edge_ids[0]));

    let mut block_of_edge = vec![usize::MAX; g.m()];
    for (i, b) in blocks.iter().enumerate() {
        for &e in &b.edge_ids {
            block_of_edge[e] = i;
        }
    }
    debug_assert!(block_of_edge.iter().all(|&b| b != usize::MAX));

    let mut blocks_at_vertex = vec![Vec::new(); n];
    for (i, b) in blocks.iter().enumerate() {
        for &v in &b.vertices {
            blocks_at_vertex[v].push(i);
        }
    }
    let cut_vertices: Vec<usize> = (0..n).filter(|&v| blocks_at_vertex[v].len() >= 2).collect();
    debug_assert_eq!(
        cut_vertices,
        (0..n).filter(|&v| is_cut[v]).collect::<Vec<_>>()
    );

    let mut bc_edges = Vec::new();
    for &v in &cut_vertices {
        for &b in &blocks_at_vertex[v] {
            bc_edges.push((v, b));
        }
    }

    Ok(BlockDecomposition {
        blocks,
        cut_vertices,
        block_of_edge,
        blocks_at_vertex,
        bc_edges,
    })
}

/// The cut-edge graph `C(G)`: the subgraph formed by all bridges.
#[derive(Debug, Clone)]
pub struct CutEdgeGraph {
    /// Bridge edge ids, sorted.
    pub edge_ids: Vec<EdgeId>,
    /// Vertices incident to at least one bridge, sorted.
    pub vertices: Vec<usize>,
    /// `deg_{C(G)}(v)` indexed by graph vertex (0 outside `C(G)`).
    pub degree: Vec<usize>,
    /// Maximum degree of `C(G)` (0 when empty).
    pub delta: usize,
    /// `rw(C(G))`; `None` marks the empty cut-edge graph.
    pub rw: Option<usize>,
}

/// Computes `C(G)` for a connected graph. A bridge is exactly the edge of a
/// trivial block.
pub fn cut_edge_graph(g: &Graph) -> Result<CutEdgeGraph> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() < 2 {
        return Ok(CutEdgeGraph {
            edge_ids: Vec::new(),
            vertices: Vec::new(),
            degree: vec![0; g.n()],
            delta: 0,
            rw: None,
        });
    }
    let decomp = block_decomposition(g)?;
    cut_edge_graph_from(g, &decomp)
}

/// Same as [`cut_edge_graph`] from an existing decomposition.
pub fn cut_edge_graph_from(g: &Graph, decomp: &BlockDecomposition) -> Result<CutEdgeGraph> {
    let mut edge_ids: Vec<EdgeId> = decomp
        .blocks
        .iter()
        .filter(|b| b.is_trivial)
        .map(|b| b.edge_ids[0])
        .collect();
    edge_ids.sort_unstable();
    let mut degree = vec![0usize; g.n()];
    for &e in &edge_ids {
        let (u, v) = g.endpoints(e);
        degree[u] += 1;
        degree[v] += 1;
    }
    let mut vertices: Vec<usize> = (0..g.n()).filter(|&v| degree[v] > 0).collect();
    vertices.sort_unstable();
    let delta = degree.iter().copied().max().unwrap_or(0);
    let rw = edge_ids
        .iter()
        .map(|&e| {
            let (u, v) = g.endpoints(e);
            degree[u] + degree[v] - 1
        })
        .max();
    Ok(CutEdgeGraph {
        edge_ids,
        vertices,
        degree,
        delta,
        rw,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn bowtie_decomposition() {
        let g = families::bowtie();
        let d = block_decomposition(&g).unwrap();
        assert_eq!(d.blocks.len(), 2);
        assert!(d.blocks.iter().all(|b| !b.is_trivial));
        assert_eq!(d.cut_vertices, vec![2]);
    }

    #[test]
    fn path_decomposition() {
        let g = families::path(4);
        let d = block_decomposition(&g).unwrap();
        assert_eq!(d.blocks.len(), 3);
        assert!(d.blocks.iter().all(|b| b.is_trivial));
        assert_eq!(d.cut_vertices, vec![1, 2]);
    }

    #[test]
    fn k4_single_block() {
        let g = families::complete(4);
        let d = block_decomposition(&g).unwrap();
        assert_eq!(d.blocks.len(), 1);
        assert!(d.cut_vertices.is_empty());
        assert!(d.is_two_connected(&g));
    }

    #[test]
    fn blocks_partition_edges() {
        for g in [
            families::bowtie(),
            families::dumbbell(),
            families::r_t(2),
            families::petersen(),
        ] {
            let d = block_decomposition(&g).unwrap();
            let total: usize = d.blocks.iter().map(|b| b.edge_ids.len()).sum();
            assert_eq!(total, g.m());
            let mut all: Vec<_> = d.blocks.iter().flat_map(|b| b.edge_ids.clone()).collect();
            all.sort_unstable();
            all.dedup();
            assert_eq!(all.len(), g.m());
        }
    }

    #[test]
    fn cut_edges_are_exactly_trivial_blocks() {
        let g = families::dumbbell();
        let d = block_decomposition(&g).unwrap();
        let c = cut_edge_graph(&g).unwrap();
        for &e in &c.edge_ids {
            assert!(d.blocks[d.block_of_edge[e]].is_trivial);
        }
        assert_eq!(
            c.edge_ids.len(),
            d.blocks.iter().filter(|b| b.is_trivial).count()
        );
    }

    #[test]
    fn r2_cut_edge_stats() {
        // R_2: triangle with two leaves per vertex. Delta(C) = rw(C) = 2.
        let g = families::r_t(2);
        let c = cut_edge_graph(&g).unwrap();
        assert_eq!(c.delta, 2);
        assert_eq!(c.rw, Some(2));
    }

    #[test]
    fn two_connected_graphs_have_empty_cut_edge_graph() {
        let c = cut_edge_graph(&families::cycle(6)).unwrap();
        assert!(c.edge_ids.is_empty());
        assert_eq!(c.delta, 0);
        assert_eq!(c.rw, None);
    }

    #[test]
    fn double_star_cut_edge_graph_is_whole_tree() {
        let g = Graph::new(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        let c = cut_edge_graph(&g).unwrap();
        assert_eq!(c.edge_ids.len(), 5);
        assert_eq!(c.rw, Some(5));
    }

    #[test]
    fn bc_tree_is_a_tree() {
        // nodes = cut vertices + blocks; edges join cut vertices to their blocks
        for g in [families::dumbbell(), families::r_t(3), families::path(6)] {
            let d = block_decomposition(&g).unwrap();
            let nodes = d.cut_vertices.len() + d.blocks.len();
            assert_eq!(d.bc_edges.len(), nodes - 1, "bc graph must be a tree");
        }
    }
}
