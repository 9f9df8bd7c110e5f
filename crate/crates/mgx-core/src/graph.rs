//! Mixed-graph representation and structural queries.
//!
//! A mixed graph is a simple graph in which every edge is either undirected
//! or an arc. Arcs are stored canonically on the unordered pair `(u, v)` with
//! `u < v` plus a direction flag, so the underlying graph is obtained by
//! dropping the flag, never by recomputation. Vertex ids are dense 0-based
//! indices; operations that shrink the graph return a [`Relabeling`] that
//! records the old-to-new id map.
//!
//! Values are immutable after construction and all operations here are pure.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Dense 0-based vertex index.
pub type VertexId = usize;

/// Orientation of a single edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Undirected,
    /// Arc from `tail` to `head`.
    Arc { tail: VertexId, head: VertexId },
}

/// An edge on the canonical unordered pair `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub kind: EdgeKind,
}

impl Edge {
    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }

    pub fn is_arc(&self) -> bool {
        matches!(self.kind, EdgeKind::Arc { .. })
    }

    /// The endpoint other than `w`. Panics if `w` is not an endpoint.
    pub fn other(&self, w: VertexId) -> VertexId {
        if w == self.u {
            self.v
        } else {
            debug_assert_eq!(w, self.v);
            self.u
        }
    }
}

/// Old-id to new-id bookkeeping for graph surgery.
#[derive(Debug, Clone)]
pub struct Relabeling {
    pub graph: MixedGraph,
    /// `new_to_old[new] = old`.
    pub new_to_old: Vec<VertexId>,
    /// `old_to_new[old] = Some(new)` for surviving vertices.
    pub old_to_new: Vec<Option<VertexId>>,
}

/// Biconnected components of the underlying graph.
#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    /// Vertex sets of the blocks, each sorted ascending.
    pub blocks: Vec<Vec<VertexId>>,
    /// Edge indices belonging to each block (parallel to `blocks`).
    pub block_edges: Vec<Vec<usize>>,
    /// Cut vertices, sorted ascending.
    pub cut_vertices: Vec<VertexId>,
}

/// A simple mixed graph: no loops, no multiedges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedGraph {
    n: usize,
    edges: Vec<Edge>,
    /// adjacency: vertex -> (neighbor, edge index)
    adj: Vec<Vec<(VertexId, usize)>>,
}

impl MixedGraph {
    pub fn new(n: usize) -> Self {
        MixedGraph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    /// `(neighbor, edge index)` pairs at `v`.
    pub fn incident(&self, v: VertexId) -> &[(VertexId, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n && self.adj[u].iter().any(|&(w, _)| w == v)
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<&Edge> {
        self.edge_index_between(u, v).map(|idx| &self.edges[idx])
    }

    pub fn edge_index_between(&self, u: VertexId, v: VertexId) -> Option<usize> {
        self.adj[u]
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, idx)| idx)
    }

    fn check_pair(&self, u: VertexId, v: VertexId) -> Result<()> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange(u, self.n));
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange(v, self.n));
        }
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        Ok(())
    }

    fn push_edge(&mut self, e: Edge) {
        let idx = self.edges.len();
        self.adj[e.u].push((e.v, idx));
        self.adj[e.v].push((e.u, idx));
        self.edges.push(e);
    }

    /// Adds an undirected edge between `u` and `v`.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        self.check_pair(u, v)?;
        let (a, b) = (u.min(v), u.max(v));
        self.push_edge(Edge {
            u: a,
            v: b,
            kind: EdgeKind::Undirected,
        });
        Ok(())
    }

    /// Adds an arc from `tail` to `head`.
    pub fn add_arc(&mut self, tail: VertexId, head: VertexId) -> Result<()> {
        self.check_pair(tail, head)?;
        let (a, b) = (tail.min(head), tail.max(head));
        self.push_edge(Edge {
            u: a,
            v: b,
            kind: EdgeKind::Arc { tail, head },
        });
        Ok(())
    }

    /// The same graph with every orientation dropped.
    pub fn underlying(&self) -> MixedGraph {
        let mut g = MixedGraph::new(self.n);
        for e in &self.edges {
            g.add_edge(e.u, e.v).expect("edges already validated");
        }
        g
    }

    /// The same graph with every arc reversed; undirected edges unchanged.
    pub fn reverse_arcs(&self) -> MixedGraph {
        let mut g = MixedGraph::new(self.n);
        for e in &self.edges {
            match e.kind {
                EdgeKind::Undirected => g.add_edge(e.u, e.v).unwrap(),
                EdgeKind::Arc { tail, head } => g.add_arc(head, tail).unwrap(),
            }
        }
        g
    }

    /// Number of connected components of the underlying graph.
    pub fn component_count(&self) -> usize {
        self.component_labels().1
    }

    fn component_labels(&self) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = count;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for &(w, _) in &self.adj[v] {
                    if label[w] == usize::MAX {
                        label[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_count() == 1
    }

    /// Maximal connected induced mixed subgraphs, orientations preserved.
    /// Component order follows the smallest contained vertex id.
    pub fn components(&self) -> Vec<Relabeling> {
        let (label, count) = self.component_labels();
        let mut vertex_sets: Vec<Vec<VertexId>> = vec![Vec::new(); count];
        for v in 0..self.n {
            vertex_sets[label[v]].push(v);
        }
        vertex_sets
            .into_iter()
            .map(|vs| self.induced_subgraph(&vs))
            .collect()
    }

    /// Dimension of the cycle space: |E| - |V| + (number of components).
    pub fn cycle_space_dim(&self) -> usize {
        self.edges.len() + self.component_count() - self.n
    }

    /// Every degree-1 vertex paired with its unique neighbor. For an isolated
    /// edge (both endpoints of degree 1) the pair is reported once, with the
    /// smaller id as the pendant.
    pub fn pendant_and_quasi_pendant(&self) -> Vec<(VertexId, VertexId)> {
        let mut pairs = Vec::new();
        for v in 0..self.n {
            if self.degree(v) != 1 {
                continue;
            }
            let w = self.adj[v][0].0;
            if self.degree(w) == 1 && w < v {
                continue; // isolated edge, already reported from w
            }
            pairs.push((v, w));
        }
        pairs
    }

    /// Induced mixed subgraph on `vertices` (given as distinct old ids, in the
    /// order that becomes the new ids).
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> Relabeling {
        let mut old_to_new = vec![None; self.n];
        for (new, &old) in vertices.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let mut g = MixedGraph::new(vertices.len());
        for e in &self.edges {
            if let (Some(a), Some(b)) = (old_to_new[e.u], old_to_new[e.v]) {
                match e.kind {
                    EdgeKind::Undirected => g.add_edge(a, b).unwrap(),
                    EdgeKind::Arc { tail, .. } => {
                        if tail == e.u {
                            g.add_arc(a, b).unwrap();
                        } else {
                            g.add_arc(b, a).unwrap();
                        }
                    }
                }
            }
        }
        Relabeling {
            graph: g,
            new_to_old: vertices.to_vec(),
            old_to_new,
        }
    }

    /// Deletes the vertices in `xs` together with all incident edges or arcs.
    /// Remaining vertex ids are re-densified; the returned map records the
    /// relabeling.
    pub fn delete_vertices(&self, xs: &[VertexId]) -> Result<Relabeling> {
        let mut drop = vec![false; self.n];
        for &x in xs {
            if x >= self.n {
                return Err(Error::VertexOutOfRange(x, self.n));
            }
            drop[x] = true;
        }
        let keep: Vec<VertexId> = (0..self.n).filter(|&v| !drop[v]).collect();
        Ok(self.induced_subgraph(&keep))
    }

    /// Biconnected components of the underlying graph (Hopcroft–Tarjan with
    /// an explicit edge stack). Isolated vertices belong to no block.
    pub fn blocks(&self) -> BlockDecomposition {
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut timer = 0usize;
        let mut edge_stack: Vec<usize> = Vec::new();
        let mut blocks_edges: Vec<Vec<usize>> = Vec::new();

        // Iterative DFS frame: (vertex, parent edge index, position in adj list)
        struct Frame {
            v: usize,
            parent_edge: Option<usize>,
            next: usize,
        }

        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let mut stack = vec![Frame {
                v: root,
                parent_edge: None,
                next: 0,
            }];
            while let Some(frame) = stack.last_mut() {
                let v = frame.v;
                if frame.next < self.adj[v].len() {
                    let (w, eidx) = self.adj[v][frame.next];
                    frame.next += 1;
                    if Some(eidx) == frame.parent_edge {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        edge_stack.push(eidx);
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push(Frame {
                            v: w,
                            parent_edge: Some(eidx),
                            next: 0,
                        });
                    } else if disc[w] < disc[v] {
                        // back edge
                        edge_stack.push(eidx);
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    let finished = stack.pop().unwrap();
                    if let Some(pe) = finished.parent_edge {
                        let parent = stack.last().unwrap().v;
                        low[parent] = low[parent].min(low[finished.v]);
                        if low[finished.v] >= disc[parent] {
                            // parent closes a block: pop edges down to the tree
                            // edge into `finished`
                            let mut block = Vec::new();
                            loop {
                                let e = edge_stack.pop().expect("edge stack underflow");
                                block.push(e);
                                if e == pe {
                                    break;
                                }
                            }
                            blocks_edges.push(block);
                        }
                    }
                }
            }
        }

        // A vertex is a cut vertex exactly when it lies in two or more blocks.
        let mut appears = vec![0usize; n];
        let mut blocks = Vec::with_capacity(blocks_edges.len());
        for be in &blocks_edges {
            let mut vs: Vec<VertexId> = be
                .iter()
                .flat_map(|&ei| [self.edges[ei].u, self.edges[ei].v])
                .collect();
            vs.sort_unstable();
            vs.dedup();
            for &v in &vs {
                appears[v] += 1;
            }
            blocks.push(vs);
        }
        let cut_vertices: Vec<VertexId> = (0..n).filter(|&v| appears[v] >= 2).collect();

        BlockDecomposition {
            blocks,
            block_edges: blocks_edges,
            cut_vertices,
        }
    }

    /// If every block of the underlying graph is a single edge or a chordless
    /// cycle and no vertex lies on two cycles, returns all cycles, each as an
    /// ordered closed traversal starting at its smallest vertex and moving
    /// toward that vertex's smaller-id cycle neighbor. Otherwise `None`.
    pub fn all_cycles_if_disjoint(&self) -> Option<Vec<Vec<VertexId>>> {
        let decomp = self.blocks();
        let mut on_cycle = vec![false; self.n];
        let mut cycles = Vec::new();
        for (vs, es) in decomp.blocks.iter().zip(&decomp.block_edges) {
            if es.len() == 1 {
                continue; // edge block
            }
            if es.len() != vs.len() || vs.len() < 3 {
                return None; // a block that is neither an edge nor a cycle
            }
            // |E| == |V| in a biconnected block means the block is a cycle.
            for &v in vs {
                if on_cycle[v] {
                    return None; // vertex shared by two cycle blocks
                }
                on_cycle[v] = true;
            }
            cycles.push(self.traverse_cycle_block(vs));
        }
        cycles.sort_by_key(|c| c[0]);
        Some(cycles)
    }

    /// Walks around a cycle block. `vs` is the sorted vertex set of the block.
    fn traverse_cycle_block(&self, vs: &[VertexId]) -> Vec<VertexId> {
        let in_block = |w: VertexId| vs.binary_search(&w).is_ok();
        let start = vs[0];
        let mut nbrs: Vec<VertexId> = self
            .neighbors(start)
            .filter(|&w| in_block(w))
            .collect();
        nbrs.sort_unstable();
        debug_assert_eq!(nbrs.len(), 2, "cycle block vertex must have degree 2");
        let mut walk = vec![start, nbrs[0]];
        while walk.len() < vs.len() {
            let cur = *walk.last().unwrap();
            let prev = walk[walk.len() - 2];
            let next = self
                .neighbors(cur)
                .find(|&w| in_block(w) && w != prev)
                .expect("cycle traversal broke");
            walk.push(next);
        }
        walk
    }

    /// Vertices lying on some cycle, given the cycle list for this graph.
    pub fn cyclic_vertex_mask(&self, cycles: &[Vec<VertexId>]) -> Vec<bool> {
        let mut mask = vec![false; self.n];
        for c in cycles {
            for &v in c {
                mask[v] = true;
            }
        }
        mask
    }
}
