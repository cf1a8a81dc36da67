//! Simple undirected graphs over dense vertex ids `0..n`.
//!
//! Graphs are immutable values: every reduction returns a fresh graph, and
//! reductions that drop vertices also return the old-to-new id map so callers
//! can lift results back through a stack of reduced instances.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// An undirected edge, stored with the lower endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId {
    a: usize,
    b: usize,
}

impl EdgeId {
    /// Canonical edge between two distinct vertices.
    ///
    /// Panics if `u == v`; self-loops never arise in this crate.
    pub fn new(u: usize, v: usize) -> Self {
        assert_ne!(u, v, "self-loop at vertex {u}");
        if u < v {
            EdgeId { a: u, b: v }
        } else {
            EdgeId { a: v, b: u }
        }
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.a, self.b)
    }

    pub fn lo(self) -> usize {
        self.a
    }

    pub fn hi(self) -> usize {
        self.b
    }

    pub fn touches(self, v: usize) -> bool {
        self.a == v || self.b == v
    }

    /// The endpoint other than `v`. Panics if `v` is not an endpoint.
    pub fn other(self, v: usize) -> usize {
        if v == self.a {
            self.b
        } else if v == self.b {
            self.a
        } else {
            panic!("vertex {v} is not an endpoint of {self}")
        }
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

/// Simple undirected graph: no self-loops, no parallel edges.
///
/// Vertices are `0..vertex_count()`. Neighbor sets are ordered, so every
/// iteration in this crate is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
    m: usize,
}

/// Old-to-new vertex id map recorded by vertex-dropping reductions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    /// `new_to_old[new] = old`
    pub new_to_old: Vec<usize>,
    /// `old_to_new[old] = Some(new)` for surviving vertices.
    pub old_to_new: Vec<Option<usize>>,
}

impl VertexMap {
    fn from_kept(n_old: usize, kept: &[usize]) -> Self {
        let mut old_to_new = vec![None; n_old];
        for (new, &old) in kept.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        VertexMap {
            new_to_old: kept.to_vec(),
            old_to_new,
        }
    }
}

/// Result of suppressing a degree-2 vertex: the merged edge is reported in
/// the ids of the *new* graph.
#[derive(Debug, Clone)]
pub struct Suppressed {
    pub graph: Graph,
    pub map: VertexMap,
    pub merged: EdgeId,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); n],
            m: 0,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.adj.len() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.adj[u].contains(&v) {
            return Err(Error::ParallelEdge(EdgeId::new(u, v)));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.m += 1;
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].contains(&v)
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.has_edge(e.lo(), e.hi())
    }

    /// Neighbors of `v` in ascending order. Panics on an unknown vertex.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn neighbor_set(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    /// Degree of `v`. Panics on an unknown vertex; see [`Graph::try_degree`].
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn try_degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    /// All edges in ascending `EdgeId` order.
    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nbrs)| {
            nbrs.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| EdgeId::new(u, v))
        })
    }

    pub fn max_degree(&self) -> Result<usize> {
        if self.adj.is_empty() {
            return Err(Error::EmptyGraph);
        }
        Ok(self.adj.iter().map(|s| s.len()).max().unwrap())
    }

    /// Number of neighbors of `v` whose degree lies in `lo..=hi`.
    ///
    /// Realizes the counts n_k, n_{k+}, n_{k-} through the bounds; pass
    /// `usize::MAX` for an unbounded upper end.
    pub fn count_neighbors_by_degree(&self, v: usize, lo: usize, hi: usize) -> usize {
        self.adj[v]
            .iter()
            .filter(|&&w| {
                let d = self.adj[w].len();
                lo <= d && d <= hi
            })
            .count()
    }

    /// Common neighbors of `u` and `v` in ascending order.
    pub fn common_neighbors(&self, u: usize, v: usize) -> Vec<usize> {
        self.adj[u].intersection(&self.adj[v]).copied().collect()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.adj.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// Connected components as ascending vertex lists, ordered by smallest
    /// member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.adj.len();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Biconnected components as edge lists (each sorted), ordered by their
    /// smallest edge. Bridges form single-edge blocks.
    pub fn blocks(&self) -> Vec<Vec<EdgeId>> {
        let n = self.adj.len();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut timer = 0usize;
        let mut edge_stack: Vec<EdgeId> = Vec::new();
        let mut blocks: Vec<Vec<EdgeId>> = Vec::new();

        // Iterative DFS; each frame keeps a materialized neighbor list and a
        // cursor into it.
        struct Frame {
            v: usize,
            parent: usize,
            nbrs: Vec<usize>,
            i: usize,
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
                parent: usize::MAX,
                nbrs: self.adj[root].iter().copied().collect(),
                i: 0,
            }];
            while let Some(frame) = stack.last_mut() {
                let v = frame.v;
                if frame.i < frame.nbrs.len() {
                    let w = frame.nbrs[frame.i];
                    frame.i += 1;
                    if w == frame.parent {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        edge_stack.push(EdgeId::new(v, w));
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push(Frame {
                            v: w,
                            parent: v,
                            nbrs: self.adj[w].iter().copied().collect(),
                            i: 0,
                        });
                    } else if disc[w] < disc[v] {
                        edge_stack.push(EdgeId::new(v, w));
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    let finished = stack.pop().unwrap();
                    if let Some(frame) = stack.last_mut() {
                        let p = frame.v;
                        low[p] = low[p].min(low[finished.v]);
                        if low[finished.v] >= disc[p] {
                            let cut = EdgeId::new(p, finished.v);
                            let mut block = Vec::new();
                            while let Some(e) = edge_stack.pop() {
                                block.push(e);
                                if e == cut {
                                    break;
                                }
                            }
                            block.sort_unstable();
                            blocks.push(block);
                        }
                    }
                }
            }
        }
        blocks.sort_by_key(|b| b[0]);
        blocks
    }

    pub fn articulation_points(&self) -> BTreeSet<usize> {
        // A vertex is an articulation point iff it belongs to more than one
        // block (and blocks cover all edges).
        let mut count = vec![0usize; self.adj.len()];
        for block in self.blocks() {
            let mut verts = BTreeSet::new();
            for e in block {
                verts.insert(e.lo());
                verts.insert(e.hi());
            }
            for v in verts {
                count[v] += 1;
            }
        }
        (0..self.adj.len()).filter(|&v| count[v] > 1).collect()
    }

    /// Connected, at least 3 vertices, and no cut vertex.
    pub fn is_two_connected(&self) -> bool {
        self.adj.len() >= 3
            && self.is_connected()
            && self.blocks().len() == 1
            && self.adj.iter().all(|s| !s.is_empty())
    }

    /// A copy with `e` removed.
    pub fn delete_edge(&self, e: EdgeId) -> Result<Graph> {
        self.check_vertex(e.hi())?;
        if !self.contains(e) {
            return Err(Error::MissingEdge(e));
        }
        let mut g = self.clone();
        g.adj[e.lo()].remove(&e.hi());
        g.adj[e.hi()].remove(&e.lo());
        g.m -= 1;
        Ok(g)
    }

    /// A copy with the edge `u v` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    /// Induced subgraph on `kept` (ascending, deduplicated), re-indexed to
    /// dense ids.
    pub fn induced(&self, kept: &[usize]) -> (Graph, VertexMap) {
        let map = VertexMap::from_kept(self.adj.len(), kept);
        let mut g = Graph::new(kept.len());
        for (new_u, &old_u) in kept.iter().enumerate() {
            for &old_v in &self.adj[old_u] {
                if let Some(new_v) = map.old_to_new[old_v] {
                    if new_u < new_v {
                        g.add_edge(new_u, new_v).expect("induced edge");
                    }
                }
            }
        }
        (g, map)
    }

    /// A copy without vertex `v`, re-indexed.
    pub fn delete_vertex(&self, v: usize) -> Result<(Graph, VertexMap)> {
        self.check_vertex(v)?;
        let kept: Vec<usize> = (0..self.adj.len()).filter(|&u| u != v).collect();
        Ok(self.induced(&kept))
    }

    /// Replace the degree-2 vertex `v` by an edge joining its two neighbors.
    pub fn suppress_degree2(&self, v: usize) -> Result<Suppressed> {
        self.check_vertex(v)?;
        let d = self.adj[v].len();
        if d != 2 {
            return Err(Error::DegreeNotTwo {
                vertex: v,
                degree: d,
            });
        }
        let mut it = self.adj[v].iter();
        let u = *it.next().unwrap();
        let w = *it.next().unwrap();
        if self.has_edge(u, w) {
            return Err(Error::SuppressParallel {
                vertex: v,
                edge: EdgeId::new(u, w),
            });
        }
        let (mut g, map) = self.delete_vertex(v)?;
        let nu = map.old_to_new[u].unwrap();
        let nw = map.old_to_new[w].unwrap();
        g.add_edge(nu, nw).expect("suppressed edge");
        Ok(Suppressed {
            graph: g,
            map,
            merged: EdgeId::new(nu, nw),
        })
    }

    /// Induced subgraph on the vertices of degree at least 3, measured in
    /// `self` (a single pass; degrees are not re-measured as vertices drop).
    pub fn strip_degree2(&self) -> (Graph, VertexMap) {
        let kept: Vec<usize> = (0..self.adj.len())
            .filter(|&v| self.adj[v].len() >= 3)
            .collect();
        self.induced(&kept)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, m={})",
            self.vertex_count(),
            self.edge_count()
        )
    }
}
