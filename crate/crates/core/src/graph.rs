//! Immutable simple undirected graphs and the structural primitives the rest
//! of the crate is built on: girth, bipartitions, boundaries, components and
//! induced subgraphs.
//!
//! Vertices are dense integers `0..n`. A [`Graph`] is immutable after
//! construction and every operation here is a pure function, so values can be
//! shared freely across threads.

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("subset must be nonempty")]
    EmptySubset,
    #[error("subset must be a proper subset of the vertex set")]
    FullSubset,
}

/// Simple undirected graph with sorted adjacency lists.
///
/// Invariants enforced at construction: no loops, no parallel edges,
/// symmetric adjacency, strictly increasing neighbor lists.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    size: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, edges={:?})",
            self.order(),
            self.size(),
            self.edges().collect::<Vec<_>>()
        )
    }
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list. Pairs may be given in
    /// either orientation; loops and duplicates are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        let mut size = 0;
        let mut normalized: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
                }
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        for w in normalized.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        for &(u, v) in &normalized {
            adj[u].push(v);
            adj[v].push(u);
            size += 1;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, size })
    }

    /// The cycle C_n.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    /// The path on `n` vertices.
    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    /// The complete graph K_n.
    pub fn complete(n: usize) -> Self {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    /// The complete bipartite graph K_{a,b}; part one is `0..a`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
    }

    /// The star K_{1,n} with the center at vertex 0.
    pub fn star(leaves: usize) -> Self {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
    }

    /// Number of vertices, written |G|.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges, written ||G||.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as (u, v) pairs with u < v, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Common degree if the graph is regular.
    pub fn regularity(&self) -> Option<usize> {
        let d = self.min_degree();
        (d == self.max_degree()).then_some(d)
    }

    pub fn is_connected(&self) -> bool {
        if self.order() == 0 {
            return true;
        }
        let mut seen = vec![false; self.order()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.order()
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_avoiding(&VertexSet::empty(self.order()))
    }

    /// Components of G - removed.
    pub fn components_avoiding(&self, removed: &VertexSet) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || removed.contains(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(u) = queue.pop_front() {
                for &v in self.neighbors(u) {
                    if !seen[v] && !removed.contains(v) {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Count of odd-order components of G - U (Tutte's c_o(G - U)).
    pub fn odd_components(&self, removed: &VertexSet) -> usize {
        self.components_avoiding(removed)
            .iter()
            .filter(|c| c.len() % 2 == 1)
            .count()
    }

    /// Length of a shortest cycle, or `None` when the graph is acyclic.
    ///
    /// BFS from every root with non-tree-edge detection; exact in O(n * m).
    pub fn girth(&self) -> Option<usize> {
        let n = self.order();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    if 2 * dist[u] >= b {
                        continue;
                    }
                }
                for &w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w && parent[w] != u {
                        let cand = dist[u] + dist[w] + 1;
                        if best.is_none_or(|b| cand < b) {
                            best = Some(cand);
                        }
                    }
                }
            }
        }
        best
    }

    /// Proper 2-coloring when the graph is bipartite.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let n = self.order();
        let mut color: Vec<u8> = vec![u8::MAX; n];
        for start in 0..n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &v in self.neighbors(u) {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(Bipartition { color })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// The edge cut associated with a nonempty proper vertex subset.
    pub fn boundary(&self, side: &VertexSet) -> Result<Cut, GraphError> {
        if side.is_empty() {
            return Err(GraphError::EmptySubset);
        }
        if side.len() == self.order() {
            return Err(GraphError::FullSubset);
        }
        let mut boundary = Vec::new();
        for (u, v) in self.edges() {
            if side.contains(u) != side.contains(v) {
                boundary.push((u, v));
            }
        }
        Ok(Cut {
            side: side.clone(),
            boundary,
        })
    }

    /// d(X) = |∂(X)| without materializing the cut.
    pub fn boundary_size(&self, side: &VertexSet) -> usize {
        self.edges()
            .filter(|&(u, v)| side.contains(u) != side.contains(v))
            .count()
    }

    /// Number of edges with both ends in `set`, written `||G[X]||`.
    pub fn edges_within(&self, set: &VertexSet) -> usize {
        self.edges()
            .filter(|&(u, v)| set.contains(u) && set.contains(v))
            .count()
    }

    /// Vertices at distance exactly two from `v`.
    pub fn second_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut level = vec![usize::MAX; self.order()];
        level[v] = 0;
        for &u in self.neighbors(v) {
            level[u] = 1;
        }
        let mut out = Vec::new();
        for &u in self.neighbors(v) {
            for &w in self.neighbors(u) {
                if level[w] == usize::MAX {
                    level[w] = 2;
                    out.push(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Subgraph induced by a nonempty vertex subset, plus the map from new
    /// indices back to original ones (sorted ascending).
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        if set.is_empty() {
            return Err(GraphError::EmptySubset);
        }
        let mapping: Vec<usize> = set.iter().collect();
        let mut back = vec![usize::MAX; self.order()];
        for (new, &old) in mapping.iter().enumerate() {
            back[old] = new;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| set.contains(u) && set.contains(v))
            .map(|(u, v)| (back[u], back[v]));
        let g = Graph::from_edges(mapping.len(), edges).expect("induced subgraph of a simple graph is simple");
        Ok((g, mapping))
    }

    /// Relabels vertices by `perm`, where `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        Graph::from_edges(self.order(), self.edges().map(|(u, v)| (perm[u], perm[v])))
            .expect("relabeling preserves simplicity")
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }
}

/// Two-coloring witness for a bipartite graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    color: Vec<u8>,
}

impl Bipartition {
    pub fn color(&self, v: usize) -> u8 {
        self.color[v]
    }

    pub fn colors(&self) -> &[u8] {
        &self.color
    }

    /// The two parts; part 0 contains vertex 0 when the graph is nonempty.
    pub fn parts(&self) -> (Vec<usize>, Vec<usize>) {
        let mut a = Vec::new();
        let mut b = Vec::new();
        for (v, &c) in self.color.iter().enumerate() {
            if c == 0 {
                a.push(v);
            } else {
                b.push(v);
            }
        }
        (a, b)
    }
}

/// A vertex subset X together with its associated edge cut ∂(X).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cut {
    pub side: VertexSet,
    pub boundary: Vec<(usize, usize)>,
}

impl Cut {
    /// d(X) = |∂(X)|.
    pub fn size(&self) -> usize {
        self.boundary.len()
    }
}

/// Fixed-capacity bitset over the vertices 0..n of a particular graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = VertexSet::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_indices(n: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = VertexSet::empty(n);
        for v in indices {
            s.insert(v);
        }
        s
    }

    pub fn capacity(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range for capacity {}", self.n);
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.n);
        self.words[v / 64] &= !(1u64 << (v % 64));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn complement(&self) -> VertexSet {
        let mut out = self.clone();
        for w in &mut out.words {
            *w = !*w;
        }
        out.trim();
        out
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.n, other.n);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect();
        VertexSet { n: self.n, words }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.n, other.n);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        VertexSet { n: self.n, words }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.n, other.n);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect();
        VertexSet { n: self.n, words }
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let tz = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(i * 64 + tz)
                }
            })
        })
    }

    fn trim(&mut self) {
        let extra = self.words.len() * 64 - self.n;
        if extra > 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= u64::MAX >> extra;
            }
        }
    }
}
