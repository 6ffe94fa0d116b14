//! Automorphism-based predicates: graph isomorphism by backtracking over
//! iterated partition refinement, vertex/edge orbit computation, transitivity
//! tests, and the second-neighborhood distinguisher.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

/// Result of an isomorphism test: a vertex bijection, or the invariant that
/// separates the two graphs (a search-exhaustion note when no cheap invariant
/// differs).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoOutcome {
    /// `mapping[u]` is the image of u; adjacency is preserved both ways.
    Isomorphic(Vec<usize>),
    Distinct(Distinction),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Distinction {
    Order,
    Size,
    DegreeSequence,
    Girth,
    RefinementSignature,
    ExhaustedSearch,
}

impl IsoOutcome {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoOutcome::Isomorphic(_))
    }
}

/// Isomorphism test with degree/neighborhood partition refinement and
/// backtracking.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> IsoOutcome {
    if g.order() != h.order() {
        return IsoOutcome::Distinct(Distinction::Order);
    }
    if g.size() != h.size() {
        return IsoOutcome::Distinct(Distinction::Size);
    }
    if g.degree_sequence() != h.degree_sequence() {
        return IsoOutcome::Distinct(Distinction::DegreeSequence);
    }
    if g.girth() != h.girth() {
        return IsoOutcome::Distinct(Distinction::Girth);
    }
    let Some((cg, ch)) = joint_refinement(g, h, &[]) else {
        return IsoOutcome::Distinct(Distinction::RefinementSignature);
    };
    match search_mapping(g, h, &cg, &ch, &[]) {
        Some(mapping) => IsoOutcome::Isomorphic(mapping),
        None => IsoOutcome::Distinct(Distinction::ExhaustedSearch),
    }
}

/// An automorphism of g extending the forced vertex assignments, if any.
pub fn automorphism_extending(g: &Graph, forced: &[(usize, usize)]) -> Option<Vec<usize>> {
    let (cg, ch) = joint_refinement(g, g, forced)?;
    search_mapping(g, g, &cg, &ch, forced)
}

/// Color refinement run jointly on both graphs, with forced pairs
/// individualized; `None` when the color class sizes disagree.
fn joint_refinement(g: &Graph, h: &Graph, forced: &[(usize, usize)]) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.order();
    // Initial colors: degree, with each forced vertex in its own class.
    let mut cg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut ch: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    let bump = n + 1;
    for (i, &(a, b)) in forced.iter().enumerate() {
        cg[a] = bump + i;
        ch[b] = bump + i;
    }
    // Refinement only splits classes (the old color is part of the
    // signature), so iterate until the class count stops growing.
    let mut class_count = 0;
    loop {
        // Signatures share one dictionary across both graphs so classes stay
        // comparable.
        let mut all: Vec<(usize, Vec<usize>)> = Vec::with_capacity(2 * n);
        for v in 0..n {
            let mut nbr: Vec<usize> = g.neighbors(v).iter().map(|&w| cg[w]).collect();
            nbr.sort_unstable();
            all.push((cg[v], nbr));
        }
        for v in 0..n {
            let mut nbr: Vec<usize> = h.neighbors(v).iter().map(|&w| ch[w]).collect();
            nbr.sort_unstable();
            all.push((ch[v], nbr));
        }
        let mut sorted: Vec<&(usize, Vec<usize>)> = all.iter().collect();
        sorted.sort();
        sorted.dedup();
        let lookup = |sig: &(usize, Vec<usize>)| sorted.binary_search(&sig).unwrap();
        cg = (0..n).map(|v| lookup(&all[v])).collect();
        ch = (0..n).map(|v| lookup(&all[n + v])).collect();
        if sorted.len() == class_count {
            break;
        }
        class_count = sorted.len();
    }
    // Class sizes must agree between the two graphs.
    let mut count_g = std::collections::BTreeMap::new();
    let mut count_h = std::collections::BTreeMap::new();
    for v in 0..n {
        *count_g.entry(cg[v]).or_insert(0usize) += 1;
        *count_h.entry(ch[v]).or_insert(0usize) += 1;
    }
    (count_g == count_h).then_some((cg, ch))
}

/// Backtracking search for a color-respecting isomorphism extending the
/// forced pairs. Vertices are mapped in a most-constrained-first order.
fn search_mapping(g: &Graph, h: &Graph, cg: &[usize], ch: &[usize], forced: &[(usize, usize)]) -> Option<Vec<usize>> {
    let n = g.order();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    for &(a, b) in forced {
        if cg[a] != ch[b] {
            return None;
        }
        if image[a] != usize::MAX || used[b] {
            if image[a] == b {
                continue;
            }
            return None;
        }
        image[a] = b;
        used[b] = true;
    }
    // Consistency among the forced pairs themselves.
    for &(a, _) in forced {
        for &(a2, _) in forced {
            if a != a2 && g.has_edge(a, a2) != h.has_edge(image[a], image[a2]) {
                return None;
            }
        }
    }
    let mut class_size = std::collections::HashMap::new();
    for v in 0..n {
        *class_size.entry(ch[v]).or_insert(0usize) += 1;
    }
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for &(a, _) in forced {
        placed[a] = true;
    }
    for _ in 0..n {
        let mut best: Option<(usize, (usize, usize))> = None; // (vertex, (-mapped_nbrs, class))
        for v in 0..n {
            if placed[v] {
                continue;
            }
            let mapped_nbrs = g.neighbors(v).iter().filter(|&&w| placed[w]).count();
            let key = (usize::MAX - mapped_nbrs, class_size[&cg[v]]);
            if best.is_none_or(|(_, bk)| key < bk) {
                best = Some((v, key));
            }
        }
        match best {
            Some((v, _)) => {
                order.push(v);
                placed[v] = true;
            }
            None => break,
        }
    }

    fn backtrack(
        g: &Graph,
        h: &Graph,
        cg: &[usize],
        ch: &[usize],
        order: &[usize],
        depth: usize,
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        'candidates: for cand in 0..h.order() {
            if used[cand] || ch[cand] != cg[v] {
                continue;
            }
            for u in 0..g.order() {
                if image[u] != usize::MAX && g.has_edge(v, u) != h.has_edge(cand, image[u]) {
                    continue 'candidates;
                }
            }
            image[v] = cand;
            used[cand] = true;
            if backtrack(g, h, cg, ch, order, depth + 1, image, used) {
                return true;
            }
            image[v] = usize::MAX;
            used[cand] = false;
        }
        false
    }

    if backtrack(g, h, cg, ch, &order, 0, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

/// Orbits of the automorphism group on vertices, as sorted lists ordered by
/// least element.
///
/// Found by explicit automorphism searches between class representatives;
/// every discovered automorphism merges all its vertex pairs at once.
pub fn vertex_orbits(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut uf = UnionFind::new(n);
    for u in 0..n {
        if uf.find(u) != u {
            continue;
        }
        for v in u + 1..n {
            if uf.find(v) == uf.find(u) {
                continue;
            }
            if let Some(pi) = automorphism_extending(g, &[(u, v)]) {
                for w in 0..n {
                    uf.union(w, pi[w]);
                }
            }
        }
    }
    uf.partition()
}

/// Vertex-transitivity together with the orbit partition.
pub fn vertex_transitivity(g: &Graph) -> (bool, Vec<Vec<usize>>) {
    let orbits = vertex_orbits(g);
    (orbits.len() <= 1, orbits)
}

pub fn is_vertex_transitive(g: &Graph) -> bool {
    vertex_transitivity(g).0
}

/// Whether the automorphism group is transitive on edges (acting through
/// vertex automorphisms).
pub fn is_edge_transitive(g: &Graph) -> bool {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if edges.len() <= 1 {
        return true;
    }
    let index_of = |u: usize, v: usize| -> usize {
        let key = (u.min(v), u.max(v));
        edges.binary_search(&key).expect("image of an edge is an edge")
    };
    let mut uf = UnionFind::new(edges.len());
    let (a, b) = edges[0];
    for (i, &(x, y)) in edges.iter().enumerate().skip(1) {
        if uf.find(i) == uf.find(0) {
            continue;
        }
        let pi = automorphism_extending(g, &[(a, x), (b, y)]).or_else(|| automorphism_extending(g, &[(a, y), (b, x)]));
        match pi {
            Some(pi) => {
                for (j, &(u, v)) in edges.iter().enumerate() {
                    uf.union(j, index_of(pi[u], pi[v]));
                }
            }
            None => return false,
        }
    }
    (0..edges.len()).all(|i| uf.find(i) == uf.find(0))
}

/// Whether the induced second-neighborhood subgraphs of u and v are
/// isomorphic. A `false` certifies no automorphism maps u to v.
pub fn n2_distinguisher(g: &Graph, u: usize, v: usize) -> bool {
    if u == v {
        return true;
    }
    let nu = g.second_neighborhood(u);
    let nv = g.second_neighborhood(v);
    if nu.len() != nv.len() {
        return false;
    }
    if nu.is_empty() {
        return true;
    }
    let (hu, _) = g.induced_subgraph(&VertexSet::from_indices(g.order(), nu)).unwrap();
    let (hv, _) = g.induced_subgraph(&VertexSet::from_indices(g.order(), nv)).unwrap();
    is_isomorphic(&hu, &hv).is_isomorphic()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }

    fn partition(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = std::collections::BTreeMap::new();
        for x in 0..n {
            let r = self.find(x);
            groups.entry(r).or_default().push(x);
        }
        groups.into_values().collect()
    }
}
