//! Edge-connectivity machinery: minimum cuts by augmenting paths, the
//! edge-connectivity and restricted edge-connectivity values, cyclic edge
//! connectivity via induced-cycle-pair contraction, the super-cut predicates
//! by bounded cut enumeration, and removable-edge / uniform cyclic
//! connectivity detection.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Cut, Graph, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConnectivityError {
    #[error("graph must be connected")]
    Disconnected,
    #[error("terminal sets must be nonempty and disjoint")]
    BadTerminals,
    #[error("enumeration needs {needed} candidates, cap is {cap}")]
    CapExceeded { needed: u128, cap: u128 },
    #[error("graph has no restricted edge-cut")]
    NoRestrictedCut,
    #[error("graph is not cyclically separable")]
    NotCyclicallySeparable,
    #[error("cyclic edge-connectivity is {actual:?}, expected {expected}")]
    CyclicMismatch { expected: usize, actual: Option<usize> },
}

/// Budgets for the exponential enumerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Maximum number of edge subsets a super-property check may scan.
    pub cut_enumeration: u128,
    /// Maximum number of chordless cycles (and cycle pairs) the cyclic
    /// connectivity search may collect.
    pub cycle_budget: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            cut_enumeration: 100_000_000,
            cycle_budget: 20_000,
        }
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out: u128 = 1;
    for i in 0..k {
        out = out.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    out
}

/// Calls `f` on every k-subset of 0..m (ascending index slices) until `f`
/// returns false.
fn for_each_combination(m: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if k > m {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&idx) {
            return;
        }
        // Advance to the next combination.
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + m - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

// ---------------------------------------------------------------------------
// Maximum flow with unit edge capacities.

struct FlowNetwork {
    to: Vec<usize>,
    cap: Vec<i64>,
    arcs: Vec<Vec<usize>>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork {
            to: Vec::new(),
            cap: Vec::new(),
            arcs: vec![Vec::new(); nodes],
        }
    }

    fn add(&mut self, u: usize, v: usize, cap_uv: i64, cap_vu: i64) {
        self.arcs[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(cap_uv);
        self.arcs[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(cap_vu);
    }

    /// Edmonds-Karp, stopping early once `limit` units have been pushed.
    fn max_flow(&mut self, s: usize, t: usize, limit: i64) -> i64 {
        let mut flow = 0;
        while flow < limit {
            let mut pred_arc = vec![usize::MAX; self.arcs.len()];
            let mut queue = std::collections::VecDeque::from([s]);
            pred_arc[s] = usize::MAX - 1;
            while let Some(u) = queue.pop_front() {
                if u == t {
                    break;
                }
                for &a in &self.arcs[u] {
                    let v = self.to[a];
                    if self.cap[a] > 0 && pred_arc[v] == usize::MAX {
                        pred_arc[v] = a;
                        queue.push_back(v);
                    }
                }
            }
            if pred_arc[t] == usize::MAX {
                break;
            }
            let mut v = t;
            while v != s {
                let a = pred_arc[v];
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                v = self.to[a ^ 1];
            }
            flow += 1;
        }
        flow
    }

    fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.arcs.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &a in &self.arcs[u] {
                let v = self.to[a];
                if self.cap[a] > 0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }
}

fn build_network(g: &Graph, sources: &VertexSet, sinks: &VertexSet) -> FlowNetwork {
    let n = g.order();
    let inf = g.size() as i64 + 1;
    let mut net = FlowNetwork::new(n + 2);
    for (u, v) in g.edges() {
        net.add(u, v, 1, 1);
    }
    for v in sources.iter() {
        net.add(n, v, inf, 0);
    }
    for v in sinks.iter() {
        net.add(v, n + 1, inf, 0);
    }
    net
}

/// Value of a minimum edge cut separating the two sets, aborting early once
/// it is known to reach `limit`.
fn min_cut_value_limited(g: &Graph, sources: &VertexSet, sinks: &VertexSet, limit: usize) -> usize {
    let mut net = build_network(g, sources, sinks);
    let limit = i64::try_from(limit).unwrap_or(i64::MAX);
    net.max_flow(g.order(), g.order() + 1, limit) as usize
}

/// A minimum-cardinality edge cut separating `a` from `b`, with the side
/// containing `a` (the residual-reachable side, which is deterministic).
pub fn min_cut_between(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<Cut, ConnectivityError> {
    if a.is_empty() || b.is_empty() || !a.is_disjoint(b) {
        return Err(ConnectivityError::BadTerminals);
    }
    let mut net = build_network(g, a, b);
    let flow = net.max_flow(g.order(), g.order() + 1, i64::MAX);
    let reach = net.residual_reachable(g.order());
    let side = VertexSet::from_indices(g.order(), (0..g.order()).filter(|&v| reach[v]));
    let cut = g.boundary(&side).expect("flow side is nonempty and proper");
    debug_assert_eq!(cut.size() as i64, flow);
    Ok(cut)
}

/// λ(G): minimum edge cut of a connected graph.
pub fn edge_connectivity(g: &Graph) -> Result<usize, ConnectivityError> {
    if !g.is_connected() || g.order() < 2 {
        return Err(ConnectivityError::Disconnected);
    }
    let mut best = g.degree(0);
    let source = VertexSet::from_indices(g.order(), [0]);
    for v in 1..g.order() {
        let sink = VertexSet::from_indices(g.order(), [v]);
        best = best.min(min_cut_value_limited(g, &source, &sink, best));
        if best == 0 {
            break;
        }
    }
    Ok(best)
}

/// Whether every minimum edge cut is the star of a vertex. Enumerates all
/// λ-sized disconnecting edge subsets, after the flow-based shortcut
/// λ < δ(G) (such a cut can never be a star).
pub fn is_super_lambda(g: &Graph, caps: &Caps) -> Result<bool, ConnectivityError> {
    let lambda = edge_connectivity(g)?;
    if lambda < g.min_degree() {
        return Ok(false);
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let needed = binomial(edges.len(), lambda);
    if needed > caps.cut_enumeration {
        return Err(ConnectivityError::CapExceeded {
            needed,
            cap: caps.cut_enumeration,
        });
    }
    let mut super_ok = true;
    for_each_combination(edges.len(), lambda, |subset| {
        let comps = components_after_removal(g, &edges, subset);
        if comps.sizes.len() > 1 && !comps.sizes.contains(&1) {
            super_ok = false;
            return false;
        }
        true
    });
    Ok(super_ok)
}

/// λ²(G) and ξ₂(G).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictedConnectivity {
    /// Minimum restricted edge cut size; `None` when no two vertex-disjoint
    /// edges exist.
    pub lambda2: Option<usize>,
    /// Minimum edge degree d(u) + d(v) - 2; `None` for edgeless graphs.
    pub xi2: Option<usize>,
}

/// Restricted edge-connectivity as the minimum, over vertex-disjoint edge
/// pairs (e1, e2), of a minimum cut separating the endpoints of e1 from the
/// endpoints of e2.
pub fn restricted_edge_connectivity(g: &Graph) -> Result<RestrictedConnectivity, ConnectivityError> {
    if !g.is_connected() || g.order() < 2 {
        return Err(ConnectivityError::Disconnected);
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let xi2 = edges.iter().map(|&(u, v)| g.degree(u) + g.degree(v) - 2).min();
    let mut lambda2: Option<usize> = None;
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in edges.iter().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let s = VertexSet::from_indices(g.order(), [a, b]);
            let t = VertexSet::from_indices(g.order(), [c, d]);
            let limit = lambda2.unwrap_or(usize::MAX);
            let value = min_cut_value_limited(g, &s, &t, limit);
            if lambda2.is_none_or(|best| value < best) {
                lambda2 = Some(value);
            }
        }
    }
    Ok(RestrictedConnectivity { lambda2, xi2 })
}

/// Whether every minimum restricted edge cut isolates an edge (leaves a K_2
/// component). Enumerates λ²-sized subsets whose removal disconnects the
/// graph without isolating a vertex.
pub fn is_super_lambda2(g: &Graph, caps: &Caps) -> Result<bool, ConnectivityError> {
    let restricted = restricted_edge_connectivity(g)?;
    let Some(lambda2) = restricted.lambda2 else {
        return Err(ConnectivityError::NoRestrictedCut);
    };
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let needed = binomial(edges.len(), lambda2);
    if needed > caps.cut_enumeration {
        return Err(ConnectivityError::CapExceeded {
            needed,
            cap: caps.cut_enumeration,
        });
    }
    let mut super_ok = true;
    for_each_combination(edges.len(), lambda2, |subset| {
        let comps = components_after_removal(g, &edges, subset);
        if comps.sizes.len() > 1 && !comps.sizes.contains(&1) && !comps.sizes.contains(&2) {
            super_ok = false;
            return false;
        }
        true
    });
    Ok(super_ok)
}

/// Component summary of G minus an edge subset (vertices keep their labels).
struct RemovalComponents {
    /// Vertex count per component.
    sizes: Vec<usize>,
    /// Edge count per component.
    edge_counts: Vec<usize>,
    /// Component id per vertex.
    comp_of: Vec<usize>,
}

fn components_after_removal(g: &Graph, edges: &[(usize, usize)], removed: &[usize]) -> RemovalComponents {
    let n = g.order();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        let mut cur = x;
        while parent[cur] != root {
            let next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        root
    }
    let mut removed_flag = vec![false; edges.len()];
    for &i in removed {
        removed_flag[i] = true;
    }
    for (i, &(u, v)) in edges.iter().enumerate() {
        if !removed_flag[i] {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru.max(rv)] = ru.min(rv);
            }
        }
    }
    let mut ids = std::collections::HashMap::new();
    let mut comp_of = vec![0usize; n];
    let mut sizes = Vec::new();
    for v in 0..n {
        let root = find(&mut parent, v);
        let next_id = sizes.len();
        let id = *ids.entry(root).or_insert_with(|| {
            sizes.push(0);
            next_id
        });
        comp_of[v] = id;
        sizes[id] += 1;
    }
    let mut edge_counts = vec![0usize; sizes.len()];
    for (i, &(u, _)) in edges.iter().enumerate() {
        if !removed_flag[i] {
            edge_counts[comp_of[u]] += 1;
        }
    }
    RemovalComponents {
        sizes,
        edge_counts,
        comp_of,
    }
}

// ---------------------------------------------------------------------------
// Cyclic edge-connectivity.

/// All chordless cycles, as vertex sets. Each cycle is found once (least
/// vertex first, smaller neighbor before larger).
pub fn chordless_cycles(g: &Graph, caps: &Caps) -> Result<Vec<VertexSet>, ConnectivityError> {
    let n = g.order();
    let mut out: Vec<VertexSet> = Vec::new();
    let mut path: Vec<usize> = Vec::new();
    let mut on_path = vec![false; n];

    fn extend(
        g: &Graph,
        root: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<VertexSet>,
        budget: usize,
    ) -> bool {
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if w <= root || on_path[w] {
                continue;
            }
            // Chordless extension: w may touch the path only at `last`,
            // except for the closing adjacency to the root.
            let mut chord = false;
            for &p in path[1..path.len() - 1].iter() {
                if g.has_edge(w, p) {
                    chord = true;
                    break;
                }
            }
            if chord {
                continue;
            }
            if g.has_edge(w, root) {
                if path.len() >= 2 && path[1] < w {
                    if out.len() == budget {
                        return false;
                    }
                    out.push(VertexSet::from_indices(g.order(), path.iter().copied().chain([w])));
                }
                // Continuing through w would leave a chord to the root.
                continue;
            }
            path.push(w);
            on_path[w] = true;
            let ok = extend(g, root, path, on_path, out, budget);
            path.pop();
            on_path[w] = false;
            if !ok {
                return false;
            }
        }
        true
    }

    for root in 0..n {
        path.clear();
        path.push(root);
        on_path.iter_mut().for_each(|b| *b = false);
        on_path[root] = true;
        for &first in g.neighbors(root) {
            if first <= root {
                continue;
            }
            path.push(first);
            on_path[first] = true;
            let ok = extend(g, root, &mut path, &mut on_path, &mut out, caps.cycle_budget);
            path.pop();
            on_path[first] = false;
            if !ok {
                return Err(ConnectivityError::CapExceeded {
                    needed: caps.cycle_budget as u128 + 1,
                    cap: caps.cycle_budget as u128,
                });
            }
        }
    }
    Ok(out)
}

/// Chordless quadrangles.
pub fn quadrangles(g: &Graph) -> Vec<VertexSet> {
    chordless_cycles(g, &Caps::default())
        .expect("quadrangle enumeration within default budget")
        .into_iter()
        .filter(|c| c.len() == 4)
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicConnectivity {
    /// Minimum cyclic edge cut size; `None` when no edge set separates two
    /// cycles.
    pub clambda: Option<usize>,
    /// Minimum d(X) over X inducing a shortest cycle; `None` when acyclic.
    pub zeta: Option<usize>,
}

/// cλ(G) and ζ(G).
///
/// Each side of a minimum cyclic edge cut contains a cycle that is chordless
/// in G, so the minimum over vertex-disjoint chordless cycle pairs of a
/// minimum cut separating the pair is exact.
pub fn cyclic_edge_connectivity(g: &Graph, caps: &Caps) -> Result<CyclicConnectivity, ConnectivityError> {
    let cycles = chordless_cycles(g, caps)?;
    if cycles.is_empty() {
        return Ok(CyclicConnectivity {
            clambda: None,
            zeta: None,
        });
    }
    let girth = cycles.iter().map(VertexSet::len).min().unwrap();
    debug_assert_eq!(g.girth(), Some(girth));
    let zeta = cycles
        .iter()
        .filter(|c| c.len() == girth)
        .map(|c| g.boundary_size(c))
        .min();
    let pair_count = binomial(cycles.len(), 2);
    if pair_count > caps.cut_enumeration {
        return Err(ConnectivityError::CapExceeded {
            needed: pair_count,
            cap: caps.cut_enumeration,
        });
    }
    let mut best: Option<usize> = None;
    for (i, c1) in cycles.iter().enumerate() {
        for c2 in cycles.iter().skip(i + 1) {
            if !c1.is_disjoint(c2) {
                continue;
            }
            let limit = best.unwrap_or(usize::MAX);
            if limit == 0 {
                break;
            }
            let value = min_cut_value_limited(g, c1, c2, limit);
            if best.is_none_or(|b| value < b) {
                best = Some(value);
            }
        }
    }
    Ok(CyclicConnectivity { clambda: best, zeta })
}

/// Whether every minimum cyclic edge cut leaves a component that is a
/// shortest cycle. Exhausts all cλ-sized edge subsets whose removal leaves
/// at least two components containing cycles.
pub fn is_super_cyclic(g: &Graph, caps: &Caps) -> Result<bool, ConnectivityError> {
    let cyclic = cyclic_edge_connectivity(g, caps)?;
    let Some(clambda) = cyclic.clambda else {
        return Err(ConnectivityError::NotCyclicallySeparable);
    };
    let girth = g.girth().expect("cyclically separable graph has cycles");
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let needed = binomial(edges.len(), clambda);
    if needed > caps.cut_enumeration {
        return Err(ConnectivityError::CapExceeded {
            needed,
            cap: caps.cut_enumeration,
        });
    }
    let mut super_ok = true;
    for_each_combination(edges.len(), clambda, |subset| {
        if !cut_leaves_shortest_cycle(g, &edges, subset, girth).unwrap_or(true) {
            super_ok = false;
            return false;
        }
        true
    });
    Ok(super_ok)
}

/// Components after removal when the subset separates two cycles (at least
/// two components containing cycles); `None` otherwise.
fn cyclic_cut_components(g: &Graph, edges: &[(usize, usize)], removed: &[usize]) -> Option<RemovalComponents> {
    let comps = components_after_removal(g, edges, removed);
    let cyclic_comps = comps
        .sizes
        .iter()
        .zip(&comps.edge_counts)
        .filter(|&(&v, &e)| e >= v)
        .count();
    (cyclic_comps >= 2).then_some(comps)
}

/// For a cyclic cut: `Some(true)` if some component is a cycle of girth
/// length, `Some(false)` otherwise; `None` when the subset is not a cyclic
/// cut at all.
fn cut_leaves_shortest_cycle(g: &Graph, edges: &[(usize, usize)], removed: &[usize], girth: usize) -> Option<bool> {
    let comps = cyclic_cut_components(g, edges, removed)?;
    // A component is a shortest cycle iff it has girth-many vertices and
    // every one of them keeps degree 2.
    let mut remaining_degree = vec![0usize; g.order()];
    let mut removed_flag = vec![false; edges.len()];
    for &i in removed {
        removed_flag[i] = true;
    }
    for (i, &(u, v)) in edges.iter().enumerate() {
        if !removed_flag[i] {
            remaining_degree[u] += 1;
            remaining_degree[v] += 1;
        }
    }
    for id in 0..comps.sizes.len() {
        if comps.sizes[id] == girth && (0..g.order()).all(|v| comps.comp_of[v] != id || remaining_degree[v] == 2) {
            return Some(true);
        }
    }
    Some(false)
}

/// Edges lying in no cyclic k-edge-cut, for a graph with cλ = k.
pub fn removable_edges(g: &Graph, k: usize, caps: &Caps) -> Result<Vec<(usize, usize)>, ConnectivityError> {
    let cyclic = cyclic_edge_connectivity(g, caps)?;
    if cyclic.clambda != Some(k) {
        return Err(ConnectivityError::CyclicMismatch {
            expected: k,
            actual: cyclic.clambda,
        });
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let needed = binomial(edges.len(), k);
    if needed > caps.cut_enumeration {
        return Err(ConnectivityError::CapExceeded {
            needed,
            cap: caps.cut_enumeration,
        });
    }
    let mut covered = vec![false; edges.len()];
    for_each_combination(edges.len(), k, |subset| {
        if cyclic_cut_components(g, &edges, subset).is_some() {
            for &i in subset {
                covered[i] = true;
            }
        }
        true
    });
    Ok(edges
        .iter()
        .zip(&covered)
        .filter(|&(_, &c)| !c)
        .map(|(&e, _)| e)
        .collect())
}

/// U(k): every edge lies in a cyclic k-edge-cut. `false` whenever cλ ≠ k.
pub fn is_uniform_cyclic(g: &Graph, k: usize, caps: &Caps) -> Result<bool, ConnectivityError> {
    let cyclic = cyclic_edge_connectivity(g, caps)?;
    if cyclic.clambda != Some(k) {
        return Ok(false);
    }
    Ok(removable_edges(g, k, caps)?.is_empty())
}

/// Vertex connectivity at least 3: connected, order >= 4, and no cut set of
/// size at most two.
pub fn is_three_connected(g: &Graph) -> bool {
    let n = g.order();
    if n < 4 || !g.is_connected() {
        return false;
    }
    for u in 0..n {
        if g.components_avoiding(&VertexSet::from_indices(n, [u])).len() > 1 {
            return false;
        }
        for v in u + 1..n {
            if g.components_avoiding(&VertexSet::from_indices(n, [u, v])).len() > 1 {
                return false;
            }
        }
    }
    true
}

/// The full connectivity profile of a connected graph. `None` fields mean
/// the quantity is undefined for this graph (no restricted cut, not
/// cyclically separable, acyclic).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityReport {
    pub lambda: usize,
    pub super_lambda: bool,
    pub lambda2: Option<usize>,
    pub xi2: Option<usize>,
    pub super_lambda2: Option<bool>,
    pub clambda: Option<usize>,
    pub zeta: Option<usize>,
    pub cyclically_optimal: Option<bool>,
    pub super_cyclic: Option<bool>,
    pub uniform_cyclic: Option<bool>,
}

impl ConnectivityReport {
    pub fn compute(g: &Graph, caps: &Caps) -> Result<Self, ConnectivityError> {
        let lambda = edge_connectivity(g)?;
        let super_lambda = is_super_lambda(g, caps)?;
        let restricted = restricted_edge_connectivity(g)?;
        let super_lambda2 = match restricted.lambda2 {
            Some(_) => Some(is_super_lambda2(g, caps)?),
            None => None,
        };
        let cyclic = cyclic_edge_connectivity(g, caps)?;
        let (super_cyclic, uniform_cyclic) = match cyclic.clambda {
            Some(k) => (
                Some(is_super_cyclic(g, caps)?),
                Some(removable_edges(g, k, caps)?.is_empty()),
            ),
            None => (None, None),
        };
        Ok(ConnectivityReport {
            lambda,
            super_lambda,
            lambda2: restricted.lambda2,
            xi2: restricted.xi2,
            super_lambda2,
            clambda: cyclic.clambda,
            zeta: cyclic.zeta,
            cyclically_optimal: cyclic.clambda.zip(cyclic.zeta).map(|(c, z)| c == z),
            super_cyclic,
            uniform_cyclic,
        })
    }
}
