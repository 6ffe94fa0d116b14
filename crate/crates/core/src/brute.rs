//! Exhaustive reference oracles, independent of the production algorithms
//! they validate: matching size by memoized enumeration, cyclic edge
//! connectivity by scanning all vertex bipartitions, super cyclic
//! connectivity by scanning all minimum cyclic cuts. All are exponential and
//! meant for graphs of at most ~20 vertices.

use std::collections::HashMap;

use crate::graph::{Graph, VertexSet};

/// Maximum matching size by branch-and-memoize over vertex bitmasks.
pub fn max_matching_size(g: &Graph) -> usize {
    assert!(g.order() <= 63, "exhaustive matching oracle is capped at 63 vertices");
    let full: u64 = if g.order() == 0 { 0 } else { (1u64 << g.order()) - 1 };
    let mut memo: HashMap<u64, usize> = HashMap::new();
    fn solve(g: &Graph, alive: u64, memo: &mut HashMap<u64, usize>) -> usize {
        if alive == 0 {
            return 0;
        }
        if let Some(&v) = memo.get(&alive) {
            return v;
        }
        let v = alive.trailing_zeros() as usize;
        let without = solve(g, alive & !(1 << v), memo);
        let mut best = without;
        for &u in g.neighbors(v) {
            if alive >> u & 1 == 1 {
                best = best.max(1 + solve(g, alive & !(1 << v) & !(1 << u), memo));
            }
        }
        memo.insert(alive, best);
        best
    }
    solve(g, full, &mut memo)
}

/// All matchings, as sorted edge lists (including the empty matching).
pub fn all_matchings(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut out = vec![Vec::new()];
    fn recurse(
        edges: &[(usize, usize)],
        start: usize,
        covered: &mut VertexSet,
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        for i in start..edges.len() {
            let (u, v) = edges[i];
            if covered.contains(u) || covered.contains(v) {
                continue;
            }
            covered.insert(u);
            covered.insert(v);
            current.push((u, v));
            out.push(current.clone());
            recurse(edges, i + 1, covered, current, out);
            current.pop();
            covered.remove(u);
            covered.remove(v);
        }
    }
    let mut covered = VertexSet::empty(g.order());
    recurse(&edges, 0, &mut covered, &mut Vec::new(), &mut out);
    out
}

fn subset_has_cycle(g: &Graph, mask: u64) -> bool {
    // A subgraph has a cycle iff some union step closes one.
    let n = g.order();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    for (u, v) in g.edges() {
        if mask >> u & 1 == 1 && mask >> v & 1 == 1 {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return true;
            }
            parent[ru] = rv;
        }
    }
    false
}

/// cλ(G) by scanning every vertex bipartition with cycles on both sides.
pub fn cyclic_edge_connectivity(g: &Graph) -> Option<usize> {
    let n = g.order();
    assert!(n <= 24, "exhaustive bipartition oracle is capped at 24 vertices");
    if n == 0 {
        return None;
    }
    let mut best: Option<usize> = None;
    // Vertex n-1 stays on the complement side, halving the scan.
    for mask in 1u64..(1u64 << (n - 1)) {
        let co_mask = !mask & ((1u64 << n) - 1);
        if !subset_has_cycle(g, mask) || !subset_has_cycle(g, co_mask) {
            continue;
        }
        let side = VertexSet::from_indices(n, (0..n).filter(|&v| mask >> v & 1 == 1));
        let d = g.boundary_size(&side);
        if best.is_none_or(|b| d < b) {
            best = Some(d);
        }
    }
    best
}

/// Super cyclic edge-connectivity by scanning all bipartitions realizing
/// minimum cyclic cuts; `None` when not cyclically separable.
pub fn is_super_cyclic(g: &Graph) -> Option<bool> {
    let n = g.order();
    let clambda = cyclic_edge_connectivity(g)?;
    let girth = g.girth()?;
    for mask in 1u64..(1u64 << (n - 1)) {
        let co_mask = !mask & ((1u64 << n) - 1);
        if !subset_has_cycle(g, mask) || !subset_has_cycle(g, co_mask) {
            continue;
        }
        let side = VertexSet::from_indices(n, (0..n).filter(|&v| mask >> v & 1 == 1));
        if g.boundary_size(&side) != clambda {
            continue;
        }
        let comps = g_components_after_cut(g, &side);
        let has_shortest_cycle = comps.iter().any(|comp| {
            comp.len() == girth
                && comp
                    .iter()
                    .all(|&v| g.neighbors(v).iter().filter(|&&w| comp.contains(&w)).count() == 2)
        });
        if !has_shortest_cycle {
            return Some(false);
        }
    }
    Some(true)
}

fn g_components_after_cut(g: &Graph, side: &VertexSet) -> Vec<Vec<usize>> {
    // Components of G minus the boundary edges of `side`: the components of
    // G[side] together with the components of the complement.
    let mut out = Vec::new();
    for part in [side.clone(), side.complement()] {
        if part.is_empty() {
            continue;
        }
        let (sub, mapping) = g.induced_subgraph(&part).expect("nonempty part");
        for comp in sub.components() {
            out.push(comp.into_iter().map(|v| mapping[v]).collect::<Vec<usize>>());
        }
    }
    out
}

/// Minimum edge cut separating `a` from `b` by scanning bipartitions.
pub fn min_cut_value(g: &Graph, a: &VertexSet, b: &VertexSet) -> usize {
    let n = g.order();
    assert!(n <= 24);
    let mut best = usize::MAX;
    for mask in 0u64..(1u64 << n) {
        let side = VertexSet::from_indices(n, (0..n).filter(|&v| mask >> v & 1 == 1));
        if a.iter().all(|v| side.contains(v)) && b.iter().all(|v| !side.contains(v)) {
            best = best.min(g.boundary_size(&side));
        }
    }
    best
}

/// λ(G) and whether every minimum edge cut isolates a vertex, by scanning
/// bipartitions.
pub fn super_lambda(g: &Graph) -> Option<(usize, bool)> {
    let n = g.order();
    assert!(n <= 24);
    if n < 2 || !g.is_connected() {
        return None;
    }
    let lambda = (1u64..(1u64 << (n - 1)))
        .map(|mask| g.boundary_size(&VertexSet::from_indices(n, (0..n).filter(|&v| mask >> v & 1 == 1))))
        .min()
        .expect("nonempty scan");
    let mut all_trivial = true;
    for mask in 1u64..(1u64 << (n - 1)) {
        let side = VertexSet::from_indices(n, (0..n).filter(|&v| mask >> v & 1 == 1));
        if g.boundary_size(&side) == lambda {
            let comps = g_components_after_cut(g, &side);
            if !comps.iter().any(|c| c.len() == 1) {
                all_trivial = false;
                break;
            }
        }
    }
    Some((lambda, all_trivial))
}

/// λ²(G) and whether every minimum restricted edge cut isolates an edge, by
/// scanning bipartitions. `None` when no restricted cut exists.
pub fn super_lambda2(g: &Graph) -> Option<(usize, bool)> {
    let n = g.order();
    assert!(n <= 24);
    let restricted = |side: &VertexSet| -> Option<usize> {
        // The associated cut must leave no isolated vertex.
        let cut = g.boundary_size(side);
        for v in 0..n {
            let inside = side.contains(v);
            if g.neighbors(v).iter().all(|&w| side.contains(w) != inside) {
                return None;
            }
        }
        Some(cut)
    };
    let mut lambda2 = usize::MAX;
    for mask in 1u64..(1u64 << (n - 1)) {
        let side = VertexSet::from_indices(n, (0..n).filter(|&v| mask >> v & 1 == 1));
        if let Some(cut) = restricted(&side) {
            lambda2 = lambda2.min(cut);
        }
    }
    if lambda2 == usize::MAX {
        return None;
    }
    let mut all_isolate_an_edge = true;
    'scan: for mask in 1u64..(1u64 << (n - 1)) {
        let side = VertexSet::from_indices(n, (0..n).filter(|&v| mask >> v & 1 == 1));
        if restricted(&side) == Some(lambda2) {
            let comps = g_components_after_cut(g, &side);
            if !comps.iter().any(|c| c.len() == 2) {
                all_isolate_an_edge = false;
                break 'scan;
            }
        }
    }
    Some((lambda2, all_isolate_an_edge))
}

/// Vertex orbits by scanning every permutation of the vertex set.
pub fn vertex_orbits(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    assert!(n <= 10, "exhaustive orbit oracle is capped at 10 vertices");
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        // A bijection preserving every edge preserves non-edges too.
        let automorphism = g.edges().all(|(u, v)| g.has_edge(perm[u], perm[v]));
        if automorphism {
            for v in 0..n {
                let (a, b) = (find(&mut parent, v), find(&mut parent, perm[v]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = std::collections::BTreeMap::new();
    for v in 0..n {
        let r = find(&mut parent, v);
        groups.entry(r).or_default().push(v);
    }
    groups.into_values().collect()
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Edges that lie in no cyclic cut of exactly the given size, by bipartition
/// scanning.
pub fn removable_edges(g: &Graph, k: usize) -> Vec<(usize, usize)> {
    let n = g.order();
    assert!(n <= 24);
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut covered = vec![false; edges.len()];
    for mask in 1u64..(1u64 << (n - 1)) {
        let co_mask = !mask & ((1u64 << n) - 1);
        if !subset_has_cycle(g, mask) || !subset_has_cycle(g, co_mask) {
            continue;
        }
        let side = VertexSet::from_indices(n, (0..n).filter(|&v| mask >> v & 1 == 1));
        let boundary: Vec<usize> = edges
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| side.contains(u) != side.contains(v))
            .map(|(i, _)| i)
            .collect();
        if boundary.len() == k {
            for i in boundary {
                covered[i] = true;
            }
        }
    }
    edges
        .iter()
        .zip(&covered)
        .filter(|&(_, &c)| !c)
        .map(|(&e, _)| e)
        .collect()
}
