//! Exact matching machinery: maximum matching by Edmonds' blossom algorithm,
//! perfect-matching existence, the k-extendability oracle, factor-criticality,
//! bicriticality, elementary bipartiteness, and the exhaustive Hall/Tutte
//! cross-check oracles.

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatchingError {
    #[error("graph has odd order")]
    OddOrder,
    #[error("graph must have at least {needed} vertices, has {order}")]
    TooSmall { order: usize, needed: usize },
    #[error("graph must be connected")]
    Disconnected,
    #[error("graph must be bipartite")]
    NotBipartite,
    #[error("k = {k} exceeds (|G| - 2) / 2 = {max}")]
    KTooLarge { k: usize, max: usize },
    #[error("instance exceeds the exhaustive-search cap of {cap} vertices")]
    CapExceeded { cap: usize },
    #[error("matching edge ({0}, {1}) is not an edge of the host graph")]
    NotAnEdge(usize, usize),
    #[error("matching edges are not pairwise disjoint at vertex {0}")]
    NotDisjoint(usize),
}

/// A set of pairwise vertex-disjoint edges of a host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    /// Validates disjointness and membership in the host graph.
    pub fn new(host: &Graph, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, MatchingError> {
        let mut covered = VertexSet::empty(host.order());
        let mut list: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            let (u, v) = (a.min(b), a.max(b));
            if !host.has_edge(u, v) {
                return Err(MatchingError::NotAnEdge(u, v));
            }
            for w in [u, v] {
                if covered.contains(w) {
                    return Err(MatchingError::NotDisjoint(w));
                }
                covered.insert(w);
            }
            list.push((u, v));
        }
        list.sort_unstable();
        Ok(Matching { edges: list })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn covered_vertices(&self, n: usize) -> VertexSet {
        VertexSet::from_indices(n, self.edges.iter().flat_map(|&(u, v)| [u, v]))
    }

    /// Perfect iff it covers every vertex of a graph of the given order.
    pub fn is_perfect_for(&self, order: usize) -> bool {
        2 * self.len() == order
    }
}

/// Maximum-cardinality matching (Edmonds' blossom algorithm, O(n^3)).
pub fn max_matching(g: &Graph) -> Matching {
    max_matching_avoiding(g, &VertexSet::empty(g.order()))
}

/// Maximum matching of G - excluded, reported in the host labeling.
pub fn max_matching_avoiding(g: &Graph, excluded: &VertexSet) -> Matching {
    let n = g.order();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    for u in 0..n {
        if excluded.contains(u) || mate[u].is_some() {
            continue;
        }
        for &v in g.neighbors(u) {
            if !excluded.contains(v) && mate[v].is_none() {
                mate[u] = Some(v);
                mate[v] = Some(u);
                break;
            }
        }
    }
    for root in 0..n {
        if excluded.contains(root) || mate[root].is_some() {
            continue;
        }
        if let Some((end, parent)) = find_augmenting_path(g, excluded, &mate, root) {
            // Flip matched/unmatched status along the alternating path.
            let mut v = end;
            loop {
                let pv = parent[v];
                let next = mate[pv];
                mate[v] = Some(pv);
                mate[pv] = Some(v);
                match next {
                    Some(x) => v = x,
                    None => break,
                }
            }
        }
    }
    let edges = (0..n).filter_map(|u| mate[u].filter(|&v| u < v).map(|v| (u, v)));
    Matching::new(g, edges).expect("blossom output is a valid matching")
}

/// BFS over the alternating forest rooted at `root`, contracting blossoms
/// through the `base` array; returns the exposed endpoint and the parent
/// links of an augmenting path if one exists.
fn find_augmenting_path(
    g: &Graph,
    excluded: &VertexSet,
    mate: &[Option<usize>],
    root: usize,
) -> Option<(usize, Vec<usize>)> {
    const NIL: usize = usize::MAX;
    let n = g.order();
    let mut parent = vec![NIL; n];
    let mut base: Vec<usize> = (0..n).collect();
    let mut in_tree = vec![false; n];
    in_tree[root] = true;
    let mut queue = std::collections::VecDeque::from([root]);

    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if excluded.contains(w) || base[u] == base[w] || mate[u] == Some(w) {
                continue;
            }
            if w == root || mate[w].is_some_and(|mw| parent[mw] != NIL) {
                // Odd cycle: contract the blossom at the common base.
                let anchor = blossom_base(&base, &parent, mate, u, w);
                let mut in_blossom = vec![false; n];
                mark_blossom_path(&mut parent, &base, mate, &mut in_blossom, u, anchor, w);
                mark_blossom_path(&mut parent, &base, mate, &mut in_blossom, w, anchor, u);
                for i in 0..n {
                    if in_blossom[base[i]] {
                        base[i] = anchor;
                        if !in_tree[i] {
                            in_tree[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if parent[w] == NIL {
                parent[w] = u;
                match mate[w] {
                    None => return Some((w, parent)),
                    Some(mw) => {
                        if !in_tree[mw] {
                            in_tree[mw] = true;
                            queue.push_back(mw);
                        }
                    }
                }
            }
        }
    }
    None
}

/// Nearest common base of u and w in the alternating tree.
fn blossom_base(base: &[usize], parent: &[usize], mate: &[Option<usize>], u: usize, w: usize) -> usize {
    let n = base.len();
    let mut on_path = vec![false; n];
    let mut x = base[u];
    loop {
        on_path[x] = true;
        match mate[x] {
            None => break,
            Some(mx) => x = base[parent[mx]],
        }
    }
    let mut y = base[w];
    loop {
        if on_path[y] {
            return y;
        }
        y = base[parent[mate[y].expect("non-root tree vertex is matched")]];
    }
}

fn mark_blossom_path(
    parent: &mut [usize],
    base: &[usize],
    mate: &[Option<usize>],
    in_blossom: &mut [bool],
    mut v: usize,
    anchor: usize,
    mut child: usize,
) {
    while base[v] != anchor {
        let mv = mate[v].expect("blossom interior vertices are matched");
        in_blossom[base[v]] = true;
        in_blossom[base[mv]] = true;
        parent[v] = child;
        child = mv;
        v = parent[mv];
    }
}

/// Whether G - excluded has a perfect matching.
pub fn has_perfect_matching(g: &Graph, excluded: &VertexSet) -> bool {
    let alive = g.order() - excluded.len();
    alive.is_multiple_of(2) && 2 * max_matching_avoiding(g, excluded).len() == alive
}

/// All matchings of the given size, each a lexicographically sorted edge
/// list, enumerated in lexicographic order.
pub fn matchings_of_size(g: &Graph, k: usize) -> Vec<Vec<(usize, usize)>> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut out = Vec::new();
    let mut covered = VertexSet::empty(g.order());
    let mut current = Vec::new();
    fn recurse(
        edges: &[(usize, usize)],
        start: usize,
        k: usize,
        covered: &mut VertexSet,
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        let needed = k - current.len();
        if start + needed > edges.len() {
            return;
        }
        for i in start..edges.len() {
            let (u, v) = edges[i];
            if covered.contains(u) || covered.contains(v) {
                continue;
            }
            covered.insert(u);
            covered.insert(v);
            current.push((u, v));
            recurse(edges, i + 1, k, covered, current, out);
            current.pop();
            covered.remove(u);
            covered.remove(v);
        }
    }
    recurse(&edges, 0, k, &mut covered, &mut current, &mut out);
    out
}

/// Result of the k-extendability oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KExtendability {
    pub extendable: bool,
    /// Lexicographically least size-k matching whose removal leaves no
    /// perfect matching, when one exists.
    pub violating: Option<Matching>,
}

/// Whether every matching of size k extends to a perfect matching.
///
/// Requires connected input of even order at least 2k + 2. Enumerates all
/// size-k matchings and runs the blossom algorithm on each complement; the
/// per-matching checks run in parallel and the least violator wins.
pub fn is_k_extendable(g: &Graph, k: usize) -> Result<KExtendability, MatchingError> {
    if !g.order().is_multiple_of(2) {
        return Err(MatchingError::OddOrder);
    }
    if g.order() < 2 * k + 2 {
        return Err(MatchingError::TooSmall {
            order: g.order(),
            needed: 2 * k + 2,
        });
    }
    if !g.is_connected() {
        return Err(MatchingError::Disconnected);
    }
    let candidates = matchings_of_size(g, k);
    if candidates.is_empty() {
        return Ok(KExtendability {
            extendable: false,
            violating: None,
        });
    }
    let violator = candidates
        .par_iter()
        .enumerate()
        .filter(|(_, m)| {
            let removed = VertexSet::from_indices(g.order(), m.iter().flat_map(|&(u, v)| [u, v]));
            !has_perfect_matching(g, &removed)
        })
        .map(|(i, _)| i)
        .min();
    match violator {
        Some(i) => Ok(KExtendability {
            extendable: false,
            violating: Some(Matching::new(g, candidates[i].iter().copied())?),
        }),
        None => Ok(KExtendability {
            extendable: true,
            violating: None,
        }),
    }
}

/// Whether |G| is odd and G - v has a perfect matching for every vertex v.
pub fn is_factor_critical(g: &Graph) -> bool {
    let n = g.order();
    if n.is_multiple_of(2) {
        return false;
    }
    (0..n).all(|v| has_perfect_matching(g, &VertexSet::from_indices(n, [v])))
}

/// Whether G - {u, v} has a perfect matching for every vertex pair.
pub fn is_bicritical(g: &Graph) -> Result<bool, MatchingError> {
    let n = g.order();
    if !n.is_multiple_of(2) {
        return Err(MatchingError::OddOrder);
    }
    Ok((0..n).all(|u| (u + 1..n).all(|v| has_perfect_matching(g, &VertexSet::from_indices(n, [u, v])))))
}

/// Whether G is connected, bipartite, has at least one edge, and every edge
/// lies in some perfect matching.
pub fn is_elementary_bipartite(g: &Graph) -> bool {
    if !g.is_bipartite() || !g.is_connected() || g.size() == 0 {
        return false;
    }
    g.edges()
        .all(|(u, v)| has_perfect_matching(g, &VertexSet::from_indices(g.order(), [u, v])))
}

/// Outcome of the subset-quantified bipartite extendability test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HallExtendability {
    pub extendable: bool,
    /// A subset X of the first part with |N(X)| < |X| + k, when one exists.
    pub violating_subset: Option<Vec<usize>>,
}

/// Bipartite k-extendability by the neighborhood condition: G is k-extendable
/// iff the parts balance and every nonempty X in one part with
/// |X| <= |U| - k has |N(X)| >= |X| + k. Exhaustive over subsets; the input
/// order is capped.
pub fn hall_extendability_bipartite(g: &Graph, k: usize, cap: usize) -> Result<HallExtendability, MatchingError> {
    if !g.is_connected() {
        return Err(MatchingError::Disconnected);
    }
    let Some(bp) = g.bipartition() else {
        return Err(MatchingError::NotBipartite);
    };
    if g.order() < 2 || k > (g.order() - 2) / 2 {
        return Err(MatchingError::KTooLarge {
            k,
            max: g.order().saturating_sub(2) / 2,
        });
    }
    if g.order() > cap {
        return Err(MatchingError::CapExceeded { cap });
    }
    let (u_part, w_part) = bp.parts();
    if u_part.len() != w_part.len() {
        return Ok(HallExtendability {
            extendable: false,
            violating_subset: None,
        });
    }
    let u_size = u_part.len();
    let max_subset = u_size - k;
    for mask in 1u64..(1u64 << u_size) {
        let picked = mask.count_ones() as usize;
        if picked > max_subset {
            continue;
        }
        let mut neighborhood = VertexSet::empty(g.order());
        for (i, &v) in u_part.iter().enumerate() {
            if mask >> i & 1 == 1 {
                for &w in g.neighbors(v) {
                    neighborhood.insert(w);
                }
            }
        }
        if neighborhood.len() < picked + k {
            let witness = u_part
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            return Ok(HallExtendability {
                extendable: false,
                violating_subset: Some(witness),
            });
        }
    }
    Ok(HallExtendability {
        extendable: true,
        violating_subset: None,
    })
}

/// A vertex set certifying the absence of a perfect matching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TutteWitness {
    pub set: Vec<usize>,
    /// c_o(G - U) - |U|, positive for a witness.
    pub deficiency: isize,
}

/// Exhaustive search for a set U with more than |U| odd components in G - U;
/// `None` means a perfect matching exists.
pub fn tutte_witness(g: &Graph, cap: usize) -> Result<Option<TutteWitness>, MatchingError> {
    let n = g.order();
    if n > cap {
        return Err(MatchingError::CapExceeded { cap });
    }
    for mask in 0u64..(1u64 << n) {
        let set = VertexSet::from_indices(n, (0..n).filter(|&v| mask >> v & 1 == 1));
        let odd = g.odd_components(&set) as isize;
        let deficiency = odd - set.len() as isize;
        if deficiency > 0 {
            return Ok(Some(TutteWitness {
                set: set.iter().collect(),
                deficiency,
            }));
        }
    }
    Ok(None)
}

/// Size of a maximum matching inside the induced neighborhood of v.
pub fn neighborhood_matching_size(g: &Graph, v: usize) -> usize {
    let nbrs = VertexSet::from_indices(g.order(), g.neighbors(v).iter().copied());
    if nbrs.is_empty() {
        return 0;
    }
    let (h, _) = g.induced_subgraph(&nbrs).expect("neighborhood is nonempty");
    max_matching(&h).len()
}

/// A set S such that every component of G - S is factor-critical and S is
/// matchable into distinct components.
///
/// Built greedily: repeatedly move the lowest vertex of a perfectly-matchable
/// remainder into S, otherwise absorb the neighborhood A of the vertices
/// missed by some maximum matching.
pub fn critical_component_set(g: &Graph) -> VertexSet {
    let n = g.order();
    let mut s = VertexSet::empty(n);
    loop {
        let comps = g.components_avoiding(&s);
        let mut progressed = false;
        for comp in comps {
            let comp_set = VertexSet::from_indices(n, comp.iter().copied());
            if comp.len() == 1 {
                continue;
            }
            let (h, mapping) = g.induced_subgraph(&comp_set).expect("component is nonempty");
            if is_factor_critical(&h) {
                continue;
            }
            progressed = true;
            if has_perfect_matching(&h, &VertexSet::empty(h.order())) {
                s.insert(mapping[0]);
            } else {
                // Gallai-Edmonds A-set of the component: neighbors of the
                // vertices missed by some maximum matching.
                let base_size = max_matching(&h).len();
                let missable: Vec<usize> = (0..h.order())
                    .filter(|&v| max_matching_avoiding(&h, &VertexSet::from_indices(h.order(), [v])).len() == base_size)
                    .collect();
                let missable_set = VertexSet::from_indices(h.order(), missable.iter().copied());
                let mut a_set: Vec<usize> = Vec::new();
                for &v in &missable {
                    for &w in h.neighbors(v) {
                        if !missable_set.contains(w) {
                            a_set.push(w);
                        }
                    }
                }
                a_set.sort_unstable();
                a_set.dedup();
                debug_assert!(
                    !a_set.is_empty(),
                    "connected non-critical component has a nonempty A-set"
                );
                for v in a_set {
                    s.insert(mapping[v]);
                }
            }
        }
        if !progressed {
            return s;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{self, NamedGraph};

    fn petersen() -> Graph {
        families::named(NamedGraph::Petersen)
    }

    #[test]
    fn max_matching_examples() {
        assert_eq!(max_matching(&Graph::cycle(6)).len(), 3);
        assert_eq!(max_matching(&Graph::complete(4)).len(), 2);
        assert_eq!(max_matching(&petersen()).len(), 5);
        assert_eq!(max_matching(&Graph::cycle(7)).len(), 3);
        assert_eq!(max_matching(&Graph::star(5)).len(), 1);
        // Two triangles joined by a bridge.
        let barbell = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)]).unwrap();
        assert_eq!(max_matching(&barbell).len(), 3);
    }

    #[test]
    fn blossom_handles_nested_odd_cycles() {
        // Two pentagons sharing structure through a path forces contractions.
        let g = Graph::from_edges(
            11,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (5, 6),
                (6, 7),
                (7, 8),
                (8, 9),
                (9, 5),
                (4, 10),
                (10, 5),
            ],
        )
        .unwrap();
        assert_eq!(max_matching(&g).len(), 5);
    }

    #[test]
    fn matching_validation() {
        let g = Graph::cycle(6);
        assert!(Matching::new(&g, [(0, 1), (3, 4)]).is_ok());
        assert_eq!(Matching::new(&g, [(0, 2)]), Err(MatchingError::NotAnEdge(0, 2)));
        assert_eq!(Matching::new(&g, [(0, 1), (1, 2)]), Err(MatchingError::NotDisjoint(1)));
    }

    #[test]
    fn petersen_is_not_2_extendable() {
        let result = is_k_extendable(&petersen(), 2).unwrap();
        assert!(!result.extendable);
        let witness = result.violating.unwrap();
        assert_eq!(witness.len(), 2);
        let removed = witness.covered_vertices(10);
        assert!(!has_perfect_matching(&petersen(), &removed));
    }

    #[test]
    fn k33_is_2_extendable() {
        let g = Graph::complete_bipartite(3, 3);
        assert!(is_k_extendable(&g, 2).unwrap().extendable);
    }

    #[test]
    fn cycles_are_not_2_extendable() {
        let c8 = families::circulant(8, &[1, 7]).unwrap();
        let r = is_k_extendable(&c8, 2).unwrap();
        assert!(!r.extendable);
        assert!(r.violating.is_some());
    }

    #[test]
    fn mobius_ladder_is_not_2_extendable() {
        let g = families::circulant(8, &[1, 7, 4]).unwrap();
        assert!(!is_k_extendable(&g, 2).unwrap().extendable);
    }

    #[test]
    fn extendability_preconditions() {
        assert_eq!(is_k_extendable(&Graph::cycle(5), 1), Err(MatchingError::OddOrder));
        assert_eq!(
            is_k_extendable(&Graph::complete(4), 2),
            Err(MatchingError::TooSmall { order: 4, needed: 6 })
        );
        let disconnected = Graph::from_edges(6, [(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(is_k_extendable(&disconnected, 1), Err(MatchingError::Disconnected));
    }

    #[test]
    fn violating_matching_is_lexicographically_least() {
        let c6 = Graph::cycle(6);
        let r = is_k_extendable(&c6, 2).unwrap();
        // First 2-matching in lexicographic edge order that fails: the
        // candidates are scanned as ((0,1),(2,3)), ((0,1),(3,4)), ...
        let witness = r.violating.unwrap();
        let all = matchings_of_size(&c6, 2);
        let failing: Vec<&Vec<(usize, usize)>> = all
            .iter()
            .filter(|m| {
                let removed = VertexSet::from_indices(6, m.iter().flat_map(|&(u, v)| [u, v]));
                !has_perfect_matching(&c6, &removed)
            })
            .collect();
        assert_eq!(witness.edges(), failing[0].as_slice());
    }

    #[test]
    fn factor_critical_examples() {
        assert!(is_factor_critical(&Graph::cycle(5)));
        assert!(!is_factor_critical(&Graph::cycle(4)));
        assert!(!is_factor_critical(&families::named(NamedGraph::Rosette)));
        assert!(is_factor_critical(&Graph::complete(7)));
        assert!(!is_factor_critical(&Graph::path(5)));
    }

    #[test]
    fn bicritical_examples() {
        assert!(is_bicritical(&petersen()).unwrap());
        assert!(!is_bicritical(&Graph::cycle(6)).unwrap());
        assert!(is_bicritical(&Graph::complete(4)).unwrap());
        assert_eq!(is_bicritical(&Graph::cycle(5)), Err(MatchingError::OddOrder));
    }

    #[test]
    fn elementary_bipartite_examples() {
        assert!(is_elementary_bipartite(&Graph::cycle(6)));
        assert!(is_elementary_bipartite(&Graph::complete_bipartite(3, 3)));
        assert!(!is_elementary_bipartite(&petersen()));
        // P_4 is bipartite but its middle edge lies in no perfect matching.
        assert!(!is_elementary_bipartite(&Graph::path(4)));
    }

    #[test]
    fn hall_extendability_examples() {
        let k33 = Graph::complete_bipartite(3, 3);
        assert!(hall_extendability_bipartite(&k33, 2, 20).unwrap().extendable);

        let c8 = Graph::cycle(8);
        let r = hall_extendability_bipartite(&c8, 2, 20).unwrap();
        assert!(!r.extendable);
        let x = r.violating_subset.unwrap();
        let mut nbrs: Vec<usize> = x.iter().flat_map(|&v| c8.neighbors(v).iter().copied()).collect();
        nbrs.sort_unstable();
        nbrs.dedup();
        assert!(nbrs.len() < x.len() + 2);
        // A two-element witness also exists: opposite part vertices.
        let mut two_nbrs: Vec<usize> = [0usize, 2].iter().flat_map(|&v| c8.neighbors(v).to_vec()).collect();
        two_nbrs.sort_unstable();
        two_nbrs.dedup();
        assert!(two_nbrs.len() < 4);

        assert_eq!(
            hall_extendability_bipartite(&petersen(), 2, 20),
            Err(MatchingError::NotBipartite)
        );
    }

    #[test]
    fn hall_k0_matches_perfect_matching() {
        for g in [
            Graph::cycle(6),
            Graph::complete_bipartite(3, 3),
            Graph::path(4),
            Graph::star(3),
            Graph::complete_bipartite(2, 4),
        ] {
            let hall = hall_extendability_bipartite(&g, 0, 20).unwrap().extendable;
            assert_eq!(hall, has_perfect_matching(&g, &VertexSet::empty(g.order())), "{g:?}");
        }
    }

    #[test]
    fn tutte_witness_examples() {
        assert_eq!(tutte_witness(&Graph::cycle(6), 20).unwrap(), None);
        let star = tutte_witness(&Graph::star(3), 20).unwrap().unwrap();
        assert_eq!(star.set, vec![0]);
        assert_eq!(star.deficiency, 2);
        // Petersen minus two adjacent vertices keeps a perfect matching.
        let p = petersen();
        for (u, v) in p.edges() {
            assert!(has_perfect_matching(&p, &VertexSet::from_indices(10, [u, v])));
        }
        assert_eq!(
            tutte_witness(&Graph::complete(25), 20),
            Err(MatchingError::CapExceeded { cap: 20 })
        );
    }

    #[test]
    fn neighborhood_matching_examples() {
        assert_eq!(neighborhood_matching_size(&petersen(), 0), 0);
        assert_eq!(neighborhood_matching_size(&Graph::complete(4), 0), 1);
        let prism = families::circulant(6, &[2, 4, 3]).unwrap();
        assert_eq!(neighborhood_matching_size(&prism, 0), 1);
    }

    #[test]
    fn critical_component_set_properties() {
        for g in [
            Graph::star(3),
            Graph::path(7),
            Graph::cycle(4),
            Graph::cycle(7),
            petersen(),
            Graph::from_edges(7, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (5, 3), (5, 6)]).unwrap(),
        ] {
            let s = critical_component_set(&g);
            let comps = g.components_avoiding(&s);
            for comp in &comps {
                let set = VertexSet::from_indices(g.order(), comp.iter().copied());
                let (h, _) = g.induced_subgraph(&set).unwrap();
                assert!(h.order() == 1 || is_factor_critical(&h), "{g:?} S={s:?} comp={comp:?}");
            }
            // S is matchable into distinct components.
            let s_list: Vec<usize> = s.iter().collect();
            if !s_list.is_empty() {
                let bip = matchable_test_graph(&g, &s_list, &comps);
                assert_eq!(max_matching(&bip).len(), s_list.len(), "{g:?} S={s_list:?}");
            }
        }
    }

    /// Bipartite graph joining S-vertices to the components of G - S they
    /// touch; S is matchable iff this has a matching covering S.
    fn matchable_test_graph(g: &Graph, s: &[usize], comps: &[Vec<usize>]) -> Graph {
        let mut edges = Vec::new();
        for (i, &v) in s.iter().enumerate() {
            for (j, comp) in comps.iter().enumerate() {
                if comp.iter().any(|&w| g.has_edge(v, w)) {
                    edges.push((i, s.len() + j));
                }
            }
        }
        Graph::from_edges(s.len() + comps.len(), edges).unwrap()
    }
}
