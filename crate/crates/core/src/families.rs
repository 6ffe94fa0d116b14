//! Constructors for every graph family used by the classification harness:
//! circulants, Cayley graphs, generalized Petersen graphs, odd/even double
//! ladders, the quadrangle rings T_m, and the named graphs (Petersen,
//! dodecahedron, rosette).
//!
//! Each constructor fixes a canonical vertex labeling, documented on the
//! function, so certificates are reproducible across runs.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};
use crate::groups::GroupTable;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("circulant connection set must not contain 0")]
    ZeroResidue,
    #[error("connection set is not inverse-closed (missing {0})")]
    NotInverseClosed(usize),
    #[error("circulant order must be at least 3")]
    OrderTooSmall,
    #[error("connecting set contains the identity")]
    IdentityInSet,
    #[error("connecting set element {0} out of range")]
    ElementOutOfRange(usize),
    #[error("connecting set does not generate the group")]
    NotGenerating,
    #[error("generalized Petersen requires n >= 3 and 1 <= k < n/2")]
    BadPetersenParams,
    #[error("double ladder length must be at least 1")]
    LadderTooShort,
    #[error("ladder end matching must be a bijection between the end triples")]
    MalformedMatching,
    #[error("quadrangle ring requires m >= 2")]
    RingTooShort,
    #[error("construction produced an invalid graph: {0}")]
    Construction(#[from] GraphError),
}

/// Which rail of a double ladder an end-matching edge attaches to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Rail {
    A,
    B,
    C,
}

/// End matching of a double ladder: the far-side partners of a_1, b_1, c_1,
/// in that order. Must be a permutation of the three rails.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LadderMatching(pub [Rail; 3]);

impl LadderMatching {
    /// a_1 -> c end, b_1 -> b end, c_1 -> a end; the vertex-transitive case.
    pub const STANDARD: LadderMatching = LadderMatching([Rail::C, Rail::B, Rail::A]);
    /// a_1 -> a end, b_1 -> b end, c_1 -> c end.
    pub const STRAIGHT: LadderMatching = LadderMatching([Rail::A, Rail::B, Rail::C]);

    pub fn all() -> [LadderMatching; 6] {
        use Rail::*;
        [
            LadderMatching([A, B, C]),
            LadderMatching([A, C, B]),
            LadderMatching([B, A, C]),
            LadderMatching([B, C, A]),
            LadderMatching([C, A, B]),
            LadderMatching([C, B, A]),
        ]
    }

    fn is_bijection(&self) -> bool {
        let [x, y, z] = self.0;
        x != y && y != z && x != z
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LadderParity {
    Odd,
    Even,
}

/// The two closing-matching choices for the quadrangle ring T_m.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RingClosure {
    Straight,
    Crossed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NamedGraph {
    Petersen,
    Dodecahedron,
    Rosette,
}

/// Parametrized family member, the replayable description of a graph.
#[derive(Clone, Debug, PartialEq)]
pub enum FamilySpec {
    Circulant {
        n: usize,
        connections: Vec<usize>,
    },
    Cayley {
        table: GroupTable,
        connections: Vec<usize>,
    },
    GeneralizedPetersen {
        n: usize,
        k: usize,
    },
    DoubleLadder {
        parity: LadderParity,
        k: usize,
        matching: LadderMatching,
    },
    QuadrangleRing {
        m: usize,
        closure: RingClosure,
    },
    Named(NamedGraph),
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph, FamilyError> {
        match self {
            FamilySpec::Circulant { n, connections } => circulant(*n, connections),
            FamilySpec::Cayley { table, connections } => cayley(table, connections),
            FamilySpec::GeneralizedPetersen { n, k } => gp(*n, *k),
            FamilySpec::DoubleLadder { parity, k, matching } => double_ladder(*parity, *k, *matching),
            FamilySpec::QuadrangleRing { m, closure } => t_m(*m, *closure),
            FamilySpec::Named(which) => Ok(named(*which)),
        }
    }
}

/// Circulant graph Z_n(S): vertex i is adjacent to i + a (mod n) for a in S.
///
/// S is given as residues mod n, must exclude 0 and be closed under negation.
/// The result is connected iff gcd(S ∪ {n}) = 1; disconnected circulants are
/// allowed here.
pub fn circulant(n: usize, connections: &[usize]) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::OrderTooSmall);
    }
    let mut set = vec![false; n];
    for &a in connections {
        let a = a % n;
        if a == 0 {
            return Err(FamilyError::ZeroResidue);
        }
        set[a] = true;
    }
    for a in 1..n {
        if set[a] && !set[n - a] {
            return Err(FamilyError::NotInverseClosed(n - a));
        }
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for a in 1..n {
            if set[a] {
                let j = (i + a) % n;
                if i < j {
                    edges.push((i, j));
                }
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Ok(Graph::from_edges(n, edges)?)
}

/// Cayley graph G(Γ, S): vertices are the group elements, x ~ y iff
/// x * y^{-1} ∈ S. S must exclude the identity, be inverse-closed, and
/// generate the group.
pub fn cayley(table: &GroupTable, connections: &[usize]) -> Result<Graph, FamilyError> {
    let n = table.order();
    for &s in connections {
        if s >= n {
            return Err(FamilyError::ElementOutOfRange(s));
        }
        if s == table.identity() {
            return Err(FamilyError::IdentityInSet);
        }
    }
    for &s in connections {
        if !connections.contains(&table.inv(s)) {
            return Err(FamilyError::NotInverseClosed(table.inv(s)));
        }
    }
    if !table.generates(connections) {
        return Err(FamilyError::NotGenerating);
    }
    let mut edges = Vec::new();
    for y in 0..n {
        for &s in connections {
            // x y^{-1} = s  <=>  x = s y
            let x = table.mul(s, y);
            if x < y {
                edges.push((x, y));
            } else {
                edges.push((y, x));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Ok(Graph::from_edges(n, edges)?)
}

/// Generalized Petersen graph GP(n, k).
///
/// Labeling: outer vertices u_i = i (cycle), inner vertices v_i = n + i with
/// spokes u_i v_i and inner edges v_i v_{i+k}.
pub fn gp(n: usize, k: usize) -> Result<Graph, FamilyError> {
    if n < 3 || k < 1 || 2 * k >= n {
        return Err(FamilyError::BadPetersenParams);
    }
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((i, n + i));
        edges.push((n + i, n + (i + k) % n));
    }
    Ok(Graph::from_edges(2 * n, edges)?)
}

/// Double ladder of the given parity and length k.
///
/// Odd ladder vertices (order 4k + 2): a_1..a_k are 0..k-1, b_1..b_{2k+1}
/// are k..3k, c_1..c_{k+1} are 3k+1..4k+1. Even ladder vertices (order 4k):
/// a_1..a_k, b_1..b_{2k}, c_1..c_k in the same blocks. Rungs a_i b_{2i} and
/// c_i b_{2i-1}, plus the three rail paths and the end matching joining
/// {a_1, b_1, c_1} to the far triple ({a_k, b_{2k+1}, c_{k+1}} odd,
/// {a_k, b_{2k}, c_k} even).
pub fn double_ladder(parity: LadderParity, k: usize, matching: LadderMatching) -> Result<Graph, FamilyError> {
    if k < 1 {
        return Err(FamilyError::LadderTooShort);
    }
    if !matching.is_bijection() {
        return Err(FamilyError::MalformedMatching);
    }
    let b_len = match parity {
        LadderParity::Odd => 2 * k + 1,
        LadderParity::Even => 2 * k,
    };
    let c_len = match parity {
        LadderParity::Odd => k + 1,
        LadderParity::Even => k,
    };
    let a = |i: usize| i - 1; // a_i, 1-based
    let b = |i: usize| k + i - 1;
    let c = |i: usize| k + b_len + i - 1;
    let mut edges = Vec::new();
    for i in 1..=k {
        edges.push((a(i), b(2 * i)));
    }
    for i in 1..=c_len {
        edges.push((c(i), b(2 * i - 1)));
    }
    for i in 1..k {
        edges.push((a(i), a(i + 1)));
    }
    for i in 1..b_len {
        edges.push((b(i), b(i + 1)));
    }
    for i in 1..c_len {
        edges.push((c(i), c(i + 1)));
    }
    let far = |rail: Rail| match rail {
        Rail::A => a(k),
        Rail::B => b(b_len),
        Rail::C => c(c_len),
    };
    let near = [a(1), b(1), c(1)];
    for (i, rail) in matching.0.iter().enumerate() {
        edges.push((near[i], far(*rail)));
    }
    Ok(Graph::from_edges(k + b_len + c_len, edges)?)
}

/// The ring of m quadrangles T_m, a cubic graph of order 4m and girth 4.
///
/// Labeling: x_{i,j} (rows i = 1..4, columns j = 1..m) is vertex
/// 4(j-1) + i - 1. Each column induces a quadrangle; consecutive columns are
/// joined by two parallel edges, alternating between rows {1,3} and rows
/// {2,4}; the closing pair M is either straight or crossed.
pub fn t_m(m: usize, closure: RingClosure) -> Result<Graph, FamilyError> {
    if m < 2 {
        return Err(FamilyError::RingTooShort);
    }
    let x = |i: usize, j: usize| 4 * (j - 1) + (i - 1); // 1-based row/column
    let k = m / 2;
    let mut edges = Vec::new();
    for j in 1..=m {
        for i in 1..=4 {
            let next = if i == 4 { 1 } else { i + 1 };
            edges.push((x(i, j), x(next, j)));
        }
    }
    // Links between columns 2j-1 and 2j on rows 1 and 3.
    for j in 1..=k {
        edges.push((x(1, 2 * j - 1), x(1, 2 * j)));
        edges.push((x(3, 2 * j - 1), x(3, 2 * j)));
    }
    // Links between columns 2j and 2j+1 on rows 2 and 4; for even m the
    // closing pair M plays the role of the last link.
    let inner_pairs = if m % 2 == 1 { k } else { k - 1 };
    for j in 1..=inner_pairs {
        edges.push((x(2, 2 * j), x(2, 2 * j + 1)));
        edges.push((x(4, 2 * j), x(4, 2 * j + 1)));
    }
    let closing = if m % 2 == 1 {
        match closure {
            RingClosure::Straight => [(x(1, m), x(2, 1)), (x(3, m), x(4, 1))],
            RingClosure::Crossed => [(x(1, m), x(4, 1)), (x(3, m), x(2, 1))],
        }
    } else {
        match closure {
            RingClosure::Straight => [(x(2, m), x(2, 1)), (x(4, m), x(4, 1))],
            RingClosure::Crossed => [(x(2, m), x(4, 1)), (x(4, m), x(2, 1))],
        }
    };
    edges.extend(closing);
    Ok(Graph::from_edges(4 * m, edges)?)
}

/// The named graphs.
///
/// Petersen is GP(5, 2) and the dodecahedron is GP(10, 2), with those
/// labelings. The rosette is the dodecahedron minus one face: in GP(10, 2)
/// the inner even vertices v_0, v_2, v_4, v_6, v_8 induce a pentagon; deleting
/// them leaves 15 vertices relabeled 0..14 (outer cycle first, then the inner
/// odd pentagon), of which the five former spoke-ends have degree two.
pub fn named(which: NamedGraph) -> Graph {
    match which {
        NamedGraph::Petersen => gp(5, 2).unwrap(),
        NamedGraph::Dodecahedron => gp(10, 2).unwrap(),
        NamedGraph::Rosette => {
            let dodec = gp(10, 2).unwrap();
            let erased = [10, 12, 14, 16, 18];
            let keep = VertexSet::from_indices(20, (0..20).filter(|v| !erased.contains(v)));
            let (rosette, _) = dodec.induced_subgraph(&keep).unwrap();
            rosette
        }
    }
}
