//! The classification predicate for 2-extendability of vertex-transitive
//! graphs, the exceptional-family matcher, and the cross-validation harness
//! that compares predictions against the brute-force extendability oracle.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::connectivity::{Caps, ConnectivityError, ConnectivityReport};
use crate::families;
use crate::graph::Graph;
use crate::matching::{self, MatchingError};
use crate::symmetry;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("graph has odd order")]
    OddOrder,
    #[error("graph must be connected")]
    Disconnected,
    #[error("2-extendability is undefined below 6 vertices (order {0})")]
    TooSmall(usize),
    #[error("oracle failed: {0}")]
    Oracle(#[from] MatchingError),
    #[error("connectivity analysis failed: {0}")]
    Connectivity(#[from] ConnectivityError),
}

/// The exceptional circulant families, plus the Petersen graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyId {
    /// Z_{2n}(1, 2n-1), n >= 3: the even cycles.
    FamilyI,
    /// Z_{2n}(1, 2, 2n-1, 2n-2), n >= 3.
    FamilyII,
    /// Z_{4n}(1, 4n-1, 2n), n >= 2.
    FamilyIII,
    /// Z_{4n+2}(2, 4n, 2n+1), n >= 1.
    FamilyIV,
    /// Z_{4n+2}(1, 4n+1, 2n, 2n+2), n >= 1.
    FamilyV,
    Petersen,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyMatch {
    pub family: FamilyId,
    /// Circulant parameter for families I-V; `None` for Petersen.
    pub parameter: Option<usize>,
}

/// Builds the unique member of the family with the given order, when the
/// order fits the family's parametrization.
pub fn family_member(family: FamilyId, order: usize) -> Option<(Graph, usize)> {
    let circ = |s: Vec<usize>| families::circulant(order, &s).expect("family connection sets are valid");
    match family {
        FamilyId::FamilyI => {
            let n = order / 2;
            (order.is_multiple_of(2) && n >= 3).then(|| (circ(vec![1, order - 1]), n))
        }
        FamilyId::FamilyII => {
            let n = order / 2;
            (order.is_multiple_of(2) && n >= 3).then(|| (circ(vec![1, 2, order - 1, order - 2]), n))
        }
        FamilyId::FamilyIII => {
            let n = order / 4;
            (order.is_multiple_of(4) && n >= 2).then(|| (circ(vec![1, order - 1, order / 2]), n))
        }
        FamilyId::FamilyIV => {
            (order % 4 == 2 && order >= 6).then(|| (circ(vec![2, order - 2, order / 2]), (order - 2) / 4))
        }
        FamilyId::FamilyV => (order % 4 == 2 && order >= 6)
            .then(|| (circ(vec![1, order - 1, order / 2 - 1, order / 2 + 1]), (order - 2) / 4)),
        FamilyId::Petersen => (order == 10).then(|| (families::named(families::NamedGraph::Petersen), 0)),
    }
}

/// First exceptional family whose member of matching order is isomorphic to
/// g, in the order I, II, III, IV, V, Petersen.
pub fn matches_exceptional_family(g: &Graph) -> Option<FamilyMatch> {
    use FamilyId::*;
    for family in [FamilyI, FamilyII, FamilyIII, FamilyIV, FamilyV, Petersen] {
        if let Some((member, n)) = family_member(family, g.order()) {
            if member.degree_sequence() == g.degree_sequence() && symmetry::is_isomorphic(g, &member).is_isomorphic() {
                let parameter = (family != Petersen).then_some(n);
                return Some(FamilyMatch { family, parameter });
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Prediction {
    TwoExtendable,
    NotTwoExtendable,
    Unknown,
}

/// Reasons for a negative prediction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reason {
    Girth3,
    Cycle,
    ExceptionalFamilyIii,
    ExceptionalFamilyIv,
    ExceptionalFamilyIi,
    ExceptionalFamilyV,
    Petersen,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum UnknownReason {
    NotVertexTransitive,
    Degree4Open,
    IrregularDegree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    BipartiteVertexTransitive,
    CubicVertexTransitive,
    DegreeFivePlus,
    DegreeFourFamily,
}

/// Classification verdict for a connected even-order graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub prediction: Prediction,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<Reason>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unknown_reason: Option<UnknownReason>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub applicable_theorem: Option<TheoremId>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exceptional_family: Option<FamilyMatch>,
}

impl Verdict {
    fn positive(theorem: TheoremId) -> Self {
        Verdict {
            prediction: Prediction::TwoExtendable,
            reason: None,
            unknown_reason: None,
            applicable_theorem: Some(theorem),
            exceptional_family: None,
        }
    }

    fn negative(theorem: TheoremId, reason: Reason, family: Option<FamilyMatch>) -> Self {
        Verdict {
            prediction: Prediction::NotTwoExtendable,
            reason: Some(reason),
            unknown_reason: None,
            applicable_theorem: Some(theorem),
            exceptional_family: family,
        }
    }

    fn unknown(reason: UnknownReason) -> Self {
        Verdict {
            prediction: Prediction::Unknown,
            reason: None,
            unknown_reason: Some(reason),
            applicable_theorem: None,
            exceptional_family: None,
        }
    }
}

/// Predicts 2-extendability of a connected even-order graph from the
/// classification rules, after verifying vertex-transitivity.
///
/// Bipartite: 2-extendable iff not a cycle. Cubic non-bipartite:
/// 2-extendable iff girth >= 4 and the graph is none of family III, family
/// IV (parameter >= 2) or the Petersen graph. Degree >= 5: 2-extendable.
/// Degree 4: decided only for members of families II and V, open otherwise.
pub fn predict(g: &Graph) -> Result<Verdict, ClassifyError> {
    if !g.order().is_multiple_of(2) {
        return Err(ClassifyError::OddOrder);
    }
    if !g.is_connected() {
        return Err(ClassifyError::Disconnected);
    }
    if g.order() < 6 {
        return Err(ClassifyError::TooSmall(g.order()));
    }
    if !symmetry::is_vertex_transitive(g) {
        return Ok(Verdict::unknown(UnknownReason::NotVertexTransitive));
    }
    let Some(degree) = g.regularity() else {
        return Ok(Verdict::unknown(UnknownReason::IrregularDegree));
    };
    if g.is_bipartite() {
        if degree == 2 {
            return Ok(Verdict::negative(
                TheoremId::BipartiteVertexTransitive,
                Reason::Cycle,
                matches_exceptional_family(g),
            ));
        }
        return Ok(Verdict::positive(TheoremId::BipartiteVertexTransitive));
    }
    match degree {
        3 => {
            if g.girth() == Some(3) {
                return Ok(Verdict::negative(
                    TheoremId::CubicVertexTransitive,
                    Reason::Girth3,
                    None,
                ));
            }
            if let Some(m) = matches_exceptional_family(g) {
                match m.family {
                    FamilyId::FamilyIII if m.parameter >= Some(2) => {
                        return Ok(Verdict::negative(
                            TheoremId::CubicVertexTransitive,
                            Reason::ExceptionalFamilyIii,
                            Some(m),
                        ));
                    }
                    FamilyId::FamilyIV if m.parameter >= Some(2) => {
                        return Ok(Verdict::negative(
                            TheoremId::CubicVertexTransitive,
                            Reason::ExceptionalFamilyIv,
                            Some(m),
                        ));
                    }
                    FamilyId::Petersen => {
                        return Ok(Verdict::negative(
                            TheoremId::CubicVertexTransitive,
                            Reason::Petersen,
                            Some(m),
                        ));
                    }
                    _ => {}
                }
            }
            Ok(Verdict::positive(TheoremId::CubicVertexTransitive))
        }
        d if d >= 5 => Ok(Verdict::positive(TheoremId::DegreeFivePlus)),
        _ => {
            if let Some(m) = matches_exceptional_family(g) {
                match m.family {
                    FamilyId::FamilyII => {
                        return Ok(Verdict::negative(
                            TheoremId::DegreeFourFamily,
                            Reason::ExceptionalFamilyIi,
                            Some(m),
                        ));
                    }
                    FamilyId::FamilyV => {
                        return Ok(Verdict::negative(
                            TheoremId::DegreeFourFamily,
                            Reason::ExceptionalFamilyV,
                            Some(m),
                        ));
                    }
                    _ => {}
                }
            }
            Ok(Verdict::unknown(UnknownReason::Degree4Open))
        }
    }
}

/// Structural fingerprint of a graph, the sort key for reports.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Fingerprint {
    pub order: usize,
    pub size: usize,
    pub girth: Option<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
    pub bipartite: bool,
}

impl Fingerprint {
    pub fn of(g: &Graph) -> Self {
        Fingerprint {
            order: g.order(),
            size: g.size(),
            girth: g.girth(),
            min_degree: g.min_degree(),
            max_degree: g.max_degree(),
            bipartite: g.is_bipartite(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    pub two_extendable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violating_matching: Option<Vec<(usize, usize)>>,
}

/// Oracle result, invariants, prediction and the agreement flag for one
/// graph. `agreement` is `None` when the prediction is unknown.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub fingerprint: Fingerprint,
    pub connectivity: ConnectivityReport,
    pub vertex_transitive: bool,
    pub edge_transitive: bool,
    pub oracle: OracleResult,
    pub verdict: Verdict,
    pub agreement: Option<bool>,
}

/// Runs the oracle and the prediction and records whether they agree.
pub fn cross_validate(g: &Graph, caps: &Caps) -> Result<Certificate, ClassifyError> {
    let verdict = predict(g)?;
    let oracle = matching::is_k_extendable(g, 2)?;
    let connectivity = ConnectivityReport::compute(g, caps)?;
    let agreement = match verdict.prediction {
        Prediction::Unknown => None,
        Prediction::TwoExtendable => Some(oracle.extendable),
        Prediction::NotTwoExtendable => Some(!oracle.extendable),
    };
    Ok(Certificate {
        fingerprint: Fingerprint::of(g),
        connectivity,
        vertex_transitive: symmetry::is_vertex_transitive(g),
        edge_transitive: symmetry::is_edge_transitive(g),
        oracle: OracleResult {
            two_extendable: oracle.extendable,
            violating_matching: oracle.violating.map(|m| m.edges().to_vec()),
        },
        verdict,
        agreement,
    })
}
