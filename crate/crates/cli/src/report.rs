//! Census report: one entry per generated graph (validated, duplicate,
//! skipped or errored), the certificates sorted by fingerprint, per-theorem
//! tallies, and the environment fingerprint. Two runs with the same config
//! produce byte-identical reports except for the timing block.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use matchext::classify::Certificate;

use crate::config::SuiteConfig;

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub config: SuiteConfig,
    pub environment: Environment,
    /// Every generated graph, in generation order.
    pub entries: Vec<Entry>,
    /// Certificates of the isomorphism-distinct graphs, sorted by
    /// (fingerprint, source).
    pub certificates: Vec<CertificateRecord>,
    pub tallies: BTreeMap<String, Tally>,
    /// Informational findings that are recorded, not judged.
    pub observations: BTreeMap<String, serde_json::Value>,
    pub timing: Timing,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.tallies.values().all(|t| t.failed == 0)
    }

    /// The certificate a source resolves to, following duplicate links.
    pub fn certificate_for(&self, source: &str) -> Option<&CertificateRecord> {
        let entry = self.entries.iter().find(|e| e.source == source)?;
        match &entry.status {
            EntryStatus::Validated { certificate } => self.certificates.get(*certificate),
            EntryStatus::Duplicate { of } => self.certificate_for(of),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Environment {
    pub package_version: String,
    pub os: String,
    pub arch: String,
    pub workers: usize,
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Entry {
    pub source: String,
    #[serde(flatten)]
    pub status: EntryStatus,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum EntryStatus {
    /// Index into `certificates`.
    Validated {
        certificate: usize,
    },
    Duplicate {
        of: String,
    },
    Skipped {
        reason: String,
    },
    Errored {
        error: String,
    },
}

/// A certificate plus the structural matching facts the dichotomy tally
/// needs, and the family parameters that produced the graph.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub source: String,
    pub certificate: Certificate,
    pub elementary_bipartite: bool,
    pub bicritical: Option<bool>,
    pub one_extendable: Option<bool>,
    /// Whether the graph contains a clique of size equal to its degree
    /// (regular graphs only; drives the super-edge-connectivity tally).
    pub degree_clique: Option<bool>,
    /// For girth-4 graphs: whether the quadrangles are pairwise disjoint.
    pub quadrangles_independent: Option<bool>,
    /// For girth-4 graphs: whether the graph is one of the quadrangle rings.
    pub quadrangle_ring: Option<bool>,
}

impl CertificateRecord {
    /// U(5) verdict derived from the connectivity block.
    pub fn uniform_cyclic_5(&self) -> bool {
        self.certificate.connectivity.clambda == Some(5) && self.certificate.connectivity.uniform_cyclic == Some(true)
    }
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Tally {
    pub applicable: usize,
    pub passed: usize,
    pub failed: usize,
    /// Sources of the failing graphs.
    pub failures: Vec<String>,
}

impl Tally {
    pub fn record(&mut self, source: &str, pass: bool) {
        self.applicable += 1;
        if pass {
            self.passed += 1;
        } else {
            self.failed += 1;
            self.failures.push(source.to_owned());
        }
    }
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Timing {
    pub total_ms: u128,
    pub generation_ms: u128,
    pub validation_ms: u128,
}
