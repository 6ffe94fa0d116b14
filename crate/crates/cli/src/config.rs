//! Census configuration: which Cayley graphs and family sweeps to generate,
//! the caps for the exponential oracles, and execution knobs. All fields
//! have defaults sized to finish in minutes.

use serde::{Deserialize, Serialize};

use matchext::connectivity::Caps;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(default, deny_unknown_fields)]
#[derive(Default)]
pub struct SuiteConfig {
    pub groups: GroupConfig,
    pub sweeps: SweepConfig,
    pub caps: CapsConfig,
    /// Worker threads for per-graph validation; `None` uses every core
    /// (the MATCHEXT_WORKERS environment variable overrides both).
    pub workers: Option<usize>,
    /// Recorded in the report; every algorithm is deterministic.
    pub seed: Option<u64>,
    /// Report destination; standard output when absent. The census
    /// subcommand's --out flag takes precedence.
    pub out: Option<std::path::PathBuf>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(default, deny_unknown_fields)]
pub struct GroupConfig {
    /// Smallest group order to enumerate (2-extendability needs order 6).
    pub min_order: usize,
    pub max_order: usize,
    /// Group families: cyclic and dihedral groups and pairwise direct
    /// products of them.
    pub include_cyclic: bool,
    pub include_dihedral: bool,
    pub include_products: bool,
    /// Sizes of the inverse-closed generating connection sets to sweep.
    pub generator_set_sizes: Vec<usize>,
}

impl Default for GroupConfig {
    fn default() -> Self {
        GroupConfig {
            min_order: 6,
            max_order: 24,
            include_cyclic: true,
            include_dihedral: true,
            include_products: true,
            generator_set_sizes: vec![3],
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SweepRange {
    pub min: usize,
    pub max: usize,
}

impl SweepRange {
    pub fn iter(&self) -> impl Iterator<Item = usize> {
        self.min..=self.max
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(default, deny_unknown_fields)]
pub struct SweepConfig {
    /// GP(n, 2) for n in the range.
    pub generalized_petersen: Option<SweepRange>,
    /// T_m for m in the range, both closures.
    pub quadrangle_rings: Option<SweepRange>,
    /// Odd double ladders of length k, all six end matchings.
    pub odd_ladders: Option<SweepRange>,
    /// Even double ladders of length k, all six end matchings.
    pub even_ladders: Option<SweepRange>,
    /// Z_{4n}(1, 4n-1, 2n) and Z_{4n+2}(2, 4n, 2n+1) for n in the range.
    pub exceptional_circulants: Option<SweepRange>,
    /// Even cycles C_{2n} for n in the range.
    pub even_cycles: Option<SweepRange>,
    pub include_petersen: bool,
    pub include_dodecahedron: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            generalized_petersen: Some(SweepRange { min: 5, max: 12 }),
            quadrangle_rings: Some(SweepRange { min: 2, max: 6 }),
            odd_ladders: Some(SweepRange { min: 2, max: 5 }),
            even_ladders: Some(SweepRange { min: 4, max: 6 }),
            exceptional_circulants: Some(SweepRange { min: 2, max: 5 }),
            even_cycles: Some(SweepRange { min: 3, max: 8 }),
            include_petersen: true,
            include_dodecahedron: true,
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(default, deny_unknown_fields)]
pub struct CapsConfig {
    pub cut_enumeration: u128,
    pub cycle_budget: usize,
}

impl Default for CapsConfig {
    fn default() -> Self {
        let caps = Caps::default();
        CapsConfig {
            cut_enumeration: caps.cut_enumeration,
            cycle_budget: caps.cycle_budget,
        }
    }
}

impl CapsConfig {
    pub fn connectivity_caps(&self) -> Caps {
        Caps {
            cut_enumeration: self.cut_enumeration,
            cycle_budget: self.cycle_budget,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_round_trips() {
        let cfg = SuiteConfig::default();
        let text = serde_json::to_string(&cfg).unwrap();
        let back: SuiteConfig = serde_json::from_str(&text).unwrap();
        assert_eq!(back, cfg);
    }

    #[test]
    fn partial_config_fills_defaults() {
        let cfg: SuiteConfig =
            serde_json::from_str(r#"{"groups": {"max_order": 12}, "sweeps": {"even_cycles": null}}"#).unwrap();
        assert_eq!(cfg.groups.max_order, 12);
        assert_eq!(cfg.groups.min_order, 6);
        assert!(cfg.sweeps.even_cycles.is_none());
        assert!(cfg.sweeps.include_petersen);
    }

    #[test]
    fn unknown_fields_rejected() {
        assert!(serde_json::from_str::<SuiteConfig>(r#"{"grps": {}}"#).is_err());
    }
}
