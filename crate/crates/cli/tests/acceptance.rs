//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! The census-backed criteria share a single default census run.

use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use matchext::brute;
use matchext::classify::Prediction;
use matchext::connectivity::{self, Caps};
use matchext::families::{self, LadderMatching, LadderParity, NamedGraph, Rail, RingClosure};
use matchext::graph::{Graph, VertexSet};
use matchext::matching;

use matchext_cli::census::run_census;
use matchext_cli::config::SuiteConfig;
use matchext_cli::report::SuiteReport;

fn census() -> &'static SuiteReport {
    static REPORT: OnceLock<SuiteReport> = OnceLock::new();
    REPORT.get_or_init(|| run_census(&SuiteConfig::default()))
}

fn pass(criterion: &str, detail: String) {
    println!("[PASS] {criterion}: {detail}");
}

/// Any false agreement anywhere in the census is a build-failing event.
#[test]
fn census_headline_all_tallies_pass() {
    let report = census();
    let failing: Vec<(&String, &matchext_cli::report::Tally)> =
        report.tallies.iter().filter(|(_, t)| t.failed > 0).collect();
    assert!(failing.is_empty(), "failing tallies: {failing:?}");
    for (name, tally) in &report.tallies {
        assert_eq!(tally.passed + tally.failed, tally.applicable, "{name}");
    }
    pass("census", format!("{} tallies, all passing", report.tallies.len()));
}

/// Exceptional-family necessity: the two cubic circulant families are not
/// 2-extendable, each with an explicit violating 2-matching.
#[test]
fn acceptance_01_exceptional_circulants() {
    let mut checked = 0;
    for n in 2..=5 {
        let members = [
            (
                format!("Z_{}(1,{},{})", 4 * n, 4 * n - 1, 2 * n),
                families::circulant(4 * n, &[1, 4 * n - 1, 2 * n]).unwrap(),
            ),
            (
                format!("Z_{}(2,{},{})", 4 * n + 2, 4 * n, 2 * n + 1),
                families::circulant(4 * n + 2, &[2, 4 * n, 2 * n + 1]).unwrap(),
            ),
        ];
        for (name, g) in members {
            let result = matching::is_k_extendable(&g, 2).unwrap();
            assert!(!result.extendable, "{name} must not be 2-extendable");
            let witness = result.violating.expect("explicit violating 2-matching");
            assert_eq!(witness.len(), 2, "{name}");
            let removed = witness.covered_vertices(g.order());
            assert!(
                !matching::has_perfect_matching(&g, &removed),
                "{name}: witness does not violate"
            );
            checked += 1;
        }
    }
    pass(
        "criterion 1",
        format!("{checked} exceptional circulants refuted with explicit 2-matchings"),
    );
}

/// GP(n, 2) is 2-extendable exactly when n is not 5, 6 or 8.
#[test]
fn acceptance_02_generalized_petersen() {
    for n in 5..=12 {
        let g = families::gp(n, 2).unwrap();
        let expected = ![5, 6, 8].contains(&n);
        let actual = matching::is_k_extendable(&g, 2).unwrap().extendable;
        assert_eq!(actual, expected, "GP({n},2)");
    }
    pass(
        "criterion 2",
        "GP(n,2) for n=5..12 matches the n ∉ {5,6,8} rule exactly".into(),
    );
}

/// Bipartite vertex-transitive graphs: 2-extendable unless a cycle.
#[test]
fn acceptance_03_bipartite_classification() {
    let report = census();
    let mut positives = 0;
    for record in &report.certificates {
        let cert = &record.certificate;
        if cert.vertex_transitive && cert.fingerprint.bipartite && cert.fingerprint.min_degree >= 3 {
            assert!(
                cert.oracle.two_extendable,
                "bipartite census graph {} (order {}) must be 2-extendable",
                record.source, cert.fingerprint.order
            );
            positives += 1;
        }
    }
    assert!(
        positives >= 10,
        "census must contain bipartite vertex-transitive graphs, found {positives}"
    );
    let mut negatives = 0;
    for n in 3..=8 {
        let cycle = Graph::cycle(2 * n);
        assert!(
            !matching::is_k_extendable(&cycle, 2).unwrap().extendable,
            "C_{} must not be 2-extendable",
            2 * n
        );
        negatives += 1;
    }
    pass(
        "criterion 3",
        format!("{positives} bipartite census graphs 2-extendable, {negatives} even cycles not"),
    );
}

/// Cubic classification soundness sweep: oracle equals prediction.
#[test]
fn acceptance_04_cubic_classification_sweep() {
    let report = census();
    let mut swept = 0;
    for record in &report.certificates {
        let cert = &record.certificate;
        let cubic = cert.fingerprint.min_degree == 3 && cert.fingerprint.max_degree == 3;
        let in_sweep = cubic && cert.vertex_transitive && !cert.fingerprint.bipartite && cert.fingerprint.order <= 20;
        if in_sweep {
            assert_eq!(
                cert.agreement,
                Some(true),
                "disagreement on {} ({:?})",
                record.source,
                cert.fingerprint
            );
            swept += 1;
        }
    }
    assert!(swept >= 8, "sweep too small: {swept}");

    // Plus the named instances: Petersen, T_m (m <= 6, both closures), and
    // the dodecahedron.
    let mut named = vec![
        ("petersen".to_owned(), families::named(NamedGraph::Petersen)),
        ("dodecahedron".to_owned(), families::named(NamedGraph::Dodecahedron)),
    ];
    for m in 2..=6 {
        for closure in [RingClosure::Straight, RingClosure::Crossed] {
            named.push((format!("T_{m}-{closure:?}"), families::t_m(m, closure).unwrap()));
        }
    }
    for (name, g) in &named {
        let cert = matchext::classify::cross_validate(g, &Caps::default()).unwrap();
        assert_ne!(cert.verdict.prediction, Prediction::Unknown, "{name}");
        assert_eq!(cert.agreement, Some(true), "{name}");
    }
    pass(
        "criterion 4",
        format!(
            "{swept} census graphs plus {} named instances, zero disagreements",
            named.len()
        ),
    );
}

/// Connectivity equalities on cubic vertex-transitive census graphs.
#[test]
fn acceptance_05_connectivity_equalities() {
    let report = census();
    let (mut lambda_checked, mut lambda2_checked, mut clambda_checked) = (0, 0, 0);
    for record in &report.certificates {
        let cert = &record.certificate;
        let cubic = cert.fingerprint.min_degree == 3 && cert.fingerprint.max_degree == 3;
        if !(cubic && cert.vertex_transitive) {
            continue;
        }
        assert_eq!(cert.connectivity.lambda, 3, "lambda on {}", record.source);
        lambda_checked += 1;
        if cert.fingerprint.girth.is_some_and(|g| g >= 4) {
            assert_eq!(cert.connectivity.lambda2, Some(4), "lambda2 on {}", record.source);
            lambda2_checked += 1;
        }
        if let Some(clambda) = cert.connectivity.clambda {
            assert_eq!(Some(clambda), cert.fingerprint.girth, "clambda on {}", record.source);
            clambda_checked += 1;
        }
    }
    assert!(
        lambda_checked >= 15 && lambda2_checked >= 10 && clambda_checked >= 10,
        "sweeps too small: {lambda_checked}/{lambda2_checked}/{clambda_checked}"
    );
    pass(
        "criterion 5",
        format!(
            "lambda=3 on {lambda_checked}, lambda2=4 on {lambda2_checked}, clambda=girth on {clambda_checked} cubic census graphs"
        ),
    );
}

/// Super cyclic edge-connectivity of the girth-5 instances and the
/// quadrangle rings.
#[test]
fn acceptance_06_super_cyclic() {
    let caps = Caps::default();
    let expectations = [
        ("petersen", families::named(NamedGraph::Petersen), true),
        ("dodecahedron", families::named(NamedGraph::Dodecahedron), true),
        ("T_3", families::t_m(3, RingClosure::Straight).unwrap(), false),
        ("T_4", families::t_m(4, RingClosure::Straight).unwrap(), false),
    ];
    let mut failures = Vec::new();
    for (name, g, expected) in &expectations {
        let actual = connectivity::is_super_cyclic(g, &caps).unwrap();
        let oracle = brute::is_super_cyclic(g).unwrap();
        assert_eq!(
            actual, oracle,
            "{name}: enumeration disagrees with the bipartition oracle"
        );
        if actual == *expected {
            println!("[PASS] criterion 6 ({name}): super_cyclic = {actual}");
        } else {
            println!("[FAIL] criterion 6 ({name}): super_cyclic = {actual}, required {expected}");
            failures.push(format!(
                "{name}: computed {actual} (bipartition oracle agrees), required {expected}"
            ));
        }
    }
    assert!(failures.is_empty(), "criterion 6 mismatches: {failures:?}");
    pass("criterion 6", "super cyclic edge-connectivity verdicts match".into());
}

/// The U(5) table for double ladders.
#[test]
fn acceptance_07_ladder_u5_table() {
    use Rail::*;
    let caps = Caps::default();
    // Expected-true cases of the characterization: odd ladders with the
    // standard matching for every k >= 2, the two twisted matchings at k = 3
    // and one at k = 4; even ladders with the straight matching for k >= 5.
    let odd_true = |k: usize, m: [Rail; 3]| {
        m == [C, B, A] || (k == 3 && (m == [B, C, A] || m == [C, A, B])) || (k == 4 && m == [B, A, C])
    };
    let even_true = |k: usize, m: [Rail; 3]| k >= 5 && m == [A, B, C];
    let mut table = 0;
    for k in 2..=5 {
        for m in LadderMatching::all() {
            let expected = odd_true(k, m.0);
            let actual = match families::double_ladder(LadderParity::Odd, k, m) {
                Ok(g) => connectivity::is_uniform_cyclic(&g, 5, &caps).unwrap(),
                // End matchings that repeat a rail edge are not graphs at
                // all, so not U(5).
                Err(_) => false,
            };
            assert_eq!(actual, expected, "odd ladder k={k} matching={m:?}");
            table += 1;
        }
    }
    for k in 4..=6 {
        for m in LadderMatching::all() {
            let expected = even_true(k, m.0);
            let g = families::double_ladder(LadderParity::Even, k, m).unwrap();
            let actual = connectivity::is_uniform_cyclic(&g, 5, &caps).unwrap();
            assert_eq!(actual, expected, "even ladder k={k} matching={m:?}");
            table += 1;
        }
    }
    pass(
        "criterion 7",
        format!("{table} double-ladder U(5) verdicts match the characterization"),
    );
}

/// Structural dichotomy: every even-order vertex-transitive census graph is
/// elementary bipartite or bicritical.
#[test]
fn acceptance_08_dichotomy() {
    let report = census();
    let mut checked = 0;
    for record in &report.certificates {
        let cert = &record.certificate;
        if cert.vertex_transitive && cert.fingerprint.order % 2 == 0 {
            assert!(
                record.elementary_bipartite || record.bicritical == Some(true),
                "dichotomy fails on {}",
                record.source
            );
            checked += 1;
        }
    }
    assert!(checked >= 30, "census too small: {checked}");
    pass(
        "criterion 8",
        format!("{checked} vertex-transitive census graphs satisfy the dichotomy"),
    );
}

/// Property suites: submodularity of the boundary function, the cyclic
/// connectivity algorithm against the exhaustive bipartition oracle, and the
/// blossom algorithm against exhaustive matching enumeration.
#[test]
fn acceptance_09_property_suites() {
    // 1000 random (G, X, Y) submodularity trials.
    let mut rng = ChaCha8Rng::seed_from_u64(20240601);
    for trial in 0..1000 {
        let n = rng.gen_range(4..=16);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.3) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges).unwrap();
        let x = VertexSet::from_indices(n, (0..n).filter(|_| rng.gen_bool(0.5)));
        let y = VertexSet::from_indices(n, (0..n).filter(|_| rng.gen_bool(0.5)));
        let lhs = g.boundary_size(&x.union(&y)) + g.boundary_size(&x.intersection(&y));
        let rhs = g.boundary_size(&x) + g.boundary_size(&y);
        assert!(lhs <= rhs, "submodularity violated on trial {trial}");
    }

    // Corpus of graphs with at most 14 vertices.
    let mut corpus: Vec<(String, Graph)> = vec![
        ("K_4".into(), Graph::complete(4)),
        ("K_5".into(), Graph::complete(5)),
        ("K_3_3".into(), Graph::complete_bipartite(3, 3)),
        ("K_3_4".into(), Graph::complete_bipartite(3, 4)),
        ("prism".into(), families::circulant(6, &[2, 4, 3]).unwrap()),
        ("cube".into(), families::gp(4, 1).unwrap()),
        ("mobius8".into(), families::circulant(8, &[1, 7, 4]).unwrap()),
        ("petersen".into(), families::named(NamedGraph::Petersen)),
        ("gp62".into(), families::gp(6, 2).unwrap()),
        ("gp72".into(), families::gp(7, 2).unwrap()),
        ("T_2".into(), families::t_m(2, RingClosure::Crossed).unwrap()),
        ("T_3".into(), families::t_m(3, RingClosure::Straight).unwrap()),
        ("star".into(), Graph::star(5)),
        ("path".into(), Graph::path(9)),
        (
            "barbell".into(),
            Graph::from_edges(7, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 6), (6, 3)]).unwrap(),
        ),
        (
            "two-triangles".into(),
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap(),
        ),
    ];
    for i in 0..20 {
        let n = rng.gen_range(5..=14);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.35) {
                    edges.push((u, v));
                }
            }
        }
        corpus.push((format!("random-{i}"), Graph::from_edges(n, edges).unwrap()));
    }
    for c in 3..=14 {
        corpus.push((format!("C_{c}"), Graph::cycle(c)));
    }

    let caps = Caps::default();
    let mut clambda_checked = 0;
    let mut blossom_checked = 0;
    for (name, g) in &corpus {
        if g.order() <= 14 {
            let computed = connectivity::cyclic_edge_connectivity(g, &caps).unwrap().clambda;
            let oracle = brute::cyclic_edge_connectivity(g);
            assert_eq!(computed, oracle, "cyclic connectivity on {name}");
            clambda_checked += 1;

            assert_eq!(
                matching::max_matching(g).len(),
                brute::max_matching_size(g),
                "matching size on {name}"
            );
            blossom_checked += 1;
        }
    }
    assert!(clambda_checked >= 40 && blossom_checked >= 40);
    pass(
        "criterion 9",
        format!(
            "1000 submodularity trials, {clambda_checked} cyclic-connectivity and {blossom_checked} matching oracle agreements"
        ),
    );
}

/// High-degree spot checks: non-bipartite vertex-transitive graphs of degree
/// at least five are 2-extendable.
#[test]
fn high_degree_spot_checks() {
    for (name, g) in [
        (
            "Z_12(1,2,6,10,11)",
            families::circulant(12, &[1, 2, 6, 10, 11]).unwrap(),
        ),
        (
            "Z_12(1,2,3,9,10,11)",
            families::circulant(12, &[1, 2, 3, 9, 10, 11]).unwrap(),
        ),
        ("K_8", Graph::complete(8)),
    ] {
        assert!(!g.is_bipartite(), "{name}");
        assert!(g.regularity().unwrap() >= 5, "{name}");
        assert!(matching::is_k_extendable(&g, 2).unwrap().extendable, "{name}");
    }
}
