//! End-to-end tests of the matchext binary: generators, checks,
//! classification and census, exercised through real processes.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn matchext(args: &[&str], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_matchext"));
    cmd.args(args).stdout(Stdio::piped()).stderr(Stdio::piped());
    cmd.stdin(if stdin.is_some() { Stdio::piped() } else { Stdio::null() });
    let mut child = cmd.spawn().expect("spawn matchext");
    if let Some(text) = stdin {
        child.stdin.as_mut().unwrap().write_all(text.as_bytes()).unwrap();
    }
    child.wait_with_output().expect("matchext runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn gen_named_petersen() {
    let out = matchext(&["gen", "named", "--which", "petersen"], None);
    let v = stdout_json(&out);
    assert_eq!(v["n"], 10);
    assert_eq!(v["edges"].as_array().unwrap().len(), 15);
}

#[test]
fn gen_circulant_and_check_extendable() {
    let gen = matchext(&["gen", "circulant", "--n", "8", "--s", "1,7,4"], None);
    let graph = String::from_utf8(gen.stdout).unwrap();
    let out = matchext(&["check", "--extendable", "2"], Some(&graph));
    let v = stdout_json(&out);
    assert_eq!(v["property"], "extendable-2");
    assert_eq!(v["value"], false);
    assert_eq!(v["witness"].as_array().unwrap().len(), 2);
}

#[test]
fn gen_gp_matches_petersen_by_iso() {
    let petersen = matchext(&["gen", "named", "--which", "petersen"], None);
    let path = std::env::temp_dir().join("matchext-test-petersen.json");
    std::fs::write(&path, &petersen.stdout).unwrap();
    let gen = matchext(&["gen", "gp", "--n", "5", "--k", "2"], None);
    let graph = String::from_utf8(gen.stdout).unwrap();
    let out = matchext(&["check", "--iso", path.to_str().unwrap()], Some(&graph));
    let v = stdout_json(&out);
    assert_eq!(v["value"], true);
    std::fs::remove_file(&path).ok();
}

#[test]
fn gen_double_ladder_standard_matching() {
    let gen = matchext(
        &[
            "gen",
            "dl",
            "--parity",
            "odd",
            "--k",
            "2",
            "--matching",
            "a1c3,b1b5,c1a2",
        ],
        None,
    );
    let v = stdout_json(&gen);
    assert_eq!(v["n"], 10);
    // Bad far-end label is an input error.
    let bad = matchext(
        &[
            "gen",
            "dl",
            "--parity",
            "odd",
            "--k",
            "2",
            "--matching",
            "a1c9,b1b5,c1a2",
        ],
        None,
    );
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn gen_even_ladder_straight_matching() {
    let gen = matchext(
        &[
            "gen",
            "dl",
            "--parity",
            "even",
            "--k",
            "5",
            "--matching",
            "a1a5,b1b10,c1c5",
        ],
        None,
    );
    let v = stdout_json(&gen);
    assert_eq!(v["n"], 20);
    assert_eq!(v["edges"].as_array().unwrap().len(), 30);
    // Reversed pair orientation parses too.
    let gen = matchext(
        &[
            "gen",
            "dl",
            "--parity",
            "even",
            "--k",
            "5",
            "--matching",
            "a5a1,b10b1,c5c1",
        ],
        None,
    );
    assert!(gen.status.success());
}

#[test]
fn twisted_odd_ladder_is_uniformly_cyclically_5_connected() {
    // k = 3 with the twisted matching: U(5) holds even though the ladder is
    // not vertex-transitive.
    let gen = matchext(
        &[
            "gen",
            "dl",
            "--parity",
            "odd",
            "--k",
            "3",
            "--matching",
            "a1b7,b1c4,c1a3",
        ],
        None,
    );
    let graph = String::from_utf8(gen.stdout).unwrap();
    let out = matchext(&["check", "--connectivity"], Some(&graph));
    let v = stdout_json(&out);
    assert_eq!(v["value"]["clambda"], 5);
    assert_eq!(v["value"]["uniform_cyclic"], true);
    let out = matchext(&["check", "--vertex-transitive"], Some(&graph));
    let v = stdout_json(&out);
    assert_eq!(v["value"], false);
}

#[test]
fn gen_cayley_builtin_group() {
    let gen = matchext(&["gen", "cayley", "--group", "dihedral:6", "--s", "3,4,5"], None);
    let v = stdout_json(&gen);
    assert_eq!(v["n"], 6);
    assert_eq!(v["edges"].as_array().unwrap().len(), 9);

    // Z_2 x Z_4 with (1,0) and (0,1)/(0,3): the cube.
    let gen = matchext(
        &["gen", "cayley", "--group", "product:cyclic:2,cyclic:4", "--s", "1,3,4"],
        None,
    );
    let v = stdout_json(&gen);
    assert_eq!(v["n"], 8);
    assert_eq!(v["edges"].as_array().unwrap().len(), 12);
}

#[test]
fn gen_tm_and_connectivity_report() {
    let gen = matchext(&["gen", "tm", "--m", "3", "--choice", "straight"], None);
    let graph = String::from_utf8(gen.stdout).unwrap();
    let out = matchext(&["check", "--connectivity"], Some(&graph));
    let v = stdout_json(&out);
    assert_eq!(v["value"]["lambda"], 3);
    assert_eq!(v["value"]["clambda"], 4);
    assert_eq!(v["value"]["zeta"], 4);
}

#[test]
fn check_vertex_transitive_star_is_false() {
    let star = r#"{"n": 4, "edges": [[0,1],[0,2],[0,3]]}"#;
    let out = matchext(&["check", "--vertex-transitive"], Some(star));
    let v = stdout_json(&out);
    assert_eq!(v["value"], false);
    assert_eq!(v["witness"].as_array().unwrap().len(), 2);
}

#[test]
fn check_tutte_star_witness() {
    let star = r#"{"n": 4, "edges": [[0,1],[0,2],[0,3]]}"#;
    let out = matchext(&["check", "--tutte"], Some(star));
    let v = stdout_json(&out);
    assert_eq!(v["value"], false);
    assert_eq!(v["witness"]["set"], serde_json::json!([0]));
    assert_eq!(v["witness"]["deficiency"], 2);
}

#[test]
fn classify_petersen() {
    let gen = matchext(&["gen", "named", "--which", "petersen"], None);
    let graph = String::from_utf8(gen.stdout).unwrap();
    let out = matchext(&["classify"], Some(&graph));
    let v = stdout_json(&out);
    assert_eq!(v["prediction"], "not-two-extendable");
    assert_eq!(v["reason"], "petersen");
}

#[test]
fn verify_dodecahedron_agrees() {
    let gen = matchext(&["gen", "named", "--which", "dodecahedron"], None);
    let graph = String::from_utf8(gen.stdout).unwrap();
    let out = matchext(&["verify"], Some(&graph));
    let v = stdout_json(&out);
    assert_eq!(v["agreement"], true);
    assert_eq!(v["oracle"]["two_extendable"], true);
}

#[test]
fn classify_rejects_out_of_domain_graphs() {
    // Odd order.
    let c5 = r#"{"n": 5, "edges": [[0,1],[0,4],[1,2],[2,3],[3,4]]}"#;
    let out = matchext(&["classify"], Some(c5));
    assert_eq!(out.status.code(), Some(2));
    // Too small for 2-extendability.
    let k4 = r#"{"n": 4, "edges": [[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}"#;
    let out = matchext(&["classify"], Some(k4));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_unknown_verdict_exits_0() {
    // A twisted odd ladder is not vertex-transitive: prediction unknown,
    // recorded but not judged.
    let gen = matchext(
        &[
            "gen",
            "dl",
            "--parity",
            "odd",
            "--k",
            "3",
            "--matching",
            "a1b7,b1c4,c1a3",
        ],
        None,
    );
    let graph = String::from_utf8(gen.stdout).unwrap();
    let out = matchext(&["verify"], Some(&graph));
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verdict"]["prediction"], "unknown");
    assert_eq!(v["agreement"], serde_json::Value::Null);
}

#[test]
fn malformed_input_exits_2() {
    let cases = [
        r#"{"n": 4, "edges": [[3, 3]]}"#,
        r#"{"n": 4, "edges": [[0, 9]]}"#,
        r#"{"n": 4"#,
    ];
    for text in cases {
        let out = matchext(&["classify"], Some(text));
        assert_eq!(out.status.code(), Some(2), "{text}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn census_small_config_writes_report() {
    let cfg = r#"{
        "groups": {"max_order": 8},
        "sweeps": {
            "generalized_petersen": null,
            "quadrangle_rings": {"min": 2, "max": 2},
            "odd_ladders": null,
            "even_ladders": null,
            "exceptional_circulants": {"min": 2, "max": 2},
            "even_cycles": {"min": 3, "max": 3},
            "include_dodecahedron": false
        }
    }"#;
    let dir = std::env::temp_dir();
    let cfg_path = dir.join("matchext-test-census-cfg.json");
    let out_path = dir.join("matchext-test-census-report.json");
    std::fs::write(&cfg_path, cfg).unwrap();
    let out = matchext(
        &[
            "census",
            "--config",
            cfg_path.to_str().unwrap(),
            "--out",
            out_path.to_str().unwrap(),
            "--seed",
            "7",
        ],
        None,
    );
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(report["schema_version"], 1);
    assert_eq!(report["environment"]["seed"], 7);
    assert!(report["certificates"].as_array().unwrap().len() >= 4);
    std::fs::remove_file(&cfg_path).ok();
    std::fs::remove_file(&out_path).ok();
}

#[test]
fn census_rejects_bad_config() {
    let cfg_path = std::env::temp_dir().join("matchext-test-bad-cfg.json");
    std::fs::write(&cfg_path, r#"{"grps": 3}"#).unwrap();
    let out = matchext(&["census", "--config", cfg_path.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(&cfg_path).ok();
}

#[test]
fn gen_rejects_bad_parameters() {
    assert_eq!(
        matchext(&["gen", "circulant", "--n", "6", "--s", "1"], None)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        matchext(&["gen", "gp", "--n", "4", "--k", "2"], None).status.code(),
        Some(2)
    );
    assert_eq!(
        matchext(&["gen", "tm", "--m", "1", "--choice", "straight"], None)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        matchext(&["gen", "cayley", "--group", "cyclic:6", "--s", "2,4"], None)
            .status
            .code(),
        Some(2)
    );
}
