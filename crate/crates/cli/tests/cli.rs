use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclebound"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_string()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

const K4: &str = "n 4\ne 0 1 1\ne 0 2 1\ne 0 3 1\ne 1 2 1\ne 1 3 1\ne 2 3 1\n";
const C5: &str = "n 5\ne 0 1 1\ne 1 2 1\ne 2 3 1\ne 3 4 1\ne 0 4 1\n";
const C4_HEAVY: &str = "n 4\ne 0 1 1\ne 1 2 1\ne 2 3 1\ne 0 3 10\n";

#[test]
fn verify_uniform_k4_is_equality() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "k4.txt", K4);
    let out = run(&["verify", &file, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["local_sum"], "3/2");
    assert_eq!(v["equality"], true);
}

#[test]
fn verify_uniform_c5_has_gap_one() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "c5.txt", C5);
    let out = run(&["--json", "verify", &file]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["equality"], false);
    assert_eq!(v["gap"], "1");
    assert_eq!(v["local_sum"], "1");
}

#[test]
fn malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    for (name, text) in [
        ("loop.txt", "n 3\ne 1 1 2\n"),
        ("zero.txt", "n 3\ne 0 1 0\n"),
        ("garbage.txt", "hello\n"),
        ("dup.txt", "n 3\ne 0 1 1\ne 1 0 2\n"),
    ] {
        let file = write(dir.path(), name, text);
        let out = run(&["verify", &file]);
        assert_eq!(out.status.code(), Some(2), "{name}");
        assert!(
            String::from_utf8_lossy(&out.stderr).contains("line"),
            "{name}"
        );
    }
    let out = run(&["verify", "/nonexistent/graph.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn search_cap_exceeded_exits_4() {
    let dir = tempfile::tempdir().unwrap();
    let mut text = String::from("n 6\n");
    for u in 0..6 {
        for v in u + 1..6 {
            text.push_str(&format!("e {u} {v} 1\n"));
        }
    }
    let file = write(dir.path(), "k6.txt", &text);
    let out = run(&["verify", &file, "--search-cap", "5"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--search-cap"));
}

#[test]
fn caps_below_three_are_rejected() {
    let out = run(&["fuzz", "--n-max", "4", "--trials", "1", "--enum-cap", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn float_mode_never_claims_equality() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "k4.txt", K4);
    let v = json(&run(&["verify", &file, "--json", "--mode", "float"]));
    assert_eq!(v["equality"], false);
    assert_eq!(v["numerically_tight"], true);
    assert_eq!(v["local_sum"], 1.5);
    let text = stdout(&run(&["verify", &file, "--mode", "float"]));
    assert!(!text.contains("equality"));
    assert!(text.contains("numerically tight = true"));
}

#[test]
fn text_and_json_agree_on_values() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "c4.txt", C4_HEAVY);
    let v = json(&run(&["verify", &file, "--json"]));
    let text = stdout(&run(&["verify", &file]));
    for key in ["local_sum", "bound", "gap"] {
        let value = v[key].as_str().unwrap();
        assert!(
            text.lines()
                .any(|l| l.starts_with(key) && l.ends_with(value)),
            "{key}"
        );
    }
}

#[test]
fn analyze_two_triangles_sharing_a_vertex() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(
        dir.path(),
        "bowtie.txt",
        "n 5\ne 0 1 1\ne 1 2 2\ne 0 2 3\ne 2 3 1\ne 3 4 5\ne 2 4 1\n",
    );
    let out = run(&["analyze", &file, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["block_graph"], true);
    assert_eq!(v["certificate"]["status"], "Equality");
    assert_eq!(v["certificate"]["route"], "BlockGraphInduced");
    assert_eq!(v["cut_vertices"], serde_json::json!([2]));
    let text = stdout(&run(&["analyze", &file]));
    assert!(text.contains("block graph: yes"));
    assert!(text.contains("certificate: Equality"));
}

#[test]
fn analyze_threshold_on_heavy_c4() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "c4.txt", C4_HEAVY);
    let v = json(&run(&["analyze", &file, "--json", "--threshold", "13"]));
    let t = &v["thresholds"][0];
    assert_eq!(t["light_mass"], "13");
    assert_eq!(t["bound"], "39/2");
    assert_eq!(t["holds"], true);
    assert_eq!(v["light_edge_forest"], serde_json::json!([[0, 3]]));
}

#[test]
fn analyze_tree_lists_every_bridge() {
    let dir = tempfile::tempdir().unwrap();
    let tree = stdout(&run(&["generate", "tree", "--n", "6", "--seed", "3"]));
    let file = write(dir.path(), "tree.txt", &tree);
    let v = json(&run(&["analyze", &file, "--json"]));
    assert_eq!(v["bridges"].as_array().unwrap().len(), 5);
    assert_eq!(v["light_edge_forest"], serde_json::json!([]));
    assert_eq!(v["certificate"]["status"], "Equality");
}

#[test]
fn analyze_accepts_labelled_vertices() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "lab.txt", "n 3\ne a b 1\ne b c 1\ne a c 1\n");
    let v = json(&run(&["analyze", &file, "--json"]));
    assert_eq!(v["labels"], serde_json::json!(["a", "b", "c"]));
    let text = stdout(&run(&["analyze", &file]));
    assert!(text.contains("[a b c]"));
}

#[test]
fn generate_tree_is_deterministic() {
    let a = run(&["generate", "tree", "--n", "8", "--seed", "1"]);
    let b = run(&["generate", "tree", "--n", "8", "--seed", "1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let g = cyclebound::format::parse_graph(&stdout(&a)).unwrap();
    assert_eq!((g.n(), g.m()), (8, 7));
    assert!(g.is_connected());
}

#[test]
fn generate_induced_clique_weights() {
    let out = run(&["generate", "induced-clique", "--r", "4", "--a", "1,2,3,4"]);
    let g = cyclebound::format::parse_graph(&stdout(&out)).unwrap();
    for e in g.edges() {
        let expected = cyclebound::Rational::new((e.u + 1 + e.v + 1) as i64, 2);
        assert_eq!(e.weight, expected);
    }
    let bad = run(&["generate", "induced-clique", "--r", "4", "--a", "1,2,3"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn generate_block_graph_is_an_equality_instance() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(
        dir.path(),
        "spec.json",
        r#"{
          "block_sizes": [4, 2, 3, 5],
          "attachment": [0, 4, 2],
          "per_block_weights": [
            {"kind": "induced", "a": ["1", "2", "3", "4"]},
            {"kind": "uniform", "weight": "7/2"},
            {"kind": "random_positive"},
            {"kind": "uniform", "weight": "1"}
          ]
        }"#,
    );
    let out = run(&["generate", "block-graph", "--spec", &spec, "--seed", "7"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let file = write(dir.path(), "bg.txt", &stdout(&out));
    let v = json(&run(&["analyze", &file, "--json"]));
    assert_eq!(v["report"]["gap"], "0");
    assert_eq!(v["certificate"]["status"], "Equality");
}

#[test]
fn generate_random_respects_edge_count() {
    let out = run(&[
        "generate", "random", "--n", "7", "--m", "12", "--seed", "4", "--json",
    ]);
    let g = cyclebound::format::parse_graph(&stdout(&out)).unwrap();
    assert_eq!((g.n(), g.m()), (7, 12));
    let bad = run(&["generate", "random", "--n", "4", "--m", "9"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn fuzz_zero_trials_is_trivial_pass() {
    let v = json(&run(&["fuzz", "--n-max", "8", "--trials", "0", "--json"]));
    assert_eq!(v["summary"]["instances"], 0);
    assert_eq!(v["summary"]["checks"], 0);
}

#[test]
fn fuzz_cap_violation_exits_4() {
    let out = run(&["fuzz", "--n-max", "20", "--trials", "1", "--enum-cap", "12"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn fuzz_is_reproducible_across_threading() {
    let args = [
        "fuzz",
        "--n-max",
        "6",
        "--trials",
        "15",
        "--seed",
        "99",
        "--cross-check",
        "--json",
    ];
    let a = run(&args);
    let mut seq = args.to_vec();
    seq.push("--sequential");
    let b = run(&seq);
    assert_eq!(a.status.code(), Some(0));
    let (va, vb) = (json(&a), json(&b));
    assert_eq!(va["summary"], vb["summary"]);
    assert_eq!(va["summary"]["instances"], 60);
    assert!(va["summary"]["min_positive_gap"].is_string());
}

#[test]
fn verify_json_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let g = stdout(&run(&[
        "generate", "random", "--n", "8", "--m", "16", "--seed", "11",
    ]));
    let file = write(dir.path(), "g.txt", &g);
    let first = run(&["verify", &file, "--json"]).stdout;
    assert_eq!(first, run(&["verify", &file, "--json"]).stdout);
    assert_eq!(
        first,
        run(&["verify", &file, "--json", "--sequential"]).stdout
    );
}

#[test]
fn unnamed_vertices_in_label_mode_are_isolated() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "lab.txt", "n 4\ne a b 1\ne b c 2\n");
    let out = run(&["verify", &file]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("[#3]"));
    let v = json(&run(&["verify", &file, "--json"]));
    assert_eq!(v["labels"][3], "#3");
    assert_eq!(v["connected"], false);
}
