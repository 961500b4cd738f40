use std::path::PathBuf;
use std::process::{Command, Output};

use proptest::prelude::*;
use schrom::{parse_graph, print_graph};
use schrom_core::{Edge, Sign, SignedGraph};

const SP3: &str = "# unbalanced triangle\nvertices 3\nedge 0 2 +\nedge 0 1 +\nedge 2 1 -\n";

fn write_graph(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("schrom-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn schrom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schrom"))
        .args(args)
        .env_remove("SCHROM_JOBS")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn cohomology_json_for_sp3() {
    let path = write_graph("sp3-json.graph", SP3);
    let o = schrom(&["cohomology", "--variant", "chromatic", "--input", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains(r#"{"i":1,"j":2,"free_rank":0,"torsion":[2]}"#), "{text}");
    assert!(text.starts_with(r#"{"graph":{"vertices":3,"edges":[{"tail":0,"head":2,"sign":"+"}"#), "{text}");
    assert!(text.contains(r#""variant":"chromatic","groups":["#));
}

#[test]
fn cohomology_text_table() {
    let path = write_graph("sp3-text.graph", SP3);
    let o = schrom(&["cohomology", "--variant", "balanced", "--input", path.to_str().unwrap()]);
    let text = stdout(&o);
    assert!(text.contains("1 2 0 [2]\n"), "{text}");
    assert!(text.contains("H^2 = Z{1} ⊕ Z{0}\n"), "{text}");
    assert!(text.contains("H^3 = 0\n"), "{text}");
}

#[test]
fn polynomial_methods() {
    let path = write_graph("sp3-poly.graph", SP3);
    let p = path.to_str().unwrap();
    for method in ["dc", "statesum"] {
        let o = schrom(&["polynomial", "--method", method, "--input", p]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).starts_with("odd [-1,3,-3,1]\neven [0,3,-3,1]\n"), "{}", stdout(&o));
        let o = schrom(&["polynomial", "--method", method, "--input", p, "--format", "json"]);
        assert_eq!(stdout(&o), "{\"odd\":[-1,3,-3,1],\"even\":[0,3,-3,1]}\n");
    }
    let o = schrom(&["polynomial", "--method", "oracle", "--input", p, "--lambda-max", "4"]);
    assert_eq!(stdout(&o), "lambda count\n1 0\n2 2\n3 8\n4 28\n");
}

#[test]
fn euler_reports_match() {
    let path = write_graph("sp3-euler.graph", SP3);
    let o = schrom(&["euler", "--variant", "balanced", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("CHAIN      q^3 + 1\n") && text.contains("COHOMOLOGY q^3 + 1\n"), "{text}");
    assert!(text.ends_with("match true\n"));
}

#[test]
fn states_in_per_vertex_notation() {
    let path = write_graph("sp3-states.graph", SP3);
    let o = schrom(&["states", "--variant", "chromatic", "--input", path.to_str().unwrap(), "--i", "1", "--j", "1"]);
    assert_eq!(stdout(&o), "C^{1,1} rank 6\n  (100, 1x1)\n  (100, x1x)\n  (010, 11x)\n  (010, xx1)\n  (001, 1xx)\n  (001, x11)\n");
}

#[test]
fn exit_codes() {
    let sp3 = write_graph("sp3-exit.graph", SP3);
    let sp3 = sp3.to_str().unwrap();
    assert_eq!(schrom(&["verify", "--input", sp3]).status.code(), Some(0));

    // The rational pairing holds on the balanced triangle, so this check fails.
    let triangle = write_graph("triangle.graph", "vertices 3\nedge 0 1 +\nedge 1 2 +\nedge 2 0 +\n");
    let o = schrom(&["verify", "--input", triangle.to_str().unwrap(), "--check", "knight-move-fails"]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));

    assert_eq!(schrom(&["cohomology", "--variant", "signed", "--input", sp3]).status.code(), Some(2));
    assert_eq!(schrom(&["cohomology", "--variant", "chromatic", "--input", sp3, "--bogus"]).status.code(), Some(2));
    assert_eq!(schrom(&["verify", "--input", sp3, "--check", "NOPE"]).status.code(), Some(2));
    assert_eq!(schrom(&["verify", "--input", sp3, "--vertex", "3"]).status.code(), Some(2));
    assert_eq!(schrom(&["cohomology", "--variant", "chromatic", "--input", "/nonexistent/g"]).status.code(), Some(2));

    let twice = write_graph("twice.graph", "vertices 2\nvertices 2\n");
    let o = schrom(&["cohomology", "--variant", "chromatic", "--input", twice.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    let range = write_graph("range.graph", "vertices 2\nedge 0 5 +\n");
    let o = schrom(&["cohomology", "--variant", "chromatic", "--input", range.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("out of range"));
}

#[test]
fn jobs_flag_and_environment() {
    let args = ["verify", "--suite", "--seed", "3", "--max-vertices", "2", "--max-edges", "2", "--random-count", "5"];
    let base = schrom(&args);
    assert_eq!(base.status.code(), Some(0), "{}", stdout(&base));
    assert!(stdout(&base).contains("all checks passed"));

    let mut with_flag: Vec<&str> = vec!["--jobs", "2"];
    with_flag.extend(args);
    assert_eq!(schrom(&with_flag).stdout, base.stdout);

    let env = Command::new(env!("CARGO_BIN_EXE_schrom")).args(args).env("SCHROM_JOBS", "3").output().unwrap();
    assert_eq!(env.stdout, base.stdout);
    let bad = Command::new(env!("CARGO_BIN_EXE_schrom")).args(args).env("SCHROM_JOBS", "many").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

fn graph() -> impl Strategy<Value = SignedGraph> {
    (0usize..=5).prop_flat_map(|n| {
        let edges = if n == 0 {
            Just(Vec::new()).boxed()
        } else {
            prop::collection::vec((0..n, 0..n, any::<bool>()), 0..8).boxed()
        };
        edges.prop_map(move |edges| {
            let edges = edges
                .into_iter()
                .map(|(u, v, neg)| Edge::new(u, v, if neg { Sign::Negative } else { Sign::Positive }));
            SignedGraph::new(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(g in graph()) {
        prop_assert_eq!(parse_graph(&print_graph(&g)).unwrap(), g);
    }
}
