//! Runs the built `hyperdual` binary end to end.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

use hyperdual::ass::{ass_square, MonomialPrime};
use hyperdual::hypergraph::{connected_family, construct_t2, third_power_gap_example};
use hyperdual::{Hypergraph, VertexSet};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hyperdual"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "exit {:?}, stderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn write_hypergraph(dir: &Path, name: &str, h: &Hypergraph) -> String {
    write(dir, name, &h.to_json()).to_str().unwrap().to_owned()
}

fn sets(v: &Value) -> Vec<Vec<u64>> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|s| {
            s.as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_u64().unwrap())
                .collect()
        })
        .collect()
}

fn embedded(profile: &Value) -> Vec<Vec<u64>> {
    profile["embedded"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            e["prime"]
                .as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_u64().unwrap())
                .collect()
        })
        .collect()
}

#[test]
fn construct_family_t2() {
    let out = stdout_json(&run(&["construct", "--family", "t2", "--n", "6"]));
    assert_eq!(
        sets(&out["edges"]),
        vec![vec![1, 2, 3], vec![1, 5, 6], vec![3, 4, 5]]
    );
    assert_eq!(out["target_prime"], serde_json::json!([1, 2, 3, 4, 5, 6]));
}

#[test]
fn construct_writes_output_file() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("h.json");
    let out = run(&[
        "construct",
        "--family",
        "complete",
        "--n",
        "4",
        "--m",
        "3",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let h = Hypergraph::from_json(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(h.num_edges(), 4);
}

#[test]
fn construct_connected_pipeline_carries_target_prime() {
    let cases = [
        (3, 3, 5),
        (3, 4, 6),
        (3, 5, 7),
        (4, 4, 6),
        (4, 5, 7),
        (4, 6, 8),
        (5, 5, 7),
        (5, 6, 9),
    ];
    for (m, q, n) in cases {
        let out = run(&[
            "construct",
            "--m",
            &m.to_string(),
            "--q",
            &q.to_string(),
            "--n",
            &n.to_string(),
        ]);
        let text = String::from_utf8(out.stdout.clone()).unwrap();
        let value = stdout_json(&out);
        let h = Hypergraph::from_json(&text).unwrap();
        assert_eq!((h.m(), h.n()), (m, n));
        assert!(h.is_connected());
        assert_eq!(h, connected_family(m, q, n).unwrap().0);
        let target: Vec<usize> = (1..=q).collect();
        assert_eq!(value["target_prime"], serde_json::json!(target));
        let profile = ass_square(&h).unwrap();
        assert!(profile.contains(&MonomialPrime::new(VertexSet::full(q)).unwrap()));
        assert!(profile.primes().iter().all(|p| p.height() >= m));
    }
}

#[test]
fn construct_single_edge_padding() {
    let out = stdout_json(&run(&["construct", "--m", "3", "--q", "3", "--n", "5"]));
    assert_eq!(
        sets(&out["edges"]),
        vec![vec![1, 2, 3], vec![1, 2, 4], vec![1, 2, 5]]
    );
}

#[test]
fn construct_rejects_bad_parameters() {
    assert_eq!(
        run(&["construct", "--m", "4", "--q", "3", "--n", "5"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["construct", "--family", "t2"]).status.code(), Some(1));
    assert_eq!(
        run(&["construct", "--family", "t2", "--n", "2"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn analyze_six_vertex_family() {
    let dir = TempDir::new().unwrap();
    let input = write_hypergraph(dir.path(), "h.json", &construct_t2(6).unwrap());
    let out = stdout_json(&run(&["analyze", "--input", &input]));
    assert_eq!(embedded(&out["profile"]), vec![vec![1, 2, 3, 4, 5, 6]]);
    let summary = &out["summary"];
    assert_eq!(summary["balanced"], false);
    assert_eq!(summary["embedded_free_by_independent_sets"], false);
    assert_eq!(
        summary["failing_independent_set"],
        serde_json::json!([2, 4, 6])
    );
    assert_eq!(summary["agreement"]["independent_sets"], true);
}

#[test]
fn analyze_unbalanced_embedded_free() {
    let dir = TempDir::new().unwrap();
    let input = write(
        dir.path(),
        "h.json",
        r#"{"n":6,"m":3,"edges":[[1,2,3],[3,4,5],[5,6,1],[2,3,4]]}"#,
    );
    let out = stdout_json(&run(&["analyze", "--input", input.to_str().unwrap()]));
    assert!(embedded(&out["profile"]).is_empty());
    assert_eq!(out["summary"]["balanced"], false);
    assert_eq!(out["summary"]["embedded_free_by_independent_sets"], true);
}

#[test]
fn analyze_four_cycle() {
    let dir = TempDir::new().unwrap();
    let input = write(
        dir.path(),
        "h.json",
        r#"{"n":4,"m":2,"edges":[[1,2],[2,3],[3,4],[4,1]]}"#,
    );
    let out = stdout_json(&run(&["analyze", "--input", input.to_str().unwrap()]));
    assert!(embedded(&out["profile"]).is_empty());
    assert_eq!(out["summary"]["bipartite"], true);
    assert_eq!(out["summary"]["agreement"]["graph_criterion"], true);
    assert_eq!(out["summary"]["agreement"]["bipartite_three_way"], true);
}

#[test]
fn analyze_is_byte_identical_across_runs_and_thread_counts() {
    let dir = TempDir::new().unwrap();
    let input = write_hypergraph(dir.path(), "h.json", &construct_t2(9).unwrap());
    let outputs: Vec<Vec<u8>> = ["1", "4", "1", "8"]
        .iter()
        .map(|threads| {
            let out = bin()
                .args(["analyze", "--input", &input])
                .env("RAYON_NUM_THREADS", threads)
                .output()
                .unwrap();
            assert!(out.status.success());
            out.stdout
        })
        .collect();
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn analyze_reads_stdin() {
    let mut child = bin()
        .args(["analyze", "--input", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    use std::io::Write;
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"n":3,"m":2,"edges":[[1,2],[2,3],[1,3]]}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    let value = stdout_json(&out);
    assert_eq!(embedded(&value["profile"]), vec![vec![1, 2, 3]]);
}

#[test]
fn input_errors_exit_1() {
    let dir = TempDir::new().unwrap();
    let malformed = write(dir.path(), "bad.json", "{not json");
    let invalid = write(
        dir.path(),
        "invalid.json",
        r#"{"n":3,"m":2,"edges":[[1,2,3]]}"#,
    );
    for path in [&malformed, &invalid, &dir.path().join("missing.json")] {
        let out = run(&["analyze", "--input", path.to_str().unwrap()]);
        assert_eq!(
            out.status.code(),
            Some(1),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    assert_eq!(run(&["analyze"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn guard_exceeded_exits_3() {
    let dir = TempDir::new().unwrap();
    let input = write_hypergraph(dir.path(), "h.json", &construct_t2(17).unwrap());
    assert_eq!(run(&["analyze", "--input", &input]).status.code(), Some(3));
    let small = write_hypergraph(dir.path(), "s.json", &construct_t2(6).unwrap());
    let out = run(&["analyze", "--input", &small, "--max-space", "10"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("WARNING"));
}

#[test]
fn raised_guard_warns_and_runs() {
    let dir = TempDir::new().unwrap();
    let input = write_hypergraph(dir.path(), "h.json", &construct_t2(6).unwrap());
    let out = run(&["analyze", "--input", &input, "--max-space", "20000000"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("WARNING"));
}

#[test]
fn oracle_cube_of_complete_graph() {
    let k5 = stdout_json(&run(&[
        "construct",
        "--family",
        "complete",
        "--n",
        "5",
        "--m",
        "2",
    ]));
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "k5.json", &k5.to_string());
    let input = input.to_str().unwrap();
    let primes = |k: &str| {
        let out = stdout_json(&run(&["oracle", "--input", input, "--power", k]));
        let mut all = sets(&out["profile"]["minimal"]);
        all.extend(embedded(&out["profile"]));
        all
    };
    let (square, cube) = (primes("2"), primes("3"));
    assert!(square.iter().all(|p| cube.contains(p)));
    assert!(cube.len() > square.len());
}

#[test]
fn oracle_ordinary_versus_symbolic() {
    let dir = TempDir::new().unwrap();
    let c4 = write(
        dir.path(),
        "c4.json",
        r#"{"n":4,"m":2,"edges":[[1,2],[2,3],[3,4],[4,1]]}"#,
    );
    let out = stdout_json(&run(&[
        "oracle",
        "--input",
        c4.to_str().unwrap(),
        "--power",
        "2",
    ]));
    assert_eq!(out["ordinary_equals_symbolic"], true);
    let eq2 = write_hypergraph(dir.path(), "eq2.json", &construct_t2(6).unwrap());
    let out = stdout_json(&run(&["oracle", "--input", &eq2, "--power", "2"]));
    assert_eq!(out["ordinary_equals_symbolic"], false);
    assert_eq!(embedded(&out["profile"]), vec![vec![1, 2, 3, 4, 5, 6]]);
    // A larger exponent box finds the same primes.
    let wide = stdout_json(&run(&[
        "oracle",
        "--input",
        &eq2,
        "--power",
        "2",
        "--expbound",
        "3",
    ]));
    assert_eq!(embedded(&wide["profile"]), vec![vec![1, 2, 3, 4, 5, 6]]);
}

#[test]
fn oracle_on_ideal_input() {
    let dir = TempDir::new().unwrap();
    let ideal = write(dir.path(), "i.json", r#"{"n":1,"generators":[[2]]}"#);
    let out = stdout_json(&run(&["oracle", "--input", ideal.to_str().unwrap()]));
    assert_eq!(
        out["primes"],
        serde_json::json!([{"prime": [1], "witness": [1]}])
    );
    let other = write(dir.path(), "x.json", r#"{"foo": 1}"#);
    assert_eq!(
        run(&["oracle", "--input", other.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&[
            "oracle",
            "--input",
            ideal.to_str().unwrap(),
            "--expbound",
            "1"
        ])
        .status
        .code(),
        Some(1)
    );
}

fn difftest_lines(args: &[&str]) -> Vec<Value> {
    let out = run(args);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn difftest_three_uniform_corpus() {
    let lines = difftest_lines(&[
        "difftest", "--trials", "200", "--n", "7", "--m", "3", "--seed", "1",
    ]);
    assert_eq!(lines.len(), 200);
    assert!(lines
        .iter()
        .all(|l| l["passed"] == true && l["hypergraph"]["m"] == 3));
}

#[test]
fn difftest_graph_corpus() {
    let lines = difftest_lines(&[
        "difftest", "--trials", "200", "--n", "8", "--m", "2", "--edges", "28", "--seed", "1",
    ]);
    assert_eq!(lines.len(), 200);
    for l in &lines {
        assert_eq!(l["passed"], true);
        let names: Vec<&str> = l["checks"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| c["name"].as_str().unwrap())
            .collect();
        assert!(names.contains(&"graph_criterion"));
    }
}

#[test]
fn difftest_complete_graph() {
    let lines = difftest_lines(&["difftest", "--family", "complete", "--n", "5", "--m", "2"]);
    assert_eq!(lines.len(), 1);
    assert_eq!(lines[0]["passed"], true);
    // Every triangle of K5 is an induced odd cycle.
    assert_eq!(lines[0]["embedded"].as_array().unwrap().len(), 10);
}

#[test]
fn difftest_is_reproducible() {
    let a = run(&["difftest", "--trials", "20", "--seed", "7"]);
    let b = run(&["difftest", "--trials", "20", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(run(&["difftest", "--trials", "0"]).status.code(), Some(1));
}

#[test]
fn export_scripts() {
    let dir = TempDir::new().unwrap();
    let eq2 = write_hypergraph(dir.path(), "eq2.json", &construct_t2(6).unwrap());
    let out = run(&["export", "--input", &eq2]);
    let script = String::from_utf8(out.stdout).unwrap();
    assert!(script.contains("R = QQ[x_1..x_6];"));
    assert!(script.contains("I = monomialIdeal(x_1*x_2*x_3, x_1*x_5*x_6, x_3*x_4*x_5);"));

    let single = write(
        dir.path(),
        "single.json",
        r#"{"n":3,"m":3,"edges":[[1,2,3]]}"#,
    );
    let out_path = dir.path().join("single.m2");
    assert!(run(&[
        "export",
        "--input",
        single.to_str().unwrap(),
        "--output",
        out_path.to_str().unwrap()
    ])
    .status
    .success());
    assert!(fs::read_to_string(&out_path)
        .unwrap()
        .contains("monomialIdeal(x_1*x_2*x_3);"));

    let nine = write_hypergraph(dir.path(), "nine.json", &third_power_gap_example());
    let script =
        String::from_utf8(run(&["export", "--input", &nine, "--power", "3"]).stdout).unwrap();
    let ideal_line = script.lines().find(|l| l.starts_with("I = ")).unwrap();
    assert_eq!(ideal_line.matches('*').count(), 20);
    assert_eq!(ideal_line.matches(", ").count(), 9);
    assert!(script.contains("J = (dual I)^3;"));
}
