use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("data");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn quadsemi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quadsemi"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn check_exit_codes_partition_outcomes() {
    let ok = quadsemi(&["check", &data("motivating_q13.json")]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json(&ok)["verdict"], "irreducible");

    let red = quadsemi(&["check", &data("no_linear_pair_p7.json")]);
    assert_eq!(red.status.code(), Some(1));
    let v = json(&red);
    assert_eq!(v["verdict"], "reducible");
    assert_eq!(v["witness"], serde_json::json!([0, 1]));
    assert_eq!(v["d_s"], serde_json::json!([2, 4]));

    let err = quadsemi(&["check", &data("even_characteristic.json")]);
    assert_eq!(err.status.code(), Some(2));
    assert!(err.stdout.is_empty());
    assert!(String::from_utf8_lossy(&err.stderr).contains("even characteristic"));

    let missing = quadsemi(&["check", "/nonexistent/input.json"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn stdin_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_quadsemi"))
        .args(["check", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(std::fs::read(data("sharpness_p7.json")).unwrap().as_slice())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["reach_nodes"], serde_json::json!([3, 6]));
}

#[test]
fn dot_matches_sharpness_figure() {
    let out = quadsemi(&["dot", &data("sharpness_p7.json")]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut edges: Vec<&str> = text
        .lines()
        .filter(|l| l.contains("->"))
        .map(str::trim)
        .collect();
    edges.sort_unstable();
    assert_eq!(
        edges,
        vec![
            "\"2\" -> \"3\" [label=\"f\"];",
            "\"2\" -> \"6\" [label=\"g\"];",
            "\"3\" -> \"3\" [label=\"g\"];",
            "\"3\" -> \"6\" [label=\"f\"];",
            "\"6\" -> \"6\" [label=\"f\"];",
            "\"6\" -> \"6\" [label=\"g\"];",
        ]
    );
    assert!(text.contains("\"2\" [shape=doublecircle"));
}

#[test]
fn words_report() {
    let out = quadsemi(&["words", "--depth", "4", &data("motivating_q13.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["depth"], 4);
    assert_eq!(v["words"], 30);
    assert_eq!(v["mismatches"], serde_json::json!([]));
    assert_eq!(
        v["irreducible_per_length"],
        serde_json::json!({"1": 2, "2": 4, "3": 8, "4": 16})
    );
}

#[test]
fn verify_statements() {
    let out = quadsemi(&["verify", "--lemma-7mod8", "7"]);
    assert_eq!(
        (out.status.code(), out.stdout.as_slice()),
        (Some(0), &b"true\n"[..])
    );
    let out = quadsemi(&["verify", "--prop-3mod4", "11"]);
    assert_eq!(
        (out.status.code(), out.stdout.as_slice()),
        (Some(0), &b"true\n"[..])
    );
    let out = quadsemi(&["verify", "--lemma-7mod8", "13"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("congruent to 7 mod 8"));
    let out = quadsemi(&["verify", "--example-family", "7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("congruent to 1 mod 4"));
}

#[test]
fn outputs_byte_identical_across_runs_and_workers() {
    let cases: Vec<Vec<String>> = vec![
        vec!["check".into(), data("no_linear_pair_p7.json")],
        vec!["dot".into(), data("motivating_q13.json")],
        vec![
            "words".into(),
            "--depth".into(),
            "3".into(),
            data("sharpness_p7.json"),
        ],
        vec![
            "census".into(),
            "--p".into(),
            "7".into(),
            "--format".into(),
            "json".into(),
        ],
        vec![
            "census".into(),
            "--p".into(),
            "3".into(),
            "--e".into(),
            "2".into(),
            "--limit".into(),
            "50".into(),
        ],
    ];
    for args in cases {
        let mut outputs = Vec::new();
        for threads in ["1", "3", "8"] {
            let out = Command::new(env!("CARGO_BIN_EXE_quadsemi"))
                .args(&args)
                .env("RAYON_NUM_THREADS", threads)
                .output()
                .unwrap();
            outputs.push((out.status.code(), out.stdout));
        }
        assert!(outputs.windows(2).all(|w| w[0] == w[1]), "{args:?}");
    }
}

#[test]
fn census_tsv_header_and_limit() {
    let out = quadsemi(&[
        "census",
        "--p",
        "13",
        "--limit",
        "5",
        "--filter",
        "irreducible",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(
        lines[0],
        "q\ta1\tb1\ta2\tb2\tverdict\twitness_len\treach_size"
    );
    assert!(lines[1].starts_with("13\t0\t"));
}
