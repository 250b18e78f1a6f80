use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture_file() -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/data/system_s.json")
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_compdeps"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn validate_fixture() {
    let o = run(&["validate", &fixture_file()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 14);
    assert!(text.lines().all(|l| l.ends_with(": holds")));
}

#[test]
fn validate_reports_violations() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"components":{"A":{},"B":{"var":["v"]}},"levels":{"L":["A"]}}"#,
    )
    .unwrap();
    let o = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("all_components_used: violated\n  - B: B belongs to no level\n"));
    let o = run(&["--json", "validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["all_components_used"]["holds"], false);
    assert_eq!(v["all_components_used"]["witnesses"][0]["entities"][0], "B");
}

#[test]
fn sources_variants() {
    let f = fixture_file();
    let q = |extra: &[&str]| {
        let mut args = vec![
            "sources",
            f.as_str(),
            "--level",
            "level0",
            "--component",
            "sA8",
        ];
        args.extend_from_slice(extra);
        let o = run(&args);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        stdout(&o)
    };
    assert_eq!(q(&[]), "sA6 sA7 sA8 sA9\n");
    assert_eq!(q(&["--direct"]), "sA7 sA9\n");
    assert_eq!(q(&["--dacc"]), "sA9\n");
    assert_eq!(q(&["--acc"]), "sA8 sA9\n");
    assert_eq!(
        q(&["--json"]),
        "[\n  \"sA6\",\n  \"sA7\",\n  \"sA8\",\n  \"sA9\"\n]\n"
    );
    let o = run(&[
        "sources",
        &f,
        "--level",
        "level0",
        "--component",
        "sA1",
        "--direct",
        "--acc",
    ]);
    assert_eq!(o.status.code(), Some(64));
}

#[test]
fn sources_of_component_off_level_is_empty() {
    let o = run(&[
        "sources",
        &fixture_file(),
        "--level",
        "level0",
        "--component",
        "sS1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "\n");
}

#[test]
fn slice_exit_codes() {
    let f = fixture_file();
    let o = run(&[
        "slice",
        &f,
        "--level",
        "level2",
        "--channels",
        "data10,data13",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let text = stdout(&o);
    assert!(text.contains("min components: sS1\n"));
    assert!(text.contains("no irrelevant channels: false\n"));
    assert!(text.contains("all needed input channels: false\n"));

    let o = run(&[
        "--json",
        "slice",
        &f,
        "--level",
        "level2",
        "--channels",
        "data1,data12",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(
        v["min_components"],
        serde_json::json!(["sS2", "sS4", "sS5", "sS6"])
    );
    assert_eq!(v["system_inputs_in_property"], serde_json::json!(["data1"]));

    let o = run(&["slice", &f, "--level", "level2", "--channels", "data1,nope"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("unknown channel `nope`"));
}

#[test]
fn elementary_and_classify() {
    let f = fixture_file();
    let o = run(&["elementary", &f, "--level", "level0"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("sA5: true\n") && text.contains("sA1: false\n"));
    assert_eq!(text.lines().count(), 9);

    let o = run(&["classify", &f, "--level", "level2"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 24);
    assert!(text.contains("data1: system_in\n"));
    assert!(text.contains("data4: unused\n"));
    assert!(text.contains("data2: local\n"));
    assert!(text.contains("data9: system_out\n"));
}

#[test]
fn chan_deps() {
    let f = fixture_file();
    let o = run(&["chan-deps", &f, "--channel", "data23"]);
    assert_eq!(stdout(&o), "data21\n");
    let o = run(&["chan-deps", &f, "--channel", "data23", "--transitive"]);
    assert_eq!(stdout(&o), "data14 data16 data18 data19 data21\n");
}

#[test]
fn partitions() {
    let f = fixture_file();
    let o = run(&["condense", &f, "--level", "level1"]);
    let text = stdout(&o);
    assert!(text.contains("sA22 sA31 sA41 [high_perf]\n"));
    assert!(text.contains("sA81 sA91\n"));
    assert_eq!(text.lines().count(), 15);

    let o = run(&["optimize", &f, "--level", "level2"]);
    let text = stdout(&o);
    assert!(text.starts_with("sS1 sS2\n"));
    assert!(text.contains("sS4 sS5 sS6 [high_perf]\n"));
    assert!(text.contains("sS11 sS14 sS15 [high_perf]\n"));

    let o = run(&["--json", "optimize", &f, "--level", "level2"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["source_level"], "level2");
    assert_eq!(v["groups"].as_array().unwrap().len(), 9);
}

#[test]
fn check_refinement() {
    let f = fixture_file();
    let o = run(&[
        "check-refinement",
        &f,
        "--fine",
        "level2",
        "--coarse",
        "level3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("sS5 -> sS4opt\n"));
    let o = run(&[
        "check-refinement",
        &f,
        "--fine",
        "level0",
        "--coarse",
        "level2",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn export_dot_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("l0.dot");
    let o = run(&[
        "export-dot",
        &fixture_file(),
        "--level",
        "level0",
        "-o",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let dot = std::fs::read_to_string(&out).unwrap();
    assert!(dot.starts_with("digraph level0 {\n"));
    assert!(dot.contains("sA4 -> sA5 [label=\"data8\",penwidth=3,color=red];"));
}

#[test]
fn fixture_output_is_the_bundled_file() {
    let o = run(&["fixture"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), std::fs::read_to_string(fixture_file()).unwrap());
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.json");
    run(&["fixture", "-o", out.to_str().unwrap()]);
    assert_eq!(std::fs::read(&out).unwrap(), o.stdout);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let f = fixture_file();
    for args in [
        vec!["--json", "validate", f.as_str()],
        vec!["--json", "classify", f.as_str(), "--level", "level1"],
        vec!["export-dot", f.as_str(), "--level", "level2"],
    ] {
        assert_eq!(run(&args).stdout, run(&args).stdout);
    }
}

#[test]
fn model_errors_exit_1() {
    let f = fixture_file();
    let o = run(&["elementary", &f, "--level", "level9"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("unknown level `level9`"));
    let o = run(&["sources", &f, "--level", "level0", "--component", "zz"]);
    assert_eq!(o.status.code(), Some(1));

    let o = run(&["validate", "/nonexistent/system.json"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("cannot read"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{\n  \"components\": [\n").unwrap();
    let o = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("syntax error at line"));

    std::fs::write(&path, r#"{"components":{"A":{"subcomp":["A"]}}}"#).unwrap();
    let o = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("subcomponent cycle: A -> A"));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(run(&[]).status.code(), Some(64));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(
        run(&["slice", &fixture_file(), "--level", "level2"])
            .status
            .code(),
        Some(64)
    );
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}
