use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn toric(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toric"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn f3_workspace() -> TempDir {
    let dir = tempfile::tempdir().unwrap();
    let out = toric(dir.path(), &["gen", "hirzebruch", "3", "-o", "f3.json"]);
    assert_eq!(out.status.code(), Some(0));
    let write = |name: &str, body: &str| fs::write(dir.path().join(name), body).unwrap();
    write(
        "p3.json",
        r#"{"fan": "f3.json", "alpha": [0, 0, 2, 3], "mults": {"3": 5}}"#,
    );
    write(
        "p4.json",
        r#"{"fan": "f3.json", "alpha": [0, 0, 2, 3], "mults": {"0": 2, "3": 3}}"#,
    );
    write(
        "plain.json",
        r#"{"fan": "f3.json", "alpha": [0, 0, 2, 3], "mults": {}}"#,
    );
    write("nef.json", r#"{"fan": "f3.json", "alpha": [0, 0, 0, 1]}"#);
    dir
}

#[test]
fn gen_hirzebruch_matches_the_constructor() {
    let dir = f3_workspace();
    let text = fs::read_to_string(dir.path().join("f3.json")).unwrap();
    let fan: toric_core::Fan = serde_json::from_str(&text).unwrap();
    assert_eq!(fan, toric_core::Fan::hirzebruch(3));
}

#[test]
fn gen_random_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["gen", "random2d", "--seed", "7", "--steps", "4"];
    let a = toric(dir.path(), &args);
    let b = toric(dir.path(), &args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let fan: toric_core::Fan = serde_json::from_slice(&a.stdout).unwrap();
    assert!(fan.validate().passed());
    assert!(
        toric(dir.path(), &["gen", "random2d", "--steps", "13"])
            .status
            .code()
            == Some(2)
    );
}

#[test]
fn gen_blowup_and_product() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(
        toric(dir.path(), &["gen", "p2", "-o", "p2.json"])
            .status
            .code(),
        Some(0)
    );
    let out = toric(dir.path(), &["gen", "blowup", "p2.json", "0"]);
    let fan: toric_core::Fan = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!((fan.num_rays(), fan.num_cones()), (4, 4));
    let out = toric(dir.path(), &["gen", "product", "p2.json", "p2.json"]);
    let fan: toric_core::Fan = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!((fan.dim(), fan.num_cones()), (4, 9));
}

#[test]
fn special_exit_codes() {
    let dir = f3_workspace();
    let out = toric(dir.path(), &["special", "--json", "p3.json"]);
    assert_eq!(out.status.code(), Some(3));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["h1"], 1);
    assert_eq!(report["virtual_dim"], 14);
    assert_eq!(report["special"], true);

    let out = toric(dir.path(), &["special", "--json", "p4.json"]);
    assert_eq!(out.status.code(), Some(3));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["witnesses"][0]["value"], -2);
    assert_eq!(report["witnesses"][0]["wall"]["cone_a"], 0);
    assert_eq!(report["witnesses"][0]["wall"]["cone_b"], 3);

    let out = toric(dir.path(), &["special", "plain.json"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn input_errors_exit_two() {
    let dir = f3_workspace();
    let out = toric(dir.path(), &["special", "nef.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("divisor not ample"));
    assert_eq!(
        toric(dir.path(), &["special", "missing.json"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(toric(dir.path(), &["frobnicate"]).status.code(), Some(2));
}

#[test]
fn strict_marked_violation_exits_four() {
    let dir = f3_workspace();
    fs::write(
        dir.path().join("single.json"),
        r#"{"fan": "f3.json", "alpha": [0, 0, 2, 3], "mults": {"0": 4}}"#,
    )
    .unwrap();
    assert_eq!(
        toric(dir.path(), &["special", "single.json"]).status.code(),
        Some(3)
    );
    let out = toric(dir.path(), &["special", "--strict-marked", "single.json"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn dim_and_dump() {
    let dir = f3_workspace();
    let out = toric(dir.path(), &["dim", "--json", "p4.json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        (v["virtual_dim"].as_i64(), v["effective_dim"].as_i64()),
        (Some(20), Some(21))
    );
    let out = toric(dir.path(), &["dim", "--dump", "plain.json"]);
    let lines: Vec<String> = stdout(&out).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 30);
    assert_eq!(lines[0], "0 0");
    assert_eq!(lines[29], "11 3");
}

#[test]
fn witness_lists_walls() {
    let dir = f3_workspace();
    let out = toric(dir.path(), &["witness", "--json", "p3.json"]);
    let ws: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(ws.as_array().unwrap().len(), 1);
    let out = toric(dir.path(), &["witness", "plain.json"]);
    assert!(stdout(&out).contains("no wall"));
}

#[test]
fn lemma2_checks() {
    let dir = f3_workspace();
    let out = toric(
        dir.path(),
        &["check-lemma2", "f3.json", "--trials", "50", "--seed", "1"],
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("200 walls checked, 0 failures"));
    assert_eq!(
        toric(dir.path(), &["gen", "hirzebruch", "0", "-o", "f0.json"])
            .status
            .code(),
        Some(0)
    );
    let out = toric(dir.path(), &["check-lemma2", "f0.json", "--trials", "50"]);
    assert_eq!(out.status.code(), Some(0));
    let out = toric(
        dir.path(),
        &["check-lemma2", "f0.json", "--trials", "10001"],
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn fuzz_reports_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "fuzz", "--json", "--dims", "2", "--trials", "60", "--seed", "11",
    ];
    let a = toric(dir.path(), &args);
    let b = toric(dir.path(), &args);
    assert_eq!(a.stdout, b.stdout);
    let summary: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(summary["trials"], 60);
    let violations =
        summary["missed"].as_array().unwrap().len() + summary["spurious"].as_array().unwrap().len();
    assert_eq!(a.status.code(), Some(if violations == 0 { 0 } else { 4 }));
}

#[test]
fn fuzz_violation_reproducer_replays() {
    let dir = tempfile::tempdir().unwrap();
    let out = toric(
        dir.path(),
        &[
            "fuzz", "--json", "--dims", "2", "--trials", "500", "--seed", "2024",
        ],
    );
    let summary: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let first = summary["missed"]
        .as_array()
        .unwrap()
        .first()
        .expect("seed 2024 has a miss");
    assert_eq!(out.status.code(), Some(4));
    fs::write(dir.path().join("repro.json"), first["system"].to_string()).unwrap();
    let replay = toric(dir.path(), &["special", "repro.json"]);
    assert_eq!(replay.status.code(), Some(4));
}

#[test]
fn reduce_f6_example() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("f6.json"),
        r#"{"surface": {"Fa": 6}, "r": 11, "coeffs": {"H": 4, "F": 0, "m": [3,3,3,3,3,3,3,3,3,3,3]}}"#,
    )
    .unwrap();
    let out = toric(dir.path(), &["reduce", "f6.json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("v -2 -> 0: (-1)-special"), "{text}");
    assert!(text.contains("H - 6F"));

    let out = toric(dir.path(), &["reduce", "--json", "f6.json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["trace"]["v_final"], 0);
    assert_eq!(v["trace"]["steps"].as_array().unwrap().len(), 4);

    let out = toric(dir.path(), &["reduce", "--bound", "11", "f6.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn render_circles_cut_points() {
    let dir = f3_workspace();
    let out = toric(dir.path(), &["render", "p3.json", "-o", "p3.svg"]);
    assert_eq!(out.status.code(), Some(0));
    let svg = fs::read_to_string(dir.path().join("p3.svg")).unwrap();
    assert_eq!(svg.matches(r#"class="cut""#).count(), 14);
    assert_eq!(
        svg.matches(r#"fill="none" stroke="black" stroke-width="1"/>"#)
            .count(),
        14
    );
    let out = toric(dir.path(), &["render", "p4.json"]);
    assert_eq!(stdout(&out).matches(r#"class="cut""#).count(), 8);
}

#[test]
fn render_three_dimensional_slices() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("cube.json"),
        r#"{"fan": {"dim": 3, "rays": [[1,0,0],[-1,0,0],[0,1,0],[0,-1,0],[0,0,1],[0,0,-1]],
                    "cones": [[0,2,4],[0,2,5],[0,3,4],[0,3,5],[1,2,4],[1,2,5],[1,3,4],[1,3,5]]},
            "alpha": [0,1,0,1,0,1], "mults": {"0": 2}}"#,
    )
    .unwrap();
    let out = toric(dir.path(), &["render", "cube.json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "slice\tpoints\tcut\n0\t4\t3\n1\t4\t1\n");
}

#[test]
fn survey_runs() {
    let dir = tempfile::tempdir().unwrap();
    let out = toric(
        dir.path(),
        &["survey", "--json", "--trials", "10", "--seed", "2"],
    );
    assert_eq!(out.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 10);
}
