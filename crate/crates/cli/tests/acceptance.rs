//! CLI acceptance: output determinism across repeated runs and thread
//! counts, plus exit-code and format contracts.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_ratpoly")
}

fn run(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .output()
        .expect("failed to spawn ratpoly")
}

fn enumerate_to(dir: &Path, name: &str, extra: &[&str]) -> PathBuf {
    let out = dir.join(name);
    let mut args = vec!["enumerate"];
    args.extend_from_slice(extra);
    args.push("--out");
    let out_str = out.to_str().unwrap().to_string();
    args.push(&out_str);
    let res = run(&args);
    assert!(
        res.status.success(),
        "enumerate {extra:?} failed: {}",
        String::from_utf8_lossy(&res.stderr)
    );
    out
}

#[test]
fn acceptance_criterion_8_byte_determinism() {
    let dir = tempfile::tempdir().unwrap();
    // All of criterion 1's classification commands, run twice with
    // different thread counts; outputs must be byte-identical.
    let commands: &[&[&str]] = &[
        &["-r", "1", "-k", "3"],
        &["-r", "1", "-k", "4"],
        &["-r", "1", "-k", "5"],
        &["-r", "2", "-k", "0"],
        &["-r", "2", "-k", "1"],
        &["-r", "2", "-k", "2"],
        &["-r", "2", "-k", "3"],
        &["-r", "2", "-k", "4"],
        &["-r", "3", "-k", "0"],
    ];
    for (i, base) in commands.iter().enumerate() {
        let mut single = base.to_vec();
        single.extend_from_slice(&["--threads", "1"]);
        let mut multi = base.to_vec();
        multi.extend_from_slice(&["--threads", "4"]);
        let a = enumerate_to(dir.path(), &format!("a{i}.jsonl"), &single);
        let b = enumerate_to(dir.path(), &format!("b{i}.jsonl"), &multi);
        let bytes_a = fs::read(&a).unwrap();
        let bytes_b = fs::read(&b).unwrap();
        assert!(!bytes_a.is_empty());
        assert_eq!(bytes_a, bytes_b, "outputs differ for {base:?}");
    }
    // A same-configuration repeat is also identical.
    let a = enumerate_to(dir.path(), "rep1.jsonl", &["-r", "2", "-k", "1"]);
    let b = enumerate_to(dir.path(), "rep2.jsonl", &["-r", "2", "-k", "1"]);
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());

    println!("acceptance criterion 8 (byte-identical outputs across runs and thread counts): PASS");
}

#[test]
fn manifest_total_matches_line_count() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d.jsonl");
    let res = run(&[
        "enumerate", "-r", "2", "-k", "1", "--out",
        out.to_str().unwrap(),
    ]);
    assert!(res.status.success());
    let manifest: serde_json::Value =
        serde_json::from_slice(&res.stderr).expect("manifest on stderr");
    let lines = fs::read_to_string(&out).unwrap().lines().count();
    assert_eq!(manifest["total"].as_u64().unwrap(), lines as u64);
    assert_eq!(lines, 106);
}

#[test]
fn zero_interior_pipeline_matches_published_counts() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("zi.jsonl");
    let res = run(&["enumerate", "--zero-interior", "--out", out.to_str().unwrap()]);
    assert!(res.status.success());
    let manifest: serde_json::Value = serde_json::from_slice(&res.stderr).unwrap();
    assert_eq!(manifest["total"].as_u64().unwrap(), 79);

    // verify: exactly two exceptions, exit code 0.
    let report = dir.path().join("report.txt");
    let res = run(&[
        "verify", "--in", out.to_str().unwrap(), "--report",
        report.to_str().unwrap(), "--zero-interior",
    ]);
    assert_eq!(res.status.code(), Some(0));
    let report = fs::read_to_string(&report).unwrap();
    assert!(report.contains("exceptions 2"), "report:\n{report}");
    assert!(report.contains("unconditional_violations 0"));

    // plotdata on the two spec rows.
    let res = run(&["plotdata", "--in", out.to_str().unwrap(), "--b1", "0", "--i1", "0"]);
    assert_eq!(String::from_utf8_lossy(&res.stdout), "3 3\n");
    let res = run(&["plotdata", "--in", out.to_str().unwrap(), "--b1", "6", "--i1", "0"]);
    assert_eq!(String::from_utf8_lossy(&res.stdout), "12 3\n12 4\n");
    let res = run(&["plotdata", "--in", out.to_str().unwrap(), "--b1", "9", "--i1", "9"]);
    assert_eq!(res.status.code(), Some(0));
    assert!(res.stdout.is_empty(), "no-match filter must produce an empty file");
}

#[test]
fn invalid_parameters_exit_2() {
    let res = run(&["enumerate", "-r", "1", "-k", "2"]);
    assert_eq!(res.status.code(), Some(2));
    let res = run(&["enumerate", "-r", "0", "-k", "1"]);
    assert_eq!(res.status.code(), Some(2));
    let res = run(&["enumerate"]);
    assert_eq!(res.status.code(), Some(2));
}

#[test]
fn malformed_records_exit_2_with_line_number() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.jsonl");
    fs::write(&bad, "{\"r\":2,\"verts\":[[0,0],[1,0],[0,1]]}\n{broken\n").unwrap();
    for cmd in ["ehrhart", "normal-form", "verify"] {
        let mut args = vec![cmd, "--in", bad.to_str().unwrap()];
        if cmd == "ehrhart" {
            args.extend_from_slice(&["--tuples", "-"]);
        }
        let res = run(&args);
        assert_eq!(res.status.code(), Some(2), "{cmd} should exit 2");
        assert!(
            String::from_utf8_lossy(&res.stderr).contains("line 2"),
            "{cmd} should report the line number"
        );
    }
}

#[test]
fn ehrhart_csv_formats() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.jsonl");
    // T_{2,1} and the half square.
    fs::write(
        &input,
        "{\"r\":2,\"verts\":[[0,0],[1,0],[0,1]]}\n{\"r\":2,\"verts\":[[0,0],[1,0],[1,1],[0,1]]}\n",
    )
    .unwrap();
    let tuples = dir.path().join("t.csv");
    let quasi = dir.path().join("q.csv");
    let res = run(&[
        "ehrhart", "--in", input.to_str().unwrap(),
        "--tuples", tuples.to_str().unwrap(),
        "--quasi", quasi.to_str().unwrap(),
    ]);
    assert!(res.status.success());
    let tuples = fs::read_to_string(&tuples).unwrap();
    let lines: Vec<&str> = tuples.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].ends_with(",1,0,3,0"), "T_{{2,1}} row: {}", lines[0]);
    assert!(lines[1].ends_with(",1,0,4,0"));
    let quasi = fs::read_to_string(&quasi).unwrap();
    // Both residues of the half square have a2 = 1/4.
    let half_square_rows: Vec<&str> = quasi
        .lines()
        .filter(|l| l.split(',').nth(2) == Some("1/4"))
        .collect();
    assert_eq!(half_square_rows.len(), 2, "quasi rows:\n{quasi}");

    // Empty input gives empty outputs and exit 0.
    let empty = dir.path().join("empty.jsonl");
    fs::write(&empty, "").unwrap();
    let t2 = dir.path().join("t2.csv");
    let res = run(&["ehrhart", "--in", empty.to_str().unwrap(), "--tuples", t2.to_str().unwrap()]);
    assert_eq!(res.status.code(), Some(0));
    assert!(fs::read(&t2).unwrap().is_empty());
}

#[test]
fn normal_form_identifies_equivalent_polygons() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.jsonl");
    // The unit triangle and a unimodular image of it.
    fs::write(
        &input,
        "{\"r\":1,\"verts\":[[0,0],[1,0],[0,1]]}\n{\"r\":1,\"verts\":[[5,2],[6,3],[5,3]]}\n",
    )
    .unwrap();
    let res = run(&["normal-form", "--in", input.to_str().unwrap()]);
    assert!(res.status.success());
    let out = String::from_utf8_lossy(&res.stdout);
    let keys: Vec<&str> = out.lines().collect();
    assert_eq!(keys.len(), 2);
    assert_eq!(keys[0], keys[1]);
}
