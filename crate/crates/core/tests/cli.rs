use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn heis_mu(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heis-mu"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.display().to_string()
}

#[test]
fn mu_examples() {
    let out = heis_mu(&["mu", "-m", "1", "-p", "t^2+1"]);
    assert!(out.status.success());
    let r = report(&out);
    assert_eq!(r["command"], "mu");
    assert_eq!(r["results"]["mu"], 5);
    assert_eq!(
        (r["results"]["a"].clone(), r["results"]["b"].clone()),
        (1.into(), 2.into())
    );
    assert_eq!(r["results"]["dim"], 6);

    assert_eq!(
        report(&heis_mu(&["mu", "-m", "2", "-p", "t"]))["results"]["mu"],
        4
    );
    assert_eq!(
        report(&heis_mu(&["mu", "-m", "1", "-p", "t^6"]))["results"]["mu"],
        11
    );
}

#[test]
fn mu_rejects_bad_polynomials() {
    let out = heis_mu(&["mu", "-m", "1", "-p", "3t"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 1"));
    assert!(out.stdout.is_empty());

    let out = heis_mu(&["mu", "-m", "1", "-p", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_are_deterministic() {
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    let a = strip(report(&heis_mu(&["construct", "-m", "2", "-p", "t^3-2"])));
    let b = strip(report(&heis_mu(&["construct", "-m", "2", "-p", "t^3-2"])));
    assert_eq!(a, b);
}

#[test]
fn construct_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rep.json").display().to_string();
    let out = heis_mu(&["construct", "-m", "1", "-p", "t^2+1", "--out", &path]);
    assert!(out.status.success());
    let r = report(&out);
    assert_eq!(r["results"]["degree"], 5);
    assert_eq!(r["results"]["faithful"], true);

    let out = heis_mu(&["verify", &path]);
    assert!(out.status.success());
    let r = report(&out);
    assert_eq!(r["results"]["homomorphism"], true);
    assert_eq!(r["results"]["faithful"], true);
}

#[test]
fn construct_non_faithful_pair() {
    let out = heis_mu(&["construct", "-m", "1", "-p", "t^2", "-a", "1", "-b", "1"]);
    assert!(out.status.success());
    let r = report(&out);
    assert_eq!(r["results"]["degree"], 4);
    assert_eq!(r["results"]["faithful"], false);
}

#[test]
fn construct_over_t_matches_pi0() {
    let out = heis_mu(&["construct", "-m", "1", "-p", "t"]);
    let r = report(&out);
    assert_eq!(r["results"]["degree"], 3);
    let images = r["results"]["representation"]["images"].as_array().unwrap();
    let entries: Vec<&Value> = images.iter().map(|m| &m["entries"]).collect();
    // X -> E12, Y -> E23, Z -> E13
    assert_eq!(entries[0], &serde_json::json!([0, 1, 0, 0, 0, 0, 0, 0, 0]));
    assert_eq!(entries[1], &serde_json::json!([0, 0, 0, 0, 0, 1, 0, 0, 0]));
    assert_eq!(entries[2], &serde_json::json!([0, 0, 1, 0, 0, 0, 0, 0, 0]));
}

#[test]
fn construct_reports_unwritable_path() {
    let out = heis_mu(&[
        "construct",
        "-m",
        "1",
        "-p",
        "t",
        "--out",
        "/nonexistent-dir/rep.json",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("/nonexistent-dir/rep.json"));
}

fn h1_current_t2_plus_1() -> String {
    let out = heis_mu(&["lie", "build", "-m", "1", "-p", "t^2+1"]);
    assert!(out.status.success());
    report(&out)["results"]["algebra"].to_string()
}

fn r5_file(zero_z: bool) -> String {
    let e = |i: usize, j: usize, s: i64| {
        let mut v = vec![0i64; 25];
        v[(i - 1) * 5 + (j - 1)] = s;
        v
    };
    let add = |a: Vec<i64>, b: Vec<i64>| a.iter().zip(&b).map(|(x, y)| x + y).collect::<Vec<_>>();
    let mut images = [
        e(1, 2, 1),
        e(1, 3, 1),
        add(e(2, 4, 1), e(3, 5, 1)),
        add(e(2, 5, 1), e(3, 4, -1)),
        e(1, 4, 1),
        e(1, 5, 1),
    ];
    if zero_z {
        images[4] = vec![0; 25];
        images[5] = vec![0; 25];
    }
    let images: Vec<String> = images
        .iter()
        .map(|v| format!(r#"{{"rows":5,"cols":5,"entries":{v:?}}}"#))
        .collect();
    format!(
        r#"{{"algebra":{},"degree":5,"images":[{}]}}"#,
        h1_current_t2_plus_1(),
        images.join(",")
    )
}

#[test]
fn verify_hand_encoded_example() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(dir.path(), "r5.json", &r5_file(false));
    let out = heis_mu(&["verify", &good]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(report(&out)["results"]["faithful"], true);

    let bad = write(dir.path(), "r5-zero.json", &r5_file(true));
    let out = heis_mu(&["verify", &bad]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(report(&out)["results"]["homomorphism"], false);
}

#[test]
fn verify_rejects_malformed_input() {
    let dir = tempfile::tempdir().unwrap();
    let empty = write(
        dir.path(),
        "empty.json",
        r#"{"algebra":{"dim":0,"labels":[],"structure":[]},"degree":0,"images":[]}"#,
    );
    let out = heis_mu(&["verify", &empty]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("malformed JSON"));

    let garbage = write(dir.path(), "garbage.json", "{not json");
    assert_eq!(heis_mu(&["verify", &garbage]).status.code(), Some(2));

    let missing = dir.path().join("missing.json").display().to_string();
    let out = heis_mu(&["verify", &missing]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing.json"));
}

#[test]
fn jordan_unipotent() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(
        dir.path(),
        "m.json",
        r#"{"rows":2,"cols":2,"entries":[1,1,0,1]}"#,
    );
    let out = heis_mu(&["jordan", &path]);
    assert!(out.status.success());
    let r = report(&out);
    assert_eq!(
        r["results"]["S"]["entries"],
        serde_json::json!([1, 0, 0, 1])
    );
    assert_eq!(
        r["results"]["N"]["entries"],
        serde_json::json!([0, 1, 0, 0])
    );
}

#[test]
fn schur_single_block() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(
        dir.path(),
        "family.json",
        r#"{"space_dim":3,"basis":[
            {"rows":3,"cols":3,"entries":[0,0,1,0,0,0,0,0,0]},
            {"rows":3,"cols":3,"entries":[0,0,0,0,0,1,0,0,0]}]}"#,
    );
    let out = heis_mu(&["schur", &path]);
    assert!(out.status.success());
    let r = report(&out);
    assert_eq!(r["results"]["s"], 1);
    assert_eq!(r["results"]["block_dims"], serde_json::json!([2]));
    assert_eq!(r["results"]["verified"], true);
}

#[test]
fn schur_rejects_non_commuting_family() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(
        dir.path(),
        "family.json",
        r#"{"space_dim":3,"basis":[
            {"rows":3,"cols":3,"entries":[0,1,0,0,0,0,0,0,0]},
            {"rows":3,"cols":3,"entries":[0,0,0,0,0,1,0,0,0]}]}"#,
    );
    let out = heis_mu(&["schur", &path]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("do not commute"));
}

#[test]
fn lie_build_direct_sum() {
    let out = heis_mu(&["lie", "build", "-m", "1", "-p", "t^2", "-p", "t"]);
    assert!(out.status.success());
    let r = report(&out);
    assert_eq!(r["results"]["dim"], 9);
    assert_eq!(r["results"]["center_dim"], 3);
    assert_eq!(r["results"]["derived_dim"], 3);
}

#[test]
fn quick_suite_passes() {
    let out = heis_mu(&["suite", "--quick"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let r = report(&out);
    assert_eq!(r["results"]["passed"], true);
    assert_eq!(r["results"]["criteria"].as_array().unwrap().len(), 9);
}
