use std::path::Path;
use std::process::{Command, Output};

use critcover::prover::{BoxStatus, CriticalReport};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_critcover")).args(args).env_remove("CRITCOVER_THREADS").output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn thresholds_at_unit_skew() {
    let o = run(&["thresholds", "--lambda", "1"]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert_eq!(v["W_star"].as_f64(), Some(0.76171875));
    assert_eq!(v["branch"], "three_equal");
    assert!((v["A_star"].as_f64().unwrap() - 2.39301).abs() < 1e-5);
    assert!((v["lambda2"].as_f64().unwrap() - 1.0357971).abs() < 1e-7);
    assert_eq!(v["lambda_bar"].as_f64(), Some((195.0 + 5257f64.sqrt()) / 128.0));
    assert_eq!(run(&["thresholds", "--lambda", "3"]).status.code(), Some(0));
    assert_eq!(stdout_json(&run(&["thresholds", "--lambda", "3"]))["branch"], "two_disk");
}

#[test]
fn decide_reports_verdict_and_exit_code() {
    let o = run(&["decide", "--lambda", "1", "--radii", "0.504,0.504,0.504"]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert_eq!(v["coverable"], true);
    assert!((v["W"].as_f64().unwrap() - 0.762048).abs() < 1e-12);
    assert!((v["margin"].as_f64().unwrap() - (0.762048 - 0.76171875)).abs() < 1e-12);

    let o = run(&["decide", "--lambda", "1", "--radii", "0.5,0.5,0.5"]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout_json(&o)["coverable"], false);
}

#[test]
fn bad_input_exits_with_two() {
    let o = run(&["decide", "--lambda", "1", "--radii", "0,1"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1, column 1"));
    assert_eq!(code(&run(&["decide", "--lambda", "0.5", "--radii", "1"])), 2);
    assert_eq!(code(&run(&["thresholds"])), 2);
    assert_eq!(code(&run(&["prove", "--mode", "other"])), 2);
    assert_eq!(code(&run(&["prove", "--lambda-range", "1.2"])), 2);
    assert_eq!(code(&run(&["prove", "--resolution", "3"])), 2);
    let o = Command::new(env!("CARGO_BIN_EXE_critcover"))
        .args(["thresholds", "--lambda", "1"])
        .env("CRITCOVER_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn cover_then_verify_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let radii = dir.path().join("radii.txt");
    std::fs::write(&radii, "0.75\n0.5, 0.45\n0.3,0.3,0.2\n0.1\n").unwrap();
    let json = dir.path().join("p.json");
    let svg = dir.path().join("p.svg");
    let o = run(&["cover", "--lambda", "1.7", "--radii", path_str(&radii), "--json", path_str(&json), "--svg", path_str(&svg)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let summary = stdout_json(&o);
    assert_eq!(summary["disks"], 7);

    let o = run(&["verify", "--placement", path_str(&json)]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["covered"], true);

    let text = std::fs::read_to_string(&svg).unwrap();
    let doc = roxmltree::Document::parse(&text).expect("well-formed svg");
    let circles = doc.descendants().filter(|n| n.has_tag_name("circle")).count();
    let rects = doc.descendants().filter(|n| n.has_tag_name("rect")).count();
    assert_eq!((circles as u64, rects), (summary["placed"].as_u64().unwrap(), 1));
}

#[test]
fn cover_writes_placement_to_stdout() {
    let o = run(&["cover", "--lambda", "1", "--radii", "0.504,0.504,0.504", "--json", "-"]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert_eq!(v["centers"].as_array().unwrap().len(), 3);
    assert_eq!(v["region"]["w"].as_f64(), Some(1.0));
    let o = run(&["cover", "--lambda", "1", "--radii", "0.504,0.504,0.504", "--json", "-", "--svg", "-"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn cover_refuses_subcritical_weight() {
    let o = run(&["cover", "--lambda", "2", "--radii", "0.5,0.5,0.5"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn verify_finds_a_hole() {
    let dir = tempfile::tempdir().unwrap();
    let full = dir.path().join("full.json");
    let o = run(&["cover", "--lambda", "1.2", "--radii", "0.6,0.5,0.4,0.3,0.2", "--json", path_str(&full)]);
    assert_eq!(code(&o), 0);
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&full).unwrap()).unwrap();
    doc["centers"].as_array_mut().unwrap().remove(0);
    let holed = dir.path().join("holed.json");
    std::fs::write(&holed, doc.to_string()).unwrap();
    let svg = dir.path().join("hole.svg");
    let o = run(&["verify", "--placement", path_str(&holed), "--svg", path_str(&svg)]);
    assert_eq!(code(&o), 1);
    let w = stdout_json(&o)["witness"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect::<Vec<_>>();
    assert!((0.0..=1.2).contains(&w[0]) && (0.0..=1.0).contains(&w[1]));
    assert!(std::fs::read_to_string(&svg).unwrap().contains("fill=\"red\""));

    std::fs::write(&holed, "{not json").unwrap();
    assert_eq!(code(&run(&["verify", "--placement", path_str(&holed)])), 2);
}

#[test]
fn prove_writes_a_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = Command::new(env!("CARGO_BIN_EXE_critcover"))
        .args(["prove", "--mode", "main", "--lambda-range", "1.5:1.52", "--k", "2"])
        .args(["--resolution", "4x16,2x4", "--generations", "2", "--out", path_str(&out)])
        .env("CRITCOVER_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let report: CriticalReport = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report.history.len(), 2);
    assert!(!report.boxes.is_empty());
    assert!(report.boxes.iter().all(|b| b.status == BoxStatus::Critical));
    // The two-disk worst case at λ = 1.51 stays critical.
    let lam: f64 = 1.51;
    assert!(report.boxes.iter().any(|b| b.contains(lam, &[(lam * lam + 1.0) / 4.0, 0.25])));
}

#[test]
fn fuzz_is_reproducible_and_clean() {
    let a = run(&["fuzz", "--count", "40", "--seed", "7", "--max-disks", "60"]);
    let b = run(&["fuzz", "--count", "40", "--seed", "7", "--max-disks", "60"]);
    assert_eq!(code(&a), 0, "{}", String::from_utf8_lossy(&a.stdout));
    assert_eq!(a.stdout, b.stdout);
    let v = stdout_json(&a);
    assert_eq!(v["covered"], 40);
    assert_eq!(v["seed"], 7);
}
