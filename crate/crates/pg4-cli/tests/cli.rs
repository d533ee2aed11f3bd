use std::process::{Command, Output};

use serde_json::Value;

fn pg4(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pg4")).args(args).output().expect("runs")
}

fn json(args: &[&str]) -> Value {
    let out = pg4(args);
    assert!(out.status.success(), "{:?}: {}", args, String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).expect("json");
    assert_eq!(v["schema"], "pg4/1");
    v
}

fn error_line(args: &[&str]) -> (i32, String) {
    let out = pg4(args);
    let err = String::from_utf8_lossy(&out.stderr).to_string();
    assert_eq!(err.lines().count(), 1, "{:?}", err);
    assert!(err.starts_with("error:"), "{:?}", err);
    (out.status.code().unwrap(), err)
}

#[test]
fn count_100() {
    let v = json(&["count", "100", "--breakdown", "--self-mirror"]);
    assert_eq!(v["total"], 192);
    assert_eq!(v["self_mirror"], 16);
    assert_eq!(v["breakdown"]["total"], 192);
}

#[test]
fn build_reports_fingerprint() {
    let v = json(&["build", "tor:|/pg:m=2,n=4"]);
    assert_eq!(v["order"], 16);
    assert_eq!(v["chiral"], false);
    assert_eq!(v["fingerprint"]["*1/2"], 16);
    assert_eq!(v["fingerprint"]["1|1/4"], 4);
    let fp = json(&["fingerprint", "tor:|/pg:m=2,n=4"]);
    assert_eq!(fp["fingerprint"], v["fingerprint"]);
}

#[test]
fn output_is_deterministic() {
    for args in [&["build", "tub:+-1/2[OxC2]:n=3"][..], &["orbit", "tub:+-[TxC]:n=2"], &["catalog", "--max-order", "24"]] {
        assert_eq!(pg4(args).stdout, pg4(args).stdout);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(error_line(&["build", "tor:Q:m=1,n=1"]).0, 1);
    assert_eq!(error_line(&["build", "nonsense"]).0, 1);
    assert_eq!(error_line(&["count", "abc"]).0, 1);
    assert_eq!(error_line(&["frobnicate"]).0, 1);
    assert_eq!(error_line(&["count", "0"]).0, 2);
    assert_eq!(error_line(&["build", "tor:1:m=0,n=5,s=0"]).0, 2);
    assert_eq!(error_line(&["orbit", "tor:1:m=2,n=2,s=0", "--center", "5"]).0, 2);
    assert_eq!(error_line(&["cell", "tor:1:m=3,n=3,s=0", "--point", "1,0,0,0"]).0, 2);
}

#[test]
fn classify_from_generators() {
    let path = std::env::temp_dir().join(format!("pg4-gens-{}.jsonl", std::process::id()));
    std::fs::write(&path, "{\"star\":false,\"l\":\"iI\",\"r\":\"1\"}\n{\"l\":\"w\",\"r\":\"1\"}\n{\"l\":\"1\",\"r\":\"e7\"}\n").unwrap();
    let v = json(&["classify", "--generators", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(v["spec"], "tub:+-[IxC]:n=7");
    assert_eq!(v["order"], 840);
}

#[test]
fn orbit_center_reports_polygon_and_screw() {
    let v = json(&["orbit", "tub:+-[IxC]:n=12", "--center", "5"]);
    assert_eq!(v["polygon"], 120);
    assert_eq!(v["screw"], serde_json::json!(["49/120"]));
    assert_eq!(v["induced"], "+I");
    let d = json(&["orbit", "tub:+-[TxC]:n=1"]);
    assert_eq!(d["size"], 24);
    assert_eq!(d["points"].as_array().unwrap().len(), 24);
}

#[test]
fn cell_meshes() {
    let out = pg4(&["cell", "tub:+-[IxC]:n=1", "--point", "1,0,0,0"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("OFF\n20 12 30\n"), "{}", text);
    let out = pg4(&["cell", "tub:+-[TxC]:n=1", "--point", "1,0,0,0", "--format", "obj"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 6);
    assert_eq!(text.lines().filter(|l| l.starts_with("f ")).count(), 8);
}

#[test]
fn catalog_matches_counts() {
    let v = json(&["catalog", "--max-order", "30"]);
    let want: u64 = (1..=30).map(|n| pg4::counting::count_order(n).unwrap().total).sum();
    assert_eq!(v["count"], want);
}
