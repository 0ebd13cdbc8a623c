use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use chromalg::planar::GraphJson;
use serde_json::Value;

const TETRA: &str = r#"{"n":4,"faces":[[0,1,2],[0,2,3],[0,3,1],[1,3,2]]}"#;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chromalg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("chromalg-cli-{}-{name}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn tetra_file(dir: &std::path::Path) -> String {
    let p = dir.join("tetra.json");
    fs::write(&p, TETRA).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn chromatic_of_tetrahedron() {
    let dir = scratch("chromatic");
    let f = tetra_file(&dir);
    let out = run(&["chromatic", &f, "--method", "both"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["display"], "Q^4 - 6Q^3 + 11Q^2 - 6Q");
    assert_eq!(v["methods_agree"], true);

    let out = run(&["chromatic", &f, "--eval", "Q=3/2"]);
    assert_eq!(json(&out)["value"], "9/16");
}

#[test]
fn golden_value_of_tetrahedron() {
    let dir = scratch("golden");
    let f = tetra_file(&dir);
    let out = run(&["chromatic", &f, "--eval", "golden1"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["value"]["a"], "-1/1");
    assert_eq!(v["value"]["b"], "0/1");
}

#[test]
fn jw_two() {
    let out = run(&["jw", "--n", "2"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
}

#[test]
fn tl_expression_and_parse_error() {
    let out = run(&["tl", "P2*E1", "--n", "2"]);
    assert!(out.status.success());
    assert!(json(&out)["terms"].as_array().unwrap().is_empty());

    let out = run(&["tl", "E1*(", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn unreadable_input_exits_two() {
    let out = run(&["chromatic", "/nonexistent/map.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generate_then_verify_corpus() {
    let dir = scratch("corpus");
    let corpus = dir.join("tri");
    let c = corpus.to_string_lossy().into_owned();
    let out = run(&[
        "generate", "--k", "7", "--count", "3", "--seed", "5", "--out", &c,
    ]);
    assert!(out.status.success());
    assert_eq!(fs::read_dir(&corpus).unwrap().count(), 3);
    for verb in ["verify-golden", "verify-estimate"] {
        let out = run(&[verb, "--corpus", &c]);
        assert!(out.status.success(), "{verb}");
        let v = json(&out);
        assert_eq!(v["failures"], 0);
        assert_eq!(v["items"].as_array().unwrap().len(), 3);
    }
}

#[test]
fn verify_tutte_small() {
    let out = run(&["verify-tutte", "--contexts", "8", "--seed", "3"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["failures"], 0);
    assert!(v["items"].as_array().unwrap().len() >= 8);
}

#[test]
fn verify_beraha_pretty() {
    let out = run(&[
        "--pretty",
        "verify-beraha",
        "--j",
        "1",
        "--n",
        "4",
        "--contexts",
        "6",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("PASS")));
    assert!(!text.lines().any(|l| l.starts_with("FAIL")));
}

#[test]
fn verify_phi_commutes_small() {
    let out = run(&[
        "verify-phi-commutes",
        "--max-vertices",
        "6",
        "--words",
        "20",
    ]);
    assert!(out.status.success());
    assert_eq!(json(&out)["failures"], 0);
}

#[test]
fn dual_of_tetrahedron_has_four_vertices() {
    let dir = scratch("dual");
    let f = tetra_file(&dir);
    let out = run(&["dual", &f]);
    assert!(out.status.success());
    let g: GraphJson = serde_json::from_slice(&out.stdout).unwrap();
    let m = g.to_map().unwrap();
    assert_eq!((m.num_vertices(), m.num_edges(), m.num_faces()), (4, 6, 4));
    assert!(m.vertex_cycles().iter().all(|c| c.len() == 3));
}
