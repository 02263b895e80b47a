use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_nfblocks"));
    c.env_remove("NFBLOCKS_JOBS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn schema(name: &str) -> Value {
    let p = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas").join(format!("{name}.schema.json"));
    serde_json::from_str(&fs::read_to_string(p).unwrap()).unwrap()
}

fn assert_valid(name: &str, doc: &Value) {
    let s = schema(name);
    let v = jsonschema::validator_for(&s).expect("schema compiles");
    let errors: Vec<String> = v.iter_errors(doc).map(|e| format!("{e} at {}", e.instance_path())).collect();
    assert!(errors.is_empty(), "{name}: {errors:?}");
}

fn json_of(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("not JSON ({e}): {}", stdout(o)))
}

fn write_tmp(dir: &tempfile::TempDir, name: &str, contents: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, contents).unwrap();
    p
}

#[test]
fn edges_listing() {
    let o = run(&["edges", "--q", "1", "--m", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("q = 1, m = 2: 2 black, 1 red"));

    let o = run(&["--format", "json", "edges", "--q", "2", "--m", "3"]);
    assert!(o.status.success());
    let doc = json_of(&o);
    assert_valid("edges", &doc);
    let black = doc["black"].as_array().unwrap().len();
    assert_eq!(doc["counts"]["black"], black);
}

#[test]
fn edges_rejects_single_site() {
    let o = run(&["edges", "--q", "1", "--m", "1"]);
    assert_eq!(o.status.code(), Some(64));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(run(&["nonsense"]).status.code(), Some(64));
    assert_eq!(run(&["edges", "--m", "2"]).status.code(), Some(64));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn one_edge_charpoly() {
    let o = run(&["charpoly", "--one-edge", "+1,-1", "--q", "1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "t^2 - (x2 - x1)*t - 4*x1*x2\n");
    let again = run(&["charpoly", "--one-edge", "+1,-1", "--q", "1"]);
    assert_eq!(o.stdout, again.stdout);

    let o = run(&["--format", "json", "charpoly", "--one-edge", "-1,-1", "--q", "1"]);
    assert_valid("charpoly", &json_of(&o));
}

#[test]
fn graph_files() {
    let dir = tempfile::tempdir().unwrap();
    let single = write_tmp(&dir, "single.json", r#"{"m":2,"q":1,"vertices":[{"a":[0,0],"sigma":1}]}"#);
    assert_valid("graph", &serde_json::from_str(&fs::read_to_string(&single).unwrap()).unwrap());
    let o = run(&["charpoly", single.to_str().unwrap()]);
    assert_eq!(stdout(&o), "t\n");

    let o = run(&["--format", "json", "matrix", single.to_str().unwrap()]);
    assert!(o.status.success());
    assert_valid("matrix", &json_of(&o));

    let bad = write_tmp(&dir, "bad.json", r#"{"m":2,"q":1,"vertices":[{"a":[0,0],"sigma":3}]}"#);
    assert_eq!(run(&["charpoly", bad.to_str().unwrap()]).status.code(), Some(64));
    let split = write_tmp(&dir, "split.json", r#"{"m":2,"q":1,"vertices":[{"a":[0,0],"sigma":1},{"a":[5,-5],"sigma":1}]}"#);
    assert_eq!(run(&["charpoly", split.to_str().unwrap()]).status.code(), Some(64));
}

#[test]
fn certify_small_case() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = run(&["certify", "--q", "1", "--m", "2", "--max-dim", "1", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_valid("certify-report", &doc);
    assert!(doc["graphs"].as_array().unwrap().iter().all(|g| g["verdict"] == "Irreducible"));
}

#[test]
fn certify_output_is_byte_identical() {
    let args = ["--format", "json", "certify", "--q", "1", "--m", "3", "--max-dim", "2"];
    let a = run(&args);
    let b = bin().args(args).env("NFBLOCKS_JOBS", "1").output().unwrap();
    assert_eq!(a.status.code(), b.status.code());
    assert_eq!(a.stdout, b.stdout);
    assert_valid("certify-report", &json_of(&a));
}

#[test]
fn certify_includes_the_extra_case() {
    let o = run(&["--format", "json", "certify", "--q", "4", "--m", "8", "--max-dim", "1", "--no-pairs"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json_of(&o);
    // Four coordinates equal to one another can be permuted into any four slots,
    // so find the class with one coordinate at -5 and three at +1.
    let found = doc["graphs"].as_array().unwrap().iter().find(|g| {
        let Some(vs) = g["canonical"]["vertices"].as_array() else { return false };
        vs.iter().any(|v| {
            let mut a: Vec<i64> = v["a"].as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect();
            a.sort();
            a == [-5, 0, 0, 0, 0, 1, 1, 1]
        })
    });
    let g = found.expect("extra-case class present");
    assert_eq!(g["verdict"], "Irreducible");
}

#[test]
fn planted_reducible_fails_the_run() {
    let o = run(&["certify", "--q", "1", "--m", "2", "--max-dim", "1", "--planted-reducible"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("counterexample"));
}

#[test]
fn caps_mark_the_run_incomplete() {
    let o = run(&["certify", "--q", "1", "--m", "3", "--max-dim", "2", "--max-graphs", "3"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn config_preloads_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_tmp(&dir, "cfg.json", r#"{"q":1,"m":2,"budget":4}"#);
    assert_valid("config", &serde_json::from_str(&fs::read_to_string(&cfg).unwrap()).unwrap());
    let o = run(&["--config", cfg.to_str().unwrap(), "--format", "json", "certify", "--max-dim", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json_of(&o);
    assert_eq!(doc["params"]["budget"], 4);
    assert_eq!(doc["params"]["m"], 2);
    let bad = write_tmp(&dir, "bad.json", r#"{"q":1,"colour":"red"}"#);
    assert_eq!(run(&["--config", bad.to_str().unwrap(), "edges", "--m", "2"]).status.code(), Some(64));
}

fn found_sites(dir: &tempfile::TempDir) -> PathBuf {
    let p = dir.path().join("sites.json");
    let o = run(&["--format", "json", "search-sites", "--n", "2", "--m", "3", "--q", "1", "--seed", "5", "--out", p.to_str().unwrap()]);
    assert!(o.status.success());
    assert_valid("search-sites", &json_of(&o));
    assert_valid("sites", &serde_json::from_str(&fs::read_to_string(&p).unwrap()).unwrap());
    p
}

#[test]
fn geometry_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let sites = found_sites(&dir);
    let s = sites.to_str().unwrap();

    let o = run(&["--format", "json", "geometry", s, "--q", "1", "--R", "8", "--check-generic"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json_of(&o);
    assert_valid("genericity", &doc);
    assert_eq!(doc["pass"], true);

    let o = run(&["--format", "json", "geometry", s, "--q", "1", "--R", "6", "--components"]);
    assert!(o.status.success());
    assert_valid("components", &json_of(&o));

    let o = run(&["--format", "json", "geometry", s, "--q", "1", "--R", "6"]);
    assert_valid("geograph", &json_of(&o));

    let o = run(&["geometry", s, "--q", "1", "--R", "6", "--dot"]);
    assert!(stdout(&o).starts_with("graph gamma_s {"));
}

#[test]
fn lifted_one_edge_matches_inline_edge() {
    let dir = tempfile::tempdir().unwrap();
    let sites = found_sites(&dir);
    let o = run(&["--format", "json", "geometry", sites.to_str().unwrap(), "--q", "1", "--R", "8", "--lift"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json_of(&o);
    assert_valid("certify-report", &doc);
    let mut checked = 0;
    for g in doc["graphs"].as_array().unwrap() {
        let vs = g["canonical"]["vertices"].as_array().unwrap();
        if vs.len() != 2 {
            continue;
        }
        let a: Vec<String> = vs[1]["a"].as_array().unwrap().iter().map(|x| x.to_string()).collect();
        let inline = run(&["charpoly", "--one-edge", &a.join(","), "--q", "1"]);
        assert_eq!(stdout(&inline).trim(), g["chi"].as_str().unwrap());
        checked += 1;
    }
    assert!(checked > 0);
}

#[test]
fn geometry_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let dup = write_tmp(&dir, "dup.json", r#"{"n":2,"v":[[0,0],[0,0]]}"#);
    assert_eq!(run(&["geometry", dup.to_str().unwrap(), "--q", "1"]).status.code(), Some(64));
    let far = write_tmp(&dir, "far.json", r#"{"n":2,"v":[[0,0],[9,0]]}"#);
    assert_eq!(run(&["geometry", far.to_str().unwrap(), "--q", "1", "--R", "4"]).status.code(), Some(64));
    let line = write_tmp(&dir, "line.json", r#"{"n":2,"v":[[0,0],[1,0],[2,0]]}"#);
    assert_eq!(run(&["geometry", line.to_str().unwrap(), "--q", "1", "--check-generic"]).status.code(), Some(2));
}
