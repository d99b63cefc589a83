use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_singpoly"))
        .args(args)
        .env_remove("SINGPOLY_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn poly_generic_macdonald() {
    let o = run(&["poly", "macdonald", "--N", "2", "--alpha", "2,0"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "x1^2 + ((q^2*t + -q^2)/(q^2*t + -1)) * x2^2 + ((q^2*t + -q^2 + q*t + -q)/(q^2*t + -1)) * x1 x2");
}

#[test]
fn poly_h_basis_21() {
    let o = run(&["poly", "h-basis", "--shape", "2,1", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let comps = v["components"].as_array().unwrap();
    assert_eq!(comps.len(), 2);
    assert_eq!(comps[0]["tableau"], "[[2],[3,1]]");
    assert_eq!(comps[0]["text"], "(t) * x2 + (-1) * x3");
    assert_eq!(comps[1]["tableau"], "[[1],[3,2]]");
}

#[test]
fn poly_singular_specialization() {
    let o = run(&["poly", "macdonald", "--N", "2", "--alpha", "2,0", "--spec", "qt=-1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "x1^2 + (-t^-1) * x2^2 + (1 + -t^-1) * x1 x2");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&run(&["poly", "h-basis", "--shape", "2,1", "--spec", "t=-1"])), 3);
    assert_eq!(code(&run(&["poly", "nope"])), 2);
    assert_eq!(code(&run(&["poly", "jack", "--alpha", "2,x"])), 2);
    assert_eq!(code(&run(&["poly", "jack"])), 2);
    assert_eq!(code(&run(&["poly", "jack", "--alpha", "1,0", "--spec", "q+t"])), 2);
    assert_eq!(code(&run(&["cache", "list"])), 2);
    assert_eq!(code(&run(&["verify", "singular", "--spec", "q*t=1"])), 2);
}

#[test]
fn verify_paper_examples() {
    let o = run(&["verify", "paper-examples", "--format", "json"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let v = json(&o);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["status"], "pass");
    let cases: Vec<&str> = v["reports"].as_array().unwrap().iter().map(|r| r["case"].as_str().unwrap()).collect();
    let mut sorted = cases.clone();
    sorted.sort();
    assert_eq!(cases, sorted);
}

#[test]
fn verify_singular_instance() {
    let o = run(&["verify", "singular", "--mu", "2,1,0", "--spec", "q*t^2=1", "--tau", "1,1,1"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).starts_with("PASS"));
    let o = run(&["verify", "singular", "--mu", "2,0", "--spec", "q*t=1"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn verify_singular_suite_gates_the_large_instance() {
    let o = run(&["verify", "singular"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("GATED singular / Macdonald (6,6,3,3,0,0)"), "{out}");
    assert!(out.contains("3 passed, 0 failed, 1 gated"), "{out}");
}

#[test]
fn verify_flagship() {
    let o = run(&["verify", "factorization", "--case", "tau33"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert_eq!(code(&run(&["verify", "factorization", "--case", "nope"])), 2);
}

#[test]
fn negative_controls_exit_nonzero() {
    let o = run(&["verify", "negative-controls", "--format", "json"]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    for r in v["reports"].as_array().unwrap() {
        assert_eq!(r["status"], "fail", "{}", r["case"]);
        assert!(!r["witnesses"].as_array().unwrap().is_empty());
    }
}

#[test]
fn tableaux_listing() {
    let o = run(&["tableaux", "--shape", "2,1"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("2 RSYT of shape [2,1]"));
    assert!(out.contains("[[2],[3,1]]  c=[1,-1,0]  inv=1  inv0=1"));

    let o = run(&["tableaux", "--shape", "3,3,2", "--special-point", "group", "--format", "json"]);
    assert_eq!(json(&o)["group_point"], "(z1, z2, y2, y2, y2, y1, y1, y1)");

    let o = run(&["tableaux", "--shape", "3,3", "--show-alpha", "--m", "2", "--m0", "2", "--format", "json"]);
    let v = json(&o);
    let rows = v["tableaux"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().any(|r| r["alpha"] == "(2,2,2,0,0,0)"));

    let o = run(&["tableaux", "--shape", "3,2", "--rst", "--special-point", "hecke"]);
    assert!(stdout(&o).contains("RST of shape [3,2]"));
}

fn cached(dir: &Path, args: &[&str]) -> Output {
    let mut all = vec!["--cache-dir", dir.to_str().unwrap()];
    all.extend_from_slice(args);
    run(&all)
}

#[test]
fn cache_roundtrip_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["poly", "macdonald-vv", "--alpha", "1,0,0", "--tableau", "2/3,1", "--format", "json"];
    let cold = cached(dir.path(), &args);
    let warm = cached(dir.path(), &args);
    let none = run(&args);
    assert_eq!(code(&cold), 0);
    assert_eq!(cold.stdout, warm.stdout);
    assert_eq!(cold.stdout, none.stdout);

    let list = cached(dir.path(), &["cache", "list", "--format", "json"]);
    let v = json(&list);
    assert_eq!(v.as_array().unwrap().len(), 1);
    assert_eq!(v[0]["family"], "MacdonaldVv");
    assert_eq!(code(&cached(dir.path(), &["cache", "verify"])), 0);

    let file = std::fs::read_dir(dir.path()).unwrap().next().unwrap().unwrap().path();
    let text = std::fs::read_to_string(&file).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let hash = v["content_hash"].as_str().unwrap();
    let tampered = text.replacen(hash, &"0".repeat(hash.len()), 1);
    std::fs::write(&file, tampered).unwrap();
    assert_eq!(code(&cached(dir.path(), &["cache", "verify"])), 1);
    assert_eq!(code(&cached(dir.path(), &args)), 3);

    let o = cached(dir.path(), &["cache", "clear"]);
    assert_eq!(stdout(&o).trim(), "removed 1 entries");
    assert_eq!(code(&cached(dir.path(), &args)), 0);
}

#[test]
fn cache_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_singpoly"))
        .args(["poly", "f", "--tableau", "3/6,5,4,2,1"])
        .env("SINGPOLY_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(stdout(&o).trim(), "(t^3) * x3 + (-1) * x6");
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}
