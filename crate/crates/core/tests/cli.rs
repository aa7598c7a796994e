use std::path::Path;
use std::process::{Command, Output};

use hopf_forge::catalog::{self, Group};
use hopf_forge::io::Document;
use hopf_forge::tensor::MultiMap;
use hopf_forge::Scalar;

fn forge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopf-forge")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

#[test]
fn catalog_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = path(dir.path(), "s3.json");
    assert_eq!(code(&forge(&["build", "catalog", "--catalog", "kS3", "--out", &out])), 0);
    let first = std::fs::read(&out).unwrap();
    Document::load(&out).unwrap().save(&out).unwrap();
    assert_eq!(std::fs::read(&out).unwrap(), first);
    assert_eq!(code(&forge(&["check", &out])), 0);
    assert_eq!(code(&forge(&["check", &out, "--field", "Q"])), 0);
    assert_eq!(code(&forge(&["check", &out, "--field", "Q(zeta_3)"])), 2);
}

#[test]
fn json_reports() {
    let o = forge(&["check", "--catalog", "sweedler", "--report-format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let items = v[0]["items"].as_array().unwrap();
    assert!(items.iter().all(|i| i["passed"] == true));
    let names: Vec<&str> = items.iter().map(|i| i["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
}

#[test]
fn failing_check_exits_one_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let b = hopf_forge::braided::BraidedBialgebra::from_hopf(&catalog::group_algebra(&Group::cyclic(4)));
    let sp = [b.space().clone(), b.space().clone()];
    let sigma = MultiMap::from_fn(&sp, &[], |d| vec![(vec![], Scalar::from_int(if d[0] == 0 || d[1] == 0 { 1 } else { 2 + d[0] as i64 }))]);
    let mut doc = Document::new();
    doc.add_hopf("H", &b.underlying()).unwrap();
    doc.add_cocycle_over("bad", "H", &sigma).unwrap();
    let file = path(dir.path(), "bad.json");
    doc.save(&file).unwrap();
    let o = forge(&["check", &file, "--structure", "bad", "--report-format", "json"]);
    assert_eq!(code(&o), 1);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v[0]["items"].as_array().unwrap().iter().any(|i| i["passed"] == false && i["witness"].is_object()));
    let out = path(dir.path(), "tw.json");
    assert_eq!(code(&forge(&["build", "twist", "--algebra", &file, "--cocycle", "bad", "--out", &out])), 1);
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let file = path(dir.path(), "x.json");
    std::fs::write(&file, "{\"format\": \"hopf-forge/1\", \"field\": \"Q\", \"spaces\": [], \"maps\": [{\"name\": \"m\", \"domain\": [\"V\"], \"codomain\": [], \"entries\": []}]}").unwrap();
    let o = forge(&["check", &file]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("/maps/0/domain/0"));
    std::fs::write(&file, "{ not json").unwrap();
    assert_eq!(code(&forge(&["check", &file])), 2);
    assert_eq!(code(&forge(&["check", "--catalog", "no-such-thing"])), 2);
    assert_eq!(code(&forge(&["build", "double", "--catalog", "sl2:n=2", "--out", &path(dir.path(), "o.json")])), 2);
}

#[test]
fn build_double_then_twist_gives_heisenberg() {
    let dir = tempfile::tempdir().unwrap();
    let d = path(dir.path(), "drin.json");
    assert_eq!(code(&forge(&["build", "double", "--catalog", "kZ3", "--out", &d])), 0);
    assert_eq!(code(&forge(&["check", &d])), 0);
    let t = path(dir.path(), "twist.json");
    assert_eq!(code(&forge(&["build", "twist", "--algebra", &d, "--cocycle", "indB-triv", "--out", &t])), 0);
    let h = path(dir.path(), "heis.json");
    assert_eq!(code(&forge(&["build", "heis", "--catalog", "kZ3", "--out", &h])), 0);
    let tw = Document::load(&t).unwrap().algebra("twisted").unwrap();
    let he = Document::load(&h).unwrap().algebra("Heis").unwrap();
    assert_eq!(tw.mult, he.mult);
}

#[test]
fn smash_with_trivial_action_is_the_tensor_algebra() {
    let dir = tempfile::tempdir().unwrap();
    let mut doc = Document::new();
    let a = catalog::group_algebra(&Group::cyclic(2));
    let k = catalog::group_algebra(&Group::cyclic(3));
    doc.add_hopf("A", &a).unwrap();
    doc.add_hopf("K", &k).unwrap();
    let file = path(dir.path(), "in.json");
    doc.save(&file).unwrap();
    let out = path(dir.path(), "smash.json");
    assert_eq!(code(&forge(&["build", "smash", "--input", &file, "--structure", "A", "--hopf", "K", "--out", &out])), 0);
    let s = Document::load(&out).unwrap().algebra("A#K").unwrap();
    let want = a.mult.tensor(&k.mult);
    // (a⊗k)(a'⊗k') = aa'⊗kk' on the fused basis
    let parts = [a.space.clone(), k.space.clone()];
    let split = MultiMap::split(&s.space, &parts);
    let lhs = split.tensor(&split).then(&MultiMap::permutation(&[parts[0].clone(), parts[1].clone(), parts[0].clone(), parts[1].clone()], &[0, 2, 1, 3])).then(&want);
    assert_eq!(lhs, s.mult.then(&split));
}

#[test]
fn bosonize_and_compose() {
    let dir = tempfile::tempdir().unwrap();
    let out = path(dir.path(), "b.json");
    assert_eq!(code(&forge(&["build", "bosonize", "--catalog", "braided-line:n=3", "--out", &out])), 0);
    let h = Document::load(&out).unwrap().hopf("Boson").unwrap();
    assert_eq!(h.mult, catalog::taft(3).unwrap().mult);
    let out = path(dir.path(), "c.json");
    assert_eq!(code(&forge(&["build", "compose-cocycles", "--catalog", "kZ2", "--out", &out])), 0);
    assert_eq!(code(&forge(&["check", &out, "--structure", "composite"])), 0);
}

#[test]
fn check_all_is_deterministic_across_jobs() {
    let a = forge(&["check", "--all", "--jobs", "1", "--report-format", "json"]);
    let b = forge(&["check", "--all", "--jobs", "4", "--report-format", "json"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}
