use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use torus_super::invariant::corpus;

fn run(args: &[&str], cache: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_torus-super"))
        .args(args)
        .env("TORUS_SUPER_CACHE", cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn copy_corpus(dir: &Path) {
    for e in corpus() {
        fs::write(dir.join(format!("torus_{}_{}.json", e.n, e.m)), e.json).unwrap();
    }
}

#[test]
fn trefoil_grouped() {
    let cache = tempfile::tempdir().unwrap();
    let o = run(&["compute", "2", "3", "--grouped"], cache.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "a^0: 1 + q^4*t^2\na^2: q^2*t^3\n");
}

#[test]
fn shared_factor_exits_two() {
    let cache = tempfile::tempdir().unwrap();
    let o = run(&["compute", "2", "4"], cache.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("gcd(2,4) = 2"), "{}", stderr(&o));
}

#[test]
fn json_matches_fixture_cold_and_cached() {
    let cache = tempfile::tempdir().unwrap();
    let fixture = corpus().iter().find(|e| (e.n, e.m) == (3, 4)).unwrap().json;
    for _ in 0..2 {
        let o = run(&["compute", "3", "4", "--json"], cache.path());
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), fixture);
    }
    assert_eq!(fs::read_dir(cache.path()).unwrap().count(), 1);
}

#[test]
fn broken_cache_entry_is_ignored() {
    let cache = tempfile::tempdir().unwrap();
    run(&["compute", "2", "3", "--json"], cache.path());
    let entry = fs::read_dir(cache.path()).unwrap().next().unwrap().unwrap().path();
    for junk in ["not json", "{\"n\":2,\"m\":3,\"normalized\":true,\"terms\":[[0,0,0"] {
        fs::write(&entry, junk).unwrap();
        let o = run(&["compute", "2", "3"], cache.path());
        assert_eq!(stdout(&o), "1 + q^4*t^2 + a^2*q^2*t^3\n");
    }
}

#[test]
fn raw_reports_content() {
    let cache = tempfile::tempdir().unwrap();
    let o = run(&["compute", "2", "3", "--raw"], cache.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("content: q^4*t^-8"), "{}", stderr(&o));
}

#[test]
fn corpus_verifies() {
    let cache = tempfile::tempdir().unwrap();
    let fixtures = tempfile::tempdir().unwrap();
    copy_corpus(fixtures.path());
    let o = run(&["verify", "corpus", "--fixtures", fixtures.path().to_str().unwrap()], cache.path());
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().filter(|l| l.ends_with(" ok")).count(), 15);
}

#[test]
fn corrupted_fixture_exits_one_with_diff() {
    let cache = tempfile::tempdir().unwrap();
    let fixtures = tempfile::tempdir().unwrap();
    copy_corpus(fixtures.path());
    let path = fixtures.path().join("torus_2_5.json");
    let text = fs::read_to_string(&path).unwrap().replacen("\"1\"]", "\"2\"]", 1);
    fs::write(&path, text).unwrap();
    let o = run(&["verify", "corpus", "--fixtures", fixtures.path().to_str().unwrap()], cache.path());
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("(2,5) MISMATCH: 1 terms differ"), "{out}");
    assert!(out.contains("a^0 q^0 t^0: expected 2, got 1"), "{out}");
}

#[test]
fn missing_fixtures_exit_three() {
    let cache = tempfile::tempdir().unwrap();
    let fixtures = tempfile::tempdir().unwrap();
    let o = run(&["verify", "corpus", "--fixtures", fixtures.path().to_str().unwrap()], cache.path());
    assert_eq!(o.status.code(), Some(3));
    let gone = fixtures.path().join("nowhere");
    let o = run(&["verify", "corpus", "--fixtures", gone.to_str().unwrap()], cache.path());
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn oracle_small() {
    let cache = tempfile::tempdir().unwrap();
    let o = run(&["verify", "oracle", "--max-size", "3"], cache.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).trim_end().ends_with("0 failed"));
    assert_eq!(run(&["verify", "oracle", "--max-size", "9"], cache.path()).status.code(), Some(3));
}

#[test]
fn jones_of_trefoil() {
    let cache = tempfile::tempdir().unwrap();
    let o = run(&["specialize", "2", "3", "--at", "jones"], cache.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 + q^4 - q^6\n");
    let o = run(&["specialize", "2", "3", "--at", "homfly"], cache.path());
    assert_eq!(stdout(&o), "1 + q^4 - a^2*q^2\n");
}

#[test]
fn scan_has_no_failures() {
    let cache = tempfile::tempdir().unwrap();
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("scan.csv");
    let o = run(&["scan", "--n-max", "4", "--m-max", "13", "--out", out.to_str().unwrap()], cache.path());
    assert_eq!(o.status.code(), Some(0));
    let csv = fs::read_to_string(&out).unwrap();
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    assert_eq!(rows.len(), 11 + 10 + 9);
    assert!(rows.iter().all(|r| r.contains(",polynomial,") || r.contains(",nonpolynomial,")));
}

#[test]
fn genfun_two_one() {
    let cache = tempfile::tempdir().unwrap();
    let o = run(&["genfun", "2", "1"], cache.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "{\"n\":2,\"r\":1,\"numerator\":[[0,[[0,0,0,\"1\"]]],[1,[[2,2,3,\"1\"]]]],\"denominator\":[[0,0,0],[0,4,2]]}\n"
    );
    assert_eq!(run(&["genfun", "2", "2"], cache.path()).status.code(), Some(3));
}

#[test]
fn json_is_stable_across_thread_counts() {
    let cache = tempfile::tempdir().unwrap();
    let mut outs = Vec::new();
    for threads in ["1", "4"] {
        let o = Command::new(env!("CARGO_BIN_EXE_torus-super"))
            .args(["compute", "4", "9", "--json", "--raw"])
            .env("TORUS_SUPER_CACHE", cache.path())
            .env("RAYON_NUM_THREADS", threads)
            .output()
            .unwrap();
        outs.push(o.stdout);
    }
    assert_eq!(outs[0], outs[1]);
}
