use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn subreg(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subreg"))
        .args(args)
        .current_dir(dir)
        .env_remove("SUBREG_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

const K4: &str = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";

#[test]
fn extract_writes_dot_and_certificate() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("k4.mg"), K4).unwrap();
    let out = subreg(&["extract", "k4.mg", "--dot", "out.dot", "--cert", "out.cert"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("omitted 0 / bound 0\n"));
    let dot = fs::read_to_string(dir.path().join("out.dot")).unwrap();
    assert!(dot.starts_with("graph G {"));
    assert_eq!(dot.matches("penwidth").count(), 4);
    let cert = fs::read_to_string(dir.path().join("out.cert")).unwrap();
    let keys: Vec<&str> = cert.lines().map(|l| l.split(": ").next().unwrap()).collect();
    assert_eq!(keys, ["n", "m", "c", "d", "bound", "achieved", "equality", "classes"]);
    assert!(cert.contains("equality: false\n"));
}

#[test]
fn generate_gfamily_member() {
    let dir = tempfile::tempdir().unwrap();
    let out = subreg(&["generate", "gfamily", "--base", "k33", "--yhat", "3"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("5 6\n"));

    let out = subreg(
        &["generate", "gfamily", "--base", "k33", "--explode", "4=k4:0", "--output", "g.mg"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let out = subreg(&["verify", "g.mg", "--oracle"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("f2: 6\n"));
    assert!(text.contains("oracle equality: true\n"));

    let out = subreg(&["extract", "g.mg"], dir.path());
    assert!(stdout(&out).contains("classes: G-family\n"));
}

#[test]
fn generate_from_files_and_bad_explosions() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("k4.mg"), K4).unwrap();
    let out = subreg(
        &["generate", "gfamily", "--base", "q3", "--explode", "2=k4.mg:1"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("9 "));
    for bad in ["3=triple:0", "0=k4:0", "3=k4", "x=k4:0", "3=missing.mg:0"] {
        let out = subreg(&["generate", "gfamily", "--base", "k33", "--explode", bad], dir.path());
        assert_eq!(out.status.code(), Some(2), "{bad}");
    }
}

#[test]
fn generate_trees_and_balloons() {
    let dir = tempfile::tempdir().unwrap();
    let out = subreg(&["generate", "tree", "--internal", "1", "--girth", "3"], dir.path());
    assert!(stdout(&out).starts_with("16 24\n"));
    let out = subreg(&["generate", "balloon", "--girth", "5", "-o", "b.mg"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let out = subreg(&["analyze", "b.mg"], dir.path());
    let text = stdout(&out);
    assert!(text.contains("n: 11\n"));
    assert!(text.contains("girth: 5\n"));
    assert!(text.contains("balloons: 1\n"));
    let out = subreg(&["generate", "balloon", "--girth", "9"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_enumerate_small() {
    let dir = tempfile::tempdir().unwrap();
    let out = subreg(&["verify", "--enumerate", "5"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("n = 5: 3352 graphs"));
    assert!(text.ends_with("pass\n"));
    let out = subreg(&["verify", "--enumerate", "9"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn random_verification_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = subreg(&["verify", "--random", "30", "--seed", "7"], dir.path());
    let b = Command::new(env!("CARGO_BIN_EXE_subreg"))
        .args(["verify", "--random", "30"])
        .env("SUBREG_SEED", "7")
        .output()
        .unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn casestudy_badgraph() {
    let dir = tempfile::tempdir().unwrap();
    let out = subreg(&["casestudy", "badgraph"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("2-factor: no\n"));
    assert!(text.contains("f2: 6 (n - 1 = 6)\n"));
    assert!(text.contains("S = X = {X1, X2, X3, X4}: o(G' - S) = 6, |S| + 2 = 6, Tutte set: true"));
    assert!(text.contains("S = X - x = {X1, X2, X3}: o(G' - S) = 5, |S| + 2 = 5, Tutte set: true"));
    assert!(text.ends_with("confirmed: true\n"));
    let again = subreg(&["casestudy", "badgraph"], dir.path());
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn usage_and_input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("bad.mg"), "2 1\n0 5\n").unwrap();
    fs::write(dir.path().join("k5.mg"), "5 10\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n").unwrap();
    for args in [
        vec!["bogus"],
        vec!["verify"],
        vec!["extract"],
        vec!["extract", "missing.mg"],
        vec!["extract", "bad.mg"],
        vec!["analyze", "k5.mg"],
        vec!["verify", "--enumerate", "3", "--oracle"],
        vec!["casestudy", "other"],
    ] {
        let out = subreg(&args, dir.path());
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn bound_report() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("p.mg"), "# a path\n3 2\n0 1\n1 2\n").unwrap();
    let out = subreg(&["bound", "p.mg"], dir.path());
    assert_eq!(
        stdout(&out),
        "n: 3\nm: 2\nc: 2\nd: 5\nbound: 3\nguaranteed: 0\n"
    );
}
