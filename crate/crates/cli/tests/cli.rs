use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const C1: &str = "# C1\n2 2\n11|20\n01|11\n";

fn z2z4(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_z2z4"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Writes the catalog code `name` to a file via `construct`.
fn catalog_file(dir: &TempDir, name: &str) -> PathBuf {
    let out = z2z4(&["construct", name]);
    assert!(out.status.success(), "{}", stderr(&out));
    write(dir, &format!("{name}.txt"), &stdout(&out))
}

#[test]
fn enumerator_of_c1() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "c1.txt", C1);
    let out = z2z4(&["we", s(&f)]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "x^6 + 4*x^3*y^3 + 3*x^2*y^4\n");
    let out = z2z4(&["we", s(&f), "--variant", "even"]);
    assert_eq!(stdout(&out), "x^6 + 3*x^2*y^4\n");
    let out = z2z4(&["we", s(&f), "--variant", "shadow", "--format", "coeffs"]);
    assert_eq!(stdout(&out), "6: 0 0 3 4 0 0 1\n");
}

#[test]
fn classify_c6() {
    let dir = TempDir::new().unwrap();
    let f = catalog_file(&dir, "C6");
    let out = z2z4(&["classify", s(&f)]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "Type II, non-separable, antipodal\n");
}

#[test]
fn info_reports_every_field() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "c1.txt", C1);
    let text = stdout(&z2z4(&["info", s(&f)]));
    for line in [
        "type: (2, 2; 1, 1; 1)",
        "size: 8",
        "self-dual: yes",
        "class: Type 0",
        "separable: no",
        "antipodal: no",
        "weight enumerator: x^6 + 4*x^3*y^3 + 3*x^2*y^4",
        "shadow: 8 vectors, enumerator 3*x^4*y^2 + 4*x^3*y^3 + y^6",
    ] {
        assert!(text.contains(line), "missing {line:?} in\n{text}");
    }
}

#[test]
fn verify_passes_all_checks() {
    let out = z2z4(&["verify"]);
    let text = stdout(&out);
    assert!(out.status.success(), "{text}");
    assert!(text.ends_with("12 of 12 checks passed\n"), "{text}");
    assert!(!text.contains("FAIL"));
}

#[test]
fn dual_with_and_without_oracle_agree() {
    let dir = TempDir::new().unwrap();
    let mut files = vec![write(&dir, "c1.txt", C1), write(&dir, "odd.txt", "3 2\n101|10\n011|02\n")];
    for name in ["C2", "C3", "C4", "C5", "Gprime", "D4"] {
        files.push(catalog_file(&dir, name));
    }
    for f in &files {
        let fast = z2z4(&["dual", s(f)]);
        let oracle = z2z4(&["dual", "--oracle", s(f)]);
        assert!(fast.status.success() && oracle.status.success());
        assert_eq!(stdout(&fast), stdout(&oracle), "{}", f.display());
    }
}

#[test]
fn search_examples() {
    let out = stdout(&z2z4(&["search", "2", "1"]));
    assert!(out.starts_with("count: 1\n"), "{out}");
    assert!(out.contains("11|0\n00|2\n"), "{out}");

    let out = stdout(&z2z4(&["search", "2", "2", "--class", "0"]));
    assert!(out.contains("W = x^6 + 4*x^3*y^3 + 3*x^2*y^4"), "{out}");

    let out = z2z4(&["search", "1", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "count: 0\n");
}

#[test]
fn search_is_deterministic_across_worker_counts() {
    let run = |threads: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_z2z4"))
            .args(["search", "4", "2"])
            .env("RAYON_NUM_THREADS", threads)
            .output()
            .unwrap();
        assert!(out.status.success());
        stdout(&out)
    };
    let one = run("1");
    assert_eq!(one, run("4"));
    assert_eq!(one, run("4"));
}

#[test]
fn search_confirms_minimal_lengths() {
    assert_eq!(stdout(&z2z4(&["search", "2", "1", "--class", "0"])), "count: 0\n");
    assert_eq!(stdout(&z2z4(&["search", "4", "2", "--class", "II"])), "count: 0\n");
    let out = stdout(&z2z4(&["search", "2", "4", "--class", "I"]));
    assert!(!out.contains("non-separable"));
}

#[test]
fn construct_output_round_trips() {
    let dir = TempDir::new().unwrap();
    let out = z2z4(&["construct", "--alpha", "4", "--beta", "4", "--class", "I", "--separable", "no"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let f = write(&dir, "built.txt", &stdout(&out));
    assert_eq!(stdout(&z2z4(&["classify", s(&f)])), "Type I, non-separable, antipodal\n");
}

#[test]
fn neighbor_and_glue() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "c1.txt", C1);
    let out = z2z4(&["neighbor", s(&f), "11|22"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let n = write(&dir, "n.txt", &stdout(&out));
    assert_eq!(stdout(&z2z4(&["classify", s(&n)])), "Type I, separable, antipodal\n");

    let out = z2z4(&["glue", s(&f), s(&f)]);
    assert!(out.status.success(), "{}", stderr(&out));
    let g = write(&dir, "g.txt", &stdout(&out));
    assert!(stdout(&z2z4(&["info", s(&g)])).contains("self-dual: yes"));
}

#[test]
fn parse_errors_exit_2_with_line_number() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "bad.txt", "# header next\n2 2\n11|20\n1|11\n");
    let out = z2z4(&["info", s(&f)]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("line 4"), "{err}");
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn precondition_violations_exit_3() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "c1.txt", C1);
    // a codeword is not a valid neighbor direction
    let out = z2z4(&["neighbor", s(&f), "01|11"]);
    assert_eq!(out.status.code(), Some(3), "{}", stderr(&out));
    let out = z2z4(&["construct", "--alpha", "2", "--beta", "1", "--class", "0"]);
    assert_eq!(out.status.code(), Some(3));
    let odd = write(&dir, "odd.txt", "1 1\n1|1\n");
    assert_eq!(z2z4(&["gleason", s(&odd)]).status.code(), Some(3));
}

#[test]
fn guard_violations_exit_4() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "c1.txt", C1);
    let out = z2z4(&["--guard", "4", "info", s(&f)]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).contains("exceeds"));
    assert_eq!(z2z4(&["search", "6", "3"]).status.code(), Some(4));
    let out = z2z4(&["search", "2", "5", "--guard", "12", "--class", "II"]);
    assert!(out.status.success(), "{}", stderr(&out));
}

#[test]
fn catalog_lists_every_code() {
    let out = stdout(&z2z4(&["catalog"]));
    assert_eq!(out.lines().count(), 10);
    assert!(out.lines().next().unwrap().starts_with("C1 "));
}
