//! End-to-end checks of the `kpa` binary: exit codes, file IO, output
//! round-trips.

use std::process::Command;

fn kpa(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_kpa"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &std::process::Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &std::process::Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn validate_exit_codes_through_the_binary() {
    let tmp = tempfile::tempdir().unwrap();

    // a valid source-free graph file
    let emitted = kpa(&["fixtures", "emit", "laurent2"]);
    assert_eq!(emitted.status.code(), Some(0));
    let good = tmp.path().join("laurent2.kg");
    std::fs::write(&good, stdout(&emitted)).unwrap();
    let out = kpa(&["validate", good.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));

    // sources present
    let out = kpa(&["validate", "omega-2-3-2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("3,2"));

    // deleting the square breaks bijectivity
    let broken: String = stdout(&emitted)
        .lines()
        .filter(|l| !l.contains("lhs"))
        .collect::<Vec<_>>()
        .join("\n");
    let bad = tmp.path().join("broken.kg");
    std::fs::write(&bad, broken).unwrap();
    let out = kpa(&["validate", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("not bijective"), "{}", stderr(&out));
}

#[test]
fn eval_check_equal_and_zero_output() {
    let out = kpa(&[
        "eval",
        "laurent2",
        "--ring",
        "int",
        "-e",
        "st(b)*s(f)",
        "-e",
        "s(f)*st(b)",
        "--check-equal",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "EQUAL\n");

    let out = kpa(&[
        "eval",
        "leavitt2",
        "--ring",
        "gf:2",
        "-e",
        "p(v) - s(a)*st(a) - s(b)*st(b)",
    ]);
    assert_eq!(stdout(&out), "0\n");

    let out = kpa(&["eval", "leavitt2", "--ring", "int", "-e", "s(oops)"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn analyze_json_file_is_reproducible() {
    let tmp = tempfile::tempdir().unwrap();
    let path1 = tmp.path().join("a.json");
    let path2 = tmp.path().join("b.json");
    for (path, _) in [(&path1, 0), (&path2, 1)] {
        let out = kpa(&[
            "analyze",
            "loop1",
            "--ring",
            "rat",
            "--json",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    }
    let a = std::fs::read(&path1).unwrap();
    let b = std::fs::read(&path2).unwrap();
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    assert!(text.contains("\"status\": \"periodic\""));
    assert!(text.contains("\"basically_simple\": false"));
}

#[test]
fn lattice_dot_export() {
    let out = kpa(&["lattice", "twoblock", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("digraph"));
    assert!(text.contains("n0 -> n1;"));
}

#[test]
fn laurent_check_binary() {
    let out = kpa(&["laurent-check", "--ring", "int", "--trials", "60", "--seed", "0"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("PASS"));
}

#[test]
fn fixtures_list_names_everything() {
    let out = kpa(&["fixtures", "list"]);
    let text = stdout(&out);
    for name in kpa::fixtures::FIXTURE_NAMES {
        assert!(text.contains(name));
    }
}
