use std::process::{Command, Output};

fn weyl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weyl")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn order_and_gorder_agree() {
    for e in [
        "0",
        "t1^5",
        "t2*d1 + 1",
        "d1^2*d2",
        "t1*d1*d2 + d1 - t3",
        "(d1 + t2)^3",
        "d1*t1*d2*t2",
        "1/2*d3^2 - d1",
    ] {
        let (o, g) = (weyl(&["order", e]), weyl(&["gorder", e]));
        assert!(o.status.success() && g.status.success(), "{e}");
        assert_eq!(stdout(&o), stdout(&g), "{e}");
    }
}

#[test]
fn errors_exit_two_with_nothing_on_stdout() {
    let cases: &[&[&str]] = &[
        &["normalize", "t1 +"],
        &["normalize", "(t1"],
        &["normalize", "t3", "--vars", "2"],
        &["apply", "d1", "d1"],
        &["quantize", "x1 + x1*x2"],
        &["quantize", "d1"],
        &["symbol", "d1^2", "--grade", "1"],
        &["check", "--law", "no-such-law"],
        &["check", "--ci"],
        &["check", "--n", "7"],
        &["construct", "--map", "/nonexistent/jets.txt", "--degree", "1"],
        &["normalize", "t1", "--xi-prefix", "d"],
        &["frobnicate"],
    ];
    for args in cases {
        let o = weyl(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?} wrote {:?}", stdout(&o));
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn vars_extends_the_ring() {
    let o = weyl(&["normalize", "d1*t1", "--vars", "3"]);
    assert_eq!(stdout(&o), "(t1)*d1 + 1\n");
    let o = weyl(&["symbol", "t1*d1", "--vars", "2", "--grade", "1"]);
    assert_eq!(stdout(&o), "(t1)*x1\n");
}

#[test]
fn check_all_and_text_format() {
    let o = weyl(&["check", "--trials", "10", "--seed", "3"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), weyl_core::laws::law_names().count());
    assert!(lines.iter().all(|l| l.ends_with(" 10 0 PASS")));

    let o = weyl(&["check", "--law", "jacobi", "--trials", "5", "--format", "text"]);
    assert!(stdout(&o).starts_with("jacobi: PASS (5 trials, 0 failures, "));

    let o = weyl(&["check", "--ci", "--seed", "11", "--law", "reconstruction"]);
    assert_eq!(stdout(&o), "reconstruction 100 0 PASS\n");

    let o = weyl(&["check", "--list"]);
    assert!(stdout(&o).lines().any(|l| l.starts_with("ideal-lemma ")));
}

#[test]
fn check_output_is_deterministic() {
    let a = weyl(&["check", "--trials", "20", "--seed", "42", "--n", "2"]);
    let b = weyl(&["check", "--trials", "20", "--seed", "42", "--n", "2"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn construct_reads_jet_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("jets.txt");
    // identity on degree <= 2 in one variable
    std::fs::write(&path, "0 -> 1\n1 -> t1\n2 -> t1^2\n").unwrap();
    let o = weyl(&["construct", "--map", path.to_str().unwrap(), "--degree", "2"]);
    assert_eq!(stdout(&o), "1\n");
    std::fs::write(&path, "0 -> 1\n").unwrap();
    let o = weyl(&["construct", "--map", path.to_str().unwrap(), "--degree", "1"]);
    assert_eq!(stdout(&o), "(-t1)*d1 + 1\n");
}
