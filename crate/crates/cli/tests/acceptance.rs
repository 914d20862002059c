//! Acceptance criteria. Each test prints one `[PASS]`/`[FAIL]` line; run with
//! `cargo test -p weyl-cli --test acceptance -- --nocapture --test-threads=1`
//! to see them in order.

use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use weyl_core::laws::{run_law, run_law_with, GenConfig, Hooks, LawReport, DEFAULT_SEED};
use weyl_core::weyl::compose_with_binomial;
use weyl_core::{MultiIndex, QDiffOp};

fn desk() -> GenConfig {
    GenConfig {
        n: 3,
        max_order: 3,
        max_coeff_degree: 3,
        coeff_bound: 5,
        trials: 100,
        seed: DEFAULT_SEED,
    }
}

fn verdict(criterion: &str, pass: bool, detail: &str) {
    println!("[{}] {criterion}: {detail}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "criterion {criterion} failed: {detail}");
}

fn law(name: &str, cfg: &GenConfig) -> LawReport {
    run_law(name, cfg).unwrap()
}

fn summarize(reports: &[LawReport]) -> (bool, String) {
    let pass = reports.iter().all(LawReport::passed);
    let mut detail: Vec<String> = reports.iter().map(LawReport::line).collect();
    for r in reports {
        detail.extend(r.counterexamples.iter().cloned());
    }
    (pass, detail.join("; "))
}

#[test]
fn compose_oracle() {
    let r = law("compose-oracle", &desk());
    let pass = r.passed() && r.trials == 100;
    verdict("compose-oracle", pass, &summarize(&[r]).1);
}

#[test]
fn gorder_eq_syntactic() {
    let r = law("gorder-eq-syntactic", &desk());
    let pass = r.passed() && r.trials == 100;
    verdict("gorder-eq-syntactic", pass, &summarize(&[r]).1);
}

#[test]
fn filtration_additivity_and_commutator_drop() {
    let reports = [law("filtration-additivity", &desk()), law("commutator-drop", &desk())];
    let (pass, detail) = summarize(&reports);
    verdict("filtration-additivity+commutator-drop", pass, &detail);
}

#[test]
fn jacobi() {
    let (pass, detail) = summarize(&[law("jacobi", &desk())]);
    verdict("jacobi", pass, &detail);
}

#[test]
fn weyl_relations() {
    let n = 3;
    let mut bad = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let (ti, tj) = (QDiffOp::coordinate(n, i).unwrap(), QDiffOp::coordinate(n, j).unwrap());
            let (di, dj) = (QDiffOp::partial(n, i).unwrap(), QDiffOp::partial(n, j).unwrap());
            let delta = if i == j { QDiffOp::identity(n) } else { QDiffOp::zero(n) };
            if !ti.commutator(&tj).unwrap().is_zero() {
                bad.push(format!("[t{i},t{j}]"));
            }
            if !di.commutator(&dj).unwrap().is_zero() {
                bad.push(format!("[d{i},d{j}]"));
            }
            if di.commutator(&tj).unwrap() != delta {
                bad.push(format!("[d{i},t{j}]"));
            }
        }
    }
    let r = law("weyl-relations", &desk());
    let pass = bad.is_empty() && r.passed();
    verdict(
        "weyl-relations",
        pass,
        &format!("{}; direct failures: {bad:?}", r.line()),
    );
}

#[test]
fn diff1_split() {
    let (pass, detail) = summarize(&[law("diff1-split", &desk())]);
    verdict("diff1-split", pass, &detail);
}

#[test]
fn reconstruction() {
    use weyl_core::constructions::from_jet_map;
    let zero_ok = (0..=3).all(|k| from_jet_map(&weyl_core::QJetMap::zero(3, k)).is_zero());
    let r = law("reconstruction", &desk());
    verdict(
        "reconstruction",
        r.passed() && zero_ok,
        &format!("{}; zero jet map -> zero operator: {zero_ok}", summarize(&[r]).1),
    );
}

#[test]
fn leibniz_peel_and_ideal_lemma() {
    let cfg = desk();
    let peel = law("leibniz-peel", &cfg);
    // ideal-lemma alternates: even trials principal ideals, odd trials point ideals
    let ideal = law("ideal-lemma", &cfg);
    let principal = (0..cfg.trials).filter(|t| t % 2 == 0).count();
    let point = cfg.trials - principal;
    let (pass, detail) = summarize(&[peel, ideal]);
    let pass = pass && principal == 50 && point == 50;
    verdict(
        "leibniz-peel+ideal-lemma",
        pass,
        &format!("{detail}; principal {principal}, point {point}"),
    );
}

#[test]
fn symbol_suite() {
    let cfg = desk();
    let reports = [
        law("symbol-mult", &cfg),
        law("gr-commutative", &cfg),
        law("quantize-roundtrip", &cfg),
    ];
    let (pass, detail) = summarize(&reports);
    verdict("symbol suite", pass, &detail);
}

fn wrong_binomial(a: &QDiffOp, b: &QDiffOp) -> weyl_core::Result<QDiffOp> {
    compose_with_binomial(a, b, |i: &MultiIndex, k: &MultiIndex| {
        if k.is_zero() || k == i {
            i.binomial(k)
        } else {
            // drops the binomial factor for every proper split
            1.into()
        }
    })
}

#[test]
fn mutation_smoke_test() {
    let r = run_law_with(
        "compose-oracle",
        &desk(),
        &Hooks {
            compose: wrong_binomial,
        },
    )
    .unwrap();
    let pass = !r.passed() && !r.counterexamples.is_empty() && r.trials <= 100;
    let first = r.counterexamples.first().cloned().unwrap_or_default();
    verdict(
        "mutation smoke test",
        pass,
        &format!("{}; first counterexample: {first}", r.line()),
    );
}

#[test]
fn full_suite_time_budget() {
    let start = Instant::now();
    let reports = weyl_core::laws::run_all(&desk()).unwrap();
    let elapsed = start.elapsed();
    let pass = reports.iter().all(LawReport::passed) && elapsed < Duration::from_secs(60);
    verdict(
        "full suite < 60 s",
        pass,
        &format!("{} laws in {:.2?}", reports.len(), elapsed),
    );
}

struct Golden {
    args: &'static [&'static str],
    stdout: &'static str,
    stderr: &'static str,
    code: i32,
}

const GOLDEN: &[Golden] = &[
    Golden {
        args: &["normalize", "d1*t1"],
        stdout: "(t1)*d1 + 1\n",
        stderr: "",
        code: 0,
    },
    Golden {
        args: &["normalize", "d1*t1 - t1*d1"],
        stdout: "1\n",
        stderr: "",
        code: 0,
    },
    Golden {
        args: &["normalize", "t1*t2 - t2*t1"],
        stdout: "0\n",
        stderr: "",
        code: 0,
    },
    Golden {
        args: &["normalize", "d1*(t1+t2)^2"],
        stdout: "(t1^2 + 2*t1*t2 + t2^2)*d1 + 2*t1 + 2*t2\n",
        stderr: "",
        code: 0,
    },
    Golden {
        args: &["normalize", "3*t1^2*t2 - 1/2*t2 + 4"],
        stdout: "3*t1^2*t2 - 1/2*t2 + 4\n",
        stderr: "",
        code: 0,
    },
    Golden {
        args: &["gorder", "t2*d1*d2 + d1"],
        stdout: "2\n",
        stderr: "",
        code: 0,
    },
    Golden {
        args: &["order", "t2*d1*d2 + d1"],
        stdout: "2\n",
        stderr: "",
        code: 0,
    },
    Golden {
        args: &["order", "d1 - d1"],
        stdout: "-inf\n",
        stderr: "",
        code: 0,
    },
    Golden {
        args: &["apply", "t1*d1*d2", "t1*t2^2"],
        stdout: "2*t1*t2\n",
        stderr: "",
        code: 0,
    },
    Golden {
        args: &["comm", "d1", "t1"],
        stdout: "1\n",
        stderr: "",
        code: 0,
    },
    Golden {
        args: &["comm", "t1", "d1"],
        stdout: "-1\n",
        stderr: "",
        code: 0,
    },
    Golden {
        args: &["symbol", "t1*d1*d2 + d1"],
        stdout: "(t1)*x1*x2\n",
        stderr: "",
        code: 0,
    },
    Golden {
        args: &["symbol", "d1", "--grade", "2"],
        stdout: "0\n",
        stderr: "",
        code: 0,
    },
    Golden {
        args: &["symbol", "t2*d1", "--xi-prefix", "xi"],
        stdout: "(t2)*xi1\n",
        stderr: "",
        code: 0,
    },
    Golden {
        args: &["quantize", "t1*x1*x2"],
        stdout: "(t1)*d1*d2\n",
        stderr: "",
        code: 0,
    },
    Golden {
        args: &["split1", "t1*d1 + t1^2"],
        stdout: "derivation: (t1)*d1\nmultiplier: t1^2\n",
        stderr: "",
        code: 0,
    },
    Golden {
        args: &["check", "--law", "jacobi", "--trials", "50", "--seed", "7"],
        stdout: "jacobi 50 0 PASS\n",
        stderr: "",
        code: 0,
    },
    Golden {
        args: &[
            "check",
            "--law",
            "weyl-relations",
            "--trials",
            "5",
            "--seed",
            "1",
            "--n",
            "3",
        ],
        stdout: "weyl-relations 5 0 PASS\n",
        stderr: "",
        code: 0,
    },
    Golden {
        args: &["normalize", "d1*"],
        stdout: "",
        stderr: "error: parse error at byte 4: expected one of '(', '-', number, t<i>, d<i>; found end of input\n",
        code: 2,
    },
    Golden {
        args: &["normalize", "t1 + t0"],
        stdout: "",
        stderr: "error: parse error at byte 7: variable index must be at least 1\n",
        code: 2,
    },
    Golden {
        args: &["split1", "d1^2"],
        stdout: "",
        stderr: "error: expected an operator of order at most 1, found order 2\n",
        code: 2,
    },
];

#[test]
fn cli_golden() {
    let mut failures = Vec::new();
    for g in GOLDEN {
        let out = Command::new(env!("CARGO_BIN_EXE_weyl")).args(g.args).output().unwrap();
        let stdout = String::from_utf8_lossy(&out.stdout);
        let stderr = String::from_utf8_lossy(&out.stderr);
        let code = out.status.code().unwrap_or(-1);
        if stdout != g.stdout || stderr != g.stderr || code != g.code {
            failures.push(format!("{:?}: got ({stdout:?}, {stderr:?}, {code})", g.args));
        }
    }
    let construct_ok = {
        let mut file = tempfile::NamedTempFile::new().unwrap();
        writeln!(file, "# A(1) = 0, A(t1) = t2\n1,0 -> t2").unwrap();
        let path = file.path().to_str().unwrap();
        let out = Command::new(env!("CARGO_BIN_EXE_weyl"))
            .args(["construct", "--map", path, "--degree", "1"])
            .output()
            .unwrap();
        let ok = out.status.success() && out.stdout == b"(t2)*d1\n" && out.stderr.is_empty();
        if !ok {
            failures.push(format!("construct: {:?}", String::from_utf8_lossy(&out.stdout)));
        }
        ok
    };
    let count = GOLDEN.len() + usize::from(construct_ok);
    let pass = failures.is_empty() && count >= 12;
    verdict(
        "CLI golden tests",
        pass,
        &format!("{count} invocations byte-exact; mismatches: {failures:?}"),
    );
}
