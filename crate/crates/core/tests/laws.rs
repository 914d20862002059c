use weyl_core::laws::{law_names, run_all, run_law, run_law_with, GenConfig, Hooks};
use weyl_core::weyl::compose_with_binomial;
use weyl_core::{MultiIndex, QDiffOp};

#[test]
fn default_suite_passes() {
    let reports = run_all(&GenConfig::default()).unwrap();
    assert_eq!(reports.len(), law_names().count());
    for r in &reports {
        println!("{}  ({:?})", r.line(), r.elapsed);
        assert!(r.passed(), "{}\n{}", r.line(), r.counterexamples.join("\n"));
        assert!(r.counterexamples.is_empty());
    }
}

#[test]
fn smallest_instance_passes() {
    let cfg = GenConfig {
        n: 1,
        max_order: 1,
        trials: 50,
        ..GenConfig::default()
    };
    for r in run_all(&cfg).unwrap() {
        assert!(r.passed(), "{}\n{}", r.line(), r.counterexamples.join("\n"));
    }
}

#[test]
fn reports_are_reproducible() {
    let cfg = GenConfig {
        trials: 30,
        seed: 99,
        ..GenConfig::default()
    };
    let strip = |mut r: weyl_core::laws::LawReport| {
        r.elapsed = Default::default();
        r
    };
    for name in ["jacobi", "ideal-lemma", "reconstruction"] {
        let a = strip(run_law(name, &cfg).unwrap());
        let b = strip(run_law(name, &cfg).unwrap());
        assert_eq!(a, b);
    }
}

fn off_by_one(a: &QDiffOp, b: &QDiffOp) -> weyl_core::Result<QDiffOp> {
    compose_with_binomial(a, b, |i: &MultiIndex, k: &MultiIndex| {
        let c = i.binomial(k);
        if k.is_zero() || k == i {
            c
        } else {
            c + 1
        }
    })
}

#[test]
fn broken_compose_is_caught_with_counterexamples() {
    let hooks = Hooks { compose: off_by_one };
    let r = run_law_with("compose-oracle", &GenConfig::default(), &hooks).unwrap();
    assert!(!r.passed());
    assert!(r.failed > 0);
    assert_eq!(r.counterexamples.len(), r.failed.min(5));
    assert!(r.counterexamples[0].starts_with("trial "));
    assert!(r.counterexamples[0].contains("D1 = "));
    assert!(r.line().ends_with("FAIL"));
}
