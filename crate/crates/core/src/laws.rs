//! Randomized checks of the algebraic facts this crate relies on.
//!
//! Each law runs `trials` independent instances. Trial `i` draws from its own
//! ChaCha8 stream (`seed_from_u64(seed)` with stream number `i`), so a
//! counterexample is reproduced by `(law, config, trial index)` alone and the
//! report does not depend on scheduling. Every check is an exact equality of
//! canonical forms or an exact predicate.

use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::constructions::{from_jet_map, restriction, JetMap};
use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::grothendieck::{grothendieck_order, is_derivation, is_order_at_most, satisfies_leibniz, split_order_one};
use crate::multi_index::{monomials_up_to, MultiIndex};
use crate::symbols::{principal_symbol, quantize, symbol_of_derivation, SymbolElem};
use crate::{QDiffOp, QPoly, QSymbol};

pub const DEFAULT_SEED: u64 = 0x5EED_0001;

/// Maximum number of rendered counterexamples kept per law.
pub const COUNTEREXAMPLE_CAP: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenConfig {
    /// Variable count, `1..=3`.
    pub n: usize,
    pub max_order: usize,
    pub max_coeff_degree: usize,
    /// Bound on numerators and denominators of generated coefficients.
    pub coeff_bound: u32,
    pub trials: usize,
    pub seed: u64,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            n: 3,
            max_order: 3,
            max_coeff_degree: 3,
            coeff_bound: 5,
            trials: 100,
            seed: DEFAULT_SEED,
        }
    }
}

impl GenConfig {
    pub fn validate(&self) -> Result<()> {
        if !(1..=3).contains(&self.n) {
            return Err(Error::InvalidConfig(format!("variable count {} outside 1..=3", self.n)));
        }
        if self.coeff_bound == 0 {
            return Err(Error::InvalidConfig("coefficient bound must be positive".into()));
        }
        Ok(())
    }
}

/// Random inputs for one trial.
pub struct Generator {
    cfg: GenConfig,
    rng: ChaCha8Rng,
}

impl Generator {
    pub fn new(cfg: &GenConfig, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(stream);
        Generator { cfg: *cfg, rng }
    }

    pub fn config(&self) -> &GenConfig {
        &self.cfg
    }

    pub fn below(&mut self, upper_inclusive: usize) -> usize {
        self.rng.random_range(0..=upper_inclusive)
    }

    /// Nonzero rational with numerator and denominator at most `coeff_bound`.
    pub fn rational(&mut self) -> BigRational {
        let b = self.cfg.coeff_bound as i64;
        let mut num = self.rng.random_range(1..=b);
        if self.rng.random_bool(0.5) {
            num = -num;
        }
        let den = self.rng.random_range(1..=b);
        BigRational::new(num.into(), den.into())
    }

    pub fn multi_index(&mut self, degree: usize) -> MultiIndex {
        let mut e = vec![0u32; self.cfg.n];
        for _ in 0..degree {
            let i = self.rng.random_range(0..self.cfg.n);
            e[i] += 1;
        }
        MultiIndex::new(e)
    }

    fn monomial_index(&mut self) -> MultiIndex {
        let d = self.below(self.cfg.max_coeff_degree);
        self.multi_index(d)
    }

    /// Sparse polynomial with up to 3 terms; may be zero.
    pub fn poly(&mut self) -> QPoly {
        let count = self.below(3);
        self.poly_with_terms(count)
    }

    pub fn nonzero_poly(&mut self) -> QPoly {
        loop {
            let count = self.rng.random_range(1..=3);
            let p = self.poly_with_terms(count);
            if !p.is_zero() {
                return p;
            }
        }
    }

    fn poly_with_terms(&mut self, count: usize) -> QPoly {
        let terms: Vec<_> = (0..count).map(|_| (self.monomial_index(), self.rational())).collect();
        QPoly::from_terms(self.cfg.n, terms).expect("generated dimensions")
    }

    pub fn point(&mut self) -> Vec<BigRational> {
        (0..self.cfg.n)
            .map(|_| {
                if self.rng.random_bool(0.2) {
                    BigRational::zero()
                } else {
                    self.rational()
                }
            })
            .collect()
    }

    /// Operator whose syntactic order is a uniform draw from `0..=max_order`.
    pub fn diffop(&mut self) -> QDiffOp {
        let k = self.below(self.cfg.max_order);
        self.diffop_of_order(k)
    }

    /// Operator with a nonzero term of order exactly `k` plus up to three
    /// lower-order terms.
    pub fn diffop_of_order(&mut self, k: usize) -> QDiffOp {
        let n = self.cfg.n;
        let top_j = self.multi_index(k);
        let top = self.nonzero_poly();
        let mut terms = vec![(top_j, top)];
        if k > 0 {
            for _ in 0..self.below(3) {
                let d = self.below(k - 1);
                let j = self.multi_index(d);
                terms.push((j, self.poly()));
            }
        }
        QDiffOp::from_terms(n, terms).expect("generated dimensions")
    }

    /// Nonzero vector field `sum a_i d_i`.
    pub fn vector_field(&mut self) -> QDiffOp {
        let n = self.cfg.n;
        let mut coeffs: Vec<QPoly> = (0..n).map(|_| self.poly()).collect();
        let forced = self.rng.random_range(0..n);
        if coeffs[forced].is_zero() {
            coeffs[forced] = self.nonzero_poly();
        }
        QDiffOp::from_vector_field(&coeffs).expect("generated dimensions")
    }

    /// Homogeneous symbol of the given grade with up to three terms.
    pub fn symbol(&mut self, grade: usize) -> QSymbol {
        let count = self.rng.random_range(1..=3);
        let terms: Vec<_> = (0..count)
            .map(|_| (self.multi_index(grade), self.nonzero_poly()))
            .collect();
        SymbolElem::from_terms(self.cfg.n, grade, terms).expect("generated grade")
    }
}

/// Swappable pieces of the implementation, so the harness itself can be
/// checked against deliberately broken variants.
#[derive(Clone, Copy)]
pub struct Hooks {
    pub compose: fn(&QDiffOp, &QDiffOp) -> Result<QDiffOp>,
}

impl Default for Hooks {
    fn default() -> Self {
        Hooks {
            compose: |a, b| a.compose(b),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport {
    pub name: &'static str,
    pub trials: usize,
    /// Number of failing trials.
    pub failed: usize,
    /// Rendered counterexamples, at most [`COUNTEREXAMPLE_CAP`].
    pub counterexamples: Vec<String>,
    pub elapsed: Duration,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    /// `<law> <trials> <failures> <PASS|FAIL>`.
    pub fn line(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        format!("{} {} {} {}", self.name, self.trials, self.failed, status)
    }
}

type Check = fn(&mut Generator, usize, &Hooks) -> std::result::Result<(), String>;

pub struct Law {
    pub name: &'static str,
    /// The statement being exercised.
    pub statement: &'static str,
    check: Check,
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ok<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

pub static LAWS: &[Law] = &[
    Law {
        name: "compose-oracle",
        statement: "apply(D1 o D2, p) == apply(D1, apply(D2, p))",
        check: check_compose_oracle,
    },
    Law {
        name: "compose-assoc",
        statement: "(A o B) o C == A o (B o C)",
        check: check_compose_assoc,
    },
    Law {
        name: "filtration-additivity",
        statement: "order(D1 o D2) == order(D1) + order(D2)",
        check: check_filtration_additivity,
    },
    Law {
        name: "commutator-drop",
        statement: "order([D1, D2]) <= order(D1) + order(D2) - 1",
        check: check_commutator_drop,
    },
    Law {
        name: "jacobi",
        statement: "[A, [B, C]] == [[A, B], C] + [B, [A, C]]",
        check: check_jacobi,
    },
    Law {
        name: "leibniz-peel",
        statement: "D(a1 a2 ... am) == [D, m_a1](a2 ... am) + a1 D(a2 ... am), order([D, m_a1]) <= order(D) - 1",
        check: check_leibniz_peel,
    },
    Law {
        name: "ideal-lemma",
        statement: "D of order k maps I^(k+1) into I (principal ideals and point ideals)",
        check: check_ideal_lemma,
    },
    Law {
        name: "gorder-eq-syntactic",
        statement: "commutator-defined order == normal-form order",
        check: check_gorder,
    },
    Law {
        name: "generator-sufficiency",
        statement: "order(D) <= i implies order([D, m_a]) <= i - 1 for every polynomial a",
        check: check_generator_sufficiency,
    },
    Law {
        name: "diff1-split",
        statement: "an operator of order <= 1 is X + m_D(1) with X a derivation",
        check: check_diff1_split,
    },
    Law {
        name: "reconstruction",
        statement: "an operator of order <= k is determined by its values on degree <= k",
        check: check_reconstruction,
    },
    Law {
        name: "interpolation",
        statement: "every linear map on degree <= k extends to an operator of order <= k",
        check: check_interpolation,
    },
    Law {
        name: "symbol-mult",
        statement: "sigma_(i+j)(D1 o D2) == sigma_i(D1) sigma_j(D2)",
        check: check_symbol_mult,
    },
    Law {
        name: "gr-commutative",
        statement: "sigma_(i+j)(D1 o D2) == sigma_(i+j)(D2 o D1)",
        check: check_gr_commutative,
    },
    Law {
        name: "quantize-roundtrip",
        statement: "sigma_k(quantize(s)) == s; derivations == grade 1; products of grade-1 symbols lift",
        check: check_quantize_roundtrip,
    },
    Law {
        name: "weyl-relations",
        statement: "[t_i, t_j] == 0, [d_i, d_j] == 0, [d_i, t_j] == delta_ij",
        check: check_weyl_relations,
    },
];

pub fn law_names() -> impl Iterator<Item = &'static str> {
    LAWS.iter().map(|l| l.name)
}

pub fn find_law(name: &str) -> Result<&'static Law> {
    LAWS.iter()
        .find(|l| l.name == name)
        .ok_or_else(|| Error::UnknownLaw(name.to_string()))
}

pub fn run_law(name: &str, cfg: &GenConfig) -> Result<LawReport> {
    run_law_with(name, cfg, &Hooks::default())
}

pub fn run_law_with(name: &str, cfg: &GenConfig, hooks: &Hooks) -> Result<LawReport> {
    cfg.validate()?;
    let law = find_law(name)?;
    let start = Instant::now();
    let outcomes: Vec<Option<String>> = (0..cfg.trials)
        .into_par_iter()
        .map(|trial| {
            let mut gen = Generator::new(cfg, trial as u64);
            (law.check)(&mut gen, trial, hooks)
                .err()
                .map(|msg| format!("trial {trial}: {msg}"))
        })
        .collect();
    let failed = outcomes.iter().filter(|o| o.is_some()).count();
    let counterexamples = outcomes.into_iter().flatten().take(COUNTEREXAMPLE_CAP).collect();
    Ok(LawReport {
        name: law.name,
        trials: cfg.trials,
        failed,
        counterexamples,
        elapsed: start.elapsed(),
    })
}

pub fn run_all(cfg: &GenConfig) -> Result<Vec<LawReport>> {
    LAWS.iter().map(|l| run_law(l.name, cfg)).collect()
}

fn check_compose_oracle(g: &mut Generator, _: usize, hooks: &Hooks) -> std::result::Result<(), String> {
    let (a, b) = (g.diffop(), g.diffop());
    let ab = ok((hooks.compose)(&a, &b))?;
    for _ in 0..10 {
        let p = g.poly();
        let lhs = ok(ab.apply(&p))?;
        let rhs = ok(a.apply(&ok(b.apply(&p))?))?;
        ensure!(
            lhs == rhs,
            "D1 = {a}; D2 = {b}; p = {p}; (D1 o D2)(p) = {lhs}; D1(D2(p)) = {rhs}"
        );
    }
    Ok(())
}

fn check_compose_assoc(g: &mut Generator, _: usize, _: &Hooks) -> std::result::Result<(), String> {
    let (a, b, c) = (g.diffop(), g.diffop(), g.diffop());
    let lhs = &(&a * &b) * &c;
    let rhs = &a * &(&b * &c);
    ensure!(lhs == rhs, "A = {a}; B = {b}; C = {c}; (AB)C = {lhs}; A(BC) = {rhs}");
    Ok(())
}

fn check_filtration_additivity(g: &mut Generator, _: usize, _: &Hooks) -> std::result::Result<(), String> {
    let (a, b) = (g.diffop(), g.diffop());
    let expected = a.syntactic_order() + b.syntactic_order();
    let got = (&a * &b).syntactic_order();
    ensure!(
        got == expected,
        "D1 = {a}; D2 = {b}; order(D1 o D2) = {got}, expected {expected}"
    );
    Ok(())
}

fn check_commutator_drop(g: &mut Generator, _: usize, _: &Hooks) -> std::result::Result<(), String> {
    let (a, b) = (g.diffop(), g.diffop());
    let sum = a.syntactic_order() + b.syntactic_order();
    let c = ok(a.commutator(&b))?;
    let ord = c.syntactic_order();
    ensure!(
        ord < sum,
        "D1 = {a}; D2 = {b}; [D1, D2] = {c} has order {ord}, not below {sum}"
    );
    Ok(())
}

fn check_jacobi(g: &mut Generator, _: usize, _: &Hooks) -> std::result::Result<(), String> {
    let (a, b, c) = (g.diffop(), g.diffop(), g.diffop());
    let br = |x: &QDiffOp, y: &QDiffOp| x.commutator(y).expect("same dimension");
    let lhs = br(&a, &br(&b, &c));
    let rhs = &br(&br(&a, &b), &c) + &br(&b, &br(&a, &c));
    ensure!(
        lhs == rhs,
        "A = {a}; B = {b}; C = {c}; [A,[B,C]] = {lhs}; [[A,B],C] + [B,[A,C]] = {rhs}"
    );
    Ok(())
}

fn check_leibniz_peel(g: &mut Generator, _: usize, _: &Hooks) -> std::result::Result<(), String> {
    let d = g.diffop();
    let k = d.syntactic_order().finite().expect("generated operators are nonzero");
    let factors: Vec<QPoly> = (0..k.max(1) + 1).map(|_| g.nonzero_poly()).collect();
    let a1 = &factors[0];
    let rest = factors[1..].iter().fold(QPoly::one(g.cfg.n), |acc, f| &acc * f);
    let d_prime = ok(d.commutator(&QDiffOp::from_poly(a1.clone())))?;
    ensure!(
        d_prime.syntactic_order().at_most(k as i64 - 1),
        "D = {d}; a1 = {a1}; [D, m_a1] = {d_prime} is not of order <= {}",
        k as i64 - 1
    );
    let lhs = ok(d.apply(&(a1 * &rest)))?;
    let rhs = &ok(d_prime.apply(&rest))? + &(a1 * &ok(d.apply(&rest))?);
    ensure!(
        lhs == rhs,
        "D = {d}; a1 = {a1}; rest = {rest}; lhs = {lhs}; rhs = {rhs}"
    );
    Ok(())
}

fn check_ideal_lemma(g: &mut Generator, trial: usize, _: &Hooks) -> std::result::Result<(), String> {
    let d = g.diffop();
    let k = d.syntactic_order().finite().expect("generated operators are nonzero");
    let n = g.cfg.n;
    if trial.is_multiple_of(2) {
        // principal ideal (gen): f is a product of k+1 multiples of gen
        let mut gen = g.nonzero_poly();
        for _ in 0..8 {
            if gen.degree() >= Degree::Finite(1) || g.cfg.max_coeff_degree == 0 {
                break;
            }
            gen = g.nonzero_poly();
        }
        let f = (0..=k).fold(QPoly::one(n), |acc, _| {
            let h = g.nonzero_poly();
            &acc * &(&gen * &h)
        });
        let image = ok(d.apply(&f))?;
        let rem = ok(image.reduce_by(&gen))?;
        ensure!(
            rem.is_zero(),
            "D = {d}; ideal ({gen}); f = {f}; D(f) = {image} leaves remainder {rem}"
        );
    } else {
        // point ideal m_x: f is a product of k+1 polynomials vanishing at x
        let x = g.point();
        let mut f = QPoly::one(n);
        for _ in 0..=k {
            let mut member = QPoly::zero(n);
            for _ in 0..10 {
                let j = g.below(n - 1) + 1;
                let p = &g.poly() + &QPoly::var(n, j).expect("index in range");
                let at_x = ok(p.eval(&x))?;
                member = &p - &QPoly::constant(n, at_x);
                if !member.is_zero() {
                    break;
                }
            }
            f = &f * &member;
        }
        let value = ok(ok(d.apply(&f))?.eval(&x))?;
        let pt: Vec<String> = x.iter().map(ToString::to_string).collect();
        ensure!(
            value.is_zero(),
            "D = {d}; x = ({}); f = {f}; D(f)(x) = {value}",
            pt.join(", ")
        );
    }
    Ok(())
}

fn check_gorder(g: &mut Generator, trial: usize, _: &Hooks) -> std::result::Result<(), String> {
    let d = match trial % 4 {
        0 => QDiffOp::from_poly(g.nonzero_poly()),
        1 => g.vector_field(),
        _ => g.diffop(),
    };
    let syn = d.syntactic_order();
    let gro = std::panic::catch_unwind(|| grothendieck_order(&d))
        .map_err(|_| format!("D = {d}; commutator recursion exceeded {syn}"))?;
    ensure!(gro == syn, "D = {d}; grothendieck order {gro}, syntactic order {syn}");
    Ok(())
}

fn check_generator_sufficiency(g: &mut Generator, _: usize, _: &Hooks) -> std::result::Result<(), String> {
    let d = g.diffop();
    let i = d.syntactic_order().finite().expect("generated operators are nonzero");
    ensure!(is_order_at_most(&d, i), "D = {d}; not of order <= {i}");
    ensure!(
        is_order_at_most(&d, i + 1),
        "D = {d}; order <= {i} but not <= {}",
        i + 1
    );
    let a = g.poly();
    let c = ok(d.commutator(&QDiffOp::from_poly(a.clone())))?;
    let drops = if i == 0 {
        c.is_zero()
    } else {
        is_order_at_most(&c, i - 1)
    };
    ensure!(
        drops,
        "D = {d}; a = {a}; [D, m_a] = {c} is not of order <= {}",
        i as i64 - 1
    );
    Ok(())
}

fn check_diff1_split(g: &mut Generator, trial: usize, _: &Hooks) -> std::result::Result<(), String> {
    let d = match trial % 4 {
        0 => QDiffOp::from_poly(g.nonzero_poly()),
        1 => g.vector_field(),
        _ => &g.vector_field() + &QDiffOp::from_poly(g.poly()),
    };
    let (x, a) = ok(split_order_one(&d))?;
    let one = ok(d.apply(&QPoly::one(g.cfg.n)))?;
    ensure!(a == one, "D = {d}; split multiplier {a} != D(1) = {one}");
    ensure!(is_derivation(&x), "D = {d}; X = {x} has non-derivation terms");
    for _ in 0..3 {
        let (p, q) = (g.poly(), g.poly());
        ensure!(
            ok(satisfies_leibniz(&x, &p, &q))?,
            "D = {d}; X = {x} fails Leibniz on p = {p}, q = {q}"
        );
    }
    let back = &x + &QDiffOp::from_poly(a.clone());
    ensure!(back == d, "D = {d}; X + m_a = {back}");
    Ok(())
}

fn check_reconstruction(g: &mut Generator, _: usize, _: &Hooks) -> std::result::Result<(), String> {
    let d = g.diffop();
    let k = d.syntactic_order().finite().expect("generated operators are nonzero");
    let rebuilt = from_jet_map(&restriction(&d, k));
    ensure!(rebuilt == d, "D = {d}; k = {k}; rebuilt {rebuilt}");
    let zero = from_jet_map(&crate::QJetMap::zero(g.cfg.n, k));
    ensure!(zero.is_zero(), "zero jet map of degree {k} gave {zero}");
    Ok(())
}

fn check_interpolation(g: &mut Generator, _: usize, _: &Hooks) -> std::result::Result<(), String> {
    let n = g.cfg.n;
    let k = g.below(g.cfg.max_order);
    let entries: Vec<_> = monomials_up_to(n, k).into_iter().map(|m| (m, g.poly())).collect();
    let a = ok(JetMap::new(n, k, entries))?;
    let d = from_jet_map(&a);
    ensure!(
        d.syntactic_order().at_most(k as i64),
        "A = {{{}}}; D = {d} has order above {k}",
        a.to_string().trim_end().replace('\n', "; ")
    );
    for (m, v) in a.entries() {
        let got = ok(d.apply(&QPoly::monomial(n, m.clone(), BigRational::one())))?;
        ensure!(&got == v, "D = {d}; D(t^({m})) = {got}, expected {v}");
    }
    Ok(())
}

fn top_symbol(d: &QDiffOp) -> QSymbol {
    let k = d.syntactic_order().finite().unwrap_or(0);
    principal_symbol(d, k).expect("grade equals order")
}

fn check_symbol_mult(g: &mut Generator, _: usize, _: &Hooks) -> std::result::Result<(), String> {
    let (a, b) = (g.diffop(), g.diffop());
    let grade = (a.syntactic_order() + b.syntactic_order())
        .finite()
        .expect("nonzero operators");
    let lhs = ok(principal_symbol(&(&a * &b), grade))?;
    let rhs = ok(top_symbol(&a).checked_mul(&top_symbol(&b)))?;
    ensure!(
        lhs == rhs,
        "D1 = {a}; D2 = {b}; sigma(D1 o D2) = {lhs}; sigma(D1) sigma(D2) = {rhs}"
    );
    Ok(())
}

fn check_gr_commutative(g: &mut Generator, _: usize, _: &Hooks) -> std::result::Result<(), String> {
    let (a, b) = (g.diffop(), g.diffop());
    let grade = (a.syntactic_order() + b.syntactic_order())
        .finite()
        .expect("nonzero operators");
    let ab = ok(principal_symbol(&(&a * &b), grade))?;
    let ba = ok(principal_symbol(&(&b * &a), grade))?;
    ensure!(
        ab == ba,
        "D1 = {a}; D2 = {b}; sigma(D1 o D2) = {ab}; sigma(D2 o D1) = {ba}"
    );
    let c = ok(principal_symbol(&ok(a.commutator(&b))?, grade))?;
    ensure!(c.is_zero(), "D1 = {a}; D2 = {b}; sigma_{grade}([D1, D2]) = {c}");
    Ok(())
}

fn check_quantize_roundtrip(g: &mut Generator, _: usize, _: &Hooks) -> std::result::Result<(), String> {
    let grade = g.below(g.cfg.max_order);
    let s = g.symbol(grade);
    let op = quantize(&s);
    let back = ok(principal_symbol(&op, grade))?;
    ensure!(back == s, "s = {s}; quantize(s) = {op}; symbol back = {back}");
    if !s.is_zero() {
        ensure!(
            op.syntactic_order() == Degree::Finite(grade),
            "s = {s}; quantize(s) = {op} has wrong order"
        );
    }

    let x = g.vector_field();
    let sx = ok(symbol_of_derivation(&x))?;
    ensure!(quantize(&sx) == x, "X = {x}; quantize(sigma(X)) = {}", quantize(&sx));
    // R-linearity: sigma(a X) == a sigma(X)
    let a = g.poly();
    let ax = &QDiffOp::from_poly(a.clone()) * &x;
    let lhs = ok(symbol_of_derivation(&ax))?;
    let rhs = ok(sx.scale_poly(&a))?;
    ensure!(lhs == rhs, "X = {x}; a = {a}; sigma(aX) = {lhs}; a sigma(X) = {rhs}");

    let (s1, u1) = (g.symbol(1), g.symbol(1));
    let lifted = ok(principal_symbol(&(&quantize(&s1) * &quantize(&u1)), 2))?;
    let prod = ok(s1.checked_mul(&u1))?;
    ensure!(
        lifted == prod,
        "s = {s1}; u = {u1}; sigma_2(q(s) q(u)) = {lifted}; s u = {prod}"
    );
    Ok(())
}

fn check_weyl_relations(g: &mut Generator, _: usize, _: &Hooks) -> std::result::Result<(), String> {
    let n = g.cfg.n;
    let t = |i| QDiffOp::coordinate(n, i).expect("index in range");
    let d = |i| QDiffOp::partial(n, i).expect("index in range");
    let p = g.poly();
    for i in 1..=n {
        for j in 1..=n {
            let tt = ok(t(i).commutator(&t(j)))?;
            ensure!(tt.is_zero(), "[t{i}, t{j}] = {tt}");
            let dd = ok(d(i).commutator(&d(j)))?;
            ensure!(dd.is_zero(), "[d{i}, d{j}] = {dd}");
            let dt = ok(d(i).commutator(&t(j)))?;
            let delta = if i == j { QDiffOp::identity(n) } else { QDiffOp::zero(n) };
            ensure!(dt == delta, "[d{i}, t{j}] = {dt}, expected {delta}");
            let on_p = ok(dt.apply(&p))?;
            let expected = if i == j { p.clone() } else { QPoly::zero(n) };
            ensure!(on_p == expected, "[d{i}, t{j}]({p}) = {on_p}");
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn generator_is_deterministic() {
        let cfg = GenConfig::default();
        let a: Vec<String> = {
            let mut g = Generator::new(&cfg, 3);
            (0..20).map(|_| g.diffop().to_string()).collect()
        };
        let b: Vec<String> = {
            let mut g = Generator::new(&cfg, 3);
            (0..20).map(|_| g.diffop().to_string()).collect()
        };
        assert_eq!(a, b);
        let mut other = Generator::new(&cfg, 4);
        let c: Vec<String> = (0..20).map(|_| other.diffop().to_string()).collect();
        assert_ne!(a, c);
    }

    #[test]
    fn constant_polys_when_degree_zero() {
        let cfg = GenConfig {
            max_coeff_degree: 0,
            ..GenConfig::default()
        };
        let mut g = Generator::new(&cfg, 0);
        for _ in 0..200 {
            assert!(g.poly().degree() <= Degree::Finite(0));
        }
    }

    #[test]
    fn coefficient_audit() {
        let cfg = GenConfig {
            coeff_bound: 5,
            ..GenConfig::default()
        };
        let mut g = Generator::new(&cfg, 11);
        let five = BigInt::from(5);
        for _ in 0..1000 {
            let r = g.rational();
            assert!(!r.is_zero());
            assert!(r.numer().magnitude() <= five.magnitude());
            assert!(r.denom() <= &five);
        }
    }

    #[test]
    fn diffop_order_matches_draw() {
        let cfg = GenConfig::default();
        let mut g = Generator::new(&cfg, 1);
        for k in 0..=4 {
            assert_eq!(g.diffop_of_order(k).syntactic_order(), Degree::Finite(k));
        }
    }

    #[test]
    fn zero_trials_is_vacuous_pass() {
        let cfg = GenConfig {
            trials: 0,
            ..GenConfig::default()
        };
        let r = run_law("jacobi", &cfg).unwrap();
        assert!(r.passed());
        assert_eq!(r.line(), "jacobi 0 0 PASS");
    }

    #[test]
    fn unknown_law_is_an_error() {
        assert_eq!(
            run_law("nope", &GenConfig::default()).unwrap_err(),
            Error::UnknownLaw("nope".into())
        );
    }

    #[test]
    fn invalid_config_is_rejected() {
        let cfg = GenConfig {
            n: 4,
            ..GenConfig::default()
        };
        assert!(run_law("jacobi", &cfg).is_err());
        let cfg = GenConfig {
            coeff_bound: 0,
            ..GenConfig::default()
        };
        assert!(run_law("jacobi", &cfg).is_err());
    }

    #[test]
    fn law_names_are_unique() {
        let mut names: Vec<_> = law_names().collect();
        let count = names.len();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), count);
    }
}
