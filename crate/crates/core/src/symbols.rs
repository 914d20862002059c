//! The symbol algebra: graded pieces `Diff^k / Diff^{k-1}` written as
//! polynomials in `t` that are homogeneous of degree `k` in auxiliary
//! variables `xi_1..xi_n`.
//!
//! [`principal_symbol`] keeps the top-order terms of an operator with `d^J`
//! replaced by `xi^J`. [`quantize`] goes back by normal ordering, putting
//! every coefficient to the left. Any other ordering differs only in lower
//! order, so only `principal_symbol(quantize(s), k) == s` is guaranteed;
//! nothing should depend on the lower-order part of `quantize`.

use std::collections::BTreeMap;
use std::fmt;

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::grothendieck::is_derivation;
use crate::multi_index::MultiIndex;
use crate::poly::{check_dims, Poly};
use crate::scalar::Scalar;
use crate::weyl::{render_terms, DiffOp};

/// A homogeneous element of grade `k`: `sum_{|J| = k} f_J(t) xi^J`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymbolElem<S> {
    n: usize,
    grade: usize,
    terms: BTreeMap<MultiIndex, Poly<S>>,
}

impl<S: Scalar> SymbolElem<S> {
    pub fn zero(n: usize, grade: usize) -> Self {
        SymbolElem {
            n,
            grade,
            terms: BTreeMap::new(),
        }
    }

    /// Builds a symbol of the given grade; every `xi`-exponent must have
    /// degree `grade`.
    pub fn from_terms(n: usize, grade: usize, terms: impl IntoIterator<Item = (MultiIndex, Poly<S>)>) -> Result<Self> {
        let mut acc: BTreeMap<MultiIndex, Poly<S>> = BTreeMap::new();
        for (j, f) in terms {
            check_dims(n, j.len())?;
            check_dims(n, f.n())?;
            if j.degree() != grade {
                return Err(Error::NotHomogeneous(grade, j.degree()));
            }
            let sum = match acc.remove(&j) {
                Some(g) => &g + &f,
                None => f,
            };
            if !sum.is_zero() {
                acc.insert(j, sum);
            }
        }
        Ok(SymbolElem { n, grade, terms: acc })
    }

    /// Splits a polynomial in `2n` variables `(t_1..t_n, xi_1..xi_n)` into
    /// coefficient and `xi` parts. The grade of the zero polynomial is 0.
    pub fn from_combined(n: usize, p: &Poly<S>) -> Result<Self> {
        check_dims(2 * n, p.n())?;
        let mut grade = None;
        let mut terms = Vec::new();
        for (m, c) in p.terms() {
            let (ts, xs) = m.exponents().split_at(n);
            let j = MultiIndex::new(xs.to_vec());
            match grade {
                None => grade = Some(j.degree()),
                Some(g) if g != j.degree() => return Err(Error::NotHomogeneous(g, j.degree())),
                _ => {}
            }
            terms.push((j, Poly::monomial(n, MultiIndex::new(ts.to_vec()), c.clone())));
        }
        Self::from_terms(n, grade.unwrap_or(0), terms)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&MultiIndex, &Poly<S>)> {
        self.terms.iter()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_dims(self.n, other.n)?;
        if self.grade != other.grade {
            return Err(Error::NotHomogeneous(self.grade, other.grade));
        }
        let all = self
            .terms
            .iter()
            .chain(&other.terms)
            .map(|(j, f)| (j.clone(), f.clone()));
        Self::from_terms(self.n, self.grade, all)
    }

    /// Multiplication by a coefficient polynomial (the `R`-module structure).
    pub fn scale_poly(&self, a: &Poly<S>) -> Result<Self> {
        check_dims(self.n, a.n())?;
        let terms = self.terms.iter().map(|(j, f)| (j.clone(), f * a));
        Self::from_terms(self.n, self.grade, terms)
    }

    /// Product in the symbol algebra; grades add.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        check_dims(self.n, other.n)?;
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (j1, f1) in &self.terms {
            for (j2, f2) in &other.terms {
                terms.push((j1.add(j2), f1 * f2));
            }
        }
        Self::from_terms(self.n, self.grade + other.grade, terms)
    }

    pub fn render_with(&self, var: &str, xi: &str) -> String {
        render_terms(self.terms.iter(), var, xi)
    }
}

impl<S: Scalar> fmt::Display for SymbolElem<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with("t", "x"))
    }
}

/// The class of `d` in grade `k`.
pub fn principal_symbol<S: Scalar>(d: &DiffOp<S>, k: usize) -> Result<SymbolElem<S>> {
    let order = d.syntactic_order();
    if order > Degree::Finite(k) {
        return Err(Error::OrderExceedsGrade { order, grade: k });
    }
    let top = d
        .terms()
        .filter(|(j, _)| j.degree() == k)
        .map(|(j, f)| (j.clone(), f.clone()));
    SymbolElem::from_terms(d.n(), k, top)
}

/// Normal-ordered quantization `f xi^J -> f d^J`.
pub fn quantize<S: Scalar>(s: &SymbolElem<S>) -> DiffOp<S> {
    DiffOp::from_terms(s.n, s.terms.iter().map(|(j, f)| (j.clone(), f.clone())))
        .expect("symbol terms have matching dimensions")
}

/// The grade-1 symbol of a derivation. Together with [`quantize`] this is
/// the identification of derivations with grade 1.
pub fn symbol_of_derivation<S: Scalar>(x: &DiffOp<S>) -> Result<SymbolElem<S>> {
    if !is_derivation(x) {
        return Err(Error::NotADerivation);
    }
    principal_symbol(x, 1)
}
