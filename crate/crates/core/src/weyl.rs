//! Differential operators with polynomial coefficients in normal form.
//!
//! A [`DiffOp`] is `sum_J f_J d^J` with every coefficient written to the
//! left of every derivative. Products of operators are renormalized on the
//! spot with the generalized Leibniz rule
//!
//! ```text
//! (f d^I) o (g d^J) = sum_{K <= I} C(I, K) * f * d^{I-K}(g) * d^{K+J}
//! ```
//!
//! where `C(I, K)` is the product of the componentwise binomials. It comes
//! from expanding `d^I (g h)` one variable at a time.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::multi_index::MultiIndex;
use crate::poly::{check_dims, render_monomial, Poly};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiffOp<S> {
    n: usize,
    terms: BTreeMap<MultiIndex, Poly<S>>,
}

impl<S: Scalar> DiffOp<S> {
    pub fn zero(n: usize) -> Self {
        DiffOp {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_poly(Poly::one(n))
    }

    /// The multiplication operator `m_a : b -> a*b`.
    pub fn from_poly(a: Poly<S>) -> Self {
        let n = a.n();
        Self::term(a, MultiIndex::zero(n))
    }

    /// The single term `f d^J`.
    pub fn term(f: Poly<S>, j: MultiIndex) -> Self {
        assert_eq!(f.n(), j.len(), "term dimensions");
        let mut terms = BTreeMap::new();
        let n = f.n();
        if !f.is_zero() {
            terms.insert(j, f);
        }
        DiffOp { n, terms }
    }

    /// `d/dt_i`, `1 <= i <= n`.
    pub fn partial(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        Ok(Self::term(Poly::one(n), MultiIndex::unit(n, i - 1)))
    }

    /// Multiplication by the coordinate `t_i`.
    pub fn coordinate(n: usize, i: usize) -> Result<Self> {
        Ok(Self::from_poly(Poly::var(n, i)?))
    }

    /// The vector field `sum_i a_i d_i`.
    pub fn from_vector_field(coeffs: &[Poly<S>]) -> Result<Self> {
        let n = coeffs.len();
        let terms = coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| (MultiIndex::unit(n, i), a.clone()));
        Self::from_terms(n, terms)
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (MultiIndex, Poly<S>)>) -> Result<Self> {
        let mut acc = BTreeMap::new();
        for (j, f) in terms {
            check_dims(n, j.len())?;
            check_dims(n, f.n())?;
            accumulate(&mut acc, j, f);
        }
        Ok(DiffOp { n, terms: acc })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms `(J, f_J)` in ascending graded-lex order of `J`.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&MultiIndex, &Poly<S>)> {
        self.terms.iter()
    }

    pub fn coeff(&self, j: &MultiIndex) -> Poly<S> {
        self.terms.get(j).cloned().unwrap_or_else(|| Poly::zero(self.n))
    }

    /// `max |J|` over the stored terms; `NegInf` for the zero operator.
    pub fn syntactic_order(&self) -> Degree {
        self.terms
            .keys()
            .map(|j| Degree::Finite(j.degree()))
            .max()
            .unwrap_or(Degree::NegInf)
    }

    pub fn apply(&self, p: &Poly<S>) -> Result<Poly<S>> {
        check_dims(self.n, p.n())?;
        let mut acc = Poly::zero(self.n);
        for (j, f) in &self.terms {
            let dp = p.partial_multi(j);
            if !dp.is_zero() {
                acc = &acc + &(f * &dp);
            }
        }
        Ok(acc)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_dims(self.n, other.n)?;
        let mut acc = self.terms.clone();
        for (j, f) in &other.terms {
            accumulate(&mut acc, j.clone(), f.clone());
        }
        Ok(DiffOp { n: self.n, terms: acc })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        DiffOp {
            n: self.n,
            terms: self.terms.iter().map(|(j, f)| (j.clone(), -f)).collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        DiffOp {
            n: self.n,
            terms: self.terms.iter().map(|(j, f)| (j.clone(), f.scale(c))).collect(),
        }
    }

    /// Normal form of `self o other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        compose_with_binomial(self, other, MultiIndex::binomial)
    }

    /// `[self, other] = self o other - other o self`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.compose(other)?.checked_sub(&other.compose(self)?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Renders as `(<poly>)*d1^a*d2^b + ...`, highest derivative first. The
    /// coefficient of the identity derivative part is printed bare.
    pub fn render_with(&self, var: &str, deriv: &str) -> String {
        render_terms(self.terms.iter(), var, deriv)
    }
}

/// Composition with a caller-supplied binomial factor `C(I, K)`.
///
/// Only [`DiffOp::compose`] passes the true binomial; any other factor
/// yields a wrong product. Exposed for mutation testing of the harness.
#[doc(hidden)]
pub fn compose_with_binomial<S, F>(a: &DiffOp<S>, b: &DiffOp<S>, binom: F) -> Result<DiffOp<S>>
where
    S: Scalar,
    F: Fn(&MultiIndex, &MultiIndex) -> BigInt,
{
    check_dims(a.n, b.n)?;
    let mut acc = BTreeMap::new();
    for (i, f) in &a.terms {
        let splits: Vec<(MultiIndex, MultiIndex, S)> = i
            .sub_indices()
            .into_iter()
            .map(|k| {
                let rest = i.checked_sub(&k).expect("sub-index");
                let c = S::from_bigint(&binom(i, &k));
                (k, rest, c)
            })
            .collect();
        for (j, g) in &b.terms {
            for (k, rest, c) in &splits {
                let dg = g.partial_multi(rest);
                if dg.is_zero() || c.is_zero() {
                    continue;
                }
                let coeff = (f * &dg).scale(c);
                accumulate(&mut acc, k.add(j), coeff);
            }
        }
    }
    Ok(DiffOp { n: a.n, terms: acc })
}

pub(crate) fn render_terms<'a, S: Scalar>(
    terms: impl DoubleEndedIterator<Item = (&'a MultiIndex, &'a Poly<S>)>,
    var: &str,
    deriv: &str,
) -> String {
    let mut out = String::new();
    for (j, f) in terms.rev() {
        let piece = if j.is_zero() {
            f.render_with(var)
        } else {
            format!("({})*{}", f.render_with(var), render_monomial(j, deriv))
        };
        if out.is_empty() {
            out = piece;
        } else if let Some(rest) = piece.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&piece);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn accumulate<S: Scalar>(acc: &mut BTreeMap<MultiIndex, Poly<S>>, j: MultiIndex, f: Poly<S>) {
    let sum = match acc.remove(&j) {
        Some(g) => &g + &f,
        None => f,
    };
    if !sum.is_zero() {
        acc.insert(j, sum);
    }
}

impl<S: Scalar> fmt::Display for DiffOp<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with("t", "d"))
    }
}

macro_rules! op_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a, S: Scalar> $tr<&'a DiffOp<S>> for &'a DiffOp<S> {
            type Output = DiffOp<S>;
            fn $method(self, rhs: &'a DiffOp<S>) -> DiffOp<S> {
                self.$checked(rhs).expect("operator dimension mismatch")
            }
        }
    };
}

op_binop!(Add, add, checked_add);
op_binop!(Sub, sub, checked_sub);
// `*` is composition.
op_binop!(Mul, mul, compose);

impl<S: Scalar> Neg for &DiffOp<S> {
    type Output = DiffOp<S>;
    fn neg(self) -> DiffOp<S> {
        DiffOp::neg(self)
    }
}
