//! Sparse multivariate polynomials in `t1..tn`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::multi_index::MultiIndex;
use crate::scalar::Scalar;

/// A polynomial in `n` variables, stored as a map from exponent vector to
/// nonzero coefficient. Variables are numbered from 1 in the public API.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<S> {
    n: usize,
    terms: BTreeMap<MultiIndex, S>,
}

pub(crate) fn check_dims(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// `i! / (i-j)!` as an integer, i.e. the factor produced by `d^j (t^i)`.
fn falling(i: u32, j: u32) -> BigInt {
    let mut acc = BigInt::one();
    for f in (i - j + 1)..=i {
        acc *= f;
    }
    acc
}

impl<S: Scalar> Poly<S> {
    pub fn zero(n: usize) -> Self {
        Poly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, S::one())
    }

    pub fn constant(n: usize, c: S) -> Self {
        Self::monomial(n, MultiIndex::zero(n), c)
    }

    pub fn monomial(n: usize, exponents: MultiIndex, c: S) -> Self {
        assert_eq!(exponents.len(), n, "monomial exponent length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponents, c);
        }
        Poly { n, terms }
    }

    /// The coordinate `t_i`, `1 <= i <= n`.
    pub fn var(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        Ok(Self::monomial(n, MultiIndex::unit(n, i - 1), S::one()))
    }

    /// Builds a canonical polynomial, summing repeated exponents and dropping zeros.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (MultiIndex, S)>) -> Result<Self> {
        let mut acc = BTreeMap::new();
        for (m, c) in terms {
            check_dims(n, m.len())?;
            accumulate(&mut acc, m, c);
        }
        Ok(Poly { n, terms: prune(acc) })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&MultiIndex, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &MultiIndex) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .map(|m| Degree::Finite(m.degree()))
            .max()
            .unwrap_or(Degree::NegInf)
    }

    pub fn leading_term(&self) -> Option<(&MultiIndex, &S)> {
        self.terms.iter().next_back()
    }

    /// The constant `c` if this polynomial has degree `<= 0`.
    pub fn as_constant(&self) -> Option<S> {
        match self.degree() {
            Degree::NegInf => Some(S::zero()),
            Degree::Finite(0) => Some(self.coeff(&MultiIndex::zero(self.n))),
            _ => None,
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_dims(self.n, other.n)?;
        let mut acc = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut acc, m.clone(), c.clone());
        }
        Ok(Poly {
            n: self.n,
            terms: prune(acc),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        check_dims(self.n, other.n)?;
        let mut acc = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                accumulate(&mut acc, m1.add(m2), c1.clone() * c2.clone());
            }
        }
        Ok(Poly {
            n: self.n,
            terms: prune(acc),
        })
    }

    pub fn neg(&self) -> Self {
        Poly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Poly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    /// Multiplies by the monomial `c * t^m`.
    pub fn mul_monomial(&self, m: &MultiIndex, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Poly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.add(m), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The formal partial derivative `d/dt_i`, `1 <= i <= n`.
    pub fn partial(&self, i: usize) -> Result<Self> {
        if i == 0 || i > self.n {
            return Err(Error::IndexOutOfRange { index: i, n: self.n });
        }
        Ok(self.partial_multi(&MultiIndex::unit(self.n, i - 1)))
    }

    /// `d^J p` for a derivative multi-index `J` of length `n`.
    pub fn partial_multi(&self, j: &MultiIndex) -> Self {
        assert_eq!(j.len(), self.n, "derivative multi-index length");
        if j.is_zero() {
            return self.clone();
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let Some(rest) = m.checked_sub(j) else { continue };
            let factor: BigInt = m
                .exponents()
                .iter()
                .zip(j.exponents())
                .map(|(&i, &k)| falling(i, k))
                .product();
            // rest is distinct per m, and factor > 0 in characteristic zero
            terms.insert(rest, c.clone() * S::from_bigint(&factor));
        }
        Poly { n: self.n, terms }
    }

    pub fn eval(&self, point: &[S]) -> Result<S> {
        check_dims(self.n, point.len())?;
        let mut total = S::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    v = v * x.clone();
                }
            }
            total = total + v;
        }
        Ok(total)
    }

    /// Remainder of dividing `self` by the single divisor `g` in graded lex.
    ///
    /// `{g}` is a Gröbner basis of `(g)`, so the remainder is zero exactly
    /// when `g` divides `self`.
    pub fn reduce_by(&self, g: &Self) -> Result<Self> {
        check_dims(self.n, g.n)?;
        let (lead_m, lead_c) = g.leading_term().ok_or(Error::DivisionByZero)?;
        let mut p = self.terms.clone();
        let mut rem = BTreeMap::new();
        while let Some((m, c)) = p.pop_last() {
            match m.checked_sub(lead_m) {
                Some(shift) => {
                    let q = c / lead_c.clone();
                    // the leading term cancels against m, which is already popped
                    for (gm, gc) in g.terms.iter().rev().skip(1) {
                        accumulate(&mut p, gm.add(&shift), -(gc.clone() * q.clone()));
                    }
                    p.retain(|_, v| !v.is_zero());
                }
                None => {
                    rem.insert(m, c);
                }
            }
        }
        Ok(Poly { n: self.n, terms: rem })
    }

    /// Renders with variables `<prefix>1..<prefix>n`.
    pub fn render_with(&self, prefix: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mono = render_monomial(m, prefix);
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        out
    }
}

pub(crate) fn render_monomial(m: &MultiIndex, prefix: &str) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("{prefix}{}", i + 1)),
            _ => parts.push(format!("{prefix}{}^{e}", i + 1)),
        }
    }
    parts.join("*")
}

fn accumulate<S: Scalar>(acc: &mut BTreeMap<MultiIndex, S>, m: MultiIndex, c: S) {
    match acc.get_mut(&m) {
        Some(v) => *v = v.clone() + c,
        None => {
            acc.insert(m, c);
        }
    }
}

fn prune<S: Scalar>(mut acc: BTreeMap<MultiIndex, S>) -> BTreeMap<MultiIndex, S> {
    acc.retain(|_, c| !c.is_zero());
    acc
}

impl<S: Scalar> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with("t"))
    }
}

macro_rules! poly_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a, S: Scalar> $tr<&'a Poly<S>> for &'a Poly<S> {
            type Output = Poly<S>;
            /// Panics on a variable-count mismatch.
            fn $method(self, rhs: &'a Poly<S>) -> Poly<S> {
                self.$checked(rhs).expect("polynomial dimension mismatch")
            }
        }
        impl<S: Scalar> $tr for Poly<S> {
            type Output = Poly<S>;
            fn $method(self, rhs: Poly<S>) -> Poly<S> {
                self.$checked(&rhs).expect("polynomial dimension mismatch")
            }
        }
    };
}

poly_binop!(Add, add, checked_add);
poly_binop!(Sub, sub, checked_sub);
poly_binop!(Mul, mul, checked_mul);

impl<S: Scalar> Neg for &Poly<S> {
    type Output = Poly<S>;
    fn neg(self) -> Poly<S> {
        Poly::neg(self)
    }
}

impl<S: Scalar> Neg for Poly<S> {
    type Output = Poly<S>;
    fn neg(self) -> Poly<S> {
        Poly::neg(&self)
    }
}
