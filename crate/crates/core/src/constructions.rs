//! Operators built from their values on low-degree monomials.
//!
//! A linear map `A` on polynomials of degree `<= k` is recorded by its values
//! on the monomial basis. [`from_jet_map`] returns the unique operator of
//! order `<= k` that agrees with `A` there; [`restriction`] goes the other
//! way. An operator of order `<= k` that vanishes on degree `<= k` is zero,
//! so the two are mutually inverse on operators of order `<= k`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::multi_index::{monomials_of_degree, monomials_up_to, MultiIndex};
use crate::poly::{check_dims, Poly};
use crate::scalar::Scalar;
use crate::weyl::DiffOp;

/// Values `A(t^I)` for every `|I| <= k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetMap<S> {
    n: usize,
    k: usize,
    values: BTreeMap<MultiIndex, Poly<S>>,
}

impl<S: Scalar> JetMap<S> {
    pub fn zero(n: usize, k: usize) -> Self {
        let values = monomials_up_to(n, k).into_iter().map(|m| (m, Poly::zero(n))).collect();
        JetMap { n, k, values }
    }

    /// Builds a jet map from explicit entries; basis monomials without an
    /// entry map to zero.
    pub fn new(n: usize, k: usize, entries: impl IntoIterator<Item = (MultiIndex, Poly<S>)>) -> Result<Self> {
        let mut map = Self::zero(n, k);
        for (m, v) in entries {
            check_dims(n, m.len())?;
            check_dims(n, v.n())?;
            if m.degree() > k {
                return Err(Error::JetMap(format!("monomial {m} has degree above {k}")));
            }
            map.values.insert(m, v);
        }
        Ok(map)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree_bound(&self) -> usize {
        self.k
    }

    pub fn get(&self, m: &MultiIndex) -> Option<&Poly<S>> {
        self.values.get(m)
    }

    /// Entries in basis order (see [`monomials_up_to`]).
    pub fn entries(&self) -> impl Iterator<Item = (MultiIndex, &Poly<S>)> + '_ {
        monomials_up_to(self.n, self.k).into_iter().map(move |m| {
            let v = &self.values[&m];
            (m, v)
        })
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(Poly::is_zero)
    }
}

/// One line per basis monomial: `<i_1,...,i_n> -> <polynomial>`.
impl<S: Scalar> fmt::Display for JetMap<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (m, v) in self.entries() {
            writeln!(f, "{m} -> {v}")?;
        }
        Ok(())
    }
}

/// `(f / I!) d^I`: sends `t^I` to `f` and kills every other monomial of
/// degree `<= |I|`.
pub fn d_basis<S: Scalar>(f: &Poly<S>, i: &MultiIndex) -> DiffOp<S> {
    let inv = S::one() / S::from_bigint(&i.factorial());
    DiffOp::term(f.scale(&inv), i.clone())
}

/// The operator of order `<= k` whose restriction to degree `<= k` is `a`.
///
/// Built degree by degree: the correction added at degree `d` is
/// `sum_{|I| = d} d_basis(A(t^I) - D(t^I), I)` where `D` is the operator
/// built so far, which leaves all lower-degree values untouched.
pub fn from_jet_map<S: Scalar>(a: &JetMap<S>) -> DiffOp<S> {
    let mut d = DiffOp::zero(a.n);
    for deg in 0..=a.k {
        let mut correction = DiffOp::zero(a.n);
        for m in monomials_of_degree(a.n, deg) {
            let mono = Poly::monomial(a.n, m.clone(), S::one());
            let have = d.apply(&mono).expect("same dimension");
            let residual = &a.values[&m] - &have;
            if !residual.is_zero() {
                correction = &correction + &d_basis(&residual, &m);
            }
        }
        d = &d + &correction;
    }
    d
}

/// Values of `d` on all monomials of degree `<= k`.
pub fn restriction<S: Scalar>(d: &DiffOp<S>, k: usize) -> JetMap<S> {
    let n = d.n();
    let values = monomials_up_to(n, k)
        .into_iter()
        .map(|m| {
            let v = d
                .apply(&Poly::monomial(n, m.clone(), S::one()))
                .expect("same dimension");
            (m, v)
        })
        .collect();
    JetMap { n, k, values }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;
    type Op = DiffOp<Q>;

    fn mi(e: &[u32]) -> MultiIndex {
        MultiIndex::new(e.to_vec())
    }
    fn t(n: usize, i: usize) -> Poly<Q> {
        Poly::var(n, i).unwrap()
    }
    fn mono(e: &[u32]) -> Poly<Q> {
        Poly::monomial(e.len(), mi(e), Q::from_integer(1.into()))
    }

    #[test]
    fn d_basis_examples() {
        let op = d_basis(&Poly::one(1), &mi(&[2]));
        assert_eq!(op.apply(&mono(&[2])).unwrap(), Poly::one(1));
        let op = d_basis(&t(2, 2), &mi(&[1, 0]));
        assert!(op.apply(&t(2, 2)).unwrap().is_zero());
        let f = &t(2, 1) + &t(2, 2).pow(2);
        assert_eq!(d_basis(&f, &mi(&[0, 0])), Op::from_poly(f));
    }

    #[test]
    fn d_basis_is_triangular() {
        let f = &t(2, 1) - &t(2, 2).pow(3);
        for i in monomials_up_to(2, 3) {
            let op = d_basis(&f, &i);
            for m in monomials_up_to(2, i.degree()) {
                let out = op
                    .apply(&Poly::monomial(2, m.clone(), Q::from_integer(1.into())))
                    .unwrap();
                if m == i {
                    assert_eq!(out, f);
                } else {
                    assert!(out.is_zero(), "d_basis({i}) on {m}");
                }
            }
        }
    }

    #[test]
    fn from_jet_map_examples() {
        let a = JetMap::new(2, 1, [(mi(&[1, 0]), t(2, 2))]).unwrap();
        assert_eq!(from_jet_map(&a), Op::term(t(2, 2), mi(&[1, 0])));

        let ident = JetMap::new(
            2,
            3,
            monomials_up_to(2, 3).into_iter().map(|m| {
                let p = Poly::monomial(2, m.clone(), Q::from_integer(1.into()));
                (m, p)
            }),
        )
        .unwrap();
        assert_eq!(from_jet_map(&ident), Op::identity(2));
        assert!(from_jet_map(&JetMap::<Q>::zero(3, 2)).is_zero());
    }

    #[test]
    fn naive_sum_is_corrected() {
        // A(1) = 1, A(t1) = 0: the naive sum m_1 + 0*d1 gives t1 on t1.
        let a = JetMap::<Q>::new(1, 1, [(mi(&[0]), Poly::one(1))]).unwrap();
        let d = from_jet_map(&a);
        assert_eq!(restriction(&d, 1), a);
        assert_eq!(d.to_string(), "(-t1)*d1 + 1");
    }

    #[test]
    fn restriction_examples() {
        let r = restriction(&Op::partial(2, 1).unwrap(), 1);
        assert_eq!(r.get(&mi(&[0, 0])), Some(&Poly::zero(2)));
        assert_eq!(r.get(&mi(&[1, 0])), Some(&Poly::one(2)));
        assert_eq!(r.get(&mi(&[0, 1])), Some(&Poly::zero(2)));
        assert!(restriction(&Op::zero(2), 3).is_zero());
        assert_eq!(r.to_string(), "0,0 -> 0\n1,0 -> 1\n0,1 -> 0\n");
    }

    #[test]
    fn jet_map_validation() {
        assert!(JetMap::new(2, 1, [(mi(&[1, 1]), t(2, 1))]).is_err());
        assert!(JetMap::new(2, 1, [(mi(&[1]), t(2, 1))]).is_err());
    }
}
