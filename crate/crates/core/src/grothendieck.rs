//! Order of a differential operator decided from commutators alone.
//!
//! `D` has order `<= i` when `[D, m_a]` has order `<= i - 1` for every
//! multiplier `a`, with order `<= 0` meaning `R`-linear. Only the coordinate
//! multipliers `m_{t_j}` are tested: `ad_D(m_a) = [D, m_a]` satisfies
//! `[D, m_{ab}] = [D, m_a] o m_b + m_a o [D, m_b]`, so vanishing and order
//! bounds proven on generators extend to every polynomial multiplier.

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::Scalar;
use crate::weyl::DiffOp;

fn coordinate_commutators<S: Scalar>(d: &DiffOp<S>) -> impl Iterator<Item = DiffOp<S>> + '_ {
    (1..=d.n()).map(move |j| {
        let mt = DiffOp::coordinate(d.n(), j).expect("coordinate in range");
        d.commutator(&mt).expect("same dimension")
    })
}

/// Whether `d` has order at most `i`, computed by the commutator recursion.
pub fn is_order_at_most<S: Scalar>(d: &DiffOp<S>, i: usize) -> bool {
    if d.is_zero() {
        return true;
    }
    if i == 0 {
        // Commuting with every m_{t_j} means R-linear, hence m_{d(1)}.
        return coordinate_commutators(d).all(|c| c.is_zero());
    }
    coordinate_commutators(d).all(|c| is_order_at_most(&c, i - 1))
}

/// The least `i` with [`is_order_at_most`], searched independently of the
/// normal form up to the syntactic order.
///
/// # Panics
///
/// If no `i <= syntactic_order(d)` passes, which would contradict the fact
/// that `t_i`, `d_j` generate all differential operators.
pub fn grothendieck_order<S: Scalar>(d: &DiffOp<S>) -> Degree {
    let Degree::Finite(bound) = d.syntactic_order() else {
        return Degree::NegInf;
    };
    for i in 0..=bound {
        if is_order_at_most(d, i) {
            return Degree::Finite(i);
        }
    }
    panic!("operator {d} is not of order <= {bound} by the commutator recursion");
}

/// Syntactic test: every stored term has exactly one derivative.
pub fn is_derivation<S: Scalar>(d: &DiffOp<S>) -> bool {
    d.terms().all(|(j, _)| j.degree() == 1)
}

/// Whether `d(pq) == d(p) q + p d(q)` for this particular pair.
pub fn satisfies_leibniz<S: Scalar>(d: &DiffOp<S>, p: &Poly<S>, q: &Poly<S>) -> Result<bool> {
    let lhs = d.apply(&p.checked_mul(q)?)?;
    let rhs = &(&d.apply(p)? * q) + &(p * &d.apply(q)?);
    Ok(lhs == rhs)
}

/// Splits an operator of order `<= 1` as `X + m_a` with `X` a derivation and
/// `a = d(1)`.
pub fn split_order_one<S: Scalar>(d: &DiffOp<S>) -> Result<(DiffOp<S>, Poly<S>)> {
    let order = d.syntactic_order();
    if !order.at_most(1) {
        return Err(Error::OrderAboveOne(order));
    }
    let a = d.apply(&Poly::one(d.n()))?;
    let x = d.checked_sub(&DiffOp::from_poly(a.clone()))?;
    Ok((x, a))
}
