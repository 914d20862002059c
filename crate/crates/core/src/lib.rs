//! Differential operators with polynomial coefficients, computed exactly.
//!
//! The algebra of differential operators on `Q[t1..tn]` is the Weyl algebra:
//! every operator has a unique normal form `sum_J f_J d^J` ([`DiffOp`]).
//! On top of that this crate provides
//!
//! - the order of an operator decided purely from commutators with
//!   coordinate multiplications ([`grothendieck`]),
//! - principal symbols and a normal-ordered quantization ([`symbols`]),
//! - reconstruction of an operator from its values on low-degree monomials
//!   ([`constructions`]),
//! - a parser for operator expressions ([`expr`]),
//! - a seeded randomized harness checking the algebraic laws ([`laws`]).
//!
//! All types are generic over the coefficient field ([`Scalar`]); the `Q*`
//! aliases fix it to exact rationals, which is what the harness, parser and
//! CLI use.

pub mod constructions;
pub mod degree;
pub mod error;
pub mod expr;
pub mod grothendieck;
pub mod laws;
pub mod multi_index;
pub mod poly;
pub mod scalar;
pub mod symbols;
pub mod weyl;

pub use constructions::JetMap;
pub use degree::Degree;
pub use error::{Error, Result};
pub use multi_index::{monomials_up_to, MultiIndex};
pub use poly::Poly;
pub use scalar::Scalar;
pub use symbols::SymbolElem;
pub use weyl::DiffOp;

/// Exact rational coefficients.
pub type Q = num_rational::BigRational;
pub type QPoly = Poly<Q>;
pub type QDiffOp = DiffOp<Q>;
pub type QSymbol = SymbolElem<Q>;
pub type QJetMap = JetMap<Q>;

pub type F64Poly = Poly<f64>;
pub type F64DiffOp = DiffOp<f64>;
pub type F32Poly = Poly<f32>;
pub type F32DiffOp = DiffOp<f32>;
