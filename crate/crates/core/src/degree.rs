//! Degrees and orders that may be minus infinity.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

/// Total degree of a polynomial or order of an operator.
///
/// The zero polynomial and the zero operator have no degree; that value sorts
/// below every finite degree and absorbs addition, like `-inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Degree {
    NegInf,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(d) => Some(d),
        }
    }

    pub fn is_neg_inf(self) -> bool {
        self == Degree::NegInf
    }

    /// `self <= bound` where a negative bound admits only `NegInf`.
    pub fn at_most(self, bound: i64) -> bool {
        match self {
            Degree::NegInf => true,
            Degree::Finite(d) => (d as i64) <= bound,
        }
    }
}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Degree {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Degree::NegInf, Degree::NegInf) => Ordering::Equal,
            (Degree::NegInf, _) => Ordering::Less,
            (_, Degree::NegInf) => Ordering::Greater,
            (Degree::Finite(a), Degree::Finite(b)) => a.cmp(b),
        }
    }
}

impl Add for Degree {
    type Output = Degree;

    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInf,
        }
    }
}

impl From<usize> for Degree {
    fn from(d: usize) -> Self {
        Degree::Finite(d)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neg_inf_absorbs_and_sorts_first() {
        assert_eq!(Degree::NegInf + Degree::Finite(3), Degree::NegInf);
        assert_eq!(Degree::Finite(2) + Degree::Finite(3), Degree::Finite(5));
        assert!(Degree::NegInf < Degree::Finite(0));
        assert_eq!(Degree::NegInf.max(Degree::Finite(1)), Degree::Finite(1));
        assert!(Degree::NegInf.at_most(-1));
        assert!(!Degree::Finite(0).at_most(-1));
        assert_eq!(Degree::NegInf.to_string(), "-inf");
    }
}
