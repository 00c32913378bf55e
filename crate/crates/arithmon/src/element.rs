//! Elements of the supported monoids.
//!
//! Two carriers cover every family: fixed-dimension vectors of non-negative
//! integers (numerical monoids are the one-dimensional case) and exact
//! non-negative rationals in lowest terms. Public values are never negative;
//! signed coordinates exist only transiently inside divisibility tests.

use crate::error::{Error, Result};
use num::rational::Ratio;
use num::Zero;
use std::fmt;

/// Exact rational scalar, kept in lowest terms by the underlying type.
pub type Rational = Ratio<i64>;

/// A monoid element: an integer vector or a non-negative rational.
///
/// The derived ordering is lexicographic on coordinates for vectors, which
/// is the canonical element order used throughout (atom listings, report
/// rows, factorization keys).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    /// Vector with non-negative coordinates; dimension is fixed per monoid.
    IntVec(Vec<i64>),
    /// Non-negative rational in lowest terms.
    Rat(Rational),
}

impl Element {
    /// Builds a vector element, rejecting negative coordinates and empty vectors.
    pub fn vec(coords: Vec<i64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Input("element must have at least one coordinate".into()));
        }
        if let Some(c) = coords.iter().find(|&&c| c < 0) {
            return Err(Error::Input(format!("negative coordinate {} in element", c)));
        }
        Ok(Element::IntVec(coords))
    }

    /// Builds a one-dimensional vector element.
    pub fn scalar(n: i64) -> Result<Self> {
        Self::vec(vec![n])
    }

    /// Builds a rational element from numerator and denominator.
    pub fn rat(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::Input("zero denominator".into()));
        }
        let q = Rational::new(numer, denom);
        if q < Rational::zero() {
            return Err(Error::Input(format!("negative rational {}/{}", numer, denom)));
        }
        Ok(Element::Rat(q))
    }

    /// Number of coordinates, or `None` for rationals.
    pub fn dimension(&self) -> Option<usize> {
        match self {
            Element::IntVec(v) => Some(v.len()),
            Element::Rat(_) => None,
        }
    }

    /// Coordinate slice of a vector element.
    pub fn coords(&self) -> Result<&[i64]> {
        match self {
            Element::IntVec(v) => Ok(v),
            Element::Rat(_) => Err(Error::Input("expected a vector element, got a rational".into())),
        }
    }

    /// Rational value of a scalar element.
    pub fn rational(&self) -> Result<Rational> {
        match self {
            Element::Rat(q) => Ok(*q),
            Element::IntVec(_) => {
                Err(Error::Input("expected a rational element, got a vector".into()))
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Element::IntVec(v) => v.iter().all(|&c| c == 0),
            Element::Rat(q) => q.is_zero(),
        }
    }

    /// Componentwise sum. Fails on mixed kinds or mismatched dimensions.
    pub fn add(&self, other: &Element) -> Result<Element> {
        match (self, other) {
            (Element::IntVec(a), Element::IntVec(b)) => {
                if a.len() != b.len() {
                    return Err(Error::Dimension { expected: a.len(), got: b.len() });
                }
                Ok(Element::IntVec(a.iter().zip(b).map(|(x, y)| x + y).collect()))
            }
            (Element::Rat(a), Element::Rat(b)) => Ok(Element::Rat(a + b)),
            _ => Err(Error::Input("cannot mix vector and rational elements".into())),
        }
    }

    /// Componentwise difference as raw signed coordinates, for divisibility
    /// tests. Not an `Element`: the result may be negative.
    pub fn signed_diff(&self, other: &Element) -> Result<SignedDiff> {
        match (self, other) {
            (Element::IntVec(a), Element::IntVec(b)) => {
                if a.len() != b.len() {
                    return Err(Error::Dimension { expected: a.len(), got: b.len() });
                }
                Ok(SignedDiff::Vec(a.iter().zip(b).map(|(x, y)| x - y).collect()))
            }
            (Element::Rat(a), Element::Rat(b)) => Ok(SignedDiff::Rat(a - b)),
            _ => Err(Error::Input("cannot mix vector and rational elements".into())),
        }
    }

    /// n-fold sum of this element with itself.
    pub fn repeat(&self, n: u64) -> Element {
        match self {
            Element::IntVec(v) => {
                Element::IntVec(v.iter().map(|&c| c * n as i64).collect())
            }
            Element::Rat(q) => Element::Rat(q * Rational::from_integer(n as i64)),
        }
    }
}

/// Raw componentwise difference; see [`Element::signed_diff`].
#[derive(Clone, Debug, PartialEq)]
pub enum SignedDiff {
    Vec(Vec<i64>),
    Rat(Rational),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::IntVec(v) if v.len() == 1 => write!(f, "{}", v[0]),
            Element::IntVec(v) => {
                write!(f, "(")?;
                for (i, c) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{}", c)?;
                }
                write!(f, ")")
            }
            Element::Rat(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.to_integer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_negative_coordinates() {
        assert!(Element::vec(vec![1, -2]).is_err());
        assert!(Element::rat(-3, 4).is_err());
        assert!(Element::rat(3, -4).is_err());
        assert!(Element::rat(1, 0).is_err());
    }

    #[test]
    fn rational_is_reduced() {
        let e = Element::rat(6, 4).unwrap();
        assert_eq!(e.to_string(), "3/2");
        assert_eq!(e, Element::rat(3, 2).unwrap());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Element::scalar(7).unwrap().to_string(), "7");
        assert_eq!(Element::vec(vec![1, 0, 2]).unwrap().to_string(), "(1, 0, 2)");
        assert_eq!(Element::rat(8, 2).unwrap().to_string(), "4");
    }

    #[test]
    fn vector_order_is_lexicographic() {
        let a = Element::vec(vec![0, 5, 5]).unwrap();
        let b = Element::vec(vec![1, 0, 0]).unwrap();
        assert!(a < b);
    }

    #[test]
    fn signed_diff_can_go_negative() {
        let a = Element::vec(vec![1, 0]).unwrap();
        let b = Element::vec(vec![0, 3]).unwrap();
        assert_eq!(a.signed_diff(&b).unwrap(), SignedDiff::Vec(vec![1, -3]));
    }

    #[test]
    fn add_checks_dimension() {
        let a = Element::vec(vec![1, 0]).unwrap();
        let b = Element::scalar(2).unwrap();
        assert!(a.add(&b).is_err());
    }
}
