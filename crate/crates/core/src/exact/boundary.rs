use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;

use super::{QuadSurd, Rational, Real};

/// A point of the boundary `ℝ ∪ {∞}` of the upper half-plane.
///
/// Ordering treats `Infinity` as the maximum; the circular structure of the
/// boundary is handled by callers that need it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BoundaryPoint {
    Finite(Real),
    Infinity,
}

impl BoundaryPoint {
    pub fn int(n: impl Into<BigInt>) -> Self {
        BoundaryPoint::Finite(Real::from_int(n))
    }

    pub fn ratio(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Self {
        BoundaryPoint::Finite(Real::from_ratio(p, q))
    }

    pub fn finite(&self) -> Option<&Real> {
        match self {
            BoundaryPoint::Finite(x) => Some(x),
            BoundaryPoint::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, BoundaryPoint::Infinity)
    }

    pub fn is_rational_or_infinite(&self) -> bool {
        match self {
            BoundaryPoint::Finite(x) => x.is_rational(),
            BoundaryPoint::Infinity => true,
        }
    }

    /// `p/q` for rational points, `1/0` for infinity, `None` for surds.
    pub fn as_fraction(&self) -> Option<(BigInt, BigInt)> {
        match self {
            BoundaryPoint::Infinity => Some((BigInt::from(1), BigInt::from(0))),
            BoundaryPoint::Finite(Real::Rational(r)) => Some((r.numer().clone(), r.denom().clone())),
            BoundaryPoint::Finite(Real::Surd(_)) => None,
        }
    }

    pub fn neg(&self) -> BoundaryPoint {
        match self {
            BoundaryPoint::Finite(x) => BoundaryPoint::Finite(-x),
            BoundaryPoint::Infinity => BoundaryPoint::Infinity,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            BoundaryPoint::Finite(x) => x.to_f64(),
            BoundaryPoint::Infinity => f64::INFINITY,
        }
    }
}

impl PartialOrd for BoundaryPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BoundaryPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (BoundaryPoint::Infinity, BoundaryPoint::Infinity) => Ordering::Equal,
            (BoundaryPoint::Infinity, _) => Ordering::Greater,
            (_, BoundaryPoint::Infinity) => Ordering::Less,
            (BoundaryPoint::Finite(x), BoundaryPoint::Finite(y)) => x.compare(y),
        }
    }
}

impl From<Real> for BoundaryPoint {
    fn from(x: Real) -> Self {
        BoundaryPoint::Finite(x)
    }
}

impl From<Rational> for BoundaryPoint {
    fn from(x: Rational) -> Self {
        BoundaryPoint::Finite(Real::Rational(x))
    }
}

impl From<QuadSurd> for BoundaryPoint {
    fn from(x: QuadSurd) -> Self {
        BoundaryPoint::Finite(Real::Surd(x))
    }
}

impl fmt::Display for BoundaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryPoint::Finite(x) => write!(f, "{}", x),
            BoundaryPoint::Infinity => write!(f, "inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_is_maximal() {
        let minus_sqrt2 = BoundaryPoint::Finite(Real::from_surd_parts(0.into(), (-1).into(), 1.into(), 2.into()));
        assert_eq!(minus_sqrt2.cmp(&BoundaryPoint::Infinity), Ordering::Less);
        assert_eq!(BoundaryPoint::Infinity.cmp(&BoundaryPoint::int(1_000_000)), Ordering::Greater);
        assert_eq!(BoundaryPoint::Infinity.cmp(&BoundaryPoint::Infinity), Ordering::Equal);
    }
}
