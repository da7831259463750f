use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{BoundaryPoint, Rational, Real};

/// A 2×2 integer matrix acting on the boundary by fractional linear maps.
/// Elements of the modular group have determinant 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix2 {
    pub m11: BigInt,
    pub m12: BigInt,
    pub m21: BigInt,
    pub m22: BigInt,
}

impl IntMatrix2 {
    pub fn new(m11: impl Into<BigInt>, m12: impl Into<BigInt>, m21: impl Into<BigInt>, m22: impl Into<BigInt>) -> Self {
        IntMatrix2 {
            m11: m11.into(),
            m12: m12.into(),
            m21: m21.into(),
            m22: m22.into(),
        }
    }

    pub fn identity() -> Self {
        Self::new(1, 0, 0, 1)
    }

    /// `z ↦ −1/z`
    pub fn s() -> Self {
        Self::new(0, -1, 1, 0)
    }

    /// `z ↦ z + 1`
    pub fn t() -> Self {
        Self::new(1, 1, 0, 1)
    }

    /// `z ↦ z + k`
    pub fn translation(k: impl Into<BigInt>) -> Self {
        Self::new(1, k, 0, 1)
    }

    pub fn det(&self) -> BigInt {
        &self.m11 * &self.m22 - &self.m12 * &self.m21
    }

    pub fn trace(&self) -> BigInt {
        &self.m11 + &self.m22
    }

    pub fn is_modular(&self) -> bool {
        self.det().is_one()
    }

    /// Inverse of a unimodular matrix (det = ±1).
    pub fn inverse(&self) -> Self {
        let det = self.det();
        assert!(det == BigInt::one() || det == -BigInt::one(), "matrix is not unimodular");
        IntMatrix2 {
            m11: &self.m22 * &det,
            m12: -&self.m12 * &det,
            m21: -&self.m21 * &det,
            m22: &self.m11 * &det,
        }
    }

    /// `(m11·p + m12)/(m21·p + m22)` with the pole sent to infinity.
    pub fn apply(&self, p: &BoundaryPoint) -> BoundaryPoint {
        match p {
            BoundaryPoint::Infinity => {
                if self.m21.is_zero() {
                    BoundaryPoint::Infinity
                } else {
                    BoundaryPoint::Finite(Real::Rational(Rational::new(self.m11.clone(), self.m21.clone())))
                }
            }
            BoundaryPoint::Finite(x) => {
                let den = x.mul_int(&self.m21).add_int(&self.m22);
                if den.is_zero() {
                    return BoundaryPoint::Infinity;
                }
                let num = x.mul_int(&self.m11).add_int(&self.m12);
                BoundaryPoint::Finite(&num / &den)
            }
        }
    }
}

impl Mul<&IntMatrix2> for &IntMatrix2 {
    type Output = IntMatrix2;
    fn mul(self, o: &IntMatrix2) -> IntMatrix2 {
        IntMatrix2 {
            m11: &self.m11 * &o.m11 + &self.m12 * &o.m21,
            m12: &self.m11 * &o.m12 + &self.m12 * &o.m22,
            m21: &self.m21 * &o.m11 + &self.m22 * &o.m21,
            m22: &self.m21 * &o.m12 + &self.m22 * &o.m22,
        }
    }
}

impl Mul for IntMatrix2 {
    type Output = IntMatrix2;
    fn mul(self, o: IntMatrix2) -> IntMatrix2 {
        &self * &o
    }
}

impl fmt::Display for IntMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.m11, self.m12, self.m21, self.m22)
    }
}

/// Convenience wrapper around [`IntMatrix2::apply`].
pub fn mobius_apply(m: &IntMatrix2, p: &BoundaryPoint) -> BoundaryPoint {
    m.apply(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surd(a: i64, b: i64, c: i64, d: i64) -> BoundaryPoint {
        BoundaryPoint::Finite(Real::from_surd_parts(a.into(), b.into(), c.into(), d.into()))
    }

    #[test]
    fn s_sends_infinity_to_zero() {
        assert_eq!(IntMatrix2::s().apply(&BoundaryPoint::Infinity), BoundaryPoint::int(0));
        assert_eq!(IntMatrix2::s().apply(&BoundaryPoint::int(0)), BoundaryPoint::Infinity);
    }

    #[test]
    fn t_translates() {
        assert_eq!(IntMatrix2::t().apply(&BoundaryPoint::ratio(1, 2)), BoundaryPoint::ratio(3, 2));
    }

    #[test]
    fn return_move_on_one_plus_sqrt3() {
        let m = IntMatrix2::new(0, -1, 1, -2);
        assert_eq!(m.apply(&surd(1, 1, 1, 3)), surd(-1, -1, 2, 3));
    }

    #[test]
    fn inverse_and_det() {
        let m = IntMatrix2::new(2, 1, 1, 1);
        assert!(m.is_modular());
        assert_eq!(&m * &m.inverse(), IntMatrix2::identity());
    }
}
