use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::factor::squarefree_decompose;
use crate::error::{Error, Result};

/// A real quadratic irrational `(a + b√d)/c` in canonical form:
/// `d > 1` squarefree, `b ≠ 0`, `c > 0` and `gcd(a, b, c) = 1`.
///
/// Two surds have the same value exactly when their fields agree, so the
/// derived `Eq` and `Hash` are value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadSurd {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl QuadSurd {
    /// Builds a surd, folding square factors of `d` into `b` and reducing.
    /// Rejects values that are rational (`b = 0` or `d` a perfect square).
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::domain("zero denominator"));
        }
        if b.is_zero() {
            return Err(Error::domain("b = 0 is a rational value"));
        }
        if !d.is_positive() {
            return Err(Error::domain("radicand must be positive"));
        }
        let (s, m) = squarefree_decompose(d.magnitude());
        if m.is_one() {
            return Err(Error::domain("perfect-square radicand is a rational value"));
        }
        let b = b * BigInt::from_biguint(Sign::Plus, s);
        Ok(Self::from_squarefree(a, b, c, BigInt::from_biguint(Sign::Plus, m)))
    }

    /// Caller guarantees `d` squarefree and > 1, `b ≠ 0`, `c ≠ 0`.
    pub(crate) fn from_squarefree(mut a: BigInt, mut b: BigInt, mut c: BigInt, d: BigInt) -> Self {
        debug_assert!(!b.is_zero() && !c.is_zero());
        if c.is_negative() {
            a = -a;
            b = -b;
            c = -c;
        }
        let g = a.gcd(&b).gcd(&c);
        if !g.is_one() {
            a /= &g;
            b /= &g;
            c /= &g;
        }
        QuadSurd { a, b, c, d }
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    /// `(a − b√d)/c`.
    pub fn conjugate(&self) -> QuadSurd {
        QuadSurd {
            a: self.a.clone(),
            b: -&self.b,
            c: self.c.clone(),
            d: self.d.clone(),
        }
    }

    /// Sign of the value.
    pub fn signum(&self) -> Ordering {
        sign_of_sum(&self.a, &self.b, &self.d)
    }

    /// Greatest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        // b√d is irrational, so it lies strictly between s and s + 1
        let root = (&self.b * &self.b * &self.d).sqrt();
        let s = if self.b.is_positive() { root } else { -root - 1 };
        (&self.a + s).div_floor(&self.c)
    }
}

/// Sign of `a + b√d` for squarefree `d > 1`.
pub(crate) fn sign_of_sum(a: &BigInt, b: &BigInt, d: &BigInt) -> Ordering {
    let sa = a.sign();
    let sb = b.sign();
    match (sa, sb) {
        (_, Sign::NoSign) => a.cmp(&BigInt::zero()),
        (Sign::NoSign, _) => b.cmp(&BigInt::zero()),
        _ if sa == sb => a.cmp(&BigInt::zero()),
        _ => {
            // opposite signs: the term with larger square wins; equality is impossible
            if a * a > b * b * d {
                a.cmp(&BigInt::zero())
            } else {
                b.cmp(&BigInt::zero())
            }
        }
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = if self.b.is_negative() { '-' } else { '+' };
        write!(
            f,
            "({}{}{}*sqrt({}))/{}",
            self.a,
            op,
            self.b.abs(),
            self.d,
            self.c
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(a: i64, b: i64, c: i64, d: i64) -> QuadSurd {
        QuadSurd::new(a.into(), b.into(), c.into(), d.into()).unwrap()
    }

    #[test]
    fn canonicalization_collapses_equal_values() {
        assert_eq!(s(2, 2, 2, 2), s(1, 1, 1, 2));
        assert_eq!(s(0, 1, 1, 8), s(0, 2, 1, 2));
        assert_eq!(s(1, 1, -2, 5), s(-1, -1, 2, 5));
    }

    #[test]
    fn canonical_fields_are_idempotent() {
        let x = s(3, -4, 7, 10);
        let y = QuadSurd::new(x.a().clone(), x.b().clone(), x.c().clone(), x.d().clone()).unwrap();
        assert_eq!(x.a(), y.a());
        assert_eq!(x.b(), y.b());
        assert_eq!(x.c(), y.c());
        assert_eq!(x.d(), y.d());
    }

    #[test]
    fn rejects_rational_values() {
        assert!(QuadSurd::new(1.into(), 1.into(), 1.into(), 4.into()).is_err());
        assert!(QuadSurd::new(1.into(), 0.into(), 1.into(), 2.into()).is_err());
        assert!(QuadSurd::new(1.into(), 1.into(), 0.into(), 2.into()).is_err());
    }

    #[test]
    fn floor_brackets() {
        assert_eq!(s(0, 1, 1, 2).floor(), BigInt::from(1));
        assert_eq!(s(0, -1, 1, 2).floor(), BigInt::from(-2));
        assert_eq!(s(1, 1, 2, 5).floor(), BigInt::from(1));
        assert_eq!(s(-1, 1, 2, 5).floor(), BigInt::from(0));
        assert_eq!(s(-7, 1, 3, 3).floor(), BigInt::from(-2));
    }

    #[test]
    fn conjugate_is_involution() {
        let x = s(2, 3, 7, 5);
        assert_eq!(x.conjugate().conjugate(), x);
        assert_eq!(s(1, 1, 1, 3).conjugate(), s(1, -1, 1, 3));
    }

    #[test]
    fn display_grammar() {
        assert_eq!(s(1, -1, 1, 3).to_string(), "(1-1*sqrt(3))/1");
        assert_eq!(s(0, 1, 2, 5).to_string(), "(0+1*sqrt(5))/2");
    }
}
