use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

use super::factor::squarefree_decompose;
use super::surd::{sign_of_sum, QuadSurd};
use super::Rational;

/// An exact finite real that is rational or a real quadratic irrational.
///
/// Arithmetic is closed inside a single quadratic field `ℚ(√d)`. Mixing two
/// different fields is only possible through the `checked_*` methods; the
/// operator impls panic on a field mismatch. Comparison works across fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Real {
    Rational(Rational),
    Surd(QuadSurd),
}

// (a + b√d)/c with b = 0 for rationals; d is 1 when no field is attached.
struct Parts {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: Option<BigInt>,
}

impl Parts {
    fn into_real(self) -> Real {
        match self.d {
            Some(d) if !self.b.is_zero() => Real::Surd(QuadSurd::from_squarefree(self.a, self.b, self.c, d)),
            _ => Real::Rational(Rational::new(self.a, self.c)),
        }
    }
}

fn common_field(x: &Option<BigInt>, y: &Option<BigInt>) -> Option<Option<BigInt>> {
    match (x, y) {
        (None, None) => Some(None),
        (Some(d), None) | (None, Some(d)) => Some(Some(d.clone())),
        (Some(d), Some(e)) if d == e => Some(Some(d.clone())),
        _ => None,
    }
}

impl Real {
    pub fn zero() -> Real {
        Real::Rational(Rational::zero())
    }

    pub fn one() -> Real {
        Real::Rational(Rational::one())
    }

    pub fn from_int(n: impl Into<BigInt>) -> Real {
        Real::Rational(Rational::from_integer(n.into()))
    }

    pub fn from_ratio(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Real {
        Real::Rational(Rational::new(p.into(), q.into()))
    }

    /// `(a + b√d)/c`, folded to a rational when `b = 0` or `d` is a perfect square.
    pub fn from_surd_parts(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Real {
        assert!(!c.is_zero(), "zero denominator");
        assert!(!d.is_negative(), "negative radicand");
        if b.is_zero() || d.is_zero() {
            return Real::Rational(Rational::new(a, c));
        }
        let (s, m) = squarefree_decompose(d.magnitude());
        let b = b * BigInt::from_biguint(Sign::Plus, s);
        if m.is_one() {
            Real::Rational(Rational::new(a + b, c))
        } else {
            Real::Surd(QuadSurd::from_squarefree(a, b, c, BigInt::from_biguint(Sign::Plus, m)))
        }
    }

    /// Square root of a nonnegative rational, exact when it is quadratic.
    pub fn sqrt_of_rational(r: &Rational) -> Real {
        assert!(!r.is_negative(), "square root of a negative rational");
        // √(p/q) = √(pq)/q
        let pq = r.numer() * r.denom();
        Real::from_surd_parts(BigInt::zero(), BigInt::one(), r.denom().clone(), pq)
    }

    fn parts(&self) -> Parts {
        match self {
            Real::Rational(r) => Parts {
                a: r.numer().clone(),
                b: BigInt::zero(),
                c: r.denom().clone(),
                d: None,
            },
            Real::Surd(s) => Parts {
                a: s.a().clone(),
                b: s.b().clone(),
                c: s.c().clone(),
                d: Some(s.d().clone()),
            },
        }
    }

    /// Radicand of the quadratic field, `None` for rationals.
    pub fn field(&self) -> Option<&BigInt> {
        match self {
            Real::Rational(_) => None,
            Real::Surd(s) => Some(s.d()),
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Real::Rational(_))
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Real::Rational(r) => Some(r),
            Real::Surd(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Real::Rational(r) if r.is_zero())
    }

    pub fn signum(&self) -> Ordering {
        match self {
            Real::Rational(r) => r.numer().sign().cmp(&Sign::NoSign),
            Real::Surd(s) => s.signum(),
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn abs(&self) -> Real {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Galois conjugate; rationals are fixed.
    pub fn conjugate(&self) -> Real {
        match self {
            Real::Rational(_) => self.clone(),
            Real::Surd(s) => Real::Surd(s.conjugate()),
        }
    }

    pub fn floor(&self) -> BigInt {
        match self {
            Real::Rational(r) => r.floor().to_integer(),
            Real::Surd(s) => s.floor(),
        }
    }

    /// `self − floor(self)`, in `[0, 1)`.
    pub fn fract(&self) -> Real {
        self - &Real::from_int(self.floor())
    }

    pub fn checked_add(&self, other: &Real) -> Option<Real> {
        let x = self.parts();
        let y = other.parts();
        let d = common_field(&x.d, &y.d)?;
        Some(
            Parts {
                a: &x.a * &y.c + &y.a * &x.c,
                b: &x.b * &y.c + &y.b * &x.c,
                c: &x.c * &y.c,
                d,
            }
            .into_real(),
        )
    }

    pub fn checked_sub(&self, other: &Real) -> Option<Real> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Real) -> Option<Real> {
        let x = self.parts();
        let y = other.parts();
        let d = common_field(&x.d, &y.d)?;
        let dd = d.clone().unwrap_or_else(BigInt::zero);
        Some(
            Parts {
                a: &x.a * &y.a + &x.b * &y.b * &dd,
                b: &x.a * &y.b + &x.b * &y.a,
                c: &x.c * &y.c,
                d,
            }
            .into_real(),
        )
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Real> {
        match self {
            Real::Rational(r) if r.is_zero() => None,
            Real::Rational(r) => Some(Real::Rational(r.recip())),
            Real::Surd(s) => {
                // c/(a + b√d) = c(a − b√d)/(a² − b²d)
                let norm = s.a() * s.a() - s.b() * s.b() * s.d();
                Some(
                    Parts {
                        a: s.c() * s.a(),
                        b: -(s.c() * s.b()),
                        c: norm,
                        d: Some(s.d().clone()),
                    }
                    .into_real(),
                )
            }
        }
    }

    pub fn checked_div(&self, other: &Real) -> Option<Real> {
        self.checked_mul(&other.recip()?)
    }

    pub fn mul_int(&self, k: &BigInt) -> Real {
        match self {
            Real::Rational(r) => Real::Rational(r * Rational::from_integer(k.clone())),
            Real::Surd(s) => Parts {
                a: s.a() * k,
                b: s.b() * k,
                c: s.c().clone(),
                d: Some(s.d().clone()),
            }
            .into_real(),
        }
    }

    pub fn add_int(&self, k: &BigInt) -> Real {
        match self {
            Real::Rational(r) => Real::Rational(r + Rational::from_integer(k.clone())),
            Real::Surd(s) => Parts {
                a: s.a() + k * s.c(),
                b: s.b().clone(),
                c: s.c().clone(),
                d: Some(s.d().clone()),
            }
            .into_real(),
        }
    }

    /// Exact three-way comparison, valid across different quadratic fields.
    pub fn compare(&self, other: &Real) -> Ordering {
        if let Some(diff) = self.checked_sub(other) {
            return diff.signum();
        }
        // x − y = (α + β√d₁ + γ√d₂)/(c₁c₂) with d₁ ≠ d₂
        let x = self.parts();
        let y = other.parts();
        let (d1, d2) = (x.d.unwrap(), y.d.unwrap());
        let alpha = &x.a * &y.c - &y.a * &x.c;
        let beta = &x.b * &y.c;
        let gamma = -(&y.b * &x.c);
        let su = sign_of_sum(&alpha, &beta, &d1);
        let sw = gamma.sign().cmp(&Sign::NoSign);
        if su == Ordering::Equal {
            return sw;
        }
        if sw == Ordering::Equal || su == sw {
            return su;
        }
        // opposite signs: compare u² with γ²d₂, both in ℚ(√d₁)
        let ra = &alpha * &alpha + &beta * &beta * &d1 - &gamma * &gamma * &d2;
        let rb = BigInt::from(2) * &alpha * &beta;
        if sign_of_sum(&ra, &rb, &d1) == Ordering::Greater {
            su
        } else {
            sw
        }
    }

    /// Nearest `f64`, certified by interval evaluation.
    pub fn to_f64(&self) -> f64 {
        super::precision::to_f64_checked(self, 1 << 14).unwrap_or(f64::NAN)
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Real {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl From<Rational> for Real {
    fn from(r: Rational) -> Self {
        Real::Rational(r)
    }
}

impl From<QuadSurd> for Real {
    fn from(s: QuadSurd) -> Self {
        Real::Surd(s)
    }
}

impl From<BigInt> for Real {
    fn from(n: BigInt) -> Self {
        Real::from_int(n)
    }
}

impl From<i64> for Real {
    fn from(n: i64) -> Self {
        Real::from_int(n)
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        match self {
            Real::Rational(r) => Real::Rational(-r),
            Real::Surd(s) => Real::Surd(QuadSurd::from_squarefree(-s.a(), -s.b(), s.c().clone(), s.d().clone())),
        }
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        -&self
    }
}

macro_rules! field_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                self.$checked(rhs)
                    .unwrap_or_else(|| panic!("{} of values from different quadratic fields", stringify!($method)))
            }
        }
        impl $tr<Real> for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                (&self).$method(rhs)
            }
        }
        impl $tr<Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                self.$method(&rhs)
            }
        }
    };
}

field_op!(Add, add, checked_add);
field_op!(Sub, sub, checked_sub);
field_op!(Mul, mul, checked_mul);

impl Div<&Real> for &Real {
    type Output = Real;
    fn div(self, rhs: &Real) -> Real {
        let inv = rhs.recip().expect("division by zero");
        self.checked_mul(&inv)
            .expect("div of values from different quadratic fields")
    }
}

impl Div<Real> for Real {
    type Output = Real;
    fn div(self, rhs: Real) -> Real {
        &self / &rhs
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Real::Rational(r) => write!(f, "{}", r),
            Real::Surd(s) => write!(f, "{}", s),
        }
    }
}
