//! Configurable-precision binary floating point with directed rounding.
//!
//! Used to certify conversions of exact values to `f64` and for the floating
//! side of the measure experiments. When a result cannot be certified within
//! the allowed precision the caller gets [`Error::PrecisionExhausted`].

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{Rational, Real};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rounding {
    Down,
    Up,
}

/// `mantissa · 2^exponent`, with at most `precision` significant bits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryFloat {
    mantissa: BigInt,
    exponent: i64,
}

fn shift_round(m: &BigInt, shift: u64, mode: Rounding) -> BigInt {
    // m / 2^shift rounded in the given direction
    let divisor = BigInt::from(1) << shift;
    match mode {
        Rounding::Down => m.div_floor(&divisor),
        Rounding::Up => -((-m).div_floor(&divisor)),
    }
}

impl BinaryFloat {
    pub fn zero() -> Self {
        BinaryFloat {
            mantissa: BigInt::zero(),
            exponent: 0,
        }
    }

    pub fn from_parts(mantissa: BigInt, exponent: i64) -> Self {
        BinaryFloat { mantissa, exponent }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    /// Rounds to `precision` significant bits.
    pub fn round(&self, precision: u32, mode: Rounding) -> Self {
        let bits = self.mantissa.bits();
        if bits <= precision as u64 {
            return self.clone();
        }
        let shift = bits - precision as u64;
        BinaryFloat {
            mantissa: shift_round(&self.mantissa, shift, mode),
            exponent: self.exponent + shift as i64,
        }
    }

    fn from_rational(r: &Rational, precision: u32, mode: Rounding) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        let num_bits = r.numer().bits() as i64;
        let den_bits = r.denom().bits() as i64;
        let scale = precision as i64 + 2 - (num_bits - den_bits);
        let (n, d) = if scale >= 0 {
            (r.numer() << scale as u64, r.denom().clone())
        } else {
            (r.numer().clone(), r.denom() << (-scale) as u64)
        };
        let q = match mode {
            Rounding::Down => n.div_floor(&d),
            Rounding::Up => -((-n).div_floor(&d)),
        };
        BinaryFloat {
            mantissa: q,
            exponent: -scale,
        }
        .round(precision, mode)
    }

    /// Directed rounding of an exact real value.
    pub fn from_real(x: &Real, precision: u32, mode: Rounding) -> Self {
        let s = match x {
            Real::Rational(r) => return Self::from_rational(r, precision, mode),
            Real::Surd(s) => s,
        };
        // magnitude estimate, refined when cancellation eats significant bits
        let mag = (s.a().abs() + s.b().abs() * (s.d().sqrt() + BigInt::from(1))).bits() as i64 - s.c().bits() as i64;
        let mut extra = 0i64;
        loop {
            let scale = precision as i64 + 4 + extra - mag;
            let (shift_up, c) = if scale >= 0 {
                (scale as u64, s.c().clone())
            } else {
                (0, s.c() << (-scale) as u64)
            };
            let a_scaled = s.a() << shift_up;
            let b_sq = (s.b() * s.b() * s.d()) << (2 * shift_up);
            let root = b_sq.sqrt();
            // b√d·2^shift lies strictly inside (t_lo, t_hi)
            let (t_lo, t_hi) = if s.b().is_positive() {
                (root.clone(), root + 1)
            } else {
                (-root.clone() - 1, -root)
            };
            let lo = (&a_scaled + t_lo).div_floor(&c);
            let hi = -((-(&a_scaled + t_hi)).div_floor(&c));
            let q = match mode {
                Rounding::Down => lo.clone(),
                Rounding::Up => hi.clone(),
            };
            if q.bits() >= precision as u64 + 2 || extra > 4 * precision as i64 + 256 {
                return BinaryFloat {
                    mantissa: q,
                    exponent: -scale,
                }
                .round(precision, mode);
            }
            extra += precision as i64 + 16;
        }
    }

    fn align(&self, other: &Self) -> (BigInt, BigInt, i64) {
        let e = self.exponent.min(other.exponent);
        (
            &self.mantissa << (self.exponent - e) as u64,
            &other.mantissa << (other.exponent - e) as u64,
            e,
        )
    }

    pub fn add(&self, other: &Self, precision: u32, mode: Rounding) -> Self {
        let (a, b, e) = self.align(other);
        BinaryFloat {
            mantissa: a + b,
            exponent: e,
        }
        .round(precision, mode)
    }

    pub fn sub(&self, other: &Self, precision: u32, mode: Rounding) -> Self {
        self.add(&other.neg(), precision, mode)
    }

    pub fn mul(&self, other: &Self, precision: u32, mode: Rounding) -> Self {
        BinaryFloat {
            mantissa: &self.mantissa * &other.mantissa,
            exponent: self.exponent + other.exponent,
        }
        .round(precision, mode)
    }

    pub fn div(&self, other: &Self, precision: u32, mode: Rounding) -> Self {
        assert!(!other.is_zero(), "division by zero");
        let shift = precision as u64 + 2 + other.mantissa.bits();
        let n = &self.mantissa << shift;
        let q = match mode {
            Rounding::Down => n.div_floor(&other.mantissa),
            Rounding::Up => -((-n).div_floor(&other.mantissa)),
        };
        BinaryFloat {
            mantissa: q,
            exponent: self.exponent - other.exponent - shift as i64,
        }
        .round(precision, mode)
    }

    pub fn sqrt(&self, precision: u32, mode: Rounding) -> Self {
        assert!(!self.mantissa.is_negative(), "square root of a negative value");
        if self.is_zero() {
            return Self::zero();
        }
        // make the exponent even and leave room for 2·precision bits
        let mut shift = 2 * precision as i64 + 4 - self.mantissa.bits() as i64;
        if shift < 0 {
            shift = 0;
        }
        if (self.exponent - shift) % 2 != 0 {
            shift += 1;
        }
        let m = &self.mantissa << shift as u64;
        let mut r = m.sqrt();
        if mode == Rounding::Up && &r * &r != m {
            r += 1;
        }
        BinaryFloat {
            mantissa: r,
            exponent: (self.exponent - shift) / 2,
        }
        .round(precision, mode)
    }

    pub fn neg(&self) -> Self {
        BinaryFloat {
            mantissa: -&self.mantissa,
            exponent: self.exponent,
        }
    }

    /// Exact comparison of two binary floats.
    pub fn compare(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.align(other);
        a.cmp(&b)
    }

    /// Round-to-nearest-even conversion to `f64` (normal range).
    pub fn to_f64(&self) -> f64 {
        if self.mantissa.is_zero() {
            return 0.0;
        }
        let neg = self.mantissa.sign() == Sign::Minus;
        let mut m = self.mantissa.magnitude().clone();
        let mut e = self.exponent;
        let bits = m.bits();
        if bits > 53 {
            let shift = bits - 53;
            let rem = &m & ((num_bigint::BigUint::from(1u32) << shift) - 1u32);
            let half = num_bigint::BigUint::from(1u32) << (shift - 1);
            m >>= shift;
            e += shift as i64;
            let round_up = match rem.cmp(&half) {
                Ordering::Greater => true,
                Ordering::Equal => m.bit(0),
                Ordering::Less => false,
            };
            if round_up {
                m += 1u32;
            }
        }
        let v = m.to_f64().unwrap_or(f64::INFINITY) * pow2(e);
        if neg {
            -v
        } else {
            v
        }
    }
}

fn pow2(e: i64) -> f64 {
    if e > 2000 {
        return f64::INFINITY;
    }
    if e < -2000 {
        return 0.0;
    }
    // split so each factor stays in the normal range
    let mut v = 1.0f64;
    let mut rest = e;
    while rest > 1000 {
        v *= 2f64.powi(1000);
        rest -= 1000;
    }
    while rest < -1000 {
        v *= 2f64.powi(-1000);
        rest += 1000;
    }
    v * 2f64.powi(rest as i32)
}

/// A closed interval `[lo, hi]` of binary floats.
#[derive(Clone, Debug)]
pub struct Interval {
    pub lo: BinaryFloat,
    pub hi: BinaryFloat,
}

impl Interval {
    pub fn of_real(x: &Real, precision: u32) -> Self {
        Interval {
            lo: BinaryFloat::from_real(x, precision, Rounding::Down),
            hi: BinaryFloat::from_real(x, precision, Rounding::Up),
        }
    }

    /// Sign of every point in the interval, if it is constant.
    pub fn sign(&self) -> Option<Ordering> {
        let zero = BinaryFloat::zero();
        let lo = self.lo.compare(&zero);
        let hi = self.hi.compare(&zero);
        if lo == Ordering::Greater {
            Some(Ordering::Greater)
        } else if hi == Ordering::Less {
            Some(Ordering::Less)
        } else if lo == Ordering::Equal && hi == Ordering::Equal {
            Some(Ordering::Equal)
        } else {
            None
        }
    }
}

/// Correctly rounded `f64` of an exact value, doubling the working precision
/// from 64 bits up to `max_bits`.
pub fn to_f64_checked(x: &Real, max_bits: u32) -> Result<f64> {
    let mut bits = 64u32.min(max_bits.max(1));
    loop {
        let iv = Interval::of_real(x, bits);
        let lo = iv.lo.to_f64();
        let hi = iv.hi.to_f64();
        if lo == hi {
            return Ok(lo);
        }
        if bits >= max_bits {
            return Err(Error::PrecisionExhausted { bits });
        }
        bits = (bits * 2).min(max_bits);
    }
}
