//! Upper half-plane geometry: points, oriented geodesics, the integer Möbius
//! action, hyperbolic distance, the geodesic flow and Ford circles.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exact::{BoundaryPoint, IntMatrix2, Rational, Real};

/// A coordinate that is exact when possible and `f64` otherwise.
#[derive(Clone, Debug, PartialEq)]
pub enum Coord {
    Exact(Real),
    Approx(f64),
}

impl Coord {
    pub fn to_f64(&self) -> f64 {
        match self {
            Coord::Exact(r) => r.to_f64(),
            Coord::Approx(v) => *v,
        }
    }

    pub fn exact(&self) -> Option<&Real> {
        match self {
            Coord::Exact(r) => Some(r),
            Coord::Approx(_) => None,
        }
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coord::Exact(r) => write!(f, "{r}"),
            Coord::Approx(v) => write!(f, "{v:.17e}"),
        }
    }
}

/// Point `x + iy` with `y > 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct HPoint {
    x: Coord,
    y: Coord,
}

impl HPoint {
    pub fn exact(x: Real, y: Real) -> Result<Self> {
        if !y.is_positive() {
            return Err(Error::domain("imaginary part must be positive"));
        }
        Ok(HPoint {
            x: Coord::Exact(x),
            y: Coord::Exact(y),
        })
    }

    pub fn approx(x: f64, y: f64) -> Result<Self> {
        if !x.is_finite() || !y.is_finite() {
            return Err(Error::PrecisionExhausted { bits: f64::MANTISSA_DIGITS });
        }
        if y <= 0.0 {
            return Err(Error::domain("imaginary part must be positive"));
        }
        Ok(HPoint {
            x: Coord::Approx(x),
            y: Coord::Approx(y),
        })
    }

    fn from_complex(z: Complex64) -> Result<Self> {
        if z.im <= 0.0 && z.im.is_finite() {
            // the exact point is in the half-plane; the float underflowed
            return Err(Error::PrecisionExhausted { bits: f64::MANTISSA_DIGITS });
        }
        HPoint::approx(z.re, z.im)
    }

    pub fn x(&self) -> &Coord {
        &self.x
    }

    pub fn y(&self) -> &Coord {
        &self.y
    }

    pub fn is_exact(&self) -> bool {
        matches!((&self.x, &self.y), (Coord::Exact(_), Coord::Exact(_)))
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(self.x.to_f64(), self.y.to_f64())
    }

    /// `m·z`, exact whenever the coordinates share a quadratic field.
    pub fn apply(&self, m: &IntMatrix2) -> HPoint {
        if let (Coord::Exact(x), Coord::Exact(y)) = (&self.x, &self.y) {
            if let Some(p) = apply_exact(m, x, y) {
                return p;
            }
        }
        let z = self.to_complex();
        let f = |v: &BigInt| v.to_string().parse::<f64>().unwrap_or(f64::NAN);
        let (a, b, c, d) = (f(&m.m11), f(&m.m12), f(&m.m21), f(&m.m22));
        let w = (z * a + b) / (z * c + d);
        HPoint {
            x: Coord::Approx(w.re),
            y: Coord::Approx(w.im),
        }
    }
}

// x' = ((ax+b)(cx+d) + ac·y²)/D, y' = y/D, D = (cx+d)² + c²y², for det 1
fn apply_exact(m: &IntMatrix2, x: &Real, y: &Real) -> Option<HPoint> {
    let ax_b = x.mul_int(&m.m11).add_int(&m.m12);
    let cx_d = x.mul_int(&m.m21).add_int(&m.m22);
    let y2 = y.checked_mul(y)?;
    let ac = &m.m11 * &m.m21;
    let c2 = &m.m21 * &m.m21;
    let den = cx_d.checked_mul(&cx_d)?.checked_add(&y2.mul_int(&c2))?;
    let num = ax_b.checked_mul(&cx_d)?.checked_add(&y2.mul_int(&ac))?;
    let nx = num.checked_div(&den)?;
    let ny = y.checked_div(&den)?;
    Some(HPoint {
        x: Coord::Exact(nx),
        y: Coord::Exact(ny),
    })
}

impl fmt::Display for HPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Oriented geodesic from `past` to `future`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Geodesic {
    past: BoundaryPoint,
    future: BoundaryPoint,
}

/// Builds the geodesic with the given feet.
pub fn geodesic_through(past: BoundaryPoint, future: BoundaryPoint) -> Result<Geodesic> {
    if past == future {
        return Err(Error::Degenerate(format!("both feet at {past}")));
    }
    Ok(Geodesic { past, future })
}

impl Geodesic {
    pub fn new(past: BoundaryPoint, future: BoundaryPoint) -> Result<Self> {
        geodesic_through(past, future)
    }

    pub fn past(&self) -> &BoundaryPoint {
        &self.past
    }

    pub fn future(&self) -> &BoundaryPoint {
        &self.future
    }

    pub fn is_vertical(&self) -> bool {
        self.past.is_infinite() || self.future.is_infinite()
    }

    /// Same geodesic with opposite orientation.
    pub fn reversed(&self) -> Geodesic {
        Geodesic {
            past: self.future.clone(),
            future: self.past.clone(),
        }
    }

    fn feet(&self) -> Option<(&Real, &Real)> {
        Some((self.past.finite()?, self.future.finite()?))
    }

    /// Real part of a vertical geodesic.
    pub fn vertical_x(&self) -> Option<&Real> {
        match (&self.past, &self.future) {
            (BoundaryPoint::Infinity, BoundaryPoint::Finite(x)) | (BoundaryPoint::Finite(x), BoundaryPoint::Infinity) => {
                Some(x)
            }
            _ => None,
        }
    }

    /// `(past + future)/2` for a semicircle.
    pub fn center(&self) -> Option<Coord> {
        let (p, f) = self.feet()?;
        Some(match p.checked_add(f) {
            Some(s) => Coord::Exact(s.checked_div(&Real::from_int(2)).expect("rational divisor")),
            None => Coord::Approx((p.to_f64() + f.to_f64()) / 2.0),
        })
    }

    /// `|future − past|/2` for a semicircle.
    pub fn radius(&self) -> Option<Coord> {
        let (p, f) = self.feet()?;
        Some(match f.checked_sub(p) {
            Some(s) => Coord::Exact(s.abs().checked_div(&Real::from_int(2)).expect("rational divisor")),
            None => Coord::Approx((f.to_f64() - p.to_f64()).abs() / 2.0),
        })
    }

    /// Whether `z` lies on the geodesic: exactly when both are exact and
    /// share a field, otherwise to a relative tolerance.
    pub fn contains(&self, z: &HPoint, tol: f64) -> bool {
        if let (Coord::Exact(x), Coord::Exact(y)) = (z.x(), z.y()) {
            if let Some(v) = self.vertical_x() {
                return x == v;
            }
            let (p, f) = self.feet().expect("semicircle");
            // (x − p)(x − f) + y² = 0
            let exact = x
                .checked_sub(p)
                .zip(x.checked_sub(f))
                .and_then(|(a, b)| a.checked_mul(&b))
                .zip(y.checked_mul(y))
                .and_then(|(a, b)| a.checked_add(&b));
            if let Some(v) = exact {
                return v.is_zero();
            }
        }
        let w = z.to_complex();
        if let Some(v) = self.vertical_x() {
            let v = v.to_f64();
            return (w.re - v).abs() <= tol * (1.0 + v.abs() + w.im);
        }
        let (p, f) = self.feet().expect("semicircle");
        let (p, f) = (p.to_f64(), f.to_f64());
        let r = (f - p).abs() / 2.0;
        let lhs = (w.re - p) * (w.re - f) + w.im * w.im;
        lhs.abs() <= tol * (r * r + 1.0)
    }
}

impl fmt::Display for Geodesic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.past, self.future)
    }
}

/// Applies `m` to both feet, keeping the orientation.
pub fn mobius_on_geodesic(m: &IntMatrix2, g: &Geodesic) -> Geodesic {
    Geodesic {
        past: m.apply(&g.past),
        future: m.apply(&g.future),
    }
}

/// Hyperbolic distance, via `d = 2 asinh(|z₁ − z₂| / (2√(y₁y₂)))`, which
/// avoids the cancellation of `acosh` near zero.
pub fn hyp_distance(z1: &HPoint, z2: &HPoint) -> f64 {
    let (a, b) = (z1.to_complex(), z2.to_complex());
    2.0 * ((a - b).norm() / (2.0 * (a.im * b.im).sqrt())).asinh()
}

/// A unit tangent vector on a geodesic, pointing toward the future foot.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitTangent {
    geodesic: Geodesic,
    base: HPoint,
}

const ON_GEODESIC_TOL: f64 = 1e-9;

impl UnitTangent {
    pub fn new(geodesic: Geodesic, base: HPoint) -> Result<Self> {
        if !geodesic.contains(&base, ON_GEODESIC_TOL) {
            return Err(Error::domain(format!("{base} is not on {geodesic}")));
        }
        Ok(UnitTangent { geodesic, base })
    }

    pub fn geodesic(&self) -> &Geodesic {
        &self.geodesic
    }

    pub fn base(&self) -> &HPoint {
        &self.base
    }

    /// `m·u`.
    pub fn apply(&self, m: &IntMatrix2) -> UnitTangent {
        UnitTangent {
            geodesic: mobius_on_geodesic(m, &self.geodesic),
            base: self.base.apply(m),
        }
    }
}

// Real matrix with positive determinant sending past ↦ 0 and future ↦ ∞.
fn to_axis(g: &Geodesic) -> [f64; 4] {
    match (&g.past, &g.future) {
        (BoundaryPoint::Finite(p), BoundaryPoint::Infinity) => [1.0, -p.to_f64(), 0.0, 1.0],
        (BoundaryPoint::Infinity, BoundaryPoint::Finite(f)) => [0.0, -1.0, 1.0, -f.to_f64()],
        (BoundaryPoint::Finite(p), BoundaryPoint::Finite(f)) => {
            let (p, f) = (p.to_f64(), f.to_f64());
            if p > f {
                [1.0, -p, 1.0, -f]
            } else {
                [1.0, -p, -1.0, f]
            }
        }
        (BoundaryPoint::Infinity, BoundaryPoint::Infinity) => unreachable!("feet differ"),
    }
}

fn mobius_f64(m: [f64; 4], z: Complex64) -> Complex64 {
    (z * m[0] + m[1]) / (z * m[2] + m[3])
}

/// Moves the base point a signed hyperbolic length `t` toward the future
/// foot, by conjugating the geodesic to the imaginary axis.
pub fn flow(u: &UnitTangent, t: f64) -> Result<UnitTangent> {
    if t == 0.0 {
        return Ok(u.clone());
    }
    let h = to_axis(&u.geodesic);
    let inv = [h[3], -h[1], -h[2], h[0]];
    let w = mobius_f64(h, u.base.to_complex());
    // on the axis the flow is multiplication by eᵗ; drop the rounding residue in Re
    let moved = Complex64::new(0.0, w.norm() * t.exp());
    let z = mobius_f64(inv, moved);
    Ok(UnitTangent {
        geodesic: u.geodesic.clone(),
        base: HPoint::from_complex(z)?,
    })
}

/// Intersection of a semicircle with the vertical line `x = x0`:
/// `y² = (x0 − past)(future − x0)`. Exact when `y²` is rational or the
/// intersection height is a quadratic surd over `x0`'s field.
pub fn cross_vertical(g: &Geodesic, x0: &Rational) -> Result<HPoint> {
    let (p, f) = g
        .feet()
        .ok_or_else(|| Error::domain("a vertical geodesic has no crossing with another vertical"))?;
    let x = Real::from(x0.clone());
    let (lo, hi) = if p < f { (p, f) } else { (f, p) };
    if !(lo < &x && &x < hi) {
        return Err(Error::domain(format!("{g} does not cross x = {x0}")));
    }
    let y2 = x.checked_sub(lo).zip(hi.checked_sub(&x)).and_then(|(a, b)| a.checked_mul(&b));
    if let Some(Real::Rational(r)) = &y2 {
        return HPoint::exact(x, Real::sqrt_of_rational(r));
    }
    let (pf, ff, xf) = (lo.to_f64(), hi.to_f64(), x.to_f64());
    let y = ((xf - pf) * (ff - xf)).sqrt();
    Ok(HPoint {
        x: Coord::Exact(x),
        y: Coord::Approx(y),
    })
}

/// Ford circle at `p/q`: tangent to the real line there, radius `1/(2q²)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FordCircle {
    pub center: HPoint,
    pub radius: Rational,
}

pub fn ford_circle(p: &Rational) -> FordCircle {
    let q = p.denom();
    let radius = Rational::new(1.into(), BigInt::from(2) * q * q);
    FordCircle {
        center: HPoint::exact(Real::from(p.clone()), Real::from(radius.clone())).expect("positive radius"),
        radius,
    }
}

/// Compares the squared center distance with the squared radius sum:
/// `Equal` means tangent, `Greater` disjoint, `Less` overlapping.
pub fn ford_relation(a: &Rational, b: &Rational) -> Ordering {
    let (ca, cb) = (ford_circle(a), ford_circle(b));
    let (ya, yb) = (ca.radius.clone(), cb.radius.clone());
    let dx = a - b;
    let dy = &ya - &yb;
    let dist2 = &dx * &dx + &dy * &dy;
    let rsum = &ya + &yb;
    dist2.cmp(&(&rsum * &rsum))
}

/// `|ps − qr|` for reduced fractions.
pub fn unimodular_gap(a: &Rational, b: &Rational) -> BigInt {
    (a.numer() * b.denom() - a.denom() * b.numer()).abs()
}
