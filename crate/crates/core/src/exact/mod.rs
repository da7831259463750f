//! Exact arithmetic: big integers, reduced rationals, canonical quadratic
//! surds, boundary points of the upper half-plane and integer Möbius maps.

mod boundary;
pub mod factor;
mod matrix;
mod parse;
pub mod precision;
mod real;
mod surd;

pub use boundary::BoundaryPoint;
pub use matrix::{mobius_apply, IntMatrix2};
pub use parse::{parse_boundary, parse_real};
pub use real::Real;
pub use surd::QuadSurd;

/// Reduced rational with positive denominator.
pub type Rational = num_rational::BigRational;

/// Galois conjugate `(a − b√d)/c`.
pub fn surd_conjugate(x: &QuadSurd) -> QuadSurd {
    x.conjugate()
}

/// Total order on the boundary with infinity as the maximum.
pub fn compare(x: &BoundaryPoint, y: &BoundaryPoint) -> std::cmp::Ordering {
    x.cmp(y)
}

/// Greatest integer not exceeding `x`.
pub fn floor_of(x: &Real) -> num_bigint::BigInt {
    x.floor()
}
