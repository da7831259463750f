//! Geodesics on the modular surface and regular continued fractions.
//!
//! The crate codes geodesics of the upper half-plane against the Farey
//! tessellation, builds the decorated symbolic system of digit sequences with
//! a parity bit, realizes the first return of the geodesic flow to the
//! imaginary-axis cross-section, and checks the Gauss map as a factor of it.
//! All symbolic work is exact (big integers, rationals, quadratic surds).

pub mod cf;
pub mod error;
pub mod exact;
pub mod farey;
pub mod hyperbolic;
pub mod measures;
pub mod section;

pub use error::{Error, Result};
