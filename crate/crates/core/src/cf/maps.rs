use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::Real;

fn half() -> Real {
    Real::from_ratio(1, 2)
}

/// `G(x) = 1/x − ⌊1/x⌋` on `[0, 1)`, with `G(0) = 0`.
pub fn gauss_map(x: &Real) -> Result<Real> {
    if x.is_negative() || *x >= Real::one() {
        return Err(Error::domain("gauss map is defined on [0, 1)"));
    }
    if x.is_zero() {
        return Ok(Real::zero());
    }
    Ok(x.recip().expect("nonzero").fract())
}

/// `F(x) = x/(1−x)` on `[0, 1/2]`, `(1−x)/x` on `(1/2, 1]`.
pub fn farey_map(x: &Real) -> Result<Real> {
    if x.is_negative() || *x > Real::one() {
        return Err(Error::domain("farey map is defined on [0, 1]"));
    }
    let one_minus = x.mul_int(&BigInt::from(-1)).add_int(&BigInt::one());
    let out = if *x <= half() {
        x / &one_minus
    } else {
        &one_minus / x
    };
    Ok(out)
}

/// Runs the Farey map through its left branch until the right branch fires
/// once. Returns `(n, y)` with `n` the number of left steps plus one and `y`
/// the point after the right branch; this agrees with `(⌊1/x⌋, G(x))`.
pub fn farey_accelerate(x: &Real) -> Result<(BigInt, Real)> {
    if !x.is_positive() || *x > Real::one() {
        return Err(Error::domain("farey acceleration is defined on (0, 1]"));
    }
    // k left steps send x to x/(1 − kx); count them in one jump
    let inv = x.recip().expect("positive");
    // x ≤ 1, so ⌊1/x⌋ ≥ 1
    let mut k: BigInt = inv.floor() - 1;
    let jumped = |k: &BigInt| {
        let den = x.mul_int(&-k).add_int(&BigInt::one());
        x / &den
    };
    let mut y = jumped(&k);
    // a value landing exactly on 1/2 still takes the left branch
    while y <= half() {
        k += 1;
        y = jumped(&k);
    }
    let one_minus = y.mul_int(&BigInt::from(-1)).add_int(&BigInt::one());
    Ok((k + 1, &one_minus / &y))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Real {
        Real::from_ratio(p, q)
    }

    // literal iteration of the Farey map, one step at a time
    fn accelerate_oracle(x: &Real) -> (BigInt, Real) {
        let mut x = x.clone();
        let mut n = BigInt::one();
        while x <= half() {
            x = farey_map(&x).unwrap();
            n += 1;
        }
        (n, farey_map(&x).unwrap())
    }

    #[test]
    fn gauss_and_farey_examples() {
        assert_eq!(gauss_map(&r(2, 5)).unwrap(), r(1, 2));
        assert_eq!(farey_map(&r(2, 5)).unwrap(), r(2, 3));
        assert_eq!(gauss_map(&r(0, 1)).unwrap(), r(0, 1));
        assert_eq!(farey_map(&r(1, 2)).unwrap(), r(1, 1));
        assert_eq!(farey_map(&r(1, 1)).unwrap(), r(0, 1));
        assert!(gauss_map(&r(1, 1)).is_err());
        assert!(farey_map(&r(3, 2)).is_err());
    }

    #[test]
    fn accelerate_examples() {
        assert_eq!(farey_accelerate(&r(2, 5)).unwrap(), (BigInt::from(2), r(1, 2)));
        assert_eq!(farey_accelerate(&r(1, 2)).unwrap(), (BigInt::from(2), r(0, 1)));
        assert_eq!(farey_accelerate(&r(1, 1)).unwrap(), (BigInt::from(1), r(0, 1)));
        assert!(farey_accelerate(&r(0, 1)).is_err());
    }

    #[test]
    fn accelerate_matches_literal_iteration() {
        for q in 1..40i64 {
            for p in 1..=q {
                let x = r(p, q);
                assert_eq!(farey_accelerate(&x).unwrap(), accelerate_oracle(&x), "x = {p}/{q}");
            }
        }
        let s = Real::from_surd_parts((-1).into(), 1.into(), 7.into(), 5.into());
        assert_eq!(farey_accelerate(&s).unwrap(), accelerate_oracle(&s));
    }
}
