use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{CfExpansion, Convergent};
use crate::error::{Error, Result};
use crate::exact::{Rational, Real};

/// Intermediate fraction `(a·p_{n−1} + p_{n−2})/(a·q_{n−1} + q_{n−2})` at
/// level `n`, `1 ≤ a < a_n`, with `p_{−1}/q_{−1} = 1/0` and `p_{−2}/q_{−2} = 0/1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mediant {
    pub level: usize,
    pub a: BigInt,
    pub value: Rational,
}

/// Intermediate fractions for levels `1..n`, in order of level then `a`.
/// Requires the same `n` digits as `convergents(cf, n)`.
pub fn mediant_convergents(cf: &CfExpansion, n: usize) -> Result<Vec<Mediant>> {
    let conv = super::convergents(cf, n)?;
    let unit = |p: i32, q: i32| Convergent {
        index: 0,
        p: p.into(),
        q: q.into(),
    };
    let mut out = Vec::new();
    for level in 1..n {
        let an = cf.digit(level).ok_or(Error::Exhausted {
            available: level,
            requested: n,
        })?;
        let prev = &conv[level - 1];
        let prev2 = if level >= 2 { conv[level - 2].clone() } else { unit(1, 0) };
        let mut a = BigInt::one();
        while a < an {
            let p = &a * &prev.p + &prev2.p;
            let q = &a * &prev.q + &prev2.q;
            out.push(Mediant {
                level,
                a: a.clone(),
                value: Rational::new(p, q),
            });
            a += 1;
        }
    }
    Ok(out)
}

fn distance(x: &Real, r: &Rational) -> Real {
    let diff = x.checked_sub(&Real::from(r.clone())).expect("rational shifts stay in the field");
    diff.abs()
}

/// `|x − p/q| < |x − c/d|` for every rational `c/d` with `1 ≤ d < q`.
///
/// For each `d` only the two numerators adjacent to `x·d` can be nearest.
pub fn is_best_approx_first_kind(x: &Real, p: &Rational) -> bool {
    let q = p.denom().clone();
    let err = distance(x, p);
    let mut d = BigInt::one();
    while d < q {
        let c = x.mul_int(&d).floor();
        for cand in [c.clone(), c + 1] {
            let other = distance(x, &Rational::new(cand, d.clone()));
            if other.compare(&err) != Ordering::Greater {
                return false;
            }
        }
        d += 1;
    }
    debug_assert!(!q.is_zero());
    true
}

#[cfg(test)]
mod tests {
    use super::super::ints;
    use super::*;

    fn rat(p: i64, q: i64) -> Rational {
        Rational::new(p.into(), q.into())
    }

    #[test]
    fn mediants_of_0_2_3() {
        let cf = CfExpansion::finite(0, ints([2, 3])).unwrap();
        let m = mediant_convergents(&cf, 3).unwrap();
        let level2: Vec<_> = m.iter().filter(|m| m.level == 2).map(|m| m.value.clone()).collect();
        // direct enumeration of (a·p₁ + p₀)/(a·q₁ + q₀) with p₁/q₁ = 1/2, p₀/q₀ = 0/1
        let oracle: Vec<_> = (1..3).map(|a| rat(a, 2 * a + 1)).collect();
        assert_eq!(level2, oracle);
        assert_eq!(level2, vec![rat(1, 3), rat(2, 5)]);
    }

    #[test]
    fn unit_digits_have_no_mediants() {
        let golden = CfExpansion::periodic(1, vec![], ints([1])).unwrap();
        assert!(mediant_convergents(&golden, 20).unwrap().is_empty());
        let cf = CfExpansion::finite(0, ints([1, 3])).unwrap();
        let m = mediant_convergents(&cf, 2).unwrap();
        assert!(m.iter().all(|m| m.level != 1));
    }

    #[test]
    fn mediants_lie_between_convergents() {
        let cf = CfExpansion::finite(2, ints([5, 3, 4, 7])).unwrap();
        let conv = super::super::convergents(&cf, 5).unwrap();
        for m in mediant_convergents(&cf, 5).unwrap() {
            if m.level >= 2 {
                let a = conv[m.level - 2].value();
                let b = conv[m.level].value();
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                assert!(lo < m.value && m.value < hi);
            }
        }
    }

    #[test]
    fn best_approx_examples() {
        let sqrt2 = Real::from_surd_parts(0.into(), 1.into(), 1.into(), 2.into());
        assert!(is_best_approx_first_kind(&sqrt2, &rat(7, 5)));
        assert!(!is_best_approx_first_kind(&sqrt2, &rat(6, 5)));
        assert!(is_best_approx_first_kind(&sqrt2, &rat(3, 2)));
        assert!(is_best_approx_first_kind(&sqrt2, &rat(4, 3)));
        assert!(is_best_approx_first_kind(&sqrt2, &rat(1, 1)));
    }

    #[test]
    fn best_approx_brute_force_window() {
        // oracle scans every c with |c/d − x| ≤ 1 in f64, far from ties
        let x = Real::from_surd_parts(1.into(), 1.into(), 3.into(), 7.into());
        let xf = x.to_f64();
        for q in 1..30i64 {
            for p in 0..(2 * q) {
                let r = rat(p, q);
                if *r.denom() != BigInt::from(q) {
                    continue;
                }
                let err = (xf - p as f64 / q as f64).abs();
                let mut best = true;
                for d in 1..q {
                    let lo = ((xf - 1.0) * d as f64).floor() as i64;
                    let hi = ((xf + 1.0) * d as f64).ceil() as i64;
                    for c in lo..=hi {
                        if (xf - c as f64 / d as f64).abs() <= err {
                            best = false;
                        }
                    }
                }
                assert_eq!(is_best_approx_first_kind(&x, &r), best, "{p}/{q}");
            }
        }
    }
}
