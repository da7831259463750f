use modsurf_core::cf::{convergents, expand, farey_accelerate, gauss_map};
use modsurf_core::exact::{Rational, Real};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn rat(p: i64, q: i64) -> Real {
    Real::from_ratio(p, q)
}

fn is_squarefree(d: i64) -> bool {
    (2..=d).take_while(|k| k * k <= d).all(|k| d % (k * k) != 0)
}

#[test]
fn round_trip_small_rationals() {
    for q in 1..=60i64 {
        for p in -200..=200i64 {
            let x = rat(p, q);
            assert_eq!(expand(&x).evaluate().unwrap(), x);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn round_trip_rationals(p in -1000i64..=1000, q in 1i64..=1000) {
        let x = rat(p, q);
        prop_assert_eq!(expand(&x).evaluate().unwrap(), x);
    }

    #[test]
    fn round_trip_surds(d in 2i64..=50, rp in -20i64..=20, rq in 1i64..=12, sign in prop::bool::ANY) {
        prop_assume!(is_squarefree(d));
        let b = if sign { 1 } else { -1 };
        // √d·b + rp/rq
        let x = Real::from_surd_parts((rp).into(), (b * rq).into(), rq.into(), d.into());
        let cf = expand(&x);
        prop_assert!(cf.is_periodic());
        prop_assert_eq!(cf.evaluate().unwrap(), x);
    }

    #[test]
    fn shift_conjugacy(p in 1i64..10_000, q in 2i64..10_000) {
        prop_assume!(p < q);
        let x = rat(p, q);
        // [0; a1, a2, …] ↦ [0; a2, …]
        let shifted: Vec<BigInt> = expand(&gauss_map(&x).unwrap()).digits().collect();
        let full: Vec<BigInt> = expand(&x).digits().collect();
        prop_assert_eq!(&shifted[0], &BigInt::zero());
        prop_assert_eq!(&shifted[1..], &full[2..]);
    }

    #[test]
    fn convergent_quality_and_determinant(d in 2i64..=200, r in -5i64..=5) {
        prop_assume!(is_squarefree(d));
        let x = Real::from_surd_parts(r.into(), 1.into(), 1.into(), d.into());
        let cf = expand(&x);
        let c = convergents(&cf, 12).unwrap();
        for n in 0..11 {
            let (p, q) = (&c[n].p, &c[n].q);
            let q1 = &c[n + 1].q;
            // |x − p/q| < 1/(q q₁)  ⇔  |q x − p| · q₁ < 1
            let err = x.mul_int(q).add_int(&-p).abs().mul_int(q1);
            prop_assert!(err < Real::one());
            let det = &c[n + 1].p * q - p * &c[n + 1].q;
            let expected = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            prop_assert_eq!(det, expected);
        }
    }

    #[test]
    fn legendre_criterion(d in 2i64..=300, p in -30_000i64..30_000, q in 1i64..=10_000) {
        prop_assume!(is_squarefree(d));
        let x = Real::from_surd_parts(0.into(), 1.into(), 1.into(), d.into());
        let frac = Rational::new(p.into(), q.into());
        let qq = frac.denom().clone();
        let err = x.checked_sub(&Real::from(frac.clone())).unwrap().abs();
        let bound = Real::from(Rational::new(BigInt::one(), BigInt::from(2) * &qq * &qq));
        if err < bound {
            let cf = expand(&x);
            let found = convergents(&cf, 60).unwrap().iter().any(|c| c.value() == frac);
            prop_assert!(found);
        }
    }

    #[test]
    fn legendre_near_misses(d in 2i64..=300, k in 1usize..12, dp in -2i64..=2, dq in -2i64..=2) {
        prop_assume!(is_squarefree(d));
        // perturb a convergent so the Legendre bound is actually exercised
        let x = Real::from_surd_parts(0.into(), 1.into(), 1.into(), d.into());
        let cf = expand(&x);
        let c = &convergents(&cf, k + 1).unwrap()[k];
        let q = &c.q + dq;
        prop_assume!(q.is_positive());
        let frac = Rational::new(&c.p + dp, q);
        let qq = frac.denom().clone();
        let err = x.checked_sub(&Real::from(frac.clone())).unwrap().abs();
        let bound = Real::from(Rational::new(BigInt::one(), BigInt::from(2) * &qq * &qq));
        if err < bound {
            let found = convergents(&cf, k + 30).unwrap().iter().any(|c| c.value() == frac);
            prop_assert!(found);
        }
    }

    #[test]
    fn acceleration_reproduces_digits(p in 1i64..100_000, q in 1i64..100_000) {
        prop_assume!(p < q);
        let mut x = rat(p, q);
        let mut digits = Vec::new();
        while !x.is_zero() {
            let (n, y) = farey_accelerate(&x).unwrap();
            digits.push(n);
            x = y;
        }
        let cf = expand(&rat(p, q));
        let expected: Vec<BigInt> = cf.digits().skip(1).collect();
        prop_assert_eq!(digits, expected);
    }
}

#[test]
fn galois_purity_small_discriminants() {
    // x = (P + √D)/Q with Q | D − P²; reduced ⇔ purely periodic
    let mut checked = 0;
    for disc in 2i64..=200 {
        let root = (disc as f64).sqrt() as i64;
        if root * root == disc {
            continue;
        }
        for qv in [-20i64, -13, -7, -5, -3, -2, -1, 1, 2, 3, 4, 5, 6, 7, 9, 11, 13, 17, 20] {
            for pv in -25i64..=25 {
                if (disc - pv * pv).mod_floor(&qv.abs()) != 0 {
                    continue;
                }
                let x = Real::from_surd_parts(pv.into(), 1.into(), qv.into(), disc.into());
                let conj = x.conjugate();
                let reduced = x > Real::one() && conj < Real::zero() && conj > rat(-1, 1);
                assert_eq!(expand(&x).is_purely_periodic(), reduced, "({pv} + √{disc})/{qv}");
                checked += 1;
            }
        }
    }
    assert!(checked > 1000);
}
