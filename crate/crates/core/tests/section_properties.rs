use modsurf_core::cf::{expand, gauss_map};
use modsurf_core::section::{
    closed_geodesic_from_period, decode, eigenvalue_length, encode, factor_to_unit_interval, first_return, shift,
    Parity, SigmaElement, Tail,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn digits(max: i64, len: std::ops::Range<usize>) -> impl Strategy<Value = Vec<BigInt>> {
    prop::collection::vec(1..=max, len).prop_map(|v| v.into_iter().map(BigInt::from).collect())
}

fn tail() -> impl Strategy<Value = Tail> {
    (digits(6, 0..3), digits(6, 1..5)).prop_map(|(pre, period)| Tail::periodic(pre, period).unwrap())
}

fn element() -> impl Strategy<Value = SigmaElement> {
    (tail(), tail(), prop::bool::ANY).prop_map(|(past, future, w)| {
        SigmaElement::new(past, future, if w { Parity::One } else { Parity::Zero })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn first_return_realizes_shift(s in element()) {
        let mut sym = s;
        let mut point = decode(&sym).unwrap();
        for _ in 0..30 {
            let (next, step) = first_return(&point).unwrap();
            let shifted = shift(&sym).unwrap();
            prop_assert_eq!(&next, &decode(&shifted).unwrap());
            prop_assert!(step.time > 0.0);
            prop_assert_eq!(next.parity(), point.parity().flip());
            prop_assert_eq!(&step.digit_consumed, &sym.future.first());
            sym = shifted;
            point = next;
        }
    }

    #[test]
    fn gauss_map_is_a_factor(s in element()) {
        let mut sym = s;
        for _ in 0..30 {
            let x = factor_to_unit_interval(&sym).unwrap();
            let next = shift(&sym).unwrap();
            prop_assert_eq!(gauss_map(&x).unwrap(), factor_to_unit_interval(&next).unwrap());
            sym = next;
        }
    }

    #[test]
    fn encode_inverts_decode(s in element()) {
        let p = decode(&s).unwrap();
        prop_assert_eq!(encode(p.representative()).unwrap(), s);
    }

    #[test]
    fn factor_orbit_follows_gauss_digits(s in element()) {
        let x0 = factor_to_unit_interval(&s).unwrap();
        let expected: Vec<BigInt> = expand(&x0).digits().skip(1).take(20).collect();
        let mut point = decode(&s).unwrap();
        let mut x = x0;
        for d in expected {
            let (next, step) = first_return(&point).unwrap();
            prop_assert_eq!(&step.digit_consumed, &d);
            let y = gauss_map(&x).unwrap();
            prop_assert_eq!(&factor_to_unit_interval(&encode(next.representative()).unwrap()).unwrap(), &y);
            x = y;
            point = next;
        }
    }
}

#[test]
fn summed_return_times_match_eigenvalues() {
    let mut words: Vec<Vec<i64>> = Vec::new();
    for len in [2usize, 4] {
        let mut w = vec![1i64; len];
        loop {
            words.push(w.clone());
            let mut i = 0;
            while i < len && w[i] == 3 {
                w[i] = 1;
                i += 1;
            }
            if i == len {
                break;
            }
            w[i] += 1;
        }
    }
    assert_eq!(words.len(), 9 + 81);
    for w in words {
        let w: Vec<BigInt> = w.into_iter().map(BigInt::from).collect();
        let c = closed_geodesic_from_period(&w).unwrap();
        let e = eigenvalue_length(&c.word).unwrap();
        assert!((c.length - e).abs() < 1e-9, "{w:?}: {} vs {e}", c.length);
    }
}
