//! Integer factorization, used only to split radicands into square and
//! squarefree parts.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

const SMALL_PRIME_BOUND: u32 = 2000;

fn small_primes() -> Vec<u32> {
    let n = SMALL_PRIME_BOUND as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (2..=n).filter(|&k| sieve[k]).map(|k| k as u32).collect()
}

fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let p = BigUint::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_one = n - &one;
    let mut d = n_minus_one.clone();
    let mut s = 0u32;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

// Brent's variant of Pollard rho. Returns a nontrivial factor of a composite n.
fn pollard_brent(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    let one = BigUint::one();
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r = 1u64;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        while g == one {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                let m = std::cmp::min(128, r - k);
                for _ in 0..m {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if g != one {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
        c += 1u32;
    }
}

fn push_factors(n: BigUint, out: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if is_probable_prime(&n) {
        out.push(n);
        return;
    }
    let r = n.sqrt();
    if &r * &r == n {
        push_factors(r.clone(), out);
        push_factors(r, out);
        return;
    }
    let f = pollard_brent(&n);
    let g = &n / &f;
    push_factors(f, out);
    push_factors(g, out);
}

/// Prime factorization as (prime, exponent) pairs in increasing order.
pub fn factorize(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut primes: Vec<BigUint> = Vec::new();
    let mut rest = n.clone();
    if rest.is_zero() {
        return Vec::new();
    }
    for p in small_primes() {
        let p = BigUint::from(p);
        while (&rest % &p).is_zero() {
            rest /= &p;
            primes.push(p.clone());
        }
        if rest.is_one() {
            break;
        }
    }
    push_factors(rest, &mut primes);
    primes.sort();
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    for p in primes {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

/// Writes `n = s² · m` with `m` squarefree; returns `(s, m)`.
pub fn squarefree_decompose(n: &BigUint) -> (BigUint, BigUint) {
    if n.is_zero() {
        return (BigUint::zero(), BigUint::zero());
    }
    // fast path for machine-sized inputs
    if let Some(small) = n.to_u64() {
        if small < 4 {
            return (BigUint::one(), n.clone());
        }
    }
    let mut s = BigUint::one();
    let mut m = BigUint::one();
    for (p, e) in factorize(n) {
        s *= p.pow(e / 2);
        if e % 2 == 1 {
            m *= p;
        }
    }
    (s, m)
}

pub fn is_perfect_square(n: &BigUint) -> bool {
    let r = n.sqrt();
    &r * &r == *n
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn squarefree_small() {
        assert_eq!(squarefree_decompose(&big(8)), (big(2), big(2)));
        assert_eq!(squarefree_decompose(&big(12)), (big(2), big(3)));
        assert_eq!(squarefree_decompose(&big(49)), (big(7), big(1)));
        assert_eq!(squarefree_decompose(&big(30)), (big(1), big(30)));
        assert_eq!(squarefree_decompose(&big(2)), (big(1), big(2)));
    }

    #[test]
    fn squarefree_large_semiprime_square() {
        // (1_000_003)^2 * 1_000_033, both primes above the trial-division bound
        let p = big(1_000_003);
        let q = big(1_000_033);
        let n = &p * &p * &q;
        assert_eq!(squarefree_decompose(&n), (p, q));
    }

    #[test]
    fn factorize_matches_product() {
        let n = big(2 * 2 * 3 * 7 * 7 * 7 * 1_000_003);
        let f = factorize(&n);
        let back = f.iter().fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e));
        assert_eq!(back, n);
        assert_eq!(f.len(), 4);
    }
}
