//! Regular continued fractions: expansion, evaluation, convergents, the
//! Gauss and Farey interval maps, mediants and best approximations.

mod approx;
mod maps;
mod notation;

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{BoundaryPoint, IntMatrix2, Rational, Real};

pub use approx::{is_best_approx_first_kind, mediant_convergents, Mediant};
pub use maps::{farey_accelerate, farey_map, gauss_map};
pub use notation::parse_cf;

/// A regular continued fraction `[a0; a1, a2, …]`.
#[derive(Debug)]
pub struct CfExpansion {
    a0: BigInt,
    body: CfBody,
}

/// Digits after `a0`.
#[derive(Debug)]
pub enum CfBody {
    /// Canonical: never ends in 1.
    Finite(Vec<BigInt>),
    /// Minimal preperiod followed by a primitive, nonempty period.
    EventuallyPeriodic { pre: Vec<BigInt>, period: Vec<BigInt> },
    /// Digits pulled lazily from a single-consumer source.
    Stream(DigitStream),
}

/// Lazily evaluated digit source. Pulled digits are cached so indexed access
/// is stable; the cursor is not meant to be shared between threads.
pub struct DigitStream {
    cache: RefCell<Vec<BigInt>>,
    source: RefCell<Box<dyn Iterator<Item = BigInt> + Send>>,
}

impl fmt::Debug for DigitStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DigitStream").field("cached", &self.cache.borrow().len()).finish()
    }
}

impl DigitStream {
    fn get(&self, i: usize) -> Option<BigInt> {
        let mut cache = self.cache.borrow_mut();
        while cache.len() <= i {
            let next = self.source.borrow_mut().next()?;
            assert!(next.is_positive(), "streamed digits must be positive");
            cache.push(next);
        }
        Some(cache[i].clone())
    }

    pub fn cached(&self) -> Vec<BigInt> {
        self.cache.borrow().clone()
    }
}

/// `pₙ/qₙ`, the n-th convergent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Convergent {
    pub index: usize,
    pub p: BigInt,
    pub q: BigInt,
}

impl Convergent {
    pub fn value(&self) -> Rational {
        Rational::new(self.p.clone(), self.q.clone())
    }
}

#[cfg(test)]
pub(crate) fn ints<I: IntoIterator<Item = T>, T: Into<BigInt>>(it: I) -> Vec<BigInt> {
    it.into_iter().map(Into::into).collect()
}

/// Smallest word whose repetition gives `w`.
pub(crate) fn primitive_root(w: &[BigInt]) -> Vec<BigInt> {
    let n = w.len();
    for len in 1..=n {
        if n.is_multiple_of(len) && (len..n).all(|i| w[i] == w[i - len]) {
            return w[..len].to_vec();
        }
    }
    w.to_vec()
}

/// Removes preperiod digits that are absorbed by rotating the period.
pub(crate) fn normalize_periodic(mut pre: Vec<BigInt>, period: Vec<BigInt>) -> (Vec<BigInt>, Vec<BigInt>) {
    let mut period = primitive_root(&period);
    while let Some(last) = pre.last() {
        if last == period.last().unwrap() {
            pre.pop();
            period.rotate_right(1);
        } else {
            break;
        }
    }
    (pre, period)
}

fn check_digits(digits: &[BigInt]) -> Result<()> {
    if digits.iter().any(|d| !d.is_positive()) {
        return Err(Error::domain("partial quotients after a0 must be positive"));
    }
    Ok(())
}

impl CfExpansion {
    /// Finite expansion, canonicalized so it never ends in 1 unless it is `[a0]`.
    pub fn finite(a0: impl Into<BigInt>, digits: Vec<BigInt>) -> Result<Self> {
        check_digits(&digits)?;
        let mut a0 = a0.into();
        let mut digits = digits;
        if let Some(last) = digits.last() {
            if last.is_one() {
                digits.pop();
                match digits.last_mut() {
                    Some(prev) => *prev += 1,
                    None => a0 += 1,
                }
            }
        }
        Ok(CfExpansion {
            a0,
            body: CfBody::Finite(digits),
        })
    }

    /// Eventually periodic expansion with minimal preperiod and primitive period.
    pub fn periodic(a0: impl Into<BigInt>, pre: Vec<BigInt>, period: Vec<BigInt>) -> Result<Self> {
        check_digits(&pre)?;
        check_digits(&period)?;
        if period.is_empty() {
            return Err(Error::domain("period must be nonempty"));
        }
        let (pre, period) = normalize_periodic(pre, period);
        Ok(CfExpansion {
            a0: a0.into(),
            body: CfBody::EventuallyPeriodic { pre, period },
        })
    }

    /// Streamed expansion over an arbitrary digit source.
    pub fn stream(a0: impl Into<BigInt>, source: impl Iterator<Item = BigInt> + Send + 'static) -> Self {
        CfExpansion {
            a0: a0.into(),
            body: CfBody::Stream(DigitStream {
                cache: RefCell::new(Vec::new()),
                source: RefCell::new(Box::new(source)),
            }),
        }
    }

    pub fn a0(&self) -> &BigInt {
        &self.a0
    }

    pub fn body(&self) -> &CfBody {
        &self.body
    }

    pub fn is_periodic(&self) -> bool {
        matches!(self.body, CfBody::EventuallyPeriodic { .. })
    }

    /// `[a0; a1, …]` equals its own periodic tail from `a0` on.
    pub fn is_purely_periodic(&self) -> bool {
        match &self.body {
            CfBody::EventuallyPeriodic { pre, period } => pre.is_empty() && period.last() == Some(&self.a0),
            _ => false,
        }
    }

    /// Digit `a_i` (with `a_0` at index 0), or `None` past the end.
    pub fn digit(&self, i: usize) -> Option<BigInt> {
        if i == 0 {
            return Some(self.a0.clone());
        }
        let k = i - 1;
        match &self.body {
            CfBody::Finite(d) => d.get(k).cloned(),
            CfBody::EventuallyPeriodic { pre, period } => Some(if k < pre.len() {
                pre[k].clone()
            } else {
                period[(k - pre.len()) % period.len()].clone()
            }),
            CfBody::Stream(s) => s.get(k),
        }
    }

    /// All digits starting with `a0`.
    pub fn digits(&self) -> impl Iterator<Item = BigInt> + '_ {
        (0..).map_while(move |i| self.digit(i))
    }

    /// Number of digits including `a0`, `None` when infinite.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> Option<usize> {
        match &self.body {
            CfBody::Finite(d) => Some(d.len() + 1),
            _ => None,
        }
    }

    /// `[a1; a2, …]`; `None` when the expansion is just `[a0]` or streamed.
    pub fn tail(&self) -> Option<CfExpansion> {
        match &self.body {
            CfBody::Finite(d) if d.is_empty() => None,
            CfBody::Finite(d) => Some(CfExpansion {
                a0: d[0].clone(),
                body: CfBody::Finite(d[1..].to_vec()),
            }),
            CfBody::EventuallyPeriodic { pre, period } => {
                let (head, pre, period) = if pre.is_empty() {
                    let mut rotated = period.clone();
                    rotated.rotate_left(1);
                    (period[0].clone(), Vec::new(), rotated)
                } else {
                    (pre[0].clone(), pre[1..].to_vec(), period.clone())
                };
                Some(CfExpansion {
                    a0: head,
                    body: CfBody::EventuallyPeriodic { pre, period },
                })
            }
            CfBody::Stream(_) => None,
        }
    }

    /// Exact value of a finite or eventually periodic expansion.
    pub fn evaluate(&self) -> Result<Real> {
        match &self.body {
            CfBody::Finite(d) => {
                let mut acc: Option<Rational> = None;
                for a in d.iter().rev() {
                    let v = Rational::from_integer(a.clone());
                    acc = Some(match acc {
                        None => v,
                        Some(t) => v + t.recip(),
                    });
                }
                let a0 = Rational::from_integer(self.a0.clone());
                Ok(Real::Rational(match acc {
                    None => a0,
                    Some(t) => a0 + t.recip(),
                }))
            }
            CfBody::EventuallyPeriodic { pre, period } => {
                let tail = periodic_value(period);
                let prefix = std::iter::once(&self.a0).chain(pre.iter());
                let m = word_matrix(prefix);
                match m.apply(&BoundaryPoint::Finite(tail)) {
                    BoundaryPoint::Finite(x) => Ok(x),
                    BoundaryPoint::Infinity => unreachable!("positive tail cannot hit a pole"),
                }
            }
            CfBody::Stream(_) => Err(Error::Unsupported("a streamed expansion has no exact value".into())),
        }
    }
}

/// `∏ [[a,1],[1,0]]`; the product sends `t` to `[a_1; …, a_k, t]`.
pub fn word_matrix<'a>(word: impl IntoIterator<Item = &'a BigInt>) -> IntMatrix2 {
    let mut m = IntMatrix2::identity();
    for a in word {
        m = &m * &IntMatrix2::new(a.clone(), 1, 1, 0);
    }
    m
}

/// Value `> 1` of the purely periodic `[p1; p2, …, pk, p1, …]`.
fn periodic_value(period: &[BigInt]) -> Real {
    // x = (P x + P')/(Q x + Q')  ⇒  Q x² + (Q' − P) x − P' = 0
    let m = word_matrix(period);
    let (p, p1, q, q1) = (&m.m11, &m.m12, &m.m21, &m.m22);
    // dividing by the content leaves the primitive form of x, whose
    // discriminant is small enough to factor
    let g = q.gcd(&(q1 - p)).gcd(p1);
    let (a, b, c) = (q / &g, (q1 - p) / &g, -(p1 / &g));
    let disc = &b * &b - BigInt::from(4) * &a * &c;
    Real::from_surd_parts(-b, BigInt::one(), BigInt::from(2) * a, disc)
}

impl PartialEq for CfExpansion {
    fn eq(&self, other: &Self) -> bool {
        if self.a0 != other.a0 {
            return false;
        }
        match (&self.body, &other.body) {
            (CfBody::Finite(a), CfBody::Finite(b)) => a == b,
            (
                CfBody::EventuallyPeriodic { pre: p1, period: q1 },
                CfBody::EventuallyPeriodic { pre: p2, period: q2 },
            ) => p1 == p2 && q1 == q2,
            _ => false,
        }
    }
}

/// Regular continued fraction of a rational or quadratic surd.
///
/// Rationals run the Euclidean algorithm; surds run the Gauss map on the exact
/// fractional part until a state repeats, which Lagrange's theorem guarantees.
pub fn expand(x: &Real) -> CfExpansion {
    let a0 = x.floor();
    match x {
        Real::Rational(r) => {
            let mut digits = Vec::new();
            let mut num = r.numer() - &a0 * r.denom();
            let mut den = r.denom().clone();
            // Euclid on den/num
            while !num.is_zero() {
                let q = &den / &num;
                let rem = &den - &q * &num;
                digits.push(q);
                den = num;
                num = rem;
            }
            CfExpansion {
                a0,
                body: CfBody::Finite(digits),
            }
        }
        Real::Surd(_) => {
            let mut y = x.add_int(&-&a0);
            let mut seen: HashMap<Real, usize> = HashMap::new();
            let mut digits = Vec::new();
            loop {
                if let Some(&start) = seen.get(&y) {
                    let period = digits[start..].to_vec();
                    digits.truncate(start);
                    return CfExpansion {
                        a0,
                        body: CfBody::EventuallyPeriodic { pre: digits, period },
                    };
                }
                seen.insert(y.clone(), digits.len());
                let t = y.recip().expect("irrational state is nonzero");
                let a = t.floor();
                y = t.add_int(&-&a);
                digits.push(a);
            }
        }
    }
}

/// First `n` convergents `p_0/q_0, …, p_{n-1}/q_{n-1}`.
pub fn convergents(cf: &CfExpansion, n: usize) -> Result<Vec<Convergent>> {
    if n == 0 {
        return Err(Error::domain("at least one convergent must be requested"));
    }
    let mut out = Vec::with_capacity(n);
    let (mut p_prev, mut q_prev) = (BigInt::one(), BigInt::zero());
    let (mut p, mut q) = (BigInt::zero(), BigInt::one());
    // seed so the first step yields p_0 = a0, q_0 = 1
    std::mem::swap(&mut p_prev, &mut p);
    std::mem::swap(&mut q_prev, &mut q);
    for i in 0..n {
        let a = cf.digit(i).ok_or(Error::Exhausted {
            available: i,
            requested: n,
        })?;
        let p_next = &a * &p + &p_prev;
        let q_next = &a * &q + &q_prev;
        p_prev = std::mem::replace(&mut p, p_next);
        q_prev = std::mem::replace(&mut q, q_next);
        out.push(Convergent {
            index: i,
            p: p.clone(),
            q: q.clone(),
        });
    }
    Ok(out)
}

impl fmt::Display for CfExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        notation::write_cf(self, f)
    }
}
