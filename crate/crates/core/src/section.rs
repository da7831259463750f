//! The cross-section of the geodesic flow at the imaginary axis and its
//! symbolic model: digit sequences with a parity bit, the shift, the first
//! return map, the Gauss-map factor and closed geodesics.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::cf::{expand, normalize_periodic, CfBody, CfExpansion};
use crate::error::{Error, Result};
use crate::exact::{BoundaryPoint, IntMatrix2, Rational, Real};
use crate::farey::is_in_a;
use crate::hyperbolic::{cross_vertical, geodesic_through, hyp_distance, mobius_on_geodesic, Geodesic, HPoint};

/// The `ℤ/2` decoration: `Zero` when the run after the base point is `L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Zero,
    One,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Zero => Parity::One,
            Parity::One => Parity::Zero,
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Zero => 0,
            Parity::One => 1,
        }
    }

    pub fn from_bit(b: u8) -> Result<Parity> {
        match b {
            0 => Ok(Parity::Zero),
            1 => Ok(Parity::One),
            _ => Err(Error::domain("parity must be 0 or 1")),
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

/// A one-sided digit sequence read outward from the base point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Tail {
    Finite(Vec<BigInt>),
    /// Minimal preperiod, primitive period.
    Periodic { pre: Vec<BigInt>, period: Vec<BigInt> },
}

fn check_positive(d: &[BigInt]) -> Result<()> {
    if d.iter().any(|x| !x.is_positive()) {
        return Err(Error::domain("digits must be positive"));
    }
    Ok(())
}

impl Tail {
    pub fn finite(digits: Vec<BigInt>) -> Result<Tail> {
        if digits.is_empty() {
            return Err(Error::domain("a tail has at least one digit"));
        }
        check_positive(&digits)?;
        Ok(Tail::Finite(digits))
    }

    pub fn periodic(pre: Vec<BigInt>, period: Vec<BigInt>) -> Result<Tail> {
        if period.is_empty() {
            return Err(Error::domain("period must be nonempty"));
        }
        check_positive(&pre)?;
        check_positive(&period)?;
        let (pre, period) = normalize_periodic(pre, period);
        Ok(Tail::Periodic { pre, period })
    }

    /// All digits `[a0; a1, …]` of an expansion with `a0 ≥ 1`.
    pub fn from_cf(cf: &CfExpansion) -> Result<Tail> {
        if !cf.a0().is_positive() {
            return Err(Error::domain("tail values must be at least 1"));
        }
        let a0 = cf.a0().clone();
        match cf.body() {
            CfBody::Finite(d) => Tail::finite(std::iter::once(a0).chain(d.iter().cloned()).collect()),
            CfBody::EventuallyPeriodic { pre, period } => {
                Tail::periodic(std::iter::once(a0).chain(pre.iter().cloned()).collect(), period.clone())
            }
            CfBody::Stream(_) => Err(Error::Unsupported("streamed tails have no exact value".into())),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Tail::Finite(_))
    }

    /// Number of digits, `None` when infinite.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> Option<usize> {
        match self {
            Tail::Finite(d) => Some(d.len()),
            Tail::Periodic { .. } => None,
        }
    }

    pub fn digit(&self, i: usize) -> Option<BigInt> {
        match self {
            Tail::Finite(d) => d.get(i).cloned(),
            Tail::Periodic { pre, period } => Some(if i < pre.len() {
                pre[i].clone()
            } else {
                period[(i - pre.len()) % period.len()].clone()
            }),
        }
    }

    pub fn first(&self) -> BigInt {
        self.digit(0).expect("tails are nonempty")
    }

    pub fn digits(&self) -> impl Iterator<Item = BigInt> + '_ {
        (0..).map_while(move |i| self.digit(i))
    }

    /// Drops the first digit; `None` when it was the only one.
    pub fn pop_front(&self) -> Option<(BigInt, Tail)> {
        match self {
            Tail::Finite(d) if d.len() <= 1 => None,
            Tail::Finite(d) => Some((d[0].clone(), Tail::Finite(d[1..].to_vec()))),
            Tail::Periodic { pre, period } if pre.is_empty() => {
                let mut rotated = period.clone();
                rotated.rotate_left(1);
                Some((period[0].clone(), Tail::Periodic { pre: Vec::new(), period: rotated }))
            }
            Tail::Periodic { pre, period } => Some((
                pre[0].clone(),
                Tail::Periodic {
                    pre: pre[1..].to_vec(),
                    period: period.clone(),
                },
            )),
        }
    }

    pub fn push_front(&self, d: BigInt) -> Tail {
        match self {
            Tail::Finite(v) => {
                let mut v2 = Vec::with_capacity(v.len() + 1);
                v2.push(d);
                v2.extend(v.iter().cloned());
                Tail::Finite(v2)
            }
            Tail::Periodic { pre, period } => {
                let mut p2 = vec![d];
                p2.extend(pre.iter().cloned());
                let (pre, period) = normalize_periodic(p2, period.clone());
                Tail::Periodic { pre, period }
            }
        }
    }

    /// The continued fraction `[t0; t1, …]` this tail spells.
    pub fn to_cf(&self) -> CfExpansion {
        let built = match self {
            Tail::Finite(d) => CfExpansion::finite(d[0].clone(), d[1..].to_vec()),
            Tail::Periodic { pre, period } if pre.is_empty() => {
                let mut rotated = period.clone();
                rotated.rotate_left(1);
                CfExpansion::periodic(period[0].clone(), Vec::new(), rotated)
            }
            Tail::Periodic { pre, period } => CfExpansion::periodic(pre[0].clone(), pre[1..].to_vec(), period.clone()),
        };
        built.expect("tail digits are positive")
    }

    /// Exact value of `[t0; t1, …]`, at least 1.
    pub fn value(&self) -> Real {
        self.to_cf().evaluate().expect("finite or periodic")
    }

    fn fmt_forward(&self) -> String {
        let join = |v: &[BigInt]| v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ");
        match self {
            Tail::Finite(d) => join(d),
            Tail::Periodic { pre, period } if pre.is_empty() => format!("({})", join(period)),
            Tail::Periodic { pre, period } => format!("{} ({})", join(pre), join(period)),
        }
    }

    fn fmt_backward(&self) -> String {
        let join = |v: &[BigInt]| v.iter().rev().map(|d| d.to_string()).collect::<Vec<_>>().join(" ");
        match self {
            Tail::Finite(d) => join(d),
            Tail::Periodic { pre, period } if pre.is_empty() => format!("({})", join(period)),
            Tail::Periodic { pre, period } => format!("({}) {}", join(period), join(pre)),
        }
    }
}

/// A point of the symbolic system: digits `…, n₋₁, n₀ | n₁, n₂, …` and a parity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SigmaElement {
    /// `n₀, n₋₁, …` outward from the base point.
    pub past: Tail,
    /// `n₁, n₂, …`.
    pub future: Tail,
    pub parity: Parity,
}

impl SigmaElement {
    pub fn new(past: Tail, future: Tail, parity: Parity) -> Self {
        SigmaElement { past, future, parity }
    }

    /// The two-sided periodic sequence `… w w w …` with `n₁ = w[0]`.
    pub fn periodic(word: &[BigInt], parity: Parity) -> Result<Self> {
        let mut rev = word.to_vec();
        rev.reverse();
        Ok(SigmaElement {
            past: Tail::periodic(Vec::new(), rev)?,
            future: Tail::periodic(Vec::new(), word.to_vec())?,
            parity,
        })
    }

    pub fn is_two_sided_infinite(&self) -> bool {
        !self.past.is_finite() && !self.future.is_finite()
    }
}

impl fmt::Display for SigmaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{} | {}] ; {}",
            self.past.fmt_backward(),
            self.future.fmt_forward(),
            self.parity
        )
    }
}

fn parse_digits(s: &str) -> Result<Vec<BigInt>> {
    s.split_whitespace()
        .map(|t| t.parse::<BigInt>().map_err(|_| Error::parse(format!("bad digit {t:?}"))))
        .collect()
}

// splits "a b (c d) e" style text into (before, inside, after) around one group
fn split_group(s: &str) -> Result<(&str, Option<&str>, &str)> {
    match (s.find('('), s.find(')')) {
        (None, None) => Ok((s, None, "")),
        (Some(o), Some(c)) if o < c && s[c + 1..].find(['(', ')']).is_none() => Ok((&s[..o], Some(&s[o + 1..c]), &s[c + 1..])),
        _ => Err(Error::parse("unbalanced period group")),
    }
}

fn tail_from(pre: Vec<BigInt>, period: Option<Vec<BigInt>>) -> Result<Tail> {
    let map = |e: Error| Error::parse(e.to_string());
    match period {
        None => Tail::finite(pre).map_err(map),
        Some(p) => Tail::periodic(pre, p).map_err(map),
    }
}

impl std::str::FromStr for SigmaElement {
    type Err = Error;

    /// `[(2 1) | (2 1)] ; 0`, `[3 | 2 (1 4)] ; 1`, …
    fn from_str(input: &str) -> Result<Self> {
        let (body, parity) = input
            .rsplit_once(';')
            .ok_or_else(|| Error::parse("expected '; parity'"))?;
        let bit: u8 = parity
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("bad parity {:?}", parity.trim())))?;
        let parity = Parity::from_bit(bit).map_err(|e| Error::parse(e.to_string()))?;
        let body = body
            .trim()
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(|| Error::parse("expected [past | future]"))?;
        let (left, right) = body.split_once('|').ok_or_else(|| Error::parse("expected '|'"))?;

        let (before, group, after) = split_group(left)?;
        if group.is_some() && !before.trim().is_empty() {
            return Err(Error::parse("past period must come first"));
        }
        let mut pre = parse_digits(after)?;
        let mut pre_plain = parse_digits(before)?;
        let past = match group {
            Some(g) => {
                pre.reverse();
                let mut period = parse_digits(g)?;
                period.reverse();
                tail_from(pre, Some(period))?
            }
            None => {
                pre_plain.reverse();
                tail_from(pre_plain, None)?
            }
        };

        let (before, group, after) = split_group(right)?;
        if !after.trim().is_empty() {
            return Err(Error::parse("future period must come last"));
        }
        let future = tail_from(parse_digits(before)?, group.map(parse_digits).transpose()?)?;
        Ok(SigmaElement { past, future, parity })
    }
}

/// A unit tangent vector on the section: an A-geodesic based at its
/// crossing with the imaginary axis.
#[derive(Clone, Debug, PartialEq)]
pub struct SectionPoint {
    representative: Geodesic,
    parity: Parity,
    base: HPoint,
}

impl SectionPoint {
    pub fn new(g: Geodesic) -> Result<Self> {
        if !is_in_a(&g) {
            return Err(Error::domain(format!("{g} is not in A")));
        }
        let parity = if g.future().finite().expect("finite in A").is_positive() {
            Parity::Zero
        } else {
            Parity::One
        };
        let base = cross_vertical(&g, &Rational::zero())?;
        Ok(SectionPoint {
            representative: g,
            parity,
            base,
        })
    }

    pub fn representative(&self) -> &Geodesic {
        &self.representative
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn base(&self) -> &HPoint {
        &self.base
    }

    fn future(&self) -> &Real {
        self.representative.future().finite().expect("finite in A")
    }

    fn past(&self) -> &Real {
        self.representative.past().finite().expect("finite in A")
    }
}

impl fmt::Display for SectionPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} @ {} ; {}", self.representative, self.base, self.parity)
    }
}

/// One application of the first return map.
#[derive(Clone, Debug, PartialEq)]
pub struct ReturnStep {
    pub matrix: IntMatrix2,
    pub time: f64,
    pub digit_consumed: BigInt,
}

/// Symbolic coordinates of an A-geodesic.
pub fn encode(g: &Geodesic) -> Result<SigmaElement> {
    let p = SectionPoint::new(g.clone())?;
    let (past, future) = (p.past(), p.future());
    let inv = past.recip().expect("nonzero past foot");
    let (fx, px) = match p.parity {
        Parity::Zero => (future.clone(), -inv),
        Parity::One => (-future.clone(), inv),
    };
    Ok(SigmaElement {
        past: Tail::from_cf(&expand(&px))?,
        future: Tail::from_cf(&expand(&fx))?,
        parity: p.parity,
    })
}

/// The section point with the given symbolic coordinates:
/// `γ₊ = [n₁; n₂, …]`, `γ₋ = −1/[n₀; n₋₁, …]`, mirrored when the parity is 1.
pub fn decode(s: &SigmaElement) -> Result<SectionPoint> {
    let f = s.future.value();
    let p = s.past.value().recip().expect("tail value ≥ 1");
    let (past, future) = match s.parity {
        Parity::Zero => (-p, f),
        Parity::One => (p, -f),
    };
    SectionPoint::new(geodesic_through(BoundaryPoint::Finite(past), BoundaryPoint::Finite(future))?)
}

/// The shift: `n₁` moves to the past and the parity flips.
pub fn shift(s: &SigmaElement) -> Result<SigmaElement> {
    let (n1, future) = s
        .future
        .pop_front()
        .ok_or_else(|| Error::domain("the future has a single digit; the orbit exits into the cusp"))?;
    Ok(SigmaElement {
        past: s.past.push_front(n1),
        future,
        parity: s.parity.flip(),
    })
}

/// `z ↦ −1/(z − n₁)`, or its mirror `z ↦ −1/(z + n₁)` for parity 1.
pub fn return_matrix(n1: &BigInt, parity: Parity) -> IntMatrix2 {
    match parity {
        Parity::Zero => IntMatrix2::new(0, -1, 1, -n1),
        Parity::One => IntMatrix2::new(0, -1, 1, n1.clone()),
    }
}

/// Next crossing of the section along the flow.
pub fn first_return(p: &SectionPoint) -> Result<(SectionPoint, ReturnStep)> {
    let x = p.future().abs();
    let n1 = x.floor();
    if x.as_rational().is_some_and(|r| r.is_integer()) {
        return Err(Error::Cusp(format!(
            "{} runs into the cusp before returning",
            p.representative
        )));
    }
    let m = return_matrix(&n1, p.parity);
    let x_next = match p.parity {
        Parity::Zero => Rational::from_integer(n1.clone()),
        Parity::One => Rational::from_integer(-n1.clone()),
    };
    let exit = cross_vertical(&p.representative, &x_next)?;
    let time = hyp_distance(&p.base, &exit);
    let next = SectionPoint::new(mobius_on_geodesic(&m, &p.representative))?;
    Ok((
        next,
        ReturnStep {
            matrix: m,
            time,
            digit_consumed: n1,
        },
    ))
}

/// `1/[n₁; n₂, …]`, the point of `[0, 1)` the Gauss map sees.
pub fn factor_to_unit_interval(s: &SigmaElement) -> Result<Real> {
    Ok(s.future.value().recip().expect("tail value ≥ 1"))
}

/// A closed geodesic traced by iterating the first return on a periodic word.
#[derive(Clone, Debug)]
pub struct ClosedGeodesic {
    /// The word actually used; odd words are doubled.
    pub word: Vec<BigInt>,
    pub orbit: Vec<SectionPoint>,
    pub steps: Vec<ReturnStep>,
    pub length: f64,
}

/// Runs the first return once around the period of `word`.
pub fn closed_geodesic_from_period(word: &[BigInt]) -> Result<ClosedGeodesic> {
    if word.is_empty() {
        return Err(Error::domain("empty period"));
    }
    let mut w = word.to_vec();
    if w.len() % 2 == 1 {
        w.extend_from_slice(word);
    }
    let start = decode(&SigmaElement::periodic(&w, Parity::Zero)?)?;
    let mut orbit = vec![start.clone()];
    let mut steps = Vec::with_capacity(w.len());
    let mut cur = start.clone();
    for _ in 0..w.len() {
        let (next, step) = first_return(&cur)?;
        steps.push(step);
        orbit.push(next.clone());
        cur = next;
    }
    if cur != start {
        return Err(Error::domain("orbit failed to close"));
    }
    orbit.pop();
    let length = steps.iter().map(|s| s.time).sum();
    Ok(ClosedGeodesic {
        word: w,
        orbit,
        steps,
        length,
    })
}

/// `∏ [[nᵢ, 1], [1, 0]]` over the word.
pub fn period_matrix(word: &[BigInt]) -> IntMatrix2 {
    crate::cf::word_matrix(word.iter())
}

/// `2 ln λ` for the dominant eigenvalue `λ` of the period matrix of an even word,
/// i.e. `2 acosh(tr/2)`.
pub fn eigenvalue_length(word: &[BigInt]) -> Result<f64> {
    if word.is_empty() || word.len() % 2 == 1 {
        return Err(Error::domain("eigenvalue length needs an even, nonempty word"));
    }
    let tr = period_matrix(word).trace();
    let t: f64 = tr.to_string().parse().map_err(|_| Error::PrecisionExhausted { bits: 53 })?;
    if !t.is_finite() {
        return Err(Error::PrecisionExhausted { bits: 53 });
    }
    Ok(2.0 * (t / 2.0).acosh())
}

/// Two-sided digits of a primitive word, from its lexicographically largest rotation.
pub fn canonical_rotation(word: &[BigInt]) -> Vec<BigInt> {
    let n = word.len();
    (0..n)
        .map(|k| {
            let mut r = word.to_vec();
            r.rotate_left(k);
            r
        })
        .max()
        .unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cf::{gauss_map, ints};

    fn surd(a: i64, b: i64, c: i64, d: i64) -> Real {
        Real::from_surd_parts(a.into(), b.into(), c.into(), d.into())
    }

    fn geo(p: Real, f: Real) -> Geodesic {
        geodesic_through(BoundaryPoint::Finite(p), BoundaryPoint::Finite(f)).unwrap()
    }

    fn fig2() -> Geodesic {
        geo(surd(1, -1, 1, 3), surd(1, 1, 1, 3))
    }

    fn golden() -> Geodesic {
        geo(surd(1, -1, 2, 5), surd(1, 1, 2, 5))
    }

    fn per(w: &[i64], p: Parity) -> SigmaElement {
        SigmaElement::periodic(&ints(w.iter().copied()), p).unwrap()
    }

    #[test]
    fn encode_examples() {
        let s = encode(&fig2()).unwrap();
        assert_eq!(s, per(&[2, 1], Parity::Zero));
        assert_eq!(s.past.digit(0), Some(BigInt::from(1)));
        assert_eq!(s.past.digit(1), Some(BigInt::from(2)));
        assert_eq!(s.to_string(), "[(2 1) | (2 1)] ; 0");
        assert_eq!(encode(&golden()).unwrap(), per(&[1], Parity::Zero));
        let neg = geo(surd(-1, 1, 2, 5), surd(-1, -1, 2, 5));
        assert_eq!(encode(&neg).unwrap(), per(&[1], Parity::One));
        assert!(encode(&geo(surd(0, 1, 1, 2), surd(0, 1, 1, 3))).is_err());
    }

    #[test]
    fn decode_examples() {
        assert_eq!(decode(&per(&[2, 1], Parity::Zero)).unwrap().representative(), &fig2());
        assert_eq!(decode(&per(&[1], Parity::Zero)).unwrap().representative(), &golden());
        let p = decode(&per(&[2, 1], Parity::Zero)).unwrap();
        assert_eq!(p.base(), &HPoint::exact(Real::zero(), surd(0, 1, 1, 2)).unwrap());
    }

    #[test]
    fn shift_examples() {
        let s = shift(&per(&[2, 1], Parity::Zero)).unwrap();
        assert_eq!(s, per(&[1, 2], Parity::One));
        assert_eq!(shift(&s).unwrap(), per(&[2, 1], Parity::Zero));
        let single = SigmaElement::new(
            Tail::finite(ints([1])).unwrap(),
            Tail::finite(ints([3])).unwrap(),
            Parity::Zero,
        );
        assert!(matches!(shift(&single), Err(Error::Domain(_))));
    }

    #[test]
    fn first_return_examples() {
        let (next, step) = first_return(&decode(&per(&[2, 1], Parity::Zero)).unwrap()).unwrap();
        assert_eq!(next, decode(&per(&[1, 2], Parity::One)).unwrap());
        assert!((step.time - (2.0f64 + 3f64.sqrt()).ln()).abs() < 1e-14);
        assert!((step.time - 1.316958).abs() < 1e-6);
        assert_eq!(step.digit_consumed, BigInt::from(2));
        assert_eq!(step.matrix, IntMatrix2::new(0, -1, 1, -2));

        let (next, step) = first_return(&decode(&per(&[1], Parity::Zero)).unwrap()).unwrap();
        assert_eq!(next, decode(&per(&[1], Parity::One)).unwrap());
        assert!((step.time - 1.5f64.acosh()).abs() < 1e-14);
        assert!((step.time - 0.962424).abs() < 1e-6);

        let cusp = geo(Real::from_ratio(-1, 2), Real::from_int(3));
        let p = SectionPoint::new(cusp).unwrap();
        assert!(matches!(first_return(&p), Err(Error::Cusp(_))));
    }

    #[test]
    fn factor_examples() {
        let s = per(&[2, 1], Parity::Zero);
        let v = factor_to_unit_interval(&s).unwrap();
        assert_eq!(v, surd(-1, 1, 2, 3));
        assert_eq!(factor_to_unit_interval(&per(&[1], Parity::Zero)).unwrap(), surd(-1, 1, 2, 5));
        let shifted = factor_to_unit_interval(&shift(&s).unwrap()).unwrap();
        assert_eq!(gauss_map(&v).unwrap(), shifted);
        assert_eq!(shifted, surd(-1, 1, 1, 3));
    }

    #[test]
    fn closed_geodesic_lengths() {
        let cases = [(vec![1, 1], 1.924847), (vec![2, 1], 2.633916), (vec![2, 2], 3.525494)];
        for (w, expected) in cases {
            let w = ints(w);
            let c = closed_geodesic_from_period(&w).unwrap();
            assert!((c.length - expected).abs() < 1e-6, "{w:?}: {}", c.length);
            assert!((c.length - eigenvalue_length(&c.word).unwrap()).abs() < 1e-12);
        }
        let odd = closed_geodesic_from_period(&ints([3])).unwrap();
        assert_eq!(odd.word, ints([3, 3]));
        assert_eq!(odd.steps.len(), 2);
    }

    #[test]
    fn text_round_trip() {
        let cases = [
            per(&[2, 1], Parity::Zero),
            per(&[1, 2, 3], Parity::One),
            SigmaElement::new(
                Tail::periodic(ints([4, 5]), ints([1, 2])).unwrap(),
                Tail::periodic(ints([7]), ints([3])).unwrap(),
                Parity::Zero,
            ),
            SigmaElement::new(
                Tail::finite(ints([2, 3])).unwrap(),
                Tail::finite(ints([1, 6])).unwrap(),
                Parity::One,
            ),
        ];
        for s in cases {
            let text = s.to_string();
            assert_eq!(text.parse::<SigmaElement>().unwrap(), s, "{text}");
        }
        assert_eq!(
            "[(1 2) 5 4 | 7 (3)] ; 0".parse::<SigmaElement>().unwrap().past.digits().take(4).collect::<Vec<_>>(),
            ints([4, 5, 2, 1])
        );
        for bad in ["[1 | 2]", "[1 | 2] ; 2", "[(1 | 2] ; 0", "[1 (2) | 3] ; 0", "[1 | (2) 3] ; 0", "[ | 2] ; 0"] {
            assert!(bad.parse::<SigmaElement>().is_err(), "{bad}");
        }
    }

    #[test]
    fn boundary_past_foot() {
        // |γ₋| = 1 is allowed in A; the past tail is the single digit 1
        let g = geo(Real::from_int(-1), surd(1, 1, 1, 3));
        let s = encode(&g).unwrap();
        assert_eq!(s.past, Tail::finite(ints([1])).unwrap());
        assert_eq!(decode(&s).unwrap().representative(), &g);
    }
}
