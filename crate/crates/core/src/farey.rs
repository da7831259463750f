//! The Farey tessellation and the L/R coding of geodesics that cross it.
//!
//! Edges are unimodular pairs `p/q < r/s` with infinity written `1/0`. The
//! forward coding of a geodesic in the set A is a Stern–Brocot descent from
//! the imaginary axis toward its future foot; each step crosses one ideal
//! triangle and records on which side of the geodesic its isolated vertex lies.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{BoundaryPoint, IntMatrix2, Rational, Real};
use crate::hyperbolic::{mobius_on_geodesic, Geodesic};

/// A cutting-sequence letter. `End` marks a geodesic that runs into a cusp.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    L,
    R,
    End,
}

impl Letter {
    pub fn swapped(self) -> Letter {
        match self {
            Letter::L => Letter::R,
            Letter::R => Letter::L,
            Letter::End => Letter::End,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::L => 'L',
            Letter::R => 'R',
            Letter::End => '⊥',
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// `LLRLLR…⊥` form.
pub fn letters_to_string(letters: &[Letter]) -> String {
    letters.iter().map(|l| l.as_char()).collect()
}

/// A boundary vertex of the tessellation as `p/q`, with `1/0` for infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Frac {
    p: BigInt,
    q: BigInt,
}

impl Frac {
    fn new(p: BigInt, q: BigInt) -> Frac {
        // q ≥ 0, and infinity is +1/0
        if q.is_zero() {
            Frac { p: BigInt::one(), q }
        } else if q.is_negative() {
            Frac { p: -p, q: -q }
        } else {
            Frac { p, q }
        }
    }

    fn infinity() -> Frac {
        Frac::new(BigInt::one(), BigInt::zero())
    }

    fn from_boundary(b: &BoundaryPoint) -> Option<Frac> {
        let (p, q) = b.as_fraction()?;
        Some(Frac::new(p, q))
    }

    fn to_boundary(&self) -> BoundaryPoint {
        if self.q.is_zero() {
            BoundaryPoint::Infinity
        } else {
            BoundaryPoint::ratio(self.p.clone(), self.q.clone())
        }
    }

    fn to_rational(&self) -> Option<Rational> {
        (!self.q.is_zero()).then(|| Rational::new(self.p.clone(), self.q.clone()))
    }

    fn neg(&self) -> Frac {
        Frac::new(-&self.p, self.q.clone())
    }
}

/// An edge of the Farey tessellation, `left < right` with infinity largest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FareyEdge {
    left: Frac,
    right: Frac,
}

impl FareyEdge {
    /// Validates rationality, order and unimodularity.
    pub fn new(left: &BoundaryPoint, right: &BoundaryPoint) -> Result<Self> {
        let (l, r) = match (Frac::from_boundary(left), Frac::from_boundary(right)) {
            (Some(l), Some(r)) => (l, r),
            _ => return Err(Error::domain("edge endpoints must be rational or infinity")),
        };
        if left >= right {
            return Err(Error::domain(format!("edge endpoints out of order: {left} ≥ {right}")));
        }
        let det = (&l.p * &r.q - &l.q * &r.p).abs();
        if !det.is_one() {
            return Err(Error::domain(format!("{left} and {right} are not unimodular")));
        }
        Ok(FareyEdge { left: l, right: r })
    }

    fn from_fracs(a: Frac, b: Frac) -> FareyEdge {
        let (ba, bb) = (a.to_boundary(), b.to_boundary());
        if ba < bb {
            FareyEdge { left: a, right: b }
        } else {
            FareyEdge { left: b, right: a }
        }
    }

    /// The edge `(0, ∞)` along the imaginary axis.
    pub fn imaginary_axis() -> FareyEdge {
        FareyEdge {
            left: Frac::new(BigInt::zero(), BigInt::one()),
            right: Frac::infinity(),
        }
    }

    pub fn left(&self) -> BoundaryPoint {
        self.left.to_boundary()
    }

    pub fn right(&self) -> BoundaryPoint {
        self.right.to_boundary()
    }

    /// The vertex between the endpoints: `(p + r)/(q + s)`.
    pub fn mediant(&self) -> Rational {
        Rational::new(&self.left.p + &self.right.p, &self.left.q + &self.right.q)
    }

    /// The third vertex of the other triangle on this edge: `(p − r)/(q − s)`.
    pub fn outer(&self) -> BoundaryPoint {
        Frac::new(&self.left.p - &self.right.p, &self.left.q - &self.right.q).to_boundary()
    }

    /// Mirror image under `x ↦ −x`.
    pub fn negated(&self) -> FareyEdge {
        FareyEdge::from_fracs(self.left.neg(), self.right.neg())
    }

    /// Image under `x ↦ −1/x`.
    pub fn inverted(&self) -> FareyEdge {
        let inv = |f: &Frac| Frac::new(-&f.q, f.p.clone());
        FareyEdge::from_fracs(inv(&self.left), inv(&self.right))
    }
}

impl fmt::Display for FareyEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.left(), self.right())
    }
}

/// `(p + r)/(q + s)` of an edge.
pub fn mediant(e: &FareyEdge) -> Rational {
    e.mediant()
}

/// An ideal triangle of the tessellation, vertices in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FareyTriangle {
    vertices: [BoundaryPoint; 3],
}

impl FareyTriangle {
    /// The triangle `(0, 1, ∞)`.
    pub fn base() -> FareyTriangle {
        FareyTriangle {
            vertices: [BoundaryPoint::int(0), BoundaryPoint::int(1), BoundaryPoint::Infinity],
        }
    }

    fn on_edge(e: &FareyEdge) -> FareyTriangle {
        let mut v = [e.left(), BoundaryPoint::from(e.mediant()), e.right()];
        v.sort();
        FareyTriangle { vertices: v }
    }

    pub fn vertices(&self) -> &[BoundaryPoint; 3] {
        &self.vertices
    }

    pub fn edges(&self) -> [FareyEdge; 3] {
        let [a, b, c] = &self.vertices;
        let e = |x: &BoundaryPoint, y: &BoundaryPoint| FareyEdge::new(x, y).expect("triangle edges are unimodular");
        [e(a, b), e(b, c), e(a, c)]
    }
}

impl fmt::Display for FareyTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.vertices;
        write!(f, "({a}, {b}, {c})")
    }
}

/// Triangles of the Stern–Brocot subdivision up to `depth` generations below
/// `(0, 1, ∞)` and its mirror `(−1, 0, ∞)`.
pub fn farey_triangles(depth: usize) -> Vec<FareyTriangle> {
    let mut out = Vec::new();
    let axis = FareyEdge::imaginary_axis();
    for root in [axis.clone(), axis.negated()] {
        let mut frontier = vec![root];
        for _ in 0..=depth {
            let mut next = Vec::new();
            for e in frontier {
                let m = Frac::new(&e.left.p + &e.right.p, &e.left.q + &e.right.q);
                out.push(FareyTriangle::on_edge(&e));
                next.push(FareyEdge::from_fracs(e.left.clone(), m.clone()));
                next.push(FareyEdge::from_fracs(m, e.right.clone()));
            }
            frontier = next;
        }
    }
    out
}

/// Membership in A: feet of opposite signs, `|γ₊| ≥ 1`, `0 < |γ₋| ≤ 1`.
pub fn is_in_a(g: &Geodesic) -> bool {
    let (Some(past), Some(future)) = (g.past().finite(), g.future().finite()) else {
        return false;
    };
    if past.is_zero() || future.is_zero() || past.is_positive() == future.is_positive() {
        return false;
    }
    future.abs() >= Real::one() && past.abs() <= Real::one()
}

/// Parity of an A-geodesic: 0 when the future foot is positive.
pub fn parity_bit(g: &Geodesic) -> Option<u8> {
    let f = g.future().finite()?;
    Some(if f.is_positive() { 0 } else { 1 })
}

/// One triangle crossed by the descent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentStep {
    pub letter: Letter,
    /// Isolated vertex of the crossed triangle; for `End`, the cusp reached.
    pub pivot: BoundaryPoint,
    /// Edge through which the geodesic leaves the triangle (entry edge for `End`).
    pub edge: FareyEdge,
}

/// Stern–Brocot descent from `(0, ∞)` toward a positive target.
///
/// Letters are for a geodesic from a negative past foot, so the cusp on the
/// far side of the target reads `L`. A rational target stops at the mediant
/// equal to it, repeating the previous letter and then yielding `End`.
#[derive(Clone, Debug)]
pub struct Descent {
    target: Real,
    edge: FareyEdge,
    prev: Option<Letter>,
    finished: bool,
    pending_end: Option<Frac>,
}

impl Descent {
    pub fn new(target: Real) -> Result<Self> {
        if !target.is_positive() {
            return Err(Error::domain("descent target must be positive"));
        }
        Ok(Descent {
            target,
            edge: FareyEdge::imaginary_axis(),
            prev: None,
            finished: false,
            pending_end: None,
        })
    }

    pub fn current_edge(&self) -> &FareyEdge {
        &self.edge
    }
}

impl Iterator for Descent {
    type Item = DescentStep;

    fn next(&mut self) -> Option<DescentStep> {
        if self.finished {
            return None;
        }
        if let Some(m) = self.pending_end.take() {
            self.finished = true;
            return Some(DescentStep {
                letter: Letter::End,
                pivot: m.to_boundary(),
                edge: self.edge.clone(),
            });
        }
        let e = &self.edge;
        let m = Frac::new(&e.left.p + &e.right.p, &e.left.q + &e.right.q);
        let mv = Real::from(m.to_rational().expect("mediant is finite"));
        let step = match self.target.cmp(&mv) {
            std::cmp::Ordering::Greater => {
                let pivot = e.right.to_boundary();
                self.edge = FareyEdge::from_fracs(m, e.right.clone());
                DescentStep {
                    letter: Letter::L,
                    pivot,
                    edge: self.edge.clone(),
                }
            }
            std::cmp::Ordering::Less => {
                let pivot = e.left.to_boundary();
                self.edge = FareyEdge::from_fracs(e.left.clone(), m);
                DescentStep {
                    letter: Letter::R,
                    pivot,
                    edge: self.edge.clone(),
                }
            }
            std::cmp::Ordering::Equal => {
                let letter = self.prev.unwrap_or(Letter::L);
                let pivot = match letter {
                    Letter::L => e.right.to_boundary(),
                    _ => e.left.to_boundary(),
                };
                self.pending_end = Some(m);
                DescentStep {
                    letter,
                    pivot,
                    edge: self.edge.clone(),
                }
            }
        };
        self.prev = Some(step.letter);
        Some(step)
    }
}

fn require_a(g: &Geodesic) -> Result<(Real, Real, bool)> {
    if !is_in_a(g) {
        return Err(Error::domain(format!("{g} is not in A")));
    }
    let past = g.past().finite().expect("finite in A").clone();
    let future = g.future().finite().expect("finite in A").clone();
    let mirrored = future.is_negative();
    Ok((past, future, mirrored))
}

/// Forward descent with letters and vertices in the geodesic's own frame.
pub fn forward_steps(g: &Geodesic) -> Result<impl Iterator<Item = DescentStep>> {
    let (_, future, mirrored) = require_a(g)?;
    let target = if mirrored { -future } else { future };
    Ok(Descent::new(target)?.map(move |s| {
        if mirrored {
            DescentStep {
                letter: s.letter.swapped(),
                pivot: s.pivot.neg(),
                edge: s.edge.negated(),
            }
        } else {
            s
        }
    }))
}

/// Backward descent from the imaginary axis toward the past foot, letters in
/// outward order and relative to the geodesic's forward orientation.
pub fn past_steps(g: &Geodesic) -> Result<impl Iterator<Item = DescentStep>> {
    let (past, _, mirrored) = require_a(g)?;
    // −1/γ₋ for w = 0; the mirror image of that for w = 1
    let inv = past.recip().expect("nonzero past foot");
    let target = if mirrored { inv } else { -inv };
    Ok(Descent::new(target)?.map(move |s| {
        let letter = if mirrored { s.letter } else { s.letter.swapped() };
        let (pivot, edge) = if mirrored {
            (
                IntMatrix2::s().apply(&s.pivot).neg(),
                s.edge.inverted().negated(),
            )
        } else {
            (IntMatrix2::s().apply(&s.pivot), s.edge.inverted())
        };
        DescentStep { letter, pivot, edge }
    }))
}

/// First `n` letters of the forward cutting sequence (fewer if it ends).
pub fn cutting_sequence(g: &Geodesic, n: usize) -> Result<Vec<Letter>> {
    if n == 0 {
        return Err(Error::domain("at least one letter must be requested"));
    }
    Ok(forward_steps(g)?.take(n).map(|s| s.letter).collect())
}

/// First `n` letters of the backward cutting sequence, outward from the axis.
pub fn past_cutting_sequence(g: &Geodesic, n: usize) -> Result<Vec<Letter>> {
    if n == 0 {
        return Err(Error::domain("at least one letter must be requested"));
    }
    Ok(past_steps(g)?.take(n).map(|s| s.letter).collect())
}

/// Maximal blocks of equal letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunSequence {
    pub runs: Vec<BigInt>,
    pub first: Letter,
    /// The letters ended with `End`.
    pub terminated: bool,
}

impl fmt::Display for RunSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.runs.iter().map(|r| r.to_string()).collect();
        write!(f, "({})@{}", body.join(","), self.first)?;
        if self.terminated {
            write!(f, "⊥")?;
        }
        Ok(())
    }
}

/// Collects run lengths; `End` may only appear last.
pub fn runs(letters: &[Letter]) -> Result<RunSequence> {
    let (body, terminated) = match letters.split_last() {
        Some((Letter::End, rest)) => (rest, true),
        _ => (letters, false),
    };
    if body.is_empty() {
        return Err(Error::domain("no letters to collect"));
    }
    if body.contains(&Letter::End) {
        return Err(Error::domain("sentinel inside a letter sequence"));
    }
    let mut runs: Vec<BigInt> = Vec::new();
    let mut current = body[0];
    let mut count = 0u64;
    for &l in body {
        if l == current {
            count += 1;
        } else {
            runs.push(count.into());
            current = l;
            count = 1;
        }
    }
    runs.push(count.into());
    Ok(RunSequence {
        runs,
        first: body[0],
        terminated,
    })
}

/// A convergent seen as a vertex the geodesic passes around.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tip {
    pub vertex: Rational,
    /// Number of triangles around the vertex; `None` at a terminal cusp.
    pub order: Option<BigInt>,
    /// Side of the geodesic the vertex lies on.
    pub side: Letter,
}

/// First `k` tips along the forward descent. The pivot of every run after
/// the first is a tip, its order the run length; a cusp ends the list.
pub fn tips(g: &Geodesic, k: usize) -> Result<Vec<Tip>> {
    let mut out: Vec<Tip> = Vec::new();
    let mut run: Option<(Letter, BoundaryPoint, u64)> = None;
    let mut runs_seen = 0usize;
    for step in forward_steps(g)? {
        if out.len() >= k {
            break;
        }
        if step.letter == Letter::End {
            if let Some((letter, pivot, n)) = run.take() {
                if runs_seen > 1 {
                    out.push(tip_of(&pivot, Some(n), letter));
                }
            }
            if out.len() < k {
                let vertex = step.pivot.finite().and_then(|r| r.as_rational()).cloned();
                let vertex = vertex.expect("a cusp of an A-geodesic is finite");
                out.push(Tip {
                    vertex,
                    order: None,
                    side: Letter::End,
                });
            }
            break;
        }
        match &mut run {
            Some((letter, _, n)) if *letter == step.letter => *n += 1,
            _ => {
                if let Some((letter, pivot, n)) = run.take() {
                    if runs_seen > 1 {
                        out.push(tip_of(&pivot, Some(n), letter));
                    }
                }
                runs_seen += 1;
                run = Some((step.letter, step.pivot.clone(), 1));
            }
        }
    }
    out.truncate(k);
    Ok(out)
}

fn tip_of(pivot: &BoundaryPoint, order: Option<u64>, side: Letter) -> Tip {
    let vertex = pivot
        .finite()
        .and_then(|r| r.as_rational())
        .cloned()
        .expect("tips after the first run are finite rationals");
    Tip {
        vertex,
        order: order.map(BigInt::from),
        side,
    }
}

const MAX_REDUCTION_STEPS: usize = 100_000;

/// Brings `g` into A by an element of the modular group.
///
/// If `|γ₊| < 1` apply `S`; then while outside A apply `z ↦ −1/(z − n)` with
/// `n = ⌊γ₊⌋` (or `z ↦ −1/(z + n)`, `n = ⌊−γ₊⌋`, for negative `γ₊`), which
/// runs the continued fraction of the future foot. Returns `(m·g, m)`.
pub fn reduce_to_a(g: &Geodesic) -> Result<(Geodesic, IntMatrix2)> {
    let mut m = IntMatrix2::identity();
    let mut cur = g.clone();
    let apply = |m: &mut IntMatrix2, cur: &mut Geodesic, step: IntMatrix2| {
        *cur = mobius_on_geodesic(&step, cur);
        *m = &step * &*m;
    };
    if is_in_a(&cur) {
        return Ok((cur, m));
    }
    for _ in 0..MAX_REDUCTION_STEPS {
        // a rational future foot runs out of digits at an integer or ∞
        let Some(x) = cur.future().finite().cloned() else {
            return Err(Error::Cusp(format!("future foot of {g} is rational")));
        };
        if x.as_rational().is_some_and(|r| r.is_integer()) {
            return Err(Error::Cusp(format!("future foot of {g} is rational")));
        }
        let step = if x.abs() < Real::one() {
            IntMatrix2::s()
        } else if x.is_positive() {
            IntMatrix2::new(0, -1, 1, -x.floor())
        } else {
            IntMatrix2::new(0, -1, 1, (-x).floor())
        };
        apply(&mut m, &mut cur, step);
        if is_in_a(&cur) {
            return Ok((cur, m));
        }
    }
    Err(Error::Cusp(format!("{g} did not reduce into A")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperbolic::geodesic_through;

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

    fn edge(l: (i64, i64), r: (i64, i64)) -> FareyEdge {
        let b = |(p, q): (i64, i64)| {
            if q == 0 {
                BoundaryPoint::Infinity
            } else {
                BoundaryPoint::ratio(p, q)
            }
        };
        FareyEdge::new(&b(l), &b(r)).unwrap()
    }

    fn rat(p: i64, q: i64) -> Rational {
        Rational::new(p.into(), q.into())
    }

    use Letter::{End, L, R};

    #[test]
    fn mediant_examples() {
        assert_eq!(mediant(&edge((0, 1), (1, 1))), rat(1, 2));
        assert_eq!(mediant(&edge((0, 1), (1, 0))), rat(1, 1));
        assert_eq!(mediant(&edge((1, 2), (1, 1))), rat(2, 3));
        assert_eq!(edge((0, 1), (1, 0)).outer(), BoundaryPoint::int(-1));
        assert_eq!(edge((0, 1), (1, 1)).outer(), BoundaryPoint::Infinity);
        assert!(FareyEdge::new(&BoundaryPoint::int(0), &BoundaryPoint::int(2)).is_err());
        assert!(FareyEdge::new(&BoundaryPoint::int(1), &BoundaryPoint::int(0)).is_err());
    }

    #[test]
    fn membership_examples() {
        assert!(is_in_a(&fig2()));
        assert!(is_in_a(&geo(Real::from_int(-1), Real::from_int(1))));
        assert!(!is_in_a(&geo(surd(0, 1, 1, 2), surd(0, 1, 1, 3))));
        assert!(!is_in_a(&geo(Real::zero(), Real::from_int(2))));
        assert!(is_in_a(&geo(surd(-1, 1, 2, 5), surd(-1, -1, 2, 5))));
    }

    #[test]
    fn cutting_sequence_examples() {
        assert_eq!(cutting_sequence(&fig2(), 6).unwrap(), vec![L, L, R, L, L, R]);
        assert_eq!(cutting_sequence(&golden(), 6).unwrap(), vec![L, R, L, R, L, R]);
        let cusp = geo(Real::from_ratio(-1, 2), Real::from_int(3));
        assert_eq!(cutting_sequence(&cusp, 4).unwrap(), vec![L, L, L, End]);
        assert_eq!(cutting_sequence(&cusp, 10).unwrap().len(), 4);
        let five_halves = geo(Real::from_ratio(-1, 2), Real::from_ratio(5, 2));
        assert_eq!(letters_to_string(&cutting_sequence(&five_halves, 9).unwrap()), "LLRR⊥");
        assert!(cutting_sequence(&geo(surd(0, 1, 1, 2), surd(0, 1, 1, 3)), 3).is_err());
    }

    #[test]
    fn mirrored_geodesic_swaps_letters() {
        let g = geo(surd(-1, 1, 1, 3), surd(-1, -1, 1, 3));
        assert_eq!(cutting_sequence(&g, 6).unwrap(), vec![R, R, L, R, R, L]);
    }

    #[test]
    fn past_letters_start_with_r() {
        // −1/γ₋ = (1 + √3)/2 = [1; 2, 1, 2, …]
        assert_eq!(past_cutting_sequence(&fig2(), 6).unwrap(), vec![R, L, L, R, L, L]);
    }

    #[test]
    fn runs_examples() {
        let r = runs(&[L, L, R, L, L, R]).unwrap();
        assert_eq!(r.runs, vec![BigInt::from(2), 1.into(), 2.into(), 1.into()]);
        assert_eq!(r.first, L);
        assert_eq!(r.to_string(), "(2,1,2,1)@L");
        assert_eq!(runs(&[L, R, L, R]).unwrap().to_string(), "(1,1,1,1)@L");
        assert_eq!(runs(&[R, R, R]).unwrap().to_string(), "(3)@R");
        assert!(runs(&[L, End, R]).is_err());
        assert!(runs(&[]).is_err());
    }

    #[test]
    fn tips_examples() {
        let t = tips(&fig2(), 3).unwrap();
        let v: Vec<_> = t.iter().map(|t| (t.vertex.clone(), t.order.clone().unwrap())).collect();
        assert_eq!(
            v,
            vec![
                (rat(2, 1), BigInt::from(1)),
                (rat(3, 1), BigInt::from(2)),
                (rat(8, 3), BigInt::from(1)),
            ]
        );
        let t = tips(&golden(), 3).unwrap();
        let v: Vec<_> = t.iter().map(|t| t.vertex.clone()).collect();
        assert_eq!(v, vec![rat(1, 1), rat(2, 1), rat(3, 2)]);
        assert!(t.iter().all(|t| t.order == Some(BigInt::one())));
        let cusp = geo(Real::from_ratio(-1, 2), Real::from_int(3));
        let t = tips(&cusp, 1).unwrap();
        assert_eq!(t, vec![Tip { vertex: rat(3, 1), order: None, side: End }]);
    }

    #[test]
    fn tips_alternate_sides() {
        let t = tips(&fig2(), 8).unwrap();
        for w in t.windows(2) {
            assert_ne!(w[0].side, w[1].side);
        }
    }

    #[test]
    fn reduce_examples() {
        let (g, m) = reduce_to_a(&fig2()).unwrap();
        assert_eq!((g, m), (fig2(), IntMatrix2::identity()));
        let rev = fig2().reversed();
        let (g, m) = reduce_to_a(&rev).unwrap();
        assert_eq!(m, IntMatrix2::s());
        assert_eq!(g, geo(surd(1, -1, 2, 3), surd(1, 1, 2, 3)));
        let g0 = geo(surd(0, 1, 1, 2), surd(0, 1, 1, 3));
        let (g, m) = reduce_to_a(&g0).unwrap();
        assert!(is_in_a(&g));
        assert_eq!(mobius_on_geodesic(&m, &g0), g);
        assert!(m.is_modular());
    }

    #[test]
    fn reduce_rejects_rational_future() {
        let g = geo(surd(0, 1, 1, 2), Real::from_ratio(7, 5));
        assert!(matches!(reduce_to_a(&g), Err(Error::Cusp(_))));
    }

    #[test]
    fn triangle_enumeration() {
        let t = farey_triangles(0);
        assert_eq!(t.len(), 2);
        assert_eq!(t[0], FareyTriangle::base());
        assert_eq!(farey_triangles(3).len(), 2 * (1 + 2 + 4 + 8));
        for tri in farey_triangles(4) {
            tri.edges();
        }
    }
}
