//! Invariant densities, transfer operators and small equidistribution experiments.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{Number, Value};

use crate::cf::primitive_root;
use crate::exact::Rational;
use crate::section::{canonical_rotation, closed_geodesic_from_period, eigenvalue_length, Tail};
use crate::{Error, Result};

/// `(1/ln 2)/(1 + x)`.
pub fn gauss_density(x: f64) -> f64 {
    std::f64::consts::LOG2_E / (1.0 + x)
}

/// `log₂(1 + x)`, the Gauss measure of `[0, x]`.
pub fn gauss_cdf(x: f64) -> f64 {
    (1.0 + x).log2()
}

/// Gauss measure of `(1/(k+1), 1/k]`: `log₂(1 + 1/(k(k+2)))`.
pub fn gauss_digit_probability(k: u64) -> f64 {
    let k = k as f64;
    (1.0 / (k * (k + 2.0))).ln_1p() * std::f64::consts::LOG2_E
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DensityTag {
    Gauss,
    Farey,
    Custom,
}

/// A density on `(0, 1]` that the transfer operators can evaluate anywhere.
#[derive(Clone)]
pub enum Density {
    /// Normalized Gauss density.
    Gauss,
    /// `1/x`, unnormalizable.
    Farey,
    Zero,
    Constant(f64),
    Custom(Arc<dyn Fn(f64) -> f64 + Send + Sync>),
}

impl fmt::Debug for Density {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Density::Gauss => f.write_str("Gauss"),
            Density::Farey => f.write_str("Farey"),
            Density::Zero => f.write_str("Zero"),
            Density::Constant(c) => write!(f, "Constant({c})"),
            Density::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

impl Density {
    pub fn custom(f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Density {
        Density::Custom(Arc::new(f))
    }

    pub fn eval(&self, x: f64) -> f64 {
        match self {
            Density::Gauss => gauss_density(x),
            Density::Farey => 1.0 / x,
            Density::Zero => 0.0,
            Density::Constant(c) => *c,
            Density::Custom(f) => f(x),
        }
    }

    pub fn tag(&self) -> DensityTag {
        match self {
            Density::Gauss => DensityTag::Gauss,
            Density::Farey => DensityTag::Farey,
            _ => DensityTag::Custom,
        }
    }
}

/// Values of a density on a strictly increasing rational grid in `[0, 1]`.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityGrid {
    points: Vec<Rational>,
    values: Vec<f64>,
    tag: DensityTag,
}

fn check_grid(points: &[Rational], allow_zero: bool) -> Result<()> {
    if points.is_empty() {
        return Err(Error::domain("empty grid"));
    }
    for p in points {
        if p.is_negative() || *p > Rational::one() {
            return Err(Error::domain(format!("grid point {p} outside [0, 1]")));
        }
        if !allow_zero && p.is_zero() {
            return Err(Error::domain("grid contains the pole at 0"));
        }
    }
    if points.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::domain("grid not strictly increasing"));
    }
    Ok(())
}

impl DensityGrid {
    pub fn sample(f: &Density, points: Vec<Rational>) -> Result<DensityGrid> {
        check_grid(&points, f.tag() != DensityTag::Farey)?;
        let values = points.iter().map(|p| f.eval(rat_f64(p))).collect();
        Ok(DensityGrid { points, values, tag: f.tag() })
    }

    pub fn points(&self) -> &[Rational] {
        &self.points
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn tag(&self) -> DensityTag {
        self.tag
    }

    /// Sup-norm distance; grids must share their points.
    pub fn sup_distance(&self, other: &DensityGrid) -> Result<f64> {
        if self.points != other.points {
            return Err(Error::domain("grids differ"));
        }
        Ok(self.values.iter().zip(&other.values).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max))
    }
}

fn rat_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `k/n` for `k = 1..=n`.
pub fn uniform_grid(n: u64) -> Vec<Rational> {
    (1..=n).map(|k| Rational::new(BigInt::from(k), BigInt::from(n))).collect()
}

/// `L f(x) = Σ_{n ≤ N} (n + x)⁻² f(1/(n + x))` at each grid point.
pub fn transfer_gauss(f: &Density, points: &[Rational], branches: u64) -> Result<DensityGrid> {
    if branches == 0 {
        return Err(Error::domain("transfer operator needs at least one branch"));
    }
    check_grid(points, true)?;
    let values = points
        .iter()
        .map(|p| {
            let x = rat_f64(p);
            // smallest terms first
            (1..=branches)
                .rev()
                .map(|n| {
                    let t = n as f64 + x;
                    f.eval(1.0 / t) / (t * t)
                })
                .sum()
        })
        .collect();
    Ok(DensityGrid { points: points.to_vec(), values, tag: f.tag() })
}

/// `L f(y) = (1 + y)⁻² [f(y/(1 + y)) + f(1/(1 + y))]` at each grid point; `0` excluded.
pub fn transfer_farey(f: &Density, points: &[Rational]) -> Result<DensityGrid> {
    check_grid(points, false)?;
    let values = points
        .iter()
        .map(|p| {
            let y = rat_f64(p);
            let s = 1.0 + y;
            (f.eval(y / s) + f.eval(1.0 / s)) / (s * s)
        })
        .collect();
    Ok(DensityGrid { points: points.to_vec(), values, tag: f.tag() })
}

/// Exact Farey transfer operator at a single rational `y > 0`.
pub fn transfer_farey_exact(f: impl Fn(&Rational) -> Rational, y: &Rational) -> Rational {
    let s = Rational::one() + y;
    (f(&(y / &s)) + f(&s.recip())) / (&s * &s)
}

/// `Σ_{n ≤ N} 1/((n + x)(n + x + 1))`, the Gauss operator applied to `1/(1 + x)`.
pub fn gauss_partial_sum(x: &Rational, branches: u64) -> Rational {
    let mut acc = Rational::zero();
    for n in 1..=branches {
        let t = x + Rational::from_integer(BigInt::from(n));
        acc += (&t * (&t + Rational::one())).recip();
    }
    acc
}

/// `1/(1 + x) − 1/(N + 1 + x)`.
pub fn gauss_partial_sum_closed(x: &Rational, branches: u64) -> Rational {
    (Rational::one() + x).recip() - (x + Rational::from_integer(BigInt::from(branches + 1))).recip()
}

/// Kolmogorov–Smirnov distance of a sample to a continuous CDF. The sample is sorted in place.
pub fn ks_distance(sample: &mut [f64], cdf: impl Fn(f64) -> f64) -> f64 {
    sample.sort_by(f64::total_cmp);
    let n = sample.len() as f64;
    sample
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let c = cdf(x);
            (c - i as f64 / n).max((i + 1) as f64 / n - c)
        })
        .fold(0.0, f64::max)
}

/// Decimal text of `x` with 17 significant digits.
pub fn fmt17(x: f64) -> String {
    if x == 0.0 {
        return "0.0".to_string();
    }
    let e = x.abs().log10().floor() as i32;
    if (-5..17).contains(&e) {
        format!("{:.*}", (16 - e).max(0) as usize, x)
    } else {
        format!("{:.16e}", x)
    }
}

/// JSON number carrying [`fmt17`] text; non-finite values become `null`.
pub fn num17(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    Number::from_str(&fmt17(x)).map(Value::Number).unwrap_or(Value::Null)
}

fn word_json(w: &[BigInt]) -> Value {
    Value::Array(w.iter().map(|d| Value::String(d.to_string())).collect())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub name: String,
    pub params: BTreeMap<String, Value>,
    pub stats: BTreeMap<String, Value>,
    pub pass: bool,
}

impl ExperimentReport {
    fn new(name: &str) -> Self {
        ExperimentReport {
            name: name.to_string(),
            params: BTreeMap::new(),
            stats: BTreeMap::new(),
            pass: false,
        }
    }

    fn param(mut self, k: &str, v: impl Into<Value>) -> Self {
        self.params.insert(k.to_string(), v.into());
        self
    }

    fn stat(&mut self, k: &str, v: impl Into<Value>) {
        self.stats.insert(k.to_string(), v.into());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Tolerance on the truncated Gauss operator applied to the density at `10⁴` branches.
pub const GAUSS_SUP_TOLERANCE: f64 = 2e-4;

/// Sup-error of the truncated Gauss operator on the density over `uniform_grid(grid)`,
/// plus an exact check of the telescoping sum on the same grid.
pub fn gauss_invariance(branches: u64, grid: u64) -> Result<ExperimentReport> {
    let points = uniform_grid(grid);
    let before = DensityGrid::sample(&Density::Gauss, points.clone())?;
    let after = transfer_gauss(&Density::Gauss, &points, branches)?;
    let sup = after.sup_distance(&before)?;
    // the exact sum is quadratic in `branches`; cap it so large N stays cheap
    let exact_branches = branches.min(200);
    let mismatches = points
        .iter()
        .filter(|x| gauss_partial_sum(x, exact_branches) != gauss_partial_sum_closed(x, exact_branches))
        .count();
    let bound = gauss_density(0.0) / (branches + 1) as f64;
    let mut r = ExperimentReport::new("gauss_invariance").param("branches", branches).param("grid", grid);
    r.stat("sup_error", num17(sup));
    r.stat("tail_bound", num17(bound));
    r.stat("telescope_branches", exact_branches);
    r.stat("telescope_mismatches", mismatches as u64);
    r.pass = sup <= bound + 1e-12 && mismatches == 0;
    Ok(r)
}

/// Exact fixed-point check of `1/x` under the Farey operator at `k/grid`, `k = 1..=grid`.
pub fn farey_invariance(grid: u64) -> Result<ExperimentReport> {
    if grid == 0 {
        return Err(Error::domain("empty grid"));
    }
    let points = uniform_grid(grid);
    let mismatches = points.iter().filter(|y| transfer_farey_exact(|x| x.recip(), y) != y.recip()).count();
    let after = transfer_farey(&Density::Farey, &points)?;
    let worst = points
        .iter()
        .zip(after.values())
        .map(|(y, v)| {
            let want = 1.0 / rat_f64(y);
            ((v - want) / want).abs()
        })
        .fold(0.0, f64::max);
    let mut r = ExperimentReport::new("farey_invariance").param("grid", grid);
    r.stat("exact_mismatches", mismatches as u64);
    r.stat("max_relative_float_error", num17(worst));
    r.pass = mismatches == 0 && worst <= 1e-12;
    Ok(r)
}

/// Digits reported individually by [`digit_statistics`]; larger ones are pooled.
pub const REPORTED_DIGITS: u64 = 10;

/// First-digit counts of `samples` Gauss-distributed points, index `k − 1` for
/// `k ≤ REPORTED_DIGITS` and the last slot for the rest.
pub fn sample_first_digits(samples: u64, seed: u64) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = vec![0u64; REPORTED_DIGITS as usize + 1];
    let mut drawn = 0;
    while drawn < samples {
        let u: f64 = rng.gen();
        let x = u.exp2() - 1.0;
        if x <= 0.0 {
            continue;
        }
        let d = (1.0 / x).floor();
        let slot = if d <= REPORTED_DIGITS as f64 { d as usize - 1 } else { REPORTED_DIGITS as usize };
        counts[slot] += 1;
        drawn += 1;
    }
    counts
}

/// Tolerance on first-digit frequencies for `k ≤ 3`.
pub const DIGIT_TOLERANCE: f64 = 0.005;

pub fn digit_statistics(samples: u64, seed: u64) -> Result<ExperimentReport> {
    if samples == 0 {
        return Err(Error::domain("need at least one sample"));
    }
    let counts = sample_first_digits(samples, seed);
    let mut r = ExperimentReport::new("digit_statistics").param("samples", samples).param("seed", seed);
    let n = samples as f64;
    let mut freqs = BTreeMap::new();
    let mut expected = BTreeMap::new();
    let mut worst: f64 = 0.0;
    for k in 1..=REPORTED_DIGITS {
        let f = counts[k as usize - 1] as f64 / n;
        let e = gauss_digit_probability(k);
        if k <= 3 {
            worst = worst.max((f - e).abs());
        }
        freqs.insert(k.to_string(), num17(f));
        expected.insert(k.to_string(), num17(e));
    }
    let tail = counts[REPORTED_DIGITS as usize] as f64 / n;
    freqs.insert("rest".to_string(), num17(tail));
    expected.insert("rest".to_string(), num17(gauss_cdf(1.0 / (REPORTED_DIGITS + 1) as f64)));
    r.stat("frequency", Value::Object(freqs.into_iter().collect()));
    r.stat("expected", Value::Object(expected.into_iter().collect()));
    r.stat("max_deviation_k_le_3", num17(worst));
    r.stat("tolerance", num17(DIGIT_TOLERANCE));
    r.pass = worst < DIGIT_TOLERANCE;
    Ok(r)
}

fn for_each_word(max_digit: u64, max_len: usize, mut f: impl FnMut(&[BigInt])) {
    for len in 1..=max_len {
        let mut w = vec![1u64; len];
        loop {
            let b: Vec<BigInt> = w.iter().map(|&d| BigInt::from(d)).collect();
            f(&b);
            let mut i = 0;
            while i < len && w[i] == max_digit {
                w[i] = 1;
                i += 1;
            }
            if i == len {
                break;
            }
            w[i] += 1;
        }
    }
}

/// Longest period used by [`quadratic_equidistribution`].
pub const EQUIDISTRIBUTION_PERIOD: usize = 4;

/// `[0; (w)]` for every primitive word with digits `≤ max_digit` and period `≤ 4`.
pub fn periodic_points(max_digit: u64) -> Result<Vec<f64>> {
    let mut out = Vec::new();
    let mut err = None;
    for_each_word(max_digit, EQUIDISTRIBUTION_PERIOD, |w| {
        if err.is_some() || primitive_root(w).len() != w.len() {
            return;
        }
        let v = Tail::periodic(Vec::new(), w.to_vec()).map(|t| t.value());
        match v.map(|v| v.recip().expect("tail ≥ 1").to_f64()) {
            Ok(x) => out.push(x),
            Err(e) => err = Some(e),
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

fn equidistribution_ks(max_digit: u64) -> Result<(usize, f64)> {
    let mut pts = periodic_points(max_digit)?;
    let n = pts.len();
    Ok((n, ks_distance(&mut pts, gauss_cdf)))
}

pub fn quadratic_equidistribution(max_digit: u64) -> Result<ExperimentReport> {
    if max_digit == 0 {
        return Err(Error::domain("digit bound must be ≥ 1"));
    }
    let (count, ks) = equidistribution_ks(max_digit)?;
    let mut r = ExperimentReport::new("quadratic_equidistribution")
        .param("digit_bound", max_digit)
        .param("max_period", EQUIDISTRIBUTION_PERIOD as u64);
    r.stat("points", count as u64);
    r.stat("ks", num17(ks));
    r.pass = ks.is_finite();
    Ok(r)
}

/// KS distance per digit bound; passes when it strictly decreases along `bounds`.
pub fn equidistribution_trend(bounds: &[u64]) -> Result<ExperimentReport> {
    if bounds.is_empty() || bounds.contains(&0) {
        return Err(Error::domain("digit bounds must be ≥ 1"));
    }
    let mut ks = Vec::with_capacity(bounds.len());
    let mut per = serde_json::Map::new();
    for &b in bounds {
        let (count, d) = equidistribution_ks(b)?;
        let mut entry = serde_json::Map::new();
        entry.insert("points".into(), Value::from(count as u64));
        entry.insert("ks".into(), num17(d));
        per.insert(b.to_string(), Value::Object(entry));
        ks.push(d);
    }
    let mut r = ExperimentReport::new("equidistribution_trend").param(
        "digit_bounds",
        Value::Array(bounds.iter().map(|&b| Value::from(b)).collect()),
    );
    r.stat("by_bound", Value::Object(per));
    r.pass = ks.windows(2).all(|w| w[1] < w[0]);
    Ok(r)
}

/// One class of primitive closed geodesics; `word` is the canonical rotation
/// of the primitive period, before doubling.
#[derive(Clone, Debug, PartialEq)]
pub struct CensusClass {
    pub word: Vec<BigInt>,
    /// Summed first-return times.
    pub length: f64,
    pub eigenvalue_length: f64,
    /// `[0; (rotation)]` for each distinct rotation of `word`.
    pub factor_values: Vec<f64>,
}

/// Tolerance between summed return times and the eigenvalue length.
pub const CENSUS_TOLERANCE: f64 = 1e-9;

/// Primitive classes with length `≤ max_length`, sorted by length then word.
pub fn census(max_length: f64) -> Result<Vec<CensusClass>> {
    if max_length.is_nan() || max_length <= 0.0 || max_length.is_infinite() {
        return Err(Error::domain("max_length must be a positive real"));
    }
    // trace ≤ bound ⇔ length ≤ max_length; the prefix continuant bounds the trace from below
    let bound = 2.0 * (max_length / 2.0).cosh();
    let mut words = Vec::new();
    let mut stack: Vec<(Vec<u64>, f64, f64)> = vec![(Vec::new(), 1.0, 0.0)];
    // (prefix, K(prefix), K(prefix minus its last digit))
    while let Some((w, k, k_prev)) = stack.pop() {
        if !w.is_empty() {
            words.push(w.clone());
        }
        for d in 1u64.. {
            let k_next = d as f64 * k + k_prev;
            if k_next > bound {
                break;
            }
            let mut v = w.clone();
            v.push(d);
            stack.push((v, k_next, k));
        }
    }
    let mut out = Vec::new();
    for w in words {
        let b: Vec<BigInt> = w.iter().map(|&d| BigInt::from(d)).collect();
        if primitive_root(&b).len() != b.len() || canonical_rotation(&b) != b {
            continue;
        }
        let mut doubled = b.clone();
        if b.len() % 2 == 1 {
            doubled.extend_from_slice(&b);
        }
        let eig = eigenvalue_length(&doubled)?;
        if eig > max_length + CENSUS_TOLERANCE {
            continue;
        }
        let c = closed_geodesic_from_period(&b)?;
        if c.length > max_length {
            continue;
        }
        let factor_values = (0..b.len())
            .map(|k| {
                let mut r = b.clone();
                r.rotate_left(k);
                Tail::periodic(Vec::new(), r).map(|t| t.value().recip().expect("tail ≥ 1").to_f64())
            })
            .collect::<Result<Vec<_>>>()?;
        out.push(CensusClass {
            word: b,
            length: c.length,
            eigenvalue_length: eig,
            factor_values,
        });
    }
    out.sort_by(|a, b| a.length.total_cmp(&b.length).then_with(|| a.word.cmp(&b.word)));
    Ok(out)
}

pub fn closed_geodesic_census(max_length: f64) -> Result<ExperimentReport> {
    let classes = census(max_length)?;
    let mut r = ExperimentReport::new("closed_geodesic_census").param("max_length", num17(max_length));
    let mut worst: f64 = 0.0;
    let mut factors = Vec::new();
    let list = classes
        .iter()
        .map(|c| {
            worst = worst.max((c.length - c.eigenvalue_length).abs());
            factors.extend_from_slice(&c.factor_values);
            let mut m = serde_json::Map::new();
            m.insert("word".into(), word_json(&c.word));
            m.insert("length".into(), num17(c.length));
            m.insert("eigenvalue_length".into(), num17(c.eigenvalue_length));
            Value::Object(m)
        })
        .collect();
    r.stat("classes", Value::Array(list));
    r.stat("count", classes.len() as u64);
    r.stat("max_length_discrepancy", num17(worst));
    let ks = if factors.is_empty() { f64::NAN } else { ks_distance(&mut factors, gauss_cdf) };
    r.stat("factor_points", factors.len() as u64);
    r.stat("factor_ks", num17(ks));
    r.pass = worst < CENSUS_TOLERANCE;
    Ok(r)
}
