//! Subcommands. Each builds its whole output before anything is written, so a
//! failing command leaves stdout (or `--out`) untouched.

use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use modsurf_core::cf::{convergents, expand, mediant_convergents, CfBody, CfExpansion};
use modsurf_core::exact::precision::to_f64_checked;
use modsurf_core::exact::{parse_boundary, parse_real, Real};
use modsurf_core::farey::{cutting_sequence, is_in_a, letters_to_string, reduce_to_a, runs, tips};
use modsurf_core::hyperbolic::{geodesic_through, Geodesic};
use modsurf_core::measures::{
    closed_geodesic_census, digit_statistics, equidistribution_trend, farey_invariance, fmt17, gauss_invariance,
    num17, ExperimentReport,
};
use modsurf_core::section::{
    closed_geodesic_from_period, decode, eigenvalue_length, factor_to_unit_interval, first_return, shift, Parity,
    SigmaElement,
};
use modsurf_core::Error;
use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::{json, Value};
use thiserror::Error as ThisError;

use crate::exit;
use crate::svg::{draw, Window};

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("usage: {0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::Parse(_)) | CliError::Usage(_) => exit::PARSE,
            CliError::Core(Error::PrecisionExhausted { .. }) => exit::PRECISION,
            CliError::Core(_) => exit::DOMAIN,
            CliError::Io { .. } => exit::IO,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Debug, Parser)]
#[command(name = "modsurf", version, about = "Geodesics on the modular surface and continued fractions")]
pub struct Cli {
    /// Output format; `svg` applies to `draw` only, which always emits SVG.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for sampling experiments.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest working precision, in bits, for rounding exact values to floats.
    #[arg(long, global = true, default_value_t = 256)]
    pub precision: u32,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Experiment {
    /// First-digit frequencies of Gauss-distributed samples.
    Digits,
    /// Truncated Gauss transfer operator on its density.
    Gauss,
    /// Exact Farey transfer operator on 1/x.
    Farey,
    /// KS distance of periodic points to the Gauss CDF per digit bound.
    Equidistribution,
    /// Primitive closed geodesics up to a length.
    Census,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Continued fraction of a value.
    Expand {
        /// Value, e.g. `355/113` or `(1+1*sqrt(5))/2`.
        #[arg(long, allow_hyphen_values = true)]
        value: String,
        /// Show only the first N digits, `a0` included.
        #[arg(long)]
        digits: Option<usize>,
        /// Number of convergents to list.
        #[arg(long)]
        convergents: Option<usize>,
        /// List intermediate fractions below this many convergents.
        #[arg(long)]
        mediants: Option<usize>,
    },
    /// Cutting sequence of the geodesic from `past` to `future`.
    Code {
        #[arg(long, allow_hyphen_values = true)]
        past: String,
        #[arg(long, allow_hyphen_values = true)]
        future: String,
        /// Number of letters.
        #[arg(long, default_value_t = 12)]
        letters: usize,
        /// Move the geodesic into A first and report the matrix used.
        #[arg(long)]
        reduce: bool,
    },
    /// First-return trajectory of a periodic section point.
    Section {
        /// Period digits, comma separated, e.g. `2,1`.
        #[arg(long, allow_hyphen_values = true)]
        periodic: String,
        /// Parity bit of the starting point.
        #[arg(long, default_value_t = 0)]
        parity: u8,
        /// Number of returns; defaults to the word length.
        #[arg(long)]
        steps: Option<usize>,
        /// Also report the length of the closed geodesic.
        #[arg(long)]
        closed: bool,
    },
    /// Length of one closed geodesic, or the census up to a length.
    Closed {
        /// Period digits, comma separated.
        #[arg(long, required_unless_present = "max_length", conflicts_with = "max_length")]
        word: Option<String>,
        #[arg(long)]
        max_length: Option<f64>,
    },
    /// Measure experiments.
    Measure {
        #[arg(value_enum)]
        experiment: Experiment,
        /// Sample count for `digits`.
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        /// Branch count for `gauss`.
        #[arg(long, default_value_t = 10_000)]
        branches: u64,
        /// Grid size for `gauss` and `farey`.
        #[arg(long, default_value_t = 1000)]
        grid: u64,
        /// Digit bounds for `equidistribution`, comma separated.
        #[arg(long, default_value = "2,3,4")]
        bounds: String,
        /// Length bound for `census`.
        #[arg(long, default_value_t = 2.7)]
        max_length: f64,
    },
    /// SVG of the Farey tessellation, optionally with a geodesic.
    Draw {
        /// Stern–Brocot generations below the base triangles.
        #[arg(long, default_value_t = 3)]
        depth: usize,
        /// Horizontal range `a:b`.
        #[arg(long, default_value = "-2:3", allow_hyphen_values = true)]
        window: String,
        /// Top of the visible strip.
        #[arg(long, default_value_t = 2.5)]
        height: f64,
        /// Feet `past,future`.
        #[arg(long, allow_hyphen_values = true)]
        geodesic: Option<String>,
    },
}

struct Sink {
    format: Format,
    buf: String,
}

impl Sink {
    fn line(&mut self, s: impl AsRef<str>) {
        self.buf.push_str(s.as_ref());
        self.buf.push('\n');
    }

    fn record(&mut self, v: Value) {
        self.line(v.to_string());
    }

    fn json(&self) -> bool {
        self.format == Format::Json
    }
}

fn approx(x: &Real, bits: u32) -> Result<f64> {
    Ok(to_f64_checked(x, bits)?)
}

fn parse_word(s: &str) -> Result<Vec<BigInt>> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::Domain("empty word".into()).into());
    }
    let word = t
        .split(',')
        .map(|d| d.trim().parse::<BigInt>().map_err(|_| Error::Parse(format!("bad digit {d:?}"))))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    if word.iter().any(|d| !d.is_positive()) {
        return Err(Error::Domain("digits must be ≥ 1".into()).into());
    }
    Ok(word)
}

fn word_text(w: &[BigInt]) -> String {
    let body: Vec<String> = w.iter().map(|d| d.to_string()).collect();
    format!("({})", body.join(" "))
}

fn word_json(w: &[BigInt]) -> Value {
    Value::Array(w.iter().map(|d| Value::String(d.to_string())).collect())
}

/// Splits `past,future` at the first comma outside parentheses.
fn split_feet(s: &str) -> Result<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Ok((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    Err(Error::Parse(format!("expected `past,future`, got {s:?}")).into())
}

pub fn execute(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    let is_draw = matches!(cli.command, Command::Draw { .. });
    if cli.format == Format::Svg && !is_draw {
        return Err(CliError::Usage("--format svg applies to draw only".into()));
    }
    let mut sink = Sink {
        format: cli.format,
        buf: String::new(),
    };
    match &cli.command {
        Command::Expand {
            value,
            digits,
            convergents,
            mediants,
        } => run_expand(&mut sink, value, *digits, *convergents, *mediants)?,
        Command::Code {
            past,
            future,
            letters,
            reduce,
        } => run_code(&mut sink, past, future, *letters, *reduce)?,
        Command::Section {
            periodic,
            parity,
            steps,
            closed,
        } => run_section(&mut sink, periodic, *parity, *steps, *closed, cli.precision)?,
        Command::Closed { word, max_length } => run_closed(&mut sink, word.as_deref(), *max_length)?,
        Command::Measure {
            experiment,
            samples,
            branches,
            grid,
            bounds,
            max_length,
        } => {
            let report = match experiment {
                Experiment::Digits => digit_statistics(*samples, cli.seed)?,
                Experiment::Gauss => gauss_invariance(*branches, *grid)?,
                Experiment::Farey => farey_invariance(*grid)?,
                Experiment::Equidistribution => {
                    let b = parse_word(bounds)?
                        .iter()
                        .map(|d| d.try_into().map_err(|_| Error::Domain(format!("bound {d} too large"))))
                        .collect::<std::result::Result<Vec<u64>, _>>()?;
                    equidistribution_trend(&b)?
                }
                Experiment::Census => closed_geodesic_census(*max_length)?,
            };
            emit_report(&mut sink, &report);
        }
        Command::Draw {
            depth,
            window,
            height,
            geodesic,
        } => {
            let (a, b) = window
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("window must be a:b, got {window:?}")))?;
            let num = |s: &str| s.trim().parse::<f64>().map_err(|_| Error::Parse(format!("bad window bound {s:?}")));
            let w = Window::new(num(a)?, num(b)?, *height)?;
            let g = match geodesic {
                Some(s) => {
                    let (p, f) = split_feet(s)?;
                    Some(geodesic_through(parse_boundary(p)?, parse_boundary(f)?)?)
                }
                None => None,
            };
            let d = draw(*depth, &w, g.as_ref())?;
            sink.buf = d.svg;
            let _ = writeln!(stderr, "edges: {}", d.edges);
        }
    }
    match &cli.out {
        Some(path) => std::fs::write(path, &sink.buf).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => stdout.write_all(sink.buf.as_bytes()).map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        }),
    }
}

fn emit_report(sink: &mut Sink, r: &ExperimentReport) {
    if sink.json() {
        sink.line(r.to_json());
        return;
    }
    sink.line(format!("{}: {}", r.name, if r.pass { "PASS" } else { "FAIL" }));
    for (k, v) in r.params.iter().chain(&r.stats) {
        sink.line(format!("{k}: {v}"));
    }
}

fn shown_prefix(cf: &CfExpansion, n: usize) -> String {
    let digits: Vec<BigInt> = cf.digits().take(n.max(1)).collect();
    let more = cf.digit(digits.len()).is_some();
    let rest: Vec<String> = digits[1..].iter().map(|d| d.to_string()).collect();
    match (rest.is_empty(), more) {
        (true, false) => format!("[{}]", digits[0]),
        (true, true) => format!("[{}; …]", digits[0]),
        (false, false) => format!("[{}; {}]", digits[0], rest.join(", ")),
        (false, true) => format!("[{}; {}, …]", digits[0], rest.join(", ")),
    }
}

fn run_expand(
    sink: &mut Sink,
    value: &str,
    digits: Option<usize>,
    conv: Option<usize>,
    meds: Option<usize>,
) -> Result<()> {
    let x = parse_real(value)?;
    let cf = expand(&x);
    let notation = match digits {
        Some(n) => shown_prefix(&cf, n),
        None => cf.to_string(),
    };
    let periodic = matches!(cf.body(), CfBody::EventuallyPeriodic { .. });
    let available = |k: usize| cf.len().map_or(k, |l| k.min(l));
    if sink.json() {
        let shown = digits.unwrap_or(cf.len().unwrap_or(usize::MAX));
        for (i, d) in cf.digits().take(shown).enumerate() {
            sink.record(json!({"index": i, "digit": d.to_string()}));
        }
        sink.record(json!({"value": x.to_string(), "expansion": notation, "canonical": cf.to_string(), "periodic": periodic}));
    } else {
        sink.line(&notation);
        if periodic && digits.is_some() {
            sink.line(format!("periodic: {cf}"));
        }
    }
    if let Some(k) = conv {
        for c in convergents(&cf, available(k))? {
            if sink.json() {
                sink.record(json!({"convergent": c.index, "p": c.p.to_string(), "q": c.q.to_string()}));
            } else {
                sink.line(format!("convergent {}: {}/{}", c.index, c.p, c.q));
            }
        }
    }
    if let Some(k) = meds {
        for m in mediant_convergents(&cf, available(k))? {
            if sink.json() {
                sink.record(json!({"mediant_level": m.level, "a": m.a.to_string(), "value": m.value.to_string()}));
            } else {
                sink.line(format!("mediant {} a={}: {}", m.level, m.a, m.value));
            }
        }
    }
    Ok(())
}

fn run_code(sink: &mut Sink, past: &str, future: &str, n: usize, reduce: bool) -> Result<()> {
    let g = geodesic_through(parse_boundary(past)?, parse_boundary(future)?)?;
    let g: Geodesic = if is_in_a(&g) {
        g
    } else if reduce {
        let (g2, m) = reduce_to_a(&g)?;
        if sink.json() {
            sink.record(json!({"reduction": m.to_string(), "past": g2.past().to_string(), "future": g2.future().to_string()}));
        } else {
            sink.line(format!("reduced by {m}: {g2}"));
        }
        g2
    } else {
        return Err(Error::Domain(format!("{g} is not in A; pass --reduce")).into());
    };
    let letters = cutting_sequence(&g, n)?;
    let rs = runs(&letters)?;
    let t = tips(&g, rs.runs.len().saturating_sub(1))?;
    if sink.json() {
        for (i, l) in letters.iter().enumerate() {
            sink.record(json!({"index": i, "letter": l.to_string()}));
        }
        let r: Vec<String> = rs.runs.iter().map(|r| r.to_string()).collect();
        sink.record(json!({"runs": r, "first": rs.first.to_string(), "terminated": rs.terminated}));
        for tip in &t {
            sink.record(json!({
                "tip": tip.vertex.to_string(),
                "order": tip.order.as_ref().map(|o| o.to_string()),
                "side": tip.side.to_string(),
            }));
        }
    } else {
        sink.line(letters_to_string(&letters));
        sink.line(format!("runs: {rs}"));
        for tip in &t {
            let order = tip.order.as_ref().map_or("cusp".to_string(), |o| o.to_string());
            sink.line(format!("tip {} order {} side {}", tip.vertex, order, tip.side));
        }
    }
    Ok(())
}

fn run_section(
    sink: &mut Sink,
    periodic: &str,
    parity: u8,
    steps: Option<usize>,
    closed: bool,
    bits: u32,
) -> Result<()> {
    let word = parse_word(periodic)?;
    let parity = Parity::from_bit(parity)?;
    let mut sym = SigmaElement::periodic(&word, parity)?;
    let mut point = decode(&sym)?;
    let mut total = 0.0;
    for i in 0..steps.unwrap_or(word.len()) {
        let factor = factor_to_unit_interval(&sym)?;
        let fx = approx(&factor, bits)?;
        let (next, step) = first_return(&point)?;
        total += step.time;
        let g = point.representative();
        if sink.json() {
            sink.record(json!({
                "step": i,
                "sigma": sym.to_string(),
                "parity": point.parity().bit(),
                "past": g.past().to_string(),
                "future": g.future().to_string(),
                "factor": factor.to_string(),
                "factor_value": num17(fx),
                "digit": step.digit_consumed.to_string(),
                "return_time": num17(step.time),
            }));
        } else {
            sink.line(format!(
                "{i}  {sym}  past={}  future={}  factor={} ≈ {}  digit={}  time={}",
                g.past(),
                g.future(),
                factor,
                fmt17(fx),
                step.digit_consumed,
                fmt17(step.time)
            ));
        }
        sym = shift(&sym)?;
        point = next;
    }
    if sink.json() {
        sink.record(json!({"total_time": num17(total)}));
    } else {
        sink.line(format!("total time: {}", fmt17(total)));
    }
    if closed {
        let c = closed_geodesic_from_period(&word)?;
        let e = eigenvalue_length(&c.word)?;
        if sink.json() {
            sink.record(json!({"closed_word": word_json(&c.word), "length": num17(c.length), "eigenvalue_length": num17(e)}));
        } else {
            sink.line(format!("closed length: {}", fmt17(c.length)));
            sink.line(format!("eigenvalue length: {}", fmt17(e)));
        }
    }
    Ok(())
}

fn run_closed(sink: &mut Sink, word: Option<&str>, max_length: Option<f64>) -> Result<()> {
    if let Some(w) = word {
        let word = parse_word(w)?;
        let c = closed_geodesic_from_period(&word)?;
        let e = eigenvalue_length(&c.word)?;
        if sink.json() {
            let times: Vec<Value> = c.steps.iter().map(|s| num17(s.time)).collect();
            sink.record(json!({
                "word": word_json(&c.word),
                "return_times": times,
                "length": num17(c.length),
                "eigenvalue_length": num17(e),
            }));
        } else {
            sink.line(format!("word: {}", word_text(&c.word)));
            for (i, s) in c.steps.iter().enumerate() {
                sink.line(format!("return {i}: digit {} time {}", s.digit_consumed, fmt17(s.time)));
            }
            sink.line(format!("length: {}", fmt17(c.length)));
            sink.line(format!("eigenvalue length: {}", fmt17(e)));
        }
        return Ok(());
    }
    let max = max_length.ok_or_else(|| CliError::Usage("--word or --max-length required".into()))?;
    let r = closed_geodesic_census(max)?;
    if sink.json() {
        sink.line(r.to_json());
        return Ok(());
    }
    if let Some(Value::Array(classes)) = r.stats.get("classes") {
        for c in classes {
            let digits: Vec<&str> = c["word"].as_array().into_iter().flatten().filter_map(|d| d.as_str()).collect();
            sink.line(format!("({})  {}", digits.join(" "), c["length"]));
        }
    }
    for k in ["count", "factor_points", "factor_ks", "max_length_discrepancy"] {
        if let Some(v) = r.stats.get(k) {
            sink.line(format!("{k}: {v}"));
        }
    }
    sink.line(format!("census: {}", if r.pass { "PASS" } else { "FAIL" }));
    Ok(())
}
