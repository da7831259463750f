//! Value grammar shared by the CLI and test fixtures:
//! integers `-?[0-9]+`, rationals `p/q`, surds `(a+b*sqrt(d))/c` with optional
//! parts, and `inf`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{BoundaryPoint, Real};
use crate::error::{Error, Result};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        if self.src[self.pos..].starts_with(kw.as_bytes()) {
            self.pos += kw.len();
            true
        } else {
            false
        }
    }

    fn uint(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn error(&self, msg: &str) -> Error {
        Error::parse(format!(
            "{} at position {} in '{}'",
            msg,
            self.pos,
            String::from_utf8_lossy(self.src)
        ))
    }
}

// a sum of at most one integer term and one radical term: a + b*sqrt(d)
#[derive(Default)]
struct Sum {
    a: Option<BigInt>,
    radical: Option<(BigInt, BigInt)>,
}

fn parse_sum(cur: &mut Cursor) -> Result<Sum> {
    let mut sum = Sum::default();
    let mut first = true;
    loop {
        let negative = if cur.eat(b'-') {
            true
        } else if cur.eat(b'+') || first {
            false
        } else {
            break;
        };
        first = false;
        let sign = if negative { -BigInt::one() } else { BigInt::one() };
        if cur.eat_keyword("sqrt") {
            let d = parse_radical(cur)?;
            add_radical(cur, &mut sum, sign, d)?;
            continue;
        }
        let k = cur.uint()? * &sign;
        if cur.eat(b'*') {
            if !cur.eat_keyword("sqrt") {
                return Err(cur.error("expected 'sqrt' after '*'"));
            }
            let d = parse_radical(cur)?;
            add_radical(cur, &mut sum, k, d)?;
        } else {
            if sum.a.is_some() {
                return Err(cur.error("more than one integer term"));
            }
            sum.a = Some(k);
        }
    }
    Ok(sum)
}

fn parse_radical(cur: &mut Cursor) -> Result<BigInt> {
    cur.expect(b'(')?;
    let d = cur.uint()?;
    cur.expect(b')')?;
    Ok(d)
}

fn add_radical(cur: &Cursor, sum: &mut Sum, b: BigInt, d: BigInt) -> Result<()> {
    if sum.radical.is_some() {
        return Err(cur.error("more than one sqrt term"));
    }
    sum.radical = Some((b, d));
    Ok(())
}

/// Parses a finite value of the grammar.
pub fn parse_real(input: &str) -> Result<Real> {
    let cleaned: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    let mut cur = Cursor {
        src: cleaned.as_bytes(),
        pos: 0,
    };
    if cleaned.is_empty() {
        return Err(Error::parse("empty value"));
    }
    let sum = if cur.eat(b'(') {
        let s = parse_sum(&mut cur)?;
        cur.expect(b')')?;
        s
    } else {
        parse_sum(&mut cur)?
    };
    let c = if cur.eat(b'/') {
        let negative = cur.eat(b'-');
        let c = cur.uint()?;
        if negative {
            -c
        } else {
            c
        }
    } else {
        BigInt::one()
    };
    if cur.pos != cur.src.len() {
        return Err(cur.error("trailing input"));
    }
    if c.is_zero() {
        return Err(Error::parse(format!("zero denominator in '{}'", input)));
    }
    let a = sum.a.unwrap_or_else(BigInt::zero);
    Ok(match sum.radical {
        None => Real::from_ratio(a, c),
        Some((b, d)) => Real::from_surd_parts(a, b, c, d),
    })
}

/// Parses a boundary point: a finite value or `inf`.
pub fn parse_boundary(input: &str) -> Result<BoundaryPoint> {
    let t = input.trim();
    if t == "inf" || t == "∞" {
        return Ok(BoundaryPoint::Infinity);
    }
    parse_real(t).map(BoundaryPoint::Finite)
}

impl std::str::FromStr for Real {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_real(s)
    }
}

impl std::str::FromStr for BoundaryPoint {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_boundary(s)
    }
}
