//! Bracket notation: `[a0]`, `[a0; a1, a2]`, `[a0; (p1, p2)]` and
//! `[a0; a1, a2 | (p1, p2)]`.

use std::fmt;

use num_bigint::BigInt;

use super::{CfBody, CfExpansion};
use crate::error::{Error, Result};

fn join(f: &mut fmt::Formatter<'_>, digits: &[BigInt]) -> fmt::Result {
    for (i, d) in digits.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{d}")?;
    }
    Ok(())
}

pub(super) fn write_cf(cf: &CfExpansion, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "[{}", cf.a0)?;
    match &cf.body {
        CfBody::Finite(d) if d.is_empty() => {}
        CfBody::Finite(d) => {
            write!(f, "; ")?;
            join(f, d)?;
        }
        CfBody::EventuallyPeriodic { pre, period } => {
            write!(f, "; ")?;
            if !pre.is_empty() {
                join(f, pre)?;
                write!(f, " | ")?;
            }
            write!(f, "(")?;
            join(f, period)?;
            write!(f, ")")?;
        }
        CfBody::Stream(s) => {
            write!(f, "; ")?;
            let cached = s.cached();
            join(f, &cached)?;
            if !cached.is_empty() {
                write!(f, ", ")?;
            }
            write!(f, "…")?;
        }
    }
    write!(f, "]")
}

fn parse_list(s: &str) -> Result<Vec<BigInt>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<BigInt>().map_err(|_| Error::parse(format!("bad digit {t:?}")))
        })
        .collect()
}

/// Parses bracket notation. Digits after `a0` must be positive; the result
/// is put in canonical form.
pub fn parse_cf(input: &str) -> Result<CfExpansion> {
    let s = input.trim();
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::parse("expected [a0; …]"))?;
    let (head, rest) = match inner.split_once(';') {
        Some((h, r)) => (h, Some(r)),
        None => (inner, None),
    };
    let head = head.trim();
    let a0: BigInt = head.parse().map_err(|_| Error::parse(format!("bad a0 {head:?}")))?;
    let Some(rest) = rest else {
        return CfExpansion::finite(a0, Vec::new());
    };
    let rest = rest.trim();
    if let Some(open) = rest.find('(') {
        let close = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::parse("period must close the expansion"))?;
        let pre_part = rest[..open].trim();
        let pre_part = if pre_part.is_empty() {
            ""
        } else {
            pre_part
                .strip_suffix('|')
                .ok_or_else(|| Error::parse("expected '|' before the period"))?
        };
        let pre = parse_list(pre_part)?;
        let period = parse_list(&close[open + 1..])?;
        if period.is_empty() {
            return Err(Error::parse("empty period"));
        }
        CfExpansion::periodic(a0, pre, period).map_err(|e| Error::parse(e.to_string()))
    } else {
        if rest.contains(['|', ')']) {
            return Err(Error::parse("unbalanced period markers"));
        }
        let digits = parse_list(rest)?;
        if digits.is_empty() {
            return Err(Error::parse("empty digit list after ';'"));
        }
        CfExpansion::finite(a0, digits).map_err(|e| Error::parse(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::super::ints;
    use super::*;

    #[test]
    fn display_forms() {
        assert_eq!(CfExpansion::finite(3, ints([7, 16])).unwrap().to_string(), "[3; 7, 16]");
        assert_eq!(CfExpansion::finite(-2, vec![]).unwrap().to_string(), "[-2]");
        assert_eq!(
            CfExpansion::periodic(1, vec![], ints([1, 2])).unwrap().to_string(),
            "[1; (1, 2)]"
        );
        assert_eq!(
            CfExpansion::periodic(0, ints([3]), ints([1, 2])).unwrap().to_string(),
            "[0; 3 | (1, 2)]"
        );
    }

    #[test]
    fn parse_round_trip() {
        for s in ["[3; 7, 16]", "[-2]", "[1; (1, 2)]", "[0; 3 | (1, 2)]", "[5; 4 | (7)]"] {
            assert_eq!(parse_cf(s).unwrap().to_string(), s);
        }
        assert_eq!(parse_cf(" [ 0 ;2,1 ] ").unwrap().to_string(), "[0; 3]");
    }

    #[test]
    fn parse_rejects() {
        for s in ["3; 7", "[x]", "[1; 0]", "[1; ()]", "[1; 2 (3)]", "[1; 2 | 3]", "[1;]", "[1; -2]"] {
            assert!(parse_cf(s).is_err(), "{s}");
        }
    }
}
