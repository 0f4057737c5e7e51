//! Plain-text form of a series: a `prec p/q` header followed by one
//! `exponent coefficient` line per nonzero term.

use super::frac::{parse_frac, render, Frac};
use super::{FracSeries, SeriesError};

pub fn write_series(f: &FracSeries) -> String {
    let mut out = format!("prec {}\n", render(&f.prec()));
    for (e, c) in f.terms() {
        out.push_str(&format!("{} {}\n", render(&e), render(c)));
    }
    out
}

/// Parses the output of [`write_series`]. Blank lines and `#` comments are
/// ignored.
pub fn parse_series(text: &str) -> Result<FracSeries, SeriesError> {
    let mut prec: Option<Frac> = None;
    let mut terms = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: &str| SeriesError::Parse {
            line: i + 1,
            msg: msg.to_string(),
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            ["prec", p] => {
                if prec.is_some() {
                    return Err(err("duplicate prec header"));
                }
                prec = Some(parse_frac(p).ok_or_else(|| err("bad precision"))?);
            }
            [e, c] => {
                if prec.is_none() {
                    return Err(err("term before prec header"));
                }
                let e = parse_frac(e).ok_or_else(|| err("bad exponent"))?;
                let c = parse_frac(c).ok_or_else(|| err("bad coefficient"))?;
                terms.push((e, c));
            }
            _ => return Err(err("expected `prec p/q` or `exponent coefficient`")),
        }
    }
    let prec = prec.ok_or(SeriesError::Parse {
        line: 0,
        msg: "missing prec header".into(),
    })?;
    FracSeries::from_terms(terms, &prec)
}
