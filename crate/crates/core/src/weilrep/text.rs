//! Plain-text vector-valued forms:
//!
//! ```text
//! gram
//! 2 1
//! 1 4
//! weight -1
//! rep rho
//! prec 6/7
//! coset (0,0)
//! 0 14
//! coset (6/7,2/7)
//! -1/7 3
//! ```

use std::sync::Arc;

use super::{Rep, VVForm, WeilError};
use crate::lattice::{Coset, DiscriminantForm, EvenLattice};
use crate::qseries::{parse_frac, render, Frac};

pub fn write_vvform(f: &VVForm) -> String {
    let mut out = String::from("gram\n");
    out.push_str(&f.disc().lattice().to_text());
    out.push('\n');
    out.push_str(&format!(
        "weight {}\nrep {}\nprec {}\n",
        render(f.weight()),
        f.rep(),
        render(f.prec())
    ));
    for (x, s) in f.components() {
        out.push_str(&format!("coset {x}\n"));
        for (e, c) in s.terms() {
            out.push_str(&format!("{} {}\n", render(&e), render(c)));
        }
    }
    out
}

/// Parses [`write_vvform`] output. `#` starts a comment.
pub fn parse_vvform(text: &str) -> Result<VVForm, WeilError> {
    let mut gram: Vec<Vec<i64>> = Vec::new();
    let mut in_gram = false;
    let mut weight: Option<Frac> = None;
    let mut rep: Option<Rep> = None;
    let mut prec: Option<Frac> = None;
    let mut current: Option<Coset> = None;
    let mut terms: Vec<(Coset, Frac, Frac)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: &str| WeilError::Parse {
            line: i + 1,
            msg: msg.to_string(),
        };
        if line == "gram" {
            in_gram = true;
            continue;
        }
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        if in_gram {
            if let Ok(row) = line
                .split_whitespace()
                .map(str::parse::<i64>)
                .collect::<Result<Vec<_>, _>>()
            {
                gram.push(row);
                continue;
            }
            in_gram = false;
        }
        match key {
            "weight" => weight = Some(parse_frac(rest).ok_or_else(|| err("bad weight"))?),
            "rep" => rep = Some(Rep::parse(rest).ok_or_else(|| err("rep must be rho or rho*"))?),
            "prec" => prec = Some(parse_frac(rest).ok_or_else(|| err("bad precision"))?),
            "coset" => current = Some(Coset::parse(rest).ok_or_else(|| err("bad coset"))?),
            _ => {
                let x = current
                    .clone()
                    .ok_or_else(|| err("term before any coset line"))?;
                let fields: Vec<&str> = line.split_whitespace().collect();
                let [e, c] = fields.as_slice() else {
                    return Err(err("expected `exponent coefficient`"));
                };
                let e = parse_frac(e).ok_or_else(|| err("bad exponent"))?;
                let c = parse_frac(c).ok_or_else(|| err("bad coefficient"))?;
                terms.push((x, e, c));
            }
        }
    }
    let missing = |what: &str| WeilError::Parse {
        line: 0,
        msg: format!("missing {what}"),
    };
    if gram.is_empty() {
        return Err(missing("gram block"));
    }
    let lattice = EvenLattice::new(gram)?;
    let disc = Arc::new(DiscriminantForm::new(&lattice)?);
    let rank = lattice.rank();
    if let Some((x, _, _)) = terms.iter().find(|(x, _, _)| x.coords().len() != rank) {
        return Err(WeilError::UnknownCoset(x.to_string()));
    }
    VVForm::from_terms(
        disc,
        weight.ok_or_else(|| missing("weight"))?,
        rep.ok_or_else(|| missing("rep"))?,
        prec.ok_or_else(|| missing("prec"))?,
        terms,
    )
}
