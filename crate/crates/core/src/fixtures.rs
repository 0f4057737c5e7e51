//! Principal parts and truncated expansions of the input forms for the eight
//! lattices, embedded at compile time.
//!
//! Two file shapes share the `#` comment convention:
//!
//! * vector-valued forms in the [`crate::weilrep::parse_vvform`] format,
//!   optionally with `eta <norm> <coeff> m:r ...` lines that add
//!   `coeff * prod eta(m tau)^r` to every coset of that norm;
//! * scalar forms on `Gamma_0(p)`: `bb p`, `weight w`, then a series in the
//!   [`crate::qseries::parse_series`] format.

use std::sync::Arc;

use crate::lattice::{hermitian_lattice, DiscriminantForm};
use crate::lifts::LiftError;
use crate::qseries::{eta_quotient, mod_one, parse_frac, parse_series, Frac, FracSeries};
use crate::weilrep::{bb_lift, parse_vvform, VVForm, WeilError};

pub const FIXTURES: &[(&str, &str)] = &[
    ("d4_F1", include_str!("../fixtures/d4_F1.txt")),
    ("d4_F-1", include_str!("../fixtures/d4_F-1.txt")),
    ("d4_G-1", include_str!("../fixtures/d4_G-1.txt")),
    ("d7_F1", include_str!("../fixtures/d7_F1.txt")),
    ("d7_F2", include_str!("../fixtures/d7_F2.txt")),
    ("d7_F-1", include_str!("../fixtures/d7_F-1.txt")),
    ("d7_G-1", include_str!("../fixtures/d7_G-1.txt")),
    ("d8_F1", include_str!("../fixtures/d8_F1.txt")),
    ("d8_F-1", include_str!("../fixtures/d8_F-1.txt")),
    ("d8_G-1", include_str!("../fixtures/d8_G-1.txt")),
    ("d8_H-1", include_str!("../fixtures/d8_H-1.txt")),
    ("d11_F1", include_str!("../fixtures/d11_F1.txt")),
    ("d11_F-1", include_str!("../fixtures/d11_F-1.txt")),
    ("d11_G-1", include_str!("../fixtures/d11_G-1.txt")),
    ("d11_H-1", include_str!("../fixtures/d11_H-1.txt")),
    ("d15_F1", include_str!("../fixtures/d15_F1.txt")),
    ("d15_F3", include_str!("../fixtures/d15_F3.txt")),
    ("d15_F-1", include_str!("../fixtures/d15_F-1.txt")),
    ("d15_G3", include_str!("../fixtures/d15_G3.txt")),
    ("d15_G-1", include_str!("../fixtures/d15_G-1.txt")),
    ("d15_H-1", include_str!("../fixtures/d15_H-1.txt")),
    ("d19_F0", include_str!("../fixtures/d19_F0.txt")),
    ("d19_F1", include_str!("../fixtures/d19_F1.txt")),
    ("d19_F-1", include_str!("../fixtures/d19_F-1.txt")),
    ("d19_G-1", include_str!("../fixtures/d19_G-1.txt")),
    ("d19_H-1", include_str!("../fixtures/d19_H-1.txt")),
    ("d19_J-1", include_str!("../fixtures/d19_J-1.txt")),
    ("d20_F0", include_str!("../fixtures/d20_F0.txt")),
    ("d20_F1", include_str!("../fixtures/d20_F1.txt")),
    ("d20_F2", include_str!("../fixtures/d20_F2.txt")),
    ("d20_F-1", include_str!("../fixtures/d20_F-1.txt")),
    ("d20_G-1", include_str!("../fixtures/d20_G-1.txt")),
    ("d20_H-1", include_str!("../fixtures/d20_H-1.txt")),
    ("d24_A-1", include_str!("../fixtures/d24_A-1.txt")),
    ("d24_B-1", include_str!("../fixtures/d24_B-1.txt")),
    ("d24_C-1", include_str!("../fixtures/d24_C-1.txt")),
    ("d24_D-1", include_str!("../fixtures/d24_D-1.txt")),
    ("d24_F0", include_str!("../fixtures/d24_F0.txt")),
    ("d24_J-1", include_str!("../fixtures/d24_J-1.txt")),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fixture {
    Vector(VVForm),
    Scalar {
        p: u64,
        weight: Frac,
        series: FracSeries,
    },
}

impl Fixture {
    /// The vector-valued form, lifting scalar forms onto the lattice of
    /// discriminant `p`.
    pub fn to_vector(&self) -> Result<VVForm, LiftError> {
        match self {
            Fixture::Vector(f) => Ok(f.clone()),
            Fixture::Scalar { p, weight, series } => {
                let disc = Arc::new(DiscriminantForm::new(&hermitian_lattice(*p)?)?);
                Ok(bb_lift(series, weight, *p, disc)?)
            }
        }
    }
}

pub fn names() -> impl Iterator<Item = &'static str> {
    FIXTURES.iter().map(|(n, _)| *n)
}

pub fn text(name: &str) -> Result<&'static str, LiftError> {
    FIXTURES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .ok_or_else(|| LiftError::UnknownFixture(name.to_string()))
}

pub fn load(name: &str) -> Result<Fixture, LiftError> {
    parse_fixture(text(name)?)
}

pub fn load_vector(name: &str) -> Result<VVForm, LiftError> {
    load(name)?.to_vector()
}

fn parse_err(line: usize, msg: impl Into<String>) -> LiftError {
    WeilError::Parse {
        line,
        msg: msg.into(),
    }
    .into()
}

pub fn parse_fixture(text: &str) -> Result<Fixture, LiftError> {
    let mut bb: Option<u64> = None;
    let mut weight: Option<Frac> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if let Some(rest) = line.strip_prefix("bb ") {
            bb = Some(
                rest.trim()
                    .parse()
                    .map_err(|_| parse_err(i + 1, "bad prime"))?,
            );
        } else if let Some(rest) = line.strip_prefix("weight ") {
            weight = parse_frac(rest.trim());
        }
    }
    match bb {
        Some(p) => {
            let weight = weight.ok_or_else(|| parse_err(0, "missing weight"))?;
            let rest: String = text
                .lines()
                .filter(|l| {
                    let t = l.trim_start();
                    !t.starts_with("bb ") && !t.starts_with("weight ")
                })
                .map(|l| format!("{l}\n"))
                .collect();
            Ok(Fixture::Scalar {
                p,
                weight,
                series: parse_series(&rest)?,
            })
        }
        None => parse_vector(text).map(Fixture::Vector),
    }
}

/// One `eta` line: the target norm, the scalar, and `(m, r)` factors.
fn parse_eta(line: usize, rest: &str) -> Result<(Frac, Frac, Vec<(u32, i32)>), LiftError> {
    let mut fields = rest.split_whitespace();
    let norm = fields
        .next()
        .and_then(parse_frac)
        .ok_or_else(|| parse_err(line, "bad eta norm"))?;
    let coeff = fields
        .next()
        .and_then(parse_frac)
        .ok_or_else(|| parse_err(line, "bad eta coefficient"))?;
    let factors = fields
        .map(|f| {
            let (m, r) = f.split_once(':')?;
            Some((m.parse().ok()?, r.parse().ok()?))
        })
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| parse_err(line, "eta factors are `m:r`"))?;
    Ok((norm, coeff, factors))
}

fn parse_vector(text: &str) -> Result<VVForm, LiftError> {
    let mut etas = Vec::new();
    let mut rest = String::new();
    for (i, raw) in text.lines().enumerate() {
        match raw.trim_start().strip_prefix("eta ") {
            Some(r) => etas.push(parse_eta(i + 1, r.split('#').next().unwrap_or(""))?),
            None => {
                rest.push_str(raw);
                rest.push('\n');
            }
        }
    }
    let mut form = parse_vvform(&rest)?;
    let disc = form.disc().clone();
    for (norm, coeff, factors) in etas {
        let series = eta_quotient(&factors, form.prec())?.scale(&coeff);
        let target = mod_one(&norm);
        for x in disc.elements() {
            if disc.q(x) == target {
                form.add_series(x, &series)?;
            }
        }
    }
    Ok(form)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::{frac, int};
    use crate::weilrep::Parity;

    #[test]
    fn all_fixtures_parse_and_validate() {
        for name in names() {
            let f = load_vector(name).unwrap_or_else(|e| panic!("{name}: {e}"));
            let odd = ["d7_F2", "d19_F0", "d20_F0", "d20_F2", "d24_F0"].contains(&name);
            let parity = if odd { Parity::Odd } else { Parity::Even };
            let report = f.validate_with_parity(parity);
            assert!(report.is_ok(), "{name}: {:?}", report.violations);
            assert_eq!(
                f.disc().order(),
                name[1..].split('_').next().unwrap().parse::<u64>().unwrap()
            );
        }
    }

    #[test]
    fn eta_components_d4() {
        let f = load_vector("d4_F-1").unwrap();
        let d = f.disc();
        let zero = crate::lattice::Coset::zero(6);
        assert_eq!(f.coeff(&int(0), &zero), Some(int(8)));
        for x in d.heegner_components(&frac(1, 4)) {
            assert_eq!(f.coeff(&frac(-1, 4), &x), Some(int(1)));
            assert_eq!(f.coeff(&frac(-1, 4), &x.neg()), Some(int(1)));
        }
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(load("d5_F-1"), Err(LiftError::UnknownFixture(_))));
    }
}
