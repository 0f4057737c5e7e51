//! Per-lattice verification suites. Each returns named expected/computed
//! checks; errors become failing checks instead of aborting the suite.

use std::sync::Arc;

use num_traits::Zero;

use crate::fixtures::{load, load_vector, Fixture};
use crate::lattice::{
    hermitian_lattice, is_field_discriminant, ok_lattice, Coset, DiscriminantForm,
    FREE_DISCRIMINANTS,
};
use crate::lifts::{
    additive_lift_meta, borcherds_divisor, borcherds_weight, classify_siegel, siegel_serre_form,
    verify_table1, HeegnerDivisor, LiftError,
};
use crate::qseries::{frac, int, render, serre_derivative, Frac};
use crate::report::Check;
use crate::weilrep::{
    bb_collapse, bb_lift, check_relations, pairing_constant_term, theta_contract, theta_series,
    PrincipalPart, Rep, VVForm,
};

pub const SUITES: [&str; 14] = [
    "d4", "d7", "d8", "d11", "d15", "d19", "d20", "d24", "additive", "classify", "table1", "weil",
    "serre", "contract",
];

pub fn run_suite(name: &str) -> Option<Vec<Check>> {
    let checks = match name {
        "d4" => d4(),
        "d7" => d7(),
        "d8" => d8(),
        "d11" => d11(),
        "d15" => d15(),
        "d19" => d19(),
        "d20" => d20(),
        "d24" => d24(),
        "additive" => additive(),
        "classify" => classify(),
        "table1" => verify_table1(),
        "weil" => weil(),
        "serre" => serre(),
        "contract" => contract(),
        "all" => SUITES
            .iter()
            .flat_map(|s| run_suite(s).unwrap_or_default())
            .collect(),
        _ => return None,
    };
    Some(checks)
}

fn check<T: ToString>(name: &str, expected: &str, computed: Result<T, LiftError>) -> Check {
    match computed {
        Ok(v) => Check::eq(name, expected, v.to_string()),
        Err(e) => Check::failed(name, expected, e),
    }
}

fn principal(name: &str) -> Result<PrincipalPart, LiftError> {
    Ok(PrincipalPart::of(&load_vector(name)?)?)
}

fn weight(name: &str) -> Result<String, LiftError> {
    Ok(render(&borcherds_weight(&principal(name)?)))
}

fn full_divisor(name: &str) -> Result<(HeegnerDivisor, Arc<DiscriminantForm>), LiftError> {
    let p = principal(name)?;
    let div = borcherds_divisor(&p, &p.max_singular_norm());
    Ok((div, p.disc().clone()))
}

fn divisor(name: &str) -> Result<String, LiftError> {
    let (div, disc) = full_divisor(name)?;
    Ok(div.summary(&disc))
}

/// Multiplicity on `H(m, gamma)`.
fn mult(name: &str, m: Frac, gamma: &str) -> Result<i64, LiftError> {
    let (div, _) = full_divisor(name)?;
    let g = Coset::parse(gamma).expect("literal coset");
    Ok(div.multiplicity(&m, &g))
}

/// Smallest multiplicity (0 for an empty divisor).
fn min_mult(name: &str) -> Result<i64, LiftError> {
    let (div, _) = full_divisor(name)?;
    Ok(div.entries().map(|(_, _, k)| k).min().unwrap_or(0).min(0))
}

fn coeff(f: &VVForm, e: Frac, x: &str) -> String {
    let x = Coset::parse(x).expect("literal coset");
    f.coeff(&e, &x)
        .map(|c| render(&c))
        .unwrap_or_else(|| "beyond precision".into())
}

pub fn d4() -> Vec<Check> {
    let f = load_vector("d4_F-1");
    let z = "(0,0,0,0,0,0)";
    let mut out = vec![
        check(
            "d4 F-1 constant on e0",
            "8",
            f.clone().map(|f| coeff(&f, int(0), z)),
        ),
        check(
            "d4 F-1 q^-1/4 on (0,0,1/2,0,0,0)",
            "1",
            f.clone().map(|f| coeff(&f, frac(-1, 4), "(0,0,1/2,0,0,0)")),
        ),
        check(
            "d4 F-1 q^-1/4 on (0,0,0,1/2,0,0)",
            "1",
            f.map(|f| coeff(&f, frac(-1, 4), "(0,0,0,1/2,0,0)")),
        ),
        check("d4 weight phi4", "4", weight("d4_F-1")),
        check("d4 div phi4", "1·H(1/4)", divisor("d4_F-1")),
        check("d4 weight Phi34", "34", weight("d4_G-1")),
        check("d4 div Phi34", "1·H(1/4); 1·H(1)", divisor("d4_G-1")),
    ];
    out.push(check(
        "d4 Phi34 on H(1,0)",
        "1",
        mult("d4_G-1", int(1), "(0,0,0,0,0,0)"),
    ));
    out
}

fn ok_disc(d: u64) -> Result<Arc<DiscriminantForm>, LiftError> {
    Ok(Arc::new(DiscriminantForm::new(&ok_lattice(d)?)?))
}

fn scalar(name: &str) -> Result<(u64, Frac, crate::qseries::FracSeries), LiftError> {
    match load(name)? {
        Fixture::Scalar { p, weight, series } => Ok((p, weight, series)),
        Fixture::Vector(_) => Err(LiftError::UnknownFixture(format!("{name} is not scalar"))),
    }
}

/// Lifts and collapses every scalar fixture of discriminant `p`.
fn bb_support(p: u64, names: &[&str]) -> Result<&'static str, LiftError> {
    let disc = Arc::new(DiscriminantForm::new(&hermitian_lattice(p)?)?);
    for name in names {
        let (q, w, s) = scalar(name)?;
        let lifted = bb_lift(&s, &w, q, disc.clone())?;
        if bb_collapse(&lifted, q)? != s {
            return Err(LiftError::Inconsistent(format!(
                "{name}: round trip differs"
            )));
        }
    }
    Ok("ok")
}

/// Constant term of `bb_lift(F_-1)` against the Serre derivative of the
/// theta series of `O_K`, both on `O_K(7)`.
pub fn d7_pairing() -> Result<Frac, LiftError> {
    let (p, w, s) = scalar("d7_F-1")?;
    let f = bb_lift(&s, &w, p, ok_disc(7)?)?;
    let theta = theta_series(&ok_lattice(7)?, &int(3))?;
    let mut g = VVForm::zero(theta.disc().clone(), int(3), Rep::RhoDual, int(3));
    for (x, c) in theta.components() {
        g.add_series(x, &serre_derivative(c, theta.weight()))?;
    }
    Ok(pairing_constant_term(&f, &g)?)
}

pub fn d7() -> Vec<Check> {
    vec![
        check("d7 weight phi7", "7", weight("d7_F-1")),
        check("d7 div phi7", "3·H(1/7); 1·H(2/7)", divisor("d7_F-1")),
        check("d7 weight Phi28", "28", weight("d7_G-1")),
        check("d7 div Phi28", "7·H(1/7); 1·H(1)", divisor("d7_G-1")),
        check(
            "d7 BB support and round trip",
            "ok",
            bb_support(7, &["d7_F-1", "d7_G-1", "d7_F1"]),
        ),
        check("d7 pairing zero", "0", d7_pairing().map(|v| render(&v))),
    ]
}

pub fn d8() -> Vec<Check> {
    vec![
        check("d8 weight psi3", "3", weight("d8_F-1")),
        check("d8 div psi3", "2·H(1/8); 1·H(1/4)", divisor("d8_F-1")),
        check("d8 weight phi3", "3", weight("d8_G-1")),
        check("d8 div phi3", "-3·H(1/8); 1·H(1/2)", divisor("d8_G-1")),
        check("d8 weight Phi27", "27", weight("d8_H-1")),
        check(
            "d8 div Phi27",
            "8·H(1/8); 1·H(1/4); 1·H(1)",
            divisor("d8_H-1"),
        ),
    ]
}

pub fn d11() -> Vec<Check> {
    vec![
        check("d11 weight phi5", "5", weight("d11_F-1")),
        check("d11 div phi5", "5·H(1/11); 1·H(3/11)", divisor("d11_F-1")),
        check("d11 weight phi3", "3", weight("d11_G-1")),
        check("d11 div phi3", "-3·H(1/11); 1·H(4/11)", divisor("d11_G-1")),
        check("d11 weight Phi24", "24", weight("d11_H-1")),
        check("d11 div Phi24", "11·H(1/11); 1·H(1)", divisor("d11_H-1")),
        check(
            "d11 BB support and round trip",
            "ok",
            bb_support(11, &["d11_F-1", "d11_G-1", "d11_H-1", "d11_F1"]),
        ),
    ]
}

const D15_A: &str = "(0,0,1/15,-2/15,0,0)";
const D15_B: &str = "(0,0,4/15,-8/15,0,0)";

pub fn d15() -> Vec<Check> {
    let m = frac(1, 15);
    vec![
        check("d15 weight phi3", "3", weight("d15_F-1")),
        check(
            "d15 phi3 on H(1/15,A)",
            "-3",
            mult("d15_F-1", m.clone(), D15_A),
        ),
        check(
            "d15 phi3 on H(1/15,B)",
            "7",
            mult("d15_F-1", m.clone(), D15_B),
        ),
        check("d15 weight psi3", "3", weight("d15_G-1")),
        check(
            "d15 psi3 on H(1/15,A)",
            "7",
            mult("d15_G-1", m.clone(), D15_A),
        ),
        check("d15 psi3 on H(1/15,B)", "-3", mult("d15_G-1", m, D15_B)),
        check("d15 weight Phi20", "20", weight("d15_H-1")),
        check("d15 div Phi20", "15·H(1/15); 1·H(1)", divisor("d15_H-1")),
    ]
}

pub fn d19() -> Vec<Check> {
    let j = load("d19_J-1").and_then(|f| f.to_vector());
    let v = "(0,0,-1/19,2/19,0,0)";
    let v2 = "(0,0,-2/19,4/19,0,0)";
    vec![
        check("d19 weight phi3", "3", weight("d19_F-1")),
        check("d19 phi3 on H(1/19)", "-3", mult("d19_F-1", frac(1, 19), v)),
        check("d19 weight phi4", "4", weight("d19_G-1")),
        check("d19 phi4 holomorphic", "0", min_mult("d19_G-1")),
        check("d19 weight phi5", "5", weight("d19_H-1")),
        check("d19 phi5 holomorphic", "0", min_mult("d19_H-1")),
        check("d19 weight Phi19", "19", weight("d19_J-1")),
        check(
            "d19 J-1 c(-1,0)",
            "1",
            j.clone().map(|f| coeff(&f, int(-1), "(0,0,0,0,0,0)")),
        ),
        check(
            "d19 J-1 c(-4/19,2v)",
            "1",
            j.clone().map(|f| coeff(&f, frac(-4, 19), v2)),
        ),
        check(
            "d19 J-1 c(-1/19,v)",
            "15",
            j.clone().map(|f| coeff(&f, frac(-1, 19), v)),
        ),
        check(
            "d19 J-1 c(0,0)",
            "38",
            j.map(|f| coeff(&f, int(0), "(0,0,0,0,0,0)")),
        ),
    ]
}

pub fn d20() -> Vec<Check> {
    vec![
        check("d20 weight phi3", "3", weight("d20_F-1")),
        check(
            "d20 phi3 on H(1/20,(0,1/10))",
            "-3",
            mult("d20_F-1", frac(1, 20), "(0,0,0,1/10,0,0)"),
        ),
        check(
            "d20 phi3 on H(1/20,(1/2,2/5))",
            "-3",
            mult("d20_F-1", frac(1, 20), "(0,0,1/2,2/5,0,0)"),
        ),
        check("d20 weight phi5", "5", weight("d20_G-1")),
        check("d20 phi5 holomorphic", "0", min_mult("d20_G-1")),
        check("d20 weight Phi18", "18", weight("d20_H-1")),
    ]
}

pub fn d24() -> Vec<Check> {
    vec![
        check("d24 weight phi2", "2", weight("d24_A-1")),
        check("d24 phi2 holomorphic", "0", min_mult("d24_A-1")),
        check("d24 weight psi2", "2", weight("d24_B-1")),
        check("d24 weight phi3", "3", weight("d24_C-1")),
        check("d24 weight psi3", "3", weight("d24_D-1")),
        check("d24 weight Phi17", "17", weight("d24_J-1")),
    ]
}

/// Additive-lift inputs with the expected weight.
pub const ADDITIVE: [(&str, i64); 14] = [
    ("d4_F1", 2),
    ("d7_F1", 2),
    ("d7_F2", 3),
    ("d8_F1", 2),
    ("d11_F1", 2),
    ("d15_F1", 2),
    ("d15_F3", 4),
    ("d15_G3", 4),
    ("d19_F0", 1),
    ("d19_F1", 2),
    ("d20_F0", 1),
    ("d20_F1", 2),
    ("d20_F2", 3),
    ("d24_F0", 1),
];

pub fn additive() -> Vec<Check> {
    let mut out = Vec::new();
    for (name, k) in ADDITIVE {
        let meta = load_vector(name).and_then(|f| additive_lift_meta(&f, 4));
        out.push(check(
            &format!("{name} lift weight"),
            &k.to_string(),
            meta.clone().map(|m| render(&m.weight)),
        ));
        out.push(check(
            &format!("{name} weight >= pole order"),
            "true",
            meta.map(|m| m.koecher_bound_holds() && m.pole_order == Some(k)),
        ));
    }
    out.push(check(
        "d4_F1 poles",
        "-2·H(1/4, (0,0,1/2,0,0,0))",
        load_vector("d4_F1").and_then(|f| {
            let m = additive_lift_meta(&f, 4)?;
            Ok(m.divisor.summary(f.disc()))
        }),
    ));
    out
}

/// Field discriminants tested individually.
pub const CLASSIFY_CASES: [u64; 7] = [7, 8, 11, 15, 19, 20, 23];

pub fn classify() -> Vec<Check> {
    let mut out = Vec::new();
    for d in CLASSIFY_CASES {
        let c = classify_siegel(d);
        out.push(check(
            &format!("classify d={d}"),
            &format!("m={d} wtJ={} feasible={}", 35 - d as i64, d <= 22),
            c.map(|c| {
                format!(
                    "m={} wtJ={} feasible={}",
                    render(&c.m),
                    render(&c.wt_j),
                    c.feasible
                )
            }),
        ));
    }
    let bound = (5..=40u64)
        .filter(|&d| is_field_discriminant(d))
        .map(|d| classify_siegel(d).map(|c| (d, c.feasible)))
        .collect::<Result<Vec<_>, _>>()
        .map(|v| {
            v.iter()
                .filter(|(_, f)| *f)
                .map(|(d, _)| *d)
                .max()
                .map(|d| (d, v.iter().all(|(e, f)| *f == (*e <= 22))))
        });
    out.push(check(
        "classify feasible iff d <= 22 (5..40)",
        "largest=20 consistent=true",
        bound.map(|b| match b {
            Some((d, ok)) => format!("largest={d} consistent={ok}"),
            None => "none feasible".into(),
        }),
    ));
    out
}

pub fn weil() -> Vec<Check> {
    FREE_DISCRIMINANTS
        .iter()
        .map(|&d| {
            let r = hermitian_lattice(d)
                .and_then(|l| DiscriminantForm::new(&l))
                .map_err(LiftError::from)
                .and_then(|disc| Ok(check_relations(&disc, 2)?));
            check(
                &format!("weil relations d={d}"),
                "3/3",
                r.map(|r| {
                    let failed: Vec<String> = r
                        .checks
                        .iter()
                        .filter(|c| !c.passed)
                        .map(|c| format!("{} at {:?}", c.name, c.offending))
                        .collect();
                    if failed.is_empty() {
                        "3/3".to_string()
                    } else {
                        failed.join(", ")
                    }
                }),
            )
        })
        .collect()
}

pub fn serre() -> Vec<Check> {
    let mut out = Vec::new();
    for d in [7u64, 8, 11, 15, 19, 20, 24] {
        let g = siegel_serre_form(d);
        let z = Coset::zero(2);
        let read = |e: Frac, x: Option<&Coset>| {
            g.clone().map(|(g, v)| {
                let x = x.unwrap_or(&v);
                g.coeff(&e, x).map(|c| render(&c)).unwrap_or_default()
            })
        };
        let dd = d as i64;
        out.push(check(
            &format!("serre d={d} e0 constant"),
            "-1/12",
            read(int(0), Some(&z)),
        ));
        out.push(check(
            &format!("serre d={d} q^1/d on v"),
            &render(&(frac(1, dd) - frac(1, 12))),
            read(frac(1, dd), None),
        ));
        out.push(check(
            &format!("serre d={d} q on e0"),
            "23/6",
            read(int(1), Some(&z)),
        ));
    }
    out
}

/// `(coefficient of q^-1, constant, weight)` of the zero coset after
/// contracting `index`.
pub fn contract_zero(name: &str, index: usize) -> Result<(String, String, String), LiftError> {
    let f = load_vector(name)?;
    let c = theta_contract(&f, index)?;
    let z = Coset::zero(c.disc().rank());
    let get = |e: Frac| c.coeff(&e, &z).map(|v| render(&v)).unwrap_or_default();
    Ok((get(int(-1)), get(Frac::zero()), render(c.weight())))
}

pub fn contract() -> Vec<Check> {
    let mut out = Vec::new();
    for (name, index) in [("d8_H-1", 3usize), ("d4_G-1", 3)] {
        let r = contract_zero(name, index);
        out.push(check(
            &format!("contract {name} q^-1"),
            "1",
            r.clone().map(|t| t.0),
        ));
        out.push(check(
            &format!("contract {name} constant"),
            "70",
            r.clone().map(|t| t.1),
        ));
        out.push(check(
            &format!("contract {name} weight"),
            "-1/2",
            r.map(|t| t.2),
        ));
    }
    out
}
