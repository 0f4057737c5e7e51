//! Command-line front end. [`run`] returns the report instead of printing
//! so that it can be tested.

pub mod cases;

use clap::{Parser, Subcommand, ValueEnum};
use std::fs;

use thiserror::Error;

use crate::fixtures::{self, Fixture};
use crate::lattice::{
    hermitian_lattice, is_field_discriminant, ok_lattice, DiscriminantForm, LatticeError,
    FREE_DISCRIMINANTS,
};
use crate::lifts::{
    additive_lift_meta, borcherds_divisor, borcherds_weight, classify_siegel, LiftError,
};
use crate::qseries::{int, parse_frac, render, serre_derivative, Frac};
use crate::report::{all_passed, render_checks, Check, Format};
use crate::weilrep::{
    check_relations, pairing_constant_term, theta_contract, theta_series, write_vvform,
    PrincipalPart, Rep, VVForm, WeilError,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Lift(#[from] LiftError),
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },
}

impl From<WeilError> for CliError {
    fn from(e: WeilError) -> Self {
        CliError::Lift(e.into())
    }
}

impl From<LatticeError> for CliError {
    fn from(e: LatticeError) -> Self {
        CliError::Lift(e.into())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Machine,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Text => Format::Text,
            OutputFormat::Machine => Format::Machine,
        }
    }
}

fn frac_arg(s: &str) -> Result<Frac, String> {
    parse_frac(s).ok_or_else(|| format!("`{s}` is not a rational p/q"))
}

#[derive(Debug, Parser)]
#[command(
    name = "meroforms",
    version,
    about = "Exact lattice, Weil representation and lift computations"
)]
pub struct Cli {
    /// Precision bound p/q for expansions.
    #[arg(long, global = true, value_parser = frac_arg)]
    pub prec: Option<Frac>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Gram matrix, discriminant form and signature of U + U + O_K.
    Lattice {
        d: u64,
        /// Accept any imaginary quadratic discriminant.
        #[arg(long)]
        any_disc: bool,
    },
    /// Theta series of O_K (or its Serre derivative).
    Theta {
        d: u64,
        #[arg(long)]
        serre: bool,
    },
    /// Exact check of the Weil representation relations.
    WeilCheck {
        d: u64,
        /// Signature mod 8 (defaults to the Milgram value).
        #[arg(long)]
        sig: Option<u8>,
    },
    /// Weight and divisor of a Borcherds product.
    Product {
        /// Fixture name or path.
        input: String,
        /// Treat a bare series file as a scalar form on Gamma_0(p).
        #[arg(long)]
        bb: Option<u64>,
        #[arg(long, value_parser = frac_arg)]
        max_m: Option<Frac>,
    },
    /// Weight and poles of a singular additive lift on signature (n, 2).
    Additive {
        input: String,
        #[arg(long, default_value_t = 4)]
        n: i64,
    },
    /// Theta contraction along a split basis vector.
    Contract {
        input: String,
        #[arg(long)]
        index: usize,
    },
    /// Constant term of the pairing of a rho form with a rho* form.
    Pair { f: String, g: String },
    /// Multiplicity of the Siegel half-space forced by the pairing identity.
    Classify {
        #[arg(required = true)]
        d: Vec<u64>,
    },
    /// Run a verification suite: d4 d7 d8 d11 d15 d19 d20 d24 additive
    /// classify table1 weil serre contract all.
    Verify { suite: String },
    /// List the embedded fixtures, or print one.
    Fixtures { name: Option<String> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub success: bool,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome {
            output,
            success: true,
        }
    }
}

fn read_input(input: &str) -> Result<String, CliError> {
    if let Ok(text) = fixtures::text(input) {
        return Ok(text.to_string());
    }
    fs::read_to_string(input).map_err(|e| CliError::Io {
        path: input.to_string(),
        msg: e.to_string(),
    })
}

fn load_fixture(input: &str, bb: Option<u64>) -> Result<Fixture, CliError> {
    let text = read_input(input)?;
    let fixture = match bb {
        Some(p) if !text.lines().any(|l| l.trim_start().starts_with("bb ")) => {
            fixtures::parse_fixture(&format!("bb {p}\n{text}"))?
        }
        _ => fixtures::parse_fixture(&text)?,
    };
    Ok(fixture)
}

fn load_form(input: &str) -> Result<VVForm, CliError> {
    Ok(load_fixture(input, None)?.to_vector()?)
}

fn known_or_any(d: u64, any: bool) -> Result<(), CliError> {
    if FREE_DISCRIMINANTS.contains(&d) || (any && is_field_discriminant(d)) {
        Ok(())
    } else if any {
        Err(LatticeError::NotDiscriminant(d).into())
    } else {
        Err(CliError::Usage(format!(
            "d = {d} is not one of {FREE_DISCRIMINANTS:?}; pass --any-disc for other fields"
        )))
    }
}

fn cmd_lattice(d: u64, any: bool) -> Result<String, CliError> {
    known_or_any(d, any)?;
    let l = hermitian_lattice(d)?;
    let disc = DiscriminantForm::new(&l)?;
    let sig = disc.signature_mod8()?;
    let (pos, neg) = l.inertia();
    Ok(format!(
        "gram\n{}\n|D| = {}\nlevel {}\nsignature ({pos}, {neg}); mod 8 from Milgram: {sig}\n{}",
        l.to_text(),
        disc.order(),
        disc.level(),
        disc.to_text()
    ))
}

fn cmd_theta(d: u64, serre: bool, prec: &Frac) -> Result<String, CliError> {
    let th = theta_series(&ok_lattice(d)?, prec)?;
    if !serre {
        return Ok(write_vvform(&th));
    }
    let mut g = VVForm::zero(
        th.disc().clone(),
        th.weight() + int(2),
        Rep::RhoDual,
        prec.clone(),
    );
    for (x, s) in th.components() {
        g.add_series(x, &serre_derivative(s, th.weight()))?;
    }
    Ok(write_vvform(&g))
}

fn cmd_weil(d: u64, sig: Option<u8>, format: Format) -> Result<Outcome, CliError> {
    known_or_any(d, true)?;
    let disc = DiscriminantForm::new(&hermitian_lattice(d)?)?;
    let sig = match sig {
        Some(s) => s,
        None => disc.signature_mod8()?,
    };
    let report = check_relations(&disc, sig)?;
    let checks: Vec<Check> = report
        .checks
        .iter()
        .map(|c| Check {
            name: format!("d={d} sig={sig} {}", c.name),
            expected: "holds".into(),
            computed: match &c.offending {
                None => "holds".into(),
                Some((r, s)) => format!("differs at ({r}, {s})"),
            },
            passed: c.passed,
        })
        .collect();
    Ok(Outcome {
        output: render_checks(&checks, format),
        success: all_passed(&checks),
    })
}

fn cmd_product(input: &str, bb: Option<u64>, max_m: Option<Frac>) -> Result<String, CliError> {
    let f = load_fixture(input, bb)?.to_vector()?;
    let p = PrincipalPart::of(&f)?;
    let max_m = max_m.unwrap_or_else(|| p.max_singular_norm());
    let div = borcherds_divisor(&p, &max_m);
    let w = render(&borcherds_weight(&p));
    let mut out = format!("weight {w}");
    let summary = div.summary(p.disc());
    if !summary.is_empty() {
        out.push_str("; ");
        out.push_str(&summary);
    }
    out.push('\n');
    out.push_str(&div.to_string());
    Ok(out)
}

fn cmd_additive(input: &str, n: i64) -> Result<String, CliError> {
    let f = load_form(input)?;
    let meta = additive_lift_meta(&f, n)?;
    Ok(format!(
        "weight {}; pole order {}; weight >= pole order: {}\n{}",
        render(&meta.weight),
        meta.pole_order.unwrap_or(0),
        meta.koecher_bound_holds(),
        meta.divisor
    ))
}

fn cmd_contract(input: &str, index: usize, prec: Option<&Frac>) -> Result<String, CliError> {
    let f = load_form(input)?;
    let f = match prec {
        Some(p) => f.truncate(p),
        None => f,
    };
    Ok(write_vvform(&theta_contract(&f, index)?))
}

fn cmd_pair(f: &str, g: &str) -> Result<String, CliError> {
    let f = load_form(f)?;
    let g = load_form(g)?;
    let (f, g) = match (f.rep(), g.rep()) {
        (Rep::RhoDual, Rep::Rho) => (g, f),
        _ => (f, g),
    };
    Ok(format!("{}\n", render(&pairing_constant_term(&f, &g)?)))
}

fn cmd_classify(ds: &[u64], format: Format) -> Result<Outcome, CliError> {
    let mut lines = Vec::new();
    for &d in ds {
        let c = classify_siegel(d)?;
        lines.push(match format {
            Format::Text => format!(
                "{}  (pairing: {} + m*{})",
                c.summary(),
                render(&c.fixed_part),
                render(&c.slope)
            ),
            Format::Machine => format!(
                "CLASSIFY {} {} {} {}",
                d,
                render(&c.m),
                render(&c.wt_j),
                c.feasible
            ),
        });
    }
    Ok(Outcome::ok(lines.join("\n") + "\n"))
}

fn cmd_fixtures(name: Option<&str>) -> Result<String, CliError> {
    match name {
        Some(n) => Ok(fixtures::text(n)?.to_string()),
        None => Ok(fixtures::names().map(|n| format!("{n}\n")).collect()),
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let format: Format = cli.format.into();
    let out = match &cli.command {
        Command::Lattice { d, any_disc } => Outcome::ok(cmd_lattice(*d, *any_disc)?),
        Command::Theta { d, serre } => {
            let prec = cli.prec.clone().unwrap_or_else(|| int(2));
            Outcome::ok(cmd_theta(*d, *serre, &prec)?)
        }
        Command::WeilCheck { d, sig } => cmd_weil(*d, *sig, format)?,
        Command::Product { input, bb, max_m } => {
            Outcome::ok(cmd_product(input, *bb, max_m.clone())?)
        }
        Command::Additive { input, n } => Outcome::ok(cmd_additive(input, *n)?),
        Command::Contract { input, index } => {
            Outcome::ok(cmd_contract(input, *index, cli.prec.as_ref())?)
        }
        Command::Pair { f, g } => Outcome::ok(cmd_pair(f, g)?),
        Command::Classify { d } => cmd_classify(d, format)?,
        Command::Verify { suite } => {
            let checks = cases::run_suite(suite).ok_or_else(|| {
                CliError::Usage(format!(
                    "unknown suite `{suite}`; expected one of {} or all",
                    cases::SUITES.join(" ")
                ))
            })?;
            let mut output = render_checks(&checks, format);
            let success = all_passed(&checks);
            if let Some(first) = checks.iter().find(|c| !c.passed) {
                output.push_str(&format!("first failure: {}\n", first.name));
            } else if format == Format::Text {
                output.push_str(&format!("{} checks passed\n", checks.len()));
            }
            Outcome { output, success }
        }
        Command::Fixtures { name } => Outcome::ok(cmd_fixtures(name.as_deref())?),
    };
    Ok(out)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Result<Outcome, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| CliError::Usage(e.to_string()))?;
    run(&cli)
}
