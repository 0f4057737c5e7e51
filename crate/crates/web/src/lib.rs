//! Browser bindings. Each export runs one CLI command and returns its text.

use meroforms::cli::run_args;
use meroforms::fixtures;
use wasm_bindgen::prelude::*;

fn run(args: &[&str]) -> Result<String, String> {
    let argv = std::iter::once("meroforms").chain(args.iter().copied());
    match run_args(argv) {
        Ok(out) => Ok(out.output),
        Err(e) => Err(e.to_string()),
    }
}

/// Gram matrix, discriminant form and Weil relation check of `U + U + O_K`.
#[wasm_bindgen]
pub fn lattice_report(d: u32) -> Result<String, String> {
    let ds = d.to_string();
    let mut out = run(&["lattice", &ds])?;
    out.push('\n');
    out.push_str(&run(&["weil-check", &ds])?);
    Ok(out)
}

/// Weight and Heegner divisor of the product lifted from a named input.
#[wasm_bindgen]
pub fn product(name: &str) -> Result<String, String> {
    run(&["product", name])
}

/// Names of the embedded inputs, one per line.
#[wasm_bindgen]
pub fn fixture_names() -> String {
    fixtures::names().collect::<Vec<_>>().join("\n")
}

/// Forced multiplicity of the Siegel half-space for each `d` in a list.
#[wasm_bindgen]
pub fn classify(ds: &str) -> Result<String, String> {
    let mut args = vec!["classify"];
    args.extend(
        ds.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty()),
    );
    if args.len() == 1 {
        return Err("no discriminants given".into());
    }
    run(&args)
}

/// Theta series of `O_K`, or its Serre derivative, below `q^prec`.
#[wasm_bindgen]
pub fn theta(d: u32, serre: bool, prec: &str) -> Result<String, String> {
    let ds = d.to_string();
    let mut args = vec!["--prec", prec, "theta", &ds];
    if serre {
        args.push("--serre");
    }
    run(&args)
}
