use meroforms::cli::run_args;

fn run(args: &[&str]) -> meroforms::cli::Outcome {
    let mut full = vec!["meroforms"];
    full.extend_from_slice(args);
    run_args(full).unwrap()
}

#[test]
fn product_phi7() {
    let out = run(&["product", "d7_F-1"]);
    assert!(out.success);
    assert!(
        out.output.starts_with("weight 7; 3·H(1/7); 1·H(2/7)\n"),
        "{}",
        out.output
    );
}

#[test]
fn product_psi3_d8() {
    let out = run(&["product", "d8_F-1"]);
    assert!(
        out.output.starts_with("weight 3; 2·H(1/8); 1·H(1/4)"),
        "{}",
        out.output
    );
}

#[test]
fn lattice_rejects_five() {
    assert!(run_args(["meroforms", "lattice", "5"]).is_err());
    assert!(run(&["lattice", "7"]).success);
}

#[test]
fn classify_line() {
    let out = run(&["classify", "19", "23"]);
    assert!(
        out.output.contains("d=19 m=19 wtJ=16 feasible"),
        "{}",
        out.output
    );
    assert!(
        out.output.contains("d=23 m=23 wtJ=12 excluded"),
        "{}",
        out.output
    );
}

#[test]
fn verify_all_passes_and_is_deterministic() {
    let a = run(&["verify", "all"]);
    assert!(a.success, "{}", a.output);
    let b = run(&["--format", "machine", "verify", "all"]);
    let c = run(&["--format", "machine", "verify", "all"]);
    assert_eq!(b.output, c.output);
    assert!(b
        .output
        .lines()
        .filter(|l| l.starts_with("CHECK"))
        .all(|l| l.ends_with(" pass")));
}

#[test]
fn unknown_suite_and_fixture() {
    assert!(run_args(["meroforms", "verify", "nope"]).is_err());
    assert!(run_args(["meroforms", "product", "no_such_thing"]).is_err());
}
