use meroforms_web::{classify, fixture_names, lattice_report, product, theta};

#[test]
fn lattice_report_d7() {
    let out = lattice_report(7).unwrap();
    assert!(out.contains("|D| = 7"), "{out}");
    assert!(lattice_report(5).is_err());
}

#[test]
fn product_phi7() {
    assert!(product("d7_F-1")
        .unwrap()
        .starts_with("weight 7; 3·H(1/7); 1·H(2/7)"));
    assert!(product("nothing").is_err());
}

#[test]
fn names_listed() {
    let names = fixture_names();
    assert!(names.lines().any(|l| l == "d4_F-1"));
}

#[test]
fn classify_list() {
    let out = classify("7, 23").unwrap();
    assert!(out.contains("d=7 m=7 wtJ=28 feasible"), "{out}");
    assert!(out.contains("excluded"), "{out}");
    assert!(classify(" ").is_err());
}

#[test]
fn serre_theta() {
    let out = theta(7, true, "2").unwrap();
    assert!(out.contains("0 -1/12") && out.contains("1 23/6"), "{out}");
}
