mod common;

use std::sync::Arc;

use meroforms::lattice::{hermitian_lattice, ok_lattice, DiscriminantForm};
use meroforms::qseries::{int, mod_one};
use meroforms::weilrep::{bb_collapse, bb_lift, check_relations, theta_series};
use proptest::prelude::*;

fn disc(p: u64) -> Arc<DiscriminantForm> {
    Arc::new(DiscriminantForm::new(&hermitian_lattice(p).unwrap()).unwrap())
}

proptest! {
    #[test]
    fn bb_round_trip_7(f in common::minus_space_series(7)) {
        let lifted = bb_lift(&f, &int(-1), 7, disc(7)).unwrap();
        prop_assert_eq!(bb_collapse(&lifted, 7).unwrap(), f);
    }

    #[test]
    fn bb_round_trip_11(f in common::minus_space_series(11)) {
        let lifted = bb_lift(&f, &int(-1), 11, disc(11)).unwrap();
        prop_assert!(lifted.validate().is_ok());
        prop_assert_eq!(bb_collapse(&lifted, 11).unwrap(), f);
    }
}

#[test]
fn theta_symmetry_and_exponents() {
    for d in [7u64, 8, 11, 15, 20] {
        let theta = theta_series(&ok_lattice(d).unwrap(), &int(3)).unwrap();
        let disc = theta.disc().clone();
        for (x, s) in theta.components() {
            assert_eq!(*s, theta.component(&x.neg()), "d={d} x={x}");
            for (e, _) in s.terms() {
                assert_eq!(mod_one(&e), disc.q(x));
            }
        }
    }
}

#[test]
fn theta_counts_match_naive() {
    for d in [7i64, 8, 11] {
        let theta = theta_series(&ok_lattice(d as u64).unwrap(), &int(2)).unwrap();
        for (x, s) in theta.components() {
            let g = [x.coords()[0].clone(), x.coords()[1].clone()];
            for (e, c) in s.terms() {
                assert_eq!(
                    *c,
                    int(common::ok_count(d, &g, &e) as i64),
                    "d={d} {x} q^{e}"
                );
            }
        }
    }
}

#[test]
fn relations_for_rank_two() {
    for gram in [
        [[2, 0], [0, 2]],
        [[2, 1], [1, 2]],
        [[2, 0], [0, 4]],
        [[4, 1], [1, 6]],
    ] {
        let l = meroforms::lattice::EvenLattice::new(gram.iter().map(|r| r.to_vec()).collect());
        let d = DiscriminantForm::new(&l.unwrap()).unwrap();
        let sig = d.signature_mod8().unwrap();
        assert_eq!(sig, 2);
        assert!(check_relations(&d, sig).unwrap().passed());
    }
}

#[test]
fn odd_signature_rejected() {
    let d = DiscriminantForm::new(&ok_lattice(7).unwrap()).unwrap();
    assert!(check_relations(&d, 1).is_err());
}
