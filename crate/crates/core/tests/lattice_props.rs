mod common;

use meroforms::lattice::{
    enumerate_vectors, hermitian_lattice, is_field_discriminant, ok_lattice, DiscriminantForm,
    EvenLattice, FREE_DISCRIMINANTS,
};
use meroforms::qseries::{int, mod_one};
use proptest::prelude::*;

fn lattice(gram: &[[i64; 2]; 2]) -> EvenLattice {
    EvenLattice::new(gram.iter().map(|r| r.to_vec()).collect()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    // coordinates of vectors with Q <= 8 stay below sqrt(16 * 10) < 13
    #[test]
    fn enumeration_matches_double_loop(gram in common::gram2_strategy(), bound in 0i64..=8) {
        let l = lattice(&gram);
        let disc = DiscriminantForm::new(&l).unwrap();
        let step = disc.order() as usize / 5 + 1;
        for x in disc.elements().iter().step_by(step) {
            let got = enumerate_vectors(&l, x, &int(bound)).unwrap();
            let g = [x.coords()[0].clone(), x.coords()[1].clone()];
            prop_assert_eq!(got, common::naive_vectors(&gram, &g, &int(bound), 13));
        }
    }

    #[test]
    fn discriminant_order_is_determinant(gram in common::gram2_strategy()) {
        let l = lattice(&gram);
        let disc = DiscriminantForm::new(&l).unwrap();
        let det = gram[0][0] * gram[1][1] - gram[0][1] * gram[1][0];
        prop_assert_eq!(disc.order(), det as u64);
        prop_assert_eq!(disc.elements().len() as u64, det as u64);
    }

    #[test]
    fn q_is_quadratic(gram in common::gram2_strategy()) {
        let disc = DiscriminantForm::new(&lattice(&gram)).unwrap();
        let els: Vec<_> = disc.elements().iter().take(10).collect();
        for x in &els {
            for y in &els {
                let sum = x.add(y);
                let lhs = mod_one(&(disc.q(&sum) - disc.q(x) - disc.q(y)));
                prop_assert_eq!(lhs, disc.pairing(x, y));
            }
            prop_assert_eq!(disc.q(&x.neg()), disc.q(x));
        }
    }
}

#[test]
fn hermitian_orders() {
    for d in FREE_DISCRIMINANTS {
        assert!(is_field_discriminant(d));
        let disc = DiscriminantForm::new(&hermitian_lattice(d).unwrap()).unwrap();
        assert_eq!(disc.order(), d);
        assert_eq!(disc.signature_mod8().unwrap(), 2);
    }
}

#[test]
fn rejects_non_discriminants() {
    for d in [1, 2, 5, 6, 9, 12, 16] {
        assert!(!is_field_discriminant(d));
        assert!(ok_lattice(d).is_err());
    }
}
