mod common;

use meroforms::qseries::{eta_quotient, frac, int, unary_theta, Frac, FracSeries};
use num_traits::Zero;
use proptest::prelude::*;

proptest! {
    #[test]
    fn addition_commutes(a in common::series_strategy(), b in common::series_strategy()) {
        prop_assert!((&a + &b).agrees_with(&(&b + &a)));
    }

    #[test]
    fn multiplication_associates(
        a in common::series_strategy(),
        b in common::series_strategy(),
        c in common::series_strategy(),
    ) {
        prop_assert!((&(&a * &b) * &c).agrees_with(&(&a * &(&b * &c))));
    }

    #[test]
    fn distributes(
        a in common::series_strategy(),
        b in common::series_strategy(),
        c in common::series_strategy(),
    ) {
        prop_assert!((&a * &(&b + &c)).agrees_with(&(&(&a * &b) + &(&a * &c))));
    }

    #[test]
    fn leibniz(a in common::series_strategy(), b in common::series_strategy()) {
        let lhs = (&a * &b).q_derivative();
        let rhs = &(&a.q_derivative() * &b) + &(&a * &b.q_derivative());
        prop_assert!(lhs.agrees_with(&rhs));
    }

    #[test]
    fn negation_cancels(a in common::series_strategy()) {
        let z = &a + &(-&a);
        prop_assert!(z.terms().all(|(_, c)| c.is_zero()));
    }

    #[test]
    fn eta_matches_naive(m in 1usize..=4, r in -6i32..=6) {
        let (lead, naive) = common::naive_eta_quotient(&[(m, r)], 8);
        let prec = &lead + int(8);
        let lib = eta_quotient(&[(m as u32, r)], &prec).unwrap();
        for (k, c) in naive.iter().enumerate() {
            let e = &lead + int(k as i64);
            prop_assert_eq!(lib.coeff(&e).unwrap_or_default(), int(*c));
        }
    }

    #[test]
    fn unary_theta_counts(num in 1i64..=6, den in 1i64..=4, a in 0i64..4) {
        let m = frac(num, den);
        let a = frac(a, 4);
        let prec = int(6);
        let lib = unary_theta(&m, &a, &prec).unwrap();
        let mut naive = std::collections::BTreeMap::<Frac, i64>::new();
        for n in -40i64..=40 {
            let x = int(n) + &a;
            let e = &m * &x * &x;
            if e < prec {
                *naive.entry(e).or_default() += 1;
            }
        }
        let got: std::collections::BTreeMap<Frac, i64> = lib
            .terms()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e, c.to_integer().try_into().unwrap()))
            .collect();
        prop_assert_eq!(got, naive);
    }
}

#[test]
fn zero_series_is_empty() {
    assert!(FracSeries::zero(&int(3)).is_zero());
}
