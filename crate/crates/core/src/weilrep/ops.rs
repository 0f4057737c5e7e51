use std::sync::Arc;

use num_traits::Zero;

use super::{Rep, VVForm, WeilError};
use crate::lattice::{enumerate_vectors, Coset, DiscriminantForm, EvenLattice};
use crate::qseries::{frac, int, mod_one, render, unary_theta, Frac, FracSeries};

/// `sum_{lambda in L'} q^{Q(lambda)} e_lambda` for positive definite `L`,
/// known below `prec`.
pub fn theta_series(lattice: &EvenLattice, prec: &Frac) -> Result<VVForm, WeilError> {
    let disc = Arc::new(DiscriminantForm::new(lattice)?);
    let mut terms = Vec::new();
    for x in disc.elements() {
        for (_, q) in enumerate_vectors(lattice, x, prec)? {
            if q < *prec {
                terms.push((x.clone(), q, int(1)));
            }
        }
    }
    VVForm::from_terms(
        disc,
        frac(lattice.rank() as i64, 2),
        Rep::RhoDual,
        prec.clone(),
        terms,
    )
}

/// Constant term of `sum_x f_x g_x` for `f` under `rho` and `g` under
/// `rho*` of complementary weights.
pub fn pairing_constant_term(f: &VVForm, g: &VVForm) -> Result<Frac, WeilError> {
    if f.disc().lattice() != g.disc().lattice() && f.disc().elements() != g.disc().elements() {
        return Err(WeilError::Mismatch("discriminant forms"));
    }
    if f.weight() + g.weight() != int(2) {
        return Err(WeilError::Mismatch("weights (must sum to 2)"));
    }
    if f.rep() != Rep::Rho || g.rep() != Rep::RhoDual {
        return Err(WeilError::Mismatch("representations (need rho and rho*)"));
    }
    let mut total = Frac::zero();
    for x in f.disc().elements() {
        let prod = &f.component(x) * &g.component(x);
        total += prod.constant_term().map_err(|_| {
            WeilError::Precision(format!(
                "constant term on coset {x} needs more terms (product known below {})",
                render(&prod.prec())
            ))
        })?;
    }
    Ok(total)
}

fn is_odd_prime(p: u64) -> bool {
    p > 2
        && p % 2 == 1
        && (3..)
            .step_by(2)
            .take_while(|k| k * k <= p)
            .all(|k| p % k != 0)
}

/// Vector-valued form attached to a scalar form on `Gamma_0(p)` in the minus
/// space: `c(n/p, 0) = a(n)` for `p | n`, and `c(n/p, +-x) = a(n)/2` on the
/// pair with `Q(x) = -n/p mod 1` otherwise.
pub fn bb_lift(
    f: &FracSeries,
    weight: &Frac,
    p: u64,
    disc: Arc<DiscriminantForm>,
) -> Result<VVForm, WeilError> {
    if !is_odd_prime(p) {
        return Err(WeilError::NotOddPrime(p));
    }
    if disc.order() != p {
        return Err(WeilError::OrderMismatch {
            order: disc.order(),
            p,
        });
    }
    let pf = int(p as i64);
    let zero = Coset::zero(disc.rank());
    let mut terms = Vec::new();
    for (n, c) in f.terms() {
        if !n.is_integer() {
            return Err(WeilError::FractionalExponent(n));
        }
        let e = &n / &pf;
        if e.is_integer() {
            terms.push((zero.clone(), e, c.clone()));
            continue;
        }
        let target = mod_one(&-&e);
        let matches: Vec<&Coset> = disc
            .elements()
            .iter()
            .filter(|x| disc.q(x) == target)
            .collect();
        if matches.is_empty() {
            return Err(WeilError::MinusSpace { exponent: n });
        }
        let half = c / int(2);
        for x in matches {
            terms.push((x.clone(), e.clone(), half.clone()));
        }
    }
    VVForm::from_terms(disc, weight.clone(), Rep::Rho, f.prec() / &pf, terms)
}

/// Inverse of [`bb_lift`]: `sum_x f_x(p tau)`.
pub fn bb_collapse(form: &VVForm, p: u64) -> Result<FracSeries, WeilError> {
    if form.disc().order() != p {
        return Err(WeilError::OrderMismatch {
            order: form.disc().order(),
            p,
        });
    }
    let mut out = FracSeries::zero(&(form.prec() * int(p as i64)));
    for (_, f) in form.components() {
        out = &out + &f.dilate(p);
    }
    Ok(out)
}

/// Theta contraction along the basis vector `index`, which must be
/// orthogonal to the other basis vectors. The result lives on the
/// complementary sublattice and has weight raised by `1/2`.
pub fn theta_contract(form: &VVForm, index: usize) -> Result<VVForm, WeilError> {
    if form.rep() != Rep::Rho {
        return Err(WeilError::Mismatch("representation (expected rho)"));
    }
    let lattice = form.disc().lattice();
    let rank = lattice.rank();
    if index >= rank || rank < 2 {
        return Err(WeilError::BadIndex { index, rank });
    }
    let gram = lattice.gram();
    if (0..rank).any(|k| k != index && gram[index][k] != 0) {
        return Err(WeilError::NotSplit(index));
    }
    let m = frac(gram[index][index], 2);
    if m <= Frac::zero() {
        return Err(WeilError::NotSplit(index));
    }
    let keep: Vec<usize> = (0..rank).filter(|&k| k != index).collect();
    let sub = EvenLattice::new(
        keep.iter()
            .map(|&i| keep.iter().map(|&j| gram[i][j]).collect())
            .collect(),
    )?;
    let sub_disc = Arc::new(DiscriminantForm::new(&sub)?);
    let prec = form.prec().clone();
    let mut out = VVForm::zero(
        sub_disc.clone(),
        form.weight() + frac(1, 2),
        Rep::Rho,
        prec.clone(),
    );
    for (x, f) in form.components() {
        let a = x.coords()[index].clone();
        let xk = Coset::new(keep.iter().map(|&k| x.coords()[k].clone()).collect());
        let theta = unary_theta(&m, &a, &(&prec - f.valuation()))?;
        out.add_series(&xk, &(f * &theta))?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{hermitian_lattice, ok_lattice};
    use crate::qseries::{eta_quotient, serre_derivative};

    fn d7() -> Arc<DiscriminantForm> {
        Arc::new(DiscriminantForm::new(&hermitian_lattice(7).unwrap()).unwrap())
    }

    fn scalar(terms: &[(i64, i64)], prec: i64) -> FracSeries {
        FracSeries::from_terms(terms.iter().map(|&(e, c)| (int(e), int(c))), &int(prec)).unwrap()
    }

    #[test]
    fn theta_ok7() {
        let th = theta_series(&ok_lattice(7).unwrap(), &frac(6, 7)).unwrap();
        assert_eq!(*th.weight(), int(1));
        assert!(th.validate().is_ok());
        let zero = Coset::zero(2);
        assert_eq!(th.component(&zero).len(), 1);
        let v = Coset::new(vec![frac(-1, 7), frac(2, 7)]);
        assert_eq!(th.coeff(&frac(1, 7), &v), Some(int(1)));
        assert_eq!(th.coeff(&frac(1, 7), &v.neg()), Some(int(1)));
        let th2 = theta_series(&ok_lattice(7).unwrap(), &int(2)).unwrap();
        assert_eq!(th2.coeff(&int(1), &zero), Some(int(2)));
    }

    #[test]
    fn bb_lift_phi7() {
        let f = scalar(&[(-2, 2), (-1, 6), (0, 14)], 1);
        let vv = bb_lift(&f, &int(-1), 7, d7()).unwrap();
        assert!(vv.validate().is_ok());
        let h7 = vv.disc().heegner_components(&frac(1, 7));
        assert_eq!(vv.coeff(&frac(-1, 7), &h7[0]), Some(int(3)));
        assert_eq!(vv.coeff(&frac(-1, 7), &h7[0].neg()), Some(int(3)));
        let h27 = vv.disc().heegner_components(&frac(2, 7));
        assert_eq!(vv.coeff(&frac(-2, 7), &h27[0]), Some(int(1)));
        assert_eq!(vv.coeff(&int(0), &Coset::zero(6)), Some(int(14)));
        assert_eq!(bb_collapse(&vv, 7).unwrap(), f);
    }

    #[test]
    fn bb_lift_rejects_plus_space() {
        // -3 mod 7 is a nonresidue class that no coset norm reaches
        let f = scalar(&[(-3, 1)], 1);
        assert!(matches!(
            bb_lift(&f, &int(-1), 7, d7()),
            Err(WeilError::MinusSpace { .. })
        ));
        assert!(matches!(
            bb_lift(&f, &int(-1), 9, d7()),
            Err(WeilError::NotOddPrime(9))
        ));
    }

    #[test]
    fn pairing_zero_d7() {
        let f = scalar(&[(-2, 2), (-1, 6), (0, 14), (3, -38), (5, -96)], 6);
        let ok = ok_lattice(7).unwrap();
        let disc = Arc::new(DiscriminantForm::new(&ok).unwrap());
        let big = bb_lift(&f, &int(-1), 7, disc).unwrap();
        let theta = theta_series(&ok, &int(3)).unwrap();
        let mut g = VVForm::zero(theta.disc().clone(), int(3), Rep::RhoDual, int(3));
        for (x, s) in theta.components() {
            g.add_series(x, &serre_derivative(s, &int(1))).unwrap();
        }
        assert_eq!(pairing_constant_term(&big, &g).unwrap(), Frac::zero());
        let zero = VVForm::zero(big.disc().clone(), int(-1), Rep::Rho, int(1));
        assert_eq!(pairing_constant_term(&zero, &g).unwrap(), Frac::zero());
    }

    #[test]
    fn contraction_weight_and_split_check() {
        let l = EvenLattice::new(vec![vec![2, 0], vec![0, 2]]).unwrap();
        let disc = Arc::new(DiscriminantForm::new(&l).unwrap());
        let e0 = VVForm::from_terms(
            disc,
            int(0),
            Rep::Rho,
            int(3),
            [(Coset::zero(2), int(0), int(1))],
        )
        .unwrap();
        let c = theta_contract(&e0, 1).unwrap();
        assert_eq!(*c.weight(), frac(1, 2));
        assert_eq!(
            c.component(&Coset::zero(1)),
            unary_theta(&int(1), &int(0), &int(3)).unwrap()
        );

        let l7 = ok_lattice(7).unwrap();
        let d = Arc::new(DiscriminantForm::new(&l7).unwrap());
        let f = VVForm::zero(d, int(0), Rep::Rho, int(1));
        assert_eq!(theta_contract(&f, 1).unwrap_err(), WeilError::NotSplit(1));
    }

    #[test]
    fn eta_principal_part_d4_constant() {
        let c = eta_quotient(&[(2, 14), (1, -12), (4, -4)], &int(1)).unwrap();
        assert_eq!(c.scale(&int(8)).constant_term().unwrap(), int(8));
    }
}
