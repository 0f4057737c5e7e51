use std::sync::Arc;

use num_traits::Zero;

use super::{jacobian_weight_int, LiftError};
use crate::lattice::{
    enumerate_vectors, is_field_discriminant, ok_lattice, siegel_coset_vector, Coset,
    DiscriminantForm, LatticeError,
};
use crate::qseries::{frac, int, render, serre_derivative, Frac};
use crate::weilrep::{pairing_constant_term, theta_series, Rep, VVForm};

/// Weight of a Jacobian of generators of weights at least `1, 2, 2, 2, 2`.
pub fn siegel_weight_bound() -> Frac {
    jacobian_weight_int(&[1, 2, 2, 2, 2], 4)
}

/// `1 + 2 + 2 + 2 + 2 + 4`.
pub const SIEGEL_WEIGHT_BOUND: i64 = 13;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub d: u64,
    /// Constant term of `(q^-1 + 70) e_0` against `G`.
    pub fixed_part: Frac,
    /// Constant term of `q^{-1/d}(e_v + e_-v) - 2 e_0` against `G`.
    pub slope: Frac,
    /// Multiplicity of the Siegel half-space in the divisor of `J`.
    pub m: Frac,
    pub wt_j: Frac,
    pub feasible: bool,
}

impl Classification {
    pub fn summary(&self) -> String {
        format!(
            "d={} m={} wtJ={} {}",
            self.d,
            render(&self.m),
            render(&self.wt_j),
            if self.feasible {
                "feasible"
            } else {
                "excluded"
            }
        )
    }
}

/// Serre derivative of the theta series of `O_K` (weight 3, `rho*`), known
/// below `q^2`, together with the coset `v` of `sqrt(-d)/d`.
pub fn siegel_serre_form(d: u64) -> Result<(VVForm, Coset), LiftError> {
    let ok = ok_lattice(d)?;
    let theta = theta_series(&ok, &int(2))?;
    let mut g = VVForm::zero(theta.disc().clone(), int(3), Rep::RhoDual, int(2));
    for (x, s) in theta.components() {
        g.add_series(x, &serre_derivative(s, theta.weight()))?;
    }
    let v = theta.disc().coset_of(&siegel_coset_vector(d))?;
    Ok((g, v))
}

/// Solves the vanishing of the constant term of `<F, G>` for the
/// multiplicity `m` in `F = q^-1 e_0 + m q^{-1/d}(e_v + e_-v) + (70 - 2m) e_0`.
/// The pairing is affine in `m`, so two evaluations determine it.
pub fn classify_siegel(d: u64) -> Result<Classification, LiftError> {
    if !is_field_discriminant(d) {
        return Err(LatticeError::NotDiscriminant(d).into());
    }
    let ok = ok_lattice(d)?;
    let units = enumerate_vectors(&ok, &Coset::zero(2), &int(1))?
        .into_iter()
        .filter(|(_, n)| *n == int(1))
        .count();
    if units != 2 {
        return Err(LiftError::UnitGuard(d));
    }
    let (g, v) = siegel_serre_form(d)?;
    let disc: Arc<DiscriminantForm> = g.disc().clone();
    let zero = Coset::zero(2);
    let prec = frac(1, d as i64);
    let eps = frac(-1, d as i64);

    let f0 = VVForm::from_terms(
        disc.clone(),
        int(-1),
        Rep::Rho,
        prec.clone(),
        [
            (zero.clone(), int(-1), int(1)),
            (zero.clone(), int(0), int(70)),
        ],
    )?;
    let f1 = VVForm::from_terms(
        disc,
        int(-1),
        Rep::Rho,
        prec,
        [
            (v.clone(), eps.clone(), int(1)),
            (v.neg(), eps, int(1)),
            (zero, int(0), int(-2)),
        ],
    )?;
    let a = pairing_constant_term(&f0, &g)?;
    let b = pairing_constant_term(&f1, &g)?;
    if b.is_zero() {
        return Err(LiftError::Inconsistent(format!(
            "d = {d}: the pairing does not depend on m"
        )));
    }
    let m = -&a / &b;
    let wt_j = int(35) - &m;
    let feasible = wt_j >= siegel_weight_bound();
    Ok(Classification {
        d,
        fixed_part: a,
        slope: b,
        m,
        wt_j,
        feasible,
    })
}
