//! Weights, divisors and pole orders of Borcherds products and singular
//! additive lifts, and the weight bound for poles on the Siegel half-space.

mod classify;
mod table1;

pub use classify::{
    classify_siegel, siegel_serre_form, siegel_weight_bound, Classification, SIEGEL_WEIGHT_BOUND,
};
pub use table1::{verify_table1, Table1Row, TABLE1};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::lattice::{Coset, DiscriminantForm, LatticeError};
use crate::qseries::{frac, int, mod_one, render, Frac, SeriesError};
use crate::weilrep::{PrincipalPart, VVForm, WeilError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LiftError {
    #[error(transparent)]
    Weil(#[from] WeilError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("additive lift weight {0} is not a positive integer")]
    BadLiftWeight(Frac),
    #[error("d = {0}: the Siegel computation assumes exactly two units (d > 4)")]
    UnitGuard(u64),
    #[error("inconsistent solve: {0}")]
    Inconsistent(String),
    #[error("unknown fixture {0}")]
    UnknownFixture(String),
}

/// `sum mult * H(m, +-gamma)`, keyed by `m` and the lexicographically
/// smaller of `gamma`, `-gamma`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HeegnerDivisor {
    entries: BTreeMap<(Frac, Coset), i64>,
}

fn canonical(x: &Coset) -> Coset {
    let n = x.neg();
    if n < *x {
        n
    } else {
        x.clone()
    }
}

impl HeegnerDivisor {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, m: Frac, component: &Coset, mult: i64) {
        let key = (m, canonical(component));
        let slot = self.entries.entry(key.clone()).or_insert(0);
        *slot += mult;
        if *slot == 0 {
            self.entries.remove(&key);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Frac, &Coset, i64)> {
        self.entries.iter().map(|((m, x), k)| (m, x, *k))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn multiplicity(&self, m: &Frac, component: &Coset) -> i64 {
        self.entries
            .get(&(m.clone(), canonical(component)))
            .copied()
            .unwrap_or(0)
    }

    /// Distinct discriminants `m` in increasing order.
    pub fn norms(&self) -> Vec<Frac> {
        let set: BTreeSet<Frac> = self.entries.keys().map(|(m, _)| m.clone()).collect();
        set.into_iter().collect()
    }

    /// The common multiplicity on every component of `H(m)`, if there is
    /// one.
    pub fn uniform_multiplicity(&self, disc: &DiscriminantForm, m: &Frac) -> Option<i64> {
        let comps = disc.heegner_components(m);
        let first = self.multiplicity(m, comps.first()?);
        comps
            .iter()
            .all(|c| self.multiplicity(m, c) == first)
            .then_some(first)
    }

    /// `3·H(1/7) + 1·H(2/7)` style summary; components are spelled out when
    /// the multiplicity differs between them.
    pub fn summary(&self, disc: &DiscriminantForm) -> String {
        let mut parts = Vec::new();
        for m in self.norms() {
            match self.uniform_multiplicity(disc, &m) {
                Some(k) => parts.push(format!("{k}·H({})", render(&m))),
                None => {
                    for (mm, x, k) in self.entries() {
                        if *mm == m {
                            parts.push(format!("{k}·H({}, {x})", render(&m)));
                        }
                    }
                }
            }
        }
        parts.join("; ")
    }
}

impl fmt::Display for HeegnerDivisor {
    /// One `H(m) coset mult` line per component.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (m, x, k) in self.entries() {
            writeln!(f, "H({}) {} {}", render(m), x, k)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftKind {
    Product,
    Additive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftMeta {
    pub kind: LiftKind,
    pub weight: Frac,
    /// Order of every pole (additive lifts only).
    pub pole_order: Option<i64>,
    /// Zeros and poles; for additive lifts each pole appears with
    /// multiplicity `-pole_order`.
    pub divisor: HeegnerDivisor,
}

impl LiftMeta {
    /// Weight at least the largest pole order.
    pub fn koecher_bound_holds(&self) -> bool {
        let worst = self
            .divisor
            .entries()
            .map(|(_, _, k)| -k)
            .max()
            .unwrap_or(0)
            .max(0);
        self.weight >= int(worst)
    }
}

/// `c(0, 0) / 2`.
pub fn borcherds_weight(p: &PrincipalPart) -> Frac {
    frac(p.constant(), 2)
}

/// `(m, gamma)` with `j gamma = x` and `Q(gamma) = n / j^2 mod 1` for some
/// singular term `c(-n, x)`.
fn fold_candidates<'a, I>(disc: &DiscriminantForm, singular: I) -> BTreeSet<(Frac, Coset)>
where
    I: IntoIterator<Item = (&'a Coset, Frac)>,
{
    let level = int(disc.level() as i64);
    let mut out = BTreeSet::new();
    for (x, n) in singular {
        let mut j = 1i64;
        // Q(lambda) >= 1/level for lambda in L' with Q(lambda) > 0
        while int(j * j) <= &n * &level {
            let m = &n / int(j * j);
            let target = mod_one(&m);
            for g in disc.elements() {
                if g.scale(j) == *x && disc.q(g) == target {
                    out.insert((m.clone(), canonical(g)));
                }
            }
            j += 1;
        }
    }
    out
}

/// `mult(m, gamma) = sum_{j >= 1} c(-j^2 m, j gamma)` on every component
/// with `m <= max_m`.
pub fn borcherds_divisor(p: &PrincipalPart, max_m: &Frac) -> HeegnerDivisor {
    let disc = p.disc();
    let top = p.max_singular_norm();
    let singular: Vec<(&Coset, Frac)> = p.terms().map(|(x, e, _)| (x, -e.clone())).collect();
    let mut div = HeegnerDivisor::new();
    for (m, g) in fold_candidates(disc, singular) {
        if m > *max_m {
            continue;
        }
        let mut mult = 0;
        let mut j = 1i64;
        while &m * int(j * j) <= top {
            mult += p.coeff(&-(&m * int(j * j)), &g.scale(j));
            j += 1;
        }
        div.add(m, &g, mult);
    }
    div
}

/// Weight `k = weight - 1 + n/2` and the pole divisor of the singular
/// additive lift on a lattice of signature `(n, 2)`.
pub fn additive_lift_meta(f: &VVForm, n: i64) -> Result<LiftMeta, LiftError> {
    let k = f.weight() - int(1) + frac(n, 2);
    let order = if k.is_integer() {
        k.to_integer().to_i64()
    } else {
        None
    };
    let order = match order {
        Some(v) if v >= 1 => v,
        _ => return Err(LiftError::BadLiftWeight(k)),
    };
    let terms = f.terms();
    let singular = terms
        .iter()
        .filter(|(_, e, c)| *e < Frac::zero() && !c.is_zero())
        .map(|(x, e, _)| (x, -e.clone()));
    let mut divisor = HeegnerDivisor::new();
    for (m, g) in fold_candidates(f.disc(), singular) {
        divisor.add(m, &g, -order);
    }
    Ok(LiftMeta {
        kind: LiftKind::Additive,
        weight: k,
        pole_order: Some(order),
        divisor,
    })
}

/// Product-side metadata: weight `c(0,0)/2` and the full singular divisor.
pub fn product_meta(p: &PrincipalPart) -> LiftMeta {
    LiftMeta {
        kind: LiftKind::Product,
        weight: borcherds_weight(p),
        pole_order: None,
        divisor: borcherds_divisor(p, &p.max_singular_norm()),
    }
}

/// `n + sum weights`.
pub fn jacobian_weight(weights: &[Frac], n: i64) -> Frac {
    weights.iter().fold(int(n), |acc, w| acc + w)
}

/// Convenience for integer weight lists.
pub fn jacobian_weight_int(weights: &[i64], n: i64) -> Frac {
    int(n + weights.iter().sum::<i64>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::hermitian_lattice;
    use crate::qseries::FracSeries;
    use crate::weilrep::{bb_lift, Rep};
    use std::sync::Arc;

    fn disc(d: u64) -> Arc<DiscriminantForm> {
        Arc::new(DiscriminantForm::new(&hermitian_lattice(d).unwrap()).unwrap())
    }

    fn bb(terms: &[(i64, i64)], prec: i64, p: u64) -> PrincipalPart {
        let f = FracSeries::from_terms(terms.iter().map(|&(e, c)| (int(e), int(c))), &int(prec))
            .unwrap();
        PrincipalPart::of(&bb_lift(&f, &int(-1), p, disc(p)).unwrap()).unwrap()
    }

    #[test]
    fn phi7() {
        let p = bb(&[(-2, 2), (-1, 6), (0, 14)], 1, 7);
        assert_eq!(borcherds_weight(&p), int(7));
        let div = borcherds_divisor(&p, &frac(2, 7));
        assert_eq!(div.summary(p.disc()), "3·H(1/7); 1·H(2/7)");
    }

    #[test]
    fn fold_down_only_when_present() {
        let p = bb(&[(-4, 2), (-1, -8), (0, 6)], 1, 11);
        let div = borcherds_divisor(&p, &int(1));
        assert_eq!(div.summary(p.disc()), "-3·H(1/11); 1·H(4/11)");
        let div = borcherds_divisor(&p, &frac(1, 11));
        assert_eq!(div.summary(p.disc()), "-3·H(1/11)");
    }

    #[test]
    fn empty_principal_part() {
        let p = PrincipalPart::new(disc(7), [], 0).unwrap();
        assert_eq!(borcherds_weight(&p), int(0));
        assert!(borcherds_divisor(&p, &int(5)).is_empty());
    }

    #[test]
    fn additive_weights() {
        let d = disc(8);
        let v = Coset::parse("(0,0,0,1/4,0,0)").unwrap();
        let f = VVForm::from_terms(
            d.clone(),
            int(1),
            Rep::Rho,
            frac(1, 8),
            [
                (v.clone(), frac(-1, 8), int(1)),
                (v.neg(), frac(-1, 8), int(1)),
                (Coset::zero(6), int(0), int(-2)),
            ],
        )
        .unwrap();
        let meta = additive_lift_meta(&f, 4).unwrap();
        assert_eq!(meta.weight, int(2));
        assert_eq!(meta.pole_order, Some(2));
        assert_eq!(meta.divisor.summary(&d), "-2·H(1/8)");
        assert!(meta.koecher_bound_holds());
        let bad = VVForm::zero(d, int(-2), Rep::Rho, int(1));
        assert!(additive_lift_meta(&bad, 4).is_err());
    }

    #[test]
    fn jacobian() {
        assert_eq!(jacobian_weight_int(&[2, 4, 6, 8, 10], 4), int(34));
        assert_eq!(jacobian_weight_int(&[1, 2, 3, 3, 4], 4), int(17));
        assert_eq!(jacobian_weight(&[], 4), int(4));
        assert_eq!(jacobian_weight(&[frac(1, 2), frac(1, 2)], 1), int(2));
    }
}
