//! Vector-valued q-expansions for the Weil representation of a discriminant
//! form, and the operations that move between them.

mod matrix;
mod ops;
mod text;

pub use matrix::{check_relations, weil_s, weil_t, RelationCheck, RelationReport, WeilMatrix};
pub use ops::{bb_collapse, bb_lift, pairing_constant_term, theta_contract, theta_series};
pub use text::{parse_vvform, write_vvform};

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::lattice::{Coset, DiscriminantForm, LatticeError};
use crate::qseries::{int, render, Frac, FracSeries, SeriesError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeilError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("signature {0} is odd; the S-matrix formula needs even signature")]
    OddSignature(u8),
    #[error("{0} is not an element of the discriminant group")]
    UnknownCoset(String),
    #[error("exponent {exponent} on coset {coset} violates the exponent congruence")]
    Congruence { coset: String, exponent: Frac },
    #[error("mismatched {0}")]
    Mismatch(&'static str),
    #[error("coefficient {coeff} of q^{exponent} on coset {coset} is not an integer")]
    NonIntegral {
        coset: String,
        exponent: Frac,
        coeff: Frac,
    },
    #[error("basis vector {0} is not orthogonal to the rest of the lattice")]
    NotSplit(usize),
    #[error("basis index {index} out of range for rank {rank}")]
    BadIndex { index: usize, rank: usize },
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("discriminant group has order {order}, expected {p}")]
    OrderMismatch { order: u64, p: u64 },
    #[error("coefficient at q^{exponent} has no matching coset: input is not in the minus space")]
    MinusSpace { exponent: Frac },
    #[error("scalar input has non-integral exponent {0}")]
    FractionalExponent(Frac),
    #[error("precision insufficient: {0}")]
    Precision(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Which of the two dual representations a form transforms under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rep {
    /// Exponents on `e_x` lie in `Z - Q(x)`.
    Rho,
    /// Exponents on `e_x` lie in `Z + Q(x)`.
    RhoDual,
}

impl Rep {
    pub fn name(self) -> &'static str {
        match self {
            Rep::Rho => "rho",
            Rep::RhoDual => "rho*",
        }
    }

    pub fn parse(s: &str) -> Option<Rep> {
        match s {
            "rho" => Some(Rep::Rho),
            "rho*" | "rhodual" => Some(Rep::RhoDual),
            _ => None,
        }
    }

    /// Whether `exponent` is allowed on a coset of norm `q`.
    pub fn allows(self, q: &Frac, exponent: &Frac) -> bool {
        let shifted = match self {
            Rep::Rho => exponent + q,
            Rep::RhoDual => exponent - q,
        };
        shifted.is_integer()
    }
}

impl fmt::Display for Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A truncated vector-valued expansion `sum_x f_x(tau) e_x`. Every component
/// is known below the same precision; absent components are zero there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VVForm {
    disc: Arc<DiscriminantForm>,
    weight: Frac,
    rep: Rep,
    components: BTreeMap<Coset, FracSeries>,
    prec: Frac,
}

/// Outcome of [`VVForm::validate`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Symmetry class under `x -> -x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl VVForm {
    /// The zero form known below `prec`.
    pub fn zero(disc: Arc<DiscriminantForm>, weight: Frac, rep: Rep, prec: Frac) -> Self {
        VVForm {
            disc,
            weight,
            rep,
            components: BTreeMap::new(),
            prec,
        }
    }

    /// Builds a form from `(coset, exponent, coefficient)` triples, checking
    /// cosets and the exponent congruence.
    pub fn from_terms<I>(
        disc: Arc<DiscriminantForm>,
        weight: Frac,
        rep: Rep,
        prec: Frac,
        terms: I,
    ) -> Result<Self, WeilError>
    where
        I: IntoIterator<Item = (Coset, Frac, Frac)>,
    {
        let mut grouped: BTreeMap<Coset, Vec<(Frac, Frac)>> = BTreeMap::new();
        for (x, e, c) in terms {
            if disc.index_of(&x).is_none() {
                return Err(WeilError::UnknownCoset(x.to_string()));
            }
            if !c.is_zero() && !rep.allows(&disc.q(&x), &e) {
                return Err(WeilError::Congruence {
                    coset: x.to_string(),
                    exponent: e,
                });
            }
            grouped.entry(x).or_default().push((e, c));
        }
        let mut form = VVForm::zero(disc, weight, rep, prec.clone());
        for (x, ts) in grouped {
            let f = FracSeries::from_terms(ts, &prec)?;
            if !f.is_zero() {
                form.components.insert(x, f);
            }
        }
        Ok(form)
    }

    pub fn disc(&self) -> &Arc<DiscriminantForm> {
        &self.disc
    }

    pub fn weight(&self) -> &Frac {
        &self.weight
    }

    pub fn rep(&self) -> Rep {
        self.rep
    }

    pub fn prec(&self) -> &Frac {
        &self.prec
    }

    /// The component at `x` (zero if absent).
    pub fn component(&self, x: &Coset) -> FracSeries {
        self.components
            .get(x)
            .cloned()
            .unwrap_or_else(|| FracSeries::zero(&self.prec))
    }

    /// Nonzero components in canonical coset order.
    pub fn components(&self) -> impl Iterator<Item = (&Coset, &FracSeries)> {
        self.components.iter()
    }

    /// `c(e, x)`, or `None` beyond the precision.
    pub fn coeff(&self, e: &Frac, x: &Coset) -> Option<Frac> {
        if *e >= self.prec {
            return None;
        }
        Some(
            self.components
                .get(x)
                .and_then(|f| f.coeff(e))
                .unwrap_or_else(Frac::zero),
        )
    }

    /// Every nonzero `(coset, exponent, coefficient)`.
    pub fn terms(&self) -> Vec<(Coset, Frac, Frac)> {
        self.components
            .iter()
            .flat_map(|(x, f)| f.terms().map(move |(e, c)| (x.clone(), e, c.clone())))
            .collect()
    }

    /// Adds `f` to the component at `x`; the form's precision drops to
    /// `f`'s if that is lower.
    pub fn add_series(&mut self, x: &Coset, f: &FracSeries) -> Result<(), WeilError> {
        if self.disc.index_of(x).is_none() {
            return Err(WeilError::UnknownCoset(x.to_string()));
        }
        if f.prec() < self.prec {
            *self = self.truncate(&f.prec());
        }
        let sum = &self.component(x) + &f.truncate(&self.prec);
        if sum.is_zero() {
            self.components.remove(x);
        } else {
            self.components.insert(x.clone(), sum);
        }
        Ok(())
    }

    pub fn truncate(&self, prec: &Frac) -> Self {
        let prec = prec.min(&self.prec).clone();
        VVForm {
            disc: self.disc.clone(),
            weight: self.weight.clone(),
            rep: self.rep,
            components: self
                .components
                .iter()
                .map(|(x, f)| (x.clone(), f.truncate(&prec)))
                .filter(|(_, f)| !f.is_zero())
                .collect(),
            prec,
        }
    }

    pub fn scale(&self, c: &Frac) -> Self {
        let mut out = self.clone();
        out.components = self
            .components
            .iter()
            .map(|(x, f)| (x.clone(), f.scale(c)))
            .filter(|(_, f)| !f.is_zero())
            .collect();
        out
    }

    /// Sum of two forms of the same type.
    pub fn add(&self, other: &VVForm) -> Result<VVForm, WeilError> {
        if self.disc.lattice() != other.disc.lattice() {
            return Err(WeilError::Mismatch("discriminant forms"));
        }
        if self.weight != other.weight {
            return Err(WeilError::Mismatch("weights"));
        }
        if self.rep != other.rep {
            return Err(WeilError::Mismatch("representations"));
        }
        let mut out = self.truncate(&other.prec);
        for (x, f) in &other.components {
            out.add_series(x, f)?;
        }
        Ok(out)
    }

    /// Lowest exponent over all components.
    pub fn min_exponent(&self) -> Option<Frac> {
        self.components
            .values()
            .filter_map(FracSeries::lowest_exponent)
            .min()
    }

    /// Checks the exponent congruence, the shared precision and coset
    /// membership.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for (x, f) in &self.components {
            if self.disc.index_of(x).is_none() {
                report.violations.push(format!("unknown coset {x}"));
                continue;
            }
            if f.prec() != self.prec {
                report.violations.push(format!(
                    "coset {x}: precision {} differs from {}",
                    render(&f.prec()),
                    render(&self.prec)
                ));
            }
            let q = self.disc.q(x);
            for (e, _) in f.terms() {
                if !self.rep.allows(&q, &e) {
                    report.violations.push(format!(
                        "coset {x}: exponent {} not in Z {} {}",
                        render(&e),
                        if self.rep == Rep::Rho { "-" } else { "+" },
                        render(&q)
                    ));
                }
            }
        }
        report
    }

    /// [`VVForm::validate`] plus `c(m, -x) = +-c(m, x)`.
    pub fn validate_with_parity(&self, parity: Parity) -> ValidationReport {
        let mut report = self.validate();
        let sign = match parity {
            Parity::Even => int(1),
            Parity::Odd => int(-1),
        };
        for (x, f) in &self.components {
            let g = self.component(&x.neg()).scale(&sign);
            if *f != g {
                report.violations.push(format!(
                    "coset {x}: component is not {parity:?} under x -> -x"
                ));
            }
        }
        report
    }
}

/// The singular data `c(e, x)` for `e < 0` together with `c(0, 0)`; the
/// input to a Borcherds product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalPart {
    disc: Arc<DiscriminantForm>,
    terms: BTreeMap<(Coset, Frac), i64>,
    constant: i64,
}

impl PrincipalPart {
    pub fn new<I>(disc: Arc<DiscriminantForm>, terms: I, constant: i64) -> Result<Self, WeilError>
    where
        I: IntoIterator<Item = (Coset, Frac, i64)>,
    {
        let mut map = BTreeMap::new();
        for (x, e, c) in terms {
            if disc.index_of(&x).is_none() {
                return Err(WeilError::UnknownCoset(x.to_string()));
            }
            if e >= Frac::zero() || !Rep::Rho.allows(&disc.q(&x), &e) {
                return Err(WeilError::Congruence {
                    coset: x.to_string(),
                    exponent: e,
                });
            }
            if c != 0 {
                *map.entry((x, e)).or_insert(0) += c;
            }
        }
        map.retain(|_, c| *c != 0);
        Ok(PrincipalPart {
            disc,
            terms: map,
            constant,
        })
    }

    /// Extracts the principal part of a `rho` form; its precision must be
    /// positive so that `c(0, 0)` is known.
    pub fn of(f: &VVForm) -> Result<Self, WeilError> {
        if f.rep != Rep::Rho {
            return Err(WeilError::Mismatch("representation (expected rho)"));
        }
        if f.prec <= Frac::zero() {
            return Err(WeilError::Precision(format!(
                "c(0,0) unknown at precision {}",
                render(&f.prec)
            )));
        }
        let integral = |x: &Coset, e: &Frac, c: &Frac| -> Result<i64, WeilError> {
            if c.is_integer() {
                if let Some(v) = c.to_integer().to_i64() {
                    return Ok(v);
                }
            }
            Err(WeilError::NonIntegral {
                coset: x.to_string(),
                exponent: e.clone(),
                coeff: c.clone(),
            })
        };
        let mut terms = Vec::new();
        for (x, e, c) in f.terms() {
            if e < Frac::zero() {
                let v = integral(&x, &e, &c)?;
                terms.push((x, e, v));
            }
        }
        let zero = Coset::zero(f.disc.rank());
        let c0 = f.coeff(&Frac::zero(), &zero).unwrap_or_else(Frac::zero);
        let constant = integral(&zero, &Frac::zero(), &c0)?;
        PrincipalPart::new(f.disc.clone(), terms, constant)
    }

    pub fn disc(&self) -> &Arc<DiscriminantForm> {
        &self.disc
    }

    /// `c(0, 0)`.
    pub fn constant(&self) -> i64 {
        self.constant
    }

    /// `((coset, exponent), coefficient)` with negative exponents.
    pub fn terms(&self) -> impl Iterator<Item = (&Coset, &Frac, i64)> {
        self.terms.iter().map(|((x, e), c)| (x, e, *c))
    }

    /// `c(e, x)` for negative `e`.
    pub fn coeff(&self, e: &Frac, x: &Coset) -> i64 {
        self.terms
            .get(&(x.clone(), e.clone()))
            .copied()
            .unwrap_or(0)
    }

    /// Largest `n` with a nonzero `c(-n, x)`.
    pub fn max_singular_norm(&self) -> Frac {
        self.terms
            .keys()
            .map(|(_, e)| -e.clone())
            .max()
            .unwrap_or_else(Frac::zero)
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}
