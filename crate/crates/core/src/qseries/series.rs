use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::frac::{denom_u64, lcm_u64, scaled_i64, Frac};
use super::SeriesError;

/// Truncated Laurent series in `q` with exponents in `(1/N)Z` and exact
/// rational coefficients.
///
/// Every exponent below `prec` is known (absent terms are zero); nothing is
/// known at or above `prec`. Exponents are stored as integer numerators over
/// the common denominator `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FracSeries {
    denom: u64,
    terms: BTreeMap<i64, Frac>,
    prec: i64,
}

impl FracSeries {
    /// The zero series known below `prec`.
    pub fn zero(prec: &Frac) -> Self {
        let denom = denom_u64(prec);
        FracSeries {
            denom,
            terms: BTreeMap::new(),
            prec: scaled_i64(prec, denom),
        }
    }

    /// `c * q^0` known below `prec` (which must be positive).
    pub fn constant(c: Frac, prec: &Frac) -> Result<Self, SeriesError> {
        Self::from_terms([(Frac::zero(), c)], prec)
    }

    pub fn monomial(coeff: Frac, exponent: Frac, prec: &Frac) -> Result<Self, SeriesError> {
        Self::from_terms([(exponent, coeff)], prec)
    }

    /// Builds a series from `(exponent, coefficient)` pairs. Repeated exponents
    /// are summed. A nonzero term at or beyond `prec` is an error.
    pub fn from_terms<I>(terms: I, prec: &Frac) -> Result<Self, SeriesError>
    where
        I: IntoIterator<Item = (Frac, Frac)>,
    {
        let terms: Vec<(Frac, Frac)> = terms.into_iter().collect();
        let mut denom = denom_u64(prec);
        for (e, _) in &terms {
            denom = lcm_u64(denom, denom_u64(e));
        }
        let mut out = FracSeries {
            denom,
            terms: BTreeMap::new(),
            prec: scaled_i64(prec, denom),
        };
        for (e, c) in terms {
            if c.is_zero() {
                continue;
            }
            if e >= *prec {
                return Err(SeriesError::BeyondPrecision {
                    exponent: e,
                    prec: prec.clone(),
                });
            }
            out.add_term(scaled_i64(&e, denom), c);
        }
        Ok(out.normalized())
    }

    fn add_term(&mut self, key: i64, c: Frac) {
        let slot = self.terms.entry(key).or_insert_with(Frac::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Smallest denominator that still represents every exponent and `prec`.
    fn normalized(mut self) -> Self {
        let mut g = self.prec.unsigned_abs();
        for k in self.terms.keys() {
            g = num_integer::gcd(g, k.unsigned_abs());
        }
        let g = num_integer::gcd(g, self.denom);
        if g > 1 {
            self.denom /= g;
            self.prec /= g as i64;
            self.terms = std::mem::take(&mut self.terms)
                .into_iter()
                .map(|(k, c)| (k / g as i64, c))
                .collect();
        }
        self
    }

    fn rescaled(&self, denom: u64) -> Self {
        debug_assert_eq!(denom % self.denom, 0);
        let f = (denom / self.denom) as i64;
        FracSeries {
            denom,
            terms: self.terms.iter().map(|(k, c)| (k * f, c.clone())).collect(),
            prec: self.prec * f,
        }
    }

    fn exp(&self, key: i64) -> Frac {
        Frac::new(BigInt::from(key), BigInt::from(self.denom))
    }

    /// Common exponent denominator `N`.
    pub fn denom(&self) -> u64 {
        self.denom
    }

    pub fn prec(&self) -> Frac {
        self.exp(self.prec)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (Frac, &Frac)> + '_ {
        self.terms.iter().map(|(k, c)| (self.exp(*k), c))
    }

    /// Coefficient of `q^e`, or `None` if `e` is at or beyond the precision.
    pub fn coeff(&self, e: &Frac) -> Option<Frac> {
        if *e >= self.prec() {
            return None;
        }
        let n = Frac::from_integer(BigInt::from(self.denom));
        let scaled = e * n;
        if !scaled.is_integer() {
            return Some(Frac::zero());
        }
        let key = scaled_i64(e, self.denom);
        Some(self.terms.get(&key).cloned().unwrap_or_else(Frac::zero))
    }

    /// Exponent of the first nonzero term.
    pub fn lowest_exponent(&self) -> Option<Frac> {
        self.terms.keys().next().map(|k| self.exp(*k))
    }

    /// Lowest exponent that can carry a nonzero coefficient: the first term,
    /// or the precision for a series with no known terms.
    pub fn valuation(&self) -> Frac {
        self.lowest_exponent().unwrap_or_else(|| self.prec())
    }

    fn valuation_key(&self) -> i64 {
        self.terms.keys().next().copied().unwrap_or(self.prec)
    }

    /// Coefficient at exponent zero.
    pub fn constant_term(&self) -> Result<Frac, SeriesError> {
        if self.prec <= 0 {
            return Err(SeriesError::ConstantTermUnknown(self.prec()));
        }
        Ok(self.terms.get(&0).cloned().unwrap_or_else(Frac::zero))
    }

    /// Drops everything at or above `prec` (no-op if `prec` exceeds the
    /// current precision).
    pub fn truncate(&self, prec: &Frac) -> Self {
        if *prec >= self.prec() {
            return self.clone();
        }
        let denom = lcm_u64(self.denom, denom_u64(prec));
        let mut out = self.rescaled(denom);
        out.prec = scaled_i64(prec, denom);
        out.terms.retain(|k, _| *k < out.prec);
        out.normalized()
    }

    pub fn scale(&self, c: &Frac) -> Self {
        if c.is_zero() {
            let mut out = self.clone();
            out.terms.clear();
            return out.normalized();
        }
        FracSeries {
            denom: self.denom,
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
            prec: self.prec,
        }
    }

    /// Multiplies by `q^e`; the precision shifts along.
    pub fn shift(&self, e: &Frac) -> Self {
        let denom = lcm_u64(self.denom, denom_u64(e));
        let mut out = self.rescaled(denom);
        let s = scaled_i64(e, denom);
        out.terms = out.terms.into_iter().map(|(k, c)| (k + s, c)).collect();
        out.prec += s;
        out.normalized()
    }

    /// Substitutes `q -> q^k` for a positive integer `k`.
    pub fn dilate(&self, k: u64) -> Self {
        assert!(k > 0, "dilation factor must be positive");
        let k = k as i64;
        FracSeries {
            denom: self.denom,
            terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect(),
            prec: self.prec * k,
        }
        .normalized()
    }

    /// `q d/dq`: each `c q^e` becomes `c e q^e`.
    pub fn q_derivative(&self) -> Self {
        let mut out = self.clone();
        out.terms = self
            .terms
            .iter()
            .filter(|(k, _)| **k != 0)
            .map(|(k, c)| (*k, c * self.exp(*k)))
            .collect();
        out.normalized()
    }

    fn combine(&self, other: &Self, sign: i32) -> Self {
        let denom = lcm_u64(self.denom, other.denom);
        let a = self.rescaled(denom);
        let b = other.rescaled(denom);
        let prec = a.prec.min(b.prec);
        let mut out = FracSeries {
            denom,
            terms: BTreeMap::new(),
            prec,
        };
        for (k, c) in a.terms.range(..prec) {
            out.add_term(*k, c.clone());
        }
        for (k, c) in b.terms.range(..prec) {
            if sign > 0 {
                out.add_term(*k, c.clone());
            } else {
                out.add_term(*k, -c.clone());
            }
        }
        out.normalized()
    }

    fn product(&self, other: &Self) -> Self {
        let denom = lcm_u64(self.denom, other.denom);
        let a = self.rescaled(denom);
        let b = other.rescaled(denom);
        let prec = (a.prec + b.valuation_key()).min(b.prec + a.valuation_key());
        let mut acc: BTreeMap<i64, Frac> = BTreeMap::new();
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                let k = ka + kb;
                if k >= prec {
                    break;
                }
                *acc.entry(k).or_insert_with(Frac::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        FracSeries {
            denom,
            terms: acc,
            prec,
        }
        .normalized()
    }

    /// Multiplicative inverse of a series whose lowest term is known.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let lead_key = *self.terms.keys().next().ok_or(SeriesError::NotInvertible)?;
        let lead = self.terms[&lead_key].clone();
        // f = c q^v (1 + g) with g supported on positive exponents
        let rel = self.prec - lead_key;
        let inv_lead = Frac::one() / &lead;
        let unit: BTreeMap<i64, Frac> = self
            .terms
            .iter()
            .map(|(k, c)| (k - lead_key, c * &inv_lead))
            .collect();
        let mut out: BTreeMap<i64, Frac> = BTreeMap::new();
        out.insert(0, Frac::one());
        for n in 1..rel {
            let mut s = Frac::zero();
            for (k, c) in unit.range(1..=n) {
                if let Some(o) = out.get(&(n - k)) {
                    s -= c * o;
                }
            }
            if !s.is_zero() {
                out.insert(n, s);
            }
        }
        let terms = out
            .into_iter()
            .map(|(k, c)| (k - lead_key, c * &inv_lead))
            .collect();
        Ok(FracSeries {
            denom: self.denom,
            terms,
            prec: rel - lead_key,
        }
        .normalized())
    }

    /// Whether both series agree on every exponent below the smaller of the
    /// two precisions.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let p = self.prec().min(other.prec());
        self.truncate(&p) == other.truncate(&p)
    }
}

impl Add for &FracSeries {
    type Output = FracSeries;
    fn add(self, rhs: &FracSeries) -> FracSeries {
        self.combine(rhs, 1)
    }
}

impl Sub for &FracSeries {
    type Output = FracSeries;
    fn sub(self, rhs: &FracSeries) -> FracSeries {
        self.combine(rhs, -1)
    }
}

impl Mul for &FracSeries {
    type Output = FracSeries;
    fn mul(self, rhs: &FracSeries) -> FracSeries {
        self.product(rhs)
    }
}

impl Neg for &FracSeries {
    type Output = FracSeries;
    fn neg(self) -> FracSeries {
        self.scale(&-Frac::one())
    }
}

impl fmt::Display for FracSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            if first {
                write!(f, "{c}")?;
                first = false;
            } else if c < &Frac::zero() {
                write!(f, " - {}", -c)?;
            } else {
                write!(f, " + {c}")?;
            }
            if !e.is_zero() {
                write!(f, "*q^({e})")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^({}))", self.prec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::frac::{frac, int};

    fn s(terms: &[(i64, i64, i64)], prec: Frac) -> FracSeries {
        FracSeries::from_terms(terms.iter().map(|&(n, d, c)| (frac(n, d), int(c))), &prec).unwrap()
    }

    #[test]
    fn add_cancels_and_takes_min_precision() {
        let a = s(&[(-1, 1, 1), (0, 1, 2)], int(1));
        let b = s(&[(0, 1, -2)], int(3));
        let c = &a + &b;
        assert_eq!(c, s(&[(-1, 1, 1)], int(1)));
        assert_eq!(c.prec(), int(1));
    }

    #[test]
    fn add_zero_is_identity() {
        let a = s(&[(-1, 1, 1), (1, 3, 5)], int(2));
        let z = FracSeries::zero(&int(5));
        assert_eq!(&a + &z, a);
    }

    #[test]
    fn add_opposite_linear_terms() {
        let a = s(&[(0, 1, 1), (1, 1, -24)], int(2));
        let b = s(&[(1, 1, 24)], int(2));
        assert_eq!(&a + &b, s(&[(0, 1, 1)], int(2)));
    }

    #[test]
    fn mul_basic() {
        let a = s(&[(-1, 1, 1)], int(5));
        let b = s(&[(1, 1, 1)], int(5));
        let p = &a * &b;
        assert_eq!(p.constant_term().unwrap(), int(1));
        assert_eq!(p.len(), 1);
        // prec = min(5 + 1, 5 - 1)
        assert_eq!(p.prec(), int(4));

        let a = s(&[(0, 1, 1), (1, 1, 1)], int(10));
        let b = s(&[(0, 1, 1), (1, 1, -1)], int(10));
        assert_eq!(&a * &b, s(&[(0, 1, 1), (2, 1, -1)], int(10)));
    }

    #[test]
    fn mixed_denominators() {
        let a = s(&[(1, 2, 1)], int(2));
        let b = s(&[(1, 3, 1)], int(2));
        let p = &a * &b;
        assert_eq!(p.denom(), 6);
        assert_eq!(p.coeff(&frac(5, 6)), Some(int(1)));
        let sum = &a + &b;
        assert_eq!(sum.denom(), 6);
        assert_eq!(sum.len(), 2);
    }

    #[test]
    fn zero_series_multiplication_keeps_known_window() {
        let z = FracSeries::zero(&frac(3, 4));
        let t = s(&[(1, 4, 2)], int(3));
        let p = &z * &t;
        assert!(p.is_zero());
        assert_eq!(p.prec(), int(1));
    }

    #[test]
    fn derivative() {
        let a = s(&[(-1, 1, 1)], int(1));
        assert_eq!(a.q_derivative(), s(&[(-1, 1, -1)], int(1)));
        assert!(s(&[(0, 1, 7)], int(1)).q_derivative().is_zero());
        let b = s(&[(1, 7, 1)], int(1));
        assert_eq!(b.q_derivative().coeff(&frac(1, 7)), Some(frac(1, 7)));
    }

    #[test]
    fn constant_term_rules() {
        let f = s(&[(-1, 1, 1), (0, 1, 70), (1, 1, 131976)], int(2));
        assert_eq!(f.constant_term().unwrap(), int(70));
        assert_eq!(s(&[(1, 2, 1)], int(1)).constant_term().unwrap(), int(0));
        let unknown = s(&[(-1, 1, 1)], int(0));
        assert!(unknown.constant_term().is_err());
    }

    #[test]
    fn terms_beyond_precision_rejected() {
        let r = FracSeries::from_terms([(int(2), int(1))], &int(2));
        assert!(matches!(r, Err(SeriesError::BeyondPrecision { .. })));
    }

    #[test]
    fn inverse_of_one_minus_q() {
        let f = s(&[(0, 1, 1), (1, 1, -1)], int(6));
        let g = f.inverse().unwrap();
        for k in 0..6 {
            assert_eq!(g.coeff(&int(k)), Some(int(1)));
        }
        assert_eq!(g.prec(), int(6));
        let h = s(&[(-1, 2, 2)], int(1)).inverse().unwrap();
        assert_eq!(h.coeff(&frac(1, 2)), Some(frac(1, 2)));
        assert_eq!(h.prec(), int(2));
    }

    #[test]
    fn truncate_and_shift() {
        let f = s(&[(0, 1, 1), (1, 2, 3), (1, 1, 4)], int(2));
        let t = f.truncate(&frac(3, 4));
        assert_eq!(t, s(&[(0, 1, 1), (1, 2, 3)], frac(3, 4)));
        let g = f.shift(&frac(-1, 3));
        assert_eq!(g.prec(), frac(5, 3));
        assert_eq!(g.coeff(&frac(1, 6)), Some(int(3)));
        let h = s(&[(-1, 7, 3), (0, 1, 14)], frac(1, 7)).dilate(7);
        assert_eq!(h, s(&[(-1, 1, 3), (0, 1, 14)], int(1)));
    }
}
