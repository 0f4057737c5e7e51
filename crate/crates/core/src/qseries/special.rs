//! Named q-expansions: eta quotients, the weight two Eisenstein series and
//! unary theta series, plus the Serre derivative.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::frac::{int, isqrt_ceil, Frac};
use super::{FracSeries, SeriesError};

/// Dense power series in `q` with integer coefficients, truncated to `len`
/// coefficients.
#[derive(Clone, Debug)]
struct Dense(Vec<BigInt>);

impl Dense {
    fn one(len: usize) -> Self {
        let mut v = vec![BigInt::zero(); len];
        if len > 0 {
            v[0] = BigInt::one();
        }
        Dense(v)
    }

    /// `prod_{n>=1} (1 - q^{step n})` via Euler's pentagonal number theorem.
    fn euler(step: usize, len: usize) -> Self {
        let mut v = vec![BigInt::zero(); len];
        if len > 0 {
            v[0] = BigInt::one();
        }
        for k in 1i64.. {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let p1 = (k * (3 * k - 1) / 2) as usize * step;
            let p2 = (k * (3 * k + 1) / 2) as usize * step;
            if p1 >= len {
                break;
            }
            v[p1] += sign;
            if p2 < len {
                v[p2] += sign;
            }
        }
        Dense(v)
    }

    fn mul(&self, other: &Dense) -> Dense {
        let len = self.0.len();
        let mut out = vec![BigInt::zero(); len];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().take(len - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Dense(out)
    }

    /// Inverse of a series with constant term one.
    fn inverse(&self) -> Dense {
        let len = self.0.len();
        debug_assert!(len == 0 || self.0[0].is_one());
        let mut out = vec![BigInt::zero(); len];
        if len > 0 {
            out[0] = BigInt::one();
        }
        for n in 1..len {
            let mut s = BigInt::zero();
            for k in 1..=n {
                if !self.0[k].is_zero() {
                    s -= &self.0[k] * &out[n - k];
                }
            }
            out[n] = s;
        }
        Dense(out)
    }

    fn pow(&self, mut e: u64) -> Dense {
        let mut result = Dense::one(self.0.len());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }
}

/// Product `prod eta(m tau)^r` over `(m, r)` pairs, known below `prec`.
///
/// The unit part after removing `q^{sum m r / 24}` is expanded with the
/// pentagonal number theorem; negative powers go through exact inversion.
pub fn eta_quotient(factors: &[(u32, i32)], prec: &Frac) -> Result<FracSeries, SeriesError> {
    if factors.is_empty() {
        return Err(SeriesError::EmptyEtaQuotient);
    }
    if factors.iter().any(|&(m, _)| m == 0) {
        return Err(SeriesError::InvalidEtaFactor);
    }
    let lead: Frac = factors
        .iter()
        .map(|&(m, r)| Frac::new(BigInt::from(m as i64 * r as i64), BigInt::from(24)))
        .sum();
    if *prec <= lead {
        return Err(SeriesError::EmptyWindow {
            leading: lead,
            prec: prec.clone(),
        });
    }
    let len = (prec - &lead)
        .ceil()
        .to_integer()
        .to_usize()
        .expect("precision window too large");
    let mut unit = Dense::one(len);
    for &(m, r) in factors {
        let e = Dense::euler(m as usize, len);
        let e = if r < 0 { e.inverse() } else { e };
        unit = unit.mul(&e.pow(r.unsigned_abs() as u64));
    }
    FracSeries::from_terms(
        unit.0
            .into_iter()
            .enumerate()
            .map(|(k, c)| (&lead + int(k as i64), Frac::from_integer(c))),
        prec,
    )
}

fn sigma1(n: u64) -> u64 {
    (1..=n).filter(|d| n % d == 0).sum()
}

/// `E_2 = 1 - 24 sum sigma_1(n) q^n`, known below `prec` (at least 1).
pub fn eisenstein2(prec: &Frac) -> Result<FracSeries, SeriesError> {
    if *prec < Frac::one() {
        return Err(SeriesError::PrecisionTooSmall {
            needed: Frac::one(),
            got: prec.clone(),
        });
    }
    let top = prec
        .ceil()
        .to_integer()
        .to_u64()
        .expect("precision too large");
    let terms = std::iter::once((Frac::zero(), Frac::one())).chain(
        (1..top)
            .filter(|&n| int(n as i64) < *prec)
            .map(|n| (int(n as i64), int(-24 * sigma1(n) as i64))),
    );
    FracSeries::from_terms(terms, prec)
}

/// `sum_{n in Z} q^{m (n + a)^2}` known below `prec`.
pub fn unary_theta(m: &Frac, a: &Frac, prec: &Frac) -> Result<FracSeries, SeriesError> {
    if !m.is_positive() {
        return Err(SeriesError::NonPositiveNorm(m.clone()));
    }
    // m (n + a)^2 < prec  =>  |n + a| < bound
    let bound = isqrt_ceil(&(prec / m)) as i64 + 1;
    let center = (-a).floor().to_integer().to_i64().expect("shift too large");
    let mut terms = Vec::new();
    for n in (center - bound)..=(center + bound + 1) {
        let x = int(n) + a;
        let e = m * &x * &x;
        if e < *prec {
            terms.push((e, Frac::one()));
        }
    }
    FracSeries::from_terms(terms, prec)
}

/// `q d/dq f - (w/12) E_2 f`. `E_2` is expanded far enough that the result
/// keeps the precision of `f`.
pub fn serre_derivative(f: &FracSeries, weight: &Frac) -> FracSeries {
    let span = f.prec() - f.valuation();
    let e2_prec = span.ceil().max(Frac::one());
    let e2 = eisenstein2(&e2_prec).expect("precision is at least one");
    let correction = (&e2 * f).scale(&(weight / int(12)));
    let out = &f.q_derivative() - &correction;
    debug_assert!(out.prec() >= f.prec());
    out.truncate(&f.prec())
}
