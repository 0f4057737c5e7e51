//! Exact arithmetic in `Z[zeta_M]`.
//!
//! Elements are integer vectors over `1, zeta, ..., zeta^{M-1}`, i.e. elements
//! of `Z[x]/(x^M - 1)`. Equality is decided after reduction modulo the
//! cyclotomic polynomial `Phi_M`, so no floating point value is ever formed.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::qseries::{frac, int, Frac};

/// `Z[zeta_M]` for a fixed order `M`, with `Phi_M` precomputed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicRing {
    order: usize,
    phi: Vec<i64>,
}

/// An element of [`CyclotomicRing`] (unreduced representative).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cyclo {
    coeffs: Vec<i64>,
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    // den monic
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (j, d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

/// Coefficients of `Phi_n`, lowest degree first.
pub fn cyclotomic_polynomial(n: usize) -> Vec<i64> {
    let mut p = vec![0i64; n + 1];
    p[0] = -1;
    p[n] = 1;
    for d in 1..n {
        if n % d == 0 {
            p = poly_div_exact(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

impl CyclotomicRing {
    pub fn new(order: usize) -> Self {
        assert!(order > 0, "order must be positive");
        CyclotomicRing {
            order,
            phi: cyclotomic_polynomial(order),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> Cyclo {
        Cyclo {
            coeffs: vec![0; self.order],
        }
    }

    pub fn from_int(&self, n: i64) -> Cyclo {
        let mut z = self.zero();
        z.coeffs[0] = n;
        z
    }

    pub fn one(&self) -> Cyclo {
        self.from_int(1)
    }

    /// `zeta_M^k` for any integer `k`.
    pub fn root(&self, k: i64) -> Cyclo {
        let mut z = self.zero();
        z.coeffs[k.rem_euclid(self.order as i64) as usize] = 1;
        z
    }

    /// `e(x) = exp(2 pi i x)` for rational `x` with `M x` integral.
    pub fn e(&self, x: &Frac) -> Cyclo {
        let scaled = x * int(self.order as i64);
        assert!(
            scaled.is_integer(),
            "e({x}) is not an {}-th root of unity",
            self.order
        );
        let k = scaled.to_integer().mod_floor(&BigInt::from(self.order));
        let k: i64 = k.try_into().expect("small");
        self.root(k)
    }

    pub fn add(&self, a: &Cyclo, b: &Cyclo) -> Cyclo {
        Cyclo {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn sub(&self, a: &Cyclo, b: &Cyclo) -> Cyclo {
        Cyclo {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
        }
    }

    pub fn scale(&self, a: &Cyclo, n: i64) -> Cyclo {
        Cyclo {
            coeffs: a.coeffs.iter().map(|x| x * n).collect(),
        }
    }

    pub fn mul(&self, a: &Cyclo, b: &Cyclo) -> Cyclo {
        let m = self.order;
        let mut out = vec![0i64; m];
        for (i, x) in a.coeffs.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if *y != 0 {
                    out[(i + j) % m] += x * y;
                }
            }
        }
        Cyclo { coeffs: out }
    }

    /// Complex conjugation `zeta -> zeta^{-1}`.
    pub fn conj(&self, a: &Cyclo) -> Cyclo {
        let m = self.order;
        let mut out = vec![0i64; m];
        for (i, x) in a.coeffs.iter().enumerate() {
            out[(m - i) % m] = *x;
        }
        Cyclo { coeffs: out }
    }

    /// Canonical representative: remainder modulo `Phi_M`.
    pub fn reduce(&self, a: &Cyclo) -> Vec<i64> {
        let deg = self.phi.len() - 1;
        let mut r = a.coeffs.clone();
        for i in (deg..r.len()).rev() {
            let c = r[i];
            if c != 0 {
                for (j, p) in self.phi.iter().enumerate() {
                    r[i - deg + j] -= c * p;
                }
            }
        }
        r.truncate(deg);
        r
    }

    pub fn is_zero(&self, a: &Cyclo) -> bool {
        self.reduce(a).iter().all(|&c| c == 0)
    }

    pub fn eq(&self, a: &Cyclo, b: &Cyclo) -> bool {
        self.is_zero(&self.sub(a, b))
    }

    /// Rational enclosure `[lo, hi]` of the real part of `a` under the
    /// embedding `zeta -> exp(2 pi i / M)`.
    pub fn real_part_enclosure(&self, a: &Cyclo) -> (Frac, Frac) {
        let mut mid = Frac::zero();
        let mut weight = 0i64;
        for (j, c) in a.coeffs.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            mid += int(*c) * cos_turn_approx(&frac(j as i64, self.order as i64));
            weight += c.abs();
        }
        let err = frac(weight, 1) * cos_error_bound();
        (&mid - &err, &mid + &err)
    }

    /// Sign of the real part, if the enclosure excludes zero.
    pub fn real_sign(&self, a: &Cyclo) -> Option<Ordering> {
        let (lo, hi) = self.real_part_enclosure(a);
        if lo.is_positive() {
            Some(Ordering::Greater)
        } else if hi.is_negative() {
            Some(Ordering::Less)
        } else {
            None
        }
    }
}

impl Cyclo {
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Whether the element is a single root of unity times an integer.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.iter().filter(|c| **c != 0).count() <= 1
    }
}

fn pi_approx() -> Frac {
    // |pi - 355/113| < 3e-7
    frac(355, 113)
}

/// Bound on `|cos_turn_approx(t) - cos(2 pi t)|` for every `t`.
fn cos_error_bound() -> Frac {
    // angle error <= 2 pi_err = 6e-7 plus Taylor remainder < 1e-15
    frac(1, 1_000_000)
}

/// Approximates `cos(2 pi t)` by folding to `[0, pi/2]` and summing the
/// Taylor series through degree 22.
fn cos_turn_approx(t: &Frac) -> Frac {
    let mut t = t - t.floor();
    if t > frac(1, 2) {
        t = int(1) - t;
    }
    let mut sign = int(1);
    if t > frac(1, 4) {
        t = frac(1, 2) - t;
        sign = int(-1);
    }
    let x = int(2) * pi_approx() * t;
    let x2 = &x * &x;
    let mut term = int(1);
    let mut sum = int(1);
    for k in 1..=11i64 {
        term = -term * &x2 / int((2 * k - 1) * (2 * k));
        sum += &term;
    }
    sign * sum
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(120).len() - 1, 32);
    }

    #[test]
    fn roots_of_unity_relations() {
        let r = CyclotomicRing::new(8);
        // i^2 = -1
        let i = r.root(2);
        assert!(r.eq(&r.mul(&i, &i), &r.from_int(-1)));
        // sum of all 8th roots is zero
        let mut s = r.zero();
        for k in 0..8 {
            s = r.add(&s, &r.root(k));
        }
        assert!(r.is_zero(&s));
        // zeta_8 + zeta_8^{-1} squared is 2
        let sq2 = r.add(&r.root(1), &r.root(-1));
        assert!(r.eq(&r.mul(&sq2, &sq2), &r.from_int(2)));
        assert_eq!(r.real_sign(&sq2), Some(Ordering::Greater));
        assert_eq!(r.real_sign(&r.scale(&sq2, -1)), Some(Ordering::Less));
    }

    #[test]
    fn e_of_rational() {
        let r = CyclotomicRing::new(56);
        assert_eq!(r.e(&frac(-1, 7)), r.root(48));
        assert_eq!(r.e(&frac(3, 8)), r.root(21));
    }

    #[test]
    fn cos_approximation_is_tight() {
        let vals = [
            (0, 1, 1, 1),
            (1, 4, 0, 1),
            (1, 2, -1, 1),
            (1, 6, 1, 2),
            (1, 3, -1, 2),
        ];
        for (n, d, cn, cd) in vals {
            let diff = cos_turn_approx(&frac(n, d)) - frac(cn, cd);
            assert!(diff.abs() < cos_error_bound(), "cos(2 pi {n}/{d})");
        }
    }
}
