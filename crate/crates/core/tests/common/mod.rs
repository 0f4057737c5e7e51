//! Independent oracles and generators shared by the integration tests. Only
//! `Frac` and the constructors are borrowed from the crate; counts and
//! expansions are recomputed here by brute force.
#![allow(dead_code)]

use meroforms::qseries::{frac, int, Frac, FracSeries};
use num_traits::Zero;
use proptest::prelude::*;

/// `Q(x) = x^T G x / 2` for rational coordinates.
pub fn norm2(gram: &[[i64; 2]; 2], x: &[Frac; 2]) -> Frac {
    let g = |i: usize, j: usize| int(gram[i][j]);
    (&x[0] * &x[0] * g(0, 0) + int(2) * &x[0] * &x[1] * g(0, 1) + &x[1] * &x[1] * g(1, 1)) / int(2)
}

/// Every `gamma + (i, j)` with `|i|, |j| <= radius` and `Q <= max_norm`,
/// sorted like the crate's enumeration.
pub fn naive_vectors(
    gram: &[[i64; 2]; 2],
    gamma: &[Frac; 2],
    max_norm: &Frac,
    radius: i64,
) -> Vec<(Vec<Frac>, Frac)> {
    let mut out = Vec::new();
    for i in -radius..=radius {
        for j in -radius..=radius {
            let x = [&gamma[0] + int(i), &gamma[1] + int(j)];
            let n = norm2(gram, &x);
            if n <= *max_norm {
                out.push((x.to_vec(), n));
            }
        }
    }
    out.sort_by(|a, b| (&a.1, &a.0).cmp(&(&b.1, &b.0)));
    out
}

/// Gram matrix of `O_K` on `1, omega`.
pub fn ok_gram(d: i64) -> [[i64; 2]; 2] {
    if d % 4 == 3 {
        [[2, 1], [1, (1 + d) / 2]]
    } else {
        [[2, 0], [0, d / 2]]
    }
}

/// Number of vectors of norm exactly `n` in `O_K + gamma`.
pub fn ok_count(d: i64, gamma: &[Frac; 2], n: &Frac) -> usize {
    naive_vectors(&ok_gram(d), gamma, n, 40)
        .into_iter()
        .filter(|(_, m)| m == n)
        .count()
}

/// Integer power series `prod_{k>=1} (1 - q^{m k})^r` up to `q^len`.
pub fn naive_eta_unit(m: usize, r: i32, len: usize) -> Vec<i64> {
    let mut v = vec![0i64; len];
    v[0] = 1;
    for k in 1.. {
        let step = m * k;
        if step >= len {
            break;
        }
        for _ in 0..r.unsigned_abs() {
            if r > 0 {
                for i in (step..len).rev() {
                    v[i] -= v[i - step];
                }
            } else {
                for i in step..len {
                    v[i] += v[i - step];
                }
            }
        }
    }
    v
}

pub fn naive_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len().min(b.len())];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            if i + j < out.len() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Naive `prod eta(m tau)^r` as `(leading exponent, integer coefficients)`.
pub fn naive_eta_quotient(factors: &[(usize, i32)], len: usize) -> (Frac, Vec<i64>) {
    let lead = factors
        .iter()
        .map(|&(m, r)| frac(m as i64 * r as i64, 24))
        .fold(Frac::zero(), |a, b| a + b);
    let mut v = vec![0i64; len];
    v[0] = 1;
    for &(m, r) in factors {
        v = naive_mul(&v, &naive_eta_unit(m, r, len));
    }
    (lead, v)
}

/// Random series with exponents in `(1/den) Z`, known below `prec`.
pub fn series_strategy() -> impl Strategy<Value = FracSeries> {
    (
        1i64..=3,
        prop::collection::vec((-4i64..12, -6i64..=6, 1i64..=3), 0..6),
    )
        .prop_map(|(den, raw)| {
            let prec = int(4);
            let terms = raw
                .into_iter()
                .map(|(k, c, cd)| (frac(k, den), frac(c, cd)))
                .filter(|(e, _)| *e < prec);
            FracSeries::from_terms(terms, &prec).expect("exponents below prec")
        })
}

/// Scalar `Gamma_0(7)` series supported on the minus space: exponents
/// `n` with `n = 0` or `-n` a square mod 7.
pub fn minus_space_series(p: i64) -> impl Strategy<Value = FracSeries> {
    let allowed: Vec<i64> = (-3 * p..3 * p)
        .filter(|n| {
            let r = (-n).rem_euclid(p);
            r == 0 || (1..p).any(|k| (k * k) % p == r)
        })
        .collect();
    prop::collection::vec((prop::sample::select(allowed), -9i64..=9), 0..8).prop_map(move |raw| {
        FracSeries::from_terms(raw.into_iter().map(|(n, c)| (int(n), int(c))), &int(3 * p))
            .expect("below prec")
    })
}

/// Positive definite even rank-2 Gram matrices `[[2a, b], [b, 2c]]`.
pub fn gram2_strategy() -> impl Strategy<Value = [[i64; 2]; 2]> {
    (1i64..=5, -4i64..=4, 1i64..=5)
        .prop_filter("positive definite", |(a, b, c)| 4 * a * c - b * b > 0)
        .prop_map(|(a, b, c)| [[2 * a, b], [b, 2 * c]])
}
