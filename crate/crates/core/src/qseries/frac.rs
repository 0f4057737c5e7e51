//! Exact rationals and the small amount of arithmetic glue the rest of the
//! crate needs on top of [`num_rational::BigRational`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational number, always in lowest terms with positive denominator.
pub type Frac = BigRational;

/// Builds `num/den`. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Frac {
    Frac::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Frac {
    Frac::from_integer(BigInt::from(n))
}

/// Parses `p`, `-p`, `p/q` (whitespace is not allowed inside).
pub fn parse_frac(s: &str) -> Option<Frac> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.parse().ok()?;
            let q: BigInt = q.parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Frac::new(p, q))
        }
        None => Some(Frac::from_integer(s.parse().ok()?)),
    }
}

/// Renders `p/q`, or `p` when the denominator is one.
pub fn render(x: &Frac) -> String {
    x.to_string()
}

/// Reduces into `[0, 1)`.
pub fn mod_one(x: &Frac) -> Frac {
    x - x.floor()
}

/// Denominator as `u64`; the exponent lattices used here stay tiny.
pub fn denom_u64(x: &Frac) -> u64 {
    x.denom().to_u64().expect("denominator does not fit in u64")
}

/// Numerator of `x * n` as `i64`, assuming `x * n` is integral.
pub fn scaled_i64(x: &Frac, n: u64) -> i64 {
    let y = x * Frac::from_integer(BigInt::from(n));
    debug_assert!(y.is_integer());
    y.to_integer()
        .to_i64()
        .expect("exponent does not fit in i64")
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Smallest integer `s >= 0` with `s * s >= x` for rational `x >= 0`.
pub fn isqrt_ceil(x: &Frac) -> u64 {
    if !x.is_positive() {
        return 0;
    }
    let c = x.ceil().to_integer();
    let mut s = c.sqrt();
    while Frac::from_integer(&s * &s) < *x {
        s += BigInt::one();
    }
    s.to_u64().expect("bound does not fit in u64")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        assert_eq!(parse_frac("-6/4"), Some(frac(-3, 2)));
        assert_eq!(parse_frac("7"), Some(int(7)));
        assert_eq!(parse_frac("1/0"), None);
        assert_eq!(parse_frac("x"), None);
        assert_eq!(render(&frac(23, 6)), "23/6");
        assert_eq!(render(&frac(-8, 4)), "-2");
    }

    #[test]
    fn reduction_mod_one() {
        assert_eq!(mod_one(&frac(-2, 15)), frac(13, 15));
        assert_eq!(mod_one(&int(3)), int(0));
    }

    #[test]
    fn ceil_sqrt() {
        assert_eq!(isqrt_ceil(&int(0)), 0);
        assert_eq!(isqrt_ceil(&int(9)), 3);
        assert_eq!(isqrt_ceil(&frac(91, 10)), 4);
        assert_eq!(isqrt_ceil(&frac(1, 4)), 1);
    }
}
