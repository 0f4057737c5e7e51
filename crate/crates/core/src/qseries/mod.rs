//! Exact sparse q-expansions with fractional exponents.

mod frac;
mod series;
mod special;
mod text;

pub use frac::{denom_u64, frac, int, isqrt_ceil, lcm_u64, mod_one, parse_frac, render, Frac};
pub use series::FracSeries;
pub use special::{eisenstein2, eta_quotient, serre_derivative, unary_theta};
pub use text::{parse_series, write_series};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("term at exponent {exponent} lies at or beyond precision {prec}")]
    BeyondPrecision { exponent: Frac, prec: Frac },
    #[error("constant term unknown: precision {0} is not positive")]
    ConstantTermUnknown(Frac),
    #[error("eta quotient needs at least one factor")]
    EmptyEtaQuotient,
    #[error("eta factor multiplier must be positive")]
    InvalidEtaFactor,
    #[error("precision {prec} does not exceed the leading exponent {leading}")]
    EmptyWindow { leading: Frac, prec: Frac },
    #[error("precision {got} is below the required {needed}")]
    PrecisionTooSmall { needed: Frac, got: Frac },
    #[error("theta series needs a positive norm, got {0}")]
    NonPositiveNorm(Frac),
    #[error("series has no known nonzero term to invert")]
    NotInvertible,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
