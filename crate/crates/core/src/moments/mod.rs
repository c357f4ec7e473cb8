//! Exact moments of `S_n(q)`, their polynomial fits in `n`, and scaled limits.

mod fit;
mod limits;
mod rational_poly;
mod stats;
mod surd;

pub use fit::{fit_polynomial, interpolate, Fit, HeldOut};
pub use limits::{cv_limit, moment_polynomial, scaled_limit};
pub use rational_poly::RationalPoly;
pub use stats::{
    central_moment, distribution, mean, parse_rational, rational_text, Distribution, MomentReport,
};
pub use surd::{is_square_free, Surd};

/// Exact rational numbers.
pub type Rational = num_rational::BigRational;
