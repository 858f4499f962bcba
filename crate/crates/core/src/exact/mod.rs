//! Exact rational and polynomial arithmetic.
//!
//! Everything in this module is integer/rational arithmetic only; no floating
//! point enters. Provided items:
//!
//! * [`Rational`] — arbitrary-precision rationals (denominator positive,
//!   gcd-reduced; both guaranteed by the backing representation).
//! * [`DimPoly`] — dense univariate polynomials in the dimension symbol `n`.
//! * [`MultiPoly`] — sparse multivariate polynomials over the symbol set
//!   `{n, β, c, τ², ρ²}`.
//! * [`RatFun`] — reduced rational functions in `n`.
//! * [`solve_linear_exact`] — fraction-free elimination over `RatFun`.
//! * [`interpolate`] — exact polynomial reconstruction from point values.

mod dim_poly;
mod linear;
mod multi_poly;
mod rat_fun;

pub use dim_poly::DimPoly;
pub use linear::{interpolate, solve_linear_exact};
pub use multi_poly::{Expts, MultiPoly, Sym, NUM_SYMS};
pub use rat_fun::RatFun;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Arbitrary-precision rational number: normalized sign, reduced to lowest
/// terms.
pub type Rational = BigRational;

/// Rational from an integer numerator and denominator.
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rat_int(value: i64) -> Rational {
    Rational::from(BigInt::from(value))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    /// No full-column-rank square subsystem exists.
    #[error("singular system: no full-column-rank square subsystem")]
    SingularSystem,
    /// Interpolation points are inconsistent with the stated degree bound.
    #[error("interpolation points exceed degree bound {bound}")]
    DegreeExceeded { bound: usize },
}
