//! Floating point abstraction shared by every numeric routine in the crate.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real scalar the numeric modules are written against: `f32` or `f64`.
///
/// Everything that reports a bound, a norm or an inner product is generic over
/// this trait. The acceptance tolerances (1e-9 and below) only make sense for
/// `f64`, which is what the CLI uses.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Sum + Debug + Display + Send + Sync + 'static
{
    /// Converts an `f64` literal. Panics only if the target cannot represent
    /// finite values at all, which never happens for `f32`/`f64`.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("scalar cannot represent f64 literal")
    }

    fn from_count(x: usize) -> Self {
        Self::from_usize(x).expect("scalar cannot represent count")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Absolute slack used on every inequality check.
    fn check_tolerance() -> Self {
        Self::lit(1e-9)
    }
}

impl Scalar for f32 {
    fn check_tolerance() -> Self {
        // 1e-9 is below f32 resolution for O(1) quantities.
        1e-5
    }
}

impl Scalar for f64 {}

/// `d^tau` for a nonnegative count, with the exact shortcuts for the two
/// exponents the construction uses most.
pub(crate) fn pow_tau<T: Scalar>(d: T, tau: T) -> T {
    if tau == T::zero() {
        T::one()
    } else if tau == T::lit(0.5) {
        d.sqrt()
    } else if tau == T::one() {
        d
    } else {
        d.powf(tau)
    }
}
